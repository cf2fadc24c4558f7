#pragma once

// Modality-tagged feature vectors and feature-level fusion.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dyad/common.hpp"

namespace dyad {

enum class Modality { physio, movement, acoustic, linguistic, fused };

// Canonical fusion order.
constexpr Modality kModalityOrder[4] = {Modality::physio, Modality::movement,
                                        Modality::acoustic, Modality::linguistic};

inline std::string to_string(Modality m) {
  switch (m) {
    case Modality::physio: return "physio";
    case Modality::movement: return "movement";
    case Modality::acoustic: return "acoustic";
    case Modality::linguistic: return "linguistic";
    case Modality::fused: return "fused";
  }
  return "?";
}

inline Modality modality_from_string(const std::string& s) {
  if (s == "physio") return Modality::physio;
  if (s == "movement") return Modality::movement;
  if (s == "acoustic") return Modality::acoustic;
  if (s == "linguistic") return Modality::linguistic;
  if (s == "fused") return Modality::fused;
  throw std::invalid_argument("unknown modality '" + s + "'");
}

inline int modality_rank(Modality m) {
  switch (m) {
    case Modality::physio: return 0;
    case Modality::movement: return 1;
    case Modality::acoustic: return 2;
    case Modality::linguistic: return 3;
    case Modality::fused: return 4;
  }
  return 5;
}

struct FeatureVector {
  Modality modality = Modality::fused;
  std::vector<double> values;
  // For fused vectors: (source modality, length) in concatenation order.
  std::vector<std::pair<Modality, std::size_t>> spans;

  std::size_t dim() const { return values.size(); }
  bool finite() const { return all_finite(values); }
};

// Feature-level fusion: concatenation in canonical modality order. Single
// input passes through unchanged. Fusion is single-level; fused inputs and
// duplicate modalities are rejected.
inline FeatureVector fuse(std::vector<FeatureVector> parts) {
  if (parts.empty()) throw std::invalid_argument("fuse: no feature vectors");
  for (const auto& p : parts) {
    if (p.modality == Modality::fused) {
      throw std::invalid_argument("fuse: fused input (fusion is single-level)");
    }
  }
  std::stable_sort(parts.begin(), parts.end(),
                   [](const FeatureVector& a, const FeatureVector& b) {
                     return modality_rank(a.modality) < modality_rank(b.modality);
                   });
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i].modality == parts[i - 1].modality) {
      throw std::invalid_argument("fuse: duplicate modality " +
                                  to_string(parts[i].modality));
    }
  }
  if (parts.size() == 1) return parts[0];
  FeatureVector out;
  out.modality = Modality::fused;
  for (const auto& p : parts) {
    out.spans.emplace_back(p.modality, p.values.size());
    out.values.insert(out.values.end(), p.values.begin(), p.values.end());
  }
  return out;
}

}  // namespace dyad
