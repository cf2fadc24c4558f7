#pragma once

// Shared primitives: time series containers, deterministic RNG streams,
// content hashing, and small numeric helpers used across the library.

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dyad {

// ---------------------------------------------------------------------------
// Series containers

// Scalar time series. Timestamps are seconds relative to the session start.
struct TimeSeries {
  std::vector<double> t;
  std::vector<double> v;

  std::size_t size() const { return t.size(); }
  bool empty() const { return t.empty(); }
  void push(double ts, double val) {
    t.push_back(ts);
    v.push_back(val);
  }
};

// Three-axis time series (accelerometer, gyroscope).
struct TriSeries {
  std::vector<double> t;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> z;

  std::size_t size() const { return t.size(); }
  bool empty() const { return t.empty(); }
  void push(double ts, double xv, double yv, double zv) {
    t.push_back(ts);
    x.push_back(xv);
    y.push_back(yv);
    z.push_back(zv);
  }
};

inline bool all_finite(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(),
                     [](double x) { return std::isfinite(x); });
}

inline double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

// ---------------------------------------------------------------------------
// Hashing

// FNV-1a 64-bit. Used for content manifests and text feature hashing.
constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

inline std::uint64_t fnv1a64(const void* data, std::size_t n,
                             std::uint64_t h = kFnvOffset) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= kFnvPrime;
  }
  return h;
}

inline std::uint64_t fnv1a64(std::string_view s,
                             std::uint64_t h = kFnvOffset) {
  return fnv1a64(s.data(), s.size(), h);
}

// SplitMix64 finalizer; decorrelates derived seeds.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Stable per-purpose RNG stream seed: hash of (base seed, tag).
inline std::uint64_t derive_seed(std::uint64_t base, std::string_view tag) {
  std::uint64_t h = fnv1a64(tag);
  return mix64(base ^ mix64(h));
}

inline std::uint64_t derive_seed(std::uint64_t base, std::string_view tag,
                                 std::uint64_t n) {
  return mix64(derive_seed(base, tag) ^ mix64(n * 0x9e3779b97f4a7c15ull + 1));
}

// ---------------------------------------------------------------------------
// Deterministic RNG
//
// xoshiro-free, dependency-free generator built on SplitMix64 steps. All
// distributions are implemented explicitly so that a given seed yields the
// same stream on any compiler/platform; std::* distributions make no such
// promise.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x106689d45497fdb5ull) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Box-Muller without caching: two u64 draws per variate, stateless apart
  // from the stream position.
  double normal(double mean = 0.0, double sd = 1.0) {
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    return mean + sd * r * std::cos(6.283185307179586476925286766559 * u2);
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Uniform integer in [0, n).
  std::size_t index(std::size_t n) {
    if (n == 0) throw std::invalid_argument("Rng::index: n == 0");
    return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[index(i)]);
    }
  }

 private:
  std::uint64_t state_;
};

// ---------------------------------------------------------------------------
// Number formatting (shortest round-trip; keeps generated files byte-stable)

inline std::string format_double(double x) {
  std::array<char, 32> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

inline double parse_double(std::string_view s) {
  double out = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw std::invalid_argument("parse_double: bad number '" + std::string(s) +
                                "'");
  }
  return out;
}

inline long parse_long(std::string_view s) {
  long out = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw std::invalid_argument("parse_long: bad integer '" + std::string(s) +
                                "'");
  }
  return out;
}

// Thrown by config parsing; carries the offending line for CLI reporting.
struct config_error : std::runtime_error {
  config_error(const std::string& msg, int line_no = 0)
      : std::runtime_error(line_no > 0 ? msg + " (line " +
                                             std::to_string(line_no) + ")"
                                       : msg),
        line(line_no) {}
  int line;
};

}  // namespace dyad
