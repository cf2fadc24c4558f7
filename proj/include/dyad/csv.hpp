#pragma once

// Minimal CSV reader/writer. All corpus manifests are UTF-8 CSV with a
// mandatory header row. Fields containing commas, quotes or newlines are
// quoted per RFC 4180.

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dyad/common.hpp"

namespace dyad {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    throw std::runtime_error("csv: missing column '" + name + "'");
  }

  bool has_column(const std::string& name) const {
    for (const auto& h : header) {
      if (h == name) return true;
    }
    return false;
  }
};

namespace detail {

inline bool csv_needs_quoting(const std::string& f) {
  return f.find_first_of(",\"\n\r") != std::string::npos;
}

inline std::string csv_escape(const std::string& f) {
  if (!csv_needs_quoting(f)) return f;
  std::string out = "\"";
  for (char c : f) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// Splits one logical CSV record; `in` supplies continuation lines when a
// quoted field spans newlines.
inline std::vector<std::string> csv_split(std::string line, std::istream& in) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  std::size_t i = 0;
  while (true) {
    if (i == line.size()) {
      if (quoted) {
        std::string next;
        if (!std::getline(in, next)) break;
        line += '\n';
        line += next;
        continue;
      }
      break;
    }
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c == '\r') {
      // tolerate CRLF
    } else {
      cur += c;
    }
    ++i;
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace detail

inline CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("csv: cannot open " + path);
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("csv: empty file (header required): " + path);
  }
  table.header = detail::csv_split(line, in);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto row = detail::csv_split(line, in);
    if (row.size() != table.header.size()) {
      throw std::runtime_error("csv: row width mismatch in " + path);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

inline void write_csv(const std::string& path, const CsvTable& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("csv: cannot write " + path);
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << detail::csv_escape(row[i]);
    }
    out << '\n';
  };
  emit(table.header);
  for (const auto& r : table.rows) emit(r);
}

}  // namespace dyad
