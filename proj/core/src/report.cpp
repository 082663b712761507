#include "radpoly/report.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace radpoly {

namespace {

bool needs_quoting(const std::string& s) {
  return s.find_first_of(",\"\n") != std::string::npos;
}

std::string quoted(const std::string& s) {
  if (!needs_quoting(s)) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

void ExperimentReport::add_provenance(std::string key, std::string value) {
  provenance.emplace_back(std::move(key), std::move(value));
}

void ExperimentReport::add_row(std::vector<std::string> row) {
  if (!header.empty() && row.size() != header.size()) {
    throw std::invalid_argument("ExperimentReport: row width differs from header");
  }
  rows.push_back(std::move(row));
}

void ExperimentReport::write(std::ostream& os) const {
  for (const auto& [key, value] : provenance) {
    os << "# " << key << "=" << value << '\n';
  }
  for (std::size_t j = 0; j < header.size(); ++j) {
    os << quoted(header[j]) << (j + 1 < header.size() ? "," : "\n");
  }
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      os << quoted(row[j]) << (j + 1 < row.size() ? "," : "\n");
    }
  }
}

void ExperimentReport::write_file(const std::string& path) const {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("ExperimentReport: cannot open " + path);
  write(os);
}

std::string csv_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.5e", v);
  return buf;
}

std::string csv_int(long long v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%lld", v);
  return buf;
}

}  // namespace radpoly
