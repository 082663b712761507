#pragma once

#include <string>
#include <utility>
#include <vector>

namespace radpoly {

/// Tabular experiment output: a provenance block (config echo), a header and
/// string-formatted data rows. Serialized as CSV with '#'-prefixed provenance
/// lines so that every artifact carries its configuration.
struct ExperimentReport {
  std::vector<std::pair<std::string, std::string>> provenance;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_provenance(std::string key, std::string value);
  void add_row(std::vector<std::string> row);

  void write(std::ostream& os) const;
  void write_file(const std::string& path) const;
};

/// Scientific notation with 6 significant digits, the report number format.
std::string csv_real(double v);
std::string csv_int(long long v);

}  // namespace radpoly
