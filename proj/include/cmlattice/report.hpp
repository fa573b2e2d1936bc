#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace cmlattice {

/// One verdict together with the criterion that produced it.
struct ReportLine {
  std::string key;
  nlohmann::json value;
  std::string anchor;
  bool operator==(const ReportLine&) const = default;
};

struct ReportTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;
  bool operator==(const ReportTable&) const = default;
};

struct ReportDocument {
  int schema = 1;
  std::string command;
  std::string field;
  std::vector<ReportLine> verdicts;
  std::vector<ReportTable> tables;
  std::vector<std::string> notes;

  void add(std::string key, nlohmann::json value, std::string anchor);
  const ReportLine* find(std::string_view key) const;
  bool operator==(const ReportDocument&) const = default;
};

nlohmann::json report_to_json(const ReportDocument& doc);
/// Errors: ParseError.
ReportDocument report_from_json(const nlohmann::json& j);
/// Aligned plain-text rendering.
std::string report_to_text(const ReportDocument& doc);

}  // namespace cmlattice
