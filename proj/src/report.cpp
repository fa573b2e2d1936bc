#include "cmlattice/report.hpp"

#include <algorithm>
#include <sstream>

#include "cmlattice/error.hpp"

namespace cmlattice {

using nlohmann::json;

void ReportDocument::add(std::string key, json value, std::string anchor) {
  verdicts.push_back({std::move(key), std::move(value), std::move(anchor)});
}

const ReportLine* ReportDocument::find(std::string_view key) const {
  for (const auto& line : verdicts)
    if (line.key == key) return &line;
  return nullptr;
}

json report_to_json(const ReportDocument& doc) {
  json j;
  j["schema"] = doc.schema;
  j["command"] = doc.command;
  j["field"] = doc.field;
  j["verdicts"] = json::array();
  for (const auto& v : doc.verdicts)
    j["verdicts"].push_back({{"key", v.key}, {"value", v.value}, {"anchor", v.anchor}});
  j["tables"] = json::array();
  for (const auto& t : doc.tables)
    j["tables"].push_back({{"name", t.name}, {"columns", t.columns}, {"rows", t.rows}});
  j["notes"] = doc.notes;
  return j;
}

ReportDocument report_from_json(const json& j) {
  try {
    ReportDocument doc;
    doc.schema = j.at("schema").get<int>();
    doc.command = j.at("command").get<std::string>();
    doc.field = j.at("field").get<std::string>();
    for (const auto& v : j.at("verdicts"))
      doc.verdicts.push_back({v.at("key").get<std::string>(), v.at("value"), v.at("anchor").get<std::string>()});
    for (const auto& t : j.at("tables")) {
      ReportTable table;
      table.name = t.at("name").get<std::string>();
      table.columns = t.at("columns").get<std::vector<std::string>>();
      for (const auto& row : t.at("rows")) table.rows.push_back(row.get<std::vector<json>>());
      doc.tables.push_back(std::move(table));
    }
    doc.notes = j.at("notes").get<std::vector<std::string>>();
    return doc;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what(), "malformed-report");
  }
}

namespace {

std::string cell(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render(std::ostringstream& out, const std::vector<std::string>& header,
            const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], r[c].size());
  auto line = [&](const std::vector<std::string>& r) {
    std::string text;
    for (std::size_t c = 0; c < header.size(); ++c) {
      const std::string v = c < r.size() ? r[c] : "";
      text += v;
      if (c + 1 < header.size()) text += std::string(width[c] - v.size() + 2, ' ');
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << "  " << text << "\n";
  };
  line(header);
  std::vector<std::string> rule;
  for (auto w : width) rule.push_back(std::string(w, '-'));
  line(rule);
  for (const auto& r : rows) line(r);
}

}  // namespace

std::string report_to_text(const ReportDocument& doc) {
  std::ostringstream out;
  out << "cmlattice " << doc.command << " (field " << doc.field << ", schema " << doc.schema << ")\n";
  if (!doc.verdicts.empty()) {
    out << "\nverdicts\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& v : doc.verdicts) rows.push_back({v.key, cell(v.value), v.anchor});
    render(out, {"key", "value", "anchor"}, rows);
  }
  for (const auto& t : doc.tables) {
    out << "\n" << t.name << "\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : t.rows) {
      std::vector<std::string> cells;
      for (const auto& c : r) cells.push_back(cell(c));
      rows.push_back(std::move(cells));
    }
    render(out, t.columns, rows);
  }
  if (!doc.notes.empty()) {
    out << "\nnotes\n";
    for (const auto& n : doc.notes) out << "  " << n << "\n";
  }
  return out.str();
}

}  // namespace cmlattice
