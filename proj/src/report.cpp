#include "vnw/report.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace vnw::cli {

bool Report::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; });
}

std::string to_tsv(const Report& r) {
  std::string out = "# " + r.command + "\n";
  out += "check\tinputs\texpected\tcomputed\tpass\n";
  for (const auto& row : r.rows) {
    out += row.check + "\t" + row.inputs + "\t" + row.expected + "\t" + row.computed + "\t" +
           (row.pass ? "yes" : "no") + "\n";
  }
  out += "# result: " + std::string(r.all_pass() ? "pass" : "FAIL") + " (" +
         std::to_string(r.rows.size()) + " checks)\n";
  return out;
}

std::string to_json(const Report& r) {
  nlohmann::json j;
  j["command"] = r.command;
  auto rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json jr;
    jr["check"] = row.check;
    jr["inputs"] = row.inputs;
    jr["expected"] = row.expected;
    jr["computed"] = row.computed;
    jr["pass"] = row.pass;
    rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(rows);
  j["pass"] = r.all_pass();
  return j.dump(2) + "\n";
}

}  // namespace vnw::cli
