#pragma once

#include <string>
#include <vector>

namespace vnw::cli {

struct ReportRow {
  std::string check;
  std::string inputs;
  std::string expected;
  std::string computed;
  bool pass = false;
};

/// Batch result: command echo plus one row per check. Output is
/// byte-identical across runs with the same inputs and flags.
struct Report {
  std::string command;
  std::vector<ReportRow> rows;

  bool all_pass() const;
  int exit_status() const { return all_pass() ? 0 : 1; }
};

std::string to_tsv(const Report& r);
std::string to_json(const Report& r);

}  // namespace vnw::cli
