#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace surfsing {

struct Table {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
};

using KeyValues = std::vector<std::pair<std::string, std::string>>;

/// One titled block of a report. Sections with `passed` set are checks and
/// print PASS/FAIL next to the title; `diffs` list each mismatch.
struct Section {
  std::string title;
  KeyValues fields;
  std::optional<Table> table;
  std::optional<bool> passed;
  std::vector<std::string> diffs;
  std::vector<std::string> notes;
  /// Printed as-is after the other content (e.g. an emitted graph file).
  std::string verbatim;
};

enum ExitStatus : int { kExitOk = 0, kExitCheckFailed = 1, kExitInputError = 2 };

struct Report {
  std::vector<Section> sections;
  int exit_status = kExitOk;

  Section& add(std::string title);
  /// Appends a check section and drops exit_status to 1 on failure.
  Section& add_check(std::string title, bool passed);

  std::string render_text() const;
  nlohmann::ordered_json to_json() const;
};

}  // namespace surfsing
