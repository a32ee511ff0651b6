#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sheetlint/areas.hpp"
#include "sheetlint/detectors.hpp"
#include "sheetlint/interval_oracle.hpp"
#include "sheetlint/program.hpp"

namespace sheetlint {

// Bumped whenever the JSON layout changes; schema/report.schema.json in the
// source tree describes the current version.
inline constexpr int kReportSchemaVersion = 1;

std::string_view tool_version();

struct InputDigest {
  std::string path;
  std::string sha256;  // lowercase hex
};

struct Report {
  std::string command;  // check | test | areas
  std::vector<InputDigest> inputs;
  SpreadsheetProgram program;
  std::vector<PhysicalArea> physical_areas;
  std::vector<LogicalArea> logical_areas;
  std::optional<std::vector<Diagnostic>> diagnostics;
  std::optional<TestReport> interval_test;
};

// Canonical JSON: sorted keys, arrays in producer order, trailing newline.
std::string render_json(const Report& report);
std::string render_text(const Report& report);

}  // namespace sheetlint
