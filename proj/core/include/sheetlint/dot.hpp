#pragma once

#include <string>
#include <vector>

#include "sheetlint/detectors.hpp"
#include "sheetlint/program.hpp"

namespace sheetlint {

enum class GraphResolution {
  Cell,  // one node per cell, physical areas as clusters
  Area,  // one node per area plus ungrouped cells, edges lifted between them
};

// Fixed presentation palette. Logical-area fills cycle through
// kLogicalAreaFills; cells carrying a diagnostic get kDiagnosticColor.
inline constexpr const char* kLogicalAreaFills[] = {
    "#cce5ff", "#d4edda", "#fff3cd", "#e2d9f3", "#d1ecf1", "#fde2c8", "#f8d7da", "#e9ecef"};
inline constexpr const char* kDiagnosticColor = "#d62728";
inline constexpr const char* kClusterColor = "#1f77b4";

// Graphviz DOT text for the program's data-flow graph, annotated with areas
// and the given diagnostics. Output is byte-stable for equal inputs.
std::string render_dot(const SpreadsheetProgram& p, const std::vector<Diagnostic>& diags,
                       GraphResolution resolution = GraphResolution::Cell);

}  // namespace sheetlint
