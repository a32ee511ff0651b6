#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sheetlint/formula.hpp"
#include "sheetlint/program.hpp"

namespace sheetlint {

// A rectangle consumed by one grouping-function call.
struct PhysicalArea {
  RangeRef rect;
  CellAddress consumer;
  Function function = Function::Sum;
  // Dominant kind among covered non-empty cells; Empty when all are empty.
  // Ties resolve Constant > Input > Formula > Label.
  CellKind majority_type = CellKind::Empty;

  friend bool operator==(const PhysicalArea&, const PhysicalArea&) = default;
};

// Formula cells whose normalized formulas are identical.
struct LogicalArea {
  std::vector<CellAddress> members;  // row-major, size >= 2
  NormalizedFormula key;
  RangeRef hull;

  bool single_line() const { return hull.width() == 1 || hull.height() == 1; }
  friend bool operator==(const LogicalArea&, const LogicalArea&) = default;
};

// Formula cells sharing a skeleton; a superset of logical areas.
struct StructuralGroup {
  std::vector<CellAddress> members;  // row-major, size >= 2
  Skeleton key;

  friend bool operator==(const StructuralGroup&, const StructuralGroup&) = default;
};

// One area per range argument, ordered by consumer (row-major) and then by
// position of the range in the formula.
std::vector<PhysicalArea> infer_physical_areas(const SpreadsheetProgram& p);

// Ordered by first member.
std::vector<LogicalArea> infer_logical_areas(const SpreadsheetProgram& p);
std::vector<StructuralGroup> structural_groups(const SpreadsheetProgram& p);

// Smallest rectangle covering all cells; cells must be non-empty.
RangeRef bounding_rect(const std::vector<CellAddress>& cells);

}  // namespace sheetlint
