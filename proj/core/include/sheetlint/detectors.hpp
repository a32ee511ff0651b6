#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sheetlint/areas.hpp"
#include "sheetlint/evaluator.hpp"
#include "sheetlint/program.hpp"

namespace sheetlint {

// Declaration order is the report sort order and matches the code strings'
// lexical order.
enum class DiagnosticCode {
  D1_BLANK_REF,
  D2_WRONG_TYPE_IN_RANGE,
  D3_INCORRECT_RANGE,
  D4_AREA_MIXUP,
  D5_CONSTANT_OVERWRITE,
  D6_COPY_MISREFERENCE,
  G_CYCLE,
  G_DIV_ZERO,
};

std::string_view to_string(DiagnosticCode code);

enum class Severity { Warning, Error };

std::string_view to_string(Severity s);

// The area a diagnostic is about, when there is one.
struct RelatedArea {
  enum class Kind { Physical, Logical };
  Kind kind = Kind::Physical;
  RangeRef rect;                        // physical rect, or logical hull
  std::optional<CellAddress> consumer;  // physical only
  std::optional<Function> function;     // physical only

  friend bool operator==(const RelatedArea&, const RelatedArea&) = default;
};

RelatedArea related(const PhysicalArea& a);
RelatedArea related(const LogicalArea& a);

struct Diagnostic {
  DiagnosticCode code;
  Severity severity = Severity::Warning;
  std::vector<CellAddress> subjects;  // flagged cells, never empty
  std::optional<RelatedArea> area;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct DetectorOptions {
  // Minimum number of terms in a +-chain before D4 suggests a range.
  int chain_min_terms = 3;
  // Minimum logical-area size considered by D5.
  int overwrite_min_members = 3;
  // D5 fires only when the non-member cells inside the hull are fewer than
  // the members.
  bool overwrite_sporadic_only = true;
  // Minimum structural-group size considered by D6.
  int misreference_min_members = 3;
};

std::vector<Diagnostic> detect_blank_ref(const SpreadsheetProgram& p);
std::vector<Diagnostic> detect_wrong_type_in_range(const SpreadsheetProgram& p);
std::vector<Diagnostic> detect_incorrect_range(const SpreadsheetProgram& p);
std::vector<Diagnostic> detect_area_mixup(const SpreadsheetProgram& p,
                                          const DetectorOptions& opts = {});
std::vector<Diagnostic> detect_constant_overwrite(const SpreadsheetProgram& p,
                                                  const DetectorOptions& opts = {});
std::vector<Diagnostic> detect_copy_misreference(const SpreadsheetProgram& p,
                                                 const DetectorOptions& opts = {});

// D1..D6, plus G_CYCLE and G_DIV_ZERO lifted from eval's runtime diagnostics
// when supplied. Sorted by (code, subjects, message).
std::vector<Diagnostic> detect_all(const SpreadsheetProgram& p,
                                   const EvalResult* eval = nullptr,
                                   const DetectorOptions& opts = {});

void sort_diagnostics(std::vector<Diagnostic>& diags);

}  // namespace sheetlint
