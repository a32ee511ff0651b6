#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "sheetlint/evaluator.hpp"
#include "sheetlint/interval.hpp"
#include "sheetlint/program.hpp"

namespace sheetlint {

// Permissible input ranges and user-expected intervals (E) per formula cell.
struct IntervalSpec {
  std::map<CellAddress, Interval> input_ranges;
  std::map<CellAddress, Interval> expected;

  friend bool operator==(const IntervalSpec&, const IntervalSpec&) = default;
};

// Reads the .intervals format:
//
//   ; comment
//   input  B4 in [126, 154]
//   expect B12 in [900, 1100]
//
// Keys are checked against the program: inputs must name Input cells and
// expectations Formula cells. Throws LoadError with the line number.
IntervalSpec load_interval_spec(std::string_view text, const SpreadsheetProgram& p);

std::string render_interval_spec(const IntervalSpec& spec);

enum class IntervalFaultKind { DivisorContainsZero, EmptyAggregate, TypeError, Cycle, Propagated };

std::string_view to_string(IntervalFaultKind kind);

struct IntervalFault {
  IntervalFaultKind kind;
  friend bool operator==(const IntervalFault&, const IntervalFault&) = default;
};

// The bounding value B of a cell: an interval or a fault.
using Bound = std::variant<Interval, IntervalFault>;

std::string to_string(const Bound& b);

// Interval image of every formula cell, with inputs drawn from
// spec.input_ranges and unlisted inputs pinned to the instance value.
// Throws CyclicDependency.
std::map<CellAddress, Bound> eval_intervals(const SpreadsheetInstance& instance,
                                            const IntervalSpec& spec);
// Convenience overload: unlisted inputs use their declared defaults.
std::map<CellAddress, Bound> eval_intervals(const SpreadsheetProgram& p,
                                            const IntervalSpec& spec);

enum class Verdict {
  NoSymptom,
  SymptomValueOutside,   // d not in E
  SymptomModelMismatch,  // E not inside B
  SymptomBoth,
  NotJudged,             // no E supplied
};

std::string_view to_string(Verdict v);
bool is_symptom(Verdict v);

enum class VerdictReason { None, ValueFault, BoundFault };

std::string_view to_string(VerdictReason r);

struct Judgement {
  Verdict verdict = Verdict::NotJudged;
  VerdictReason reason = VerdictReason::None;
  friend bool operator==(const Judgement&, const Judgement&) = default;
};

// Three-way comparison of the concrete value d, the expectation E, and the
// bound B, with closed endpoints. A faulted d is SymptomBoth(ValueFault); a
// faulted B fails the E-inside-B check.
Judgement judge(const Value& d, const Interval& expected, const Bound& bound);

struct CellTestRecord {
  CellAddress cell;
  Value d;
  Bound bound;
  std::optional<Interval> expected;
  Judgement judgement;
  // Transitive precedents; symptomatic cells first, then by dependency
  // distance, then row-major. Empty unless the verdict is a symptom.
  std::vector<CellAddress> suspects;
};

struct TestReport {
  std::vector<CellTestRecord> records;  // one per formula cell, row-major

  bool any_symptom() const;
  const CellTestRecord* find(CellAddress cell) const;
};

// Throws CyclicDependency.
TestReport run_interval_test(const SpreadsheetInstance& instance, const IntervalSpec& spec);

}  // namespace sheetlint
