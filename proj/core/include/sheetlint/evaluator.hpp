#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sheetlint/address.hpp"
#include "sheetlint/program.hpp"

namespace sheetlint {

enum class FaultKind { DivByZero, TypeError, Cycle, Propagated };

std::string_view to_string(FaultKind kind);

struct Blank {
  friend bool operator==(const Blank&, const Blank&) = default;
};
struct Text {
  std::string text;
  friend bool operator==(const Text&, const Text&) = default;
};
struct Fault {
  FaultKind kind;
  friend bool operator==(const Fault&, const Fault&) = default;
};

// A concrete cell value. Blank only ever comes from reading an empty cell.
class Value {
 public:
  Value() : v_(Blank{}) {}
  Value(double n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Value(Blank b) : v_(b) {}   // NOLINT(google-explicit-constructor)
  Value(Text t) : v_(std::move(t)) {}  // NOLINT(google-explicit-constructor)
  Value(Fault f) : v_(f) {}   // NOLINT(google-explicit-constructor)

  bool is_number() const { return std::holds_alternative<double>(v_); }
  bool is_blank() const { return std::holds_alternative<Blank>(v_); }
  bool is_text() const { return std::holds_alternative<Text>(v_); }
  bool is_fault() const { return std::holds_alternative<Fault>(v_); }

  double number() const { return std::get<double>(v_); }
  const std::string& text() const { return std::get<Text>(v_).text; }
  FaultKind fault() const { return std::get<Fault>(v_).kind; }

  // Bitwise comparison for numbers so -0.0 and 0.0 are told apart.
  friend bool operator==(const Value& a, const Value& b);

 private:
  std::variant<double, Blank, Text, Fault> v_;
};

std::string to_string(const Value& v);

enum class RuntimeDiagnosticKind {
  BlankInArithmetic,   // empty cell read as 0 in +,-,*,/
  SkippedBlank,        // grouping function skipped an empty cell
  SkippedNonNumeric,   // grouping function skipped a label
  TypeError,           // label used in arithmetic
  DivByZero,
  Cycle,
};

std::string_view to_string(RuntimeDiagnosticKind kind);

struct RuntimeDiagnostic {
  RuntimeDiagnosticKind kind;
  CellAddress cell;                     // formula where it happened
  std::optional<CellAddress> subject;   // cell that was read, if any
  std::vector<CellAddress> cycle;       // Cycle only

  friend bool operator==(const RuntimeDiagnostic&, const RuntimeDiagnostic&) = default;
};

struct EvalResult {
  std::map<CellAddress, Value> values;  // every non-empty cell
  std::vector<RuntimeDiagnostic> diagnostics;

  // Value at addr; Blank for cells the program does not store.
  Value at(CellAddress addr) const;
  friend bool operator==(const EvalResult&, const EvalResult&) = default;
};

// Evaluates every cell in topological order. Throws CyclicDependency.
EvalResult eval_instance(const SpreadsheetInstance& instance);

// Like eval_instance, but a cycle does not abort: cells on a cycle read
// Fault(Cycle), cells downstream read Fault(Propagated), and one Cycle
// diagnostic carries the witness.
EvalResult eval_instance_tolerant(const SpreadsheetInstance& instance);

// Values already computed for one instance, shared across eval_cell calls.
struct EvalMemo {
  std::map<CellAddress, Value> values;
  std::vector<RuntimeDiagnostic> diagnostics;
};

// Evaluates one cell, computing whatever precedents the memo lacks. Yields
// the same value eval_instance would. Throws CyclicDependency.
Value eval_cell(const SpreadsheetInstance& instance, CellAddress addr, EvalMemo& memo);

}  // namespace sheetlint
