#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "sheetlint/address.hpp"
#include "sheetlint/formula.hpp"

namespace sheetlint {

// Supplied by the programmer.
struct Constant {
  double value = 0.0;
  friend bool operator==(const Constant&, const Constant&) = default;
};

// Supplied by the user; default_value is used when an instance does not bind
// the cell.
struct Input {
  double default_value = 0.0;
  friend bool operator==(const Input&, const Input&) = default;
};

struct Formula {
  Expr ast;
  friend bool operator==(const Formula&, const Formula&) = default;
};

struct Label {
  std::string text;
  friend bool operator==(const Label&, const Label&) = default;
};

// Empty is represented by absence from the program.
using CellContent = std::variant<Constant, Input, Formula, Label>;

enum class CellKind { Empty, Constant, Input, Formula, Label };

std::string_view to_string(CellKind kind);
CellKind kind_of(const CellContent& content);

struct Extent {
  int max_col = 0;
  int max_row = 0;
  friend bool operator==(const Extent&, const Extent&) = default;
};

// An immutable spreadsheet program: formulas, constants, labels, and input
// declarations, without bound input values.
class SpreadsheetProgram {
 public:
  using CellMap = std::map<CellAddress, CellContent>;

  SpreadsheetProgram() = default;
  explicit SpreadsheetProgram(CellMap cells);

  const CellMap& cells() const { return cells_; }
  const CellContent* find(CellAddress addr) const;
  CellKind kind_at(CellAddress addr) const;
  const Formula* formula_at(CellAddress addr) const;
  Extent extent() const { return extent_; }
  std::size_t size() const { return cells_.size(); }

  // Copy with one cell replaced or added; the receiver is untouched.
  SpreadsheetProgram with_cell(CellAddress addr, CellContent content) const;
  SpreadsheetProgram without_cell(CellAddress addr) const;

  friend bool operator==(const SpreadsheetProgram& a, const SpreadsheetProgram& b) {
    return a.cells_ == b.cells_;
  }

 private:
  CellMap cells_;
  Extent extent_;
};

// Reads the line-oriented .sheet format:
//
//   ; comment
//   B4  = #140             constant
//   A1  = ?5               input with default
//   B12 = =SUM(B2:B10)     formula
//   B2  = "1. Quarter"     label
//
// Throws LoadError (MalformedLine, DuplicateCell, FormulaError).
SpreadsheetProgram load_program(std::string_view text);

// Writes the .sheet format; load_program(render_program(p)) == p.
std::string render_program(const SpreadsheetProgram& p);

// Parses a .sheet number: optional sign, digits with optional decimal point
// and exponent. Returns false on anything else.
bool parse_number(std::string_view text, double& out);

// A program with every input cell bound to a value.
class SpreadsheetInstance {
 public:
  SpreadsheetInstance(std::shared_ptr<const SpreadsheetProgram> program,
                      std::map<CellAddress, double> bindings);

  const SpreadsheetProgram& program() const { return *program_; }
  const std::shared_ptr<const SpreadsheetProgram>& shared_program() const {
    return program_;
  }
  const std::map<CellAddress, double>& bindings() const { return bindings_; }

  // Bound value, or the declared default. Throws NotAnInputCell.
  double input_value(CellAddress addr) const;

  // New instance with one input changed. Throws NotAnInputCell.
  SpreadsheetInstance with_input(CellAddress addr, double value) const;

  // Two instances are equal when they share a program and every input reads
  // the same value.
  friend bool operator==(const SpreadsheetInstance& a, const SpreadsheetInstance& b);

 private:
  std::shared_ptr<const SpreadsheetProgram> program_;
  std::map<CellAddress, double> bindings_;
};

// Throws NotAnInputCell if a binding targets anything but an Input cell.
SpreadsheetInstance instantiate(std::shared_ptr<const SpreadsheetProgram> program,
                                std::map<CellAddress, double> bindings = {});

}  // namespace sheetlint
