#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sheetlint/address.hpp"

namespace sheetlint {

enum class ParseErrorKind {
  MalformedAddress,
  SyntaxError,
  NoReference,
  UnknownFunction,
  RangeOutsideCall,
};

std::string_view to_string(ParseErrorKind kind);

// Raised by the address and formula parsers. position is a byte offset into
// the text that was handed to the parser.
class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t position, const std::string& what)
      : std::runtime_error(what), kind_(kind), position_(position) {}

  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }

 private:
  ParseErrorKind kind_;
  std::size_t position_;
};

enum class LoadErrorKind {
  MalformedLine,
  DuplicateCell,
  FormulaError,
  DuplicateEntry,
  InvalidInterval,
  NotAnInputCell,
  NotAFormulaCell,
};

std::string_view to_string(LoadErrorKind kind);

// Raised while reading .sheet and .intervals text. line is 1-based.
class LoadError : public std::runtime_error {
 public:
  LoadError(LoadErrorKind kind, int line, std::optional<CellAddress> cell,
            const std::string& what)
      : std::runtime_error(what), kind_(kind), line_(line), cell_(cell) {}

  LoadErrorKind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }
  const std::optional<CellAddress>& cell() const noexcept { return cell_; }

 private:
  LoadErrorKind kind_;
  int line_;
  std::optional<CellAddress> cell_;
};

// A binding or annotation targeted a cell that is not an Input cell.
class NotAnInputCell : public std::runtime_error {
 public:
  explicit NotAnInputCell(CellAddress cell)
      : std::runtime_error(to_string(cell) + " is not an input cell"), cell_(cell) {}
  CellAddress cell() const noexcept { return cell_; }

 private:
  CellAddress cell_;
};

// The dependency graph has a cycle. cycle lists one witness, starting at its
// smallest address and following data flow.
class CyclicDependency : public std::runtime_error {
 public:
  explicit CyclicDependency(std::vector<CellAddress> cycle);
  const std::vector<CellAddress>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<CellAddress> cycle_;
};

}  // namespace sheetlint
