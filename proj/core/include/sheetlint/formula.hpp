#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sheetlint/address.hpp"

namespace sheetlint {

// A reference as written in a formula. col/row are absolute sheet
// coordinates; the flags record which axes carried a '$'.
struct CellRef {
  int col = 1;
  int row = 1;
  bool col_absolute = false;
  bool row_absolute = false;

  CellAddress address() const { return {col, row}; }
  friend bool operator==(const CellRef&, const CellRef&) = default;
};

// Always stored with start.col <= end.col and start.row <= end.row.
struct RangeRef {
  CellRef start;
  CellRef end;

  int width() const { return end.col - start.col + 1; }
  int height() const { return end.row - start.row + 1; }
  bool contains(CellAddress a) const {
    return a.col >= start.col && a.col <= end.col && a.row >= start.row &&
           a.row <= end.row;
  }
  bool overlaps(const RangeRef& o) const {
    return start.col <= o.end.col && o.start.col <= end.col &&
           start.row <= o.end.row && o.start.row <= end.row;
  }
  // Covered cells in row-major order.
  std::vector<CellAddress> cells() const;

  friend bool operator==(const RangeRef&, const RangeRef&) = default;
};

// Builds a range from two corners, swapping per axis (flags travel with
// their coordinate).
RangeRef make_range(CellRef a, CellRef b);

std::string to_string(const CellRef& ref);
std::string to_string(const RangeRef& range);

enum class BinaryOp : std::uint8_t { Add, Sub, Mul, Div };
enum class Function : std::uint8_t { Sum, Avg, Min, Max, Count };

char op_symbol(BinaryOp op);
std::string_view function_name(Function fn);
// Case-insensitive lookup; returns false for names outside the function set.
bool lookup_function(std::string_view name, Function& out);

// Formula syntax tree. A flat tagged node keeps the tree a plain value:
// copyable, comparable, and cheap to walk. Fields not used by a kind stay at
// their defaults so defaulted equality is structural equality.
struct Expr {
  enum class Kind : std::uint8_t { Number, Reference, Range, Negate, Binary, Call };

  Kind kind = Kind::Number;
  double number = 0.0;
  CellRef ref{};
  RangeRef range{};
  BinaryOp op = BinaryOp::Add;
  Function function = Function::Sum;
  std::vector<Expr> children;

  static Expr literal(double value);
  static Expr reference(CellRef ref);
  static Expr range_arg(RangeRef range);
  static Expr negate(Expr child);
  static Expr binary(BinaryOp op, Expr lhs, Expr rhs);
  static Expr call(Function fn, std::vector<Expr> args);

  friend bool operator==(const Expr&, const Expr&) = default;
};

// Every cell the formula reads, ranges expanded, in row-major order.
std::set<CellAddress> referenced_cells(const Expr& e);

// Number of Range nodes in the tree.
int count_ranges(const Expr& e);

// Moves every relative axis by (dc, dr); absolute axes stay put. This is what
// copy-pasting a formula does. Coordinates must stay >= 1.
Expr translate(const Expr& e, int dc, int dr);

// Renders infix text (without the leading '='), parenthesizing only where
// precedence requires.
std::string render_formula(const Expr& e);

// Shortest round-tripping decimal text for a double.
std::string format_number(double v);

// Parses the formula body (text after '='). Throws ParseError.
Expr parse_formula(std::string_view text);

// Origin-relative form: for each non-absolute axis the coordinate is replaced
// by its offset from the host cell. Copies of one source formula normalize
// identically.
struct NormalizedFormula {
  Expr tree;

  // Canonical text form, usable as a map key.
  std::string key() const;
  friend bool operator==(const NormalizedFormula&, const NormalizedFormula&) = default;
};

// Shape-only fingerprint: offsets, absolute markers and literal values erased.
struct Skeleton {
  Expr tree;

  std::string key() const;
  friend bool operator==(const Skeleton&, const Skeleton&) = default;
};

NormalizedFormula normalize(const Expr& ast, CellAddress origin);
Skeleton skeleton(const NormalizedFormula& n);

// True when a and b have the same shape and every difference is either a
// literal value or an axis whose absolute marker differs.
bool differs_only_in_markers_or_literals(const NormalizedFormula& a,
                                         const NormalizedFormula& b);

}  // namespace sheetlint
