#include "sheetlint/interval.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace sheetlint {

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!(lo <= hi))
    throw std::invalid_argument("interval lower bound exceeds upper bound: [" +
                                format_number(lo) + ", " + format_number(hi) + "]");
}

std::string to_string(const Interval& iv) {
  return "[" + format_number(iv.lo()) + ", " + format_number(iv.hi()) + "]";
}

std::string_view to_string(IntervalErrorKind kind) {
  switch (kind) {
    case IntervalErrorKind::DivisorContainsZero: return "DivisorContainsZero";
    case IntervalErrorKind::EmptyAggregate: return "EmptyAggregate";
  }
  return "?";
}

namespace {

// Overflow can produce inf - inf or 0 * inf. A NaN endpoint widens to the
// whole line, which still contains every possible value.
Interval sound(double lo, double hi) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  if (std::isnan(lo)) lo = -kInf;
  if (std::isnan(hi)) hi = kInf;
  return Interval(lo, hi);
}

Interval hull_of(const std::array<double, 4>& v) {
  for (double x : v)
    if (std::isnan(x)) return sound(x, x);
  double lo = v[0];
  double hi = v[0];
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] < lo) lo = v[i];
    if (v[i] > hi) hi = v[i];
  }
  return Interval(lo, hi);
}

// Same left fold as the concrete SUM, so point inputs reproduce its bits.
Interval fold_sum(std::span<const Interval> items) {
  double lo = items.front().lo();
  double hi = items.front().hi();
  for (std::size_t i = 1; i < items.size(); ++i) {
    lo += items[i].lo();
    hi += items[i].hi();
  }
  return sound(lo, hi);
}

}  // namespace

Interval iv_binop(BinaryOp op, const Interval& a, const Interval& b) {
  switch (op) {
    case BinaryOp::Add:
      return sound(a.lo() + b.lo(), a.hi() + b.hi());
    case BinaryOp::Sub:
      return sound(a.lo() - b.hi(), a.hi() - b.lo());
    case BinaryOp::Mul:
      return hull_of({a.lo() * b.lo(), a.lo() * b.hi(), a.hi() * b.lo(), a.hi() * b.hi()});
    case BinaryOp::Div:
      if (b.contains_zero())
        throw IntervalError(IntervalErrorKind::DivisorContainsZero,
                            "divisor " + to_string(b) + " contains zero");
      return hull_of({a.lo() / b.lo(), a.lo() / b.hi(), a.hi() / b.lo(), a.hi() / b.hi()});
  }
  throw std::logic_error("unknown operator");
}

Interval iv_negate(const Interval& a) { return Interval(-a.hi(), -a.lo()); }

Interval iv_aggregate(Function fn, std::span<const Interval> items) {
  if (fn == Function::Count) return Interval::point(static_cast<double>(items.size()));
  if (items.empty())
    throw IntervalError(IntervalErrorKind::EmptyAggregate,
                        std::string(function_name(fn)) + " over no numeric cells");
  switch (fn) {
    case Function::Sum:
      return fold_sum(items);
    case Function::Avg:
      return iv_binop(BinaryOp::Div, fold_sum(items),
                      Interval::point(static_cast<double>(items.size())));
    case Function::Min:
    case Function::Max: {
      double lo = items.front().lo();
      double hi = items.front().hi();
      for (std::size_t i = 1; i < items.size(); ++i) {
        if (fn == Function::Min) {
          if (items[i].lo() < lo) lo = items[i].lo();
          if (items[i].hi() < hi) hi = items[i].hi();
        } else {
          if (items[i].lo() > lo) lo = items[i].lo();
          if (items[i].hi() > hi) hi = items[i].hi();
        }
      }
      return Interval(lo, hi);
    }
    case Function::Count:
      break;
  }
  throw std::logic_error("unknown function");
}

}  // namespace sheetlint
