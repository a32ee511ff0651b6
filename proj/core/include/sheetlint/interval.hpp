#pragma once

#include <span>
#include <stdexcept>
#include <string>

#include "sheetlint/formula.hpp"

namespace sheetlint {

// Closed interval [lo, hi]; lo == hi is a valid point interval. Endpoints are
// plain doubles: no outward rounding is applied.
class Interval {
 public:
  constexpr Interval() = default;
  // Throws std::invalid_argument unless lo <= hi.
  Interval(double lo, double hi);
  static Interval point(double v) { return Interval(v, v); }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  bool is_point() const { return lo_ == hi_; }
  bool contains(double v) const { return lo_ <= v && v <= hi_; }
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool contains_zero() const { return lo_ <= 0.0 && 0.0 <= hi_; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

std::string to_string(const Interval& iv);

enum class IntervalErrorKind { DivisorContainsZero, EmptyAggregate };

std::string_view to_string(IntervalErrorKind kind);

class IntervalError : public std::domain_error {
 public:
  IntervalError(IntervalErrorKind kind, const std::string& what)
      : std::domain_error(what), kind_(kind) {}
  IntervalErrorKind kind() const noexcept { return kind_; }

 private:
  IntervalErrorKind kind_;
};

// Throws IntervalError(DivisorContainsZero) for division by an interval that
// contains zero.
Interval iv_binop(BinaryOp op, const Interval& a, const Interval& b);
Interval iv_negate(const Interval& a);

// Aggregates over the intervals of numeric cells. SUM/AVG/MIN/MAX throw
// IntervalError(EmptyAggregate) on an empty list; COUNT yields [n, n].
Interval iv_aggregate(Function fn, std::span<const Interval> items);

}  // namespace sheetlint
