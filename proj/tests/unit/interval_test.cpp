#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <limits>
#include <random>

#include "sheetlint/interval.hpp"

namespace sheetlint {
namespace {

Interval iv(double lo, double hi) { return Interval(lo, hi); }

IntervalErrorKind error_kind(BinaryOp op, Interval a, Interval b) {
  try {
    iv_binop(op, a, b);
  } catch (const IntervalError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error";
  return IntervalErrorKind::EmptyAggregate;
}

TEST(Interval, Invariant) {
  EXPECT_THROW(iv(2, 1), std::invalid_argument);
  EXPECT_THROW(iv(std::nan(""), 1), std::invalid_argument);
  EXPECT_NO_THROW(iv(3, 3));
  EXPECT_TRUE(Interval::point(3).is_point());
}

TEST(Interval, ClosedMembership) {
  Interval a = iv(4, 6);
  EXPECT_TRUE(a.contains(4.0));
  EXPECT_TRUE(a.contains(6.0));
  EXPECT_FALSE(a.contains(6.000001));
  EXPECT_TRUE(iv(0, 10).contains(a));
  EXPECT_TRUE(a.contains(a));
  EXPECT_FALSE(iv(0, 10).contains(iv(4, 12)));
}

TEST(Interval, Add) { EXPECT_EQ(iv_binop(BinaryOp::Add, iv(1, 2), iv(3, 4)), iv(4, 6)); }

TEST(Interval, Sub) { EXPECT_EQ(iv_binop(BinaryOp::Sub, iv(1, 2), iv(3, 4)), iv(-3, -1)); }

TEST(Interval, Mul) {
  // endpoint products {-3, -4, 6, 8}
  EXPECT_EQ(iv_binop(BinaryOp::Mul, iv(-1, 2), iv(3, 4)), iv(-4, 8));
  EXPECT_EQ(iv_binop(BinaryOp::Mul, iv(-2, -1), iv(-3, 5)), iv(-10, 6));
}

TEST(Interval, Div) {
  // endpoint quotients {2, 1, 4, 2}
  EXPECT_EQ(iv_binop(BinaryOp::Div, iv(4, 8), iv(2, 4)), iv(1, 4));
  EXPECT_EQ(iv_binop(BinaryOp::Div, iv(-4, 8), iv(-4, -2)), iv(-4, 2));
}

TEST(Interval, DivisorContainsZero) {
  EXPECT_EQ(error_kind(BinaryOp::Div, iv(1, 1), iv(-1, 1)), IntervalErrorKind::DivisorContainsZero);
  EXPECT_EQ(error_kind(BinaryOp::Div, iv(1, 1), iv(0, 1)), IntervalErrorKind::DivisorContainsZero);
  EXPECT_EQ(error_kind(BinaryOp::Div, iv(1, 1), iv(-1, 0)), IntervalErrorKind::DivisorContainsZero);
  EXPECT_EQ(error_kind(BinaryOp::Div, iv(1, 1), iv(0, 0)), IntervalErrorKind::DivisorContainsZero);
}

TEST(Interval, DependencyEffectOverapproximates) {
  Interval x = iv(0, 1);
  EXPECT_EQ(iv_binop(BinaryOp::Sub, x, x), iv(-1, 1));
}

TEST(Interval, Negate) { EXPECT_EQ(iv_negate(iv(-1, 3)), iv(-3, 1)); }

TEST(Interval, OverflowWidensInsteadOfNaN) {
  double big = std::numeric_limits<double>::max();
  double inf = std::numeric_limits<double>::infinity();
  Interval r = iv_binop(BinaryOp::Add, iv(big, big), iv(big, big));
  EXPECT_EQ(r.hi(), inf);
  Interval s = iv_binop(BinaryOp::Sub, iv(-inf, inf), iv(-inf, inf));
  EXPECT_EQ(s, iv(-inf, inf));
  Interval m = iv_binop(BinaryOp::Mul, iv(0, 0), iv(-inf, inf));
  EXPECT_LE(m.lo(), 0.0);
  EXPECT_GE(m.hi(), 0.0);
}

TEST(Aggregate, Sum) {
  std::array<Interval, 6> items{Interval::point(140), Interval::point(200), Interval::point(170),
                                Interval::point(180), Interval::point(230), Interval::point(100)};
  EXPECT_EQ(iv_aggregate(Function::Sum, items), Interval::point(1020));
}

TEST(Aggregate, MinMax) {
  std::array<Interval, 2> items{iv(1, 3), iv(2, 5)};
  EXPECT_EQ(iv_aggregate(Function::Min, items), iv(1, 3));
  EXPECT_EQ(iv_aggregate(Function::Max, items), iv(2, 5));
}

TEST(Aggregate, Avg) {
  // SUM [2,6] / 2
  std::array<Interval, 2> items{iv(0, 2), iv(2, 4)};
  EXPECT_EQ(iv_aggregate(Function::Avg, items), iv(1, 3));
}

TEST(Aggregate, Count) {
  std::array<Interval, 3> items{iv(0, 2), iv(2, 4), iv(-9, 9)};
  EXPECT_EQ(iv_aggregate(Function::Count, items), Interval::point(3));
  EXPECT_EQ(iv_aggregate(Function::Count, std::span<const Interval>{}), Interval::point(0));
}

TEST(Aggregate, EmptyFails) {
  for (Function f : {Function::Sum, Function::Avg, Function::Min, Function::Max}) {
    try {
      iv_aggregate(f, std::span<const Interval>{});
      ADD_FAILURE();
    } catch (const IntervalError& e) {
      EXPECT_EQ(e.kind(), IntervalErrorKind::EmptyAggregate);
    }
  }
}

TEST(Interval, ToString) {
  EXPECT_EQ(to_string(iv(918, 1122)), "[918, 1122]");
  EXPECT_EQ(to_string(iv(-0.5, 2)), "[-0.5, 2]");
}

// Every point of a, b combined lands inside the result.
TEST(Interval, ContainmentSampled) {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> end(-40, 40);
  std::uniform_real_distribution<double> unit(0, 1);
  for (int i = 0; i < 3000; ++i) {
    int a0 = end(rng), a1 = end(rng), b0 = end(rng), b1 = end(rng);
    Interval a = iv(0.25 * std::min(a0, a1), 0.25 * std::max(a0, a1));
    Interval b = iv(0.25 * std::min(b0, b1), 0.25 * std::max(b0, b1));
    double x = a.lo() + (a.hi() - a.lo()) * unit(rng);
    double y = b.lo() + (b.hi() - b.lo()) * unit(rng);
    if (x > a.hi()) x = a.hi();
    if (y > b.hi()) y = b.hi();
    for (BinaryOp op : {BinaryOp::Add, BinaryOp::Sub, BinaryOp::Mul, BinaryOp::Div}) {
      if (op == BinaryOp::Div && b.contains_zero()) continue;
      Interval r = iv_binop(op, a, b);
      double v = op == BinaryOp::Add ? x + y
                 : op == BinaryOp::Sub ? x - y
                 : op == BinaryOp::Mul ? x * y
                                       : x / y;
      EXPECT_TRUE(r.contains(v)) << to_string(a) << op_symbol(op) << to_string(b) << " " << v;
    }
  }
}

TEST(Interval, PointCollapseBitExact) {
  std::mt19937 rng(43);
  std::uniform_real_distribution<double> val(-1e6, 1e6);
  for (int i = 0; i < 3000; ++i) {
    double x = val(rng), y = val(rng);
    EXPECT_EQ(iv_binop(BinaryOp::Add, Interval::point(x), Interval::point(y)), Interval::point(x + y));
    EXPECT_EQ(iv_binop(BinaryOp::Sub, Interval::point(x), Interval::point(y)), Interval::point(x - y));
    EXPECT_EQ(iv_binop(BinaryOp::Mul, Interval::point(x), Interval::point(y)), Interval::point(x * y));
    EXPECT_EQ(iv_binop(BinaryOp::Div, Interval::point(x), Interval::point(y)), Interval::point(x / y));
  }
}

}  // namespace
}  // namespace sheetlint
