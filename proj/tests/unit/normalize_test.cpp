#include <gtest/gtest.h>

#include <random>

#include "sheetlint/formula.hpp"

namespace sheetlint {
namespace {

NormalizedFormula norm(std::string_view text, std::string_view origin) {
  return normalize(parse_formula(text), parse_address(origin));
}

TEST(Normalize, RelativeBecomesOffset) {
  Expr n = norm("C2", "C3").tree;
  ASSERT_EQ(n.kind, Expr::Kind::Reference);
  EXPECT_EQ(n.ref.col, 0);
  EXPECT_EQ(n.ref.row, -1);
  EXPECT_FALSE(n.ref.col_absolute);
}

TEST(Normalize, AbsoluteAxesUnchanged) {
  Expr n = norm("$B$1", "D5").tree;
  EXPECT_EQ(n.ref.col, 2);
  EXPECT_EQ(n.ref.row, 1);
  EXPECT_TRUE(n.ref.col_absolute);
  EXPECT_TRUE(n.ref.row_absolute);
}

TEST(Normalize, MixedAxes) {
  Expr n = norm("$A3", "C5").tree;
  EXPECT_EQ(n.ref.col, 1);
  EXPECT_EQ(n.ref.row, -2);
}

TEST(Normalize, CopiesAreIdentical) {
  NormalizedFormula c1 = norm("A1+B1", "C1");
  NormalizedFormula c2 = norm("A2+B2", "C2");
  EXPECT_EQ(c1, c2);
  EXPECT_EQ(c1.key(), c2.key());
  // (-2,0) + (-1,0)
  EXPECT_EQ(c1.tree.children[0].ref.col, -2);
  EXPECT_EQ(c1.tree.children[1].ref.col, -1);
  EXPECT_EQ(c1.tree.children[1].ref.row, 0);
}

TEST(Normalize, RangesPerEndpoint) {
  EXPECT_EQ(norm("SUM(B2:B10)", "B12"), norm("SUM(C2:C10)", "C12"));
  EXPECT_NE(norm("SUM(B2:B10)", "B12"), norm("SUM(B2:B11)", "B12"));
}

TEST(Normalize, MarkerDistinguishes) {
  // $A1 at B1 and A1 at B1 both point at A1, but are different formulas.
  EXPECT_NE(norm("$A1", "B1"), norm("A1", "B1"));
  EXPECT_NE(norm("$A1", "B1").key(), norm("A1", "B1").key());
}

TEST(Normalize, InjectivePerOrigin) {
  const char* formulas[] = {"A1+B1", "A1-B1", "B1+A1", "A1+$B1", "A1+B$1", "A1+B1+0",
                            "SUM(A1:A2)", "SUM(A1:A3)", "MAX(A1:A2)", "A1*2", "A1*3",
                            "-A1", "A1", "A2"};
  for (const char* a : formulas)
    for (const char* b : formulas) {
      if (std::string_view(a) == b) continue;
      EXPECT_NE(norm(a, "D4").key(), norm(b, "D4").key()) << a << " vs " << b;
    }
}

TEST(Skeleton, ShapeOnly) {
  Skeleton s = skeleton(norm("A1+B1", "C1"));
  EXPECT_EQ(s, skeleton(norm("$Q$9+B7", "H3")));
  EXPECT_EQ(skeleton(norm("A1*2", "C1")), skeleton(norm("B7*5", "C9")));
  EXPECT_NE(skeleton(norm("A1*2", "C1")), skeleton(norm("A1+2", "C1")));
  EXPECT_NE(skeleton(norm("SUM(A1:A2)", "C1")), skeleton(norm("MAX(A1:A2)", "C1")));
  EXPECT_NE(skeleton(norm("SUM(A1:A2)", "C1")), skeleton(norm("SUM(A1:A2,A3)", "C1")));
}

TEST(Skeleton, EqualNormalizedGivesEqualSkeleton) {
  EXPECT_EQ(skeleton(norm("A1+B1", "C1")), skeleton(norm("A2+B2", "C2")));
}

TEST(Compatibility, MarkersAndLiterals) {
  EXPECT_TRUE(differs_only_in_markers_or_literals(norm("A3*B1", "C3"), norm("A3*$B$1", "C3")));
  EXPECT_TRUE(differs_only_in_markers_or_literals(norm("A3*2", "C3"), norm("A3*7", "C3")));
  EXPECT_FALSE(differs_only_in_markers_or_literals(norm("A3*B1", "C3"), norm("A3*B2", "C3")));
  EXPECT_FALSE(differs_only_in_markers_or_literals(norm("A3*B1", "C3"), norm("A3+B1", "C3")));
}

// Random formula over a sandbox far from the sheet edge so any translation
// used below stays valid.
Expr random_formula(std::mt19937& rng) {
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto ref = [&] {
    return CellRef{uni(30, 60), uni(30, 60), uni(0, 3) == 0, uni(0, 3) == 0};
  };
  Expr e = Expr::reference(ref());
  int terms = uni(1, 4);
  for (int i = 0; i < terms; ++i) {
    Expr rhs;
    switch (uni(0, 2)) {
      case 0: rhs = Expr::reference(ref()); break;
      case 1: rhs = Expr::literal(uni(0, 50)); break;
      default: {
        std::vector<Expr> args;
        args.push_back(Expr::range_arg(make_range(ref(), ref())));
        rhs = Expr::call(static_cast<Function>(uni(0, 4)), std::move(args));
      }
    }
    e = Expr::binary(static_cast<BinaryOp>(uni(0, 3)), std::move(e), std::move(rhs));
  }
  return e;
}

TEST(Normalize, CopyEquivalenceProperty) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> shift(-20, 20);
  for (int i = 0; i < 1000; ++i) {
    Expr f = random_formula(rng);
    CellAddress o1{40, 40};
    int dc = shift(rng), dr = shift(rng);
    CellAddress o2{o1.col + dc, o1.row + dr};
    EXPECT_EQ(normalize(f, o1), normalize(translate(f, dc, dr), o2)) << render_formula(f);
  }
}

Expr perturb(const Expr& e, std::mt19937& rng) {
  Expr out = e;
  std::bernoulli_distribution flip(0.5);
  switch (out.kind) {
    case Expr::Kind::Number: out.number = std::uniform_int_distribution<int>(0, 99)(rng); break;
    case Expr::Kind::Reference:
      out.ref.col_absolute = flip(rng);
      out.ref.row_absolute = flip(rng);
      break;
    case Expr::Kind::Range:
      out.range.start.col_absolute = flip(rng);
      out.range.end.row_absolute = flip(rng);
      break;
    default: break;
  }
  for (auto& c : out.children) c = perturb(c, rng);
  return out;
}

TEST(Skeleton, InvariantUnderMarkersAndLiterals) {
  std::mt19937 rng(5);
  for (int i = 0; i < 1000; ++i) {
    Expr f = random_formula(rng);
    Expr g = perturb(f, rng);
    CellAddress o{45, 45};
    EXPECT_EQ(skeleton(normalize(f, o)), skeleton(normalize(g, o)));
    EXPECT_EQ(skeleton(normalize(f, o)).key(), skeleton(normalize(g, o)).key());
  }
}

}  // namespace
}  // namespace sheetlint
