#include <gtest/gtest.h>

#include <random>

#include "../support/fixtures.hpp"
#include "../support/random_program.hpp"
#include "sheetlint/areas.hpp"

namespace sheetlint {
namespace {

using testing::at;

RangeRef rect(std::string_view a, std::string_view b) {
  CellAddress x = at(a), y = at(b);
  return make_range(CellRef{x.col, x.row, false, false}, CellRef{y.col, y.row, false, false});
}

TEST(PhysicalAreas, Quarterly) {
  auto areas = infer_physical_areas(testing::load_fixture("quarterly.sheet"));
  ASSERT_EQ(areas.size(), 1u);
  EXPECT_EQ(areas[0].rect, rect("B2", "B10"));
  EXPECT_EQ(areas[0].consumer, at("B12"));
  EXPECT_EQ(areas[0].function, Function::Sum);
  EXPECT_EQ(areas[0].majority_type, CellKind::Constant);
}

TEST(PhysicalAreas, NoGroupingCalls) {
  EXPECT_TRUE(infer_physical_areas(load_program("A1 = #1\nA2 = =A1*2\n")).empty());
}

TEST(PhysicalAreas, Subtotals) {
  auto areas = infer_physical_areas(testing::load_fixture("subtotals.sheet"));
  ASSERT_EQ(areas.size(), 2u);
  EXPECT_EQ(areas[0].rect, rect("C3", "C5"));
  EXPECT_EQ(areas[0].consumer, at("D6"));
  EXPECT_EQ(areas[1].rect, rect("C7", "C9"));
  EXPECT_EQ(areas[1].consumer, at("D10"));
}

TEST(PhysicalAreas, OnePerRangeArgument) {
  auto areas = infer_physical_areas(
      load_program("A1 = #1\nB1 = =SUM(A1:A3)+MAX(A1:A3, A5:A6)\nB2 = =SUM(A1:A3)\n"));
  ASSERT_EQ(areas.size(), 4u);
  EXPECT_EQ(areas[0].function, Function::Sum);
  EXPECT_EQ(areas[1].function, Function::Max);
  EXPECT_EQ(areas[2].rect, rect("A5", "A6"));
  EXPECT_EQ(areas[2].majority_type, CellKind::Empty);
  EXPECT_EQ(areas[3].consumer, at("B2"));
}

TEST(PhysicalAreas, MajorityTieOrder) {
  auto p = load_program(
      "A1 = #1\nA2 = ?2\nA3 = \"x\"\nA4 = \"y\"\nA5 = =A1\nA6 = =A1\n"
      "B1 = =SUM(A1:A2)\nB2 = =SUM(A2:A3)\nB3 = =SUM(A3:A6)\nB4 = =SUM(A1:A4)\n");
  auto areas = infer_physical_areas(p);
  EXPECT_EQ(areas[0].majority_type, CellKind::Constant);
  EXPECT_EQ(areas[1].majority_type, CellKind::Input);
  EXPECT_EQ(areas[2].majority_type, CellKind::Formula);
  EXPECT_EQ(areas[3].majority_type, CellKind::Label);
}

TEST(PhysicalAreas, CountMatchesRangeNodes) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 30; ++i) {
    auto rp = testing::random_program(rng);
    int ranges = 0;
    for (const auto& [addr, content] : rp.program->cells())
      if (const auto* f = std::get_if<Formula>(&content)) ranges += count_ranges(f->ast);
    EXPECT_EQ(static_cast<int>(infer_physical_areas(*rp.program).size()), ranges);
  }
}

TEST(LogicalAreas, CopiedColumn) {
  auto areas = infer_logical_areas(testing::load_fixture("copies.sheet"));
  ASSERT_EQ(areas.size(), 1u);
  EXPECT_EQ(areas[0].members, (std::vector<CellAddress>{at("C1"), at("C2"), at("C3")}));
  EXPECT_EQ(areas[0].hull, rect("C1", "C3"));
  EXPECT_EQ(areas[0].key, normalize(parse_formula("A1+B1"), at("C1")));
}

TEST(LogicalAreas, DifferentFormulasStaySingletons) {
  EXPECT_TRUE(infer_logical_areas(load_program("C1 = =A1+B1\nC2 = =A2*B2\n")).empty());
}

TEST(LogicalAreas, NonAdjacentCopies) {
  auto areas = infer_logical_areas(load_program("C1 = =A1+B1\nC9 = =A9+B9\n"));
  ASSERT_EQ(areas.size(), 1u);
  EXPECT_EQ(areas[0].hull, rect("C1", "C9"));
  EXPECT_TRUE(areas[0].single_line());
}

TEST(StructuralGroups, LiteralsErased) {
  auto groups = structural_groups(load_program("C1 = =A1*2\nC2 = =A2*5\n"));
  ASSERT_EQ(groups.size(), 1u);
  EXPECT_EQ(groups[0].members.size(), 2u);
}

TEST(StructuralGroups, MarkersErased) {
  auto p = load_program("C1 = =$A$1+B1\nC2 = =A2+B2\n");
  EXPECT_EQ(structural_groups(p).size(), 1u);
  EXPECT_TRUE(infer_logical_areas(p).empty());
}

TEST(StructuralGroups, OperatorKept) {
  EXPECT_TRUE(structural_groups(load_program("C1 = =A1+B1\nC2 = =A1-B1\n")).empty());
}

TEST(Areas, PartitionProperties) {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 40; ++i) {
    auto rp = testing::random_program(rng);
    auto logical = infer_logical_areas(*rp.program);
    auto groups = structural_groups(*rp.program);
    std::map<CellAddress, int> in_logical, in_group;
    for (std::size_t k = 0; k < logical.size(); ++k)
      for (auto m : logical[k].members) {
        EXPECT_EQ(in_logical.count(m), 0u);
        in_logical[m] = static_cast<int>(k);
        EXPECT_EQ(normalize(rp.program->formula_at(m)->ast, m), logical[k].key);
      }
    for (std::size_t k = 0; k < groups.size(); ++k)
      for (auto m : groups[k].members) {
        EXPECT_EQ(in_group.count(m), 0u);
        in_group[m] = static_cast<int>(k);
      }
    for (const auto& area : logical) {
      ASSERT_TRUE(in_group.count(area.members[0]));
      int g = in_group[area.members[0]];
      for (auto m : area.members) EXPECT_EQ(in_group.at(m), g);
    }
  }
}

TEST(Areas, TranslationStable) {
  auto p = testing::load_fixture("copies.sheet");
  SpreadsheetProgram::CellMap moved;
  for (const auto& [addr, content] : p.cells()) {
    CellAddress to{addr.col + 3, addr.row + 7};
    if (const auto* f = std::get_if<Formula>(&content)) {
      moved.emplace(to, Formula{translate(f->ast, 3, 7)});
    } else {
      moved.emplace(to, content);
    }
  }
  auto before = infer_logical_areas(p);
  auto after = infer_logical_areas(SpreadsheetProgram(std::move(moved)));
  ASSERT_EQ(after.size(), before.size());
  EXPECT_EQ(after[0].key, before[0].key);
  EXPECT_EQ(after[0].members.size(), before[0].members.size());
  EXPECT_EQ(after[0].members.front(), (CellAddress{before[0].members.front().col + 3,
                                                  before[0].members.front().row + 7}));
}

TEST(BoundingRect, Hull) {
  EXPECT_EQ(bounding_rect({at("C3"), at("A9"), at("B1")}), rect("A1", "C9"));
}

}  // namespace
}  // namespace sheetlint
