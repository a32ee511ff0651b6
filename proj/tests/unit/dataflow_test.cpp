#include <gtest/gtest.h>

#include "../support/fixtures.hpp"
#include "../support/random_program.hpp"
#include "sheetlint/dataflow.hpp"
#include "sheetlint/errors.hpp"

namespace sheetlint {
namespace {

using testing::at;

std::set<CellAddress> column_cells(int col, int from, int to) {
  std::set<CellAddress> out;
  for (int r = from; r <= to; ++r) out.insert({col, r});
  return out;
}

TEST(BuildGraph, RangeExpandsToOneEdgePerCell) {
  DependencyGraph g = build_graph(testing::load_fixture("quarterly.sheet"));
  EXPECT_EQ(g.edge_count(), 9u);
  for (int k = 2; k <= 10; ++k) EXPECT_TRUE(g.has_edge({2, k}, at("B12"))) << k;
  // The empty B3 is a node because the range covers it.
  EXPECT_TRUE(g.nodes().count(at("B3")));
  EXPECT_FALSE(g.nodes().count(at("B11")));
}

TEST(BuildGraph, NoFormulasNoEdges) {
  DependencyGraph g = build_graph(load_program("A1 = #1\nB1 = \"x\"\n"));
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_EQ(g.nodes().size(), 2u);
}

TEST(BuildGraph, DuplicateReferencesCollapse) {
  DependencyGraph g = build_graph(load_program("A1 = #1\nB1 = =A1+A1*SUM(A1:A1)\n"));
  EXPECT_EQ(g.edge_count(), 1u);
}

const char* kChain =
    "C2 = #500\nC3 = #1000\nC4 = #600\nC5 = #900\nC6 = =SUM(C2:C5)\nC8 = =C6*2\n";

TEST(BuildGraph, TransitiveChain) {
  DependencyGraph g = build_graph(load_program(kChain));
  EXPECT_TRUE(g.has_edge(at("C2"), at("C6")));
  EXPECT_TRUE(g.has_edge(at("C6"), at("C8")));
  EXPECT_FALSE(g.has_edge(at("C2"), at("C8")));
}

TEST(TopoOrder, Chain) {
  DependencyGraph g = build_graph(load_program("A3 = =A2\nA2 = =A1\nA1 = #1\n"));
  EXPECT_EQ(topo_order(g), (std::vector<CellAddress>{at("A1"), at("A2"), at("A3")}));
}

TEST(TopoOrder, ReverseChainStillRespectsEdges) {
  DependencyGraph g = build_graph(load_program("A1 = =A2\nA2 = =A3\nA3 = #1\n"));
  EXPECT_EQ(topo_order(g), (std::vector<CellAddress>{at("A3"), at("A2"), at("A1")}));
}

TEST(TopoOrder, TieBreakRowMajor) {
  DependencyGraph g = build_graph(load_program("B1 = #1\nA1 = #2\nA2 = #3\n"));
  EXPECT_EQ(topo_order(g), (std::vector<CellAddress>{at("A1"), at("B1"), at("A2")}));
}

TEST(TopoOrder, TwoCycle) {
  DependencyGraph g = build_graph(load_program("A1 = =B1\nB1 = =A1\n"));
  try {
    topo_order(g);
    FAIL();
  } catch (const CyclicDependency& e) {
    EXPECT_EQ(e.cycle(), (std::vector<CellAddress>{at("A1"), at("B1")}));
    EXPECT_STREQ(e.what(), "cyclic dependency: A1 -> B1 -> A1");
  }
}

TEST(TopoOrder, WitnessFollowsDataFlow) {
  // Data flows C1 -> A1 -> B1 -> C1.
  DependencyGraph g = build_graph(load_program("A1 = =C1\nB1 = =A1\nC1 = =B1\nD1 = =C1\n"));
  try {
    topo_order(g);
    FAIL();
  } catch (const CyclicDependency& e) {
    const auto& c = e.cycle();
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c.front(), at("A1"));
    for (std::size_t i = 0; i < c.size(); ++i)
      EXPECT_TRUE(g.has_edge(c[i], c[(i + 1) % c.size()]));
  }
}

TEST(TopoOrder, SelfReference) {
  EXPECT_THROW(topo_order(build_graph(load_program("A1 = =A1+1\n"))), CyclicDependency);
  EXPECT_THROW(topo_order(build_graph(load_program("A3 = =SUM(A1:A5)\n"))), CyclicDependency);
}

TEST(Precedents, DirectQuarterly) {
  DependencyGraph g = build_graph(testing::load_fixture("quarterly.sheet"));
  EXPECT_EQ(precedents(g, at("B12"), false), column_cells(2, 2, 10));
}

TEST(Precedents, InputHasNone) {
  DependencyGraph g = build_graph(testing::load_fixture("sales_appended.sheet"));
  EXPECT_TRUE(precedents(g, at("C7"), true).empty());
  EXPECT_TRUE(precedents(g, at("Z100"), true).empty());
}

TEST(Precedents, TransitiveChain) {
  DependencyGraph g = build_graph(load_program(kChain));
  std::set<CellAddress> want = column_cells(3, 2, 6);
  EXPECT_EQ(precedents(g, at("C8"), true), want);
  EXPECT_EQ(precedents(g, at("C8"), false), std::set<CellAddress>{at("C6")});
  EXPECT_EQ(dependents(g, at("C2"), true), (std::set<CellAddress>{at("C6"), at("C8")}));
}

TEST(Precedents, Distances) {
  DependencyGraph g = build_graph(load_program(kChain));
  auto d = precedent_distances(g, at("C8"));
  EXPECT_EQ(d.at(at("C6")), 1);
  EXPECT_EQ(d.at(at("C2")), 2);
  EXPECT_EQ(d.size(), 5u);
}

TEST(Dependents, ExactReversalOfPrecedents) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 30; ++i) {
    auto rp = testing::random_program(rng);
    DependencyGraph g = build_graph(*rp.program);
    for (bool transitive : {false, true}) {
      for (CellAddress v : g.nodes())
        for (CellAddress u : precedents(g, v, transitive))
          EXPECT_TRUE(dependents(g, u, transitive).count(v));
      for (CellAddress u : g.nodes())
        for (CellAddress v : dependents(g, u, transitive))
          EXPECT_TRUE(precedents(g, v, transitive).count(u));
    }
  }
}

TEST(TopoOrder, EdgesRespectedOnRandomPrograms) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 30; ++i) {
    auto rp = testing::random_program(rng);
    DependencyGraph g = build_graph(*rp.program);
    auto order = topo_order(g);
    ASSERT_EQ(order.size(), g.nodes().size());
    std::map<CellAddress, std::size_t> pos;
    for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = k;
    for (auto [u, v] : g.edges()) EXPECT_LT(pos.at(u), pos.at(v));
  }
}

}  // namespace
}  // namespace sheetlint
