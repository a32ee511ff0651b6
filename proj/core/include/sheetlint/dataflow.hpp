#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "sheetlint/address.hpp"
#include "sheetlint/program.hpp"

namespace sheetlint {

// Cell dependency graph. An edge u -> v means v's formula reads u, directly
// or through a range. Nodes are all non-empty cells plus every empty cell a
// formula reads.
class DependencyGraph {
 public:
  using AddressSet = std::set<CellAddress>;

  const AddressSet& nodes() const { return nodes_; }
  // Direct neighbours; empty set for unknown addresses.
  const AddressSet& direct_precedents(CellAddress v) const;
  const AddressSet& direct_dependents(CellAddress u) const;
  bool has_edge(CellAddress u, CellAddress v) const;
  std::size_t edge_count() const { return edge_count_; }
  // All edges ordered by (source, target).
  std::vector<std::pair<CellAddress, CellAddress>> edges() const;

 private:
  friend DependencyGraph build_graph(const SpreadsheetProgram& p);

  AddressSet nodes_;
  std::map<CellAddress, AddressSet> preds_;
  std::map<CellAddress, AddressSet> succs_;
  std::size_t edge_count_ = 0;
};

DependencyGraph build_graph(const SpreadsheetProgram& p);

// Kahn's algorithm; among ready nodes the row-major smallest goes first.
// Throws CyclicDependency with one witness cycle.
std::vector<CellAddress> topo_order(const DependencyGraph& g);

std::set<CellAddress> precedents(const DependencyGraph& g, CellAddress addr,
                                 bool transitive);
std::set<CellAddress> dependents(const DependencyGraph& g, CellAddress addr,
                                 bool transitive);

// Breadth-first distance (>= 1) of every transitive precedent of addr.
std::map<CellAddress, int> precedent_distances(const DependencyGraph& g,
                                               CellAddress addr);

}  // namespace sheetlint
