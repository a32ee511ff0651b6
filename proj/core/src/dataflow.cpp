#include "sheetlint/dataflow.hpp"

#include <algorithm>
#include <deque>
#include <queue>

#include "sheetlint/errors.hpp"

namespace sheetlint {
namespace {

const DependencyGraph::AddressSet& empty_set() {
  static const DependencyGraph::AddressSet kEmpty;
  return kEmpty;
}

// Every node left after Kahn's algorithm has an in-edge from another leftover
// node, so walking predecessors from any of them must revisit a node.
std::vector<CellAddress> find_cycle(const DependencyGraph& g,
                                    const std::set<CellAddress>& remaining) {
  std::map<CellAddress, std::size_t> seen;
  std::vector<CellAddress> walk;
  CellAddress cur = *remaining.begin();
  while (!seen.count(cur)) {
    seen[cur] = walk.size();
    walk.push_back(cur);
    for (const auto& p : g.direct_precedents(cur)) {
      if (remaining.count(p)) {
        cur = p;
        break;
      }
    }
  }
  // walk[seen[cur]..] follows edges backwards; flip to data-flow direction.
  std::vector<CellAddress> cycle(walk.begin() + static_cast<std::ptrdiff_t>(seen[cur]),
                                 walk.end());
  std::reverse(cycle.begin(), cycle.end());
  auto smallest = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), smallest, cycle.end());
  return cycle;
}

std::set<CellAddress> closure(
    CellAddress start, bool transitive,
    const std::function<const DependencyGraph::AddressSet&(CellAddress)>& next) {
  std::set<CellAddress> out;
  std::deque<CellAddress> work{start};
  while (!work.empty()) {
    CellAddress cur = work.front();
    work.pop_front();
    for (const auto& n : next(cur)) {
      if (out.insert(n).second && transitive) work.push_back(n);
    }
  }
  return out;
}

}  // namespace

const DependencyGraph::AddressSet& DependencyGraph::direct_precedents(CellAddress v) const {
  auto it = preds_.find(v);
  return it == preds_.end() ? empty_set() : it->second;
}

const DependencyGraph::AddressSet& DependencyGraph::direct_dependents(CellAddress u) const {
  auto it = succs_.find(u);
  return it == succs_.end() ? empty_set() : it->second;
}

bool DependencyGraph::has_edge(CellAddress u, CellAddress v) const {
  return direct_dependents(u).count(v) > 0;
}

std::vector<std::pair<CellAddress, CellAddress>> DependencyGraph::edges() const {
  std::vector<std::pair<CellAddress, CellAddress>> out;
  out.reserve(edge_count_);
  for (const auto& [u, targets] : succs_)
    for (const auto& v : targets) out.emplace_back(u, v);
  return out;
}

DependencyGraph build_graph(const SpreadsheetProgram& p) {
  DependencyGraph g;
  for (const auto& [addr, content] : p.cells()) {
    g.nodes_.insert(addr);
    const auto* f = std::get_if<Formula>(&content);
    if (!f) continue;
    for (const auto& u : referenced_cells(f->ast)) {
      g.nodes_.insert(u);
      g.preds_[addr].insert(u);
      if (g.succs_[u].insert(addr).second) ++g.edge_count_;
    }
  }
  return g;
}

std::vector<CellAddress> topo_order(const DependencyGraph& g) {
  std::map<CellAddress, std::size_t> indegree;
  std::priority_queue<CellAddress, std::vector<CellAddress>, std::greater<>> ready;
  for (const auto& n : g.nodes()) {
    std::size_t d = g.direct_precedents(n).size();
    indegree[n] = d;
    if (d == 0) ready.push(n);
  }
  std::vector<CellAddress> order;
  order.reserve(g.nodes().size());
  while (!ready.empty()) {
    CellAddress u = ready.top();
    ready.pop();
    order.push_back(u);
    for (const auto& v : g.direct_dependents(u))
      if (--indegree[v] == 0) ready.push(v);
  }
  if (order.size() != g.nodes().size()) {
    std::set<CellAddress> remaining;
    for (const auto& [n, d] : indegree)
      if (d > 0) remaining.insert(n);
    throw CyclicDependency(find_cycle(g, remaining));
  }
  return order;
}

std::set<CellAddress> precedents(const DependencyGraph& g, CellAddress addr,
                                 bool transitive) {
  return closure(addr, transitive,
                 [&](CellAddress a) -> const auto& { return g.direct_precedents(a); });
}

std::set<CellAddress> dependents(const DependencyGraph& g, CellAddress addr,
                                 bool transitive) {
  return closure(addr, transitive,
                 [&](CellAddress a) -> const auto& { return g.direct_dependents(a); });
}

std::map<CellAddress, int> precedent_distances(const DependencyGraph& g,
                                               CellAddress addr) {
  std::map<CellAddress, int> dist;
  std::deque<CellAddress> work{addr};
  std::map<CellAddress, int> level{{addr, 0}};
  while (!work.empty()) {
    CellAddress cur = work.front();
    work.pop_front();
    for (const auto& p : g.direct_precedents(cur)) {
      if (level.count(p)) continue;
      level[p] = level[cur] + 1;
      dist[p] = level[p];
      work.push_back(p);
    }
  }
  return dist;
}

}  // namespace sheetlint
