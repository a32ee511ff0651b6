#include "sheetlint/dot.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "sheetlint/areas.hpp"
#include "sheetlint/dataflow.hpp"

namespace sheetlint {
namespace {

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out.push_back(c);
  }
  return out;
}

std::string quoted(std::string_view id) { return "\"" + escape(id) + "\""; }

std::string content_line(const SpreadsheetProgram& p, CellAddress a) {
  const CellContent* c = p.find(a);
  if (!c) return "empty";
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Constant>) {
          return "constant " + format_number(v.value);
        } else if constexpr (std::is_same_v<T, Input>) {
          return "input " + format_number(v.default_value);
        } else if constexpr (std::is_same_v<T, Formula>) {
          return "formula =" + render_formula(v.ast);
        } else {
          return "label \"" + v.text + "\"";
        }
      },
      *c);
}

struct NodeStyle {
  std::string label;
  std::string fill = "white";
  bool dashed = false;
  std::set<std::string> codes;
};

std::string node_attrs(const NodeStyle& s) {
  std::string label = s.label;
  for (const auto& code : s.codes) label += "\n" + code;
  std::string out = "[label=" + quoted(label) + ", fillcolor=\"" + s.fill + "\"";
  if (s.dashed) out += ", style=\"filled,dashed\"";
  if (!s.codes.empty())
    out += ", color=\"" + std::string(kDiagnosticColor) + "\", penwidth=2";
  out += "]";
  return out;
}

void header(std::ostringstream& out) {
  out << "digraph sheet {\n"
      << "  graph [rankdir=TB, fontname=\"Helvetica\"];\n"
      << "  node [shape=box, style=filled, fillcolor=white, fontname=\"Helvetica\"];\n"
      << "  edge [color=\"#555555\"];\n";
}

std::string render_cells(const SpreadsheetProgram& p, const std::vector<Diagnostic>& diags) {
  DependencyGraph g = build_graph(p);
  std::vector<PhysicalArea> physical = infer_physical_areas(p);
  std::vector<LogicalArea> logical = infer_logical_areas(p);

  std::map<CellAddress, NodeStyle> nodes;
  for (const auto& a : g.nodes())
    nodes[a] = NodeStyle{to_string(a) + "\n" + content_line(p, a), "white",
                         p.kind_at(a) == CellKind::Empty, {}};
  for (std::size_t i = 0; i < logical.size(); ++i)
    for (const auto& m : logical[i].members)
      nodes[m].fill = kLogicalAreaFills[i % std::size(kLogicalAreaFills)];
  for (const auto& d : diags) {
    for (const auto& s : d.subjects) {
      auto [it, inserted] = nodes.try_emplace(s);
      if (inserted)
        it->second = NodeStyle{to_string(s) + "\n" + content_line(p, s), "white",
                               p.kind_at(s) == CellKind::Empty, {}};
      it->second.codes.insert(std::string(to_string(d.code)));
    }
  }

  std::ostringstream out;
  header(out);
  std::set<CellAddress> placed;
  for (std::size_t i = 0; i < physical.size(); ++i) {
    const auto& area = physical[i];
    out << "  subgraph cluster_" << i << " {\n"
        << "    label=" << quoted(std::string(function_name(area.function)) + "(" +
                                  to_string(area.rect) + ") -> " + to_string(area.consumer))
        << ";\n"
        << "    style=dashed;\n"
        << "    color=\"" << kClusterColor << "\";\n";
    for (const auto& [addr, style] : nodes) {
      if (!area.rect.contains(addr) || placed.count(addr)) continue;
      placed.insert(addr);
      out << "    " << quoted(to_string(addr)) << " " << node_attrs(style) << ";\n";
    }
    out << "  }\n";
  }
  for (const auto& [addr, style] : nodes) {
    if (placed.count(addr)) continue;
    out << "  " << quoted(to_string(addr)) << " " << node_attrs(style) << ";\n";
  }
  for (const auto& [u, v] : g.edges())
    out << "  " << quoted(to_string(u)) << " -> " << quoted(to_string(v)) << ";\n";
  out << "}\n";
  return out.str();
}

std::string render_areas(const SpreadsheetProgram& p, const std::vector<Diagnostic>& diags) {
  DependencyGraph g = build_graph(p);
  std::vector<PhysicalArea> physical = infer_physical_areas(p);
  std::vector<LogicalArea> logical = infer_logical_areas(p);

  // Each cell collapses into the first physical area covering it, else its
  // logical area, else stays on its own.
  // Groups are emitted in the order their first cell is met (row-major).
  std::map<std::string, NodeStyle> groups;
  std::map<std::string, std::size_t> rank;
  std::map<CellAddress, std::string> group_of;
  auto add = [&](const std::string& id, NodeStyle style) {
    if (groups.try_emplace(id, std::move(style)).second) rank.emplace(id, rank.size());
  };
  auto assign = [&](CellAddress a) -> const std::string& {
    auto it = group_of.find(a);
    if (it != group_of.end()) return it->second;
    for (std::size_t i = 0; i < physical.size(); ++i) {
      if (!physical[i].rect.contains(a)) continue;
      std::string id = "P" + std::to_string(i);
      add(id, NodeStyle{"physical area " + to_string(physical[i].rect) + "\n" +
                                           std::string(function_name(physical[i].function)) +
                                           " -> " + to_string(physical[i].consumer),
                                       "white", false, {}});
      return group_of[a] = id;
    }
    for (std::size_t i = 0; i < logical.size(); ++i) {
      const auto& m = logical[i].members;
      if (!std::binary_search(m.begin(), m.end(), a)) continue;
      std::string id = "L" + std::to_string(i);
      add(id, NodeStyle{"logical area " + to_string(logical[i].hull) + "\n" +
                                           std::to_string(m.size()) + " copies",
                                       kLogicalAreaFills[i % std::size(kLogicalAreaFills)],
                                       false, {}});
      return group_of[a] = id;
    }
    std::string id = to_string(a);
    add(id, NodeStyle{id + "\n" + content_line(p, a), "white",
                                     p.kind_at(a) == CellKind::Empty, {}});
    return group_of[a] = id;
  };
  for (const auto& a : g.nodes()) assign(a);
  for (const auto& d : diags)
    for (const auto& s : d.subjects) groups[assign(s)].codes.insert(std::string(to_string(d.code)));

  std::vector<std::string> ids(rank.size());
  for (const auto& [id, r] : rank) ids[r] = id;

  std::set<std::pair<std::size_t, std::size_t>> lifted;
  for (const auto& [u, v] : g.edges()) {
    std::size_t ru = rank.at(group_of.at(u));
    std::size_t rv = rank.at(group_of.at(v));
    if (ru != rv) lifted.emplace(ru, rv);
  }

  std::ostringstream out;
  header(out);
  for (const auto& id : ids) out << "  " << quoted(id) << " " << node_attrs(groups.at(id)) << ";\n";
  for (const auto& [u, v] : lifted)
    out << "  " << quoted(ids[u]) << " -> " << quoted(ids[v]) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace

std::string render_dot(const SpreadsheetProgram& p, const std::vector<Diagnostic>& diags,
                       GraphResolution resolution) {
  return resolution == GraphResolution::Cell ? render_cells(p, diags) : render_areas(p, diags);
}

}  // namespace sheetlint
