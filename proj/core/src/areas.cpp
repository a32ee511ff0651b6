#include "sheetlint/areas.hpp"

#include <array>
#include <map>

namespace sheetlint {
namespace {

void collect_ranges(const Expr& e, Function enclosing, std::vector<std::pair<RangeRef, Function>>& out) {
  if (e.kind == Expr::Kind::Range) {
    out.emplace_back(e.range, enclosing);
    return;
  }
  Function fn = e.kind == Expr::Kind::Call ? e.function : enclosing;
  for (const auto& child : e.children) collect_ranges(child, fn, out);
}

CellKind majority_kind(const SpreadsheetProgram& p, const RangeRef& rect) {
  // Index order doubles as tie-break priority.
  constexpr std::array<CellKind, 4> kPriority{CellKind::Constant, CellKind::Input,
                                              CellKind::Formula, CellKind::Label};
  std::array<int, 4> counts{};
  for (const auto& a : rect.cells()) {
    CellKind k = p.kind_at(a);
    for (std::size_t i = 0; i < kPriority.size(); ++i)
      if (kPriority[i] == k) ++counts[i];
  }
  CellKind best = CellKind::Empty;
  int best_count = 0;
  for (std::size_t i = 0; i < kPriority.size(); ++i) {
    if (counts[i] > best_count) {
      best = kPriority[i];
      best_count = counts[i];
    }
  }
  return best;
}

}  // namespace

RangeRef bounding_rect(const std::vector<CellAddress>& cells) {
  CellRef lo{cells.front().col, cells.front().row, false, false};
  CellRef hi = lo;
  for (const auto& c : cells) {
    lo.col = std::min(lo.col, c.col);
    lo.row = std::min(lo.row, c.row);
    hi.col = std::max(hi.col, c.col);
    hi.row = std::max(hi.row, c.row);
  }
  return RangeRef{lo, hi};
}

std::vector<PhysicalArea> infer_physical_areas(const SpreadsheetProgram& p) {
  std::vector<PhysicalArea> out;
  for (const auto& [addr, content] : p.cells()) {
    const auto* f = std::get_if<Formula>(&content);
    if (!f) continue;
    std::vector<std::pair<RangeRef, Function>> ranges;
    collect_ranges(f->ast, Function::Sum, ranges);
    for (const auto& [rect, fn] : ranges)
      out.push_back(PhysicalArea{rect, addr, fn, majority_kind(p, rect)});
  }
  return out;
}

std::vector<LogicalArea> infer_logical_areas(const SpreadsheetProgram& p) {
  // Keyed by canonical text; members arrive in row-major order.
  std::map<std::string, LogicalArea> groups;
  for (const auto& [addr, content] : p.cells()) {
    const auto* f = std::get_if<Formula>(&content);
    if (!f) continue;
    NormalizedFormula n = normalize(f->ast, addr);
    auto [it, inserted] = groups.try_emplace(n.key());
    if (inserted) it->second.key = std::move(n);
    it->second.members.push_back(addr);
  }
  std::vector<LogicalArea> out;
  for (auto& [key, area] : groups) {
    if (area.members.size() < 2) continue;
    area.hull = bounding_rect(area.members);
    out.push_back(std::move(area));
  }
  std::sort(out.begin(), out.end(), [](const LogicalArea& a, const LogicalArea& b) {
    return a.members.front() < b.members.front();
  });
  return out;
}

std::vector<StructuralGroup> structural_groups(const SpreadsheetProgram& p) {
  std::map<std::string, StructuralGroup> groups;
  for (const auto& [addr, content] : p.cells()) {
    const auto* f = std::get_if<Formula>(&content);
    if (!f) continue;
    Skeleton s = skeleton(normalize(f->ast, addr));
    auto [it, inserted] = groups.try_emplace(s.key());
    if (inserted) it->second.key = std::move(s);
    it->second.members.push_back(addr);
  }
  std::vector<StructuralGroup> out;
  for (auto& [key, group] : groups)
    if (group.members.size() >= 2) out.push_back(std::move(group));
  std::sort(out.begin(), out.end(), [](const StructuralGroup& a, const StructuralGroup& b) {
    return a.members.front() < b.members.front();
  });
  return out;
}

}  // namespace sheetlint
