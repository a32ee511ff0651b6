#include "sheetlint/detectors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace sheetlint {

std::string_view to_string(DiagnosticCode code) {
  switch (code) {
    case DiagnosticCode::D1_BLANK_REF: return "D1_BLANK_REF";
    case DiagnosticCode::D2_WRONG_TYPE_IN_RANGE: return "D2_WRONG_TYPE_IN_RANGE";
    case DiagnosticCode::D3_INCORRECT_RANGE: return "D3_INCORRECT_RANGE";
    case DiagnosticCode::D4_AREA_MIXUP: return "D4_AREA_MIXUP";
    case DiagnosticCode::D5_CONSTANT_OVERWRITE: return "D5_CONSTANT_OVERWRITE";
    case DiagnosticCode::D6_COPY_MISREFERENCE: return "D6_COPY_MISREFERENCE";
    case DiagnosticCode::G_CYCLE: return "G_CYCLE";
    case DiagnosticCode::G_DIV_ZERO: return "G_DIV_ZERO";
  }
  return "?";
}

std::string_view to_string(Severity s) {
  return s == Severity::Error ? "error" : "warning";
}

RelatedArea related(const PhysicalArea& a) {
  return RelatedArea{RelatedArea::Kind::Physical, a.rect, a.consumer, a.function};
}

RelatedArea related(const LogicalArea& a) {
  return RelatedArea{RelatedArea::Kind::Logical, a.hull, std::nullopt, std::nullopt};
}

namespace {

std::string area_text(const PhysicalArea& a) {
  return std::string(function_name(a.function)) + "(" + to_string(a.rect) + ") in " +
         to_string(a.consumer);
}

std::string addr_list(const std::vector<CellAddress>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ", ";
    out += to_string(cells[i]);
  }
  return out;
}

void collect_direct_refs(const Expr& e, std::set<CellAddress>& out) {
  if (e.kind == Expr::Kind::Reference) out.insert(e.ref.address());
  for (const auto& child : e.children) collect_direct_refs(child, out);
}

// Leaves of a formula built only from '+' over plain references, left to
// right. Empty when the formula has any other node.
bool plus_chain(const Expr& e, std::vector<CellAddress>& leaves) {
  if (e.kind == Expr::Kind::Reference) {
    leaves.push_back(e.ref.address());
    return true;
  }
  if (e.kind == Expr::Kind::Binary && e.op == BinaryOp::Add)
    return plus_chain(e.children[0], leaves) && plus_chain(e.children[1], leaves);
  return false;
}

// The number a careless edit of a label would most likely produce: its leading
// digits, else 1.
std::string edited_number(const std::string& label) {
  std::size_t n = 0;
  while (n < label.size() && n < 9 && std::isdigit(static_cast<unsigned char>(label[n]))) ++n;
  return n ? std::to_string(std::stol(label.substr(0, n))) : "1";
}

}  // namespace

std::vector<Diagnostic> detect_blank_ref(const SpreadsheetProgram& p) {
  std::vector<Diagnostic> out;
  std::vector<PhysicalArea> areas = infer_physical_areas(p);
  for (const auto& [addr, content] : p.cells()) {
    const auto* f = std::get_if<Formula>(&content);
    if (!f) continue;
    std::set<CellAddress> direct;
    collect_direct_refs(f->ast, direct);
    for (const auto& cell : referenced_cells(f->ast)) {
      if (p.kind_at(cell) != CellKind::Empty) continue;
      Diagnostic d{DiagnosticCode::D1_BLANK_REF, Severity::Warning, {cell}, std::nullopt, {}};
      auto via = std::find_if(areas.begin(), areas.end(), [&](const PhysicalArea& a) {
        return a.consumer == addr && a.rect.contains(cell);
      });
      if (!direct.count(cell) && via != areas.end()) {
        d.area = related(*via);
        d.message = "empty cell " + to_string(cell) + " lies inside " + area_text(*via) +
                    "; it is skipped now but will change the result once filled";
      } else {
        d.message = "formula in " + to_string(addr) + " references empty cell " +
                    to_string(cell) + ", which reads as 0";
      }
      out.push_back(std::move(d));
    }
  }
  return out;
}

std::vector<Diagnostic> detect_wrong_type_in_range(const SpreadsheetProgram& p) {
  std::vector<Diagnostic> out;
  for (const auto& area : infer_physical_areas(p)) {
    for (const auto& cell : area.rect.cells()) {
      const CellContent* c = p.find(cell);
      const auto* label = c ? std::get_if<Label>(c) : nullptr;
      if (!label) continue;
      out.push_back(Diagnostic{
          DiagnosticCode::D2_WRONG_TYPE_IN_RANGE, Severity::Warning, {cell}, related(area),
          "label \"" + label->text + "\" in " + to_string(cell) + " lies inside " +
              area_text(area) +
              "; it is skipped now, but editing it to " + edited_number(label->text) +
              " instead of \"" + label->text + "\" would silently join the aggregate"});
    }
  }
  return out;
}

std::vector<Diagnostic> detect_incorrect_range(const SpreadsheetProgram& p) {
  std::vector<Diagnostic> out;
  for (const auto& area : infer_physical_areas(p)) {
    if (area.majority_type == CellKind::Empty) continue;
    const RangeRef& r = area.rect;
    // Column ranges (and ties) grow by rows, row ranges by columns.
    std::vector<CellAddress> beyond;
    if (r.height() >= r.width()) {
      for (int c = r.start.col; c <= r.end.col; ++c) {
        if (r.start.row > 1) beyond.push_back({c, r.start.row - 1});
        beyond.push_back({c, r.end.row + 1});
      }
    } else {
      for (int row = r.start.row; row <= r.end.row; ++row) {
        if (r.start.col > 1) beyond.push_back({r.start.col - 1, row});
        beyond.push_back({r.end.col + 1, row});
      }
    }
    std::sort(beyond.begin(), beyond.end());
    for (const auto& cell : beyond) {
      if (cell == area.consumer) continue;
      if (p.kind_at(cell) != area.majority_type) continue;
      out.push_back(Diagnostic{
          DiagnosticCode::D3_INCORRECT_RANGE, Severity::Warning, {cell}, related(area),
          to_string(cell) + " holds a " + std::string(to_string(area.majority_type)) +
              " like the cells of " + area_text(area) +
              " but lies just outside the range; appended values are not picked up"});
    }
  }
  return out;
}

std::vector<Diagnostic> detect_area_mixup(const SpreadsheetProgram& p,
                                          const DetectorOptions& opts) {
  std::vector<Diagnostic> out;
  std::vector<PhysicalArea> areas = infer_physical_areas(p);
  for (std::size_t i = 0; i < areas.size(); ++i) {
    for (std::size_t j = i + 1; j < areas.size(); ++j) {
      const auto& a = areas[i];
      const auto& b = areas[j];
      if (!a.rect.overlaps(b.rect)) continue;
      CellRef lo{std::max(a.rect.start.col, b.rect.start.col),
                 std::max(a.rect.start.row, b.rect.start.row), false, false};
      CellRef hi{std::min(a.rect.end.col, b.rect.end.col),
                 std::min(a.rect.end.row, b.rect.end.row), false, false};
      std::vector<CellAddress> subjects{a.consumer};
      if (b.consumer != a.consumer) subjects.push_back(b.consumer);
      std::sort(subjects.begin(), subjects.end());
      out.push_back(Diagnostic{DiagnosticCode::D4_AREA_MIXUP, Severity::Warning, subjects,
                               related(a),
                               area_text(a) + " and " + area_text(b) + " overlap in " +
                                   to_string(RangeRef{lo, hi})});
    }
  }
  for (const auto& [addr, content] : p.cells()) {
    const auto* f = std::get_if<Formula>(&content);
    if (!f) continue;
    std::vector<CellAddress> leaves;
    if (!plus_chain(f->ast, leaves)) continue;
    if (static_cast<int>(leaves.size()) < opts.chain_min_terms) continue;
    bool same_col = std::all_of(leaves.begin(), leaves.end(),
                                [&](CellAddress c) { return c.col == leaves.front().col; });
    bool same_row = std::all_of(leaves.begin(), leaves.end(),
                                [&](CellAddress c) { return c.row == leaves.front().row; });
    if (!same_col && !same_row) continue;
    std::vector<CellAddress> sorted = leaves;
    std::sort(sorted.begin(), sorted.end());
    RangeRef span = bounding_rect(sorted);
    out.push_back(Diagnostic{
        DiagnosticCode::D4_AREA_MIXUP, Severity::Warning, {addr}, std::nullopt,
        "formula in " + to_string(addr) + " adds " + std::to_string(leaves.size()) +
            " cells of one " + (same_col ? "column" : "row") + " by repeated '+' (" +
            addr_list(leaves) + "); consider a grouping function over a range such as SUM(" +
            to_string(span) + ") and check that the sum is updated when areas move"});
  }
  return out;
}

std::vector<Diagnostic> detect_constant_overwrite(const SpreadsheetProgram& p,
                                                  const DetectorOptions& opts) {
  std::vector<Diagnostic> out;
  for (const auto& area : infer_logical_areas(p)) {
    if (static_cast<int>(area.members.size()) < opts.overwrite_min_members) continue;
    if (!area.single_line()) continue;
    std::set<CellAddress> members(area.members.begin(), area.members.end());
    // Only sporadic interruptions count: a hull that is mostly non-members is
    // a sparse layout (e.g. subtotals between data rows), not an overwrite.
    std::size_t hull_cells = static_cast<std::size_t>(area.hull.width()) *
                             static_cast<std::size_t>(area.hull.height());
    if (opts.overwrite_sporadic_only && hull_cells - members.size() >= members.size())
      continue;
    for (const auto& cell : area.hull.cells()) {
      if (cell == area.members.front() || cell == area.members.back()) continue;
      if (members.count(cell)) continue;
      CellKind k = p.kind_at(cell);
      if (k != CellKind::Constant && k != CellKind::Input) continue;
      out.push_back(Diagnostic{
          DiagnosticCode::D5_CONSTANT_OVERWRITE, Severity::Warning, {cell}, related(area),
          to_string(cell) + " holds a " + std::string(to_string(k)) +
              " inside a run of copied formulas (" + to_string(area.hull) +
              "); a formula may have been overwritten by a value"});
    }
  }
  return out;
}

std::vector<Diagnostic> detect_copy_misreference(const SpreadsheetProgram& p,
                                                 const DetectorOptions& opts) {
  std::vector<Diagnostic> out;
  for (const auto& group : structural_groups(p)) {
    std::size_t n = group.members.size();
    if (static_cast<int>(n) < opts.misreference_min_members) continue;
    std::map<std::string, std::pair<NormalizedFormula, std::vector<CellAddress>>> parts;
    for (const auto& cell : group.members) {
      NormalizedFormula nf = normalize(p.formula_at(cell)->ast, cell);
      auto& slot = parts[nf.key()];
      slot.first = std::move(nf);
      slot.second.push_back(cell);
    }
    const std::pair<NormalizedFormula, std::vector<CellAddress>>* majority = nullptr;
    for (const auto& [key, part] : parts)
      if (part.second.size() * 2 > n) majority = &part;
    if (!majority) continue;
    LogicalArea majority_area{majority->second, majority->first,
                              bounding_rect(majority->second)};
    for (const auto& [key, part] : parts) {
      if (&part == majority) continue;
      if (!differs_only_in_markers_or_literals(part.first, majority->first)) continue;
      for (const auto& cell : part.second) {
        out.push_back(Diagnostic{
            DiagnosticCode::D6_COPY_MISREFERENCE, Severity::Warning, {cell},
            related(majority_area),
            "formula in " + to_string(cell) + " (=" +
                render_formula(p.formula_at(cell)->ast) + ") deviates from its " +
                std::to_string(majority->second.size()) + " of " + std::to_string(n) +
                " copies only by an absolute reference or a constant"});
      }
    }
  }
  return out;
}

void sort_diagnostics(std::vector<Diagnostic>& diags) {
  std::sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
    if (a.code != b.code) return a.code < b.code;
    if (a.subjects != b.subjects) return a.subjects < b.subjects;
    return a.message < b.message;
  });
  diags.erase(std::unique(diags.begin(), diags.end()), diags.end());
}

std::vector<Diagnostic> detect_all(const SpreadsheetProgram& p, const EvalResult* eval,
                                   const DetectorOptions& opts) {
  std::vector<Diagnostic> out;
  auto append = [&](std::vector<Diagnostic> more) {
    out.insert(out.end(), std::make_move_iterator(more.begin()),
               std::make_move_iterator(more.end()));
  };
  append(detect_blank_ref(p));
  append(detect_wrong_type_in_range(p));
  append(detect_incorrect_range(p));
  append(detect_area_mixup(p, opts));
  append(detect_constant_overwrite(p, opts));
  append(detect_copy_misreference(p, opts));
  if (eval) {
    for (const auto& rd : eval->diagnostics) {
      if (rd.kind == RuntimeDiagnosticKind::Cycle) {
        out.push_back(Diagnostic{DiagnosticCode::G_CYCLE, Severity::Error, rd.cycle,
                                 std::nullopt,
                                 "cyclic dependency: " + addr_list(rd.cycle)});
      } else if (rd.kind == RuntimeDiagnosticKind::DivByZero) {
        out.push_back(Diagnostic{DiagnosticCode::G_DIV_ZERO, Severity::Warning, {rd.cell},
                                 std::nullopt,
                                 "formula in " + to_string(rd.cell) + " divides by zero"});
      }
    }
  }
  sort_diagnostics(out);
  return out;
}

}  // namespace sheetlint
