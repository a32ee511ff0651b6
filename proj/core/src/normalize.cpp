#include "sheetlint/formula.hpp"

namespace sheetlint {
namespace {

CellRef relative_to(CellRef ref, CellAddress origin) {
  if (!ref.col_absolute) ref.col -= origin.col;
  if (!ref.row_absolute) ref.row -= origin.row;
  return ref;
}

Expr normalize_tree(const Expr& e, CellAddress origin) {
  Expr out = e;
  switch (e.kind) {
    case Expr::Kind::Reference:
      out.ref = relative_to(e.ref, origin);
      break;
    case Expr::Kind::Range:
      out.range.start = relative_to(e.range.start, origin);
      out.range.end = relative_to(e.range.end, origin);
      break;
    default:
      for (auto& child : out.children) child = normalize_tree(child, origin);
  }
  return out;
}

Expr erase(const Expr& e) {
  Expr out = e;
  switch (e.kind) {
    case Expr::Kind::Number:
      out.number = 0.0;
      break;
    case Expr::Kind::Reference:
      out.ref = CellRef{0, 0, false, false};
      break;
    case Expr::Kind::Range:
      out.range = RangeRef{CellRef{0, 0, false, false}, CellRef{0, 0, false, false}};
      break;
    default:
      for (auto& child : out.children) child = erase(child);
  }
  return out;
}

// R1C1-flavoured axis text: "R[-1]" for an offset, "R3" for an absolute row.
void axis_key(std::string& out, char tag, int value, bool absolute) {
  out.push_back(tag);
  if (absolute) {
    out += std::to_string(value);
  } else {
    out.push_back('[');
    out += std::to_string(value);
    out.push_back(']');
  }
}

void ref_key(std::string& out, const CellRef& r) {
  axis_key(out, 'R', r.row, r.row_absolute);
  axis_key(out, 'C', r.col, r.col_absolute);
}

// Prefix form so that keys never depend on infix parenthesization.
void tree_key(const Expr& e, std::string& out, bool shape_only) {
  switch (e.kind) {
    case Expr::Kind::Number:
      out += shape_only ? "#" : format_number(e.number);
      return;
    case Expr::Kind::Reference:
      if (shape_only) {
        out.push_back('@');
      } else {
        ref_key(out, e.ref);
      }
      return;
    case Expr::Kind::Range:
      if (shape_only) {
        out += "@:@";
      } else {
        ref_key(out, e.range.start);
        out.push_back(':');
        ref_key(out, e.range.end);
      }
      return;
    case Expr::Kind::Negate:
      out += "neg(";
      tree_key(e.children[0], out, shape_only);
      out.push_back(')');
      return;
    case Expr::Kind::Binary:
      out.push_back(op_symbol(e.op));
      out.push_back('(');
      tree_key(e.children[0], out, shape_only);
      out.push_back(',');
      tree_key(e.children[1], out, shape_only);
      out.push_back(')');
      return;
    case Expr::Kind::Call:
      out += function_name(e.function);
      out.push_back('(');
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) out.push_back(',');
        tree_key(e.children[i], out, shape_only);
      }
      out.push_back(')');
      return;
  }
}

bool axes_compatible(int a, bool a_abs, int b, bool b_abs) {
  return a_abs != b_abs || a == b;
}

bool refs_compatible(const CellRef& a, const CellRef& b) {
  return axes_compatible(a.col, a.col_absolute, b.col, b.col_absolute) &&
         axes_compatible(a.row, a.row_absolute, b.row, b.row_absolute);
}

bool compatible(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.children.size() != b.children.size()) return false;
  switch (a.kind) {
    case Expr::Kind::Number:
      return true;
    case Expr::Kind::Reference:
      return refs_compatible(a.ref, b.ref);
    case Expr::Kind::Range:
      return refs_compatible(a.range.start, b.range.start) &&
             refs_compatible(a.range.end, b.range.end);
    case Expr::Kind::Binary:
      if (a.op != b.op) return false;
      break;
    case Expr::Kind::Call:
      if (a.function != b.function) return false;
      break;
    case Expr::Kind::Negate:
      break;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!compatible(a.children[i], b.children[i])) return false;
  return true;
}

}  // namespace

NormalizedFormula normalize(const Expr& ast, CellAddress origin) {
  return NormalizedFormula{normalize_tree(ast, origin)};
}

Skeleton skeleton(const NormalizedFormula& n) { return Skeleton{erase(n.tree)}; }

std::string NormalizedFormula::key() const {
  std::string out;
  tree_key(tree, out, false);
  return out;
}

std::string Skeleton::key() const {
  std::string out;
  tree_key(tree, out, true);
  return out;
}

bool differs_only_in_markers_or_literals(const NormalizedFormula& a,
                                         const NormalizedFormula& b) {
  return compatible(a.tree, b.tree);
}

}  // namespace sheetlint
