#include "sheetlint/formula.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace sheetlint {

std::vector<CellAddress> RangeRef::cells() const {
  std::vector<CellAddress> out;
  out.reserve(static_cast<std::size_t>(width()) * static_cast<std::size_t>(height()));
  for (int r = start.row; r <= end.row; ++r)
    for (int c = start.col; c <= end.col; ++c) out.push_back({c, r});
  return out;
}

RangeRef make_range(CellRef a, CellRef b) {
  RangeRef r{a, b};
  if (r.start.col > r.end.col) {
    std::swap(r.start.col, r.end.col);
    std::swap(r.start.col_absolute, r.end.col_absolute);
  }
  if (r.start.row > r.end.row) {
    std::swap(r.start.row, r.end.row);
    std::swap(r.start.row_absolute, r.end.row_absolute);
  }
  return r;
}

std::string to_string(const CellRef& ref) {
  std::string out;
  if (ref.col_absolute) out.push_back('$');
  out += column_name(ref.col);
  if (ref.row_absolute) out.push_back('$');
  out += std::to_string(ref.row);
  return out;
}

std::string to_string(const RangeRef& range) {
  return to_string(range.start) + ":" + to_string(range.end);
}

char op_symbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return '+';
    case BinaryOp::Sub: return '-';
    case BinaryOp::Mul: return '*';
    case BinaryOp::Div: return '/';
  }
  return '?';
}

namespace {
constexpr std::array<std::pair<Function, std::string_view>, 5> kFunctions{{
    {Function::Sum, "SUM"},
    {Function::Avg, "AVG"},
    {Function::Min, "MIN"},
    {Function::Max, "MAX"},
    {Function::Count, "COUNT"},
}};
}  // namespace

std::string_view function_name(Function fn) {
  for (const auto& [f, name] : kFunctions)
    if (f == fn) return name;
  return "?";
}

bool lookup_function(std::string_view name, Function& out) {
  for (const auto& [f, canonical] : kFunctions) {
    if (canonical.size() != name.size()) continue;
    bool same = true;
    for (std::size_t i = 0; i < name.size() && same; ++i)
      same = std::toupper(static_cast<unsigned char>(name[i])) == canonical[i];
    if (same) {
      out = f;
      return true;
    }
  }
  return false;
}

Expr Expr::literal(double value) {
  Expr e;
  e.kind = Kind::Number;
  e.number = value;
  return e;
}

Expr Expr::reference(CellRef ref) {
  Expr e;
  e.kind = Kind::Reference;
  e.ref = ref;
  return e;
}

Expr Expr::range_arg(RangeRef range) {
  Expr e;
  e.kind = Kind::Range;
  e.range = range;
  return e;
}

Expr Expr::negate(Expr child) {
  Expr e;
  e.kind = Kind::Negate;
  e.children.push_back(std::move(child));
  return e;
}

Expr Expr::binary(BinaryOp op, Expr lhs, Expr rhs) {
  Expr e;
  e.kind = Kind::Binary;
  e.op = op;
  e.children.push_back(std::move(lhs));
  e.children.push_back(std::move(rhs));
  return e;
}

Expr Expr::call(Function fn, std::vector<Expr> args) {
  Expr e;
  e.kind = Kind::Call;
  e.function = fn;
  e.children = std::move(args);
  return e;
}

namespace {

void collect_refs(const Expr& e, std::set<CellAddress>& out) {
  switch (e.kind) {
    case Expr::Kind::Reference:
      out.insert(e.ref.address());
      break;
    case Expr::Kind::Range:
      for (int r = e.range.start.row; r <= e.range.end.row; ++r)
        for (int c = e.range.start.col; c <= e.range.end.col; ++c) out.insert({c, r});
      break;
    default:
      for (const auto& child : e.children) collect_refs(child, out);
  }
}

CellRef shift(CellRef ref, int dc, int dr) {
  if (!ref.col_absolute) ref.col += dc;
  if (!ref.row_absolute) ref.row += dr;
  if (ref.col < 1 || ref.row < 1)
    throw std::out_of_range("translated reference leaves the sheet");
  return ref;
}

int precedence(const Expr& e) {
  if (e.kind != Expr::Kind::Binary) return 3;
  return (e.op == BinaryOp::Add || e.op == BinaryOp::Sub) ? 1 : 2;
}

void render(const Expr& e, std::string& out) {
  switch (e.kind) {
    case Expr::Kind::Number:
      out += format_number(e.number);
      return;
    case Expr::Kind::Reference:
      out += to_string(e.ref);
      return;
    case Expr::Kind::Range:
      out += to_string(e.range);
      return;
    case Expr::Kind::Negate: {
      const Expr& child = e.children[0];
      out.push_back('-');
      bool paren = child.kind == Expr::Kind::Binary;
      if (paren) out.push_back('(');
      render(child, out);
      if (paren) out.push_back(')');
      return;
    }
    case Expr::Kind::Binary: {
      int prec = precedence(e);
      const Expr& lhs = e.children[0];
      const Expr& rhs = e.children[1];
      bool lparen = precedence(lhs) < prec;
      bool rparen = precedence(rhs) <= prec;
      if (lparen) out.push_back('(');
      render(lhs, out);
      if (lparen) out.push_back(')');
      out.push_back(op_symbol(e.op));
      if (rparen) out.push_back('(');
      render(rhs, out);
      if (rparen) out.push_back(')');
      return;
    }
    case Expr::Kind::Call: {
      out += function_name(e.function);
      out.push_back('(');
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) out.push_back(',');
        render(e.children[i], out);
      }
      out.push_back(')');
      return;
    }
  }
}

}  // namespace

std::set<CellAddress> referenced_cells(const Expr& e) {
  std::set<CellAddress> out;
  collect_refs(e, out);
  return out;
}

int count_ranges(const Expr& e) {
  if (e.kind == Expr::Kind::Range) return 1;
  int n = 0;
  for (const auto& child : e.children) n += count_ranges(child);
  return n;
}

Expr translate(const Expr& e, int dc, int dr) {
  Expr out = e;
  switch (e.kind) {
    case Expr::Kind::Reference:
      out.ref = shift(e.ref, dc, dr);
      break;
    case Expr::Kind::Range:
      out.range = RangeRef{shift(e.range.start, dc, dr), shift(e.range.end, dc, dr)};
      break;
    default:
      for (auto& child : out.children) child = translate(child, dc, dr);
  }
  return out;
}

std::string render_formula(const Expr& e) {
  std::string out;
  render(e, out);
  return out;
}

std::string format_number(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf.data(), ptr);
}

}  // namespace sheetlint
