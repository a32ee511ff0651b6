#include "fault_injection.hpp"

#include <algorithm>
#include <stdexcept>

namespace sheetlint::testing {
namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

double amount(std::mt19937_64& rng) { return 10.0 * uniform(rng, 1, 99); }

CellRef rel(CellAddress a) { return CellRef{a.col, a.row, false, false}; }
CellRef abs_ref(CellAddress a) { return CellRef{a.col, a.row, true, true}; }

Expr sum_of(CellAddress from, CellAddress to) {
  std::vector<Expr> args;
  args.push_back(Expr::range_arg(make_range(rel(from), rel(to))));
  return Expr::call(Function::Sum, std::move(args));
}

struct Ledger {
  SpreadsheetProgram program;
  int x_col = 0;
  int first_row = 0;
  int n = 0;
  CellAddress rate;

  CellAddress x(int k) const { return {x_col, first_row + k}; }
  CellAddress y(int k) const { return {x_col + 1, first_row + k}; }
  Expr weighted(int k, bool absolute_item) const {
    return Expr::binary(BinaryOp::Mul,
                        Expr::reference(absolute_item ? abs_ref(x(k)) : rel(x(k))),
                        Expr::reference(abs_ref(rate)));
  }
};

Ledger make_ledger(std::mt19937_64& rng) {
  Ledger l;
  l.x_col = uniform(rng, 1, 5);
  l.first_row = uniform(rng, 3, 6);
  l.n = uniform(rng, 5, 9);
  l.rate = {l.x_col + 2, 1};

  SpreadsheetProgram::CellMap cells;
  cells.emplace(l.rate, Constant{0.5 * uniform(rng, 1, 4)});
  cells.emplace(CellAddress{l.x_col, l.first_row - 1}, Label{"Amount"});
  cells.emplace(CellAddress{l.x_col + 1, l.first_row - 1}, Label{"Weighted"});
  for (int k = 0; k < l.n; ++k) {
    cells.emplace(l.x(k), Constant{amount(rng)});
    cells.emplace(l.y(k), Formula{l.weighted(k, false)});
  }
  int total_row = l.first_row + l.n + 1;
  cells.emplace(CellAddress{l.x_col, total_row}, Formula{sum_of(l.x(0), l.x(l.n - 1))});
  cells.emplace(CellAddress{l.x_col + 1, total_row}, Formula{sum_of(l.y(0), l.y(l.n - 1))});
  l.program = SpreadsheetProgram(std::move(cells));
  return l;
}

}  // namespace

SpreadsheetProgram ledger_layout(std::mt19937_64& rng, int& x_col, int& first_row, int& n) {
  Ledger l = make_ledger(rng);
  x_col = l.x_col;
  first_row = l.first_row;
  n = l.n;
  return l.program;
}

SpreadsheetProgram subtotal_layout(std::mt19937_64& rng) {
  int col = uniform(rng, 1, 5);
  int row = uniform(rng, 2, 5);
  int a = uniform(rng, 2, 4);
  int b = uniform(rng, 2, 4);

  SpreadsheetProgram::CellMap cells;
  for (int k = 0; k < a; ++k) cells.emplace(CellAddress{col, row + k}, Constant{amount(rng)});
  CellAddress s1{col + 1, row + a};
  cells.emplace(s1, Formula{sum_of({col, row}, {col, row + a - 1})});
  int row2 = row + a + 1;
  for (int k = 0; k < b; ++k) cells.emplace(CellAddress{col, row2 + k}, Constant{amount(rng)});
  CellAddress s2{col + 1, row2 + b};
  cells.emplace(s2, Formula{sum_of({col, row2}, {col, row2 + b - 1})});
  cells.emplace(CellAddress{col + 1, row2 + b + 1},
                Formula{Expr::binary(BinaryOp::Add, Expr::reference(rel(s1)),
                                     Expr::reference(rel(s2)))});
  return SpreadsheetProgram(std::move(cells));
}

Injection inject(DiagnosticCode code, unsigned seed) {
  std::mt19937_64 rng(seed * 7919ULL + static_cast<unsigned>(code));

  if (code == DiagnosticCode::D4_AREA_MIXUP) {
    SpreadsheetProgram clean = subtotal_layout(rng);
    // Rebuild the total as a chain over every item and drop the subtotals.
    SpreadsheetProgram::CellMap cells;
    std::vector<CellAddress> items;
    CellAddress total{};
    for (const auto& [addr, content] : clean.cells()) {
      if (std::holds_alternative<Constant>(content)) {
        cells.emplace(addr, content);
        items.push_back(addr);
      } else {
        total = std::max(total, addr);
      }
    }
    Expr chain = Expr::reference(rel(items[0]));
    for (std::size_t i = 1; i < items.size(); ++i)
      chain = Expr::binary(BinaryOp::Add, std::move(chain), Expr::reference(rel(items[i])));
    cells.emplace(total, Formula{std::move(chain)});
    return {clean, SpreadsheetProgram(std::move(cells)), code, total,
            "total at " + to_string(total) + " rewritten as a chain of " +
                std::to_string(items.size()) + " items"};
  }

  Ledger l = make_ledger(rng);
  int k = uniform(rng, 1, l.n - 2);
  switch (code) {
    case DiagnosticCode::D1_BLANK_REF:
      return {l.program, l.program.without_cell(l.x(k)), code, l.x(k),
              "deleted item " + to_string(l.x(k))};
    case DiagnosticCode::D2_WRONG_TYPE_IN_RANGE:
      return {l.program, l.program.with_cell(l.x(k), Label{"n/a"}), code, l.x(k),
              "item " + to_string(l.x(k)) + " replaced by a label"};
    case DiagnosticCode::D3_INCORRECT_RANGE: {
      CellAddress extra{l.x_col, l.first_row + l.n};
      return {l.program, l.program.with_cell(extra, Constant{amount(rng)}), code, extra,
              "item appended at " + to_string(extra) + " outside the summed range"};
    }
    case DiagnosticCode::D5_CONSTANT_OVERWRITE:
      return {l.program, l.program.with_cell(l.y(k), Constant{amount(rng)}), code, l.y(k),
              "formula " + to_string(l.y(k)) + " overwritten by a constant"};
    case DiagnosticCode::D6_COPY_MISREFERENCE:
      return {l.program, l.program.with_cell(l.y(k), Formula{l.weighted(k, true)}), code,
              l.y(k), "reference in " + to_string(l.y(k)) + " made absolute"};
    default:
      throw std::invalid_argument("no injection for " + std::string(to_string(code)));
  }
}

bool detected(const Injection& inj) {
  for (const auto& d : detect_all(inj.faulty)) {
    if (d.code != inj.expected) continue;
    if (std::find(d.subjects.begin(), d.subjects.end(), inj.target) != d.subjects.end())
      return true;
  }
  return false;
}

}  // namespace sheetlint::testing
