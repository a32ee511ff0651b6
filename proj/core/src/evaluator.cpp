#include "sheetlint/evaluator.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <set>

#include "sheetlint/dataflow.hpp"
#include "sheetlint/errors.hpp"

namespace sheetlint {

std::string_view to_string(FaultKind kind) {
  switch (kind) {
    case FaultKind::DivByZero: return "DivByZero";
    case FaultKind::TypeError: return "TypeError";
    case FaultKind::Cycle: return "Cycle";
    case FaultKind::Propagated: return "Propagated";
  }
  return "?";
}

std::string_view to_string(RuntimeDiagnosticKind kind) {
  switch (kind) {
    case RuntimeDiagnosticKind::BlankInArithmetic: return "BlankInArithmetic";
    case RuntimeDiagnosticKind::SkippedBlank: return "SkippedBlank";
    case RuntimeDiagnosticKind::SkippedNonNumeric: return "SkippedNonNumeric";
    case RuntimeDiagnosticKind::TypeError: return "TypeError";
    case RuntimeDiagnosticKind::DivByZero: return "DivByZero";
    case RuntimeDiagnosticKind::Cycle: return "Cycle";
  }
  return "?";
}

bool operator==(const Value& a, const Value& b) {
  if (a.is_number() && b.is_number())
    return std::bit_cast<std::uint64_t>(a.number()) ==
           std::bit_cast<std::uint64_t>(b.number());
  return a.v_ == b.v_;
}

std::string to_string(const Value& v) {
  if (v.is_number()) return format_number(v.number());
  if (v.is_blank()) return "<blank>";
  if (v.is_text()) return "\"" + v.text() + "\"";
  return "#" + std::string(to_string(v.fault()));
}

Value EvalResult::at(CellAddress addr) const {
  auto it = values.find(addr);
  return it == values.end() ? Value{} : it->second;
}

namespace {

using Lookup = std::function<Value(CellAddress)>;

// Evaluates one formula given a way to read already-computed cells. Faults
// keep their kind inside a formula and become Propagated when another cell
// reads them.
class FormulaEvaluator {
 public:
  FormulaEvaluator(CellAddress host, const Lookup& lookup,
                   std::vector<RuntimeDiagnostic>& diags)
      : host_(host), lookup_(lookup), diags_(diags) {}

  Value eval(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Number:
        return e.number;
      case Expr::Kind::Reference:
        return read_scalar(e.ref.address());
      case Expr::Kind::Range:
        // Unreachable for parsed formulas; ranges only appear under calls.
        return Fault{FaultKind::TypeError};
      case Expr::Kind::Negate: {
        Value v = eval(e.children[0]);
        if (v.is_fault()) return v;
        return -v.number();
      }
      case Expr::Kind::Binary:
        return binary(e);
      case Expr::Kind::Call:
        return call(e);
    }
    return Fault{FaultKind::TypeError};
  }

 private:
  void note(RuntimeDiagnosticKind kind, std::optional<CellAddress> subject) {
    diags_.push_back(RuntimeDiagnostic{kind, host_, subject, {}});
  }

  Value read_scalar(CellAddress addr) {
    Value v = lookup_(addr);
    if (v.is_number()) return v;
    if (v.is_blank()) {
      note(RuntimeDiagnosticKind::BlankInArithmetic, addr);
      return 0.0;
    }
    if (v.is_text()) {
      note(RuntimeDiagnosticKind::TypeError, addr);
      return Fault{FaultKind::TypeError};
    }
    return Fault{FaultKind::Propagated};
  }

  Value binary(const Expr& e) {
    Value lhs = eval(e.children[0]);
    Value rhs = eval(e.children[1]);
    if (lhs.is_fault()) return lhs;
    if (rhs.is_fault()) return rhs;
    double a = lhs.number();
    double b = rhs.number();
    switch (e.op) {
      case BinaryOp::Add: return a + b;
      case BinaryOp::Sub: return a - b;
      case BinaryOp::Mul: return a * b;
      case BinaryOp::Div:
        if (b == 0.0) {
          note(RuntimeDiagnosticKind::DivByZero, std::nullopt);
          return Fault{FaultKind::DivByZero};
        }
        return a / b;
    }
    return Fault{FaultKind::TypeError};
  }

  Value call(const Expr& e) {
    std::vector<double> items;
    std::optional<Value> fault;
    for (const auto& arg : e.children) {
      if (arg.kind == Expr::Kind::Range) {
        for (const auto& addr : arg.range.cells()) {
          Value v = lookup_(addr);
          if (v.is_number()) {
            items.push_back(v.number());
          } else if (v.is_blank()) {
            note(RuntimeDiagnosticKind::SkippedBlank, addr);
          } else if (v.is_text()) {
            note(RuntimeDiagnosticKind::SkippedNonNumeric, addr);
          } else if (!fault) {
            fault = Value{Fault{FaultKind::Propagated}};
          }
        }
      } else {
        Value v = eval(arg);
        if (v.is_fault()) {
          if (!fault) fault = v;
        } else {
          items.push_back(v.number());
        }
      }
    }
    if (fault) return *fault;
    return aggregate(e.function, items);
  }

  // Fold order and comparisons match the interval aggregate exactly, so
  // degenerate interval evaluation reproduces these bits.
  Value aggregate(Function fn, const std::vector<double>& items) {
    switch (fn) {
      case Function::Count:
        return static_cast<double>(items.size());
      case Function::Sum:
        return items.empty() ? 0.0 : sum(items);
      case Function::Avg:
        if (items.empty()) {
          note(RuntimeDiagnosticKind::DivByZero, std::nullopt);
          return Fault{FaultKind::DivByZero};
        }
        return sum(items) / static_cast<double>(items.size());
      case Function::Min:
      case Function::Max: {
        if (items.empty()) return 0.0;
        double acc = items.front();
        for (std::size_t i = 1; i < items.size(); ++i) {
          if (fn == Function::Min ? items[i] < acc : items[i] > acc) acc = items[i];
        }
        return acc;
      }
    }
    return Fault{FaultKind::TypeError};
  }

  static double sum(const std::vector<double>& items) {
    double acc = items.front();
    for (std::size_t i = 1; i < items.size(); ++i) acc += items[i];
    return acc;
  }

  CellAddress host_;
  const Lookup& lookup_;
  std::vector<RuntimeDiagnostic>& diags_;
};

Value evaluate_stored(const SpreadsheetInstance& instance, CellAddress addr,
                      const CellContent& content, const Lookup& lookup,
                      std::vector<RuntimeDiagnostic>& diags) {
  return std::visit(
      [&](const auto& c) -> Value {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Constant>) {
          return c.value;
        } else if constexpr (std::is_same_v<T, Input>) {
          return instance.input_value(addr);
        } else if constexpr (std::is_same_v<T, Label>) {
          return Text{c.text};
        } else {
          return FormulaEvaluator(addr, lookup, diags).eval(c.ast);
        }
      },
      content);
}

EvalResult evaluate_in_order(const SpreadsheetInstance& instance,
                             const std::vector<CellAddress>& order,
                             std::map<CellAddress, Value> seeded = {}) {
  const SpreadsheetProgram& p = instance.program();
  EvalResult result;
  result.values = std::move(seeded);
  Lookup lookup = [&](CellAddress a) { return result.at(a); };
  for (const auto& addr : order) {
    if (result.values.count(addr)) continue;
    const CellContent* content = p.find(addr);
    if (!content) continue;
    result.values.emplace(
        addr, evaluate_stored(instance, addr, *content, lookup, result.diagnostics));
  }
  return result;
}

}  // namespace

EvalResult eval_instance(const SpreadsheetInstance& instance) {
  return evaluate_in_order(instance, topo_order(build_graph(instance.program())));
}

EvalResult eval_instance_tolerant(const SpreadsheetInstance& instance) {
  const SpreadsheetProgram& p = instance.program();
  DependencyGraph g = build_graph(p);
  try {
    return evaluate_in_order(instance, topo_order(g));
  } catch (const CyclicDependency& cyc) {
    // Cells that can reach themselves are on a cycle; everything they feed
    // is poisoned.
    std::map<CellAddress, Value> seeded;
    std::set<CellAddress> on_cycle;
    for (const auto& n : g.nodes()) {
      if (!g.direct_precedents(n).empty() && precedents(g, n, true).count(n))
        on_cycle.insert(n);
    }
    for (const auto& c : on_cycle) {
      seeded[c] = Fault{FaultKind::Cycle};
      for (const auto& d : dependents(g, c, true))
        if (!on_cycle.count(d) && p.find(d)) seeded.emplace(d, Fault{FaultKind::Propagated});
    }
    // Order the rest by the acyclic remainder of the graph.
    std::vector<CellAddress> order;
    std::map<CellAddress, std::size_t> indegree;
    std::set<CellAddress> ready;
    for (const auto& n : g.nodes()) {
      if (seeded.count(n)) continue;
      std::size_t d = 0;
      for (const auto& u : g.direct_precedents(n))
        if (!seeded.count(u)) ++d;
      indegree[n] = d;
      if (d == 0) ready.insert(n);
    }
    while (!ready.empty()) {
      CellAddress u = *ready.begin();
      ready.erase(ready.begin());
      order.push_back(u);
      for (const auto& v : g.direct_dependents(u))
        if (indegree.count(v) && --indegree[v] == 0) ready.insert(v);
    }
    EvalResult result = evaluate_in_order(instance, order, std::move(seeded));
    result.diagnostics.insert(
        result.diagnostics.begin(),
        RuntimeDiagnostic{RuntimeDiagnosticKind::Cycle, cyc.cycle().front(), std::nullopt,
                          cyc.cycle()});
    return result;
  }
}

Value eval_cell(const SpreadsheetInstance& instance, CellAddress addr, EvalMemo& memo) {
  if (auto it = memo.values.find(addr); it != memo.values.end()) return it->second;
  const SpreadsheetProgram& p = instance.program();

  // Iterative post-order DFS over the formula references not yet in the
  // memo. A grey node seen again is a cycle.
  enum class Mark { Grey, Black };
  std::map<CellAddress, Mark> mark;
  std::vector<CellAddress> order;
  struct Frame {
    CellAddress cell;
    std::vector<CellAddress> next;
    std::size_t i = 0;
  };
  auto children_of = [&](CellAddress a) {
    std::vector<CellAddress> out;
    if (const Formula* f = p.formula_at(a)) {
      for (const auto& r : referenced_cells(f->ast))
        if (!memo.values.count(r)) out.push_back(r);
    }
    return out;
  };
  std::vector<Frame> stack;
  stack.push_back({addr, children_of(addr)});
  mark[addr] = Mark::Grey;
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.i < top.next.size()) {
      CellAddress child = top.next[top.i++];
      auto m = mark.find(child);
      if (m == mark.end()) {
        mark[child] = Mark::Grey;
        stack.push_back({child, children_of(child)});
      } else if (m->second == Mark::Grey) {
        std::vector<CellAddress> cycle;
        std::size_t k = stack.size();
        while (k-- > 0) {
          cycle.push_back(stack[k].cell);
          if (stack[k].cell == child) break;
        }
        // Collected top-down, each cell is read by the next one: data-flow order.
        std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()),
                    cycle.end());
        throw CyclicDependency(std::move(cycle));
      }
    } else {
      mark[top.cell] = Mark::Black;
      order.push_back(top.cell);
      stack.pop_back();
    }
  }

  Lookup lookup = [&](CellAddress a) {
    auto it = memo.values.find(a);
    return it == memo.values.end() ? Value{} : it->second;
  };
  for (const auto& cell : order) {
    const CellContent* content = p.find(cell);
    Value v = content ? evaluate_stored(instance, cell, *content, lookup, memo.diagnostics)
                      : Value{};
    memo.values.emplace(cell, std::move(v));
  }
  return memo.values.at(addr);
}

}  // namespace sheetlint
