#include "sheetlint/interval_oracle.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "sheetlint/dataflow.hpp"
#include "sheetlint/errors.hpp"

namespace sheetlint {

std::string_view to_string(IntervalFaultKind kind) {
  switch (kind) {
    case IntervalFaultKind::DivisorContainsZero: return "DivisorContainsZero";
    case IntervalFaultKind::EmptyAggregate: return "EmptyAggregate";
    case IntervalFaultKind::TypeError: return "TypeError";
    case IntervalFaultKind::Cycle: return "Cycle";
    case IntervalFaultKind::Propagated: return "Propagated";
  }
  return "?";
}

std::string to_string(const Bound& b) {
  if (const auto* iv = std::get_if<Interval>(&b)) return to_string(*iv);
  return "#" + std::string(to_string(std::get<IntervalFault>(b).kind));
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::NoSymptom: return "NoSymptom";
    case Verdict::SymptomValueOutside: return "SymptomValueOutside";
    case Verdict::SymptomModelMismatch: return "SymptomModelMismatch";
    case Verdict::SymptomBoth: return "SymptomBoth";
    case Verdict::NotJudged: return "NotJudged";
  }
  return "?";
}

bool is_symptom(Verdict v) {
  return v == Verdict::SymptomValueOutside || v == Verdict::SymptomModelMismatch ||
         v == Verdict::SymptomBoth;
}

std::string_view to_string(VerdictReason r) {
  switch (r) {
    case VerdictReason::None: return "none";
    case VerdictReason::ValueFault: return "value_fault";
    case VerdictReason::BoundFault: return "bound_fault";
  }
  return "?";
}

// --- .intervals loading ----------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view take_word(std::string_view& s) {
  s = trim(s);
  std::size_t n = 0;
  while (n < s.size() && !std::isspace(static_cast<unsigned char>(s[n]))) ++n;
  std::string_view w = s.substr(0, n);
  s.remove_prefix(n);
  return w;
}

[[noreturn]] void bad_line(int line, const std::string& why) {
  throw LoadError(LoadErrorKind::MalformedLine, line, std::nullopt,
                  "line " + std::to_string(line) + ": " + why);
}

}  // namespace

IntervalSpec load_interval_spec(std::string_view text, const SpreadsheetProgram& p) {
  IntervalSpec spec;
  int line_no = 0;
  while (!text.empty()) {
    std::size_t nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == ';') continue;

    std::string_view rest = line;
    std::string_view verb = take_word(rest);
    if (verb != "input" && verb != "expect")
      bad_line(line_no, "expected 'input' or 'expect'");
    std::string_view addr_text = take_word(rest);
    CellAddress addr;
    try {
      addr = parse_address(addr_text);
    } catch (const ParseError&) {
      bad_line(line_no, "malformed cell address '" + std::string(addr_text) + "'");
    }
    if (take_word(rest) != "in") bad_line(line_no, "expected 'in'");
    rest = trim(rest);
    if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']')
      bad_line(line_no, "expected '[lo, hi]'");
    std::string_view body = rest.substr(1, rest.size() - 2);
    std::size_t comma = body.find(',');
    if (comma == std::string_view::npos) bad_line(line_no, "expected '[lo, hi]'");
    double lo = 0.0;
    double hi = 0.0;
    if (!parse_number(trim(body.substr(0, comma)), lo) ||
        !parse_number(trim(body.substr(comma + 1)), hi))
      bad_line(line_no, "malformed interval bound");
    if (!(lo <= hi))
      throw LoadError(LoadErrorKind::InvalidInterval, line_no, addr,
                      "line " + std::to_string(line_no) + ": empty interval [" +
                          format_number(lo) + ", " + format_number(hi) + "]");

    CellKind kind = p.kind_at(addr);
    bool is_input = verb == "input";
    if (is_input && kind != CellKind::Input)
      throw LoadError(LoadErrorKind::NotAnInputCell, line_no, addr,
                      "line " + std::to_string(line_no) + ": NotAnInputCell: " +
                          to_string(addr) + " is " + std::string(to_string(kind)));
    if (!is_input && kind != CellKind::Formula)
      throw LoadError(LoadErrorKind::NotAFormulaCell, line_no, addr,
                      "line " + std::to_string(line_no) + ": NotAFormulaCell: " +
                          to_string(addr) + " is " + std::string(to_string(kind)));
    auto& target = is_input ? spec.input_ranges : spec.expected;
    if (!target.emplace(addr, Interval(lo, hi)).second)
      throw LoadError(LoadErrorKind::DuplicateEntry, line_no, addr,
                      "line " + std::to_string(line_no) + ": duplicate entry for " +
                          to_string(addr));
  }
  return spec;
}

std::string render_interval_spec(const IntervalSpec& spec) {
  std::ostringstream out;
  auto line = [&](const char* verb, CellAddress a, const Interval& iv) {
    out << verb << ' ' << to_string(a) << " in [" << format_number(iv.lo()) << ", "
        << format_number(iv.hi()) << "]\n";
  };
  for (const auto& [a, iv] : spec.input_ranges) line("input", a, iv);
  for (const auto& [a, iv] : spec.expected) line("expect", a, iv);
  return out.str();
}

// --- interval evaluation ---------------------------------------------------

namespace {

struct IvBlank {};
struct IvText {};
// What an interval program reads from a cell.
using IvCell = std::variant<Interval, IvBlank, IvText, IntervalFault>;

class IntervalEvaluator {
 public:
  explicit IntervalEvaluator(const std::map<CellAddress, IvCell>& cells) : cells_(cells) {}

  Bound eval(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Number:
        return Interval::point(e.number);
      case Expr::Kind::Reference:
        return read_scalar(e.ref.address());
      case Expr::Kind::Range:
        return IntervalFault{IntervalFaultKind::TypeError};
      case Expr::Kind::Negate: {
        Bound b = eval(e.children[0]);
        if (auto* iv = std::get_if<Interval>(&b)) return iv_negate(*iv);
        return b;
      }
      case Expr::Kind::Binary: {
        Bound lhs = eval(e.children[0]);
        Bound rhs = eval(e.children[1]);
        if (std::holds_alternative<IntervalFault>(lhs)) return lhs;
        if (std::holds_alternative<IntervalFault>(rhs)) return rhs;
        try {
          return iv_binop(e.op, std::get<Interval>(lhs), std::get<Interval>(rhs));
        } catch (const IntervalError&) {
          return IntervalFault{IntervalFaultKind::DivisorContainsZero};
        }
      }
      case Expr::Kind::Call:
        return call(e);
    }
    return IntervalFault{IntervalFaultKind::TypeError};
  }

 private:
  IvCell read(CellAddress a) const {
    auto it = cells_.find(a);
    return it == cells_.end() ? IvCell{IvBlank{}} : it->second;
  }

  Bound read_scalar(CellAddress a) const {
    IvCell c = read(a);
    if (auto* iv = std::get_if<Interval>(&c)) return *iv;
    if (std::holds_alternative<IvBlank>(c)) return Interval::point(0.0);
    if (std::holds_alternative<IvText>(c)) return IntervalFault{IntervalFaultKind::TypeError};
    return IntervalFault{IntervalFaultKind::Propagated};
  }

  // Mirrors the concrete evaluator: blanks and labels are skipped, an empty
  // SUM/MIN/MAX is 0, and an empty AVG is a fault.
  Bound call(const Expr& e) {
    std::vector<Interval> items;
    std::optional<Bound> fault;
    for (const auto& arg : e.children) {
      if (arg.kind == Expr::Kind::Range) {
        for (const auto& a : arg.range.cells()) {
          IvCell c = read(a);
          if (auto* iv = std::get_if<Interval>(&c)) {
            items.push_back(*iv);
          } else if (std::holds_alternative<IntervalFault>(c) && !fault) {
            fault = IntervalFault{IntervalFaultKind::Propagated};
          }
        }
      } else {
        Bound b = eval(arg);
        if (auto* iv = std::get_if<Interval>(&b)) {
          items.push_back(*iv);
        } else if (!fault) {
          fault = b;
        }
      }
    }
    if (fault) return *fault;
    if (items.empty() && e.function != Function::Count) {
      if (e.function == Function::Avg) return IntervalFault{IntervalFaultKind::EmptyAggregate};
      return Interval::point(0.0);
    }
    return iv_aggregate(e.function, items);
  }

  const std::map<CellAddress, IvCell>& cells_;
};

}  // namespace

std::map<CellAddress, Bound> eval_intervals(const SpreadsheetInstance& instance,
                                            const IntervalSpec& spec) {
  const SpreadsheetProgram& p = instance.program();
  std::vector<CellAddress> order = topo_order(build_graph(p));
  std::map<CellAddress, IvCell> cells;
  std::map<CellAddress, Bound> out;
  for (const auto& addr : order) {
    const CellContent* content = p.find(addr);
    if (!content) continue;
    IvCell value = std::visit(
        [&](const auto& c) -> IvCell {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, Constant>) {
            return Interval::point(c.value);
          } else if constexpr (std::is_same_v<T, Input>) {
            auto it = spec.input_ranges.find(addr);
            if (it != spec.input_ranges.end()) return it->second;
            return Interval::point(instance.input_value(addr));
          } else if constexpr (std::is_same_v<T, Label>) {
            return IvText{};
          } else {
            Bound b = IntervalEvaluator(cells).eval(c.ast);
            out.emplace(addr, b);
            if (auto* iv = std::get_if<Interval>(&b)) return *iv;
            return std::get<IntervalFault>(b);
          }
        },
        *content);
    cells.emplace(addr, std::move(value));
  }
  return out;
}

std::map<CellAddress, Bound> eval_intervals(const SpreadsheetProgram& p,
                                            const IntervalSpec& spec) {
  return eval_intervals(instantiate(std::make_shared<const SpreadsheetProgram>(p)), spec);
}

// --- judging ---------------------------------------------------------------

Judgement judge(const Value& d, const Interval& expected, const Bound& bound) {
  if (!d.is_number()) return {Verdict::SymptomBoth, VerdictReason::ValueFault};
  bool value_inside = expected.contains(d.number());
  const auto* b = std::get_if<Interval>(&bound);
  bool model_inside = b && b->contains(expected);
  VerdictReason reason = b ? VerdictReason::None : VerdictReason::BoundFault;
  if (value_inside && model_inside) return {Verdict::NoSymptom, VerdictReason::None};
  if (!value_inside && !model_inside) return {Verdict::SymptomBoth, reason};
  if (!value_inside) return {Verdict::SymptomValueOutside, VerdictReason::None};
  return {Verdict::SymptomModelMismatch, reason};
}

bool TestReport::any_symptom() const {
  return std::any_of(records.begin(), records.end(),
                     [](const auto& r) { return is_symptom(r.judgement.verdict); });
}

const CellTestRecord* TestReport::find(CellAddress cell) const {
  for (const auto& r : records)
    if (r.cell == cell) return &r;
  return nullptr;
}

TestReport run_interval_test(const SpreadsheetInstance& instance, const IntervalSpec& spec) {
  const SpreadsheetProgram& p = instance.program();
  DependencyGraph g = build_graph(p);
  EvalResult concrete = eval_instance(instance);
  std::map<CellAddress, Bound> bounds = eval_intervals(instance, spec);

  TestReport report;
  std::set<CellAddress> symptomatic;
  for (const auto& [addr, bound] : bounds) {
    CellTestRecord rec{addr, concrete.at(addr), bound, std::nullopt, {}, {}};
    if (auto it = spec.expected.find(addr); it != spec.expected.end()) {
      rec.expected = it->second;
      rec.judgement = judge(rec.d, it->second, bound);
    }
    if (is_symptom(rec.judgement.verdict)) symptomatic.insert(addr);
    report.records.push_back(std::move(rec));
  }

  for (auto& rec : report.records) {
    if (!is_symptom(rec.judgement.verdict)) continue;
    std::map<CellAddress, int> dist = precedent_distances(g, rec.cell);
    for (const auto& [a, d] : dist) rec.suspects.push_back(a);
    std::sort(rec.suspects.begin(), rec.suspects.end(),
              [&](CellAddress x, CellAddress y) {
                bool sx = symptomatic.count(x) > 0;
                bool sy = symptomatic.count(y) > 0;
                if (sx != sy) return sx;
                if (dist[x] != dist[y]) return dist[x] < dist[y];
                return x < y;
              });
  }
  return report;
}

}  // namespace sheetlint
