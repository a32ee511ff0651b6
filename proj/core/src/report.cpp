#include "sheetlint/report.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include <json.hpp>

namespace sheetlint {

#ifndef SHEETLINT_VERSION
#define SHEETLINT_VERSION "0.0.0"
#endif

std::string_view tool_version() { return SHEETLINT_VERSION; }

namespace {

using nlohmann::json;

json address_list(const std::vector<CellAddress>& cells) {
  json arr = json::array();
  for (const auto& c : cells) arr.push_back(to_string(c));
  return arr;
}

// JSON has no infinities; overflowed endpoints are written as strings.
json number_json(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

json interval_json(const Interval& iv) {
  return json{{"lo", number_json(iv.lo())}, {"hi", number_json(iv.hi())}};
}

json value_json(const Value& v) {
  if (v.is_number()) return number_json(v.number());
  if (v.is_fault()) return json{{"fault", std::string(to_string(v.fault()))}};
  if (v.is_text()) return json{{"text", v.text()}};
  return nullptr;
}

json bound_json(const Bound& b) {
  if (const auto* iv = std::get_if<Interval>(&b)) return interval_json(*iv);
  return json{{"fault", std::string(to_string(std::get<IntervalFault>(b).kind))}};
}

std::map<CellKind, int> count_kinds(const SpreadsheetProgram& p) {
  std::map<CellKind, int> counts{{CellKind::Constant, 0},
                                 {CellKind::Input, 0},
                                 {CellKind::Formula, 0},
                                 {CellKind::Label, 0}};
  for (const auto& [addr, content] : p.cells()) ++counts[kind_of(content)];
  return counts;
}

json summary_json(const SpreadsheetProgram& p) {
  json cells = json::object();
  for (const auto& [kind, n] : count_kinds(p)) cells[std::string(to_string(kind))] = n;
  return json{{"cells", cells},
              {"extent", {{"cols", p.extent().max_col}, {"rows", p.extent().max_row}}}};
}

json areas_json(const Report& r) {
  json physical = json::array();
  for (const auto& a : r.physical_areas) {
    physical.push_back({{"range", to_string(a.rect)},
                        {"consumer", to_string(a.consumer)},
                        {"function", std::string(function_name(a.function))},
                        {"majority_type", std::string(to_string(a.majority_type))}});
  }
  json logical = json::array();
  for (const auto& a : r.logical_areas) {
    logical.push_back({{"members", address_list(a.members)},
                       {"hull", to_string(a.hull)},
                       {"normalized", a.key.key()}});
  }
  return json{{"physical", physical}, {"logical", logical}};
}

json diagnostic_json(const Diagnostic& d) {
  json j{{"code", std::string(to_string(d.code))},
         {"severity", std::string(to_string(d.severity))},
         {"subjects", address_list(d.subjects)},
         {"message", d.message}};
  if (d.area) {
    json area{{"kind", d.area->kind == RelatedArea::Kind::Physical ? "physical" : "logical"},
              {"range", to_string(d.area->rect)}};
    if (d.area->consumer) area["consumer"] = to_string(*d.area->consumer);
    if (d.area->function) area["function"] = std::string(function_name(*d.area->function));
    j["area"] = area;
  } else {
    j["area"] = nullptr;
  }
  return j;
}

json test_json(const TestReport& t) {
  json records = json::array();
  int symptoms = 0;
  for (const auto& r : t.records) {
    if (is_symptom(r.judgement.verdict)) ++symptoms;
    records.push_back({{"cell", to_string(r.cell)},
                       {"d", value_json(r.d)},
                       {"bound", bound_json(r.bound)},
                       {"expected", r.expected ? interval_json(*r.expected) : json(nullptr)},
                       {"verdict", std::string(to_string(r.judgement.verdict))},
                       {"reason", std::string(to_string(r.judgement.reason))},
                       {"suspects", address_list(r.suspects)}});
  }
  return json{{"records", records}, {"symptoms", symptoms}};
}

std::string bound_text(const Bound& b) { return to_string(b); }

}  // namespace

std::string render_json(const Report& report) {
  json inputs = json::array();
  for (const auto& in : report.inputs)
    inputs.push_back({{"path", in.path}, {"sha256", in.sha256}});
  json j{{"schema_version", kReportSchemaVersion},
         {"tool", {{"name", "sheetlint"}, {"version", std::string(tool_version())}}},
         {"command", report.command},
         {"inputs", inputs},
         {"summary", summary_json(report.program)},
         {"areas", areas_json(report)}};
  if (report.diagnostics) {
    json diags = json::array();
    for (const auto& d : *report.diagnostics) diags.push_back(diagnostic_json(d));
    j["diagnostics"] = diags;
  }
  if (report.interval_test) j["interval_test"] = test_json(*report.interval_test);
  return j.dump(2) + "\n";
}

std::string render_text(const Report& report) {
  std::ostringstream out;
  std::string name = report.inputs.empty() ? "<sheet>" : report.inputs.front().path;
  auto counts = count_kinds(report.program);
  out << name << ": " << report.program.size() << " cells ("
      << counts[CellKind::Constant] << " constant, " << counts[CellKind::Input] << " input, "
      << counts[CellKind::Formula] << " formula, " << counts[CellKind::Label] << " label)\n";

  if (report.command == "areas") {
    out << "physical areas: " << report.physical_areas.size() << "\n";
    for (const auto& a : report.physical_areas) {
      out << "  " << function_name(a.function) << "(" << to_string(a.rect) << ") -> "
          << to_string(a.consumer) << "  [" << to_string(a.majority_type) << "]\n";
    }
    out << "logical areas: " << report.logical_areas.size() << "\n";
    for (const auto& a : report.logical_areas) {
      out << "  " << to_string(a.hull) << " {";
      for (std::size_t i = 0; i < a.members.size(); ++i)
        out << (i ? ", " : "") << to_string(a.members[i]);
      out << "}  " << a.key.key() << "\n";
    }
  }

  if (report.diagnostics) {
    for (const auto& d : *report.diagnostics) {
      out << name << ":" << to_string(d.subjects.front()) << ": " << to_string(d.severity)
          << ": " << to_string(d.code) << ": " << d.message << "\n";
    }
    out << report.diagnostics->size() << " diagnostic"
        << (report.diagnostics->size() == 1 ? "" : "s") << "\n";
  }

  if (report.interval_test) {
    int judged = 0;
    int symptoms = 0;
    for (const auto& r : report.interval_test->records) {
      if (r.judgement.verdict != Verdict::NotJudged) ++judged;
      if (is_symptom(r.judgement.verdict)) ++symptoms;
      out << to_string(r.cell) << ": d=" << to_string(r.d)
          << " E=" << (r.expected ? to_string(*r.expected) : std::string("-"))
          << " B=" << bound_text(r.bound) << " " << to_string(r.judgement.verdict);
      if (r.judgement.reason != VerdictReason::None)
        out << " (" << to_string(r.judgement.reason) << ")";
      if (!r.suspects.empty()) {
        out << " suspects:";
        for (const auto& s : r.suspects) out << " " << to_string(s);
      }
      out << "\n";
    }
    out << judged << " judged, " << symptoms << " with symptoms\n";
  }
  return out.str();
}

}  // namespace sheetlint
