#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "random_program.hpp"
#include "sheetlint/detectors.hpp"
#include "sheetlint/evaluator.hpp"
#include "sheetlint/interval_oracle.hpp"

namespace {

using namespace sheetlint;

// A ledger of `rows` priced lines with a weighted column and totals.
std::string ledger_text(int rows) {
  std::string text = "E1 = #1.2\n";
  for (int r = 2; r < rows + 2; ++r) {
    std::string n = std::to_string(r);
    text += "A" + n + " = \"item " + n + "\"\n";
    text += "B" + n + " = ?" + std::to_string(r % 97) + "\n";
    text += "C" + n + " = #" + std::to_string(r % 13 + 1) + "\n";
    text += "D" + n + " = =B" + n + "*C" + n + "*$E$1\n";
  }
  std::string last = std::to_string(rows + 1);
  text += "D" + std::to_string(rows + 3) + " = =SUM(D2:D" + last + ")\n";
  text += "D" + std::to_string(rows + 4) + " = =AVG(D2:D" + last + ")/MAX(B2:B" + last + ")\n";
  return text;
}

void BM_ParseFormula(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_formula("SUM($B$2:B10)*(A1+3.5)/MAX(C1:C9,-D4)-AVG(E1:F20)"));
  }
}
BENCHMARK(BM_ParseFormula);

void BM_LoadProgram(benchmark::State& state) {
  std::string text = ledger_text(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(load_program(text));
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_LoadProgram)->Arg(100)->Arg(1000);

void BM_EvalInstance(benchmark::State& state) {
  auto p = std::make_shared<const SpreadsheetProgram>(
      load_program(ledger_text(static_cast<int>(state.range(0)))));
  auto inst = instantiate(p);
  for (auto _ : state) benchmark::DoNotOptimize(eval_instance(inst));
}
BENCHMARK(BM_EvalInstance)->Arg(100)->Arg(1000);

void BM_EvalIntervals(benchmark::State& state) {
  auto p = load_program(ledger_text(static_cast<int>(state.range(0))));
  IntervalSpec spec;
  for (const auto& [addr, content] : p.cells())
    if (const auto* in = std::get_if<Input>(&content))
      spec.input_ranges.emplace(addr, Interval(in->default_value - 1, in->default_value + 1));
  for (auto _ : state) benchmark::DoNotOptimize(eval_intervals(p, spec));
}
BENCHMARK(BM_EvalIntervals)->Arg(100)->Arg(1000);

void BM_DetectAll(benchmark::State& state) {
  auto p = load_program(ledger_text(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(detect_all(p));
}
BENCHMARK(BM_DetectAll)->Arg(100)->Arg(1000);

void BM_RandomProgramTest(benchmark::State& state) {
  std::mt19937_64 rng(1);
  auto rp = testing::random_program(rng);
  auto inst = instantiate(rp.program);
  for (auto _ : state) benchmark::DoNotOptimize(run_interval_test(inst, rp.spec));
}
BENCHMARK(BM_RandomProgramTest);

}  // namespace
BENCHMARK_MAIN();
