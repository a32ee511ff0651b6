#include "cli.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "sheetlint/detectors.hpp"
#include "sheetlint/dot.hpp"
#include "sheetlint/errors.hpp"
#include "sheetlint/evaluator.hpp"
#include "sheetlint/interval_oracle.hpp"
#include "sheetlint/report.hpp"

namespace sheetlint::cli {

std::string sha256_hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[md[i] >> 4]);
    out.push_back(kHex[md[i] & 0xF]);
  }
  return out;
}

namespace {

// A failure that ends the command with exit code 2.
struct Fatal {
  std::string message;
};

struct LoadedFile {
  std::string path;
  std::string bytes;
};

LoadedFile read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Fatal{path + ": cannot open file"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return {path, buf.str()};
}

SpreadsheetProgram load_sheet(const LoadedFile& f) {
  try {
    return load_program(f.bytes);
  } catch (const LoadError& e) {
    throw Fatal{f.path + ":" + std::to_string(e.line()) + ": " +
                std::string(to_string(e.kind())) + ": " + e.what()};
  }
}

IntervalSpec load_spec(const LoadedFile& f, const SpreadsheetProgram& p) {
  try {
    return load_interval_spec(f.bytes, p);
  } catch (const LoadError& e) {
    throw Fatal{f.path + ":" + std::to_string(e.line()) + ": " +
                std::string(to_string(e.kind())) + ": " + e.what()};
  }
}

Report base_report(std::string command, const std::vector<LoadedFile>& files,
                   SpreadsheetProgram program) {
  Report r;
  r.command = std::move(command);
  for (const auto& f : files) r.inputs.push_back({f.path, sha256_hex(f.bytes)});
  r.physical_areas = infer_physical_areas(program);
  r.logical_areas = infer_logical_areas(program);
  r.program = std::move(program);
  return r;
}

std::vector<Diagnostic> diagnose(const SpreadsheetProgram& p) {
  auto shared = std::make_shared<const SpreadsheetProgram>(p);
  EvalResult eval = eval_instance_tolerant(instantiate(shared));
  return detect_all(p, &eval);
}

struct Options {
  std::string format = "text";
  std::string output;
  std::string sheet;
  std::string intervals;
  std::string resolution = "cell";
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Static fault detection and interval testing for spreadsheet programs",
               "sheetlint"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", opt.output, "Write the report to this file");
  app.set_version_flag("--version", std::string(tool_version()));

  auto* check = app.add_subcommand("check", "Run the static fault detectors");
  check->add_option("sheet", opt.sheet, ".sheet file")->required();
  auto* test = app.add_subcommand("test", "Compare d, E and B for every formula cell");
  test->add_option("sheet", opt.sheet, ".sheet file")->required();
  test->add_option("intervals", opt.intervals, ".intervals file")->required();
  auto* graph = app.add_subcommand("graph", "Emit the data-flow graph as DOT");
  graph->add_option("sheet", opt.sheet, ".sheet file")->required();
  graph->add_option("--resolution", opt.resolution, "Graph resolution")
      ->check(CLI::IsMember({"cell", "area"}));
  auto* areas = app.add_subcommand("areas", "List physical and logical areas");
  areas->add_option("sheet", opt.sheet, ".sheet file")->required();
  for (auto* sub : {check, test, graph, areas}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitClean;
  } catch (const CLI::CallForVersion&) {
    out << tool_version() << "\n";
    return kExitClean;
  } catch (const CLI::ParseError& e) {
    err << "sheetlint: " << e.what() << "\n";
    return kExitLoadError;
  }

  std::string rendered;
  int status = kExitClean;
  try {
    LoadedFile sheet_file = read_file(opt.sheet);
    SpreadsheetProgram program = load_sheet(sheet_file);
    bool json = opt.format == "json";

    if (check->parsed()) {
      Report r = base_report("check", {sheet_file}, program);
      r.diagnostics = diagnose(program);
      status = r.diagnostics->empty() ? kExitClean : kExitFindings;
      rendered = json ? render_json(r) : render_text(r);
    } else if (test->parsed()) {
      LoadedFile spec_file = read_file(opt.intervals);
      IntervalSpec spec = load_spec(spec_file, program);
      Report r = base_report("test", {sheet_file, spec_file}, program);
      try {
        r.interval_test = run_interval_test(
            instantiate(std::make_shared<const SpreadsheetProgram>(program)), spec);
      } catch (const CyclicDependency& e) {
        throw Fatal{sheet_file.path + ": " + e.what()};
      }
      status = r.interval_test->any_symptom() ? kExitFindings : kExitClean;
      rendered = json ? render_json(r) : render_text(r);
    } else if (graph->parsed()) {
      rendered = render_dot(program, diagnose(program),
                            opt.resolution == "area" ? GraphResolution::Area
                                                     : GraphResolution::Cell);
    } else {
      Report r = base_report("areas", {sheet_file}, program);
      rendered = json ? render_json(r) : render_text(r);
    }
  } catch (const Fatal& f) {
    err << "sheetlint: " << f.message << "\n";
    return kExitLoadError;
  }

  if (!opt.output.empty()) {
    std::ofstream file(opt.output, std::ios::binary);
    if (!file) {
      err << "sheetlint: " << opt.output << ": cannot write file\n";
      return kExitLoadError;
    }
    file << rendered;
  } else {
    out << rendered;
  }
  return status;
}

}  // namespace sheetlint::cli
