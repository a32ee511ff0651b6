#include "fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sheetlint::testing {

std::string fixture_path(std::string_view name) {
  return std::string(SHEETLINT_FIXTURE_DIR) + "/" + std::string(name);
}

std::string read_fixture(std::string_view name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + std::string(name));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SpreadsheetProgram load_fixture(std::string_view name) {
  return load_program(read_fixture(name));
}

std::shared_ptr<const SpreadsheetProgram> shared_fixture(std::string_view name) {
  return std::make_shared<const SpreadsheetProgram>(load_fixture(name));
}

IntervalSpec load_spec_fixture(std::string_view name, const SpreadsheetProgram& p) {
  return load_interval_spec(read_fixture(name), p);
}

CellAddress at(std::string_view a1) { return parse_address(a1); }

}  // namespace sheetlint::testing
