#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "sheetlint/interval_oracle.hpp"
#include "sheetlint/program.hpp"

namespace sheetlint::testing {

std::string fixture_path(std::string_view name);
std::string read_fixture(std::string_view name);
SpreadsheetProgram load_fixture(std::string_view name);
std::shared_ptr<const SpreadsheetProgram> shared_fixture(std::string_view name);
IntervalSpec load_spec_fixture(std::string_view name, const SpreadsheetProgram& p);

CellAddress at(std::string_view a1);

}  // namespace sheetlint::testing
