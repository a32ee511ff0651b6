#include "sheetlint/address.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "sheetlint/errors.hpp"

namespace sheetlint {

std::string column_name(int col) {
  std::string out;
  while (col > 0) {
    int rem = (col - 1) % 26;
    out.push_back(static_cast<char>('A' + rem));
    col = (col - 1) / 26;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

int column_index(std::string_view letters) {
  if (letters.empty() || letters.size() > 3) return 0;
  int col = 0;
  for (char c : letters) {
    if (!std::isalpha(static_cast<unsigned char>(c))) return 0;
    col = col * 26 + (std::toupper(static_cast<unsigned char>(c)) - 'A' + 1);
  }
  return col <= kMaxColumn ? col : 0;
}

std::string to_string(CellAddress addr) {
  return column_name(addr.col) + std::to_string(addr.row);
}

CellAddress parse_address(std::string_view text) {
  auto fail = [&](std::size_t pos) -> CellAddress {
    throw ParseError(ParseErrorKind::MalformedAddress, pos,
                     "malformed cell address '" + std::string(text) + "'");
  };
  std::size_t i = 0;
  while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
  if (i == 0) return fail(0);
  int col = column_index(text.substr(0, i));
  if (col == 0) return fail(0);

  std::size_t digits_begin = i;
  long row = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    row = row * 10 + (text[i] - '0');
    if (row > kMaxRow) return fail(digits_begin);
    ++i;
  }
  if (i == digits_begin || i != text.size()) return fail(i);
  if (row < 1) return fail(digits_begin);
  return {col, static_cast<int>(row)};
}

std::ostream& operator<<(std::ostream& os, CellAddress addr) {
  return os << to_string(addr);
}

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::MalformedAddress: return "MalformedAddress";
    case ParseErrorKind::SyntaxError: return "SyntaxError";
    case ParseErrorKind::NoReference: return "NoReference";
    case ParseErrorKind::UnknownFunction: return "UnknownFunction";
    case ParseErrorKind::RangeOutsideCall: return "RangeOutsideCall";
  }
  return "?";
}

std::string_view to_string(LoadErrorKind kind) {
  switch (kind) {
    case LoadErrorKind::MalformedLine: return "MalformedLine";
    case LoadErrorKind::DuplicateCell: return "DuplicateCell";
    case LoadErrorKind::FormulaError: return "FormulaError";
    case LoadErrorKind::DuplicateEntry: return "DuplicateEntry";
    case LoadErrorKind::InvalidInterval: return "InvalidInterval";
    case LoadErrorKind::NotAnInputCell: return "NotAnInputCell";
    case LoadErrorKind::NotAFormulaCell: return "NotAFormulaCell";
  }
  return "?";
}

namespace {

std::string describe_cycle(const std::vector<CellAddress>& cycle) {
  std::string out = "cyclic dependency:";
  for (const auto& c : cycle) out += " " + to_string(c) + " ->";
  if (!cycle.empty()) out += " " + to_string(cycle.front());
  return out;
}

}  // namespace

CyclicDependency::CyclicDependency(std::vector<CellAddress> cycle)
    : std::runtime_error(describe_cycle(cycle)), cycle_(std::move(cycle)) {}

}  // namespace sheetlint
