#include "sheetlint/program.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "sheetlint/errors.hpp"

namespace sheetlint {

std::string_view to_string(CellKind kind) {
  switch (kind) {
    case CellKind::Empty: return "empty";
    case CellKind::Constant: return "constant";
    case CellKind::Input: return "input";
    case CellKind::Formula: return "formula";
    case CellKind::Label: return "label";
  }
  return "?";
}

CellKind kind_of(const CellContent& content) {
  switch (content.index()) {
    case 0: return CellKind::Constant;
    case 1: return CellKind::Input;
    case 2: return CellKind::Formula;
    default: return CellKind::Label;
  }
}

SpreadsheetProgram::SpreadsheetProgram(CellMap cells) : cells_(std::move(cells)) {
  for (const auto& [addr, content] : cells_) {
    if (addr.col < 1 || addr.row < 1)
      throw std::invalid_argument("cell address out of sheet: " + to_string(addr));
    extent_.max_col = std::max(extent_.max_col, addr.col);
    extent_.max_row = std::max(extent_.max_row, addr.row);
  }
}

const CellContent* SpreadsheetProgram::find(CellAddress addr) const {
  auto it = cells_.find(addr);
  return it == cells_.end() ? nullptr : &it->second;
}

CellKind SpreadsheetProgram::kind_at(CellAddress addr) const {
  const CellContent* c = find(addr);
  return c ? kind_of(*c) : CellKind::Empty;
}

const Formula* SpreadsheetProgram::formula_at(CellAddress addr) const {
  const CellContent* c = find(addr);
  return c ? std::get_if<Formula>(c) : nullptr;
}

SpreadsheetProgram SpreadsheetProgram::with_cell(CellAddress addr,
                                                 CellContent content) const {
  CellMap copy = cells_;
  copy.insert_or_assign(addr, std::move(content));
  return SpreadsheetProgram(std::move(copy));
}

SpreadsheetProgram SpreadsheetProgram::without_cell(CellAddress addr) const {
  CellMap copy = cells_;
  copy.erase(addr);
  return SpreadsheetProgram(std::move(copy));
}

bool parse_number(std::string_view text, double& out) {
  if (text.empty()) return false;
  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) return false;
  // from_chars also accepts "inf"/"nan"; only plain decimals are numbers here.
  if (!(std::isdigit(static_cast<unsigned char>(text.front())) || text.front() == '.'))
    return false;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v,
                                   std::chars_format::general);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return false;
  out = negative ? -v : v;
  return true;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void malformed(int line, const std::string& why) {
  throw LoadError(LoadErrorKind::MalformedLine, line, std::nullopt,
                  "line " + std::to_string(line) + ": " + why);
}

CellContent parse_content(std::string_view content, int line, CellAddress addr) {
  if (content.empty()) malformed(line, "missing cell content");
  char marker = content.front();
  std::string_view body = content.substr(1);
  switch (marker) {
    case '#':
    case '?': {
      double v = 0.0;
      if (!parse_number(trim(body), v))
        malformed(line, "malformed number '" + std::string(body) + "'");
      if (marker == '#') return Constant{v};
      return Input{v};
    }
    case '=':
      try {
        return Formula{parse_formula(body)};
      } catch (const ParseError& e) {
        throw LoadError(LoadErrorKind::FormulaError, line, addr,
                        "line " + std::to_string(line) + ": " + to_string(addr) + ": " +
                            std::string(to_string(e.kind())) + ": " + e.what());
      }
    case '"':
      if (content.size() < 2 || content.back() != '"')
        malformed(line, "unterminated label");
      return Label{std::string(content.substr(1, content.size() - 2))};
    default:
      malformed(line, "cell content must start with '#', '?', '=' or '\"'");
  }
}

}  // namespace

SpreadsheetProgram load_program(std::string_view text) {
  SpreadsheetProgram::CellMap cells;
  int line_no = 0;
  while (!text.empty()) {
    std::size_t nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    std::string_view line = trim(raw);
    if (line.empty() || line.front() == ';') continue;

    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) malformed(line_no, "expected 'ADDR = CONTENT'");
    std::string_view addr_text = trim(line.substr(0, eq));
    CellAddress addr;
    try {
      addr = parse_address(addr_text);
    } catch (const ParseError&) {
      malformed(line_no, "malformed cell address '" + std::string(addr_text) + "'");
    }
    CellContent content = parse_content(trim(line.substr(eq + 1)), line_no, addr);
    if (!cells.emplace(addr, std::move(content)).second)
      throw LoadError(LoadErrorKind::DuplicateCell, line_no, addr,
                      "line " + std::to_string(line_no) + ": duplicate cell " +
                          to_string(addr));
  }
  return SpreadsheetProgram(std::move(cells));
}

std::string render_program(const SpreadsheetProgram& p) {
  std::ostringstream out;
  for (const auto& [addr, content] : p.cells()) {
    out << to_string(addr) << " = ";
    std::visit(
        [&](const auto& c) {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, Constant>) {
            out << '#' << format_number(c.value);
          } else if constexpr (std::is_same_v<T, Input>) {
            out << '?' << format_number(c.default_value);
          } else if constexpr (std::is_same_v<T, Formula>) {
            out << '=' << render_formula(c.ast);
          } else {
            out << '"' << c.text << '"';
          }
        },
        content);
    out << '\n';
  }
  return out.str();
}

SpreadsheetInstance::SpreadsheetInstance(std::shared_ptr<const SpreadsheetProgram> program,
                                         std::map<CellAddress, double> bindings)
    : program_(std::move(program)), bindings_(std::move(bindings)) {
  if (!program_) throw std::invalid_argument("instance requires a program");
  for (const auto& [addr, value] : bindings_)
    if (program_->kind_at(addr) != CellKind::Input) throw NotAnInputCell(addr);
}

double SpreadsheetInstance::input_value(CellAddress addr) const {
  const CellContent* c = program_->find(addr);
  const Input* in = c ? std::get_if<Input>(c) : nullptr;
  if (!in) throw NotAnInputCell(addr);
  auto it = bindings_.find(addr);
  return it == bindings_.end() ? in->default_value : it->second;
}

SpreadsheetInstance SpreadsheetInstance::with_input(CellAddress addr, double value) const {
  if (program_->kind_at(addr) != CellKind::Input) throw NotAnInputCell(addr);
  auto copy = bindings_;
  copy.insert_or_assign(addr, value);
  return SpreadsheetInstance(program_, std::move(copy));
}

bool operator==(const SpreadsheetInstance& a, const SpreadsheetInstance& b) {
  if (a.program_ != b.program_ && !(*a.program_ == *b.program_)) return false;
  for (const auto& [addr, content] : a.program_->cells()) {
    if (!std::holds_alternative<Input>(content)) continue;
    if (a.input_value(addr) != b.input_value(addr)) return false;
  }
  return true;
}

SpreadsheetInstance instantiate(std::shared_ptr<const SpreadsheetProgram> program,
                                std::map<CellAddress, double> bindings) {
  return SpreadsheetInstance(std::move(program), std::move(bindings));
}

}  // namespace sheetlint
