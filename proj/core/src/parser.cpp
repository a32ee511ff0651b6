#include <cctype>
#include <charconv>
#include <string>

#include "sheetlint/errors.hpp"
#include "sheetlint/formula.hpp"

namespace sheetlint {
namespace {

enum class Tok { Number, Ref, Name, Plus, Minus, Star, Slash, LParen, RParen, Comma, Colon, End };

struct Token {
  Tok kind = Tok::End;
  std::size_t pos = 0;
  double number = 0.0;
  CellRef ref{};
  std::string name;
};

bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (i_ < text_.size() && is_space(text_[i_])) ++i_;
    Token t;
    t.pos = i_;
    if (i_ >= text_.size()) return t;
    char c = text_[i_];
    switch (c) {
      case '+': ++i_; t.kind = Tok::Plus; return t;
      case '-': ++i_; t.kind = Tok::Minus; return t;
      case '*': ++i_; t.kind = Tok::Star; return t;
      case '/': ++i_; t.kind = Tok::Slash; return t;
      case '(': ++i_; t.kind = Tok::LParen; return t;
      case ')': ++i_; t.kind = Tok::RParen; return t;
      case ',': ++i_; t.kind = Tok::Comma; return t;
      case ':': ++i_; t.kind = Tok::Colon; return t;
      default: break;
    }
    if (is_digit(c) || c == '.') return lex_number(t);
    if (is_alpha(c) || c == '$') return lex_word(t);
    throw ParseError(ParseErrorKind::SyntaxError, i_,
                     std::string("unexpected character '") + c + "' at " +
                         std::to_string(i_));
  }

 private:
  Token lex_number(Token t) {
    std::size_t begin = i_;
    while (i_ < text_.size() && is_digit(text_[i_])) ++i_;
    if (i_ < text_.size() && text_[i_] == '.') {
      ++i_;
      while (i_ < text_.size() && is_digit(text_[i_])) ++i_;
    }
    if (i_ < text_.size() && (text_[i_] == 'e' || text_[i_] == 'E')) {
      std::size_t save = i_++;
      if (i_ < text_.size() && (text_[i_] == '+' || text_[i_] == '-')) ++i_;
      if (i_ < text_.size() && is_digit(text_[i_])) {
        while (i_ < text_.size() && is_digit(text_[i_])) ++i_;
      } else {
        i_ = save;
      }
    }
    const char* first = text_.data() + begin;
    const char* last = text_.data() + i_;
    auto [ptr, ec] = std::from_chars(first, last, t.number);
    if (ec != std::errc{} || ptr != last)
      throw ParseError(ParseErrorKind::SyntaxError, begin,
                       "malformed number at " + std::to_string(begin));
    t.kind = Tok::Number;
    return t;
  }

  // ref := ['$'] LETTERS ['$'] DIGITS; a bare LETTERS run is a function name.
  Token lex_word(Token t) {
    std::size_t begin = i_;
    bool col_abs = false;
    bool row_abs = false;
    if (text_[i_] == '$') {
      col_abs = true;
      ++i_;
    }
    std::size_t letters_begin = i_;
    while (i_ < text_.size() && is_alpha(text_[i_])) ++i_;
    std::string_view letters = text_.substr(letters_begin, i_ - letters_begin);
    if (i_ < text_.size() && text_[i_] == '$') {
      row_abs = true;
      ++i_;
    }
    std::size_t digits_begin = i_;
    while (i_ < text_.size() && is_digit(text_[i_])) ++i_;
    std::string_view digits = text_.substr(digits_begin, i_ - digits_begin);

    if (!col_abs && !row_abs && digits.empty() && !letters.empty()) {
      t.kind = Tok::Name;
      t.name = std::string(letters);
      return t;
    }
    if (letters.empty() || digits.empty() ||
        (i_ < text_.size() && (is_alpha(text_[i_]) || text_[i_] == '$')))
      throw ParseError(ParseErrorKind::SyntaxError, begin,
                       "malformed reference at " + std::to_string(begin));
    CellAddress addr;
    try {
      addr = parse_address(std::string(letters) + std::string(digits));
    } catch (const ParseError& e) {
      throw ParseError(ParseErrorKind::MalformedAddress, begin, e.what());
    }
    t.kind = Tok::Ref;
    t.ref = CellRef{addr.col, addr.row, col_abs, row_abs};
    return t;
  }

  std::string_view text_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) {
    cur_ = lexer_.next();
    ahead_ = lexer_.next();
  }

  Expr parse() {
    Expr e = expr();
    if (cur_.kind != Tok::End) syntax("unexpected token");
    return e;
  }

 private:
  void advance() {
    cur_ = ahead_;
    if (ahead_.kind != Tok::End) ahead_ = lexer_.next();
  }

  [[noreturn]] void syntax(const std::string& what) const {
    throw ParseError(ParseErrorKind::SyntaxError, cur_.pos,
                     what + " at " + std::to_string(cur_.pos));
  }

  void expect(Tok kind, const char* what) {
    if (cur_.kind != kind) syntax(std::string("expected ") + what);
    advance();
  }

  Expr expr() {
    Expr lhs = term();
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      BinaryOp op = cur_.kind == Tok::Plus ? BinaryOp::Add : BinaryOp::Sub;
      advance();
      lhs = Expr::binary(op, std::move(lhs), term());
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = factor();
    while (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
      BinaryOp op = cur_.kind == Tok::Star ? BinaryOp::Mul : BinaryOp::Div;
      advance();
      lhs = Expr::binary(op, std::move(lhs), factor());
    }
    return lhs;
  }

  Expr factor() {
    switch (cur_.kind) {
      case Tok::Number: {
        double v = cur_.number;
        advance();
        return Expr::literal(v);
      }
      case Tok::Ref: {
        if (ahead_.kind == Tok::Colon)
          throw ParseError(ParseErrorKind::RangeOutsideCall, cur_.pos,
                           "range outside a grouping-function argument at " +
                               std::to_string(cur_.pos));
        CellRef ref = cur_.ref;
        advance();
        return Expr::reference(ref);
      }
      case Tok::Name:
        return call();
      case Tok::LParen: {
        advance();
        Expr e = expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Minus:
        advance();
        return Expr::negate(factor());
      default:
        syntax("expected a number, reference, call or '('");
    }
  }

  Expr call() {
    std::size_t pos = cur_.pos;
    Function fn{};
    if (!lookup_function(cur_.name, fn)) {
      if (ahead_.kind != Tok::LParen) syntax("unexpected name '" + cur_.name + "'");
      throw ParseError(ParseErrorKind::UnknownFunction, pos,
                       "unknown function '" + cur_.name + "' at " + std::to_string(pos));
    }
    advance();
    expect(Tok::LParen, "'(' after function name");
    std::vector<Expr> args;
    args.push_back(arg());
    while (cur_.kind == Tok::Comma) {
      advance();
      args.push_back(arg());
    }
    expect(Tok::RParen, "')'");
    return Expr::call(fn, std::move(args));
  }

  Expr arg() {
    if (cur_.kind == Tok::Ref && ahead_.kind == Tok::Colon) {
      CellRef first = cur_.ref;
      advance();
      advance();
      if (cur_.kind != Tok::Ref) syntax("expected reference after ':'");
      CellRef second = cur_.ref;
      advance();
      if (cur_.kind != Tok::Comma && cur_.kind != Tok::RParen)
        throw ParseError(ParseErrorKind::RangeOutsideCall, cur_.pos,
                         "range used in an expression at " + std::to_string(cur_.pos));
      return Expr::range_arg(make_range(first, second));
    }
    return expr();
  }

  Lexer lexer_;
  Token cur_;
  Token ahead_;
};

bool has_reference(const Expr& e) {
  if (e.kind == Expr::Kind::Reference || e.kind == Expr::Kind::Range) return true;
  for (const auto& child : e.children)
    if (has_reference(child)) return true;
  return false;
}

}  // namespace

Expr parse_formula(std::string_view text) {
  Expr e = Parser(text).parse();
  if (!has_reference(e))
    throw ParseError(ParseErrorKind::NoReference, 0,
                     "formula contains no cell reference");
  return e;
}

}  // namespace sheetlint
