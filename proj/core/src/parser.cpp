#include <cctype>
#include <cstdlib>
#include <string>

#include "maxsurf/cx_expr.hpp"
#include "maxsurf/errors.hpp"

namespace maxsurf {

namespace {

// Recursive-descent parser for the expression grammar:
//   expr    := term (('+'|'-') term)*
//   term    := unary (('*'|'/') unary)*
//   unary   := '-' unary | power
//   power   := atom ('^' int)?          (no chaining: 'a^2^3' is rejected)
//   atom    := number | number 'i' | 'i' | 'zeta' | 'exp(' expr ')'
//            | 'log(' expr ')' | '(' expr ')'
// Whitespace is ignored between tokens.
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  CxExpr parse() {
    CxExpr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size())
      fail("unexpected trailing input at offset " + std::to_string(pos_));
    return e;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) {
    throw ExprParseError(what + " while parsing \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool consume(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool consume_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) return false;
    // A word must not run into further identifier characters.
    std::size_t end = pos_ + w.size();
    if (end < text_.size() &&
        (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
      return false;
    pos_ = end;
    return true;
  }

  CxExpr parse_expr() {
    CxExpr e = parse_term();
    for (;;) {
      if (consume('+'))
        e = e + parse_term();
      else if (consume('-'))
        e = e - parse_term();
      else
        return e;
    }
  }

  CxExpr parse_term() {
    CxExpr e = parse_unary();
    for (;;) {
      if (consume('*'))
        e = e * parse_unary();
      else if (consume('/'))
        e = e / parse_unary();
      else
        return e;
    }
  }

  CxExpr parse_unary() {
    if (consume('-')) return -parse_unary();
    return parse_power();
  }

  CxExpr parse_power() {
    CxExpr base = parse_atom();
    if (consume('^')) {
      int exponent = parse_int();
      if (peek('^')) fail("chained '^' is not allowed; use parentheses");
      return CxExpr::pow(base, exponent);
    }
    return base;
  }

  int parse_int() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == digits) fail("expected an integer exponent");
    long v = std::strtol(std::string(text_.substr(start, pos_ - start)).c_str(),
                         nullptr, 10);
    if (v < -64 || v > 64) fail("integer exponent out of range [-64, 64]");
    return static_cast<int>(v);
  }

  CxExpr parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (consume_word("zeta")) return CxExpr::variable(0);
    if (consume_word("exp")) {
      if (!consume('(')) fail("expected '(' after exp");
      CxExpr inner = parse_expr();
      if (!consume(')')) fail("expected ')' closing exp(");
      return CxExpr::exp(inner);
    }
    if (consume_word("log")) {
      if (!consume('(')) fail("expected '(' after log");
      CxExpr inner = parse_expr();
      if (!consume(')')) fail("expected ')' closing log(");
      return CxExpr::log(inner);
    }
    if (consume_word("i"))
      return CxExpr::constant(Complex(0.0, 1.0));
    if (consume('(')) {
      CxExpr inner = parse_expr();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    fail(std::string("unexpected character '") + c + "' at offset " +
         std::to_string(pos_));
  }

  CxExpr parse_number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
      ++pos_;
    // Scientific-notation tail: e or E, optional sign, digits.
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t mark = pos_;
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
          ++pos_;
      } else {
        pos_ = mark;  // the 'e' was not an exponent marker
      }
    }
    std::string token(text_.substr(start, pos_ - start));
    char* end = nullptr;
    double v = std::strtod(token.c_str(), &end);
    if (end == nullptr || *end != '\0') fail("malformed numeric literal \"" + token + "\"");
    // Imaginary suffix: 2.5i
    if (pos_ < text_.size() && text_[pos_] == 'i') {
      std::size_t after = pos_ + 1;
      if (after >= text_.size() ||
          !(std::isalnum(static_cast<unsigned char>(text_[after])) || text_[after] == '_')) {
        ++pos_;
        return CxExpr::constant(Complex(0.0, v));
      }
    }
    return CxExpr::constant(Complex(v, 0.0));
  }
};

}  // namespace

CxExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace maxsurf
