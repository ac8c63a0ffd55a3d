#include "expr.hpp"

#include <cctype>
#include <cstdint>

#include "skeinlab/errors.hpp"

namespace skeinlab::cli {

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ValidationError("skein expression: " + what + " at position " +
                          std::to_string(pos));
  }

  std::int64_t integer() {
    skip_ws();
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected an integer");
    std::int64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      v = v * 10 + (text[pos++] - '0');
    return neg ? -v : v;
  }

  /// A-exponent: either an integer (doubled internally) or p/2 inside
  /// braces or parentheses.
  LaurentHalf a_power() {
    skip_ws();
    const char open = peek();
    if (open == '{' || open == '(') {
      const char close = open == '{' ? '}' : ')';
      ++pos;
      const std::int64_t p = integer();
      std::int64_t doubled = 2 * p;
      if (eat('/')) {
        if (integer() != 2) fail("only /2 denominators are supported");
        doubled = p;
      }
      if (!eat(close)) fail("unbalanced exponent bracket");
      return LaurentHalf::monomial_half(doubled);
    }
    return LaurentHalf::monomial_half(2 * integer());
  }

  SkeinPTElement factor() {
    skip_ws();
    if (eat('(')) {
      SkeinPTElement e = expression();
      if (!eat(')')) fail("unbalanced parenthesis");
      return e;
    }
    const char c = peek();
    if (c == 'X' || c == 'x') {
      ++pos;
      const std::int64_t i = integer();
      if (i < 1 || i > 3) fail("generators are X1, X2, X3");
      return SkeinPTElement::generator(static_cast<int>(i));
    }
    if (c == 'A' || c == 'a') {
      ++pos;
      if (eat('^')) return SkeinPTElement::scalar(a_power());
      return SkeinPTElement::scalar(LaurentHalf::A(1));
    }
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c)))
      return SkeinPTElement::scalar(LaurentHalf::constant(integer()));
    fail("expected a factor");
  }

  SkeinPTElement term() {
    SkeinPTElement acc = factor();
    while (eat('*')) acc = multiply(acc, factor());
    return acc;
  }

  SkeinPTElement expression() {
    SkeinPTElement acc = term();
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos;
        acc += term();
      } else if (c == '-') {
        ++pos;
        acc -= term();
      } else {
        return acc;
      }
    }
  }
};

}  // namespace

SkeinPTElement parse_skein_expr(const std::string& text) {
  Parser p(text);
  SkeinPTElement e = p.expression();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return e;
}

}  // namespace skeinlab::cli
