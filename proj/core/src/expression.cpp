#include "steklov/expression.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include <fmt/format.h>

#include "steklov/errors.hpp"
#include "steklov/harmonics.hpp"

namespace steklov {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  TrigPolynomial parse() {
    auto f = expr();
    skipSpace();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, fmt::format("{} at offset {} in \"{}\"", what, pos_, text_));
  }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(fmt::format("expected '{}'", c));
  }

  bool acceptWord(std::string_view word) {
    skipSpace();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  TrigPolynomial expr() {
    auto f = term();
    while (true) {
      if (accept('+')) {
        f += term();
      } else if (accept('-')) {
        f -= term();
      } else {
        return f;
      }
    }
  }

  TrigPolynomial term() {
    auto f = factor();
    while (accept('*')) f = multiply(f, factor());
    return f;
  }

  TrigPolynomial factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    if (accept('(')) {
      auto f = expr();
      expect(')');
      return f;
    }
    if (acceptWord("cos")) return trig(true);
    if (acceptWord("sin")) return trig(false);
    return TrigPolynomial::constant(number());
  }

  TrigPolynomial trig(bool cosine) {
    expect('(');
    int sign = 1;
    if (accept('-')) sign = -1;
    skipSpace();
    int k = 1;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const auto* begin = text_.data() + pos_;
      const auto [ptr, ec] = std::from_chars(begin, text_.data() + text_.size(), k);
      if (ec != std::errc{}) fail("bad mode number");
      pos_ += static_cast<std::size_t>(ptr - begin);
      accept('*');
    }
    if (!accept('t')) fail("expected 't'");
    expect(')');
    k *= sign;
    return cosine ? TrigPolynomial::cosine(k) : TrigPolynomial::sine(k);
  }

  double number() {
    skipSpace();
    const auto* begin = text_.data() + pos_;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(begin, text_.data() + text_.size(), value);
    if (ec != std::errc{} || ptr == begin) fail("expected a number, cos(...) or sin(...)");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }
};

}  // namespace

TrigPolynomial parseExpression(std::string_view text) { return Parser(text).parse(); }

}  // namespace steklov
