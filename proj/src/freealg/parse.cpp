#include "flopalg/freealg/parse.hpp"

#include "flopalg/error.hpp"

#include <cctype>
#include <string>

namespace flopalg::freealg {

namespace {

bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  Parser(std::string_view text, const AlphabetPtr& alphabet, std::size_t line, std::size_t col0)
      : text_(text), alphabet_(alphabet), line_(line), col0_(col0) {}

  NCPoly run() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    NCPoly p = expr();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, col0_ + pos_ + 1);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  NCPoly expr() {
    NCPoly sum(alphabet_);
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
      skip_ws();
    }
    NCPoly t = term();
    sum += negate ? -t : t;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      skip_ws();
      t = term();
      sum += c == '-' ? -t : t;
    }
    return sum;
  }

  bool starts_factor() const {
    char c = peek();
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || is_name_char(c);
  }

  NCPoly term() {
    NCPoly prod = factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        prod = prod * factor();
      } else if (starts_factor()) {
        prod = prod * factor();
      } else {
        break;
      }
    }
    return prod;
  }

  NCPoly factor() {
    NCPoly base = primary();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent after '^'");
      std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 4) fail("exponent too large");
      base = power(base, std::stoul(digits));
    }
    return base;
  }

  NCPoly primary() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      skip_ws();
      NCPoly inner = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (is_name_char(c)) return name();
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  NCPoly number() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '/' && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    std::string_view lit = text_.substr(start, pos_ - start);
    Rational q;
    try {
      q = parse_rational(lit);
    } catch (const Error& e) {
      pos_ = start;
      fail(e.what());
    }
    return NCPoly::constant(alphabet_, q);
  }

  NCPoly name() {
    std::size_t best = 0;
    Letter letter = 0;
    for (std::size_t i = 0; i < alphabet_->size(); ++i) {
      const auto& n = alphabet_->name(static_cast<Letter>(i));
      if (n.size() > best && text_.substr(pos_, n.size()) == n) {
        best = n.size();
        letter = static_cast<Letter>(i);
      }
    }
    if (best == 0) {
      std::size_t end = pos_;
      while (end < text_.size() && is_name_char(text_[end])) ++end;
      fail("unknown generator '" + std::string(text_.substr(pos_, end - pos_)) + "'");
    }
    pos_ += best;
    if (std::isdigit(static_cast<unsigned char>(peek())))
      fail("digit directly after generator '" + alphabet_->name(letter) +
           "'; use '^' for powers or '*' for products");
    return NCPoly::generator(alphabet_, letter);
  }

  std::string_view text_;
  const AlphabetPtr& alphabet_;
  std::size_t line_;
  std::size_t col0_;
  std::size_t pos_ = 0;
};

}  // namespace

NCPoly parse_ncpoly(std::string_view text, const AlphabetPtr& alphabet, std::size_t line,
                    std::size_t column_offset) {
  return Parser(text, alphabet, line, column_offset).run();
}

}  // namespace flopalg::freealg
