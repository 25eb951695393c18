#include "charp/parser.hpp"

#include <cctype>
#include <limits>

#include "charp/error.hpp"

namespace charp {

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse_all() {
    Polynomial f = expr();
    skip_blanks();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

  // Parses one expression and stops before a top-level ',' or the end.
  Polynomial parse_until_comma() { return expr(); }

  bool at_end() {
    skip_blanks();
    return pos_ == text_.size();
  }
  bool accept(char c) {
    skip_blanks();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::size_t position() const { return pos_; }
  [[noreturn]] void fail(const std::string& message) const { throw SyntaxError(message, pos_); }

 private:
  void skip_blanks() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (accept('^')) {
      skip_blanks();
      std::size_t at = pos_;
      std::uint64_t n = unsigned_literal(/*reduce=*/false);
      if (!b.is_constant() && n > kMaxExponent) {
        throw OverflowError("exponent " + std::to_string(n) + " at position " + std::to_string(at) +
                            " exceeds the limit 2^20");
      }
      return b.pow(n);
    }
    return b;
  }

  Polynomial base() {
    skip_blanks();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial::constant(ring_, static_cast<std::int64_t>(unsigned_literal(/*reduce=*/true)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = text_.substr(start, pos_ - start);
      auto index = ring_->variable_index(name);
      if (!index) throw UnknownVariable(std::string(name), start);
      return Polynomial::variable(ring_, *index);
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  // With reduce=true the literal is folded mod p digit by digit, so any length is fine.
  std::uint64_t unsigned_literal(bool reduce) {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected an integer");
    std::size_t start = pos_;
    const std::uint64_t p = ring_->characteristic();
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (reduce) {
        v = (v * 10 + digit) % p;
      } else {
        if (v > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
          throw OverflowError("integer literal at position " + std::to_string(start) + " is too large");
        }
        v = v * 10 + digit;
      }
      ++pos_;
    }
    return v;
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const RingPtr& ring) { return ExprParser(text, ring).parse_all(); }

std::vector<Polynomial> parse_poly_list(std::string_view text, const RingPtr& ring) {
  ExprParser parser(text, ring);
  std::vector<Polynomial> out;
  if (parser.at_end()) return out;
  for (;;) {
    out.push_back(parser.parse_until_comma());
    if (parser.at_end()) return out;
    if (!parser.accept(',')) parser.fail("expected ',' between expressions");
  }
}

}  // namespace charp
