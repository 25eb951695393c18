#include "session.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

namespace charp::cli {
namespace {

std::string strip_position(const std::string& what) {
  auto at = what.rfind(" at position ");
  return at == std::string::npos ? what : what.substr(0, at);
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Scans one statement. Columns are 0-based internally.
class Line {
 public:
  Line(std::string_view text, std::size_t number) : text_(text), number_(number) {}

  [[noreturn]] void fail(const std::string& message, std::size_t col) const {
    throw SessionError(message, number_, col + 1);
  }
  [[noreturn]] void fail(const std::string& message) const { fail(message, pos_); }

  void skip_blanks() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
  }
  bool at_end() {
    skip_blanks();
    return pos_ >= text_.size();
  }
  std::size_t pos() const noexcept { return pos_; }
  void set_pos(std::size_t p) noexcept { pos_ = p; }

  std::string identifier(const char* what) {
    skip_blanks();
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail(std::string("expected ") + what);
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint64_t integer() {
    skip_blanks();
    std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (value > 0xffffffffULL) fail("integer too large", start);
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    return value;
  }

  void expect(char c) {
    skip_blanks();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    skip_blanks();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string_view rest() const { return text_.substr(pos_); }

 private:
  std::string_view text_;
  std::size_t number_;
  std::size_t pos_ = 0;
};

RingPtr ring_from(Line& line) {
  std::size_t start = line.pos();
  std::string f = line.identifier("'F'");
  if (f != "F") line.fail("expected 'F'", start);
  line.skip_blanks();
  std::size_t pcol = line.pos();
  std::uint64_t p = line.integer();
  line.expect('[');
  std::vector<std::string> vars;
  std::vector<std::size_t> cols;
  do {
    line.skip_blanks();
    cols.push_back(line.pos());
    vars.push_back(line.identifier("variable name"));
  } while (line.accept(','));
  line.expect(']');
  MonomialOrder order = MonomialOrder::grevlex();
  if (!line.at_end()) {
    std::size_t kcol = line.pos();
    if (line.identifier("'order'") != "order") line.fail("expected 'order'", kcol);
    line.skip_blanks();
    std::size_t ocol = line.pos();
    std::string name = line.identifier("monomial order");
    if (name == "lex") {
      order = MonomialOrder::lex();
    } else if (name != "grevlex") {
      line.fail("unknown monomial order '" + name + "'", ocol);
    }
  }
  if (!line.at_end()) line.fail("unexpected trailing input");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (vars[i] == vars[j]) line.fail("duplicate variable '" + vars[i] + "'", cols[i]);
    }
  }
  if (p > 2147483647ULL || !is_prime(p)) line.fail("characteristic " + std::to_string(p) + " is not a prime below 2^31", pcol);
  try {
    return PolyRing::make(static_cast<std::uint32_t>(p), vars, order);
  } catch (const Error& e) {
    line.fail(e.what(), start);
  }
}

template <class Fn>
auto with_located_errors(Line& line, Fn&& fn) {
  std::size_t offset = line.pos();
  try {
    return fn(line.rest());
  } catch (const SyntaxError& e) {
    line.fail(strip_position(e.what()), offset + e.position());
  } catch (const Error& e) {
    line.fail(e.what(), offset);
  }
}

void statement(Session& s, Line& line) {
  std::size_t kcol = line.pos();
  std::string keyword = line.identifier("statement keyword");
  line.skip_blanks();
  std::size_t ncol = line.pos();
  std::string name = line.identifier("name");
  line.expect('=');
  line.skip_blanks();

  if (keyword == "ring") {
    if (s.rings.contains(name)) line.fail("duplicate ring name '" + name + "'", ncol);
    RingPtr r = ring_from(line);
    s.rings.emplace(name, r);
    s.current_ring = r;
    s.current_ring_name = name;
    return;
  }
  if (keyword != "ideal" && keyword != "poly" && keyword != "minprimes") {
    line.fail("unknown statement '" + keyword + "'", kcol);
  }
  if (!s.current_ring) line.fail("no ring declared before '" + name + "'", kcol);
  const RingPtr& r = s.current_ring;

  if (keyword == "ideal") {
    if (s.ideals.contains(name)) line.fail("duplicate ideal name '" + name + "'", ncol);
    if (line.at_end()) line.fail("expected polynomial expression");
    auto gens = with_located_errors(line, [&](std::string_view t) { return parse_poly_list(t, r); });
    s.ideals.emplace(name, Ideal(r, std::move(gens)));
  } else if (keyword == "poly") {
    if (s.polys.contains(name)) line.fail("duplicate poly name '" + name + "'", ncol);
    auto f = with_located_errors(line, [&](std::string_view t) { return parse_poly(t, r); });
    s.polys.emplace(name, std::move(f));
  } else {
    if (s.minprimes.contains(name)) line.fail("duplicate minprimes name '" + name + "'", ncol);
    std::vector<Ideal> primes;
    do {
      line.skip_blanks();
      std::size_t col = line.pos();
      std::string ideal = line.identifier("ideal name");
      auto it = s.ideals.find(ideal);
      if (it == s.ideals.end()) line.fail("unknown ideal '" + ideal + "'", col);
      if (!same_ring(it->second.ring(), r)) line.fail("ideal '" + ideal + "' belongs to another ring", col);
      primes.push_back(it->second);
    } while (line.accept(','));
    if (!line.at_end()) line.fail("unexpected trailing input");
    s.minprimes.emplace(name, std::move(primes));
  }
}

}  // namespace

Session parse_session(std::string_view text) {
  Session s;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    raw = raw.substr(0, raw.find('#'));
    Line line(raw, number);
    if (line.at_end()) continue;
    line.set_pos(0);
    statement(s, line);
  }
  return s;
}

Session load_session(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open session file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_session(buf.str());
}

RingPtr parse_ring_spec(std::string_view text) {
  Line line(text, 1);
  line.skip_blanks();
  return ring_from(line);
}

}  // namespace charp::cli
