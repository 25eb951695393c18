#include "charp/polynomial.hpp"

#include <algorithm>
#include <ostream>

#include "charp/error.hpp"

namespace charp {

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto& order = ring->order();
  const auto& field = ring->field();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.greater(a.monomial, b.monomial); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (t.monomial.size() != ring->nvars()) throw PreconditionError("monomial length does not match the ring");
    t.coeff %= field.characteristic();
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff = field.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return Polynomial(std::move(ring), std::move(out));
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t value) {
  Coeff c = ring->field().reduce(value);
  std::vector<Term> terms;
  if (c != 0) terms.push_back({c, Monomial(ring->nvars())});
  return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  std::vector<Exponent> e(ring->nvars(), 0);
  e.at(index) = 1;
  return monomial(std::move(ring), 1, Monomial(std::move(e)));
}

Polynomial Polynomial::monomial(RingPtr ring, Coeff coeff, Monomial m) {
  coeff %= ring->characteristic();
  std::vector<Term> terms;
  if (coeff != 0) terms.push_back({coeff, std::move(m)});
  return Polynomial(std::move(ring), std::move(terms));
}

bool Polynomial::is_homogeneous() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.monomial.degree() == terms_.front().monomial.degree(); });
}

std::uint64_t Polynomial::total_degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_ring(ring_, other.ring_);
  return minus_term_times(ring_->field().neg(1), Monomial(ring_->nvars()), other);
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  require_same_ring(ring_, other.ring_);
  return minus_term_times(1, Monomial(ring_->nvars()), other);
}

Polynomial Polynomial::operator-() const { return scaled(ring_->field().neg(1)); }

Polynomial Polynomial::minus_term_times(Coeff c, const Monomial& m, const Polynomial& other) const {
  const auto& field = ring_->field();
  const auto& order = ring_->order();
  Coeff negc = field.neg(c);
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end()) {
      out.push_back(*a++);
      continue;
    }
    Monomial mb = b->monomial * m;
    if (a == terms_.end()) {
      out.push_back({field.mul(negc, b->coeff), std::move(mb)});
      ++b;
      continue;
    }
    auto cmp = order.compare(a->monomial, mb);
    if (cmp > 0) {
      out.push_back(*a++);
    } else if (cmp < 0) {
      out.push_back({field.mul(negc, b->coeff), std::move(mb)});
      ++b;
    } else {
      Coeff s = field.add(a->coeff, field.mul(negc, b->coeff));
      if (s != 0) out.push_back({s, std::move(mb)});
      ++a;
      ++b;
    }
  }
  // Products of terms with a zero coefficient never arise: negc != 0 unless c == 0.
  if (negc == 0) {
    std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_ring(ring_, other.ring_);
  if (is_zero() || other.is_zero()) return Polynomial(ring_);
  if (terms_.size() < other.terms_.size()) return other * *this;
  // Accumulate one pass per term of the shorter factor; each pass is a sorted merge.
  Polynomial acc(ring_);
  for (const auto& t : other.terms_) {
    acc = acc.minus_term_times(ring_->field().neg(t.coeff), t.monomial, *this);
  }
  return acc;
}

Polynomial Polynomial::scaled(Coeff c) const {
  c %= ring_->characteristic();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = ring_->field().mul(t.coeff, c);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::times_term(Coeff c, const Monomial& m) const {
  c %= ring_->characteristic();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({ring_->field().mul(t.coeff, c), t.monomial * m});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::frobenius(unsigned e) const {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= ring_->characteristic();
    if (q > kMaxExponent) {
      if (is_constant()) return *this;
      throw OverflowError("Frobenius level p^" + std::to_string(e) + " exceeds the exponent limit 2^20");
    }
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  // x -> x^q is strictly monotone for every supported order, so the term order is preserved.
  for (const auto& t : terms_) out.push_back({t.coeff, t.monomial.scaled(q)});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::pow(std::uint64_t n) const {
  if (n == 0) return constant(ring_, 1);
  if (is_constant()) {
    if (is_zero()) return *this;
    return constant(ring_, ring_->field().pow(terms_[0].coeff, n));
  }
  if (n > kMaxExponent) throw OverflowError("power " + std::to_string(n) + " exceeds the exponent limit 2^20");
  // f^n = prod_i (f^(p^i))^(d_i) for the base-p digits d_i of n; f^(p^i) is termwise.
  const std::uint64_t p = ring_->characteristic();
  Polynomial result = constant(ring_, 1);
  unsigned level = 0;
  while (n > 0) {
    std::uint64_t digit = n % p;
    n /= p;
    if (digit > 0) {
      Polynomial base = frobenius(level);
      Polynomial factor = constant(ring_, 1);
      for (; digit > 0; digit >>= 1) {
        if (digit & 1u) factor = factor * base;
        if (digit > 1) base = base * base;
      }
      result = result * factor;
    }
    ++level;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff() == 1) return *this;
  return scaled(ring_->field().inv(leading_coeff()));
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  require_same_ring(ring_, divisor.ring_);
  if (divisor.is_zero()) throw PreconditionError("division by the zero polynomial");
  const auto& field = ring_->field();
  Coeff inv_lc = field.inv(divisor.leading_coeff());
  Polynomial rest = *this;
  std::vector<Term> quotient;
  while (!rest.is_zero()) {
    const Term& lt = rest.leading_term();
    if (!divisor.leading_monomial().divides(lt.monomial)) return std::nullopt;
    Term q{field.mul(lt.coeff, inv_lc), divisor.leading_monomial().quotient_of(lt.monomial)};
    rest = rest.minus_term_times(q.coeff, q.monomial, divisor);
    quotient.push_back(std::move(q));
  }
  return Polynomial(ring_, std::move(quotient));
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (target->nvars() != ring_->nvars() || target->characteristic() != ring_->characteristic()) {
    throw RingMismatch();
  }
  return from_terms(target, terms_);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const auto& names = ring_->variables();
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) s += " + ";
    const Term& t = terms_[i];
    std::string mono;
    for (std::size_t v = 0; v < names.size(); ++v) {
      Exponent e = t.monomial[v];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[v];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      s += std::to_string(t.coeff);
    } else if (t.coeff == 1) {
      s += mono;
    } else {
      s += std::to_string(t.coeff) + "*" + mono;
    }
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << f.to_string(); }

}  // namespace charp
