#include "charp/frobenius.hpp"

#include <algorithm>
#include <map>

#include "charp/error.hpp"
#include "charp/groebner.hpp"

namespace charp {

FrobeniusContext::FrobeniusContext(std::uint32_t p, unsigned e) : p_(p), e_(e), q_(1) {
  for (unsigned i = 0; i < e; ++i) {
    q_ *= p;
    if (q_ > kMaxExponent) {
      throw OverflowError("p^e = " + std::to_string(p) + "^" + std::to_string(e) + " exceeds the limit 2^20");
    }
  }
}

std::uint64_t omega(unsigned n, std::uint32_t p) {
  constexpr std::uint64_t limit = std::uint64_t{1} << 63;
  std::uint64_t w = 0;
  for (unsigned i = 0; i < n; ++i) {
    if (w > (limit - 1) / p) throw OverflowError("omega_" + std::to_string(n) + " exceeds 2^63");
    w = 1 + p * w;
  }
  return w;
}

OmegaSequence::OmegaSequence(std::uint32_t p, unsigned k) : p_(p) {
  values_.reserve(k + 1);
  for (unsigned n = 0; n <= k; ++n) values_.push_back(omega(n, p));
}

Polynomial FrobeniusDecomposition::reconstruct(const RingPtr& ring) const {
  Polynomial sum(ring);
  for (const auto& [mu, h] : components) {
    std::vector<Term> terms;
    terms.reserve(h.size());
    for (const auto& t : h.terms()) terms.push_back({t.coeff, t.monomial.scaled(q) * mu});
    sum = sum + Polynomial::from_terms(ring, std::move(terms));
  }
  return sum;
}

Ideal frobenius_power(const Ideal& I, unsigned e) {
  if (e == 0) return I;
  FrobeniusContext level(I.ring()->characteristic(), e);
  std::vector<Polynomial> gens;
  gens.reserve(I.generators().size());
  for (const auto& g : I.generators()) gens.push_back(g.frobenius(e));
  std::vector<Polynomial> basis;
  for (const auto& g : I.groebner_basis()) basis.push_back(g.frobenius(e));
  return Ideal::with_reduced_basis(I.ring(), std::move(gens), std::move(basis));
}

FrobeniusDecomposition frobenius_decompose(const Polynomial& g, unsigned e) {
  if (e < 1) throw PreconditionError("Frobenius decomposition needs level e >= 1");
  const RingPtr& ring = g.ring();
  FrobeniusContext level(ring->characteristic(), e);
  const std::uint64_t q = level.q();
  const auto& order = ring->order();
  auto cmp = [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); };
  std::map<Monomial, std::vector<Term>, decltype(cmp)> parts(cmp);
  const std::size_t n = ring->nvars();
  for (const auto& t : g.terms()) {
    std::vector<Exponent> residue(n), quotient(n);
    for (std::size_t i = 0; i < n; ++i) {
      residue[i] = static_cast<Exponent>(t.monomial[i] % q);
      quotient[i] = static_cast<Exponent>(t.monomial[i] / q);
    }
    // c^(1/q) = c over F_p.
    parts[Monomial(std::move(residue))].push_back({t.coeff, Monomial(std::move(quotient))});
  }
  FrobeniusDecomposition out{q, {}};
  for (auto& [mu, terms] : parts) {
    Polynomial h = Polynomial::from_terms(ring, std::move(terms));
    if (!h.is_zero()) out.components.emplace_back(mu, std::move(h));
  }
  return out;
}

Ideal frobenius_root(const Ideal& I, unsigned e) {
  if (e == 0) return I;
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) {
    for (auto& [mu, h] : frobenius_decompose(g, e).components) gens.push_back(std::move(h));
  }
  return Ideal(I.ring(), std::move(gens));
}

}  // namespace charp
