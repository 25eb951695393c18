#include "charp/ideal_ops.hpp"

#include <optional>

#include "charp/error.hpp"
#include "charp/groebner.hpp"

namespace charp {

namespace {

// Drops the first k exponents of each term; those exponents must be zero.
Polynomial truncate_into(const Polynomial& f, const RingPtr& target, std::size_t k) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    auto e = t.monomial.exponents();
    terms.push_back({t.coeff, Monomial(std::vector<Exponent>(e.begin() + static_cast<std::ptrdiff_t>(k), e.end()))});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

bool free_of_leading(const Polynomial& f, std::size_t k) {
  for (const auto& t : f.terms()) {
    for (std::size_t i = 0; i < k; ++i) {
      if (t.monomial[i] != 0) return false;
    }
  }
  return true;
}

// Elimination with an explicit ring for the result. `work_ring` must use an
// elimination order for the first k variables.
Ideal eliminate_with(const RingPtr& work_ring, const std::vector<Polynomial>& generators, std::size_t k,
                     const RingPtr& target) {
  auto basis = compute_reduced_basis(work_ring, generators);
  std::vector<Polynomial> kept;
  for (const auto& g : basis) {
    if (free_of_leading(g, k)) kept.push_back(truncate_into(g, target, k));
  }
  // The surviving elements form the reduced basis of the elimination ideal under
  // the restriction of block(k), which is grevlex on the remaining variables.
  if (target->order() == MonomialOrder::grevlex()) {
    auto generators_copy = kept;
    return Ideal::with_reduced_basis(target, std::move(generators_copy), std::move(kept));
  }
  return Ideal(target, std::move(kept));
}

}  // namespace

Polynomial shift_into(const Polynomial& f, const RingPtr& target, std::size_t offset) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<Exponent> e(offset, 0);
    auto src = t.monomial.exponents();
    e.insert(e.end(), src.begin(), src.end());
    terms.push_back({t.coeff, Monomial(std::move(e))});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  std::vector<Polynomial> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  std::vector<Polynomial> gens;
  gens.reserve(I.generators().size() * J.generators().size());
  for (const auto& f : I.generators()) {
    for (const auto& g : J.generators()) gens.push_back(f * g);
  }
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  const RingPtr& ring = I.ring();
  if (I.is_zero() || J.is_zero()) return Ideal::zero(ring);
  RingPtr ext = ring->with_tag_variable();
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators()) gens.push_back(t * shift_into(f, ext, 1));
  for (const auto& g : J.generators()) gens.push_back(one_minus_t * shift_into(g, ext, 1));
  return eliminate_with(ext, gens, 1, ring);
}

Ideal ideal_colon(const Ideal& I, const Polynomial& g) {
  require_same_ring(I.ring(), g.ring());
  if (g.is_zero()) throw PreconditionError("colon by the zero polynomial");
  if (g.is_constant()) return I;
  Ideal meet = ideal_intersect(I, Ideal::principal(g));
  std::vector<Polynomial> quotients;
  for (const auto& h : meet.groebner_basis()) {
    auto q = h.divide_exact(g);
    if (!q) throw InternalError("generator of I ∩ (g) is not divisible by g: " + h.to_string());
    quotients.push_back(std::move(*q));
  }
  return Ideal(I.ring(), std::move(quotients));
}

Ideal ideal_colon(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  if (J.is_zero()) throw PreconditionError("colon by the zero ideal");
  std::optional<Ideal> acc;
  for (const auto& g : J.generators()) {
    Ideal part = ideal_colon(I, g);
    acc = acc ? ideal_intersect(*acc, part) : part;
  }
  return *acc;
}

Ideal eliminate(const Ideal& I, std::size_t k) {
  const RingPtr& ring = I.ring();
  if (k < 1 || k >= ring->nvars()) {
    throw PreconditionError("cannot eliminate " + std::to_string(k) + " of " + std::to_string(ring->nvars()) +
                            " variables");
  }
  RingPtr work = ring->with_order(MonomialOrder::block(k));
  std::vector<Polynomial> gens;
  gens.reserve(I.generators().size());
  for (const auto& g : I.generators()) gens.push_back(g.in_ring(work));
  return eliminate_with(work, gens, k, ring->drop_leading(k));
}

Ideal saturate(const Ideal& I, const Polynomial& f) {
  require_same_ring(I.ring(), f.ring());
  if (f.is_zero()) throw PreconditionError("saturation at the zero polynomial");
  Ideal current = I;
  for (;;) {
    Ideal next = ideal_colon(current, f);
    if (ideal_equal(next, current)) return current;
    current = std::move(next);
  }
}

}  // namespace charp
