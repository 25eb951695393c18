#include "charp/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "charp/error.hpp"

namespace charp {

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint64_t sequence;
};

struct PairKey {
  PairSelection selection;
  bool operator()(const Pair& a, const Pair& b) const {
    if (selection == PairSelection::Fifo) return a.sequence < b.sequence;
    return std::make_tuple(a.lcm.degree(), a.i, a.j) < std::make_tuple(b.lcm.degree(), b.i, b.j);
  }
};

// Reduction kernel on a raw term vector; `head` marks the first term not yet
// moved to the remainder.
Polynomial reduce_terms(const RingPtr& ring, std::vector<Term> work, std::span<const Polynomial> divisors,
                        bool tail_only = false) {
  const auto& field = ring->field();
  const auto& order = ring->order();
  std::vector<Term> remainder;
  std::size_t head = 0;
  if (tail_only && !work.empty()) {
    remainder.push_back(std::move(work.front()));
    head = 1;
  }
  std::vector<Term> merged;
  while (head < work.size()) {
    const Term& lt = work[head];
    const Polynomial* divisor = nullptr;
    for (const auto& g : divisors) {
      if (g.leading_monomial().divides(lt.monomial)) {
        divisor = &g;
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.push_back(std::move(work[head]));
      ++head;
      continue;
    }
    const Coeff c = field.mul(lt.coeff, field.inv(divisor->leading_coeff()));
    const Monomial m = divisor->leading_monomial().quotient_of(lt.monomial);
    const Coeff negc = field.neg(c);
    // work[head] cancels against the divisor's leading term.
    merged.clear();
    merged.reserve(work.size() - head + divisor->size());
    auto a = work.begin() + static_cast<std::ptrdiff_t>(head) + 1;
    auto b = divisor->terms().begin() + 1;
    auto a_end = work.end();
    auto b_end = divisor->terms().end();
    while (a != a_end || b != b_end) {
      if (b == b_end) {
        merged.push_back(std::move(*a++));
        continue;
      }
      Monomial mb = b->monomial * m;
      if (a == a_end) {
        merged.push_back({field.mul(negc, b->coeff), std::move(mb)});
        ++b;
        continue;
      }
      auto cmp = order.compare(a->monomial, mb);
      if (cmp > 0) {
        merged.push_back(std::move(*a++));
      } else if (cmp < 0) {
        merged.push_back({field.mul(negc, b->coeff), std::move(mb)});
        ++b;
      } else {
        Coeff s = field.add(a->coeff, field.mul(negc, b->coeff));
        if (s != 0) merged.push_back({s, std::move(mb)});
        ++a;
        ++b;
      }
    }
    std::swap(work, merged);
    head = 0;
  }
  return Polynomial::from_canonical_terms(ring, std::move(remainder));
}

class Buchberger {
 public:
  Buchberger(const RingPtr& ring, PairSelection selection) : ring_(ring), pairs_(PairKey{selection}) {}

  void add(Polynomial h) {
    h = h.monic();
    const std::size_t k = basis_.size();
    const Monomial& lh = h.leading_monomial();

    // Gebauer–Möller update. First, the candidate pairs (g, h) for active g.
    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < k; ++g) {
      if (active_[g]) candidates.push_back({g, k, basis_[g].leading_monomial().lcm(lh), 0});
    }
    // Chain criterion among the new pairs: drop (g, h) when another new pair's
    // lcm properly divides lcm(g, h); coprime pairs are kept at this stage.
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& pa = candidates[a];
      bool coprime = basis_[pa.i].leading_monomial().coprime(lh);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t b = 0; b < candidates.size() && !dominated; ++b) {
          if (a == b) continue;
          const Pair& pb = candidates[b];
          if (pb.lcm.divides(pa.lcm)) {
            // Among equal lcms keep the first one.
            dominated = !(pb.lcm == pa.lcm) || b < a;
          }
        }
      }
      if (!dominated) kept.push_back(pa);
    }
    // Product criterion: coprime leading monomials reduce to zero.
    std::erase_if(kept, [&](const Pair& p) { return basis_[p.i].leading_monomial().coprime(lh); });

    // Drop old pairs (g1, g2) whose lcm is strictly divisible "through" h.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Monomial& l = it->lcm;
      if (lh.divides(l) && !(basis_[it->i].leading_monomial().lcm(lh) == l) &&
          !(basis_[it->j].leading_monomial().lcm(lh) == l)) {
        it = pairs_.erase(it);
      } else {
        ++it;
      }
    }
    for (auto& p : kept) {
      p.sequence = sequence_++;
      pairs_.insert(std::move(p));
    }
    for (std::size_t g = 0; g < k; ++g) {
      if (active_[g] && lh.divides(basis_[g].leading_monomial())) active_[g] = false;
    }
    basis_.push_back(std::move(h));
    active_.push_back(true);
  }

  void run() {
    while (!pairs_.empty() && !unit_) {
      Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      const Polynomial& f = basis_[p.i];
      const Polynomial& g = basis_[p.j];
      Monomial mf = f.leading_monomial().quotient_of(p.lcm);
      Monomial mg = g.leading_monomial().quotient_of(p.lcm);
      // Both are monic, so S(f, g) = mf*f - mg*g.
      Polynomial s = f.times_term(1, mf).minus_term_times(1, mg, g);
      Polynomial r = reduce(s, basis_);
      if (r.is_zero()) continue;
      if (r.is_constant()) {
        unit_ = true;
        break;
      }
      add(std::move(r));
    }
  }

  std::vector<Polynomial> reduced() const {
    if (unit_) return {Polynomial::constant(ring_, 1)};
    // Keep active elements; an element is inactive only if a later one's
    // leading monomial divides its own, so the active set has minimal leading terms
    // up to duplicates, which are removed below.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (!active_[i]) continue;
      bool redundant = false;
      for (const auto& m : minimal) {
        if (m.leading_monomial().divides(basis_[i].leading_monomial())) {
          redundant = true;
          break;
        }
      }
      if (!redundant) {
        std::erase_if(minimal, [&](const Polynomial& m) {
          return basis_[i].leading_monomial().divides(m.leading_monomial());
        });
        minimal.push_back(basis_[i]);
      }
    }
    const auto& order = ring_->order();
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
      return order.greater(a.leading_monomial(), b.leading_monomial());
    });
    std::vector<Polynomial> out;
    out.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j != i) others.push_back(minimal[j]);
      }
      out.push_back(reduce_terms(ring_, minimal[i].terms(), others, /*tail_only=*/true).monic());
    }
    return out;
  }

 private:
  RingPtr ring_;
  std::vector<Polynomial> basis_;
  std::vector<bool> active_;
  std::set<Pair, PairKey> pairs_;
  std::uint64_t sequence_ = 0;
  bool unit_ = false;
};

}  // namespace

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> divisors) {
  for (const auto& d : divisors) require_same_ring(f.ring(), d.ring());
  return reduce_terms(f.ring(), f.terms(), divisors);
}

std::vector<Polynomial> compute_reduced_basis(const RingPtr& ring, std::span<const Polynomial> generators,
                                              PairSelection selection) {
  Buchberger engine(ring, selection);
  std::vector<Polynomial> seen;
  for (const auto& g : generators) {
    require_same_ring(ring, g.ring());
    if (g.is_zero()) continue;
    Polynomial r = reduce(g, seen);
    if (r.is_zero()) continue;
    if (r.is_constant()) return {Polynomial::constant(ring, 1)};
    seen.push_back(r.monic());
    engine.add(r);
  }
  engine.run();
  return engine.reduced();
}

const std::vector<Polynomial>& groebner_basis(const Ideal& I) { return I.groebner_basis(); }

Polynomial normal_form(const Polynomial& f, const Ideal& I) {
  require_same_ring(f.ring(), I.ring());
  return reduce_terms(f.ring(), f.terms(), I.groebner_basis());
}

bool ideal_member(const Polynomial& f, const Ideal& I) { return f.is_zero() || normal_form(f, I).is_zero(); }

bool ideal_contains(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  return std::all_of(J.generators().begin(), J.generators().end(),
                     [&](const Polynomial& g) { return ideal_member(g, I); });
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  return I.groebner_basis() == J.groebner_basis();
}

bool is_unit_ideal(const Ideal& I) {
  const auto& gb = I.groebner_basis();
  return gb.size() == 1 && gb.front().is_one();
}

}  // namespace charp
