#include "charp/fsing.hpp"

#include "charp/error.hpp"
#include "charp/frobenius.hpp"
#include "charp/groebner.hpp"
#include "charp/ideal_ops.hpp"

namespace charp {

namespace {

// Root of (f · L) at level 1 for an ideal L, generated from L's reduced basis.
Ideal root_of_product(const Polynomial& f, const Ideal& L) {
  std::vector<Polynomial> gens;
  for (const auto& g : L.groebner_basis()) gens.push_back(f * g);
  return frobenius_root(Ideal(f.ring(), std::move(gens)), 1);
}

void require_in_adjoint(const Ideal& a, const Polynomial& u) {
  require_same_ring(a.ring(), u.ring());
  if (!ideal_member(u, frobenius_adjoint(a))) {
    throw PreconditionError("u = " + u.to_string() + " is not in (a^[p] : a)");
  }
}

void require_descent(const Ideal& larger, const Ideal& smaller, unsigned n) {
  if (!ideal_contains(larger, smaller)) {
    throw InternalError("chain descent violated between t_" + std::to_string(n) + " and t_" + std::to_string(n + 1));
  }
}

}  // namespace

Ideal frobenius_adjoint(const Ideal& a) {
  if (is_unit_ideal(a)) throw PreconditionError("the defining ideal must be proper");
  if (a.is_zero()) return Ideal::unit(a.ring());
  return ideal_colon(frobenius_power(a, 1), a);
}

namespace {

void require_fedder_inputs(const Ideal& a, const Ideal& m) {
  require_same_ring(a.ring(), m.ring());
  if (is_unit_ideal(m)) throw PreconditionError("the maximal ideal must be proper");
  if (!ideal_contains(m, a)) throw PreconditionError("the defining ideal is not contained in the given prime");
}

}  // namespace

bool fedder_fpure(const Ideal& a, const Ideal& m) { return select_u_candidates(a, m).fpure; }

USelection select_u_candidates(const Ideal& a, const Ideal& q) {
  require_fedder_inputs(a, q);
  Ideal adjoint = frobenius_adjoint(a);
  Ideal q_frob = frobenius_power(q, 1);
  USelection out;
  for (const auto& g : adjoint.groebner_basis()) {
    if (!ideal_member(g, q_frob)) out.candidates.push_back(g);
  }
  // If every generator lies in q^[p], so does the whole ideal.
  out.fpure = !out.candidates.empty();
  return out;
}

HSLChainSpec::HSLChainSpec(Ideal a, Polynomial u, unsigned max_e)
    : a_(std::move(a)), u_(std::move(u)), max_e_(max_e) {
  require_in_adjoint(a_, u_);
}

Ideal omega_root(const Polynomial& u, unsigned n) {
  Ideal J = Ideal::unit(u.ring());
  for (unsigned i = 0; i < n; ++i) J = root_of_product(u, J);
  return J;
}

HSLReport hsl_chain(const HSLChainSpec& spec) {
  const Ideal& a = spec.a();
  const Polynomial& u = spec.u();
  HSLReport report;
  // J_n = (u^ω_n)^[1/p^n], from ω_{n+1} = ω_n + p^n and (f g^q)^[1/q] = g (f)^[1/q].
  Ideal J = Ideal::unit(a.ring());
  report.chain.push_back(ideal_sum(J, a));
  for (unsigned n = 0; n < spec.max_e(); ++n) {
    J = root_of_product(u, J);
    Ideal next = ideal_sum(J, a);
    require_descent(report.chain.back(), next, n);
    const bool equal = ideal_equal(report.chain.back(), next);
    report.chain.push_back(std::move(next));
    if (equal) {
      report.hsl = n;
      report.stable = true;
      break;
    }
  }
  if (report.stable) {
    const Ideal& settled = report.chain.back();
    for (unsigned extra = 0; extra < 2; ++extra) {
      J = root_of_product(u, J);
      if (!ideal_equal(ideal_sum(J, a), settled)) {
        throw InternalError("chain changed again after stabilizing at t_" + std::to_string(*report.hsl));
      }
      ++report.persistence_checked;
    }
  }
  return report;
}

std::optional<unsigned> uniform_hsl_bound(const Ideal& a, const Polynomial& u, unsigned max_e) {
  return hsl_chain(HSLChainSpec(a, u, max_e)).hsl;
}

TestIdealBoundSpec::TestIdealBoundSpec(Ideal a, Polynomial u, Polynomial d, unsigned h, unsigned max_e)
    : a_(std::move(a)), u_(std::move(u)), d_(std::move(d)), h_(h), max_e_(max_e) {
  require_same_ring(a_.ring(), d_.ring());
  if (ideal_member(d_, a_)) throw PreconditionError("d = " + d_.to_string() + " lies in a");
  hsl_ = uniform_hsl_bound(a_, u_, max_e_);
  if (hsl_ && h_ < *hsl_) {
    throw PreconditionError("h = " + std::to_string(h_) + " is below the HSL stabilization index " +
                            std::to_string(*hsl_));
  }
  if (max_e_ < h_) throw PreconditionError("max_e must be at least h");
}

TestIdealBound test_ideal_lower_bound(const TestIdealBoundSpec& spec) {
  const Ideal& a = spec.a();
  const Polynomial& u = spec.u();
  const unsigned h = spec.h();
  // With n = h + m: (d^(p^h) u^ω_n)^[1/p^n] = K_m, where K_0 = d · J_h and
  // K_{m+1} = (u · K_m)^[1/p], J_h = (u^ω_h)^[1/p^h].
  Ideal K = ideal_product(Ideal::principal(spec.d()), omega_root(u, h));
  Ideal sigma = ideal_sum(a, K);
  TestIdealBound out{sigma, false, h, false};
  for (unsigned n = h; n < spec.max_e(); ++n) {
    K = root_of_product(u, K);
    Ideal next = ideal_sum(sigma, K);
    if (ideal_equal(next, sigma)) {
      out.stable = true;
      break;
    }
    sigma = std::move(next);
    out.last_level = n + 1;
  }
  out.ideal = sigma;
  out.strictly_contains_a = !ideal_equal(sigma, a);
  return out;
}

}  // namespace charp
