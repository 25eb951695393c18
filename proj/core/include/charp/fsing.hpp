#pragma once

#include <optional>
#include <vector>

#include "charp/ideal.hpp"

namespace charp {

/// (a^[p] : a). The zero ideal gives the unit ideal; the unit ideal is rejected.
Ideal frobenius_adjoint(const Ideal& a);

/// Fedder's test at m: R = S/a is F-pure at m iff (a^[p] : a) ⊄ m^[p].
/// Throws PreconditionError unless a ⊆ m and m is proper.
bool fedder_fpure(const Ideal& a, const Ideal& m);

struct USelection {
  /// Reduced-basis generators of (a^[p] : a) outside q^[p].
  std::vector<Polynomial> candidates;
  /// False exactly when (a^[p] : a) ⊆ q^[p] (not F-pure at q); candidates is then empty.
  bool fpure = false;
};

USelection select_u_candidates(const Ideal& a, const Ideal& q);

/// Inputs of the chain t_n = (u^ω_n)^[1/p^n] + a. Construction checks u ∈ (a^[p] : a).
class HSLChainSpec {
 public:
  HSLChainSpec(Ideal a, Polynomial u, unsigned max_e);

  const Ideal& a() const noexcept { return a_; }
  const Polynomial& u() const noexcept { return u_; }
  std::uint32_t characteristic() const noexcept { return a_.ring()->characteristic(); }
  unsigned max_e() const noexcept { return max_e_; }

 private:
  Ideal a_;
  Polynomial u_;
  unsigned max_e_;
};

struct HSLReport {
  /// t_0, ..., t_k. When stable, k = hsl + 1 and t_hsl = t_{hsl+1}.
  std::vector<Ideal> chain;
  /// First n with t_n = t_{n+1}, if found within max_e.
  std::optional<unsigned> hsl;
  bool stable = false;
  /// Chain elements past t_{hsl+1} recomputed and found equal to t_hsl.
  unsigned persistence_checked = 0;
};

/// Computes the chain until two consecutive members agree or t_{max_e} is
/// reached. Descent t_n ⊇ t_{n+1} is asserted at every step, and stability is
/// re-checked on two further members; a violation throws InternalError.
HSLReport hsl_chain(const HSLChainSpec& spec);

/// Global stabilization index of the chain, bounding every local HSL number;
/// nullopt when unresolved within max_e.
std::optional<unsigned> uniform_hsl_bound(const Ideal& a, const Polynomial& u, unsigned max_e);

/// (u^ω_n)^[1/p^n] via the recursion J_0 = (1), J_{n+1} = (u · J_n)^[1/p].
/// Exposed so callers and tests can compare with the direct root of u^ω_n.
Ideal omega_root(const Polynomial& u, unsigned n);

/// Inputs of the partial sums a + Σ_{h<=n<=k} (d^(p^h) u^ω_n)^[1/p^n].
/// Construction checks d ∉ a, u ∈ (a^[p] : a), and h >= the chain's
/// stabilization index when that index is found within max_e.
class TestIdealBoundSpec {
 public:
  TestIdealBoundSpec(Ideal a, Polynomial u, Polynomial d, unsigned h, unsigned max_e);

  const Ideal& a() const noexcept { return a_; }
  const Polynomial& u() const noexcept { return u_; }
  const Polynomial& d() const noexcept { return d_; }
  unsigned h() const noexcept { return h_; }
  unsigned max_e() const noexcept { return max_e_; }
  /// The stabilization index used for the check on h, if it resolved.
  std::optional<unsigned> hsl() const noexcept { return hsl_; }

 private:
  Ideal a_;
  Polynomial u_;
  Polynomial d_;
  unsigned h_;
  unsigned max_e_;
  std::optional<unsigned> hsl_;
};

struct TestIdealBound {
  Ideal ideal;
  /// σ_k = σ_{k+1} was observed. This is a heuristic stopping certificate, not a proof.
  bool stable = false;
  /// The last summation index included.
  unsigned last_level = 0;
  /// ideal ⊋ a, the checkable form of height(t/a) > 0.
  bool strictly_contains_a = false;
};

TestIdealBound test_ideal_lower_bound(const TestIdealBoundSpec& spec);

}  // namespace charp
