#pragma once

#include <optional>
#include <vector>

#include "charp/ideal.hpp"

namespace charp {

/// R = S/a together with (optionally) the minimal primes of a, which are
/// trusted input. Construction checks that a is proper, that every supplied
/// prime contains a, and that the primes are pairwise incomparable.
class QuotientRingCtx {
 public:
  explicit QuotientRingCtx(Ideal a, std::optional<std::vector<Ideal>> min_primes = std::nullopt);

  const RingPtr& ring() const noexcept { return a_.ring(); }
  const Ideal& defining_ideal() const noexcept { return a_; }
  const std::optional<std::vector<Ideal>>& min_primes() const noexcept { return min_primes_; }

 private:
  Ideal a_;
  std::optional<std::vector<Ideal>> min_primes_;
};

/// c ∈ R°: c avoids every supplied minimal prime. Throws InsufficientData without primes.
bool in_R_circ(const Polynomial& c, const QuotientRingCtx& Q);

/// Does c · r^(p^n) ∈ b^[p^n] + a hold for n = 0..max_level?
struct TightClosureQuery {
  Polynomial r;
  Ideal b;
  Polynomial c;
  unsigned max_level;
};

/// Level-bounded evidence for r ∈ b*; a full pass is a certificate, not a proof.
struct TightClosureReport {
  std::vector<bool> levels;
  bool all_pass = false;
  std::optional<unsigned> first_failure;
};

TightClosureReport tc_certificate(const TightClosureQuery& query, const QuotientRingCtx& Q);

struct TestElementFailure {
  std::size_t ideal_index;
  std::size_t element_index;
  unsigned level;
};

struct TestElementReport {
  /// Per ideal, per closure element.
  std::vector<std::vector<TightClosureReport>> reports;
  std::vector<TestElementFailure> failures;
  bool all_pass = false;
};

/// Runs tc_certificate for every (ideal, closure element) pair with witness c.
/// closure_elements[i] are asserted members of ideals[i]* supplied by the caller.
/// Throws PreconditionError when c ∉ R°, the family is empty, or the lists disagree in length.
TestElementReport test_element_certificate(const Polynomial& c, const std::vector<Ideal>& ideals,
                                           const std::vector<std::vector<Polynomial>>& closure_elements,
                                           unsigned max_level, const QuotientRingCtx& Q);

/// Smallest k in 1..k_max with r^(p^k) ∈ a, or nullopt ("unresolved"). Never a definite "no".
std::optional<unsigned> is_nilpotent(const Polynomial& r, const QuotientRingCtx& Q, unsigned k_max);

/// (R_0) check: the π_i-primary component of a, taken as (a : s_i^∞) for a
/// separator s_i ∈ (⋂_{j≠i} π_j) \ π_i, equals π_i for every minimal prime.
bool r0_certificate(const QuotientRingCtx& Q, const std::vector<Polynomial>& separators);

}  // namespace charp
