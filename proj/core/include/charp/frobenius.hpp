#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "charp/ideal.hpp"

namespace charp {

/// A Frobenius level: q = p^e, bounded by the exponent cap.
class FrobeniusContext {
 public:
  /// Throws OverflowError when p^e > 2^20.
  FrobeniusContext(std::uint32_t p, unsigned e);

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned level() const noexcept { return e_; }
  std::uint64_t q() const noexcept { return q_; }

 private:
  std::uint32_t p_;
  unsigned e_;
  std::uint64_t q_;
};

/// ω_n = 1 + p + ... + p^(n-1), ω_0 = 0. Throws OverflowError past 2^63.
std::uint64_t omega(unsigned n, std::uint32_t p);

/// ω_0, ..., ω_k for a fixed characteristic.
class OmegaSequence {
 public:
  OmegaSequence(std::uint32_t p, unsigned k);

  std::uint32_t characteristic() const noexcept { return p_; }
  const std::vector<std::uint64_t>& values() const noexcept { return values_; }
  std::uint64_t operator[](unsigned n) const { return values_.at(n); }

 private:
  std::uint32_t p_;
  std::vector<std::uint64_t> values_;
};

/// g = Σ_μ (h_μ)^q · x^μ with every residue exponent μ_i < q. Components with
/// h_μ = 0 are omitted; the rest are ordered by descending μ in the ring's order.
struct FrobeniusDecomposition {
  std::uint64_t q;
  std::vector<std::pair<Monomial, Polynomial>> components;

  /// Σ_μ (h_μ)^q · x^μ.
  Polynomial reconstruct(const RingPtr& ring) const;
};

/// I^[p^e]: the ideal of p^e-th powers. The reduced basis of the result is the
/// termwise p^e-th power of the reduced basis of I and is attached directly.
Ideal frobenius_power(const Ideal& I, unsigned e);

/// Splits g along the monomial basis {x^μ : μ < q} of S over S^q. Requires e >= 1.
FrobeniusDecomposition frobenius_decompose(const Polynomial& g, unsigned e);

/// I^[1/p^e]: the smallest ideal T with I ⊆ T^[p^e], generated by the
/// decomposition components of the generators of I. e = 0 returns I.
Ideal frobenius_root(const Ideal& I, unsigned e);

}  // namespace charp
