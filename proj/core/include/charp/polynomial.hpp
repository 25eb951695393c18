#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "charp/monomial.hpp"
#include "charp/poly_ring.hpp"

namespace charp {

struct Term {
  Coeff coeff;
  Monomial monomial;

  friend bool operator==(const Term&, const Term&) = default;
};

/// A polynomial in canonical form: terms strictly descending in the ring's
/// order, no zero coefficients. Equal polynomials have identical term lists.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  /// Sorts, merges like terms and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  static Polynomial constant(RingPtr ring, std::int64_t value);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, Coeff coeff, Monomial m);
  /// Wraps terms that are already canonical (strictly descending, nonzero
  /// coefficients). Unchecked; used by the reduction kernels.
  static Polynomial from_canonical_terms(RingPtr ring, std::vector<Term> terms) {
    return Polynomial(std::move(ring), std::move(terms));
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  bool is_one() const noexcept { return terms_.size() == 1 && terms_[0].monomial.is_one() && terms_[0].coeff == 1; }
  bool is_homogeneous() const noexcept;

  /// Leading term accessors; the polynomial must be nonzero.
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  Coeff leading_coeff() const { return terms_.front().coeff; }
  std::uint64_t total_degree() const noexcept;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(Coeff c) const;
  Polynomial times_term(Coeff c, const Monomial& m) const;
  /// this - c * m * other, in one merge pass.
  Polynomial minus_term_times(Coeff c, const Monomial& m, const Polynomial& other) const;

  Polynomial pow(std::uint64_t n) const;
  /// f^(p^e), computed termwise: c x^a -> c x^(p^e a). Coefficients are fixed
  /// by Frobenius over F_p, so this equals repeated multiplication.
  Polynomial frobenius(unsigned e) const;
  /// Scale so the leading coefficient is 1 (zero stays zero).
  Polynomial monic() const;

  /// Exact quotient this / divisor, or nullopt when the division leaves a remainder.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

  /// Re-express in another ring with the same variables (possibly reordered terms).
  Polynomial in_ring(const RingPtr& target) const;

  /// Canonical text that re-parses to this polynomial, e.g. "W^2*Y + 1".
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
  }

 private:
  Polynomial(RingPtr ring, std::vector<Term> canonical_terms)
      : ring_(std::move(ring)), terms_(std::move(canonical_terms)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

/// f^(p^e); free-function spelling of Polynomial::frobenius.
inline Polynomial poly_q_power(const Polynomial& f, unsigned e) { return f.frobenius(e); }

}  // namespace charp
