#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace charp {

using Exponent = std::uint32_t;

/// Largest exponent any variable may carry. Every arithmetic path that can grow
/// exponents checks against it and raises OverflowError instead of wrapping.
inline constexpr Exponent kMaxExponent = Exponent{1} << 20;

/// Exponent vector x^a. Length is fixed by the owning ring.
class Monomial {
 public:
  Monomial() = default;
  /// The constant monomial 1 in `nvars` variables.
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  /// Throws OverflowError if some exponent exceeds kMaxExponent.
  explicit Monomial(std::vector<Exponent> exps);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }
  std::uint64_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Monomial& other) const noexcept;
  /// Exact quotient other / *this; precondition: divides(other).
  Monomial quotient_of(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// x^a -> x^{k a}.
  Monomial scaled(std::uint64_t k) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  bool coprime(const Monomial& other) const noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.exps_ == b.exps_; }

 private:
  std::vector<Exponent> exps_;
  std::uint64_t degree_ = 0;
};

/// Monomial orders. Block(k) compares the first k variables by grevlex and
/// breaks ties by grevlex on the remaining ones, so it eliminates the first block.
class MonomialOrder {
 public:
  enum class Kind { Lex, Grevlex, Block };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
  static MonomialOrder block(std::size_t k) { return MonomialOrder(Kind::Block, k); }

  Kind kind() const noexcept { return kind_; }
  std::size_t block_size() const noexcept { return block_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const noexcept;
  bool greater(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }

  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}

  Kind kind_;
  std::size_t block_;
};

}  // namespace charp
