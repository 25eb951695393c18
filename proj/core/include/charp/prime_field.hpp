#pragma once

#include <cstdint>
#include <iosfwd>

namespace charp {

using Coeff = std::uint32_t;

/// The prime field F_p for a prime 2 <= p <= 2^31 - 1.
class PrimeField {
 public:
  /// Throws PreconditionError when `p` is not a prime in range.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }

  Coeff reduce(std::int64_t value) const noexcept {
    std::int64_t r = value % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }
  Coeff add(Coeff a, Coeff b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Coeff>(s >= p_ ? s - p_ : s);
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : static_cast<Coeff>(a + std::uint64_t{p_} - b); }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept { return static_cast<Coeff>(std::uint64_t{a} * b % p_); }
  Coeff pow(Coeff base, std::uint64_t exponent) const noexcept;
  /// Multiplicative inverse; `a` must be nonzero.
  Coeff inv(Coeff a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// A residue paired with its field, for callers that want checked scalar arithmetic.
class FieldElement {
 public:
  FieldElement(const PrimeField& field, std::int64_t value) : field_(field), value_(field.reduce(value)) {}

  Coeff value() const noexcept { return value_; }
  const PrimeField& field() const noexcept { return field_; }

  FieldElement operator+(const FieldElement& o) const { return {field_, field_.add(value_, o.value_), Raw{}}; }
  FieldElement operator-(const FieldElement& o) const { return {field_, field_.sub(value_, o.value_), Raw{}}; }
  FieldElement operator*(const FieldElement& o) const { return {field_, field_.mul(value_, o.value_), Raw{}}; }
  FieldElement inverse() const { return {field_, field_.inv(value_), Raw{}}; }
  /// The Frobenius map x -> x^p; the identity on F_p.
  FieldElement frobenius() const { return {field_, field_.pow(value_, field_.characteristic()), Raw{}}; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  struct Raw {};
  FieldElement(const PrimeField& field, Coeff value, Raw) : field_(field), value_(value) {}

  PrimeField field_;
  Coeff value_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

}  // namespace charp
