#include "charp/prime_field.hpp"

#include <ostream>
#include <string>

#include "charp/error.hpp"

namespace charp {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p > 0x7fffffffu || !is_prime(p)) {
    throw PreconditionError("field characteristic " + std::to_string(p) + " is not a prime in [2, 2^31-1]");
  }
}

Coeff PrimeField::pow(Coeff base, std::uint64_t exponent) const noexcept {
  std::uint64_t result = 1 % p_;
  std::uint64_t b = base % p_;
  while (exponent > 0) {
    if (exponent & 1u) result = result * b % p_;
    b = b * b % p_;
    exponent >>= 1;
  }
  return static_cast<Coeff>(result);
}

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) throw PreconditionError("division by zero in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.value(); }

}  // namespace charp
