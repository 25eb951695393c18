#include "charp/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "charp/error.hpp"

namespace charp {

namespace {

void check_exponent(std::uint64_t e) {
  if (e > kMaxExponent) {
    throw OverflowError("exponent " + std::to_string(e) + " exceeds the limit 2^20");
  }
}

std::uint64_t sum(std::span<const Exponent> e) { return std::accumulate(e.begin(), e.end(), std::uint64_t{0}); }

// Degree first, then the smaller exponent in the last differing variable wins.
std::strong_ordering grevlex_range(std::span<const Exponent> a, std::span<const Exponent> b) {
  std::uint64_t da = sum(a), db = sum(b);
  if (da != db) return da <=> db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  for (Exponent e : exps_) {
    check_exponent(e);
    degree_ += e;
  }
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q;
  q.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) throw InternalError("inexact monomial division");
    q.exps_[i] = other.exps_[i] - exps_[i];
  }
  q.degree_ = other.degree_ - degree_;
  return q;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  r.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    std::uint64_t e = std::uint64_t{exps_[i]} + other.exps_[i];
    check_exponent(e);
    r.exps_[i] = static_cast<Exponent>(e);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::scaled(std::uint64_t k) const {
  Monomial r;
  r.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && k > kMaxExponent / exps_[i]) {
      throw OverflowError("exponent " + std::to_string(exps_[i]) + " * " + std::to_string(k) + " exceeds the limit 2^20");
    }
    r.exps_[i] = static_cast<Exponent>(exps_[i] * k);
  }
  r.degree_ = degree_ * k;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  r.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r;
  r.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::min(exps_[i], other.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  auto ea = a.exponents();
  auto eb = b.exponents();
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t i = 0; i < ea.size(); ++i) {
        if (ea[i] != eb[i]) return ea[i] <=> eb[i];
      }
      return std::strong_ordering::equal;
    case Kind::Grevlex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return grevlex_range(ea, eb);
    case Kind::Block: {
      auto head = grevlex_range(ea.first(block_), eb.first(block_));
      if (head != 0) return head;
      return grevlex_range(ea.subspan(block_), eb.subspan(block_));
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Lex:
      return "lex";
    case Kind::Grevlex:
      return "grevlex";
    case Kind::Block:
      return "block(" + std::to_string(block_) + ")";
  }
  return "?";
}

}  // namespace charp
