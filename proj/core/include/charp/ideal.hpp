#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "charp/polynomial.hpp"

namespace charp {

/// An ideal of a polynomial ring, given by generators. The reduced Gröbner
/// basis under the ring's order is computed on first use and cached; copies
/// share the cache, which is filled at most once.
class Ideal {
 public:
  /// Zero generators are dropped. Throws RingMismatch if a generator lives elsewhere.
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(const RingPtr& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }
  static Ideal principal(const Polynomial& f) { return Ideal(f.ring(), {f}); }

  /// Attach a basis the caller has proven to be the reduced Gröbner basis of
  /// the generators (e.g. Frobenius powers of a reduced basis).
  static Ideal with_reduced_basis(RingPtr ring, std::vector<Polynomial> generators,
                                  std::vector<Polynomial> reduced_basis);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  bool is_zero() const noexcept { return generators_.empty(); }

  /// The reduced Gröbner basis: monic, interreduced, sorted descending by leading monomial.
  const std::vector<Polynomial>& groebner_basis() const;
  bool has_cached_basis() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> basis;
    bool ready = false;
  };

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace charp
