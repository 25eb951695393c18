#include "charp/ideal.hpp"

#include <algorithm>

#include "charp/groebner.hpp"

namespace charp {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  generators_.reserve(generators.size());
  for (auto& g : generators) {
    require_same_ring(ring_, g.ring());
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

Ideal Ideal::with_reduced_basis(RingPtr ring, std::vector<Polynomial> generators,
                                std::vector<Polynomial> reduced_basis) {
  Ideal I(std::move(ring), std::move(generators));
  std::call_once(I.cache_->once, [&] {
    I.cache_->basis = std::move(reduced_basis);
    I.cache_->ready = true;
  });
  return I;
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
  std::call_once(cache_->once, [this] {
    cache_->basis = compute_reduced_basis(ring_, generators_);
    cache_->ready = true;
  });
  return cache_->basis;
}

bool Ideal::has_cached_basis() const {
  // `ready` is only written inside call_once; reading it without the flag is a
  // benign hint used by tests and diagnostics.
  return cache_->ready;
}

}  // namespace charp
