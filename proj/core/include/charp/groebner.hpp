#pragma once

#include <span>
#include <vector>

#include "charp/ideal.hpp"

namespace charp {

/// How Buchberger picks the next S-pair. The reduced basis does not depend on it.
enum class PairSelection {
  /// Smallest lcm degree first, ties broken lexicographically on (i, j).
  Normal,
  /// Pairs in creation order.
  Fifo,
};

/// Reduced Gröbner basis of the ideal generated by `generators` (all in `ring`).
std::vector<Polynomial> compute_reduced_basis(const RingPtr& ring, std::span<const Polynomial> generators,
                                              PairSelection selection = PairSelection::Normal);

/// Full reduction of f by `divisors` (any generating set); the remainder has no
/// term divisible by a divisor's leading monomial.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> divisors);

/// Reduced Gröbner basis of I (cached on I).
const std::vector<Polynomial>& groebner_basis(const Ideal& I);

/// Unique remainder of f modulo the reduced basis of I.
Polynomial normal_form(const Polynomial& f, const Ideal& I);

bool ideal_member(const Polynomial& f, const Ideal& I);

/// J ⊆ I.
bool ideal_contains(const Ideal& I, const Ideal& J);

/// Equal reduced bases.
bool ideal_equal(const Ideal& I, const Ideal& J);

bool is_unit_ideal(const Ideal& I);

}  // namespace charp
