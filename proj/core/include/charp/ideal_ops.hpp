#pragma once

#include <cstddef>

#include "charp/ideal.hpp"

namespace charp {

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);

/// I ∩ J by eliminating a tag variable t from t·I + (1 − t)·J.
Ideal ideal_intersect(const Ideal& I, const Ideal& J);

/// (I : g) = (I ∩ (g)) / g. Throws PreconditionError for g = 0.
Ideal ideal_colon(const Ideal& I, const Polynomial& g);
/// (I : J) = ⋂_j (I : g_j) over the generators of J. Throws PreconditionError for J = 0.
Ideal ideal_colon(const Ideal& I, const Ideal& J);

/// I ∩ F_p[x_{k+1}, ..., x_n], computed under block(k) and returned in the
/// ring of the remaining variables (see PolyRing::drop_leading).
/// Throws PreconditionError unless 1 <= k < nvars.
Ideal eliminate(const Ideal& I, std::size_t k);

/// (I : f^∞), iterating colons until two successive ideals agree.
Ideal saturate(const Ideal& I, const Polynomial& f);

/// Polynomial in `target` whose exponent vectors are those of f with `offset`
/// zero exponents in front. Used to move between a ring and its tag extension.
Polynomial shift_into(const Polynomial& f, const RingPtr& target, std::size_t offset);

}  // namespace charp
