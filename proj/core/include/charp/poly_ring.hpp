#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "charp/monomial.hpp"
#include "charp/prime_field.hpp"

namespace charp {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// F_p[x_1, ..., x_n] with a fixed monomial order. Shared by pointer between
/// the polynomials and ideals that live in it; rings compare structurally.
class PolyRing {
 public:
  /// Validates names ([A-Za-z][A-Za-z0-9_]*, pairwise distinct, at least one)
  /// and the order (block(k) needs 1 <= k < n). Throws PreconditionError.
  static RingPtr make(std::uint32_t p, std::vector<std::string> variables,
                      MonomialOrder order = MonomialOrder::grevlex());

  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t characteristic() const noexcept { return field_.characteristic(); }
  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& variables() const noexcept { return names_; }
  const MonomialOrder& order() const noexcept { return order_; }

  std::optional<std::size_t> variable_index(std::string_view name) const;

  /// Same variables, different order.
  RingPtr with_order(MonomialOrder order) const;
  /// The subring on variables k..n-1. Keeps lex as lex and shifts a block
  /// order when a nontrivial block survives; otherwise grevlex.
  RingPtr drop_leading(std::size_t k) const;
  /// A new variable in front of the existing ones, under block(1).
  RingPtr with_tag_variable() const;

  std::string describe() const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.field_ == b.field_ && a.names_ == b.names_ && a.order_ == b.order_;
  }

 private:
  PolyRing(PrimeField field, std::vector<std::string> names, MonomialOrder order)
      : field_(field), names_(std::move(names)), order_(order) {}

  PrimeField field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
};

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept;
/// Throws RingMismatch unless same_ring(a, b).
void require_same_ring(const RingPtr& a, const RingPtr& b);

bool is_valid_variable_name(std::string_view name) noexcept;

}  // namespace charp
