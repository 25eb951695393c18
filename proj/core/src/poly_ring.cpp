#include "charp/poly_ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "charp/error.hpp"

namespace charp {

bool is_valid_variable_name(std::string_view name) noexcept {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

RingPtr PolyRing::make(std::uint32_t p, std::vector<std::string> variables, MonomialOrder order) {
  PrimeField field(p);
  if (variables.empty()) throw PreconditionError("a polynomial ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (!is_valid_variable_name(v)) throw PreconditionError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw PreconditionError("duplicate variable name '" + v + "'");
  }
  if (order.kind() == MonomialOrder::Kind::Block &&
      (order.block_size() < 1 || order.block_size() >= variables.size())) {
    throw PreconditionError("block(" + std::to_string(order.block_size()) + ") needs 1 <= k < " +
                            std::to_string(variables.size()));
  }
  return RingPtr(new PolyRing(field, std::move(variables), order));
}

std::optional<std::size_t> PolyRing::variable_index(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

RingPtr PolyRing::with_order(MonomialOrder order) const { return make(characteristic(), names_, order); }

RingPtr PolyRing::drop_leading(std::size_t k) const {
  if (k >= names_.size()) throw PreconditionError("cannot drop " + std::to_string(k) + " of " +
                                                  std::to_string(names_.size()) + " variables");
  std::vector<std::string> rest(names_.begin() + static_cast<std::ptrdiff_t>(k), names_.end());
  MonomialOrder order = MonomialOrder::grevlex();
  if (order_.kind() == MonomialOrder::Kind::Lex) {
    order = MonomialOrder::lex();
  } else if (order_.kind() == MonomialOrder::Kind::Block && order_.block_size() > k &&
             order_.block_size() - k < rest.size()) {
    order = MonomialOrder::block(order_.block_size() - k);
  }
  return make(characteristic(), std::move(rest), order);
}

RingPtr PolyRing::with_tag_variable() const {
  std::string tag = "t";
  while (variable_index(tag)) tag += "_";
  std::vector<std::string> names{tag};
  names.insert(names.end(), names_.begin(), names_.end());
  return make(characteristic(), std::move(names), MonomialOrder::block(1));
}

std::string PolyRing::describe() const {
  std::string s = "F " + std::to_string(characteristic()) + " [";
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) s += ", ";
    s += names_[i];
  }
  return s + "] order " + order_.name();
}

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept { return a == b || (a && b && *a == *b); }

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw RingMismatch();
}

}  // namespace charp
