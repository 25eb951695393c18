#pragma once

#include <string>
#include <vector>

#include "charp/charp.hpp"

namespace charp::testing {

inline RingPtr ring(std::uint32_t p, std::vector<std::string> vars, MonomialOrder order = MonomialOrder::grevlex()) {
  return PolyRing::make(p, std::move(vars), order);
}

inline Polynomial P(const RingPtr& r, const std::string& text) { return parse_poly(text, r); }

inline Ideal I(const RingPtr& r, const std::string& text) { return Ideal(r, parse_poly_list(text, r)); }

inline std::vector<std::string> basis_strings(const Ideal& ideal) {
  std::vector<std::string> out;
  for (const auto& g : ideal.groebner_basis()) out.push_back(g.to_string());
  return out;
}

using Strings = std::vector<std::string>;

}  // namespace charp::testing
