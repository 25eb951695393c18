#include "charp/tight_closure.hpp"

#include "charp/error.hpp"
#include "charp/frobenius.hpp"
#include "charp/groebner.hpp"
#include "charp/ideal_ops.hpp"

namespace charp {

namespace {

const std::vector<Ideal>& require_primes(const QuotientRingCtx& Q) {
  if (!Q.min_primes()) throw InsufficientData("minimal primes of the defining ideal were not supplied");
  return *Q.min_primes();
}

}  // namespace

QuotientRingCtx::QuotientRingCtx(Ideal a, std::optional<std::vector<Ideal>> min_primes)
    : a_(std::move(a)), min_primes_(std::move(min_primes)) {
  if (is_unit_ideal(a_)) throw PreconditionError("the defining ideal must be proper");
  if (!min_primes_) return;
  const auto& primes = *min_primes_;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    require_same_ring(a_.ring(), primes[i].ring());
    if (is_unit_ideal(primes[i])) throw PreconditionError("minimal prime " + std::to_string(i) + " is the unit ideal");
    if (!ideal_contains(primes[i], a_)) {
      throw PreconditionError("minimal prime " + std::to_string(i) + " does not contain the defining ideal");
    }
  }
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = 0; j < primes.size(); ++j) {
      if (i != j && ideal_contains(primes[j], primes[i])) {
        throw PreconditionError("minimal primes " + std::to_string(i) + " and " + std::to_string(j) +
                                " are comparable");
      }
    }
  }
}

bool in_R_circ(const Polynomial& c, const QuotientRingCtx& Q) {
  require_same_ring(c.ring(), Q.ring());
  const auto& primes = require_primes(Q);
  for (const auto& prime : primes) {
    if (ideal_member(c, prime)) return false;
  }
  return true;
}

TightClosureReport tc_certificate(const TightClosureQuery& query, const QuotientRingCtx& Q) {
  const RingPtr& ring = Q.ring();
  require_same_ring(ring, query.r.ring());
  require_same_ring(ring, query.c.ring());
  require_same_ring(ring, query.b.ring());
  TightClosureReport report;
  for (unsigned n = 0; n <= query.max_level; ++n) {
    Ideal target = ideal_sum(frobenius_power(query.b, n), Q.defining_ideal());
    bool ok = ideal_member(query.c * query.r.frobenius(n), target);
    report.levels.push_back(ok);
    if (!ok && !report.first_failure) report.first_failure = n;
  }
  report.all_pass = !report.first_failure.has_value();
  return report;
}

TestElementReport test_element_certificate(const Polynomial& c, const std::vector<Ideal>& ideals,
                                           const std::vector<std::vector<Polynomial>>& closure_elements,
                                           unsigned max_level, const QuotientRingCtx& Q) {
  if (ideals.empty()) throw PreconditionError("the ideal family is empty");
  if (closure_elements.size() != ideals.size()) {
    throw PreconditionError("one closure list is needed per ideal in the family");
  }
  if (!in_R_circ(c, Q)) throw PreconditionError("c = " + c.to_string() + " is not in R°");
  TestElementReport out;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    auto& row = out.reports.emplace_back();
    for (std::size_t k = 0; k < closure_elements[i].size(); ++k) {
      row.push_back(tc_certificate({closure_elements[i][k], ideals[i], c, max_level}, Q));
      if (row.back().first_failure) out.failures.push_back({i, k, *row.back().first_failure});
    }
  }
  out.all_pass = out.failures.empty();
  return out;
}

std::optional<unsigned> is_nilpotent(const Polynomial& r, const QuotientRingCtx& Q, unsigned k_max) {
  require_same_ring(r.ring(), Q.ring());
  if (k_max < 1) throw PreconditionError("k_max must be at least 1");
  for (unsigned k = 1; k <= k_max; ++k) {
    if (ideal_member(r.frobenius(k), Q.defining_ideal())) return k;
  }
  return std::nullopt;
}

bool r0_certificate(const QuotientRingCtx& Q, const std::vector<Polynomial>& separators) {
  const auto& primes = require_primes(Q);
  if (separators.size() != primes.size()) {
    throw PreconditionError("one separator is needed per minimal prime");
  }
  for (std::size_t i = 0; i < primes.size(); ++i) {
    require_same_ring(Q.ring(), separators[i].ring());
    if (ideal_member(separators[i], primes[i])) {
      throw PreconditionError("separator " + std::to_string(i) + " lies in its own prime");
    }
    for (std::size_t j = 0; j < primes.size(); ++j) {
      if (j != i && !ideal_member(separators[i], primes[j])) {
        throw PreconditionError("separator " + std::to_string(i) + " is not in minimal prime " + std::to_string(j));
      }
    }
  }
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (!ideal_equal(saturate(Q.defining_ideal(), separators[i]), primes[i])) return false;
  }
  return true;
}

}  // namespace charp
