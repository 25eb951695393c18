#include "oracles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace charp::testing {

namespace {

using Sparse = std::map<Exps, std::uint32_t>;

Sparse to_sparse(const Polynomial& f) {
  Sparse s;
  for (const auto& t : f.terms()) {
    auto e = t.monomial.exponents();
    s[Exps(e.begin(), e.end())] = t.coeff;
  }
  return s;
}

void monomials_of_degree(std::size_t nvars, std::uint64_t degree, Exps& cur, std::size_t at, std::vector<Exps>& out) {
  if (at + 1 == nvars) {
    cur[at] = static_cast<std::uint32_t>(degree);
    out.push_back(cur);
    return;
  }
  for (std::uint64_t d = 0; d <= degree; ++d) {
    cur[at] = static_cast<std::uint32_t>(d);
    monomials_of_degree(nvars, degree - d, cur, at + 1, out);
  }
}

std::vector<Exps> monomials_in_range(std::size_t nvars, std::uint64_t lo, std::uint64_t hi) {
  std::vector<Exps> out;
  Exps cur(nvars, 0);
  for (std::uint64_t d = lo; d <= hi; ++d) monomials_of_degree(nvars, d, cur, 0, out);
  return out;
}

std::uint64_t modpow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// Incremental row-echelon basis of dense vectors over F_p.
class EchelonBasis {
 public:
  EchelonBasis(std::size_t dim, std::uint64_t p) : dim_(dim), p_(p) {}

  // Reduces v in place against the basis; returns the pivot of the remainder or dim_ if zero.
  std::size_t reduce(std::vector<std::uint64_t>& v) const {
    for (const auto& [pivot, row] : rows_) {
      if (v[pivot] == 0) continue;
      std::uint64_t factor = v[pivot];  // rows are normalized to 1 at the pivot
      for (std::size_t k = 0; k < dim_; ++k) {
        if (row[k]) v[k] = (v[k] + p_ - factor * row[k] % p_) % p_;
      }
    }
    for (std::size_t k = 0; k < dim_; ++k) {
      if (v[k]) return k;
    }
    return dim_;
  }

  void insert(std::vector<std::uint64_t> v) {
    std::size_t pivot = reduce(v);
    if (pivot == dim_) return;
    std::uint64_t inv = modpow(v[pivot], p_ - 2, p_);
    for (auto& x : v) x = x * inv % p_;
    // Keep rows fully reduced so reduce() can process pivots in any order.
    for (auto& [other_pivot, row] : rows_) {
      if (row[pivot] == 0) continue;
      std::uint64_t factor = row[pivot];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (v[k]) row[k] = (row[k] + p_ - factor * v[k] % p_) % p_;
      }
    }
    rows_.emplace(pivot, std::move(v));
  }

 private:
  std::size_t dim_;
  std::uint64_t p_;
  std::map<std::size_t, std::vector<std::uint64_t>> rows_;
};

}  // namespace

bool linear_algebra_member(const Polynomial& f, const std::vector<Polynomial>& gens, const CofactorDegrees& degrees) {
  const RingPtr& ring = f.ring();
  const std::uint64_t p = ring->characteristic();
  const std::size_t n = ring->nvars();
  if (f.is_zero()) return true;

  // Columns: m * g_i for admissible monomials m.
  std::vector<Sparse> columns;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Sparse g = to_sparse(gens[i]);
    if (degrees.low[i] > degrees.high[i]) continue;
    for (const auto& m : monomials_in_range(n, degrees.low[i], degrees.high[i])) {
      Sparse col;
      for (const auto& [e, c] : g) {
        Exps prod(n);
        for (std::size_t k = 0; k < n; ++k) prod[k] = e[k] + m[k];
        col[prod] = c;
      }
      columns.push_back(std::move(col));
    }
  }
  Sparse target = to_sparse(f);
  std::map<Exps, std::size_t> index;
  for (const auto& col : columns)
    for (const auto& [e, c] : col) index.emplace(e, 0);
  for (const auto& [e, c] : target) index.emplace(e, 0);
  std::size_t next = 0;
  for (auto& [e, idx] : index) idx = next++;
  const std::size_t dim = index.size();

  auto dense = [&](const Sparse& s) {
    std::vector<std::uint64_t> v(dim, 0);
    for (const auto& [e, c] : s) v[index.at(e)] = c % p;
    return v;
  };
  EchelonBasis basis(dim, p);
  for (const auto& col : columns) basis.insert(dense(col));
  auto v = dense(target);
  return basis.reduce(v) == dim;
}

bool homogeneous_member(const Polynomial& f, const std::vector<Polynomial>& gens) {
  if (f.is_zero()) return true;
  if (!f.is_homogeneous()) throw std::invalid_argument("homogeneous_member needs homogeneous f");
  CofactorDegrees deg;
  const std::uint64_t d = f.total_degree();
  for (const auto& g : gens) {
    if (!g.is_homogeneous()) throw std::invalid_argument("homogeneous_member needs homogeneous generators");
    std::uint64_t dg = g.total_degree();
    if (dg > d) {
      deg.low.push_back(1);
      deg.high.push_back(0);
    } else {
      deg.low.push_back(d - dg);
      deg.high.push_back(d - dg);
    }
  }
  return linear_algebra_member(f, gens, deg);
}

bool bounded_member(const Polynomial& f, const std::vector<Polynomial>& gens, std::uint64_t bound) {
  CofactorDegrees deg;
  deg.low.assign(gens.size(), 0);
  deg.high.assign(gens.size(), bound);
  return linear_algebra_member(f, gens, deg);
}

namespace {

bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

MonomialIdeal MonomialIdeal::of(std::vector<Exps> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exps> minimal;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i != j && divides(gens[j], gens[i])) redundant = true;
    }
    if (!redundant) minimal.push_back(gens[i]);
  }
  return MonomialIdeal{std::move(minimal)};
}

bool MonomialIdeal::contains(const Exps& m) const {
  return std::any_of(gens.begin(), gens.end(), [&](const Exps& g) { return divides(g, m); });
}

MonomialIdeal monomial_intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  std::vector<Exps> out;
  for (const auto& a : I.gens) {
    for (const auto& b : J.gens) {
      Exps l(a.size());
      for (std::size_t k = 0; k < a.size(); ++k) l[k] = std::max(a[k], b[k]);
      out.push_back(std::move(l));
    }
  }
  return MonomialIdeal::of(std::move(out));
}

MonomialIdeal monomial_colon(const MonomialIdeal& I, const Exps& m) {
  std::vector<Exps> out;
  for (const auto& g : I.gens) {
    Exps d(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) d[k] = g[k] - std::min(g[k], m[k]);
    out.push_back(std::move(d));
  }
  return MonomialIdeal::of(std::move(out));
}

MonomialIdeal monomial_frobenius_power(const MonomialIdeal& I, std::uint64_t q) {
  std::vector<Exps> out;
  for (auto g : I.gens) {
    for (auto& e : g) e = static_cast<std::uint32_t>(e * q);
    out.push_back(std::move(g));
  }
  return MonomialIdeal::of(std::move(out));
}

MonomialIdeal as_monomial_ideal(const Ideal& I) {
  std::vector<Exps> out;
  for (const auto& g : I.groebner_basis()) {
    if (g.size() != 1) throw std::invalid_argument("not a monomial ideal: " + g.to_string());
    auto e = g.leading_monomial().exponents();
    out.emplace_back(e.begin(), e.end());
  }
  return MonomialIdeal::of(std::move(out));
}

Ideal to_ideal(const MonomialIdeal& I, const RingPtr& ring) {
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens) gens.push_back(Polynomial::monomial(ring, 1, Monomial(g)));
  return Ideal(ring, std::move(gens));
}

Exps Generator::monomial(std::size_t nvars, std::uint32_t max_degree) {
  std::uint64_t degree = uniform(0, max_degree);
  Exps e(nvars, 0);
  for (std::uint64_t k = 0; k < degree; ++k) ++e[uniform(0, nvars - 1)];
  return e;
}

Polynomial Generator::polynomial(const RingPtr& ring, std::size_t max_terms, std::uint32_t max_degree) {
  std::size_t count = uniform(1, max_terms);
  std::vector<Term> terms;
  for (std::size_t k = 0; k < count; ++k) {
    Coeff c = static_cast<Coeff>(uniform(1, ring->characteristic() - 1));
    terms.push_back({c, Monomial(monomial(ring->nvars(), max_degree))});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

Polynomial Generator::nonconstant(const RingPtr& ring, std::size_t max_terms, std::uint32_t max_degree) {
  for (;;) {
    Polynomial f = polynomial(ring, max_terms, max_degree);
    if (!f.is_constant()) return f;
  }
}

Polynomial Generator::homogeneous(const RingPtr& ring, std::size_t max_terms, std::uint32_t degree) {
  for (;;) {
    std::size_t count = uniform(1, max_terms);
    std::vector<Term> terms;
    for (std::size_t k = 0; k < count; ++k) {
      Exps e(ring->nvars(), 0);
      for (std::uint32_t d = 0; d < degree; ++d) ++e[uniform(0, ring->nvars() - 1)];
      terms.push_back({static_cast<Coeff>(uniform(1, ring->characteristic() - 1)), Monomial(e)});
    }
    Polynomial f = Polynomial::from_terms(ring, std::move(terms));
    if (!f.is_zero()) return f;
  }
}

Ideal Generator::ideal(const RingPtr& ring, std::size_t max_gens, std::size_t max_terms, std::uint32_t max_degree) {
  std::size_t count = uniform(1, max_gens);
  std::vector<Polynomial> gens;
  for (std::size_t k = 0; k < count; ++k) gens.push_back(nonconstant(ring, max_terms, max_degree));
  return Ideal(ring, std::move(gens));
}

MonomialIdeal Generator::monomial_ideal(std::size_t nvars, std::size_t max_gens, std::uint32_t max_degree) {
  std::size_t count = uniform(1, max_gens);
  std::vector<Exps> gens;
  for (std::size_t k = 0; k < count; ++k) gens.push_back(monomial(nvars, max_degree));
  return MonomialIdeal::of(std::move(gens));
}

Polynomial naive_power(const Polynomial& f, std::uint64_t n) {
  Polynomial r = Polynomial::constant(f.ring(), 1);
  for (std::uint64_t k = 0; k < n; ++k) r = r * f;
  return r;
}

}  // namespace charp::testing
