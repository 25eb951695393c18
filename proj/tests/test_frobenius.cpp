#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace charp;
using namespace charp::testing;

TEST(FrobeniusContext, Bounds) {
  EXPECT_EQ(FrobeniusContext(3, 2).q(), 9u);
  EXPECT_EQ(FrobeniusContext(2, 20).q(), std::uint64_t{1} << 20);
  EXPECT_THROW(FrobeniusContext(2, 21), OverflowError);
}

TEST(Omega, Examples) {
  EXPECT_EQ(omega(0, 2), 0u);
  EXPECT_EQ(omega(1, 2), 1u);
  EXPECT_EQ(omega(1, 5), 1u);
  EXPECT_EQ(omega(3, 2), 7u);
  EXPECT_EQ(omega(63, 2), (std::uint64_t{1} << 63) - 1);
  EXPECT_THROW(omega(64, 2), OverflowError);
}

TEST(Omega, Recurrence) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    OmegaSequence seq(p, 11);
    EXPECT_EQ(seq[0], 0u);
    for (unsigned n = 0; n <= 10; ++n) {
      EXPECT_EQ(seq[n + 1], 1 + p * seq[n]);
      EXPECT_LT(p * seq[n], seq[n + 1]);
      std::uint64_t pn = 1;
      for (unsigned i = 0; i < n; ++i) pn *= p;
      EXPECT_EQ((p - 1) * seq[n], pn - 1);
    }
  }
}

TEST(FrobeniusPower, Examples) {
  auto r = ring(2, {"X", "Y"});
  EXPECT_EQ(basis_strings(frobenius_power(I(r, "X, Y"), 1)), (Strings{"X^2", "Y^2"}));
  EXPECT_TRUE(frobenius_power(Ideal::zero(r), 3).is_zero());
  auto wy = ring(2, {"W", "Y"});
  Ideal a = I(wy, "W^2, W*Y");
  Ideal a2 = frobenius_power(a, 1);
  EXPECT_EQ(basis_strings(a2), (Strings{"W^4", "W^2*Y^2"}));
  Ideal e0 = frobenius_power(a, 0);
  EXPECT_TRUE(ideal_equal(e0, a));
}

// The attached basis of I^[q] must be the basis Buchberger would compute from
// the q-th powers of the generators.
TEST(FrobeniusPower, AttachedBasisMatchesRecomputation) {
  for (std::uint32_t p : {2u, 3u}) {
    for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
      auto r = ring(p, {"X", "Y", "Z"}, order);
      Generator gen(55 + p);
      for (int k = 0; k < 20; ++k) {
        Ideal i = gen.ideal(r, 3, 3, 3);
        for (unsigned e : {1u, 2u}) {
          Ideal f = frobenius_power(i, e);
          EXPECT_EQ(f.groebner_basis(), compute_reduced_basis(r, f.generators()));
        }
      }
    }
  }
}

// Generator powers generate the same ideal as the powers of all elements:
// random elements of I, raised by plain multiplication, land in I^[q], and the
// dense oracle confirms membership without the Gröbner engine.
TEST(FrobeniusPower, GeneratorPowersSufficeAgainstElementOracle) {
  auto r = ring(2, {"X", "Y"});
  Generator gen(808);
  for (int k = 0; k < 15; ++k) {
    std::vector<Polynomial> gens;
    std::size_t count = gen.uniform(1, 2);
    for (std::size_t i = 0; i < count; ++i) gens.push_back(gen.homogeneous(r, 2, static_cast<std::uint32_t>(gen.uniform(1, 2))));
    Ideal i(r, gens);
    Ideal i2 = frobenius_power(i, 1);
    for (int s = 0; s < 4; ++s) {
      // A homogeneous element of I of degree 3.
      Polynomial f(r);
      for (const auto& g : gens) f = f + gen.homogeneous(r, 2, static_cast<std::uint32_t>(3 - g.total_degree())) * g;
      Polynomial f2 = naive_power(f, 2);
      EXPECT_TRUE(ideal_member(f2, i2));
      EXPECT_TRUE(homogeneous_member(f2, i2.generators()));
    }
  }
}

TEST(FrobeniusDecompose, Examples) {
  auto r = ring(2, {"X", "Y"});
  for (unsigned e : {1u, 2u, 3u}) {
    std::uint64_t q = std::uint64_t{1} << e;
    auto d = frobenius_decompose(P(r, "X^" + std::to_string(q)), e);
    ASSERT_EQ(d.components.size(), 1u);
    EXPECT_TRUE(d.components[0].first.is_one());
    EXPECT_EQ(d.components[0].second, P(r, "X"));
  }
  auto d3 = frobenius_decompose(P(r, "X^3"), 1);
  ASSERT_EQ(d3.components.size(), 1u);
  EXPECT_EQ(d3.components[0].first, P(r, "X").leading_monomial());
  EXPECT_EQ(d3.components[0].second, P(r, "X"));

  auto d23 = frobenius_decompose(P(r, "X^2*Y^3"), 1);
  ASSERT_EQ(d23.components.size(), 1u);
  EXPECT_EQ(d23.components[0].first, P(r, "Y").leading_monomial());
  EXPECT_EQ(d23.components[0].second, P(r, "X*Y"));
  EXPECT_EQ(d23.reconstruct(r), P(r, "X^2*Y^3"));
  EXPECT_THROW(frobenius_decompose(P(r, "X"), 0), PreconditionError);
}

TEST(FrobeniusDecompose, Reconstruction) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto r = ring(p, {"X", "Y", "Z"});
    Generator gen(17 * p);
    for (int k = 0; k < 40; ++k) {
      Polynomial g = gen.polynomial(r, 8, 12);
      for (unsigned e : {1u, 2u}) {
        auto d = frobenius_decompose(g, e);
        EXPECT_EQ(d.reconstruct(r), g);
        for (const auto& [mu, h] : d.components) {
          EXPECT_FALSE(h.is_zero());
          for (auto x : mu.exponents()) EXPECT_LT(x, d.q);
        }
      }
    }
  }
}

TEST(FrobeniusRoot, Examples) {
  auto r = ring(2, {"X", "Y"});
  EXPECT_EQ(basis_strings(frobenius_root(I(r, "X^4"), 2)), (Strings{"X"}));
  EXPECT_TRUE(frobenius_root(Ideal::zero(r), 2).is_zero());
  auto wy = ring(2, {"W", "Y"});
  Ideal root = frobenius_root(I(wy, "W^3"), 1);
  EXPECT_EQ(basis_strings(root), (Strings{"W"}));
  EXPECT_TRUE(ideal_member(P(wy, "W^3"), frobenius_power(root, 1)));
  Ideal i = I(r, "X^3 + Y");
  EXPECT_TRUE(ideal_equal(frobenius_root(i, 0), i));
}

// (X^q)^[1/q] = (X) is the smallest ideal T with X^q ∈ T^[q]: every monomial
// ideal T (generators up to degree 3 in two variables) with X^q ∈ T^[q] contains X.
TEST(FrobeniusRoot, MinimalityByBruteForce) {
  auto r = ring(2, {"X", "Y"});
  std::vector<Exps> monomials;
  for (std::uint32_t a = 0; a <= 3; ++a)
    for (std::uint32_t b = 0; a + b <= 3; ++b) monomials.push_back({a, b});
  const std::size_t n = monomials.size();
  for (std::uint64_t q : {2u, 4u}) {
    unsigned e = q == 2 ? 1 : 2;
    Ideal root = frobenius_root(I(r, "X^" + std::to_string(q)), e);
    std::size_t admissible = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<Exps> gens;
      for (std::size_t k = 0; k < n; ++k)
        if (mask & (1u << k)) gens.push_back(monomials[k]);
      MonomialIdeal t = MonomialIdeal::of(gens);
      if (!monomial_frobenius_power(t, q).contains({static_cast<std::uint32_t>(q), 0})) continue;
      ++admissible;
      EXPECT_TRUE(ideal_contains(to_ideal(t, r), root));
    }
    EXPECT_GT(admissible, 0u);
    EXPECT_EQ(basis_strings(root), (Strings{"X"}));
  }
}

namespace {

struct LawCase {
  std::uint32_t p;
  unsigned e;
};

void PrintTo(const LawCase& c, std::ostream* os) { *os << "p=" << c.p << " e=" << c.e; }

class FrobeniusLaws : public ::testing::TestWithParam<LawCase> {};

}  // namespace

TEST_P(FrobeniusLaws, RoundTripContainmentMonotonicity) {
  const auto [p, e] = GetParam();
  auto r = ring(p, {"X", "Y", "Z"});
  Generator gen(1234 + 10 * p + e);
  for (int k = 0; k < 15; ++k) {
    Ideal i = gen.ideal(r, 3, 3, 4);
    EXPECT_TRUE(ideal_equal(frobenius_root(frobenius_power(i, e), e), i));
    Ideal root = frobenius_root(i, e);
    EXPECT_TRUE(ideal_contains(frobenius_power(root, e), i));
    Ideal bigger = ideal_sum(i, gen.ideal(r, 1, 2, 2));
    EXPECT_TRUE(ideal_contains(frobenius_root(bigger, e), root));
  }
}

TEST_P(FrobeniusLaws, AdjunctionAndDistributivity) {
  const auto [p, e] = GetParam();
  auto r = ring(p, {"X", "Y"});
  Generator gen(4321 + 10 * p + e);
  for (int k = 0; k < 10; ++k) {
    Ideal i = gen.ideal(r, 2, 3, 4);
    Ideal root = frobenius_root(i, e);
    for (int j = 0; j < 5; ++j) {
      Ideal K = gen.ideal(r, 2, 2, 2);
      EXPECT_EQ(ideal_contains(frobenius_power(K, e), i), ideal_contains(K, root));
    }
    Ideal J = gen.ideal(r, 2, 2, 3);
    EXPECT_TRUE(ideal_equal(frobenius_power(ideal_intersect(i, J), e),
                            ideal_intersect(frobenius_power(i, e), frobenius_power(J, e))));
  }
}

// (I^[1/p])^[1/p] = I^[1/p^2].
TEST(FrobeniusRoot, TowerLaw) {
  for (std::uint32_t p : {2u, 3u}) {
    auto r = ring(p, {"X", "Y", "Z"});
    Generator gen(99 + p);
    for (int k = 0; k < 20; ++k) {
      Ideal i = gen.ideal(r, 3, 4, 9);
      EXPECT_TRUE(ideal_equal(frobenius_root(frobenius_root(i, 1), 1), frobenius_root(i, 2)));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Levels, FrobeniusLaws,
                         ::testing::Values(LawCase{2, 1}, LawCase{2, 2}, LawCase{3, 1}, LawCase{3, 2}),
                         [](const auto& info) {
                           return "p" + std::to_string(info.param.p) + "_e" + std::to_string(info.param.e);
                         });
