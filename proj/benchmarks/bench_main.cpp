#include <benchmark/benchmark.h>

#include "charp/charp.hpp"

using namespace charp;

namespace {

Ideal ideal(std::uint32_t p, std::vector<std::string> vars, const char* gens,
            MonomialOrder order = MonomialOrder::grevlex()) {
  auto r = PolyRing::make(p, std::move(vars), order);
  return Ideal(r, parse_poly_list(gens, r));
}

void BM_CyclicFour(benchmark::State& state) {
  auto order = state.range(0) ? MonomialOrder::lex() : MonomialOrder::grevlex();
  for (auto _ : state) {
    Ideal I = ideal(32003, {"a", "b", "c", "d"},
                    "a + b + c + d, a*b + b*c + c*d + d*a, a*b*c + b*c*d + c*d*a + d*a*b, a*b*c*d - 1", order);
    benchmark::DoNotOptimize(I.groebner_basis().size());
  }
}
BENCHMARK(BM_CyclicFour)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Katsura(benchmark::State& state) {
  for (auto _ : state) {
    Ideal I = ideal(101, {"x", "y", "z", "w"},
                    "x + 2*y + 2*z + 2*w - 1, x^2 + 2*y^2 + 2*z^2 + 2*w^2 - x, 2*x*y + 2*y*z + 2*z*w - y, "
                    "y^2 + 2*x*z + 2*y*w - z");
    benchmark::DoNotOptimize(I.groebner_basis().size());
  }
}
BENCHMARK(BM_Katsura)->Unit(benchmark::kMillisecond);

void BM_FrobeniusRoot(benchmark::State& state) {
  const auto e = static_cast<unsigned>(state.range(0));
  Ideal I = ideal(3, {"X", "Y", "Z"}, "X^7*Y^5 + Y^9*Z^2 + 2*X*Z^11, X^4*Y^4*Z^4 - Y^13, Z^10 + X^3*Y^8");
  for (auto _ : state) {
    Ideal root = frobenius_root(I, e);
    benchmark::DoNotOptimize(root.groebner_basis().size());
  }
}
BENCHMARK(BM_FrobeniusRoot)->DenseRange(1, 2)->Unit(benchmark::kMicrosecond);

void BM_FrobeniusPowerIntersect(benchmark::State& state) {
  Ideal I = ideal(2, {"X", "Y", "Z"}, "X^2 + Y*Z, Y^3 + X");
  Ideal J = ideal(2, {"X", "Y", "Z"}, "Z^2 + X*Y, X^3");
  for (auto _ : state) {
    Ideal lhs = ideal_intersect(frobenius_power(I, 1), frobenius_power(J, 1));
    benchmark::DoNotOptimize(lhs.groebner_basis().size());
  }
}
BENCHMARK(BM_FrobeniusPowerIntersect)->Unit(benchmark::kMillisecond);

void BM_HslChain(benchmark::State& state) {
  Ideal a = ideal(2, {"W", "Y"}, "W^2, W*Y");
  Polynomial u = parse_poly("W^3", a.ring());
  for (auto _ : state) {
    HSLReport rep = hsl_chain(HSLChainSpec(a, u, 16));
    benchmark::DoNotOptimize(rep.hsl);
  }
}
BENCHMARK(BM_HslChain)->Unit(benchmark::kMicrosecond);

void BM_FedderCusp(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  auto r = PolyRing::make(p, {"X", "Y", "Z"});
  Ideal a(r, parse_poly_list("X^3 + Y^3 + Z^3", r));
  Ideal m(r, parse_poly_list("X, Y, Z", r));
  for (auto _ : state) benchmark::DoNotOptimize(fedder_fpure(a, m));
}
BENCHMARK(BM_FedderCusp)->Arg(2)->Arg(5)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
