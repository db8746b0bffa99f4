#include <benchmark/benchmark.h>

#include "wedgelab/groebner.hpp"
#include "wedgelab/multiplicity.hpp"
#include "wedgelab/oracle.hpp"

using namespace wedgelab;

namespace {

AffineIdealInput xy_input() {
    const Variable x = Variable::plain("x");
    const Variable y = Variable::plain("y");
    return AffineIdealInput::create({x, y},
                                    {Polynomial::variable(x) * Polynomial::variable(y)});
}

void BM_BuildWedgeIdeal(benchmark::State& state) {
    const auto input = xy_input();
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto wedge = build_wedge_ideal(input, m);
        benchmark::DoNotOptimize(wedge);
    }
}
BENCHMARK(BM_BuildWedgeIdeal)->DenseRange(1, 6);

void BM_BuildWedgeIdealQuartic(benchmark::State& state) {
    const auto surface = MonomialHypersurface::create({1, 1, 1, 1});
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto wedge = hypersurface_wedge_ideal(surface, m);
        benchmark::DoNotOptimize(wedge);
    }
}
BENCHMARK(BM_BuildWedgeIdealQuartic)->DenseRange(1, 5);

void BM_EnumerateMinimalPrimes(benchmark::State& state) {
    const auto surface = MonomialHypersurface::create({1, 2, 3});
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto primes = enumerate_minimal_primes(surface, m);
        benchmark::DoNotOptimize(primes);
    }
}
BENCHMARK(BM_EnumerateMinimalPrimes)->DenseRange(2, 6);

void BM_RadicalGenerators(benchmark::State& state) {
    const auto surface = MonomialHypersurface::create({1, 1, 1});
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto radical = radical_generators(surface, m);
        benchmark::DoNotOptimize(radical);
    }
}
BENCHMARK(BM_RadicalGenerators)->DenseRange(1, 4);

void BM_RadicalViaPrimeIntersection(benchmark::State& state) {
    const auto surface = MonomialHypersurface::create({1, 1, 1});
    const int m = static_cast<int>(state.range(0));
    const auto primes = enumerate_minimal_primes(surface, m);
    for (auto _ : state) {
        MonomialIdeal meet = primes.front().expand(surface).to_ideal();
        for (std::size_t k = 1; k < primes.size(); ++k)
            meet = intersect(meet, primes[k].expand(surface).to_ideal());
        benchmark::DoNotOptimize(meet);
    }
}
BENCHMARK(BM_RadicalViaPrimeIntersection)->DenseRange(1, 4);

void BM_GroebnerW1(benchmark::State& state) {
    const auto gens = build_wedge_ideal(xy_input(), 1).flattened();
    for (auto _ : state) {
        auto gb = GroebnerBasis::compute(gens);
        benchmark::DoNotOptimize(gb);
    }
}
BENCHMARK(BM_GroebnerW1);

void BM_CertifyClosedForm(benchmark::State& state) {
    const auto surface = MonomialHypersurface::create({1, 1, 1});
    const int m = static_cast<int>(state.range(0));
    const auto wedge = hypersurface_wedge_ideal(surface, m);
    const auto primes = enumerate_minimal_primes(surface, m);
    for (auto _ : state) {
        auto cert = certify(wedge, surface, primes.front(), CertifyStrategy::closed_form);
        benchmark::DoNotOptimize(cert);
    }
}
BENCHMARK(BM_CertifyClosedForm)->DenseRange(2, 6);

void BM_CertifyRandomized(benchmark::State& state) {
    const auto surface = MonomialHypersurface::create({1, 1, 1, 1});
    const int m = static_cast<int>(state.range(0));
    const auto wedge = hypersurface_wedge_ideal(surface, m);
    const auto primes = enumerate_minimal_primes(surface, m);
    for (auto _ : state) {
        auto cert = certify(wedge, surface, primes.front(), CertifyStrategy::randomized);
        benchmark::DoNotOptimize(cert);
    }
}
BENCHMARK(BM_CertifyRandomized)->DenseRange(2, 4);

void BM_SampleVanishing(benchmark::State& state) {
    const auto surface = MonomialHypersurface::create({1, 1, 1, 1});
    const int m = static_cast<int>(state.range(0));
    const auto primes = enumerate_minimal_primes(surface, m);
    for (auto _ : state) {
        bool ok = sample_vanishing(surface, primes.front(), m, 65521, 5, 0);
        benchmark::DoNotOptimize(ok);
    }
}
BENCHMARK(BM_SampleVanishing)->DenseRange(2, 5);

}  // namespace

BENCHMARK_MAIN();
