#include "msection/crossing.hpp"
#include "msection/homology.hpp"
#include "msection/snf.hpp"
#include "msection/torsion.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace msec;

namespace {

Matrix<BigInt> random_int_matrix(std::mt19937& rng, std::size_t n, int max_abs) {
    std::uniform_int_distribution<int> val(-max_abs, max_abs);
    Matrix<BigInt> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = val(rng);
    return m;
}

MultisectionDiagram ex2_twisted() {
    MultisectionDiagram d;
    d.rose = RoseSurface::standard(2, 1);
    d.collections.push_back({"alpha", {d.rose.parse_word("a1")}});
    d.collections.push_back({"beta", {d.rose.parse_word("b1")}});
    d.collections.push_back({"gamma", {d.rose.parse_word("a1^-1 a2 b2 a2^-1 a1 b1 a1^-1")}});
    d.twist = TwistSpec::trivial(4);
    d.twist.set_image(2, {1, 1});
    return d;
}

void BM_snf_int(benchmark::State& state) {
    std::mt19937 rng(1);
    const auto m = random_int_matrix(rng, static_cast<std::size_t>(state.range(0)), 50);
    for (auto _ : state) benchmark::DoNotOptimize(snf(m));
}
BENCHMARK(BM_snf_int)->Arg(6)->Arg(10)->Arg(16);

void BM_snf_laurent(benchmark::State& state) {
    std::mt19937 rng(2);
    std::uniform_int_distribution<int> val(-3, 3), expd(-2, 2);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    Matrix<LaurentQ> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            LaurentQ p;
            p.add_term(expd(rng), BigRational(val(rng)));
            p.add_term(expd(rng), BigRational(val(rng)));
            m(i, j) = p;
        }
    for (auto _ : state) benchmark::DoNotOptimize(snf(m));
}
BENCHMARK(BM_snf_laurent)->Arg(4)->Arg(6);

void BM_equivariant_intersection(benchmark::State& state) {
    const auto rose = RoseSurface::standard(2, 1);
    TwistSpec phi = TwistSpec::trivial(4);
    phi.set_image(2, {1, 1});
    const Word x = rose.parse_word("a1^-1 a2 b2 a2^-1 a1 b1 a1^-1");
    const Word y = rose.parse_word("b1 a2 b2^-1 a1 b1^-1");
    for (auto _ : state) benchmark::DoNotOptimize(equivariant_intersection(rose, x, y, phi));
}
BENCHMARK(BM_equivariant_intersection);

void BM_ex2_twisted_pipeline(benchmark::State& state) {
    const auto d = ex2_twisted();
    for (auto _ : state) {
        const auto c = build_absolute_twisted(d);
        benchmark::DoNotOptimize(homology_over_laurent(c, c.ring_exact));
        benchmark::DoNotOptimize(torsion_of_diagram(d, Variant::absolute));
    }
}
BENCHMARK(BM_ex2_twisted_pipeline);

}  // namespace

BENCHMARK_MAIN();
