#include <benchmark/benchmark.h>

#include "whalg/polyhedra.hpp"
#include "whalg/resolution.hpp"
#include "whalg/signs.hpp"

using namespace whalg;

static void BM_gamma6(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(gamma(6));
}
BENCHMARK(BM_gamma6);

static void BM_is_cycle_gamma6(benchmark::State& state) {
    Resolution res = cpn_resolution(6);
    ChainElement g = gamma(6);
    const SignDictionary& d = default_sign_dictionary();
    for (auto _ : state) benchmark::DoNotOptimize(is_cycle(g, res, d).verified);
}
BENCHMARK(BM_is_cycle_gamma6);

static void BM_sgn_pairs(benchmark::State& state) {
    std::vector<IndexSet> subs;
    for (int mask = 0; mask < 256; ++mask) {
        IndexSet s;
        for (int i = 0; i < 8; ++i)
            if (mask & (1 << i)) s.insert(i);
        subs.push_back(s);
    }
    for (auto _ : state) {
        long long acc = 0;
        for (const auto& a : subs)
            for (const auto& b : subs) acc += sgn(a, b);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_sgn_pairs);

static void BM_polyhedron_d3(benchmark::State& state) {
    FaceWord w{{0, 0, 0, 0}, 1};
    for (auto _ : state) benchmark::DoNotOptimize(build_face_polyhedron(w).cells.size());
}
BENCHMARK(BM_polyhedron_d3);

static void BM_boundary_homology_d3(benchmark::State& state) {
    CellComplex cx = build_face_polyhedron(FaceWord{{0, 0, 0, 0}, 1});
    for (auto _ : state) benchmark::DoNotOptimize(boundary_homology(cx, 2).size());
}
BENCHMARK(BM_boundary_homology_d3);

static void BM_normalize_closure(benchmark::State& state) {
    auto classes = enumerate_classes(3, 6);
    for (auto _ : state) {
        size_t acc = 0;
        for (const auto& w : classes) acc += move_closure(w).size();
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_normalize_closure);

BENCHMARK_MAIN();
