#include <benchmark/benchmark.h>

#include "sseq/cobar.hpp"
#include "sseq/dmss.hpp"
#include "sseq/groupcoh.hpp"
#include "sseq/minres.hpp"
#include "sseq/ssengine.hpp"
#include "sseq/textio.hpp"

using namespace sseq;

namespace {

void BM_gf_rank(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Matrix m(Field::GF2, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    uint64_t lcg = 0x2545F4914F6CDD1Dull;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            lcg = lcg * 6364136223846793005ull + 1442695040888963407ull;
            if (lcg >> 62) m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), Scalar::one());
        }
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}

void BM_cobar_ext(benchmark::State& state) {
    const HopfAlgebra& A1 = builtin_hopf("A1star");
    int t_max = static_cast<int>(state.range(0));
    for (auto _ : state) {
        CobarComplex ck(A1, trivial_comodule(A1), t_max);
        int total = 0;
        for (int s = 0; s <= 5; ++s)
            for (int t = 0; t <= t_max; ++t) total += ck.ext_dimension(s, t);
        benchmark::DoNotOptimize(total);
    }
}

void BM_minres(benchmark::State& state) {
    const HopfAlgebra& A1 = builtin_hopf("A1star");
    Comodule k = trivial_comodule(A1);
    int t_max = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(minimal_resolution_ext(A1, k, 12, t_max));
}

void BM_poly_page(benchmark::State& state) {
    int t_max = static_cast<int>(state.range(0));
    for (auto _ : state) {
        PolyE2 E(18, t_max);
        benchmark::DoNotOptimize(E.dim(10, std::min(t_max, 63)));
    }
}

void BM_group_cohomology(benchmark::State& state) {
    for (auto _ : state) {
        HfpssE2 e2(static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(e2.dim(4, 24));
    }
}

void BM_tower_einfty(benchmark::State& state) {
    for (auto _ : state) {
        EinftyRun run = run_hfpss_to_einfty("01");
        benchmark::DoNotOptimize(run.diffs.size());
    }
}

void BM_pair_towers(benchmark::State& state) {
    TowerPage e7 = load_page("sseq/hfpss_e7.txt", nullptr);
    AxiomFile ax = load_axioms("axioms/hfpss_d9_d23_0110.txt");
    std::vector<TowerFamily> fams;
    std::vector<bool> perm(e7.gens.size(), false);
    for (const TowerGen& g : e7.gens) fams.push_back(TowerFamily{g.name, g.s, g.t - g.s});
    for (const TowerExpr& p : ax.permanents) {
        std::string name = p.gen;
        if (p.ue > 0) name = "D" + std::to_string(p.ue) + name;
        perm[static_cast<std::size_t>(e7.find(name))] = true;
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(pair_towers(fams, perm, {}).matchings_found);
}

BENCHMARK(BM_gf_rank)->Arg(128)->Arg(512);
BENCHMARK(BM_cobar_ext)->Arg(12)->Arg(16);
BENCHMARK(BM_minres)->Arg(24)->Arg(36);
BENCHMARK(BM_poly_page)->Arg(50)->Arg(70);
BENCHMARK(BM_group_cohomology)->Arg(8)->Arg(12);
BENCHMARK(BM_tower_einfty);
BENCHMARK(BM_pair_towers);

}  // namespace

BENCHMARK_MAIN();
