#include <random>

#include <benchmark/benchmark.h>

#include "pbp/abels.hpp"
#include "pbp/bs.hpp"
#include "pbp/coset.hpp"
#include "pbp/coxeter.hpp"
#include "pbp/ideal_lattice.hpp"
#include "pbp/lie.hpp"

namespace {

  void BM_CoxeterSignature(benchmark::State& state, char const* name) {
    pbp::CoxeterMatrix m = pbp::coxeter_catalogue::by_name(name);
    for (auto _ : state) {
      benchmark::DoNotOptimize(pbp::signature(pbp::tits_form(m)));
    }
  }
  BENCHMARK_CAPTURE(BM_CoxeterSignature, E8, "E8");
  BENCHMARK_CAPTURE(BM_CoxeterSignature, H4, "H4");
  BENCHMARK_CAPTURE(BM_CoxeterSignature, triangle_3_3_7, "triangle(3,3,7)");
  BENCHMARK_CAPTURE(BM_CoxeterSignature, affine_E8, "~E8");

  void BM_BrittonReduce(benchmark::State& state) {
    pbp::BSGroup    g(2, 3);
    std::mt19937_64 rng(1);
    std::vector<pbp::Word> words;
    for (int i = 0; i < 256; ++i) {
      pbp::Word w;
      for (long k = 0; k < state.range(0); ++k) {
        w.push_back({static_cast<std::size_t>(rng() % 2), rng() % 2 ? 1 : -1});
      }
      words.push_back(w);
    }
    std::size_t i = 0;
    for (auto _ : state) {
      benchmark::DoNotOptimize(pbp::britton_reduce(g, words[i++ % words.size()]));
    }
  }
  BENCHMARK(BM_BrittonReduce)->Arg(8)->Arg(32)->Arg(128);

  void BM_WitnessVerification(benchmark::State& state) {
    long m = state.range(0);
    pbp::BSGroup g(m, m);
    auto         w = pbp::witness_subgroup(m, 1);
    for (auto _ : state) {
      benchmark::DoNotOptimize(pbp::verify_witness(g, w, 4));
    }
  }
  BENCHMARK(BM_WitnessVerification)->Arg(2)->Arg(3)->Arg(4);

  void BM_ReidemeisterSchreier(benchmark::State& state) {
    long                    m = state.range(0);
    pbp::BSGroup            g(m, m);
    auto                    w = pbp::witness_subgroup(m, 1);
    pbp::FinitePresentation p = g.presentation();
    for (auto _ : state) {
      pbp::CosetTable t = pbp::coset_enumerate(p, w.pi);
      benchmark::DoNotOptimize(pbp::abelianization(pbp::reidemeister_schreier(p, t)));
    }
  }
  BENCHMARK(BM_ReidemeisterSchreier)->Arg(2)->Arg(4)->Arg(8);

  void BM_LiePresentable(benchmark::State& state, char const* name) {
    pbp::LieAlgebra l = pbp::lie_catalogue::by_name(name);
    for (auto _ : state) {
      benchmark::DoNotOptimize(pbp::lie_presentable(l));
    }
  }
  BENCHMARK_CAPTURE(BM_LiePresentable, sol, "sol");
  BENCHMARK_CAPTURE(BM_LiePresentable, sl2, "sl2");
  BENCHMARK_CAPTURE(BM_LiePresentable, vr_2_1_2, "vr_semidirect(2,1,2)");
  BENCHMARK_CAPTURE(BM_LiePresentable, vr_3_1_1, "vr_semidirect(3,1,1)");

  void BM_AbelsTrials(benchmark::State& state) {
    for (auto _ : state) {
      benchmark::DoNotOptimize(pbp::acentral_check(3, pbp::Unit{1, 1}, 1000));
    }
  }
  BENCHMARK(BM_AbelsTrials);

}  // namespace

BENCHMARK_MAIN();
