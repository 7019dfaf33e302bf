#include <benchmark/benchmark.h>

#include "ysl/gklo.hpp"
#include "ysl/yangian.hpp"

using namespace ysl;

static void BM_NormalFormA1(benchmark::State& state) {
  YangianCtx ctx = make_yangian_ctx(make_cartan("A1"), {0}, 12);
  RankOneEngine engine(ctx);
  NCElem x = gen_elem(ctx, GenKind::F, 0, 3) * gen_elem(ctx, GenKind::E, 0, 2) *
             gen_elem(ctx, GenKind::H, 0, 2) * gen_elem(ctx, GenKind::E, 0, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(engine.nf(x));
  }
}
BENCHMARK(BM_NormalFormA1);

static void BM_DiffOpProduct(benchmark::State& state) {
  CartanDatum dat = make_cartan("A1");
  GkloRep rep(make_gklo(dat, {2}, {-2}, {{Rat(0), Rat(1)}}));
  DiffOp e = rep.e(0, 2), f = rep.f(0, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(e * f);
  }
}
BENCHMARK(BM_DiffOpProduct);

static void BM_RelationSweepA2(benchmark::State& state) {
  CartanDatum dat = make_cartan("A2");
  GkloRep rep(make_gklo(dat, {1, 1}, {0, 0}, {{Rat(0)}, {Rat(0)}}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_relations(rep, 2));
  }
}
BENCHMARK(BM_RelationSweepA2);

BENCHMARK_MAIN();
