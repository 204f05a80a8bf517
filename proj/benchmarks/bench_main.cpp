#include <benchmark/benchmark.h>

#include "pgog/corpus.hpp"
#include "pgog/wilkes.hpp"

namespace {

using namespace pgog;

void bm_double_cosets(benchmark::State& state) {
  GroupPtr g = group_from_spec(GroupSpec::elementary_abelian(2, int(state.range(0))));
  Subgroup q = subgroup_generated(g, {1, 2});
  Subgroup r = subgroup_generated(g, {Elt(g->order() / 2), Elt(g->order() / 4)});
  for (auto _ : state) benchmark::DoNotOptimize(double_cosets(g, q, r));
}
BENCHMARK(bm_double_cosets)->Arg(6)->Arg(8)->Arg(10);

void bm_reduce_chain(benchmark::State& state) {
  GraphOfGroups g = build_chain_gog(2, int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reduce(g));
}
BENCHMARK(bm_reduce_chain)->Arg(2)->Arg(3);

void bm_induced_gog(benchmark::State& state) {
  CorpusInstance inst = generate_instance(int(state.range(0)), 0xbe9c4eedULL);
  for (auto _ : state) benchmark::DoNotOptimize(induced_gog(inst.spec));
}
BENCHMARK(bm_induced_gog)->Arg(0)->Arg(1)->Arg(2);

void bm_build_stage(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_stage(2, int(state.range(0))));
}
BENCHMARK(bm_build_stage)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void bm_generate_instance(benchmark::State& state) {
  int i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(generate_instance(i++ % 16, 0xbe9c4eedULL));
}
BENCHMARK(bm_generate_instance)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
