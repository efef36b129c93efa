// Serial reference vs OpenMP batch and attack sweep.
//
//   ./build/sqkd_bench --benchmark_filter=Batch

#include <benchmark/benchmark.h>
#include <omp.h>

#include "sqkd/harness.hpp"
#include "sqkd/search.hpp"

namespace {

sqkd::RunConfig batch_config(std::size_t n, sqkd::Variant v) {
  sqkd::RunConfig c;
  c.protocol = v;
  c.attack = sqkd::AttackKind::Modification;
  c.n = n;
  c.trials = 1000;
  c.seed = 1;
  return c;
}

void BM_BatchSerial(benchmark::State& state) {
  const auto c = batch_config(static_cast<std::size_t>(state.range(0)), sqkd::Variant::Original);
  for (auto _ : state) benchmark::DoNotOptimize(sqkd::run_batch_serial(c));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.trials));
}

void BM_BatchParallel(benchmark::State& state) {
  const auto c = batch_config(static_cast<std::size_t>(state.range(0)), sqkd::Variant::Original);
  for (auto _ : state) benchmark::DoNotOptimize(sqkd::run_batch(c));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.trials));
  state.counters["threads"] = omp_get_max_threads();
}

void BM_ImprovedBatchSerial(benchmark::State& state) {
  const auto c = batch_config(static_cast<std::size_t>(state.range(0)), sqkd::Variant::Improved);
  for (auto _ : state) benchmark::DoNotOptimize(sqkd::run_batch_serial(c));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.trials));
}

void BM_ImprovedBatchParallel(benchmark::State& state) {
  const auto c = batch_config(static_cast<std::size_t>(state.range(0)), sqkd::Variant::Improved);
  for (auto _ : state) benchmark::DoNotOptimize(sqkd::run_batch(c));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.trials));
}

sqkd::SearchConfig sweep_config() {
  sqkd::SearchConfig c;
  c.params.n = 16;
  c.trials = 200;
  return c;
}

void BM_SearchSerial(benchmark::State& state) {
  const auto c = sweep_config();
  for (auto _ : state) benchmark::DoNotOptimize(sqkd::search_attacks_serial(c));
}

void BM_SearchParallel(benchmark::State& state) {
  const auto c = sweep_config();
  for (auto _ : state) benchmark::DoNotOptimize(sqkd::search_attacks(c));
}

}  // namespace

BENCHMARK(BM_BatchSerial)->Arg(32)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchParallel)->Arg(32)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ImprovedBatchSerial)->Arg(32)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ImprovedBatchParallel)->Arg(32)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
