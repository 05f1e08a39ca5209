// Serial vs OpenMP frame loop for one simulation cell.

#include <benchmark/benchmark.h>

#include "lnc/sim.hpp"

namespace {

lnc::SimConfig config(int scenario, const char* scheme) {
  auto c = lnc::default_config(scenario, scheme);
  c.frames = 2000;
  c.seed = 7;
  return c;
}

template <bool Parallel>
void cell(benchmark::State& state, int scenario, const char* scheme, double snr_db) {
  const auto c = config(scenario, scheme);
  for (auto _ : state) {
    auto r = Parallel ? lnc::run_cell(c, snr_db, 0) : lnc::run_cell_serial(c, snr_db, 0);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.frames));
}

void serial(benchmark::State& s, int scenario, const char* scheme, double snr_db) { cell<false>(s, scenario, scheme, snr_db); }
void parallel(benchmark::State& s, int scenario, const char* scheme, double snr_db) { cell<true>(s, scenario, scheme, snr_db); }

}  // namespace

BENCHMARK_CAPTURE(serial, baseline_s2, 2, "baseline-pi3", 30.0)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(parallel, baseline_s2, 2, "baseline-pi3", 30.0)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(serial, conv_nu1_s1, 1, "conv-nu1", 3.0)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(parallel, conv_nu1_s1, 1, "conv-nu1", 3.0)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(serial, dominant_s3, 3, "conv-nu1", 20.0)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(parallel, dominant_s3, 3, "conv-nu1", 20.0)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
