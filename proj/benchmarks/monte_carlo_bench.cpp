// Copyright 2026 The crossdep Authors.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "crossdep/length_group.hpp"
#include "crossdep/random.hpp"
#include "crossdep/stat_tests.hpp"

namespace {

// A corpus shaped like a mid-sized treebank: lengths 4..70, 40 sentences each.
std::vector<crossdep::LengthGroup> corpus() {
  crossdep::Xoshiro256 g(4);
  std::vector<crossdep::LengthGroup> groups;
  for (int n = 4; n <= 70; ++n) {
    crossdep::LengthGroup grp{n, {}, {}};
    for (int i = 0; i < 40; ++i) {
      grp.d.push_back(static_cast<std::int64_t>(n + g.below(static_cast<std::uint64_t>(n * n))));
      grp.c.push_back(static_cast<std::int64_t>(g.below(4)));
    }
    groups.push_back(std::move(grp));
  }
  return groups;
}

void BM_MonteCarlo(benchmark::State& state) {
  const auto groups = corpus();
  const crossdep::RandomSource rng(5);
  for (auto _ : state)
    benchmark::DoNotOptimize(crossdep::monte_carlo_p_tau(groups, state.range(0), rng));
}

}  // namespace

BENCHMARK(BM_MonteCarlo)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
