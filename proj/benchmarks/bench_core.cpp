// Copyright 2026 The tavis Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "tavis/evolution.hpp"
#include "tavis/measures.hpp"
#include "tavis/propagator.hpp"
#include "tavis/sweep.hpp"

namespace {

using namespace tavis;

void BM_BlockSpectral(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(propagator_spectral(n, 0.8, 3.7).U);
}
BENCHMARK(BM_BlockSpectral)->Arg(0)->Arg(20)->Arg(60);

void BM_BlockAnalytic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(propagator_analytic(n, 0.8, 3.7, PropagatorForm::analytic_corrected).U);
}
BENCHMARK(BM_BlockAnalytic)->Arg(0)->Arg(20)->Arg(60);

void BM_PaperEvolve(benchmark::State& state) {
  const CoherentField field = coherent_amplitudes(std::sqrt(static_cast<double>(state.range(0))), 1e-12);
  for (auto _ : state) benchmark::DoNotOptimize(evolve_paper_mode(excited_pair(), field, 0.8, 3.7).norm_squared());
}
BENCHMARK(BM_PaperEvolve)->Arg(5)->Arg(10);

void BM_ExactEvolve(benchmark::State& state) {
  const CoherentField field = coherent_amplitudes(std::sqrt(static_cast<double>(state.range(0))), 1e-12);
  const ExactEvolver evolver(field, 0.8);
  for (auto _ : state) benchmark::DoNotOptimize(evolver.evolve(excited_pair(), 3.7).norm_squared());
}
BENCHMARK(BM_ExactEvolve)->Arg(5)->Arg(10);

void BM_InformationReport(benchmark::State& state) {
  const CoherentField field = coherent_amplitudes(std::sqrt(5.0), 1e-12);
  const AtomPair atoms = partial_entangled_preparation(std::acos(-1.0) / 3.0);
  const TwoQubitDensity rho = reduce_two_qubit(evolve_paper_mode(atoms, field, 0.1, 2.0));
  const Eigen::Vector2cd phi1 = reference_state(atoms, 1), phi2 = reference_state(atoms, 2);
  for (auto _ : state) benchmark::DoNotOptimize(information_report(rho, phi1, phi2).I_nonlocal);
}
BENCHMARK(BM_InformationReport);

void BM_PresetSweep(benchmark::State& state) {
  SweepConfig c = figure_preset("fig3c");
  c.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(c).rows.size());
}
BENCHMARK(BM_PresetSweep)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
