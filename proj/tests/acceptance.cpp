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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tavis/evolution.hpp"
#include "tavis/measures.hpp"
#include "tavis/propagator.hpp"
#include "tavis/sweep.hpp"

using namespace tavis;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Report {
 public:
  void run(int id, const char* title, const std::function<Outcome()>& check) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %d %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs);
    std::fflush(stdout);
    failures_ += o.pass ? 0 : 1;
  }
  int failures() const { return failures_; }

 private:
  int failures_ = 0;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

// Presets are run once and shared by criteria 3 and 5.
const std::vector<SweepTable>& preset_tables() {
  static const std::vector<SweepTable> tables = [] {
    std::vector<SweepTable> out;
    for (const auto& name : preset_names()) {
      SweepConfig c = figure_preset(name);
      c.jobs = 4;
      out.push_back(run_sweep(c));
    }
    return out;
  }();
  return tables;
}

Outcome unitarity_and_spectrum() {
  double worst_unitarity = 0.0, worst_spectrum = 0.0;
  for (int n = 0; n <= 60; ++n)
    for (double r : {0.0, 0.1, 0.5, 0.8, 1.0}) {
      for (double tau : {0.5, 1.0, 5.0, 20.0}) {
        const Eigen::Matrix4cd u = propagator_spectral(n, r, tau).U;
        worst_unitarity =
            std::max(worst_unitarity, (u * u.adjoint() - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff());
      }
      const BlockFrequencies f = block_frequencies(n, r, FrequencyForm::corrected);
      std::vector<double> expected{-std::sqrt(f.mu), -std::sqrt(f.nu), std::sqrt(f.nu), std::sqrt(f.mu)};
      std::sort(expected.begin(), expected.end());
      Eigen::EigenSolver<Eigen::Matrix4d> eig(block_hamiltonian(n, r), false);
      std::vector<double> actual;
      for (int i = 0; i < 4; ++i) actual.push_back(eig.eigenvalues()(i).real());
      std::sort(actual.begin(), actual.end());
      for (int i = 0; i < 4; ++i) worst_spectrum = std::max(worst_spectrum, std::abs(actual[i] - expected[i]));
    }
  return {worst_unitarity < 1e-12 && worst_spectrum < 1e-10,
          "max |UU^dag - I| = " + sci(worst_unitarity) + " (< 1e-12), max eigenvalue error = " + sci(worst_spectrum) +
              " (< 1e-10)"};
}

Outcome oracle_equivalence() {
  double worst = 1.0;
  for (double nbar : {5.0, 10.0}) {
    const CoherentField field = coherent_amplitudes(std::sqrt(nbar), 1e-12);
    for (double r : {0.1, 0.8}) {
      const ExactEvolver exact(field, r);
      for (double tau : TimeRange{0.0, 20.0, 50}.values()) {
        const double f = state_fidelity(evolve_paper_mode(excited_pair(), field, r, tau), exact.evolve(excited_pair(), tau));
        worst = std::min(worst, f);
      }
    }
  }
  return {worst >= 1.0 - 1e-10, "min fidelity = 1 - " + sci(1.0 - worst) + " (>= 1 - 1e-10)"};
}

Outcome density_validity() {
  double worst_trace = 0.0, worst_herm = 0.0, worst_eig = INFINITY;
  std::size_t points = 0;
  for (const auto& table : preset_tables()) {
    const SweepConfig& c = table.config;
    const AtomPair atoms = c.preparation.atoms();
    const CoherentField field = coherent_amplitudes(std::sqrt(c.nbar), c.truncation_epsilon);
    for (double r : c.r_values) {
      std::optional<ExactEvolver> exact;
      if (c.evolution_mode == EvolutionMode::exact) exact.emplace(field, r);
      for (double tau : c.t_grid) {
        const JointState psi =
            exact ? exact->evolve(atoms, tau) : evolve_paper_mode(atoms, field, r, tau, c.propagator_form);
        const TwoQubitDensity rho = reduce_two_qubit(psi);
        const DensityDiagnostics d = diagnose(rho.rho);
        worst_trace = std::max(worst_trace, d.trace_error);
        worst_herm = std::max(worst_herm, d.hermiticity_error);
        worst_eig = std::min(worst_eig, d.min_eigenvalue);
        ++points;
      }
    }
  }
  return {worst_trace <= 1e-10 && worst_herm <= 1e-12 && worst_eig >= -1e-10,
          std::to_string(points) + " points; max trace error " + sci(worst_trace) + ", max hermiticity error " +
              sci(worst_herm) + ", min eigenvalue " + sci(worst_eig)};
}

Outcome metric_ground_truths() {
  const PptReport bell = degree_of_entanglement(pure_two_qubit(partial_entangled_preparation(std::numbers::pi / 4.0)));
  const std::array<double, 4> bell_spectrum{-0.5, 0.5, 0.5, 0.5};
  double spectrum_error = 0.0;
  for (std::size_t i = 0; i < 4; ++i) spectrum_error = std::max(spectrum_error, std::abs(bell.eigenvalues[i] - bell_spectrum[i]));

  std::mt19937_64 rng(20240611);
  double worst_separable = 0.0;
  for (int i = 0; i < 1000; ++i)
    worst_separable = std::max(worst_separable, std::abs(degree_of_entanglement(oracle::random_separable(rng)).doe));

  const double third = degree_of_entanglement(pure_two_qubit(partial_entangled_preparation(std::numbers::pi / 3.0))).doe;

  const bool pass = std::abs(bell.doe - 1.0) <= 1e-10 && spectrum_error <= 1e-10 && worst_separable <= 1e-8 &&
                    std::abs(third - std::sqrt(3.0) / 2.0) <= 1e-10;
  return {pass, "DOE(Bell) - 1 = " + sci(bell.doe - 1.0) + ", Bell PT spectrum error " + sci(spectrum_error) +
                    ", max |DOE| over 1000 separable = " + sci(worst_separable) + ", DOE(pi/3) - sqrt(3)/2 = " +
                    sci(third - std::sqrt(3.0) / 2.0) + " (published 0.78 is not a target)"};
}

Outcome information_identities() {
  double worst_local = 0.0, worst_nonlocal = 0.0;
  std::size_t points = 0;
  for (const auto& table : preset_tables())
    for (const auto& row : table.rows) {
      worst_local = std::max({worst_local, std::abs(row.I_l1 - (1.0 - 2.0 * row.xi1)),
                              std::abs(row.I_l2 - (1.0 - 2.0 * row.xi2))});
      worst_nonlocal = std::max(worst_nonlocal, std::abs(row.I_nl - 2.0 * (row.xi1 + row.xi2)));
      ++points;
    }
  return {worst_local <= 1e-6 && worst_nonlocal <= 1e-6,
          std::to_string(points) + " points; max |I_local - (1 - 2 xi)| = " + sci(worst_local) +
              ", max |I_nonlocal - 2(xi1 + xi2)| = " + sci(worst_nonlocal)};
}

struct EarlyPeak {
  double tau = 0.0;
  double value = 0.0;
  std::size_t end = 0;  // first index after the first entangled interval
};

// Maximum over the first contiguous run with DOE > 1e-12.
EarlyPeak early_peak(const std::vector<MetricsRow>& rows) {
  EarlyPeak p;
  std::size_t i = 0;
  while (i < rows.size() && rows[i].doe <= 1e-12) ++i;
  for (; i < rows.size() && rows[i].doe > 1e-12; ++i)
    if (rows[i].doe > p.value) p = {rows[i].tau, rows[i].doe, 0};
  p.end = i;
  return p;
}

Outcome sudden_death() {
  const SweepTable t = run_sweep(figure_preset("fig3c"));
  std::vector<MetricsRow> weak, strong;
  for (const auto& row : t.rows) (row.r == 0.8 ? strong : weak).push_back(row);

  const EarlyPeak s = early_peak(strong), w = early_peak(weak);
  const bool rises = !strong.empty() && std::abs(strong.front().doe) <= 1e-12 && strong[1].doe > 0.0;
  // Sudden death: DOE sits at exactly zero for an interval after the peak.
  std::size_t zero_run = 0;
  for (std::size_t i = s.end; i < strong.size() && std::abs(strong[i].doe) <= 1e-12; ++i) ++zero_run;

  const bool pass = rises && s.tau >= 0.1 && s.tau <= 0.6 && s.value >= 0.003 && s.value <= 0.03 && zero_run >= 2 &&
                    s.value >= 3.0 * w.value;
  std::ostringstream detail;
  detail << "r=0.8 peak " << s.value << " at tau=" << s.tau << " (published 0.009 near 0.3), then " << zero_run
         << " grid points at DOE=0; r=0.1 early peak " << w.value << " (ratio " << s.value / w.value << ")";
  return {pass, detail.str()};
}

Outcome decoupling_law() {
  SweepConfig c;
  c.name = "decoupled";
  c.r_values = {0.0};
  c.nbar = 5.0;
  c.t_grid = TimeRange{0.0, 20.0, 201}.values();
  c.evolution_mode = EvolutionMode::exact;
  c.preparation.kind = Preparation::Kind::product;
  c.preparation.amplitudes = {0.6, 0.8, cplx{0.0, std::sqrt(0.5)}, std::sqrt(0.5)};
  c.jobs = 4;
  const SweepTable t = run_sweep(c);
  double max_doe = 0.0, max_drift = 0.0;
  for (const auto& row : t.rows) {
    max_doe = std::max(max_doe, std::abs(row.doe));
    max_drift = std::max(max_drift, std::abs(row.xi2 - t.rows.front().xi2));
  }
  return {max_doe <= 1e-8 && max_drift <= 1e-10,
          "max DOE = " + sci(max_doe) + " (<= 1e-8), max |xi2(tau) - xi2(0)| = " + sci(max_drift) + " (<= 1e-10)"};
}

Outcome determinism() {
  SweepConfig c = figure_preset("fig1a");
  c.jobs = 1;
  const std::string serial = to_csv(run_sweep(c));
  c.jobs = 8;
  const std::string parallel = to_csv(run_sweep(c));
  return {serial == parallel, "fig1a CSV " + std::to_string(serial.size()) + " bytes, jobs 1 vs 8 " +
                                  (serial == parallel ? "identical" : "DIFFER")};
}

}  // namespace

int main() {
  Report report;
  report.run(1, "unitarity and spectrum", unitarity_and_spectrum);
  report.run(2, "paper/exact oracle equivalence for |ee>", oracle_equivalence);
  report.run(3, "density-matrix validity over all presets", density_validity);
  report.run(4, "metric ground truths", metric_ground_truths);
  report.run(5, "information identities over all presets", information_identities);
  report.run(6, "sudden death (fig3c)", sudden_death);
  report.run(7, "decoupling law (exact, r=0)", decoupling_law);
  report.run(8, "determinism and parallelism invariance", determinism);
  std::printf("%d of 8 criteria failed\n", report.failures());
  return report.failures() == 0 ? 0 : 1;
}
