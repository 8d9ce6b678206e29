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

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tavis/model.hpp"

namespace tavis {

/// How the two atoms start out.
struct Preparation {
  enum class Kind { ground, excited, partial, product };
  Kind kind = Kind::ground;
  double theta = 0.0;                 ///< radians, partial only
  std::array<cplx, 4> amplitudes{};   ///< a1, b1, a2, b2, product only

  AtomPair atoms() const;
  std::string label() const;
};

/// Evenly spaced grid, endpoints included.
struct TimeRange {
  double start = 0.0;
  double stop = 0.0;
  int points = 0;

  std::vector<double> values() const;
};

enum class OutputFormat { csv, json };

struct SweepConfig {
  std::string name;
  std::string description;
  std::vector<double> r_values;
  double nbar = 0.0;
  std::vector<double> t_grid;
  std::optional<TimeRange> t_range;  ///< set when t_grid was generated from a range
  EvolutionMode evolution_mode = EvolutionMode::paper;
  PropagatorForm propagator_form = PropagatorForm::spectral;
  double truncation_epsilon = 1e-12;
  Preparation preparation;
  std::string output;  ///< empty means stdout
  OutputFormat format = OutputFormat::csv;
  int jobs = 1;

  SystemConfig system(double r) const;
  /// Throws InvalidInput/UsageError when the config cannot describe a run.
  void validate() const;
};

/// Names accepted by figure_preset, in registry order.
const std::vector<std::string>& preset_names();

/// Parameters of one published figure panel. Throws UsageError for unknown names.
SweepConfig figure_preset(std::string_view name);

/// Metrics at one (r, tau) cell.
struct MetricsRow {
  double r = 0.0;
  double nbar = 0.0;
  double tau = 0.0;
  double ppt_min = 0.0;
  double doe = 0.0;
  double xi1 = 0.0;
  double xi2 = 0.0;
  double xi12 = 0.0;
  double I_l1 = 0.0;
  double I_l2 = 0.0;
  double I_total = 0.0;
  double I_nl = 0.0;
  EvolutionMode mode = EvolutionMode::paper;
  PropagatorForm propagator_form = PropagatorForm::spectral;
  double max_propagator_discrepancy = 0.0;

  bool operator==(const MetricsRow&) const = default;
};

/// CSV column names, in emission order.
const std::vector<std::string>& metrics_columns();

struct SweepTable {
  SweepConfig config;
  std::vector<MetricsRow> rows;  ///< r-major, then tau, regardless of scheduling
  std::vector<std::string> warnings;
};

/// Evaluates every (r, tau) cell on config.jobs worker threads. Numerical
/// failures are rethrown with the offending (tau, r, nbar) in the message.
SweepTable run_sweep(const SweepConfig& config);

/// Analytic-vs-spectral discrepancy above which the CLI logs a notice.
inline constexpr double kDiscrepancyLogThreshold = 1e-8;

std::string config_to_json(const SweepConfig& config, bool include_runtime = true);
SweepConfig config_from_json(std::string_view text);

std::string to_csv(const SweepTable& table);
std::string to_json(const SweepTable& table);
SweepTable table_from_json(std::string_view text);

/// Writes table in `format` to `path`, or to stdout when path is empty.
void emit(const SweepTable& table, OutputFormat format, const std::string& path);

}  // namespace tavis
