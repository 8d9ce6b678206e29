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

// simulate: run a figure preset or a JSON config and write the metric table.
//
//   simulate --preset fig1a --out fig1a.csv
//   simulate --config run.json --format json --jobs 4
//
// Exit codes: 0 success, 2 usage error, 3 numerical-validation failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tavis/errors.hpp"
#include "tavis/sweep.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tavis::UsageError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-atom cavity QED entanglement and information sweeps"};

  std::string preset, config_path, out, format, mode, propagator;
  int jobs = 0;
  bool list = false;

  auto* preset_opt = app.add_option("--preset", preset, "Figure preset name (see --list-presets)");
  auto* config_opt = app.add_option("--config", config_path, "JSON config file mirroring SweepConfig");
  preset_opt->excludes(config_opt);
  app.add_option("--out", out, "Output path (default: stdout)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--mode", mode, "Evolution mode")->check(CLI::IsMember({"paper", "exact"}));
  app.add_option("--propagator", propagator, "Block propagator")
      ->check(CLI::IsMember({"spectral", "analytic-corrected", "analytic-verbatim"}));
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--list-presets", list, "Print preset names and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (list) {
    for (const auto& name : tavis::preset_names())
      std::cout << name << "  " << tavis::figure_preset(name).description << '\n';
    return 0;
  }

  try {
    if (preset.empty() && config_path.empty()) throw tavis::UsageError("one of --preset or --config is required");

    tavis::SweepConfig config =
        preset.empty() ? tavis::config_from_json(read_file(config_path)) : tavis::figure_preset(preset);
    if (!out.empty()) config.output = out;
    if (!format.empty()) config.format = format == "csv" ? tavis::OutputFormat::csv : tavis::OutputFormat::json;
    if (!mode.empty()) config.evolution_mode = tavis::parse_evolution_mode(mode);
    if (!propagator.empty()) config.propagator_form = tavis::parse_propagator_form(propagator);
    if (jobs > 0) config.jobs = jobs;

    const tavis::SweepTable table = tavis::run_sweep(config);

    for (const auto& warning : table.warnings) std::cerr << "warning: " << warning << '\n';
    double worst = 0.0;
    for (const auto& row : table.rows) worst = std::max(worst, row.max_propagator_discrepancy);
    if (worst > tavis::kDiscrepancyLogThreshold)
      std::cerr << "note: analytic/spectral propagator discrepancy reaches " << worst << '\n';

    tavis::emit(table, config.format, config.output);
  } catch (const tavis::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const tavis::InvalidInput& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const tavis::NumericalError& e) {
    std::cerr << "numerical validation failed: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
