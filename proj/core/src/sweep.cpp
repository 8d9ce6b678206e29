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

#include "tavis/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "tavis/errors.hpp"
#include "tavis/evolution.hpp"
#include "tavis/measures.hpp"
#include "tavis/propagator.hpp"

namespace tavis {

using nlohmann::json;

namespace {

constexpr double kIdentityTolerance = 1e-6;

// ---------------------------------------------------------------------------
// Presets

struct PresetSpec {
  const char* name;
  const char* description;
  Preparation::Kind kind;
  double nbar;
  std::vector<double> r_values;
  TimeRange range;
};

constexpr double kTheta = std::numbers::pi / 3.0;
const TimeRange kShortView{0.0, 25.0, 400};
const TimeRange kLongView{0.0, 50.0, 400};
const TimeRange kOnset{0.0, 1.0, 200};

const std::vector<PresetSpec>& preset_table() {
  using K = Preparation::Kind;
  static const std::vector<PresetSpec> table{
      {"fig1a", "PPT minimum eigenvalue, ground start, nbar=5", K::ground, 5.0, {0.1, 0.8}, kShortView},
      {"fig1b", "PPT minimum eigenvalue, ground start, nbar=10", K::ground, 10.0, {0.1, 0.8}, kShortView},
      {"fig2a", "PPT minimum eigenvalue, partially entangled start (theta=pi/3), nbar=5", K::partial, 5.0,
       {0.1, 0.8}, kShortView},
      {"fig2b", "PPT minimum eigenvalue, partially entangled start (theta=pi/3), nbar=10", K::partial, 10.0,
       {0.1, 0.8}, kShortView},
      {"fig3a", "DOE, ground start, nbar=5, long view", K::ground, 5.0, {0.1, 0.8}, kLongView},
      {"fig3b", "DOE, ground start, nbar=10, long view", K::ground, 10.0, {0.1, 0.8}, kLongView},
      {"fig3c", "DOE onset and sudden death, ground start, nbar=5", K::ground, 5.0, {0.1, 0.8}, kOnset},
      {"fig4a", "DOE, partially entangled start, nbar=5, long view", K::partial, 5.0, {0.1, 0.8}, kLongView},
      {"fig4b", "DOE, partially entangled start, nbar=10, long view", K::partial, 10.0, {0.1, 0.8}, kLongView},
      {"fig4c", "DOE onset, partially entangled start, nbar=5", K::partial, 5.0, {0.1, 0.8}, kOnset},
      // Caption lists r=0.1 for the impurity panel and r=0.8 for the information
      // panel; the body text discusses both couplings, so both series are run.
      {"fig5", "impurity and local/non-local information, ground start, nbar=10", K::ground, 10.0, {0.1, 0.8},
       kShortView},
      // Caption repeats nbar=10; the body text uses nbar=5 (a, b) and nbar=7 (c, d).
      {"fig6a", "impurity, ground start, r=0.1, nbar=5", K::ground, 5.0, {0.1}, kShortView},
      {"fig6b", "local/non-local information, ground start, r=0.1, nbar=5", K::ground, 5.0, {0.1}, kShortView},
      {"fig6c", "impurity, ground start, r=0.1, nbar=7", K::ground, 7.0, {0.1}, kShortView},
      {"fig6d", "local/non-local information, ground start, r=0.1, nbar=7", K::ground, 7.0, {0.1}, kShortView},
      {"fig7a", "impurity, partially entangled start, r=0.1, nbar=7", K::partial, 7.0, {0.1}, kShortView},
      {"fig7b", "local/non-local information, partially entangled start, r=0.1, nbar=7", K::partial, 7.0, {0.1},
       kShortView},
  };
  return table;
}

// ---------------------------------------------------------------------------
// JSON helpers

std::string_view kind_name(Preparation::Kind kind) {
  switch (kind) {
    case Preparation::Kind::ground:
      return "ground";
    case Preparation::Kind::excited:
      return "excited";
    case Preparation::Kind::partial:
      return "partial";
    case Preparation::Kind::product:
      return "product";
  }
  return "?";
}

Preparation::Kind parse_kind(const std::string& text) {
  if (text == "ground") return Preparation::Kind::ground;
  if (text == "excited") return Preparation::Kind::excited;
  if (text == "partial") return Preparation::Kind::partial;
  if (text == "product") return Preparation::Kind::product;
  throw UsageError("unknown preparation kind '" + text + "' (expected ground|excited|partial|product)");
}

std::string_view format_name(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }

OutputFormat parse_format(const std::string& text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw UsageError("unknown output format '" + text + "' (expected csv|json)");
}

json complex_to_json(cplx c) { return json::array({c.real(), c.imag()}); }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
  throw UsageError("complex amplitude must be a number or [re, im]");
}

json preparation_to_json(const Preparation& p) {
  json j{{"kind", kind_name(p.kind)}};
  if (p.kind == Preparation::Kind::partial) j["theta"] = p.theta;
  if (p.kind == Preparation::Kind::product) {
    j["a1"] = complex_to_json(p.amplitudes[0]);
    j["b1"] = complex_to_json(p.amplitudes[1]);
    j["a2"] = complex_to_json(p.amplitudes[2]);
    j["b2"] = complex_to_json(p.amplitudes[3]);
  }
  return j;
}

Preparation preparation_from_json(const json& j) {
  Preparation p;
  if (j.is_string()) {
    p.kind = parse_kind(j.get<std::string>());
    return p;
  }
  p.kind = parse_kind(j.at("kind").get<std::string>());
  if (p.kind == Preparation::Kind::partial) p.theta = j.at("theta").get<double>();
  if (p.kind == Preparation::Kind::product) {
    p.amplitudes = {complex_from_json(j.at("a1")), complex_from_json(j.at("b1")), complex_from_json(j.at("a2")),
                    complex_from_json(j.at("b2"))};
  }
  return p;
}

json config_json(const SweepConfig& c, bool include_runtime) {
  json j;
  j["name"] = c.name;
  j["description"] = c.description;
  j["r"] = c.r_values;
  j["nbar"] = c.nbar;
  if (c.t_range)
    j["t_range"] = {{"start", c.t_range->start}, {"stop", c.t_range->stop}, {"points", c.t_range->points}};
  else
    j["t_grid"] = c.t_grid;
  j["evolution_mode"] = to_string(c.evolution_mode);
  j["propagator_form"] = to_string(c.propagator_form);
  j["truncation_epsilon"] = c.truncation_epsilon;
  j["preparation"] = preparation_to_json(c.preparation);
  j["format"] = format_name(c.format);
  if (include_runtime) {
    j["output"] = c.output;
    j["jobs"] = c.jobs;
  }
  return j;
}

SweepConfig config_from(const json& j) {
  static const std::vector<std::string> known{"name",   "description", "r",           "nbar",
                                              "t_grid", "t_range",     "evolution_mode", "propagator_form",
                                              "truncation_epsilon", "preparation", "output", "format", "jobs"};
  for (const auto& [key, _] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw UsageError("unknown config field '" + key + "'");

  SweepConfig c;
  c.name = j.value("name", std::string{"custom"});
  c.description = j.value("description", std::string{});
  const json& r = j.at("r");
  c.r_values = r.is_array() ? r.get<std::vector<double>>() : std::vector<double>{r.get<double>()};
  c.nbar = j.at("nbar").get<double>();
  if (j.contains("t_range")) {
    const json& range = j.at("t_range");
    c.t_range = TimeRange{range.at("start").get<double>(), range.at("stop").get<double>(),
                          range.at("points").get<int>()};
    c.t_grid = c.t_range->values();
  } else {
    c.t_grid = j.at("t_grid").get<std::vector<double>>();
  }
  if (j.contains("evolution_mode")) c.evolution_mode = parse_evolution_mode(j["evolution_mode"].get<std::string>());
  if (j.contains("propagator_form"))
    c.propagator_form = parse_propagator_form(j["propagator_form"].get<std::string>());
  c.truncation_epsilon = j.value("truncation_epsilon", 1e-12);
  if (j.contains("preparation")) c.preparation = preparation_from_json(j["preparation"]);
  c.output = j.value("output", std::string{});
  if (j.contains("format")) c.format = parse_format(j["format"].get<std::string>());
  c.jobs = j.value("jobs", 1);
  return c;
}

json row_to_json(const MetricsRow& row) {
  return {{"r", row.r},
          {"nbar", row.nbar},
          {"tau", row.tau},
          {"ppt_min", row.ppt_min},
          {"doe", row.doe},
          {"xi1", row.xi1},
          {"xi2", row.xi2},
          {"xi12", row.xi12},
          {"I_l1", row.I_l1},
          {"I_l2", row.I_l2},
          {"I_total", row.I_total},
          {"I_nl", row.I_nl},
          {"mode", to_string(row.mode)},
          {"propagator_form", to_string(row.propagator_form)},
          {"max_propagator_discrepancy", row.max_propagator_discrepancy}};
}

MetricsRow row_from_json(const json& j) {
  MetricsRow row;
  row.r = j.at("r").get<double>();
  row.nbar = j.at("nbar").get<double>();
  row.tau = j.at("tau").get<double>();
  row.ppt_min = j.at("ppt_min").get<double>();
  row.doe = j.at("doe").get<double>();
  row.xi1 = j.at("xi1").get<double>();
  row.xi2 = j.at("xi2").get<double>();
  row.xi12 = j.at("xi12").get<double>();
  row.I_l1 = j.at("I_l1").get<double>();
  row.I_l2 = j.at("I_l2").get<double>();
  row.I_total = j.at("I_total").get<double>();
  row.I_nl = j.at("I_nl").get<double>();
  row.mode = parse_evolution_mode(j.at("mode").get<std::string>());
  row.propagator_form = parse_propagator_form(j.at("propagator_form").get<std::string>());
  row.max_propagator_discrepancy = j.at("max_propagator_discrepancy").get<double>();
  return row;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// Sweep execution

struct SeriesContext {
  double r;
  const CoherentField* field;
  std::optional<ExactEvolver> exact;
};

struct CellResult {
  MetricsRow row;
  bool truncation_warning = false;
};

CellResult evaluate_cell(const SweepConfig& config, const SeriesContext& series, const AtomPair& atoms,
                         const Eigen::Vector2cd& phi1, const Eigen::Vector2cd& phi2, double tau) {
  const CoherentField& field = *series.field;
  const double r = series.r;

  // The analytic route is always evaluated next to the spectral one so every row
  // carries the cross-check, even when the spectral propagator drives the state.
  const PropagatorForm check_form = config.propagator_form == PropagatorForm::spectral
                                        ? PropagatorForm::analytic_corrected
                                        : config.propagator_form;
  std::vector<Eigen::Matrix4cd> blocks;
  blocks.reserve(static_cast<std::size_t>(field.max_photon()) + 1);
  double discrepancy = 0.0;
  for (int n = 0; n <= field.max_photon(); ++n) {
    const Eigen::Matrix4cd spectral = propagator_spectral(n, r, tau).U;
    const Eigen::Matrix4cd analytic = propagator_analytic(n, r, tau, check_form).U;
    discrepancy = std::max(discrepancy, max_abs_difference(spectral, analytic));
    blocks.push_back(config.propagator_form == PropagatorForm::spectral ? spectral : analytic);
  }

  const JointState state = config.evolution_mode == EvolutionMode::paper
                               ? evolve_paper_mode(atoms, field, blocks)
                               : series.exact->evolve(atoms, tau);

  const TwoQubitDensity rho12 = reduce_two_qubit(state);
  validate_density(rho12);
  const PptReport ppt = degree_of_entanglement(rho12);
  const InfoReport info = information_report(rho12, phi1, phi2);

  for (const auto& [local, xi, which] : {std::tuple{info.I_local_1, info.xi1, 1}, std::tuple{info.I_local_2, info.xi2, 2}}) {
    if (std::abs(local - (1.0 - 2.0 * xi)) > kIdentityTolerance) {
      std::ostringstream msg;
      msg << "local information of qubit " << which << " (" << local << ") disagrees with 1 - 2 xi ("
          << 1.0 - 2.0 * xi << ")";
      throw OptimizationError(msg.str());
    }
  }

  CellResult out;
  MetricsRow& row = out.row;
  row.r = r;
  row.nbar = config.nbar;
  row.tau = tau;
  row.ppt_min = ppt.min_eigenvalue;
  row.doe = ppt.doe;
  row.xi1 = info.xi1;
  row.xi2 = info.xi2;
  row.xi12 = info.xi12;
  row.I_l1 = info.I_local_1;
  row.I_l2 = info.I_local_2;
  row.I_total = info.I_local_total;
  row.I_nl = info.I_nonlocal;
  row.mode = config.evolution_mode;
  row.propagator_form = config.propagator_form;
  row.max_propagator_discrepancy = discrepancy;
  out.truncation_warning = state.truncation_warning;
  return out;
}

[[noreturn]] void rethrow_with_context(std::exception_ptr error, double tau, double r, double nbar) {
  std::ostringstream where;
  where.precision(12);
  where << "at tau=" << tau << ", r=" << r << ", nbar=" << nbar << ": ";
  try {
    std::rethrow_exception(error);
  } catch (const TruncationError& e) {
    throw TruncationError(where.str() + e.what());
  } catch (const OptimizationError& e) {
    throw OptimizationError(where.str() + e.what());
  } catch (const NumericalDomainError& e) {
    throw NumericalDomainError(where.str() + e.what());
  } catch (const NumericalError& e) {
    throw ValidationError(where.str() + e.what());
  }
}

}  // namespace

// ---------------------------------------------------------------------------

AtomPair Preparation::atoms() const {
  switch (kind) {
    case Kind::ground:
      return ground_pair();
    case Kind::excited:
      return excited_pair();
    case Kind::partial:
      return partial_entangled_preparation(theta);
    case Kind::product:
      return product_preparation(amplitudes[0], amplitudes[1], amplitudes[2], amplitudes[3]);
  }
  throw InvalidInput("unknown preparation");
}

std::string Preparation::label() const {
  std::string out(kind_name(kind));
  if (kind == Kind::partial) out += "(theta=" + format_double(theta) + ")";
  return out;
}

std::vector<double> TimeRange::values() const {
  if (points < 1) throw InvalidInput("time range needs at least one point");
  if (points == 1) return {start};
  std::vector<double> out(static_cast<std::size_t>(points));
  const double step = (stop - start) / (points - 1);
  for (int i = 0; i < points; ++i) out[static_cast<std::size_t>(i)] = start + step * i;
  out.back() = stop;
  return out;
}

SystemConfig SweepConfig::system(double r) const {
  SystemConfig s;
  s.r = r;
  s.nbar = nbar;
  s.t_grid = t_grid;
  s.evolution_mode = evolution_mode;
  s.propagator_form = propagator_form;
  s.truncation_epsilon = truncation_epsilon;
  return s;
}

void SweepConfig::validate() const {
  if (r_values.empty()) throw UsageError("config needs at least one coupling ratio r");
  if (t_grid.empty()) throw UsageError("config needs a non-empty time grid");
  if (jobs < 1) throw UsageError("jobs must be >= 1");
  for (double r : r_values) system(r).validate();
  (void)preparation.atoms();
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& p : preset_table()) out.emplace_back(p.name);
    return out;
  }();
  return names;
}

SweepConfig figure_preset(std::string_view name) {
  for (const auto& p : preset_table()) {
    if (name != p.name) continue;
    SweepConfig c;
    c.name = p.name;
    c.description = p.description;
    c.r_values = p.r_values;
    c.nbar = p.nbar;
    c.t_range = p.range;
    c.t_grid = p.range.values();
    c.preparation.kind = p.kind;
    if (p.kind == Preparation::Kind::partial) c.preparation.theta = kTheta;
    return c;
  }
  std::string valid;
  for (const auto& n : preset_names()) valid += (valid.empty() ? "" : ", ") + n;
  throw UsageError("unknown preset '" + std::string(name) + "'; valid presets: " + valid);
}

const std::vector<std::string>& metrics_columns() {
  static const std::vector<std::string> columns{
      "r",    "nbar", "tau",  "ppt_min", "doe",  "xi1",             "xi2",
      "xi12", "I_l1", "I_l2", "I_total", "I_nl", "mode", "propagator_form",
      "max_propagator_discrepancy"};
  return columns;
}

SweepTable run_sweep(const SweepConfig& config) {
  config.validate();

  const AtomPair atoms = config.preparation.atoms();
  const Eigen::Vector2cd phi1 = reference_state(atoms, 1);
  const Eigen::Vector2cd phi2 = reference_state(atoms, 2);
  const CoherentField field = coherent_amplitudes(std::sqrt(config.nbar), config.truncation_epsilon);

  std::vector<SeriesContext> series;
  series.reserve(config.r_values.size());
  for (double r : config.r_values) {
    SeriesContext s{r, &field, std::nullopt};
    if (config.evolution_mode == EvolutionMode::exact) s.exact.emplace(field, r);
    series.push_back(std::move(s));
  }

  const std::size_t n_tau = config.t_grid.size();
  const std::size_t n_cells = series.size() * n_tau;
  std::vector<CellResult> results(n_cells);
  std::vector<std::exception_ptr> errors(n_cells);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};

  const auto worker = [&] {
    for (;;) {
      if (failed.load(std::memory_order_relaxed)) return;
      const std::size_t i = next.fetch_add(1);
      if (i >= n_cells) return;
      try {
        results[i] = evaluate_cell(config, series[i / n_tau], atoms, phi1, phi2, config.t_grid[i % n_tau]);
      } catch (...) {
        errors[i] = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
      }
    }
  };

  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(config.jobs), n_cells);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  // Cells are claimed in index order, so the lowest failing index is the same
  // for every worker count.
  for (std::size_t i = 0; i < n_cells; ++i) {
    if (!errors[i]) continue;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const NumericalError&) {
      rethrow_with_context(errors[i], config.t_grid[i % n_tau], series[i / n_tau].r, config.nbar);
    }
  }

  SweepTable table;
  table.config = config;
  table.rows.reserve(n_cells);
  for (std::size_t i = 0; i < n_cells; ++i) {
    table.rows.push_back(results[i].row);
    if (results[i].truncation_warning) {
      std::ostringstream msg;
      msg << "significant amplitude at the top photon level (tau=" << results[i].row.tau
          << ", r=" << results[i].row.r << ")";
      table.warnings.push_back(msg.str());
    }
  }
  return table;
}

std::string config_to_json(const SweepConfig& config, bool include_runtime) {
  return config_json(config, include_runtime).dump();
}

SweepConfig config_from_json(std::string_view text) {
  try {
    SweepConfig c = config_from(json::parse(text));
    c.validate();
    return c;
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed config: ") + e.what());
  } catch (const InvalidInput& e) {
    throw UsageError(std::string("invalid config: ") + e.what());
  }
}

std::string to_csv(const SweepTable& table) {
  std::string out = "# config: " + config_to_json(table.config, false) + "\n";
  const auto& columns = metrics_columns();
  for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + columns[i];
  out += '\n';
  for (const MetricsRow& row : table.rows) {
    for (double v : {row.r, row.nbar, row.tau, row.ppt_min, row.doe, row.xi1, row.xi2, row.xi12, row.I_l1,
                     row.I_l2, row.I_total, row.I_nl}) {
      out += format_double(v);
      out += ',';
    }
    out += to_string(row.mode);
    out += ',';
    out += to_string(row.propagator_form);
    out += ',';
    out += format_double(row.max_propagator_discrepancy);
    out += '\n';
  }
  return out;
}

std::string to_json(const SweepTable& table) {
  json rows = json::array();
  for (const MetricsRow& row : table.rows) rows.push_back(row_to_json(row));
  json j{{"config", config_json(table.config, false)}, {"rows", std::move(rows)}};
  return j.dump(1) + "\n";
}

SweepTable table_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    SweepTable table;
    table.config = config_from(j.at("config"));
    for (const json& row : j.at("rows")) table.rows.push_back(row_from_json(row));
    return table;
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed table: ") + e.what());
  }
}

void emit(const SweepTable& table, OutputFormat format, const std::string& path) {
  const std::string text = format == OutputFormat::csv ? to_csv(table) : to_json(table);
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace tavis
