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

#include "tavis/model.hpp"

#include <cmath>
#include <string>

#include "tavis/errors.hpp"

namespace tavis {

namespace {

constexpr double kNormTolerance = 1e-12;

double log_poisson(double nbar, int k) {
  if (nbar == 0.0) return k == 0 ? 0.0 : -INFINITY;
  return k * std::log(nbar) - nbar - std::lgamma(k + 1.0);
}

// Poisson(nbar) mass strictly beyond n.
double poisson_tail(double nbar, int n) {
  double tail = 0.0;
  for (int k = n + 1;; ++k) {
    const double term = std::exp(log_poisson(nbar, k));
    tail += term;
    if (k > nbar && (term == 0.0 || term < 1e-30 * tail)) break;
  }
  return tail;
}

}  // namespace

std::string_view to_string(EvolutionMode mode) {
  return mode == EvolutionMode::paper ? "paper" : "exact";
}

std::string_view to_string(PropagatorForm form) {
  switch (form) {
    case PropagatorForm::spectral:
      return "spectral";
    case PropagatorForm::analytic_corrected:
      return "analytic-corrected";
    case PropagatorForm::analytic_verbatim:
      return "analytic-verbatim";
  }
  return "?";
}

EvolutionMode parse_evolution_mode(std::string_view text) {
  if (text == "paper") return EvolutionMode::paper;
  if (text == "exact") return EvolutionMode::exact;
  throw UsageError("unknown evolution mode '" + std::string(text) + "' (expected paper|exact)");
}

PropagatorForm parse_propagator_form(std::string_view text) {
  if (text == "spectral") return PropagatorForm::spectral;
  if (text == "analytic-corrected" || text == "analytic_corrected")
    return PropagatorForm::analytic_corrected;
  if (text == "analytic-verbatim" || text == "analytic_verbatim")
    return PropagatorForm::analytic_verbatim;
  throw UsageError("unknown propagator form '" + std::string(text) +
                   "' (expected spectral|analytic-corrected|analytic-verbatim)");
}

void SystemConfig::validate() const {
  if (!(std::isfinite(r) && r >= 0.0)) throw InvalidInput("coupling ratio r must be finite and >= 0");
  if (!(std::isfinite(nbar) && nbar >= 0.0))
    throw InvalidInput("mean photon number must be finite and >= 0");
  if (!(truncation_epsilon > 0.0 && truncation_epsilon < 1.0))
    throw InvalidInput("truncation_epsilon must lie in (0, 1)");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!std::isfinite(t_grid[i]) || t_grid[i] < 0.0)
      throw InvalidInput("time grid entries must be finite and non-negative");
    if (i > 0 && !(t_grid[i] > t_grid[i - 1]))
      throw InvalidInput("time grid must be strictly increasing");
  }
}

AtomPair AtomPair::from_joint(const std::array<cplx, 4>& joint) {
  double norm = 0.0;
  for (const auto& c : joint) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw InvalidInput("atomic amplitudes must be finite");
    norm += std::norm(c);
  }
  if (std::abs(norm - 1.0) > kNormTolerance)
    throw InvalidInput("joint atomic amplitudes must have unit norm (got " + std::to_string(norm) + ")");
  return AtomPair(joint);
}

AtomPair product_preparation(cplx a1, cplx b1, cplx a2, cplx b2) {
  if (std::abs(std::norm(a1) + std::norm(b1) - 1.0) > kNormTolerance)
    throw InvalidInput("atom 1 amplitudes are not normalized");
  if (std::abs(std::norm(a2) + std::norm(b2) - 1.0) > kNormTolerance)
    throw InvalidInput("atom 2 amplitudes are not normalized");
  return AtomPair::from_joint({a1 * a2, a1 * b2, b1 * a2, b1 * b2});
}

AtomPair partial_entangled_preparation(double theta) {
  if (!std::isfinite(theta)) throw InvalidInput("theta must be finite");
  return AtomPair::from_joint({std::cos(theta), 0.0, 0.0, std::sin(theta)});
}

AtomPair ground_pair() { return product_preparation(0.0, 1.0, 0.0, 1.0); }

AtomPair excited_pair() { return product_preparation(1.0, 0.0, 1.0, 0.0); }

CoherentField::CoherentField(cplx alpha, double epsilon, std::vector<cplx> q)
    : alpha_(alpha), epsilon_(epsilon), q_(std::move(q)), mass_(0.0) {
  for (const auto& c : q_) mass_ += std::norm(c);
  if (q_.empty() || mass_ < 1.0 - epsilon_ || mass_ > 1.0 + kNormTolerance)
    throw TruncationError("coherent field stores mass " + std::to_string(mass_) +
                          ", outside [1 - epsilon, 1]");
}

int truncation_level(double nbar, double epsilon) {
  if (!(std::isfinite(nbar) && nbar >= 0.0)) throw InvalidInput("nbar must be finite and >= 0");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InvalidInput("epsilon must lie in (0, 1)");
  int n = static_cast<int>(std::ceil(nbar + 10.0 * std::sqrt(nbar) + 20.0));
  while (poisson_tail(nbar, n) >= epsilon) ++n;
  return n;
}

CoherentField coherent_amplitudes(cplx alpha, double epsilon) {
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()))
    throw InvalidInput("coherent amplitude alpha must be finite");
  const double nbar = std::norm(alpha);
  const int n_max = truncation_level(nbar, epsilon);
  const double phase = std::arg(alpha);

  std::vector<cplx> q(static_cast<std::size_t>(n_max) + 1, cplx{0.0, 0.0});
  for (int n = 0; n <= n_max; ++n) {
    const double magnitude = std::exp(0.5 * log_poisson(nbar, n));
    q[static_cast<std::size_t>(n)] = std::polar(magnitude, n * phase);
  }
  return CoherentField(alpha, epsilon, std::move(q));
}

}  // namespace tavis
