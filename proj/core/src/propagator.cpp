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

#include "tavis/propagator.hpp"

#include <cmath>
#include <string>

#include "tavis/errors.hpp"

namespace tavis {

namespace {

using namespace std::complex_literals;

// Below this nu the sin(sqrt(nu) tau)/sqrt(nu) factor is replaced by its limit tau.
constexpr double kDegenerateNu = 1e-14;

void check_inputs(int n, double r, double tau) {
  if (n < 0) throw InvalidInput("photon index n must be >= 0, got " + std::to_string(n));
  if (!(std::isfinite(r) && r >= 0.0)) throw InvalidInput("coupling ratio r must be finite and >= 0");
  if (!std::isfinite(tau)) throw InvalidInput("scaled time must be finite");
}

struct Oscillations {
  double cos_mu, cos_nu;  // cos(sqrt(mu) tau), cos(sqrt(nu) tau)
  double sinc_mu, sinc_nu;  // sin(sqrt(x) tau) / sqrt(x)
};

double sin_over_root(double x, double tau) {
  if (x < kDegenerateNu) return tau;
  const double w = std::sqrt(x);
  return std::sin(w * tau) / w;
}

Oscillations oscillations(const BlockFrequencies& f, double tau) {
  return {std::cos(std::sqrt(f.mu) * tau), std::cos(std::sqrt(std::max(f.nu, 0.0)) * tau),
          sin_over_root(f.mu, tau), sin_over_root(f.nu, tau)};
}

// Delta / (1 - r^2), continued to r = 1 where both vanish.
double delta_over_detuning(const BlockFrequencies& f) {
  const double denom = 1.0 - f.r * f.r;
  if (denom == 0.0) return f.gamma * f.beta;
  return f.Delta / denom;
}

Eigen::Matrix4cd symmetric_completion(Eigen::Matrix4cd u) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < i; ++j) u(i, j) = u(j, i);
  return u;
}

Eigen::Matrix4cd corrected_entries(const BlockFrequencies& f, double tau) {
  const auto [cm, cn, sm, sn] = oscillations(f, tau);
  const double r = f.r, g = f.gamma, b = f.beta, D = f.Delta;
  const double s = 1.0 + r * r;
  const double d = f.mu - f.nu;
  const double mu = f.mu, nu = f.nu;

  Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
  u(0, 0) = -(b * b * s * (cm - cn) - (mu * cm - nu * cn)) / d;
  u(0, 1) = -1i * r / d * ((D * b + g * mu) * sm - (D * b + g * nu) * sn);
  u(0, 2) = 1i / d * ((D * b - g * mu) * sm - (D * b - g * nu) * sn);
  u(0, 3) = 2.0 * r * g * b * (cm - cn) / d;
  u(1, 1) = -((r * r * b * b + g * g - mu) * cm - (r * r * b * b + g * g - nu) * cn) / d;
  u(1, 2) = r * f.delta / (d * s) * (cm - cn);
  u(1, 3) = 1i / d * ((D * g - b * mu) * sm - (D * g - b * nu) * sn);
  u(2, 2) = -((r * r * g * g + b * b - mu) * cm - (r * r * g * g + b * b - nu) * cn) / d;
  u(2, 3) = -1i * r / d * ((D * g + b * mu) * sm - (D * g + b * nu) * sn);
  u(3, 3) = -(g * g * s * (cm - cn) - (mu * cm - nu * cn)) / d;
  return symmetric_completion(u);
}

}  // namespace

Eigen::Matrix4d block_hamiltonian(int n, double r) {
  check_inputs(n, r, 0.0);
  const double g = std::sqrt(n + 1.0);
  const double b = std::sqrt(n + 2.0);
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m(block::ee, block::eg) = m(block::eg, block::ee) = r * g;
  m(block::ee, block::ge) = m(block::ge, block::ee) = g;
  m(block::eg, block::gg) = m(block::gg, block::eg) = b;
  m(block::ge, block::gg) = m(block::gg, block::ge) = r * b;
  return m;
}

BlockFrequencies block_frequencies(int n, double r, FrequencyForm form) {
  check_inputs(n, r, 0.0);
  BlockFrequencies f;
  f.n = n;
  f.r = r;
  f.form = form;
  f.gamma = std::sqrt(n + 1.0);
  f.beta = std::sqrt(n + 2.0);
  const double s = 1.0 + r * r;
  f.delta = form == FrequencyForm::corrected ? (2.0 * n + 3.0) * s : std::sqrt(2.0 * n + 3.0) * s;
  f.Delta = std::sqrt((n + 1.0) * (n + 2.0)) * (1.0 - r * r);
  const double disc = f.delta * f.delta - 4.0 * f.Delta * f.Delta;
  if (disc < 0.0)
    throw NumericalDomainError("block frequencies undefined: delta^2 < 4 Delta^2 for n=" +
                               std::to_string(n) + ", r=" + std::to_string(r));
  f.mu = 0.5 * (f.delta + std::sqrt(disc));
  // mu * nu = Delta^2 exactly; avoids cancellation when Delta is small.
  f.nu = f.mu > 0.0 ? f.Delta * f.Delta / f.mu : 0.0;
  return f;
}

BlockPropagator propagator_spectral(int n, double r, double tau) {
  check_inputs(n, r, tau);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> eig(block_hamiltonian(n, r));
  if (eig.info() != Eigen::Success)
    throw NumericalError("eigendecomposition of block " + std::to_string(n) + " failed");
  const Eigen::Matrix4d& v = eig.eigenvectors();
  Eigen::Vector4cd phases;
  for (int k = 0; k < 4; ++k) phases(k) = std::polar(1.0, -eig.eigenvalues()(k) * tau);
  BlockPropagator p;
  p.n = n;
  p.tau = tau;
  p.form = PropagatorForm::spectral;
  p.U = v.cast<cplx>() * phases.asDiagonal() * v.transpose().cast<cplx>();
  return p;
}

Eigen::Matrix4cd printed_entries(const BlockFrequencies& f, double tau) {
  const auto [cm, cn, sm, sn] = oscillations(f, tau);
  const double r = f.r, g = f.gamma, b = f.beta, D = f.Delta;
  const double s = 1.0 + r * r;
  const double d = f.mu - f.nu;
  const double mu = f.mu, nu = f.nu;

  Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
  u(0, 0) = -(b * b * s * (cm - cn) + (mu * cm + nu * cn)) / d;
  u(0, 1) = -1i * r / d * ((D * b + g * mu) * sm + (D * b - g * nu) * sn);
  u(0, 2) = 1i / d * ((D * b - g * mu) * sm - (D * b - g * nu) * sn);
  u(0, 3) = -2.0 * r * delta_over_detuning(f) / d * (cm - cn);
  u(1, 1) = -((r * r * b * b + g * g - mu) * cm - (r * r * b * b + g * g - nu) * cn) / d;
  u(1, 2) = r * f.delta / (d * s) * (cm - cn);
  u(1, 3) = 1i / d * ((D * g - b * mu) * sm - (D * g - b * nu) * sn);
  u(2, 2) = -((r * r * g * g + b * b - mu) * cm - (r * r * g * g + b * b - nu) * cn) / d;
  u(2, 3) = -1i * r / d * ((D * g + b * mu) * sm + (D * g - b * nu) * sn);
  u(3, 3) = -(g * g * s * (cm - cn) + (mu * cm + nu * cn)) / d;
  return symmetric_completion(u);
}

BlockPropagator propagator_analytic(int n, double r, double tau, PropagatorForm form) {
  check_inputs(n, r, tau);
  BlockPropagator p;
  p.n = n;
  p.tau = tau;
  p.form = form;
  switch (form) {
    case PropagatorForm::analytic_corrected:
      p.U = corrected_entries(block_frequencies(n, r, FrequencyForm::corrected), tau);
      break;
    case PropagatorForm::analytic_verbatim:
      p.U = printed_entries(block_frequencies(n, r, FrequencyForm::verbatim), tau);
      break;
    case PropagatorForm::spectral:
      throw InvalidInput("propagator_analytic requires an analytic form");
  }
  return p;
}

BlockPropagator make_propagator(int n, double r, double tau, PropagatorForm form) {
  if (form == PropagatorForm::spectral) return propagator_spectral(n, r, tau);
  return propagator_analytic(n, r, tau, form);
}

double max_abs_difference(const Eigen::Matrix4cd& a, const Eigen::Matrix4cd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

double propagator_discrepancy(int n, double r, double tau, PropagatorForm form) {
  if (form == PropagatorForm::spectral) {
    check_inputs(n, r, tau);
    return 0.0;
  }
  return max_abs_difference(propagator_analytic(n, r, tau, form).U, propagator_spectral(n, r, tau).U);
}

}  // namespace tavis
