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

#include <Eigen/Dense>

#include "tavis/model.hpp"

namespace tavis {

/// Invariant subspace of the resonant interaction for photon index n. Basis order
/// is fixed everywhere: (|ee,n>, |eg,n+1>, |ge,n+1>, |gg,n+2>).
namespace block {
inline constexpr int ee = 0;
inline constexpr int eg = 1;
inline constexpr int ge = 2;
inline constexpr int gg = 3;
}  // namespace block

/// Interaction Hamiltonian restricted to block n, in units of lambda_1.
Eigen::Matrix4d block_hamiltonian(int n, double r);

enum class FrequencyForm {
  corrected,  ///< delta_n = (2n+3)(1+r^2), the value trace(M^2)/2 demands
  verbatim,   ///< delta_n = sqrt(2n+3)(1+r^2), as originally printed
};

/// Squared eigenfrequencies of block n and the abbreviations used by the closed form.
struct BlockFrequencies {
  int n = 0;
  double r = 0.0;
  double gamma = 0.0;  ///< sqrt(n+1)
  double beta = 0.0;   ///< sqrt(n+2)
  double delta = 0.0;  ///< mu + nu
  double Delta = 0.0;  ///< sqrt((n+1)(n+2)) (1 - r^2); Delta^2 = mu * nu
  double mu = 0.0;
  double nu = 0.0;
  FrequencyForm form = FrequencyForm::corrected;
};

BlockFrequencies block_frequencies(int n, double r, FrequencyForm form);

struct BlockPropagator {
  int n = 0;
  double tau = 0.0;
  PropagatorForm form = PropagatorForm::spectral;
  Eigen::Matrix4cd U;
};

/// exp(-i M tau) from the real-symmetric eigendecomposition of block_hamiltonian(n, r).
BlockPropagator propagator_spectral(int n, double r, double tau);

/// Closed-form propagator. analytic_corrected uses the corrected frequencies and
/// sign-corrected entries (agrees with the spectral route to rounding);
/// analytic_verbatim evaluates the original expressions literally.
BlockPropagator propagator_analytic(int n, double r, double tau, PropagatorForm form);

/// Dispatches on form.
BlockPropagator make_propagator(int n, double r, double tau, PropagatorForm form);

/// The ten originally printed entries (completed by U_ij = U_ji) evaluated with
/// the supplied frequencies. Kept separate so the printed expressions can be
/// checked against the oracle with either frequency convention.
Eigen::Matrix4cd printed_entries(const BlockFrequencies& freq, double tau);

/// max_ij |U_analytic - U_spectral|; zero for the spectral form.
double propagator_discrepancy(int n, double r, double tau, PropagatorForm form);

/// Largest entry of |A - B|.
double max_abs_difference(const Eigen::Matrix4cd& a, const Eigen::Matrix4cd& b);

}  // namespace tavis
