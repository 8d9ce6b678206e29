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
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "tavis/model.hpp"

namespace tavis {

/// Atom-field state at one instant.
///
/// Both modes store the amplitude grid psi(label, m) with atomic label in
/// (ee, eg, ge, gg) order and photon number m = 0..max_photon + 2. Paper mode
/// additionally keeps the per-n channel coefficients q_n (A_n, B_n, C_n, D_n);
/// channel n places A at m = n, B and C at m = n + 1 and D at m = n + 2.
struct JointState {
  EvolutionMode mode = EvolutionMode::paper;
  int max_photon = 0;
  Eigen::Matrix<cplx, 4, Eigen::Dynamic> amplitudes;
  std::vector<std::array<cplx, 4>> channels;  // paper mode only
  /// Set when the top photon level carries more than the field's epsilon of probability.
  bool truncation_warning = false;

  double norm_squared() const { return amplitudes.squaredNorm(); }
};

/// Paper mode with propagators built from `form` at (r, tau).
JointState evolve_paper_mode(const AtomPair& atoms, const CoherentField& field, double r, double tau,
                             PropagatorForm form = PropagatorForm::spectral);

/// Paper mode with caller-supplied block propagators U_0 .. U_{max_photon}.
JointState evolve_paper_mode(const AtomPair& atoms, const CoherentField& field,
                             std::span<const Eigen::Matrix4cd> blocks);

/// Exact evolution on the full truncated space, photon numbers 0..N_max+2.
///
/// The interaction Hamiltonian is assembled from sigma_pm (x) a operators and
/// diagonalized once; evolve() is then a pair of dense products.
class ExactEvolver {
 public:
  ExactEvolver(const CoherentField& field, double r);

  JointState evolve(const AtomPair& atoms, double tau) const;

  int max_photon() const noexcept { return max_photon_; }
  const Eigen::MatrixXd& hamiltonian() const noexcept { return hamiltonian_; }

 private:
  int max_photon_;
  double epsilon_;
  std::vector<cplx> q_;
  Eigen::MatrixXd hamiltonian_;
  Eigen::VectorXd energies_;
  Eigen::MatrixXd modes_;
};

JointState evolve_exact(const AtomPair& atoms, const CoherentField& field, double r, double tau);

/// |<a|b>|^2 / (<a|a><b|b>) over the amplitude grids.
double state_fidelity(const JointState& a, const JointState& b);

/// Two-atom state on (|ee>, |eg>, |ge>, |gg>).
struct TwoQubitDensity {
  Eigen::Matrix4cd rho;
};

/// Single-atom state on (|e>, |g>).
struct SingleQubitDensity {
  Eigen::Matrix2cd rho;
  int which = 1;
};

TwoQubitDensity pure_two_qubit(const AtomPair& atoms);

/// Trace over the field. Throws TruncationError when the trace misses 1 by more than 1e-10.
TwoQubitDensity reduce_two_qubit(const JointState& state);

/// Trace over the other atom.
SingleQubitDensity reduce_single(const TwoQubitDensity& rho12, int which);

struct DensityDiagnostics {
  double trace_error = 0.0;
  double hermiticity_error = 0.0;
  double min_eigenvalue = 0.0;
};

DensityDiagnostics diagnose(const Eigen::Ref<const Eigen::MatrixXcd>& rho);

/// Throws ValidationError unless |trace - 1| <= 1e-10, max |rho - rho^dagger| <= 1e-12
/// and every eigenvalue is >= -1e-10. Violations are reported, never clamped.
void validate_density(const TwoQubitDensity& rho12);
void validate_density(const SingleQubitDensity& rho);

}  // namespace tavis
