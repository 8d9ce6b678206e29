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

#include <Eigen/Dense>

#include "tavis/evolution.hpp"

namespace tavis {

/// Transpose on one qubit's indices: (i1 i2, j1 j2) -> (i1 j2, j1 i2) for qubit 2.
Eigen::Matrix4cd partial_transpose(const TwoQubitDensity& rho12, int qubit = 2);

/// Partial-transpose spectrum (ascending) and the degree of entanglement sum |eta_i| - 1.
struct PptReport {
  std::array<double, 4> eigenvalues{};
  double min_eigenvalue = 0.0;
  double doe = 0.0;
};

PptReport degree_of_entanglement(const TwoQubitDensity& rho12);

/// xi = 1 - tr(rho^2).
double impurity(const SingleQubitDensity& rho);
double impurity(const TwoQubitDensity& rho12);

/// Largest eigenvalue of a 2x2 density matrix.
double max_eigenvalue(const SingleQubitDensity& rho);

/// F0 = max over A in SU(2) of <phi| A rho A^dagger |phi>.
///
/// Found by Nelder-Mead over Z-Y-Z Euler angles from eight fixed starts, then
/// checked against the closed form lambda_max(rho). Throws OptimizationError if
/// the search falls short of lambda_max by more than 1e-6.
double local_fidelity_max(const SingleQubitDensity& rho, const Eigen::Vector2cd& phi);

/// (2 F0 - 1)^2
double local_information(const SingleQubitDensity& rho, const Eigen::Vector2cd& phi);

struct InformationTotals {
  double total = 0.0;
  double nonlocal = 0.0;
};

InformationTotals nonlocal_information(double local_1, double local_2);

/// Every information quantity for one two-atom state.
struct InfoReport {
  double xi1 = 0.0, xi2 = 0.0, xi12 = 0.0;
  double F0_1 = 0.0, F0_2 = 0.0;
  double I_local_1 = 0.0, I_local_2 = 0.0;
  double I_local_total = 0.0;
  double I_nonlocal = 0.0;
};

InfoReport information_report(const TwoQubitDensity& rho12, const Eigen::Vector2cd& phi1,
                              const Eigen::Vector2cd& phi2);

/// Reference state for the fidelity of atom `which`: the dominant eigenvector of
/// that atom's initial marginal (the atom's own state for product preparations).
Eigen::Vector2cd reference_state(const AtomPair& atoms, int which);

}  // namespace tavis
