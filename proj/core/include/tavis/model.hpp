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
#include <complex>
#include <string_view>
#include <vector>

namespace tavis {

using cplx = std::complex<double>;

enum class EvolutionMode { paper, exact };

enum class PropagatorForm { spectral, analytic_corrected, analytic_verbatim };

std::string_view to_string(EvolutionMode mode);
std::string_view to_string(PropagatorForm form);
EvolutionMode parse_evolution_mode(std::string_view text);
PropagatorForm parse_propagator_form(std::string_view text);

/// Parameters of one simulated system. Times are scaled, tau = lambda_1 * t, and
/// the Hamiltonian is measured in units of hbar * lambda_1.
struct SystemConfig {
  double r = 0.0;     ///< coupling ratio lambda_2 / lambda_1
  double nbar = 0.0;  ///< mean photon number of the coherent field
  std::vector<double> t_grid;
  EvolutionMode evolution_mode = EvolutionMode::paper;
  PropagatorForm propagator_form = PropagatorForm::spectral;
  double truncation_epsilon = 1e-12;

  /// Throws InvalidInput when an invariant is broken.
  void validate() const;
};

/// Two-atom initial state as joint amplitudes on (|ee>, |eg>, |ge>, |gg>).
class AtomPair {
 public:
  /// Arbitrary (possibly entangled) preparation; the vector must have unit norm.
  static AtomPair from_joint(const std::array<cplx, 4>& joint);

  const std::array<cplx, 4>& joint() const noexcept { return joint_; }
  cplx operator[](std::size_t i) const noexcept { return joint_[i]; }

 private:
  explicit AtomPair(const std::array<cplx, 4>& joint) : joint_(joint) {}
  std::array<cplx, 4> joint_;
};

AtomPair product_preparation(cplx a1, cplx b1, cplx a2, cplx b2);
AtomPair partial_entangled_preparation(double theta);
AtomPair ground_pair();
AtomPair excited_pair();

/// Truncated coherent-state amplitudes q_n, n = 0..max_photon().
class CoherentField {
 public:
  CoherentField(cplx alpha, double epsilon, std::vector<cplx> q);

  cplx alpha() const noexcept { return alpha_; }
  double nbar() const noexcept { return std::norm(alpha_); }
  double epsilon() const noexcept { return epsilon_; }
  int max_photon() const noexcept { return static_cast<int>(q_.size()) - 1; }
  const std::vector<cplx>& amplitudes() const noexcept { return q_; }
  cplx operator[](std::size_t n) const noexcept { return q_[n]; }
  /// Sum of |q_n|^2 over the stored range.
  double stored_mass() const noexcept { return mass_; }

 private:
  cplx alpha_;
  double epsilon_;
  std::vector<cplx> q_;
  double mass_;
};

/// Smallest N whose Poisson(nbar) tail mass beyond N is below epsilon, floored
/// at nbar + 10 sqrt(nbar) + 20 so the n+2 photon channel keeps headroom.
int truncation_level(double nbar, double epsilon);

CoherentField coherent_amplitudes(cplx alpha, double epsilon);

}  // namespace tavis
