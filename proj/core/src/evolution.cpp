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

#include "tavis/evolution.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "tavis/errors.hpp"
#include "tavis/propagator.hpp"

namespace tavis {

namespace {

constexpr double kTraceTolerance = 1e-10;
constexpr double kHermiticityTolerance = 1e-12;
constexpr double kPositivityTolerance = 1e-10;

void check_time(double r, double tau) {
  if (!(std::isfinite(r) && r >= 0.0)) throw InvalidInput("coupling ratio r must be finite and >= 0");
  if (!(std::isfinite(tau) && tau >= 0.0)) throw InvalidInput("scaled time must be finite and >= 0");
}

// Atomic label bits: high bit is atom 1, low bit atom 2; 0 = excited, 1 = ground.
constexpr int atom_bit(int atom) { return atom == 1 ? 2 : 1; }

bool top_level_overflows(const JointState& s, double epsilon) {
  const auto top = s.amplitudes.col(s.amplitudes.cols() - 1);
  return top.squaredNorm() > epsilon;
}

}  // namespace

JointState evolve_paper_mode(const AtomPair& atoms, const CoherentField& field,
                             std::span<const Eigen::Matrix4cd> blocks) {
  const int n_max = field.max_photon();
  if (blocks.size() != static_cast<std::size_t>(n_max) + 1)
    throw InvalidInput("expected one block propagator per stored photon number");

  Eigen::Vector4cd joint;
  for (int i = 0; i < 4; ++i) joint(i) = atoms[static_cast<std::size_t>(i)];

  JointState s;
  s.mode = EvolutionMode::paper;
  s.max_photon = n_max;
  s.amplitudes = Eigen::Matrix<cplx, 4, Eigen::Dynamic>::Zero(4, n_max + 3);
  s.channels.resize(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    const Eigen::Vector4cd c = field[static_cast<std::size_t>(n)] * (blocks[static_cast<std::size_t>(n)] * joint);
    s.channels[static_cast<std::size_t>(n)] = {c(0), c(1), c(2), c(3)};
    s.amplitudes(block::ee, n) += c(block::ee);
    s.amplitudes(block::eg, n + 1) += c(block::eg);
    s.amplitudes(block::ge, n + 1) += c(block::ge);
    s.amplitudes(block::gg, n + 2) += c(block::gg);
  }
  s.truncation_warning = top_level_overflows(s, field.epsilon());
  return s;
}

JointState evolve_paper_mode(const AtomPair& atoms, const CoherentField& field, double r, double tau,
                             PropagatorForm form) {
  check_time(r, tau);
  std::vector<Eigen::Matrix4cd> blocks;
  blocks.reserve(static_cast<std::size_t>(field.max_photon()) + 1);
  for (int n = 0; n <= field.max_photon(); ++n) blocks.push_back(make_propagator(n, r, tau, form).U);
  return evolve_paper_mode(atoms, field, blocks);
}

ExactEvolver::ExactEvolver(const CoherentField& field, double r)
    : max_photon_(field.max_photon()), epsilon_(field.epsilon()), q_(field.amplitudes()) {
  if (!(std::isfinite(r) && r >= 0.0)) throw InvalidInput("coupling ratio r must be finite and >= 0");
  const int levels = max_photon_ + 3;
  const int dim = 4 * levels;
  const auto index = [levels](int label, int m) { return label * levels + m; };
  const double coupling[2] = {1.0, r};

  // lambda_k (sigma_-^(k) a^dagger + h.c.): atom k drops e -> g, one photon is created.
  hamiltonian_ = Eigen::MatrixXd::Zero(dim, dim);
  for (int label = 0; label < 4; ++label) {
    for (int atom = 1; atom <= 2; ++atom) {
      const int bit = atom_bit(atom);
      if (label & bit) continue;
      for (int m = 0; m + 1 < levels; ++m) {
        const double element = coupling[atom - 1] * std::sqrt(m + 1.0);
        const int from = index(label, m);
        const int to = index(label | bit, m + 1);
        hamiltonian_(to, from) += element;
        hamiltonian_(from, to) += element;
      }
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(hamiltonian_);
  if (eig.info() != Eigen::Success) throw NumericalError("full-space eigendecomposition failed");
  energies_ = eig.eigenvalues();
  modes_ = eig.eigenvectors();
}

JointState ExactEvolver::evolve(const AtomPair& atoms, double tau) const {
  if (!(std::isfinite(tau) && tau >= 0.0)) throw InvalidInput("scaled time must be finite and >= 0");
  const int levels = max_photon_ + 3;
  const int dim = 4 * levels;

  // Product start: sum_m q_m |psi_12> |m>.
  Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(dim);
  for (int label = 0; label < 4; ++label)
    for (int m = 0; m <= max_photon_; ++m)
      psi0(label * levels + m) = atoms[static_cast<std::size_t>(label)] * q_[static_cast<std::size_t>(m)];

  Eigen::VectorXcd coeffs = modes_.transpose().cast<cplx>() * psi0;
  for (int k = 0; k < dim; ++k) coeffs(k) *= std::polar(1.0, -energies_(k) * tau);
  const Eigen::VectorXcd psi = modes_.cast<cplx>() * coeffs;

  JointState s;
  s.mode = EvolutionMode::exact;
  s.max_photon = max_photon_;
  s.amplitudes.resize(4, levels);
  for (int label = 0; label < 4; ++label)
    for (int m = 0; m < levels; ++m) s.amplitudes(label, m) = psi(label * levels + m);
  s.truncation_warning = top_level_overflows(s, epsilon_);
  return s;
}

JointState evolve_exact(const AtomPair& atoms, const CoherentField& field, double r, double tau) {
  check_time(r, tau);
  return ExactEvolver(field, r).evolve(atoms, tau);
}

double state_fidelity(const JointState& a, const JointState& b) {
  if (a.amplitudes.cols() != b.amplitudes.cols())
    throw InvalidInput("states live on different truncations");
  const cplx overlap = (a.amplitudes.conjugate().cwiseProduct(b.amplitudes)).sum();
  return std::norm(overlap) / (a.norm_squared() * b.norm_squared());
}

TwoQubitDensity pure_two_qubit(const AtomPair& atoms) {
  Eigen::Vector4cd v;
  for (int i = 0; i < 4; ++i) v(i) = atoms[static_cast<std::size_t>(i)];
  return {v * v.adjoint()};
}

TwoQubitDensity reduce_two_qubit(const JointState& state) {
  TwoQubitDensity out{state.amplitudes * state.amplitudes.adjoint()};
  const double trace = out.rho.trace().real();
  if (std::abs(trace - 1.0) > kTraceTolerance) {
    std::ostringstream msg;
    msg << "reduced state has trace " << trace << " (norm deficit beyond " << kTraceTolerance
        << "; raise the truncation level)";
    throw TruncationError(msg.str());
  }
  return out;
}

SingleQubitDensity reduce_single(const TwoQubitDensity& rho12, int which) {
  if (which != 1 && which != 2) throw InvalidInput("qubit index must be 1 or 2");
  SingleQubitDensity out;
  out.which = which;
  out.rho.setZero();
  // index = 2 * i1 + i2
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        out.rho(i, j) += which == 1 ? rho12.rho(2 * i + k, 2 * j + k) : rho12.rho(2 * k + i, 2 * k + j);
  return out;
}

DensityDiagnostics diagnose(const Eigen::Ref<const Eigen::MatrixXcd>& rho) {
  DensityDiagnostics d;
  d.trace_error = std::abs(rho.trace() - cplx{1.0, 0.0});
  d.hermiticity_error = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  const Eigen::MatrixXcd hermitian = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(hermitian, Eigen::EigenvaluesOnly);
  d.min_eigenvalue = eig.eigenvalues().minCoeff();
  return d;
}

namespace {

void validate(const Eigen::Ref<const Eigen::MatrixXcd>& rho, const char* what) {
  const DensityDiagnostics d = diagnose(rho);
  std::ostringstream msg;
  msg.precision(3);
  if (d.trace_error > kTraceTolerance) msg << " trace error " << d.trace_error << ';';
  if (d.hermiticity_error > kHermiticityTolerance) msg << " hermiticity error " << d.hermiticity_error << ';';
  if (d.min_eigenvalue < -kPositivityTolerance) msg << " negative eigenvalue " << d.min_eigenvalue << ';';
  if (!msg.str().empty()) throw ValidationError(std::string(what) + " invalid:" + msg.str());
}

}  // namespace

void validate_density(const TwoQubitDensity& rho12) { validate(rho12.rho, "two-qubit density"); }

void validate_density(const SingleQubitDensity& rho) {
  validate(rho.rho, rho.which == 1 ? "qubit-1 density" : "qubit-2 density");
}

}  // namespace tavis
