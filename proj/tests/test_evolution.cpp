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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "tavis/errors.hpp"
#include "tavis/evolution.hpp"
#include "tavis/measures.hpp"
#include "tavis/propagator.hpp"

using namespace tavis;

namespace {

const CoherentField& field5() {
  static const CoherentField f = coherent_amplitudes(std::sqrt(5.0), 1e-12);
  return f;
}

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("paper mode at zero time leaves the ground state in the D channel") {
  const JointState s = evolve_paper_mode(ground_pair(), field5(), 0.8, 0.0);
  REQUIRE(s.channels.size() == field5().amplitudes().size());
  for (std::size_t n = 0; n < s.channels.size(); ++n) {
    CHECK(std::abs(s.channels[n][0]) < 1e-15);
    CHECK(std::abs(s.channels[n][1]) < 1e-15);
    CHECK(std::abs(s.channels[n][2]) < 1e-15);
    CHECK(std::abs(s.channels[n][3] - field5()[n]) < 1e-15);
  }
  // Channel n places D at photon number n + 2.
  CHECK(std::abs(s.amplitudes(block::gg, 2) - field5()[0]) < 1e-15);
  CHECK(std::abs(s.amplitudes(block::gg, 0)) == 0.0);
}

TEST_CASE("paper mode conserves the stored mass") {
  for (double tau : {0.0, 1.3, 9.0, 24.0})
    for (auto form : {PropagatorForm::spectral, PropagatorForm::analytic_corrected}) {
      const JointState s = evolve_paper_mode(excited_pair(), field5(), 0.37, tau, form);
      CHECK(s.norm_squared() == doctest::Approx(field5().stored_mass()).epsilon(1e-13));
      CHECK(std::abs(s.norm_squared() - 1.0) < 1e-11);
      CHECK_FALSE(s.truncation_warning);
    }
}

TEST_CASE("paper mode onset of entanglement for the ground state (r=0.8, nbar=5)") {
  const JointState s = evolve_paper_mode(ground_pair(), field5(), 0.8, 0.3);
  const double doe = degree_of_entanglement(reduce_two_qubit(s)).doe;
  CHECK(doe > 0.008);
  CHECK(doe < 0.011);
}

TEST_CASE("exact and paper mode coincide for the doubly excited start") {
  const CoherentField f10 = coherent_amplitudes(std::sqrt(10.0), 1e-12);
  for (const CoherentField* f : {&field5(), &f10})
    for (double r : {0.1, 0.8}) {
      const ExactEvolver exact(*f, r);
      for (double tau : {0.0, 0.9, 6.1, 19.5}) {
        const JointState p = evolve_paper_mode(excited_pair(), *f, r, tau);
        const JointState e = exact.evolve(excited_pair(), tau);
        CHECK(state_fidelity(p, e) >= 1.0 - 1e-10);
      }
    }
}

TEST_CASE("paper mode differs from the true product start for |gg>") {
  // Paper mode weights the |gg> channel of block n by q_n instead of q_{n+2}.
  const JointState p = evolve_paper_mode(ground_pair(), field5(), 0.8, 2.0);
  const JointState e = evolve_exact(ground_pair(), field5(), 0.8, 2.0);
  CHECK(state_fidelity(p, e) < 0.99);
}

TEST_CASE("exact mode with atom 2 uncoupled keeps atom 2 frozen") {
  std::mt19937_64 rng(3);
  const ExactEvolver exact(field5(), 0.0);
  for (int trial = 0; trial < 5; ++trial) {
    const Eigen::Vector2cd a = oracle::random_qubit(rng), b = oracle::random_qubit(rng);
    const AtomPair atoms = product_preparation(a(0), a(1), b(0), b(1));
    const SingleQubitDensity initial = reduce_single(pure_two_qubit(atoms), 2);
    for (double tau : {0.5, 3.0, 11.0, 20.0}) {
      const TwoQubitDensity rho = reduce_two_qubit(exact.evolve(atoms, tau));
      CHECK(max_abs(reduce_single(rho, 2).rho - initial.rho) < 1e-10);
      CHECK(std::abs(degree_of_entanglement(rho).doe) < 1e-8);
    }
  }
}

TEST_CASE("vacuum and ground state do not evolve") {
  const CoherentField vacuum = coherent_amplitudes(0.0, 1e-12);
  const JointState s0 = evolve_exact(ground_pair(), vacuum, 0.7, 0.0);
  for (double tau : {1.0, 5.0, 17.0}) {
    const JointState s = evolve_exact(ground_pair(), vacuum, 0.7, tau);
    CHECK(max_abs(s.amplitudes - s0.amplitudes) < 1e-12);
  }
}

TEST_CASE("exact Hamiltonian contains the boundary sectors") {
  // |eg,0> and |ge,0> both couple to |gg,1>, with strengths 1 and r.
  const ExactEvolver exact(field5(), 0.4);
  const int levels = exact.max_photon() + 3;
  const auto idx = [levels](int label, int m) { return label * levels + m; };
  CHECK(exact.hamiltonian()(idx(block::gg, 1), idx(block::eg, 0)) == doctest::Approx(1.0));
  CHECK(exact.hamiltonian()(idx(block::gg, 1), idx(block::ge, 0)) == doctest::Approx(0.4));
  CHECK(exact.hamiltonian()(idx(block::gg, 0), idx(block::gg, 0)) == 0.0);
  CHECK((exact.hamiltonian() - exact.hamiltonian().transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("single-excitation sector: vacuum field, one atom excited") {
  // |eg,0> <-> |gg,1> <-> |ge,0>: the bright state (|eg> + r|ge>)/sqrt(1+r^2) oscillates
  // at sqrt(1+r^2); starting in |eg,0> the |eg,0> amplitude is (r^2 + cos(w t))/(1+r^2).
  const CoherentField vacuum = coherent_amplitudes(0.0, 1e-12);
  const double r = 0.6, w = std::sqrt(1.0 + r * r);
  const AtomPair eg = product_preparation(1.0, 0.0, 0.0, 1.0);
  for (double tau : {0.3, 2.2, 7.9}) {
    const JointState s = evolve_exact(eg, vacuum, r, tau);
    const double expected = (r * r + std::cos(w * tau)) / (1.0 + r * r);
    CHECK(std::abs(s.amplitudes(block::eg, 0) - cplx{expected, 0.0}) < 1e-12);
  }
}

TEST_CASE("reduced two-qubit states at zero time") {
  const TwoQubitDensity g = reduce_two_qubit(evolve_paper_mode(ground_pair(), field5(), 0.3, 0.0));
  Eigen::Matrix4cd expected = Eigen::Matrix4cd::Zero();
  expected(3, 3) = 1.0;
  CHECK(max_abs(g.rho - expected) < 1e-12);

  // The true product start is pure at tau = 0.
  const AtomPair third = partial_entangled_preparation(std::numbers::pi / 3.0);
  const TwoQubitDensity e = reduce_two_qubit(evolve_exact(third, field5(), 0.3, 0.0));
  CHECK(e.rho(0, 0).real() == doctest::Approx(0.25).epsilon(1e-11));
  CHECK(e.rho(3, 3).real() == doctest::Approx(0.75).epsilon(1e-11));
  CHECK(e.rho(0, 3).real() == doctest::Approx(std::sqrt(3.0) / 4.0).epsilon(1e-11));
  CHECK(impurity(e) == doctest::Approx(0.0).epsilon(1e-11).scale(1.0));
}

TEST_CASE("paper-mode partially entangled start is dephased by the photon offset") {
  // rho_14 picks up sum_n q_n q_{n+2} because |gg> sits two photons above |ee>.
  const AtomPair third = partial_entangled_preparation(std::numbers::pi / 3.0);
  const TwoQubitDensity p = reduce_two_qubit(evolve_paper_mode(third, field5(), 0.3, 0.0));
  const double kappa = oracle::shifted_overlap(5.0);
  CHECK(p.rho(0, 3).real() == doctest::Approx(std::sqrt(3.0) / 4.0 * kappa).epsilon(1e-12));
  CHECK(degree_of_entanglement(p).doe == doctest::Approx(std::sqrt(3.0) / 2.0 * kappa).epsilon(1e-11));
  CHECK(degree_of_entanglement(p).doe == doctest::Approx(0.7714).epsilon(1e-4));
}

TEST_CASE("reduce_single") {
  Eigen::Matrix4cd gg = Eigen::Matrix4cd::Zero();
  gg(3, 3) = 1.0;
  const SingleQubitDensity r1 = reduce_single({gg}, 1);
  CHECK(r1.rho(1, 1).real() == 1.0);
  CHECK(r1.rho(0, 0).real() == 0.0);

  const TwoQubitDensity bell = pure_two_qubit(partial_entangled_preparation(std::numbers::pi / 4.0));
  for (int which : {1, 2})
    CHECK(max_abs(reduce_single(bell, which).rho - 0.5 * Eigen::Matrix2cd::Identity()) < 1e-15);

  std::mt19937_64 rng(5);
  const Eigen::Matrix2cd a = oracle::random_mixed_qubit(rng), b = oracle::random_mixed_qubit(rng);
  Eigen::Matrix4cd product;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) product(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  CHECK(max_abs(reduce_single({product}, 1).rho - a) < 1e-14);
  CHECK(max_abs(reduce_single({product}, 2).rho - b) < 1e-14);
  CHECK_THROWS_AS(reduce_single({product}, 3), InvalidInput);
}

TEST_CASE("reduced states stay valid over random configurations") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> pick_r(0.0, 1.0), pick_tau(0.0, 25.0), pick_nbar(0.0, 12.0);
  for (int trial = 0; trial < 30; ++trial) {
    const CoherentField f = coherent_amplitudes(std::sqrt(pick_nbar(rng)), 1e-12);
    const Eigen::Vector2cd a = oracle::random_qubit(rng), b = oracle::random_qubit(rng);
    const AtomPair atoms = trial % 3 == 0 ? partial_entangled_preparation(pick_tau(rng))
                                          : product_preparation(a(0), a(1), b(0), b(1));
    const double r = pick_r(rng), tau = pick_tau(rng);
    for (const JointState& s : {evolve_paper_mode(atoms, f, r, tau), evolve_exact(atoms, f, r, tau)}) {
      const TwoQubitDensity rho = reduce_two_qubit(s);
      CHECK(std::abs(rho.rho.trace().real() - 1.0) < 1e-10);
      CHECK_NOTHROW(validate_density(rho));
      for (int which : {1, 2}) {
        const SingleQubitDensity q = reduce_single(rho, which);
        CHECK_NOTHROW(validate_density(q));
        const double purity = (q.rho * q.rho).trace().real();
        CHECK(purity >= 0.5 - 1e-10);
        CHECK(purity <= 1.0 + 1e-10);
      }
    }
  }
}

TEST_CASE("norm deficits and invalid densities are reported") {
  JointState s = evolve_paper_mode(ground_pair(), field5(), 0.5, 1.0);
  s.amplitudes *= std::sqrt(0.99);
  CHECK_THROWS_AS(reduce_two_qubit(s), TruncationError);

  Eigen::Matrix4cd bad = Eigen::Matrix4cd::Zero();
  bad(0, 0) = 1.2;
  bad(1, 1) = -0.2;
  CHECK_THROWS_AS(validate_density(TwoQubitDensity{bad}), ValidationError);
  Eigen::Matrix4cd skew = 0.25 * Eigen::Matrix4cd::Identity();
  skew(0, 1) = 0.1;
  CHECK_THROWS_AS(validate_density(TwoQubitDensity{skew}), ValidationError);
  CHECK(diagnose(bad).min_eigenvalue == doctest::Approx(-0.2));
}

TEST_CASE("evolution inputs are validated") {
  CHECK_THROWS_AS(evolve_paper_mode(ground_pair(), field5(), -1.0, 1.0), InvalidInput);
  CHECK_THROWS_AS(evolve_paper_mode(ground_pair(), field5(), 0.5, -1.0), InvalidInput);
  CHECK_THROWS_AS(evolve_exact(ground_pair(), field5(), 0.5, NAN), InvalidInput);
}
