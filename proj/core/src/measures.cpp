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

#include "tavis/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "tavis/errors.hpp"

namespace tavis {

namespace {

constexpr double kObjectiveTolerance = 1e-8;
constexpr double kOptimumTolerance = 1e-6;
constexpr int kMaxIterations = 5000;
constexpr int kMaxRestarts = 20;

using Angles = std::array<double, 3>;

// Z-Y-Z Euler chart covering SU(2).
Eigen::Matrix2cd su2(const Angles& x) {
  const auto rz = [](double a) {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(0, 0) = std::polar(1.0, -0.5 * a);
    m(1, 1) = std::polar(1.0, 0.5 * a);
    return m;
  };
  Eigen::Matrix2cd ry;
  const double c = std::cos(0.5 * x[1]), s = std::sin(0.5 * x[1]);
  ry << c, -s, s, c;
  return rz(x[0]) * ry * rz(x[2]);
}

struct Minimum {
  Angles at;
  double value;
};

// One Nelder-Mead descent from a fresh simplex around start.
template <class F>
Minimum nelder_mead_pass(F&& f, const Angles& start, double step) {
  std::array<Angles, 4> simplex;
  std::array<double, 4> value;
  simplex[0] = start;
  for (int i = 0; i < 3; ++i) {
    simplex[i + 1] = start;
    simplex[i + 1][i] += step;
  }
  for (int i = 0; i < 4; ++i) value[i] = f(simplex[i]);

  std::array<int, 4> order;
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return value[a] < value[b]; });
    const int best = order[0], worst = order[3], second = order[2];
    if (value[worst] - value[best] < kObjectiveTolerance) break;

    Angles centroid{};
    for (int k = 0; k < 3; ++k)
      for (int d = 0; d < 3; ++d) centroid[d] += simplex[order[k]][d] / 3.0;
    const auto along = [&](double t) {
      Angles p;
      for (int d = 0; d < 3; ++d) p[d] = centroid[d] + t * (simplex[worst][d] - centroid[d]);
      return p;
    };

    const Angles reflected = along(-1.0);
    const double f_reflected = f(reflected);
    if (f_reflected < value[best]) {
      const Angles expanded = along(-2.0);
      const double f_expanded = f(expanded);
      if (f_expanded < f_reflected) {
        simplex[worst] = expanded;
        value[worst] = f_expanded;
      } else {
        simplex[worst] = reflected;
        value[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected < value[second]) {
      simplex[worst] = reflected;
      value[worst] = f_reflected;
      continue;
    }
    const bool outside = f_reflected < value[worst];
    const Angles contracted = along(outside ? -0.5 : 0.5);
    const double f_contracted = f(contracted);
    if (f_contracted < (outside ? f_reflected : value[worst])) {
      simplex[worst] = contracted;
      value[worst] = f_contracted;
      continue;
    }
    for (int k = 1; k < 4; ++k) {
      const int v = order[k];
      for (int d = 0; d < 3; ++d) simplex[v][d] = simplex[best][d] + 0.5 * (simplex[v][d] - simplex[best][d]);
      value[v] = f(simplex[v]);
    }
  }
  const auto best = std::min_element(value.begin(), value.end()) - value.begin();
  return {simplex[static_cast<std::size_t>(best)], value[static_cast<std::size_t>(best)]};
}

// The Euler chart has flat directions (e.g. the last Z rotation when |phi> is a
// basis state) that can collapse a simplex early; restarting from the best
// vertex until a pass stops improving avoids that.
template <class F>
double nelder_mead(F&& f, const Angles& start, double step) {
  Minimum best = nelder_mead_pass(f, start, step);
  for (int restart = 0; restart < kMaxRestarts; ++restart) {
    const Minimum next = nelder_mead_pass(f, best.at, step);
    const bool improved = next.value < best.value - kObjectiveTolerance * 1e-3;
    if (next.value < best.value) best = next;
    if (!improved) break;
  }
  return best.value;
}

}  // namespace

Eigen::Matrix4cd partial_transpose(const TwoQubitDensity& rho12, int qubit) {
  if (qubit != 1 && qubit != 2) throw InvalidInput("qubit index must be 1 or 2");
  Eigen::Matrix4cd out;
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2)
      for (int j1 = 0; j1 < 2; ++j1)
        for (int j2 = 0; j2 < 2; ++j2) {
          const cplx v = rho12.rho(2 * i1 + i2, 2 * j1 + j2);
          if (qubit == 2)
            out(2 * i1 + j2, 2 * j1 + i2) = v;
          else
            out(2 * j1 + i2, 2 * i1 + j2) = v;
        }
  return out;
}

PptReport degree_of_entanglement(const TwoQubitDensity& rho12) {
  const Eigen::Matrix4cd pt = partial_transpose(rho12);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig(pt, Eigen::EigenvaluesOnly);
  PptReport report;
  double sum_abs = 0.0;
  for (int i = 0; i < 4; ++i) {
    report.eigenvalues[static_cast<std::size_t>(i)] = eig.eigenvalues()(i);
    sum_abs += std::abs(eig.eigenvalues()(i));
  }
  report.min_eigenvalue = report.eigenvalues[0];
  report.doe = sum_abs - 1.0;
  return report;
}

double impurity(const SingleQubitDensity& rho) { return 1.0 - (rho.rho * rho.rho).trace().real(); }

double impurity(const TwoQubitDensity& rho12) { return 1.0 - (rho12.rho * rho12.rho).trace().real(); }

double max_eigenvalue(const SingleQubitDensity& rho) {
  const double a = rho.rho(0, 0).real(), d = rho.rho(1, 1).real();
  const double off = std::abs(rho.rho(0, 1));
  return 0.5 * (a + d + std::sqrt((a - d) * (a - d) + 4.0 * off * off));
}

double local_fidelity_max(const SingleQubitDensity& rho, const Eigen::Vector2cd& phi) {
  if (std::abs(phi.squaredNorm() - 1.0) > 1e-12) throw InvalidInput("reference state |phi> must be normalized");

  const auto negative_fidelity = [&](const Angles& x) {
    const Eigen::Vector2cd rotated = su2(x).adjoint() * phi;
    return -(rotated.adjoint() * rho.rho * rotated)(0, 0).real();
  };

  static constexpr std::array<Angles, 8> kStarts{{{0.3, 0.7, 0.5},
                                                  {2.1, 0.7, 0.5},
                                                  {3.9, 0.7, 0.5},
                                                  {5.4, 0.7, 0.5},
                                                  {0.3, 2.3, 1.9},
                                                  {2.1, 2.3, 1.9},
                                                  {3.9, 2.3, 1.9},
                                                  {5.4, 2.3, 1.9}}};
  double best = -INFINITY;
  for (const auto& start : kStarts) best = std::max(best, -nelder_mead(negative_fidelity, start, 0.6));

  const double closed_form = max_eigenvalue(rho);
  if (best < closed_form - kOptimumTolerance) {
    std::ostringstream msg;
    msg << "SU(2) search reached " << best << " but lambda_max is " << closed_form;
    throw OptimizationError(msg.str());
  }
  return best;
}

double local_information(const SingleQubitDensity& rho, const Eigen::Vector2cd& phi) {
  const double f0 = local_fidelity_max(rho, phi);
  return (2.0 * f0 - 1.0) * (2.0 * f0 - 1.0);
}

InformationTotals nonlocal_information(double local_1, double local_2) {
  const double total = local_1 + local_2;
  return {total, 2.0 - total};
}

InfoReport information_report(const TwoQubitDensity& rho12, const Eigen::Vector2cd& phi1,
                              const Eigen::Vector2cd& phi2) {
  const SingleQubitDensity rho1 = reduce_single(rho12, 1);
  const SingleQubitDensity rho2 = reduce_single(rho12, 2);
  InfoReport out;
  out.xi1 = impurity(rho1);
  out.xi2 = impurity(rho2);
  out.xi12 = impurity(rho12);
  out.F0_1 = local_fidelity_max(rho1, phi1);
  out.F0_2 = local_fidelity_max(rho2, phi2);
  out.I_local_1 = (2.0 * out.F0_1 - 1.0) * (2.0 * out.F0_1 - 1.0);
  out.I_local_2 = (2.0 * out.F0_2 - 1.0) * (2.0 * out.F0_2 - 1.0);
  const InformationTotals totals = nonlocal_information(out.I_local_1, out.I_local_2);
  out.I_local_total = totals.total;
  out.I_nonlocal = totals.nonlocal;
  return out;
}

Eigen::Vector2cd reference_state(const AtomPair& atoms, int which) {
  const SingleQubitDensity marginal = reduce_single(pure_two_qubit(atoms), which);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> eig(marginal.rho);
  Eigen::Vector2cd v = eig.eigenvectors().col(1);
  return v / v.norm();
}

}  // namespace tavis
