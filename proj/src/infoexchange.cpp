// Copyright 2026 The cqmsim Authors
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

#include "cqm/infoexchange.hpp"

#include <cmath>

#include "cqm/errors.hpp"
#include "cqm/tolerances.hpp"

namespace cqm {

namespace {

constexpr double kTracelessTol = 1e-10;
constexpr double kEtaFloor = 1e-12;

void require_sender_dim(const CompositeSystem& sys, const DensityMatrix& rho_s0) {
  if (rho_s0.dim() != sys.part_dim()) {
    throw DimensionError("sender state dimension differs from the system");
  }
}

// tr(rho_S^2) - 1/N, evaluated the same way by every caller so that ratios
// of the closed forms stay exact in floating point.
double purity_margin(const CompositeSystem& sys, const DensityMatrix& rho_s0) {
  return purity(rho_s0) - 1.0 / static_cast<double>(sys.part_dim());
}

// tr(rho_S H_S), real by Hermiticity of both factors.
double sender_energy(const CompositeSystem& sys, const DensityMatrix& rho_s0) {
  return trace(rho_s0.matrix() * sys.h_s().matrix()).real();
}

double h_r_norm_sq(const CompositeSystem& sys) {
  const ComplexMatrix& h = sys.h_r().matrix();
  return trace(h * h).real();
}

void require_traceless(const CompositeSystem& sys) {
  const double tr_h = trace(sys.h_r().matrix()).real();
  if (std::abs(tr_h) > kTracelessTol) throw NotTraceless(tr_h);
}

// tr(rho_S^2) - 1/N - (tr(rho_S H_S))^2 / tr(H_R^2). A zero Hamiltonian
// makes the energy constraint vacuous and the term drops.
double iso_margin(const CompositeSystem& sys, const DensityMatrix& rho_s0) {
  const double h2 = h_r_norm_sq(sys);
  const double base = purity_margin(sys, rho_s0);
  if (h2 <= 0.0) return base;
  const double e = sender_energy(sys, rho_s0);
  return base - e * e / h2;
}

}  // namespace

double info_gain(const CompositeSystem& sys, const ReducedPair& pair0) {
  if (pair0.dim() != sys.part_dim()) {
    throw DimensionError("info_gain: state and system dimensions differ");
  }
  const ComplexMatrix& u = sys.u().matrix();
  const ComplexMatrix m = dagger(u) * pair0.rho_s.matrix() * u;
  const double cross = trace(pair0.rho_r.matrix() * m).real();
  return -0.75 * purity(pair0.rho_r) + 0.25 * purity(pair0.rho_s) + 0.5 * cross;
}

DensityMatrix optimal_receiver_state(const CompositeSystem& sys, const DensityMatrix& rho_s0) {
  require_sender_dim(sys, rho_s0);
  const int n = sys.part_dim();
  const ComplexMatrix& u = sys.u().matrix();
  ComplexMatrix opt = (1.0 / 3.0) * (dagger(u) * rho_s0.matrix() * u);
  opt += (2.0 / (3.0 * n)) * ComplexMatrix::identity(n);
  return DensityMatrix::validated(hermitian_part(opt));
}

double max_info(const CompositeSystem& sys, const DensityMatrix& rho_s0) {
  require_sender_dim(sys, rho_s0);
  return purity_margin(sys, rho_s0) / 3.0;
}

double sender_entropy_increment(const CompositeSystem& sys, const DensityMatrix& rho_s0) {
  require_sender_dim(sys, rho_s0);
  return (5.0 / 9.0) * purity_margin(sys, rho_s0);
}

std::pair<double, double> energy_flow(double e_r0, double e_s0, double t) {
  if (t < 0.0) throw DimensionError("energy_flow requires t >= 0");
  const double mean = 0.5 * (e_r0 + e_s0);
  const double decay = std::exp(-2.0 * t);
  return {mean + (e_r0 - mean) * decay, mean + (e_s0 - mean) * decay};
}

std::pair<HermitianObservable, double> traceless_shift(const HermitianObservable& h) {
  const double shift = trace(h.matrix()).real() / h.dim();
  ComplexMatrix shifted = h.matrix() - shift * ComplexMatrix::identity(h.dim());
  return {HermitianObservable::validated(std::move(shifted)), shift};
}

DensityMatrix isoenergetic_optimal_state(const CompositeSystem& sys,
                                         const DensityMatrix& rho_s0) {
  require_sender_dim(sys, rho_s0);
  require_traceless(sys);
  const int n = sys.part_dim();
  const ComplexMatrix& u = sys.u().matrix();
  ComplexMatrix opt = (1.0 / 3.0) * (dagger(u) * rho_s0.matrix() * u);
  opt += (2.0 / (3.0 * n)) * ComplexMatrix::identity(n);
  const double h2 = h_r_norm_sq(sys);
  if (h2 > 0.0) {
    const double e = sender_energy(sys, rho_s0);
    opt += (2.0 / 3.0) * (e / h2) * sys.h_r().matrix();
  }
  // validated() raises NotPositive when the energy term leaves the cone;
  // that is the infeasibility signal for this regime.
  return DensityMatrix::validated(hermitian_part(opt));
}

double isoenergetic_max_info(const CompositeSystem& sys, const DensityMatrix& rho_s0) {
  require_sender_dim(sys, rho_s0);
  require_traceless(sys);
  return iso_margin(sys, rho_s0) / 3.0;
}

double isoenergetic_entropy_increment(const CompositeSystem& sys, const DensityMatrix& rho_s0) {
  require_sender_dim(sys, rho_s0);
  require_traceless(sys);
  return (5.0 / 9.0) * iso_margin(sys, rho_s0);
}

ExchangeReport exchange_report(const CompositeSystem& sys, const DensityMatrix& rho_s0,
                               Regime regime) {
  require_sender_dim(sys, rho_s0);

  const CompositeSystem* system = &sys;
  double shift = 0.0;
  std::optional<CompositeSystem> shifted;
  if (regime == Regime::isoenergetic &&
      std::abs(trace(sys.h_r().matrix()).real()) > kTracelessTol) {
    auto [h_shifted, c] = traceless_shift(sys.h_r());
    shift = c;
    shifted = CompositeSystem::from_receiver(std::move(h_shifted), sys.u());
    system = &*shifted;
  }

  DensityMatrix opt = (regime == Regime::unconstrained)
                          ? optimal_receiver_state(*system, rho_s0)
                          : isoenergetic_optimal_state(*system, rho_s0);
  const double margin = (regime == Regime::unconstrained) ? purity_margin(*system, rho_s0)
                                                          : iso_margin(*system, rho_s0);

  ExchangeReport report{
      .regime = regime,
      .n = system->part_dim(),
      .delta_i = margin / 3.0,
      .delta_s = (5.0 / 9.0) * margin,
      .eta = std::nullopt,
      .optimal_rho_r0 = opt,
      .purity_s0 = purity(rho_s0),
      .energy_s0 = sender_energy(*system, rho_s0),
      .hamiltonian_shift = shift,
  };
  if (report.delta_s > kEtaFloor) {
    report.eta = report.delta_i / report.delta_s;
  }

  const ReducedPair limits = asymptotic_states(*system, {opt, rho_s0});
  report.vn_sender_initial = von_neumann_entropy(rho_s0);
  report.vn_sender_final = von_neumann_entropy(limits.rho_s);
  report.vn_receiver_initial = von_neumann_entropy(opt);
  report.vn_receiver_final = von_neumann_entropy(limits.rho_r);
  return report;
}

}  // namespace cqm
