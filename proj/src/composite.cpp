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

#include "cqm/composite.hpp"

#include <cmath>

#include "cqm/eigensolver.hpp"
#include "cqm/errors.hpp"
#include "cqm/tolerances.hpp"

namespace cqm {

namespace {

constexpr double kEquivalenceTol = 1e-9;
constexpr double kPropertyTol = 1e-10;

double purity_of(const ComplexMatrix& rho) {
  double s = 0.0;
  for (const auto& v : rho.data()) s += std::norm(v);
  return s;
}

}  // namespace

CompositeSystem CompositeSystem::from_receiver(HermitianObservable h_r, UnitaryMap u) {
  if (h_r.dim() != u.dim()) throw DimensionError("H_R and U dimensions differ");
  ComplexMatrix h_s = u.matrix() * h_r.matrix() * dagger(u.matrix());
  // U H U^dag is Hermitian up to rounding; symmetrize before validating.
  auto h_s_obs = HermitianObservable::validated(hermitian_part(h_s));
  return CompositeSystem(std::move(h_r), std::move(h_s_obs), std::move(u));
}

CompositeSystem CompositeSystem::from_parts(HermitianObservable h_r, HermitianObservable h_s,
                                            UnitaryMap u) {
  if (h_r.dim() != u.dim() || h_s.dim() != u.dim()) {
    throw DimensionError("H_R, H_S and U dimensions differ");
  }
  const double dev =
      max_abs_diff(h_s.matrix(), u.matrix() * h_r.matrix() * dagger(u.matrix()));
  if (dev > kEquivalenceTol) throw PropertyViolated("unitary_equivalence", dev);
  return CompositeSystem(std::move(h_r), std::move(h_s), std::move(u));
}

ComplexMatrix CompositeSystem::composite_hamiltonian() const {
  const ComplexMatrix id = ComplexMatrix::identity(part_dim());
  return tensor_product(h_r_.matrix(), id) + tensor_product(id, h_s_.matrix());
}

ReducedPair::ReducedPair(DensityMatrix r, DensityMatrix s)
    : rho_r(std::move(r)), rho_s(std::move(s)) {
  if (rho_r.dim() != rho_s.dim()) {
    throw DimensionError("reduced pair requires equal dimensions");
  }
}

HermitianObservable swap_operator(int n) {
  if (n < 1) throw DimensionError("swap operator requires n >= 1");
  ComplexMatrix t(n * n, n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      t(j * n + i, i * n + j) = 1.0;
    }
  }
  return HermitianObservable::validated(std::move(t));
}

HermitianObservable measured_observable(const CompositeSystem& sys) {
  const int n = sys.part_dim();
  const ComplexMatrix& u = sys.u().matrix();
  const ComplexMatrix u_dag = dagger(u);
  const ComplexMatrix t = swap_operator(n).matrix();

  const ComplexMatrix o = tensor_product(u_dag, u) * t;

  // (a) Hermiticity and the equivalent right-multiplied form.
  const double herm_dev = hermiticity_deviation(o);
  if (herm_dev > kPropertyTol) throw PropertyViolated("hermiticity", herm_dev);
  const double form_dev = max_abs_diff(o, t * tensor_product(u, u_dag));
  if (form_dev > kPropertyTol) throw PropertyViolated("swap_form", form_dev);

  // (b) Involution.
  const double invol_dev = max_abs_diff(o * o, ComplexMatrix::identity(n * n));
  if (invol_dev > kPropertyTol) throw PropertyViolated("involution", invol_dev);

  // (c) Commutation with the composite Hamiltonian.
  const double comm_dev = max_abs(commutator(o, sys.composite_hamiltonian()));
  if (comm_dev > kPropertyTol) throw PropertyViolated("energy_conservation", comm_dev);

  return HermitianObservable::validated(hermitian_part(o));
}

std::pair<ComplexMatrix, ComplexMatrix> reduced_rhs(const CompositeSystem& sys,
                                                    const ReducedPair& pair) {
  if (pair.dim() != sys.part_dim()) {
    throw DimensionError("reduced_rhs: state and system dimensions differ");
  }
  const ComplexMatrix& u = sys.u().matrix();
  const ComplexMatrix u_dag = dagger(u);
  ComplexMatrix d_r = u_dag * pair.rho_s.matrix() * u - pair.rho_r.matrix();
  ComplexMatrix d_s = u * pair.rho_r.matrix() * u_dag - pair.rho_s.matrix();
  return {std::move(d_r), std::move(d_s)};
}

ReducedTrajectory evolve_reduced(const CompositeSystem& sys, const ReducedPair& pair0,
                                 double t_final, double dt) {
  if (pair0.dim() != sys.part_dim()) {
    throw DimensionError("evolve_reduced: state and system dimensions differ");
  }
  if (!(t_final > 0.0)) throw DimensionError("t_final must be positive");
  if (!(dt > 0.0) || dt > t_final) throw DimensionError("dt must satisfy 0 < dt <= t_final");

  const ComplexMatrix& u = sys.u().matrix();
  const ComplexMatrix u_dag = dagger(u);
  const ComplexMatrix& h_r = sys.h_r().matrix();
  const ComplexMatrix& h_s = sys.h_s().matrix();

  auto rhs_r = [&](const ComplexMatrix& r, const ComplexMatrix& s) { return u_dag * s * u - r; };
  auto rhs_s = [&](const ComplexMatrix& r, const ComplexMatrix& s) { return u * r * u_dag - s; };

  ReducedTrajectory traj;
  traj.min_eigenvalue_seen = 1.0;

  ComplexMatrix r = pair0.rho_r.matrix();
  ComplexMatrix s = pair0.rho_s.matrix();

  auto record = [&](double t, double trace_drift) {
    const auto eig_r = hermitian_eigensystem(r);
    const auto eig_s = hermitian_eigensystem(s);
    const double min_eig = std::min(eig_r.values.front(), eig_s.values.front());
    if (min_eig < tol::step_reject_eig) throw StepRejected(t, min_eig);

    traj.times.push_back(t);
    traj.receiver_states.push_back(DensityMatrix::unchecked(r));
    traj.sender_states.push_back(DensityMatrix::unchecked(s));
    traj.s_r.push_back(1.0 - purity_of(r));
    traj.s_s.push_back(1.0 - purity_of(s));
    traj.e_r.push_back(trace(r * h_r).real());
    traj.e_s.push_back(trace(s * h_s).real());
    traj.min_eigenvalue_seen = std::min(traj.min_eigenvalue_seen, min_eig);
    traj.max_trace_drift = std::max(traj.max_trace_drift, trace_drift);
  };

  record(0.0, 0.0);

  const long long whole_steps = static_cast<long long>(std::floor(t_final / dt + 1e-9));
  const double remainder = t_final - static_cast<double>(whole_steps) * dt;
  const bool has_tail = remainder > 1e-12 * std::max(1.0, t_final);
  const long long total_steps = whole_steps + (has_tail ? 1 : 0);

  for (long long k = 0; k < total_steps; ++k) {
    const bool last = (k + 1 == total_steps);
    const double h = (k < whole_steps) ? dt : remainder;
    const double t_next = last ? t_final : static_cast<double>(k + 1) * dt;

    const ComplexMatrix k1r = rhs_r(r, s), k1s = rhs_s(r, s);
    const ComplexMatrix r2 = r + (0.5 * h) * k1r, s2 = s + (0.5 * h) * k1s;
    const ComplexMatrix k2r = rhs_r(r2, s2), k2s = rhs_s(r2, s2);
    const ComplexMatrix r3 = r + (0.5 * h) * k2r, s3 = s + (0.5 * h) * k2s;
    const ComplexMatrix k3r = rhs_r(r3, s3), k3s = rhs_s(r3, s3);
    const ComplexMatrix r4 = r + h * k3r, s4 = s + h * k3s;
    const ComplexMatrix k4r = rhs_r(r4, s4), k4s = rhs_s(r4, s4);

    r += (h / 6.0) * (k1r + 2.0 * k2r + 2.0 * k3r + k4r);
    s += (h / 6.0) * (k1s + 2.0 * k2s + 2.0 * k3s + k4s);

    r = hermitian_part(r);
    s = hermitian_part(s);
    const double tr_r = trace(r).real();
    const double tr_s = trace(s).real();
    const double drift = std::max(std::abs(tr_r - 1.0), std::abs(tr_s - 1.0));
    r *= 1.0 / tr_r;
    s *= 1.0 / tr_s;

    record(t_next, drift);
  }

  // Endpoints must satisfy the full invariants.
  traj.receiver_states.back() = DensityMatrix::validated(traj.receiver_states.back().matrix());
  traj.sender_states.back() = DensityMatrix::validated(traj.sender_states.back().matrix());
  return traj;
}

ReducedPair asymptotic_states(const CompositeSystem& sys, const ReducedPair& pair0) {
  if (pair0.dim() != sys.part_dim()) {
    throw DimensionError("asymptotic_states: state and system dimensions differ");
  }
  const ComplexMatrix& u = sys.u().matrix();
  const ComplexMatrix u_dag = dagger(u);
  ComplexMatrix r_inf = 0.5 * (pair0.rho_r.matrix() + u_dag * pair0.rho_s.matrix() * u);
  ComplexMatrix s_inf = 0.5 * (pair0.rho_s.matrix() + u * pair0.rho_r.matrix() * u_dag);
  return {DensityMatrix::validated(hermitian_part(r_inf)),
          DensityMatrix::validated(hermitian_part(s_inf))};
}

ReducedPair reduced_states_at(const CompositeSystem& sys, const ReducedPair& pair0, double t) {
  const ComplexMatrix& u = sys.u().matrix();
  const ComplexMatrix u_dag = dagger(u);
  const double decay = std::exp(-2.0 * t);
  const ComplexMatrix m = u_dag * pair0.rho_s.matrix() * u;      // sender seen from R
  const ComplexMatrix w = u * pair0.rho_r.matrix() * u_dag;      // receiver seen from S
  ComplexMatrix r_t = 0.5 * (pair0.rho_r.matrix() + m) + (0.5 * decay) * (pair0.rho_r.matrix() - m);
  ComplexMatrix s_t = 0.5 * (pair0.rho_s.matrix() + w) + (0.5 * decay) * (pair0.rho_s.matrix() - w);
  return {DensityMatrix::validated(hermitian_part(r_t)),
          DensityMatrix::validated(hermitian_part(s_t))};
}

DensityMatrix interaction_frame(const CompositeSystem& sys, const DensityMatrix& rho_c, double t,
                                FrameDirection direction) {
  const int n = sys.part_dim();
  if (rho_c.dim() != n * n) {
    throw DimensionError("interaction_frame: state must live on the composite space");
  }
  const double s = (direction == FrameDirection::to_W) ? t : -t;
  const ComplexMatrix phase = unitary_exp(sys.composite_hamiltonian(), s);
  ComplexMatrix out = phase * rho_c.matrix() * dagger(phase);
  return DensityMatrix::validated(hermitian_part(out));
}

}  // namespace cqm
