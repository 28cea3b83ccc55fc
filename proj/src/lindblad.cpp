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

#include "cqm/lindblad.hpp"

#include <cmath>

#include "cqm/csv.hpp"
#include "cqm/errors.hpp"
#include "cqm/integrate.hpp"
#include "cqm/tolerances.hpp"

namespace cqm {

namespace {

void require_dim(int expected, int got, const char* what) {
  if (expected != got) {
    throw DimensionError(std::string(what) + ": expected dimension " + std::to_string(expected) +
                         ", got " + std::to_string(got));
  }
}

double vn_entropy_from_eigenvalues(const std::vector<double>& lambdas) {
  double s = 0.0;
  for (double l : lambdas) {
    if (l > 0.0) s -= l * std::log(l);
  }
  return s;
}

double purity_of(const ComplexMatrix& rho) {
  double s = 0.0;
  for (const auto& v : rho.data()) s += std::norm(v);
  return s;
}

// Shared trajectory recorder; optionally tracks tr(rho H).
template <typename Rhs>
Trajectory run_trajectory(Rhs&& rhs, const DensityMatrix& rho0, double t_final, double dt,
                          const ComplexMatrix* hamiltonian) {
  if (!(t_final > 0.0)) throw DimensionError("t_final must be positive");
  if (!(dt > 0.0) || dt > t_final) throw DimensionError("dt must satisfy 0 < dt <= t_final");
  Trajectory traj;
  const auto expected = static_cast<std::size_t>(t_final / dt) + 2;
  traj.times.reserve(expected);
  traj.states.reserve(expected);
  traj.purities.reserve(expected);
  traj.linear_entropies.reserve(expected);
  traj.von_neumann_entropies.reserve(expected);
  if (hamiltonian) traj.energies.reserve(expected);
  traj.min_eigenvalue_seen = 1.0;

  detail::integrate_rk4(
      rhs, rho0.matrix(), t_final, dt, [&](const detail::StepInfo& info) {
        traj.times.push_back(info.t);
        traj.states.push_back(DensityMatrix::unchecked(info.state));
        const double p = purity_of(info.state);
        traj.purities.push_back(p);
        traj.linear_entropies.push_back(1.0 - p);
        traj.von_neumann_entropies.push_back(vn_entropy_from_eigenvalues(info.eigenvalues));
        if (hamiltonian) {
          traj.energies.push_back(trace(info.state * *hamiltonian).real());
        }
        traj.min_eigenvalue_seen = std::min(traj.min_eigenvalue_seen, info.eigenvalues.front());
        traj.max_trace_drift = std::max(traj.max_trace_drift, info.trace_drift);
        traj.max_herm_drift = std::max(traj.max_herm_drift, info.herm_drift);
      });

  // The endpoint must satisfy the full set of state invariants.
  traj.states.back() = DensityMatrix::validated(traj.states.back().matrix());
  return traj;
}

}  // namespace

LindbladGenerator::LindbladGenerator(HermitianObservable h, ComplexMatrix r, double gamma)
    : hamiltonian(std::move(h)), jump(std::move(r)), rate(gamma) {
  if (!jump.is_square() || jump.rows() != hamiltonian.dim()) {
    throw DimensionError("jump operator must match the Hamiltonian dimension");
  }
  if (rate < 0.0) throw DimensionError("rate must be non-negative");
}

MeasurementGenerator::MeasurementGenerator(HermitianObservable o, double gamma)
    : observable(std::move(o)), rate(gamma) {
  if (rate < 0.0) throw DimensionError("rate must be non-negative");
}

ComplexMatrix lindblad_rhs_raw(const LindbladGenerator& gen, const ComplexMatrix& rho) {
  const ComplexMatrix& h = gen.hamiltonian.matrix();
  const ComplexMatrix& r = gen.jump;
  const ComplexMatrix r_dag = dagger(r);

  ComplexMatrix out = Complex(0.0, -1.0) * commutator(h, rho);
  // (gamma/2) ([R rho, R^dag] + [R, rho R^dag]) = gamma (R rho R^dag - (1/2){R^dag R, rho})
  const ComplexMatrix r_rho = r * rho;
  const ComplexMatrix rho_rdag = rho * r_dag;
  out += (0.5 * gen.rate) * (commutator(r_rho, r_dag) + commutator(r, rho_rdag));
  return out;
}

ComplexMatrix measurement_rhs_raw(const MeasurementGenerator& gen, const ComplexMatrix& rho) {
  const ComplexMatrix& o = gen.observable.matrix();
  return (-0.5 * gen.rate) * commutator(o, commutator(o, rho));
}

ComplexMatrix lindblad_rhs(const LindbladGenerator& gen, const DensityMatrix& rho) {
  require_dim(gen.dim(), rho.dim(), "lindblad_rhs");
  return lindblad_rhs_raw(gen, rho.matrix());
}

ComplexMatrix measurement_rhs(const MeasurementGenerator& gen, const DensityMatrix& rho) {
  require_dim(gen.dim(), rho.dim(), "measurement_rhs");
  return measurement_rhs_raw(gen, rho.matrix());
}

Trajectory evolve(const LindbladGenerator& gen, const DensityMatrix& rho0, double t_final,
                  double dt) {
  require_dim(gen.dim(), rho0.dim(), "evolve");
  const ComplexMatrix& h = gen.hamiltonian.matrix();
  return run_trajectory([&gen](const ComplexMatrix& m) { return lindblad_rhs_raw(gen, m); },
                        rho0, t_final, dt, &h);
}

Trajectory evolve(const MeasurementGenerator& gen, const DensityMatrix& rho0, double t_final,
                  double dt) {
  require_dim(gen.dim(), rho0.dim(), "evolve");
  return run_trajectory([&gen](const ComplexMatrix& m) { return measurement_rhs_raw(gen, m); },
                        rho0, t_final, dt, nullptr);
}

double entropy_rate(const LindbladGenerator& gen, const DensityMatrix& rho) {
  require_dim(gen.dim(), rho.dim(), "entropy_rate");
  const ComplexMatrix& r = gen.jump;
  const ComplexMatrix r_dag = dagger(r);
  const ComplexMatrix rho_sq = rho.matrix() * rho.matrix();
  const Complex term1 = trace(r_dag * r * rho_sq);
  const Complex term2 = trace(rho.matrix() * r * rho.matrix() * r_dag);
  return 2.0 * gen.rate * (term1 - term2).real();
}

CbsReport cbs_check(const ComplexMatrix& r, const DensityMatrix& rho) {
  if (!r.is_square() || r.rows() != rho.dim()) {
    throw DimensionError("cbs_check: operator and state dimensions differ");
  }
  const ComplexMatrix r_dag = dagger(r);
  const double comm_dev = max_abs(commutator(r, r_dag));
  if (comm_dev > 1e-10) throw NotCommuting(comm_dev);

  const ComplexMatrix rho_sq = rho.matrix() * rho.matrix();
  CbsReport report;
  report.lhs = (trace(r * r_dag * rho_sq) * trace(r_dag * r * rho_sq)).real();
  const double cross = trace(rho.matrix() * r * rho.matrix() * r_dag).real();
  report.rhs = cross * cross;
  report.holds = report.lhs >= report.rhs - 1e-12;
  return report;
}

void write_trajectory_csv(const Trajectory& traj, const std::string& path) {
  write_csv(path, {{"t", &traj.times},
                   {"purity", &traj.purities},
                   {"S_lin", &traj.linear_entropies},
                   {"S_vn", &traj.von_neumann_entropies}});
}

}  // namespace cqm
