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

#pragma once

#include <string>
#include <vector>

#include "cqm/complex_matrix.hpp"
#include "cqm/states.hpp"

namespace cqm {

/// Markovian generator with one jump operator:
///   d rho / dt = -i [H, rho] + (gamma/2) ( [R rho, R^dag] + [R, rho R^dag] ).
/// hbar = 1 throughout.
struct LindbladGenerator {
  HermitianObservable hamiltonian;
  ComplexMatrix jump;  // R
  double rate;         // gamma >= 0, inverse time

  LindbladGenerator(HermitianObservable h, ComplexMatrix r, double gamma);
  int dim() const { return hamiltonian.dim(); }
};

/// Continuous non-selective measurement of a Hermitian observable:
///   d rho / dt = -(gamma/2) [O, [O, rho]].
struct MeasurementGenerator {
  HermitianObservable observable;
  double rate;

  MeasurementGenerator(HermitianObservable o, double gamma);
  int dim() const { return observable.dim(); }
};

/// Time-ordered state snapshots with the per-sample functionals the CSV
/// export and the diagnostics need. Times are dimensionless (units of
/// 1/gamma when the generator carries a rate).
struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> states;
  std::vector<double> purities;
  std::vector<double> linear_entropies;
  std::vector<double> von_neumann_entropies;
  std::vector<double> energies;  // tr(rho H); empty when no Hamiltonian is tracked

  // Worst deviations observed along the run.
  double min_eigenvalue_seen = 0.0;
  double max_trace_drift = 0.0;
  double max_herm_drift = 0.0;

  std::size_t size() const { return times.size(); }
  const DensityMatrix& final_state() const { return states.back(); }
};

// Raw right-hand sides on plain matrices (no state validation); the
// integrators call these on intermediate stages that are not density
// matrices.
ComplexMatrix lindblad_rhs_raw(const LindbladGenerator& gen, const ComplexMatrix& rho);
ComplexMatrix measurement_rhs_raw(const MeasurementGenerator& gen, const ComplexMatrix& rho);

/// -i[H, rho] + (gamma/2)([R rho, R^dag] + [R, rho R^dag]); traceless and
/// Hermitian up to rounding. Throws DimensionError on mismatched dims.
ComplexMatrix lindblad_rhs(const LindbladGenerator& gen, const DensityMatrix& rho);

/// -(gamma/2)[O, [O, rho]]; equals lindblad_rhs with H = 0 and R = R^dag = O.
ComplexMatrix measurement_rhs(const MeasurementGenerator& gen, const DensityMatrix& rho);

/// Fixed-step RK4 with per-step re-Hermitization and trace renormalization.
/// Snapshots are recorded every step. Throws StepRejected when the monitored
/// spectrum drops below tol::step_reject_eig.
Trajectory evolve(const LindbladGenerator& gen, const DensityMatrix& rho0, double t_final,
                  double dt);
Trajectory evolve(const MeasurementGenerator& gen, const DensityMatrix& rho0, double t_final,
                  double dt);

/// dS/dt of the linear entropy under the dissipator:
///   2 gamma tr(R^dag R rho^2 - rho R rho R^dag).
/// The Hamiltonian part of the motion contributes nothing to dS/dt, so this
/// is the full entropy rate along a Lindblad trajectory.
double entropy_rate(const LindbladGenerator& gen, const DensityMatrix& rho);

/// Both sides of the Cauchy-Bunyakovsky-Schwarz bound that underlies the
/// entropy monotonicity statement for [R, R^dag] = 0:
///   lhs = tr(R R^dag rho^2) tr(R^dag R rho^2), rhs = [tr(rho R rho R^dag)]^2.
struct CbsReport {
  double lhs;
  double rhs;
  bool holds;  // lhs >= rhs - 1e-12
};

/// Throws NotCommuting unless max |[R, R^dag]| < 1e-10.
CbsReport cbs_check(const ComplexMatrix& r, const DensityMatrix& rho);

/// Writes the normative trajectory CSV: header `t,purity,S_lin,S_vn`,
/// 12 significant digits, '.' decimal separator, '\n' line endings.
void write_trajectory_csv(const Trajectory& traj, const std::string& path);

}  // namespace cqm
