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

#include <vector>

#include "cqm/complex_matrix.hpp"
#include "cqm/states.hpp"

namespace cqm {

/// Two non-interacting parts of equal dimension with unitarily equivalent
/// Hamiltonians H_S = U H_R U^dag. The composite Hamiltonian is
/// H_C = H_R x 1 + 1 x H_S on the product basis (i, alpha) -> i*n + alpha.
class CompositeSystem {
 public:
  /// Derives H_S = U H_R U^dag.
  static CompositeSystem from_receiver(HermitianObservable h_r, UnitaryMap u);

  /// Verifies max-abs |H_S - U H_R U^dag| < 1e-9; throws PropertyViolated
  /// ("unitary_equivalence") otherwise.
  static CompositeSystem from_parts(HermitianObservable h_r, HermitianObservable h_s,
                                    UnitaryMap u);

  int part_dim() const { return h_r_.dim(); }
  const HermitianObservable& h_r() const { return h_r_; }
  const HermitianObservable& h_s() const { return h_s_; }
  const UnitaryMap& u() const { return u_; }

  /// H_R x 1 + 1 x H_S (dimension n^2).
  ComplexMatrix composite_hamiltonian() const;

 private:
  CompositeSystem(HermitianObservable h_r, HermitianObservable h_s, UnitaryMap u)
      : h_r_(std::move(h_r)), h_s_(std::move(h_s)), u_(std::move(u)) {}
  HermitianObservable h_r_;
  HermitianObservable h_s_;
  UnitaryMap u_;
};

/// Receiver/sender states in the interaction-picture frame.
struct ReducedPair {
  DensityMatrix rho_r;
  DensityMatrix rho_s;

  ReducedPair(DensityMatrix r, DensityMatrix s);
  int dim() const { return rho_r.dim(); }
};

/// Permutation T of the two parts on the product basis:
/// T (|i> x |j>) = |j> x |i>. Hermitian, T^2 = 1.
HermitianObservable swap_operator(int n);

/// O_C = (U^dag x U) T. Verifies, each to 1e-10:
///   (a) O_C = O_C^dag and O_C = T (U x U^dag),
///   (b) O_C^2 = 1,
///   (c) [O_C, H_C] = 0,
/// and throws PropertyViolated naming the failing property.
HermitianObservable measured_observable(const CompositeSystem& sys);

/// Coupled reduced equations of motion in dimensionless time:
///   d rho_R / dt = U^dag rho_S U - rho_R,
///   d rho_S / dt = U rho_R U^dag - rho_S.
/// Both components are traceless and Hermitian.
std::pair<ComplexMatrix, ComplexMatrix> reduced_rhs(const CompositeSystem& sys,
                                                    const ReducedPair& pair);

/// Paired trajectory of the reduced dynamics with per-step functionals.
struct ReducedTrajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> receiver_states;
  std::vector<DensityMatrix> sender_states;
  std::vector<double> s_r;  // linear entropy of rho_R
  std::vector<double> s_s;  // linear entropy of rho_S
  std::vector<double> e_r;  // tr(rho_R H_R)
  std::vector<double> e_s;  // tr(rho_S H_S)

  double min_eigenvalue_seen = 0.0;
  double max_trace_drift = 0.0;

  std::size_t size() const { return times.size(); }
  ReducedPair final_pair() const { return {receiver_states.back(), sender_states.back()}; }
};

/// RK4 on the coupled pair; same step corrections and positivity guard as
/// the single-state integrator.
ReducedTrajectory evolve_reduced(const CompositeSystem& sys, const ReducedPair& pair0,
                                 double t_final, double dt);

/// Closed-form t -> infinity limit of the reduced dynamics:
///   rho_R(inf) = (rho_R(0) + U^dag rho_S(0) U) / 2,
///   rho_S(inf) = (rho_S(0) + U rho_R(0) U^dag) / 2.
ReducedPair asymptotic_states(const CompositeSystem& sys, const ReducedPair& pair0);

/// Exact reduced states at finite time, from integrating the linear pair:
///   rho_R(t) = rho_R(inf) + e^{-2t} (rho_R(0) - U^dag rho_S(0) U) / 2,
/// and symmetrically for S. Used for analytic-vs-numeric residuals.
ReducedPair reduced_states_at(const CompositeSystem& sys, const ReducedPair& pair0, double t);

enum class FrameDirection { to_W, from_W };

/// Interaction-picture transform rho_C = e^{-i H_C t} W_C e^{i H_C t};
/// to_W conjugates by e^{+i H_C t}, from_W by e^{-i H_C t}. Computed through
/// the spectral decomposition of H_C; the round trip is the identity to
/// solver tolerance.
DensityMatrix interaction_frame(const CompositeSystem& sys, const DensityMatrix& rho_c, double t,
                                FrameDirection direction);

}  // namespace cqm
