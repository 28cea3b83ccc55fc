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

#include "cqm/complex_matrix.hpp"
#include "cqm/states.hpp"

namespace cqm {

/// O_C = A_R x 1 + 1 x B_S. The parts may have different dimensions.
struct AdditiveObservable {
  HermitianObservable a_r;
  HermitianObservable b_s;
};

/// O_C = A_R x B_S.
struct MultiplicativeObservable {
  HermitianObservable a_r;
  HermitianObservable b_s;
};

/// Closed-form state of d rho / dt = -(1/2)[O, [O, rho]] at time t: a
/// Gaussian average of unitary conjugations, which in the eigenbasis of O
/// damps element (k, l) by exp(-(lambda_k - lambda_l)^2 t / 2). The t = 0
/// value is rho0 by continuity. Trace- and positivity-preserving.
DensityMatrix gaussian_solution(const HermitianObservable& o_c, const DensityMatrix& rho0,
                                double t);

/// Reduced state of part R under measurement of the additive observable:
/// element (i, j) of rho_R(0) in the A_R eigenbasis is damped by
/// exp(-(A_i - A_j)^2 t / 2). Holds for any composite initial state,
/// correlated or not; the reduction depends only on rho_R(0).
DensityMatrix additive_reduced_state(const AdditiveObservable& obs, const DensityMatrix& rho_r0,
                                     double t);

/// Composite state under measurement of the multiplicative observable: in
/// the joint eigenbasis |i>_R x |alpha>_S the element ((i,alpha),(j,beta))
/// is damped by exp(-(A_i B_alpha - A_j B_beta)^2 t / 2), consistent with
/// direct integration of the double-commutator equation. Input and output
/// are in the original (computational) basis.
DensityMatrix multiplicative_elements(const MultiplicativeObservable& obs,
                                      const DensityMatrix& rho_c0, double t);

/// dS_R/dt at time t along the multiplicative-measurement trajectory,
/// evaluated as the double sum over the joint eigenbasis:
///   sum_{i j alpha beta} (A_i - A_j)^2 B_beta^2
///       exp(-(B_alpha^2 + B_beta^2)(A_i - A_j)^2 t / 2)
///       <i alpha|rho_C(0)|j alpha> <j beta|rho_C(0)|i beta>.
double multiplicative_entropy_rate(const MultiplicativeObservable& obs,
                                   const DensityMatrix& rho_c0, double t);

/// Same rate for an uncorrelated initial state rho_R(0) x rho_S(0), in the
/// manifestly non-negative form
///   sum (A_i - A_j)^2 B_beta^2 exp(...) |rho^R_ij(0)|^2
///       rho^S_alpha_alpha(0) rho^S_beta_beta(0).
/// Agrees with multiplicative_entropy_rate on product inputs; kept separate
/// as the second route of that identity.
double multiplicative_entropy_rate_uncorrelated(const MultiplicativeObservable& obs,
                                                const DensityMatrix& rho_r0,
                                                const DensityMatrix& rho_s0, double t);

}  // namespace cqm
