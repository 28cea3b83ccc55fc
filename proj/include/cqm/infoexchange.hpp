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

#include <optional>
#include <utility>

#include "cqm/composite.hpp"
#include "cqm/states.hpp"

namespace cqm {

enum class Regime { unconstrained, isoenergetic };

/// Information transferred to the receiver over the whole measurement,
/// in linear-entropy units, as a function of both initial states:
///   -(3/4) tr(rho_R^2) + (1/4) tr(rho_S^2) + (1/2) tr(rho_R U^dag rho_S U).
/// Equals tr(rho_R(inf)^2) - tr(rho_R(0)^2) with rho_R(inf) from
/// asymptotic_states.
double info_gain(const CompositeSystem& sys, const ReducedPair& pair0);

/// Receiver state maximizing info_gain for a fixed sender, under tr = 1:
///   (1/3) U^dag rho_S U + (2 / (3 N)) 1.
/// A convex mix of two states, so always a valid density matrix.
DensityMatrix optimal_receiver_state(const CompositeSystem& sys, const DensityMatrix& rho_s0);

/// Information gained with the optimal receiver: (1/3)[tr(rho_S^2) - 1/N].
double max_info(const CompositeSystem& sys, const DensityMatrix& rho_s0);

/// Sender entropy increase with the optimal receiver: (5/9)[tr(rho_S^2) - 1/N].
double sender_entropy_increment(const CompositeSystem& sys, const DensityMatrix& rho_s0);

/// Mean-energy relaxation under the reduced dynamics:
///   E_R(t) = Ebar + (E_R(0) - Ebar) e^{-2t}, symmetrically for S,
/// with Ebar the conserved mean. Returns (E_R(t), E_S(t)).
std::pair<double, double> energy_flow(double e_r0, double e_s0, double t);

/// Shifts H by -(tr H / N) 1 so that tr(H) = 0; returns the shifted
/// observable and the subtracted multiple of the identity.
std::pair<HermitianObservable, double> traceless_shift(const HermitianObservable& h);

/// Receiver state maximizing info_gain under the additional constraint
/// tr(rho_R H_R) = tr(rho_S H_S) (no net energy flow):
///   (1/3) U^dag rho_S U + (2/(3N)) 1 + (2/3) (tr(rho_S H_S)/tr(H_R^2)) H_R.
/// Requires tr(H_R) = 0 within 1e-10 (NotTraceless otherwise). Throws
/// NotPositive when the energy term pushes the optimum out of the positive
/// cone; the regime is infeasible for that sender.
DensityMatrix isoenergetic_optimal_state(const CompositeSystem& sys,
                                         const DensityMatrix& rho_s0);

/// (1/3)[tr(rho_S^2) - 1/N - (tr(rho_S H_S))^2 / tr(H_R^2)].
double isoenergetic_max_info(const CompositeSystem& sys, const DensityMatrix& rho_s0);

/// (5/9)[tr(rho_S^2) - 1/N - (tr(rho_S H_S))^2 / tr(H_R^2)].
double isoenergetic_entropy_increment(const CompositeSystem& sys, const DensityMatrix& rho_s0);

/// Bundle of the optimal-regime quantities for one sender state.
struct ExchangeReport {
  Regime regime;
  int n;
  double delta_i;                   // information gained by the receiver
  double delta_s;                   // entropy increment of the sender
  std::optional<double> eta;        // delta_i / delta_s; absent when delta_s <= 1e-12
  DensityMatrix optimal_rho_r0;
  double purity_s0;
  double energy_s0;                 // tr(rho_S H_S) after any traceless shift
  double hamiltonian_shift = 0.0;   // identity multiple removed from H (isoenergetic)

  // von Neumann entropies for reference; the contract quantities above are
  // all in linear-entropy units.
  double vn_sender_initial = 0.0;
  double vn_sender_final = 0.0;
  double vn_receiver_initial = 0.0;
  double vn_receiver_final = 0.0;
};

/// Assembles the regime's optimal receiver state and the closed-form
/// delta_i / delta_s / eta. In the isoenergetic regime a non-traceless H_R
/// is shifted internally and the shift recorded. Errors from the constituent
/// operations (NotPositive for an infeasible isoenergetic sender) propagate.
ExchangeReport exchange_report(const CompositeSystem& sys, const DensityMatrix& rho_s0,
                               Regime regime);

}  // namespace cqm
