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

#include <cmath>
#include <utility>
#include <vector>

#include "cqm/complex_matrix.hpp"
#include "cqm/eigensolver.hpp"
#include "cqm/errors.hpp"
#include "cqm/tolerances.hpp"

namespace cqm::detail {

/// Per-step data handed to the observer of integrate_rk4. `state` is the
/// post-correction snapshot; `eigenvalues` its ascending spectrum (also used
/// for the positivity guard); the drift fields are the deviations measured
/// before re-Hermitization and trace renormalization.
struct StepInfo {
  double t;
  const ComplexMatrix& state;
  const std::vector<double>& eigenvalues;
  double trace_drift;
  double herm_drift;
};

/// Classical fixed-step RK4 on a matrix-valued ODE d(state)/dt = rhs(state).
/// After every step the state is re-Hermitized ((x + x^dag)/2) and its trace
/// renormalized to 1; positivity is monitored, not enforced, and a step whose
/// spectrum dips below tol::step_reject_eig raises StepRejected. The observer
/// is invoked for the initial state and after every step.
///
/// A trailing partial step is taken when t_final is not an integer multiple
/// of dt, so the recorded times always end exactly at t_final.
template <typename Rhs, typename OnStep>
void integrate_rk4(Rhs&& rhs, ComplexMatrix state, double t_final, double dt, OnStep&& on_step) {
  if (!(t_final > 0.0)) throw DimensionError("t_final must be positive");
  if (!(dt > 0.0) || dt > t_final) throw DimensionError("dt must satisfy 0 < dt <= t_final");

  auto emit = [&](double t, double trace_drift, double herm_drift) {
    const auto eig = hermitian_eigensystem(state);
    if (eig.values.front() < tol::step_reject_eig) {
      throw StepRejected(t, eig.values.front());
    }
    on_step(StepInfo{t, state, eig.values, trace_drift, herm_drift});
  };

  emit(0.0, 0.0, 0.0);

  const long long whole_steps = static_cast<long long>(std::floor(t_final / dt + 1e-9));
  const double remainder = t_final - static_cast<double>(whole_steps) * dt;
  const bool has_tail = remainder > 1e-12 * std::max(1.0, t_final);
  const long long total_steps = whole_steps + (has_tail ? 1 : 0);

  for (long long k = 0; k < total_steps; ++k) {
    const bool last = (k + 1 == total_steps);
    const double h = (k < whole_steps) ? dt : remainder;
    const double t_next = last ? t_final : static_cast<double>(k + 1) * dt;

    const ComplexMatrix k1 = rhs(state);
    const ComplexMatrix k2 = rhs(state + (0.5 * h) * k1);
    const ComplexMatrix k3 = rhs(state + (0.5 * h) * k2);
    const ComplexMatrix k4 = rhs(state + h * k3);
    state += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    const double herm_drift = hermiticity_deviation(state);
    state = hermitian_part(state);
    const double tr = trace(state).real();
    const double trace_drift = std::abs(tr - 1.0);
    state *= 1.0 / tr;

    emit(t_next, trace_drift, herm_drift);
  }
}

}  // namespace cqm::detail
