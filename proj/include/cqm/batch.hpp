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

#include <span>
#include <vector>

#include "cqm/composite.hpp"
#include "cqm/lindblad.hpp"
#include "cqm/states.hpp"

// Ensemble kernels: many independent trajectories integrated at once. Each
// instance is pure and deterministic, so the OpenMP policy produces results
// bit-identical to the serial reference; the serial path is kept as that
// reference and the benchmark target compares the two.
namespace cqm::batch {

enum class Policy { serial, parallel };

/// True when the library was built with OpenMP; Policy::parallel silently
/// degrades to serial otherwise.
bool parallel_available();

/// Per-trajectory summary; holds everything the sweeps assert on without
/// storing snapshots.
struct EvolveSummary {
  DensityMatrix final_state;
  double initial_entropy;
  double final_entropy;
  double min_entropy_step;    // most negative S(t_{k+1}) - S(t_k) over the run
  double min_eigenvalue_seen;
  double max_trace_drift;
  double max_herm_drift;
};

/// Serial reference for one instance; the ensemble kernels run exactly this
/// per element.
EvolveSummary evolve_summary(const LindbladGenerator& gen, const DensityMatrix& rho0,
                             double t_final, double dt);
EvolveSummary evolve_summary(const MeasurementGenerator& gen, const DensityMatrix& rho0,
                             double t_final, double dt);

/// gens and rho0s must have equal lengths; instance k pairs gens[k] with
/// rho0s[k]. Exceptions raised inside instances are re-thrown (first index
/// wins) after the sweep completes.
std::vector<EvolveSummary> evolve_ensemble(std::span<const LindbladGenerator> gens,
                                           std::span<const DensityMatrix> rho0s, double t_final,
                                           double dt, Policy policy);
std::vector<EvolveSummary> evolve_ensemble(std::span<const MeasurementGenerator> gens,
                                           std::span<const DensityMatrix> rho0s, double t_final,
                                           double dt, Policy policy);

struct ReducedSummary {
  ReducedPair final_pair;
  double max_energy_drift;    // max |(E_R + E_S)(t) - (E_R + E_S)(0)|
  double min_eigenvalue_seen;
  double max_trace_drift;
};

ReducedSummary evolve_reduced_summary(const CompositeSystem& sys, const ReducedPair& pair0,
                                      double t_final, double dt);

std::vector<ReducedSummary> evolve_reduced_ensemble(std::span<const CompositeSystem> systems,
                                                    std::span<const ReducedPair> pairs,
                                                    double t_final, double dt, Policy policy);

}  // namespace cqm::batch
