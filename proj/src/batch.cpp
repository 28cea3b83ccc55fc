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

#include "cqm/batch.hpp"

#include <cmath>
#include <exception>
#include <limits>
#include <optional>

#include "cqm/errors.hpp"
#include "cqm/integrate.hpp"

namespace cqm::batch {

namespace {

double purity_of(const ComplexMatrix& rho) {
  double s = 0.0;
  for (const auto& v : rho.data()) s += std::norm(v);
  return s;
}

template <typename Rhs>
EvolveSummary summarize(Rhs&& rhs, const DensityMatrix& rho0, double t_final, double dt) {
  std::optional<EvolveSummary> summary;
  double prev_entropy = 0.0;
  bool first = true;

  detail::integrate_rk4(rhs, rho0.matrix(), t_final, dt, [&](const detail::StepInfo& info) {
    const double entropy = 1.0 - purity_of(info.state);
    if (first) {
      summary = EvolveSummary{
          .final_state = DensityMatrix::unchecked(info.state),
          .initial_entropy = entropy,
          .final_entropy = entropy,
          .min_entropy_step = std::numeric_limits<double>::infinity(),
          .min_eigenvalue_seen = info.eigenvalues.front(),
          .max_trace_drift = 0.0,
          .max_herm_drift = 0.0,
      };
      first = false;
    } else {
      summary->min_entropy_step = std::min(summary->min_entropy_step, entropy - prev_entropy);
      summary->final_state = DensityMatrix::unchecked(info.state);
      summary->final_entropy = entropy;
      summary->min_eigenvalue_seen = std::min(summary->min_eigenvalue_seen,
                                              info.eigenvalues.front());
      summary->max_trace_drift = std::max(summary->max_trace_drift, info.trace_drift);
      summary->max_herm_drift = std::max(summary->max_herm_drift, info.herm_drift);
    }
    prev_entropy = entropy;
  });

  summary->final_state = DensityMatrix::validated(summary->final_state.matrix());
  return std::move(*summary);
}

// Maps `work` over [0, count) under the requested policy, collecting results
// and deferring any exception to the caller's thread.
template <typename Result, typename Work>
std::vector<Result> run_instances(std::size_t count, Policy policy, Work&& work) {
  std::vector<std::optional<Result>> slots(count);
  std::vector<std::exception_ptr> errors(count);

  if (policy == Policy::parallel && parallel_available()) {
    const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic)
    for (long long k = 0; k < n; ++k) {
      try {
        slots[static_cast<std::size_t>(k)] = work(static_cast<std::size_t>(k));
      } catch (...) {
        errors[static_cast<std::size_t>(k)] = std::current_exception();
      }
    }
  } else {
    for (std::size_t k = 0; k < count; ++k) {
      try {
        slots[k] = work(k);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  }

  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  std::vector<Result> results;
  results.reserve(count);
  for (auto& slot : slots) results.push_back(std::move(*slot));
  return results;
}

}  // namespace

bool parallel_available() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

EvolveSummary evolve_summary(const LindbladGenerator& gen, const DensityMatrix& rho0,
                             double t_final, double dt) {
  if (gen.dim() != rho0.dim()) throw DimensionError("evolve_summary: dimension mismatch");
  return summarize([&gen](const ComplexMatrix& m) { return lindblad_rhs_raw(gen, m); }, rho0,
                   t_final, dt);
}

EvolveSummary evolve_summary(const MeasurementGenerator& gen, const DensityMatrix& rho0,
                             double t_final, double dt) {
  if (gen.dim() != rho0.dim()) throw DimensionError("evolve_summary: dimension mismatch");
  return summarize([&gen](const ComplexMatrix& m) { return measurement_rhs_raw(gen, m); }, rho0,
                   t_final, dt);
}

std::vector<EvolveSummary> evolve_ensemble(std::span<const LindbladGenerator> gens,
                                           std::span<const DensityMatrix> rho0s, double t_final,
                                           double dt, Policy policy) {
  if (gens.size() != rho0s.size()) {
    throw DimensionError("evolve_ensemble: one generator per initial state required");
  }
  return run_instances<EvolveSummary>(gens.size(), policy, [&](std::size_t k) {
    return evolve_summary(gens[k], rho0s[k], t_final, dt);
  });
}

std::vector<EvolveSummary> evolve_ensemble(std::span<const MeasurementGenerator> gens,
                                           std::span<const DensityMatrix> rho0s, double t_final,
                                           double dt, Policy policy) {
  if (gens.size() != rho0s.size()) {
    throw DimensionError("evolve_ensemble: one generator per initial state required");
  }
  return run_instances<EvolveSummary>(gens.size(), policy, [&](std::size_t k) {
    return evolve_summary(gens[k], rho0s[k], t_final, dt);
  });
}

ReducedSummary evolve_reduced_summary(const CompositeSystem& sys, const ReducedPair& pair0,
                                      double t_final, double dt) {
  const ReducedTrajectory traj = evolve_reduced(sys, pair0, t_final, dt);
  const double e0 = traj.e_r.front() + traj.e_s.front();
  double drift = 0.0;
  for (std::size_t k = 0; k < traj.size(); ++k) {
    drift = std::max(drift, std::abs(traj.e_r[k] + traj.e_s[k] - e0));
  }
  return ReducedSummary{
      .final_pair = traj.final_pair(),
      .max_energy_drift = drift,
      .min_eigenvalue_seen = traj.min_eigenvalue_seen,
      .max_trace_drift = traj.max_trace_drift,
  };
}

std::vector<ReducedSummary> evolve_reduced_ensemble(std::span<const CompositeSystem> systems,
                                                    std::span<const ReducedPair> pairs,
                                                    double t_final, double dt, Policy policy) {
  if (systems.size() != pairs.size()) {
    throw DimensionError("evolve_reduced_ensemble: one system per initial pair required");
  }
  return run_instances<ReducedSummary>(systems.size(), policy, [&](std::size_t k) {
    return evolve_reduced_summary(systems[k], pairs[k], t_final, dt);
  });
}

}  // namespace cqm::batch
