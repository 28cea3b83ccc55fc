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

// Compares the serial reference against the OpenMP ensemble kernels on the
// two workloads the sweeps use: measurement trajectories and reduced-pair
// trajectories. Also cross-checks that both policies produce bit-identical
// results.

#include <chrono>
#include <cstdio>
#include <vector>

#include "cqm/batch.hpp"
#include "random_states.hpp"

using namespace cqm;
namespace ct = cqm::testing;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool identical(const DensityMatrix& a, const DensityMatrix& b) {
  return a.matrix().data() == b.matrix().data();
}

void bench_measurement(int instances, int dim, double t_final, double dt) {
  ct::Rng rng(2026);
  std::vector<MeasurementGenerator> gens;
  std::vector<DensityMatrix> states;
  for (int k = 0; k < instances; ++k) {
    gens.emplace_back(HermitianObservable::validated(ct::random_hermitian(dim, rng)), 1.0);
    states.push_back(ct::random_density(dim, rng));
  }

  auto start = std::chrono::steady_clock::now();
  const auto serial =
      batch::evolve_ensemble(gens, states, t_final, dt, batch::Policy::serial);
  const double t_serial = seconds_since(start);

  start = std::chrono::steady_clock::now();
  const auto parallel =
      batch::evolve_ensemble(gens, states, t_final, dt, batch::Policy::parallel);
  const double t_parallel = seconds_since(start);

  bool match = true;
  for (int k = 0; k < instances; ++k) {
    match = match && identical(serial[k].final_state, parallel[k].final_state);
  }
  std::printf("measurement  dim=%d n=%d t=%.1f  serial %.3fs  parallel %.3fs  speedup %.2fx  %s\n",
              dim, instances, t_final, t_serial, t_parallel, t_serial / t_parallel,
              match ? "identical" : "MISMATCH");
}

void bench_reduced(int instances, int dim, double t_final, double dt) {
  ct::Rng rng(4052);
  std::vector<CompositeSystem> systems;
  std::vector<ReducedPair> pairs;
  for (int k = 0; k < instances; ++k) {
    systems.push_back(ct::random_system(dim, rng));
    pairs.push_back({ct::random_density(dim, rng), ct::random_density(dim, rng)});
  }

  auto start = std::chrono::steady_clock::now();
  const auto serial =
      batch::evolve_reduced_ensemble(systems, pairs, t_final, dt, batch::Policy::serial);
  const double t_serial = seconds_since(start);

  start = std::chrono::steady_clock::now();
  const auto parallel =
      batch::evolve_reduced_ensemble(systems, pairs, t_final, dt, batch::Policy::parallel);
  const double t_parallel = seconds_since(start);

  bool match = true;
  for (int k = 0; k < instances; ++k) {
    match = match && identical(serial[k].final_pair.rho_r, parallel[k].final_pair.rho_r) &&
            identical(serial[k].final_pair.rho_s, parallel[k].final_pair.rho_s);
  }
  std::printf("reduced pair dim=%d n=%d t=%.1f  serial %.3fs  parallel %.3fs  speedup %.2fx  %s\n",
              dim, instances, t_final, t_serial, t_parallel, t_serial / t_parallel,
              match ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("OpenMP kernels available: %s\n", batch::parallel_available() ? "yes" : "no");
  bench_measurement(64, 2, 10.0, 1e-3);
  bench_measurement(64, 4, 10.0, 1e-3);
  bench_reduced(64, 2, 10.0, 1e-3);
  bench_reduced(32, 3, 10.0, 1e-3);
  return 0;
}
