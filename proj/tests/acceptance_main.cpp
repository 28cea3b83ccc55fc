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

// Acceptance suite: every release-gating property of the library, one line
// of output per criterion. Criterion 10 drives the installed CLI binary;
// pass its path with --cli.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cqm/batch.hpp"
#include "cqm/closedform.hpp"
#include "cqm/composite.hpp"
#include "cqm/errors.hpp"
#include "cqm/infoexchange.hpp"
#include "cqm/lindblad.hpp"
#include "cqm/states.hpp"
#include "oracles.hpp"
#include "random_states.hpp"

using namespace cqm;
namespace ct = cqm::testing;
namespace fs = std::filesystem;

namespace {

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

std::string g_cli_path;
fs::path g_work_dir;

DensityMatrix sender_with_margin(int n, double margin, ct::Rng& rng) {
  for (;;) {
    DensityMatrix rho = ct::random_density(n, rng);
    if (purity(rho) - 1.0 / n > margin) return rho;
  }
}

CompositeSystem traceless_system(int n, ct::Rng& rng) {
  auto h = HermitianObservable::validated(ct::random_traceless_hermitian(n, rng));
  return CompositeSystem::from_receiver(std::move(h), ct::random_unitary(n, rng));
}

// 1. eta = delta_i / delta_s = 3/5 in both regimes, sender-independent.
bool criterion_efficiency(std::string& detail) {
  ct::Rng rng(9001);
  double worst = 0.0;
  for (int n : {2, 3, 4}) {
    for (int trial = 0; trial < 50; ++trial) {
      const DensityMatrix rho_s = sender_with_margin(n, 1e-6, rng);

      const CompositeSystem plain = ct::random_system(n, rng);
      const double eta_u = max_info(plain, rho_s) / sender_entropy_increment(plain, rho_s);
      worst = std::max(worst, std::abs(eta_u - 0.6));

      CompositeSystem iso = traceless_system(n, rng);
      while (std::abs(isoenergetic_entropy_increment(iso, rho_s)) <= 1e-12) {
        iso = traceless_system(n, rng);
      }
      const double eta_e =
          isoenergetic_max_info(iso, rho_s) / isoenergetic_entropy_increment(iso, rho_s);
      worst = std::max(worst, std::abs(eta_e - 0.6));
    }
  }
  detail = "max |eta - 0.6| = " + sci(worst);
  return worst <= 1e-9;
}

// 2. Pure senders reach (1/3)(1 - 1/N) exactly.
bool criterion_global_bound(std::string& detail) {
  ct::Rng rng(9002);
  double worst = 0.0;
  for (int n = 2; n <= 6; ++n) {
    const CompositeSystem sys = ct::random_system(n, rng);
    for (int trial = 0; trial < 20; ++trial) {
      const double gain = max_info(sys, ct::random_pure(n, rng));
      worst = std::max(worst, std::abs(gain - (1.0 / 3) * (1.0 - 1.0 / n)));
    }
  }
  // The N=2 ceiling is exactly 1/6.
  const CompositeSystem qubit = ct::random_system(2, rng);
  worst = std::max(worst, std::abs(max_info(qubit, ct::random_pure(2, rng)) - 1.0 / 6));
  detail = "max deviation = " + sci(worst);
  return worst <= 1e-12;
}

// 3. Qubit isoenergetic transfer is (2/3)|c|^2.
bool criterion_qubit_law(std::string& detail) {
  ct::Rng rng(9003);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const double delta0 = 0.2 + 2.0 * unit(rng);
    const CompositeSystem sys = CompositeSystem::from_receiver(
        HermitianObservable::validated(delta0 * pauli_z()),
        UnitaryMap::validated(ComplexMatrix::identity(2)));

    const DensityMatrix rho_s = ct::random_density(2, rng);
    const Complex c = rho_s.matrix()(0, 1);
    const double expected = (2.0 / 3) * std::norm(c);
    worst = std::max(worst, std::abs(isoenergetic_max_info(sys, rho_s) - expected));
  }
  detail = "max deviation = " + sci(worst);
  return worst <= 1e-12;
}

// 4. Asymptotic closed form vs RK4 endpoints.
bool criterion_duality(std::string& detail) {
  ct::Rng rng(9004);
  std::vector<CompositeSystem> systems;
  std::vector<ReducedPair> pairs;
  std::vector<ReducedPair> limits;
  for (int n : {2, 3}) {
    for (int trial = 0; trial < 25; ++trial) {
      systems.push_back(ct::random_system(n, rng));
      pairs.push_back({ct::random_density(n, rng), ct::random_density(n, rng)});
      limits.push_back(asymptotic_states(systems.back(), pairs.back()));
    }
  }
  const auto results =
      batch::evolve_reduced_ensemble(systems, pairs, 20.0, 1e-3, batch::Policy::parallel);
  double worst = 0.0;
  for (std::size_t k = 0; k < results.size(); ++k) {
    worst = std::max(worst, max_abs_diff(results[k].final_pair.rho_r.matrix(),
                                         limits[k].rho_r.matrix()));
    worst = std::max(worst, max_abs_diff(results[k].final_pair.rho_s.matrix(),
                                         limits[k].rho_s.matrix()));
  }
  detail = "max entrywise gap = " + sci(worst);
  return worst <= 1e-6;
}

// 5. Linear entropy never drops along measurement trajectories.
bool criterion_monotonicity(std::string& detail) {
  ct::Rng rng(9005);
  std::vector<MeasurementGenerator> gens;
  std::vector<DensityMatrix> states;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 3;
    gens.emplace_back(HermitianObservable::validated(ct::random_hermitian(n, rng)), 1.0);
    states.push_back(ct::random_density(n, rng));
  }
  const auto results =
      batch::evolve_ensemble(gens, states, 20.0, 1e-3, batch::Policy::parallel);
  double worst = 0.0;  // most negative per-step entropy change
  for (const auto& r : results) worst = std::min(worst, r.min_entropy_step);
  detail = "most negative per-step dS = " + sci(worst);
  return worst >= -1e-8;
}

// 6. Relaxation to the pure ground state under the lowering jump.
bool criterion_attractor(std::string& detail) {
  ct::Rng rng(9006);
  const ComplexMatrix lowering = ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
  const DensityMatrix ground =
      DensityMatrix::validated(ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, 0.0}}));

  std::vector<LindbladGenerator> gens;
  std::vector<DensityMatrix> states;
  for (int trial = 0; trial < 100; ++trial) {
    gens.emplace_back(HermitianObservable::validated(ComplexMatrix::zero(2, 2)), lowering,
                      1.0);
    states.push_back(ct::random_density(2, rng));
  }
  const auto results =
      batch::evolve_ensemble(gens, states, 20.0, 1e-3, batch::Policy::parallel);

  double worst_distance = 0.0;
  double worst_entropy = 0.0;
  for (const auto& r : results) {
    worst_distance = std::max(worst_distance, trace_distance(r.final_state, ground));
    worst_entropy = std::max(worst_entropy, r.final_entropy);
  }
  detail = "max trace distance = " + sci(worst_distance) +
           ", max S_lin = " + sci(worst_entropy);
  return worst_distance < 1e-6 && worst_entropy < 1e-10;
}

// 7. Closed forms of the appendix against direct integration.
bool criterion_appendix_oracles(std::string& detail) {
  ct::Rng rng(9007);
  double worst_gap = 0.0;
  for (int trial = 0; trial < 25; ++trial) {
    // General observable on the 4-dimensional composite.
    {
      const HermitianObservable o =
          HermitianObservable::validated(ct::random_hermitian(4, rng));
      const DensityMatrix rho0 = ct::random_density(4, rng);
      const Trajectory numeric = evolve(MeasurementGenerator(o, 1.0), rho0, 1.0, 1e-3);
      worst_gap = std::max(worst_gap, max_abs_diff(gaussian_solution(o, rho0, 1.0).matrix(),
                                                   numeric.final_state().matrix()));
    }
    // Additive observable: reduced closed form vs traced integration.
    {
      const AdditiveObservable obs{
          HermitianObservable::validated(ct::random_hermitian(2, rng)),
          HermitianObservable::validated(ct::random_hermitian(2, rng))};
      const ComplexMatrix o_c =
          tensor_product(obs.a_r.matrix(), ComplexMatrix::identity(2)) +
          tensor_product(ComplexMatrix::identity(2), obs.b_s.matrix());
      const DensityMatrix rho_c0 = ct::random_correlated(2, 2, rng);
      const DensityMatrix rho_r0 =
          DensityMatrix::validated(partial_trace(rho_c0.matrix(), Subsystem::R, 2, 2));
      const Trajectory numeric =
          evolve(MeasurementGenerator(HermitianObservable::validated(o_c), 1.0), rho_c0, 1.0,
                 1e-3);
      worst_gap = std::max(
          worst_gap,
          max_abs_diff(additive_reduced_state(obs, rho_r0, 1.0).matrix(),
                       partial_trace(numeric.final_state().matrix(), Subsystem::R, 2, 2)));
    }
    // Multiplicative observable: elementwise closed form vs integration.
    {
      const MultiplicativeObservable obs{
          HermitianObservable::validated(ct::random_hermitian(2, rng)),
          HermitianObservable::validated(ct::random_hermitian(2, rng))};
      const ComplexMatrix o_c = tensor_product(obs.a_r.matrix(), obs.b_s.matrix());
      const DensityMatrix rho_c0 = ct::random_correlated(2, 2, rng);
      const Trajectory numeric =
          evolve(MeasurementGenerator(HermitianObservable::validated(o_c), 1.0), rho_c0, 1.0,
                 1e-3);
      worst_gap = std::max(worst_gap,
                           max_abs_diff(multiplicative_elements(obs, rho_c0, 1.0).matrix(),
                                        numeric.final_state().matrix()));
    }
  }

  // Entropy rate: the general double sum equals the product form and is
  // non-negative on uncorrelated starts.
  double worst_identity = 0.0;
  double most_negative = 0.0;
  for (int trial = 0; trial < 25; ++trial) {
    const MultiplicativeObservable obs{
        HermitianObservable::validated(ct::random_hermitian(2, rng)),
        HermitianObservable::validated(ct::random_hermitian(2, rng))};
    const DensityMatrix rho_r0 = ct::random_density(2, rng);
    const DensityMatrix rho_s0 = ct::random_density(2, rng);
    const DensityMatrix rho_c0 =
        DensityMatrix::validated(tensor_product(rho_r0.matrix(), rho_s0.matrix()));
    for (double t : {0.0, 0.5, 1.0}) {
      const double general = multiplicative_entropy_rate(obs, rho_c0, t);
      const double product = multiplicative_entropy_rate_uncorrelated(obs, rho_r0, rho_s0, t);
      worst_identity = std::max(worst_identity, std::abs(general - product));
      most_negative = std::min(most_negative, general);
    }
  }
  detail = "max closed-form gap = " + sci(worst_gap) +
           ", rate identity gap = " + sci(worst_identity) +
           ", most negative rate = " + sci(most_negative);
  return worst_gap <= 1e-6 && worst_identity <= 1e-12 && most_negative >= -1e-12;
}

// 8. Energy conservation and the relaxation exponent.
bool criterion_energy(std::string& detail) {
  ct::Rng rng(9008);
  double worst_drift = 0.0;
  double worst_rate_gap = 0.0;
  for (int n : {2, 3}) {
    for (int trial = 0; trial < 5; ++trial) {
      const CompositeSystem sys = ct::random_system(n, rng);
      ReducedPair pair0{ct::random_density(n, rng), ct::random_density(n, rng)};
      const ReducedTrajectory traj = evolve_reduced(sys, pair0, 20.0, 1e-3);

      const double e0 = traj.e_r.front() + traj.e_s.front();
      for (std::size_t k = 0; k < traj.size(); ++k) {
        worst_drift = std::max(worst_drift, std::abs(traj.e_r[k] + traj.e_s[k] - e0));
      }

      std::vector<double> gap(traj.size());
      for (std::size_t k = 0; k < traj.size(); ++k) gap[k] = traj.e_r[k] - traj.e_s[k];
      if (std::abs(gap.front()) < 1e-3) continue;  // nothing to fit
      const double rate = ct::fitted_decay_rate(traj.times, gap, 1e-8 * std::abs(gap.front()));
      worst_rate_gap = std::max(worst_rate_gap, std::abs(-rate - 2.0));
    }
  }
  detail = "max drift = " + sci(worst_drift) +
           ", max |exponent - 2| = " + sci(worst_rate_gap);
  return worst_drift < 1e-9 && worst_rate_gap <= 0.01;
}

// 9. No feasible perturbation beats either optimum.
bool criterion_optimality(std::string& detail) {
  ct::Rng rng(9009);
  const double eps = 1e-3;
  double worst_improvement = -1e300;

  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 3;

    // Unconstrained regime.
    {
      const CompositeSystem sys = ct::random_system(n, rng);
      const DensityMatrix rho_s = ct::random_density(n, rng);
      const DensityMatrix best = optimal_receiver_state(sys, rho_s);
      const double base = info_gain(sys, {best, rho_s});
      int used = 0;
      while (used < 200) {
        const ComplexMatrix delta = ct::random_traceless_hermitian(n, rng);
        const auto check = validate_density_matrix(best.matrix() + eps * delta);
        if (!check.ok()) continue;
        ++used;
        worst_improvement =
            std::max(worst_improvement, info_gain(sys, {*check.state, rho_s}) - base);
      }
    }

    // Isoenergetic regime, restricted to energy-preserving directions.
    {
      CompositeSystem sys = traceless_system(n, rng);
      DensityMatrix rho_s = ct::random_density(n, rng);
      for (;;) {
        try {
          (void)isoenergetic_optimal_state(sys, rho_s);
          break;
        } catch (const NotPositive&) {
          sys = traceless_system(n, rng);
          rho_s = ct::random_density(n, rng);
        }
      }
      const DensityMatrix best = isoenergetic_optimal_state(sys, rho_s);
      const double base = info_gain(sys, {best, rho_s});
      const double h2 = trace(sys.h_r().matrix() * sys.h_r().matrix()).real();
      int used = 0;
      int attempts = 0;
      while (used < 200 && attempts < 20000) {
        ++attempts;
        ComplexMatrix delta = ct::random_traceless_hermitian(n, rng);
        const double overlap = trace(delta * sys.h_r().matrix()).real();
        delta -= (overlap / h2) * sys.h_r().matrix();
        const auto check = validate_density_matrix(best.matrix() + eps * delta);
        if (!check.ok()) continue;
        ++used;
        worst_improvement =
            std::max(worst_improvement, info_gain(sys, {*check.state, rho_s}) - base);
      }
    }
  }
  detail = "best improvement found = " + sci(worst_improvement);
  return worst_improvement <= 1e-9;
}

// 10. CLI determinism and the pinned optimal-scenario values.
bool criterion_cli(std::string& detail) {
  if (g_cli_path.empty()) {
    detail = "no --cli path provided";
    return false;
  }
  const fs::path dir_a = g_work_dir / "run_a";
  const fs::path dir_b = g_work_dir / "run_b";
  fs::remove_all(dir_a);
  fs::remove_all(dir_b);

  const fs::path config = g_work_dir / "optimal.json";
  {
    std::ofstream out(config, std::ios::binary | std::ios::trunc);
    out << R"({
  "scenario": "optimal",
  "matrices": { "rho_s0": [[[1,0],[0,0]],[[0,0],[0,0]]] }
})";
  }

  auto run_once = [&](const fs::path& out_dir) {
    const std::string cmd = g_cli_path + " run " + config.string() + " --out-dir " +
                            out_dir.string() + " > /dev/null 2>&1";
    return std::system(cmd.c_str());
  };
  if (run_once(dir_a) != 0 || run_once(dir_b) != 0) {
    detail = "cli run failed";
    return false;
  }

  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const std::string report_a = slurp(dir_a / "optimal_report.json");
  const bool identical = report_a == slurp(dir_b / "optimal_report.json") &&
                         slurp(dir_a / "optimal_trajectory.csv") ==
                             slurp(dir_b / "optimal_trajectory.csv") &&
                         !report_a.empty();

  const auto json = nlohmann::json::parse(report_a);
  const double delta_i = json.at("exchange").at("delta_i").get<double>();
  const double eta = json.at("exchange").at("eta").get<double>();
  const double gap =
      std::max(std::abs(delta_i - 1.0 / 6), std::abs(eta - 0.6));

  detail = std::string(identical ? "byte-identical" : "OUTPUTS DIFFER") +
           ", max value gap = " + sci(gap);
  return identical && gap < 1e-12;
}

}  // namespace

int main(int argc, char** argv) {
  g_work_dir = fs::temp_directory_path() / "cqm_acceptance";
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--cli" && i + 1 < argc) g_cli_path = argv[++i];
    if (arg == "--work-dir" && i + 1 < argc) g_work_dir = argv[++i];
  }
  fs::create_directories(g_work_dir);

  const std::vector<Criterion> criteria = {
      {1, "efficiency eta = 3/5 in both regimes", 5.0, criterion_efficiency},
      {2, "global information bound for pure senders", 1.0, criterion_global_bound},
      {3, "qubit isoenergetic law (2/3)|c|^2", 1.0, criterion_qubit_law},
      {4, "closed-form/ODE duality at t = 20", 30.0, criterion_duality},
      {5, "entropy monotonicity along measurement trajectories", 60.0,
       criterion_monotonicity},
      {6, "recoherence attractor at t = 20", 30.0, criterion_attractor},
      {7, "appendix closed forms vs direct integration", 60.0, criterion_appendix_oracles},
      {8, "energy conservation and relaxation exponent", 10.0, criterion_energy},
      {9, "optimality under feasible perturbations", 60.0, criterion_optimality},
      {10, "CLI determinism and pinned optimal values", 5.0, criterion_cli},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = false;
    try {
      pass = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = elapsed < criterion.budget_seconds;
    const bool ok = pass && in_budget;
    if (!ok) ++failures;
    std::printf("[%s] criterion %2d: %s — %s (%.2fs, budget %.0fs)\n", ok ? "PASS" : "FAIL",
                criterion.id, criterion.name.c_str(), detail.c_str(), elapsed,
                criterion.budget_seconds);
  }
  if (failures > 0) {
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
