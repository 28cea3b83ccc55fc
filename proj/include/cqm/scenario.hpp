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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cqm/complex_matrix.hpp"
#include "cqm/infoexchange.hpp"
#include "cqm/lindblad.hpp"

namespace cqm {

/// Declarative description of one experiment, parsed from a JSON config.
/// Matrices use the shared literal format: a matrix is a list of rows, each
/// entry a two-element [re, im] pair of decimal numbers.
struct ScenarioConfig {
  std::string scenario;
  int n = 2;             // dimension of part R
  double t_final = 20.0;
  double dt = 1e-3;
  double gamma = 1.0;
  std::string out_dir = ".";
  std::map<std::string, ComplexMatrix> matrices;
};

/// Entry of the fixed scenario registry.
struct ScenarioInfo {
  std::string name;
  std::vector<std::string> required_matrices;
  std::vector<std::string> optional_matrices;
  std::string summary;
};

const std::vector<ScenarioInfo>& scenario_registry();

/// Outcome of a run: derived quantities, analytic-vs-numeric residuals for
/// every quantity with a closed form, and the emitted file paths.
struct RunReport {
  std::string scenario;
  int n = 0;
  std::map<std::string, double> values;
  std::map<std::string, double> residuals;
  std::map<std::string, std::string> notes;
  std::optional<ExchangeReport> exchange;
  std::vector<std::string> emitted_files;
};

/// Parses and validates a config file. Structural problems (unreadable file,
/// malformed JSON, wrong value types, bad matrix literals) raise ParseError
/// with the offending line/field; semantic problems (unknown scenario,
/// missing or unexpected matrices, a matrix failing its type validator,
/// dimension inconsistencies) raise ValidationError naming the failing
/// invariant.
ScenarioConfig parse_config(const std::string& path);

/// Runs the configured scenario, writing `<scenario>_trajectory.csv` and
/// `<scenario>_report.json` under cfg.out_dir. Deterministic for a given
/// config: two runs produce byte-identical files. Errors propagate as the
/// module exceptions (StepRejected, NotPositive, IoError, ...).
RunReport run_scenario(const ScenarioConfig& cfg);

/// Writes the normative trajectory CSV (same format as write_trajectory_csv;
/// an empty trajectory produces a header-only file).
void emit_plot_data(const Trajectory& traj, const std::string& path);

/// Command-line entry point: `run <config> [--out-dir D] [--t-final X]
/// [--dt X]` (flags beat file values), `validate <config>`,
/// `list-scenarios`. Returns the process exit code: 0 success, 1 parse
/// error, 2 validation error, 3 numerical guard, 4 infeasible regime,
/// 5 I/O failure.
int cli_main(int argc, const char* const* argv);

}  // namespace cqm
