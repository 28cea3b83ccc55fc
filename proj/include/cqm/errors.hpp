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

#include <stdexcept>
#include <string>

namespace cqm {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operand shapes are incompatible (non-square where square is required,
/// mismatched dimensions, composite dimension not a product of the parts).
struct DimensionError : Error {
  using Error::Error;
};

/// A matrix expected to be Hermitian deviates beyond tol::herm.
struct NotHermitian : Error {
  explicit NotHermitian(double deviation)
      : Error("matrix is not Hermitian (max deviation " + std::to_string(deviation) + ")"),
        deviation(deviation) {}
  double deviation;
};

/// A density matrix trace deviates from 1 beyond tol::trace.
struct TraceNotOne : Error {
  explicit TraceNotOne(double deviation)
      : Error("trace differs from 1 by " + std::to_string(deviation)), deviation(deviation) {}
  double deviation;
};

/// A density matrix has an eigenvalue below -tol::psd, or a closed-form
/// optimum left the positive cone (infeasible regime).
struct NotPositive : Error {
  explicit NotPositive(double min_eigenvalue)
      : Error("matrix is not positive semidefinite (min eigenvalue " +
              std::to_string(min_eigenvalue) + ")"),
        min_eigenvalue(min_eigenvalue) {}
  double min_eigenvalue;
};

/// A map expected to be unitary deviates beyond tol::unitary.
struct NotUnitary : Error {
  explicit NotUnitary(double deviation)
      : Error("matrix is not unitary (max deviation " + std::to_string(deviation) + ")"),
        deviation(deviation) {}
  double deviation;
};

/// A fixed-step integration produced an eigenvalue below tol::step_reject_eig.
struct StepRejected : Error {
  StepRejected(double t, double min_eigenvalue)
      : Error("integration step rejected at t=" + std::to_string(t) + " (min eigenvalue " +
              std::to_string(min_eigenvalue) + "); reduce dt"),
        t(t),
        min_eigenvalue(min_eigenvalue) {}
  double t;
  double min_eigenvalue;
};

/// Precondition [R, R^dag] = 0 does not hold.
struct NotCommuting : Error {
  explicit NotCommuting(double deviation)
      : Error("operator does not commute with its adjoint (max deviation " +
              std::to_string(deviation) + ")"),
        deviation(deviation) {}
  double deviation;
};

/// A structural property of the measured observable failed its check.
struct PropertyViolated : Error {
  PropertyViolated(std::string property, double deviation)
      : Error("observable property '" + property + "' violated (deviation " +
              std::to_string(deviation) + ")"),
        property(std::move(property)),
        deviation(deviation) {}
  std::string property;
  double deviation;
};

/// An operation that requires tr(H) = 0 was given a non-traceless Hamiltonian.
struct NotTraceless : Error {
  explicit NotTraceless(double trace_value)
      : Error("Hamiltonian trace is " + std::to_string(trace_value) +
              "; shift it to zero trace first"),
        trace_value(trace_value) {}
  double trace_value;
};

/// A configuration file could not be parsed.
struct ParseError : Error {
  using Error::Error;
};

/// A parsed configuration violates a scenario or type invariant.
struct ValidationError : Error {
  using Error::Error;
};

/// A file could not be written or read.
struct IoError : Error {
  using Error::Error;
};

}  // namespace cqm
