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
#include <string>
#include <vector>

#include "cqm/complex_matrix.hpp"

namespace cqm {

/// Which subsystem of a two-part composite to keep when tracing out the other.
enum class Subsystem { R, S };

/// Hermitian, unit-trace, positive-semidefinite state. Construction goes
/// through validated() so an instance always satisfies the invariants within
/// the exported tolerances.
class DensityMatrix {
 public:
  /// Validates Hermiticity (tol::herm), trace (tol::trace) and positivity
  /// (eigenvalues >= -tol::psd). Throws the first violated invariant as
  /// NotHermitian / TraceNotOne / NotPositive.
  static DensityMatrix validated(ComplexMatrix m);

  /// For callers that have already established the invariants (integrator
  /// snapshots whose Hermiticity and trace are enforced each step and whose
  /// positivity is monitored separately). No checks.
  static DensityMatrix unchecked(ComplexMatrix m) { return DensityMatrix(std::move(m)); }

  int dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  explicit DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {}
  ComplexMatrix matrix_;
};

/// Hermitian operator (within tol::herm).
class HermitianObservable {
 public:
  static HermitianObservable validated(ComplexMatrix m);
  int dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  explicit HermitianObservable(ComplexMatrix m) : matrix_(std::move(m)) {}
  ComplexMatrix matrix_;
};

/// Unitary map (U U^dag = U^dag U = 1 within tol::unitary).
class UnitaryMap {
 public:
  static UnitaryMap validated(ComplexMatrix m);
  int dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  explicit UnitaryMap(ComplexMatrix m) : matrix_(std::move(m)) {}
  ComplexMatrix matrix_;
};

/// One violated density-matrix invariant with the measured magnitude.
struct InvariantViolation {
  enum class Kind { NotFinite, NotSquare, NotHermitian, TraceNotOne, NotPositive };
  Kind kind;
  double magnitude;
  std::string description;
};

/// Result of validate_density_matrix: either a state, or the full list of
/// violations (all of them, not just the first).
struct DensityValidation {
  std::optional<DensityMatrix> state;
  std::vector<InvariantViolation> violations;
  bool ok() const { return state.has_value(); }
};

/// Checks every density-matrix invariant and reports each violation with its
/// magnitude. Never throws on invalid input.
DensityValidation validate_density_matrix(const ComplexMatrix& m);

/// Partial trace of a composite state over the discarded part.
/// Index convention: composite index (i, alpha) = i * dim_s + alpha, with i
/// in R and alpha in S. Throws DimensionError if rho_c.dim != dim_r * dim_s.
ComplexMatrix partial_trace(const ComplexMatrix& rho_c, Subsystem keep, int dim_r, int dim_s);
DensityMatrix partial_trace(const DensityMatrix& rho_c, Subsystem keep, int dim_r, int dim_s);

/// tr(rho^2)
double purity(const DensityMatrix& rho);

/// S[rho] = 1 - tr(rho^2); 0 for pure states, 1 - 1/dim for maximally mixed.
double linear_entropy(const DensityMatrix& rho);

/// -sum_k lambda_k ln lambda_k with 0 ln 0 = 0; eigenvalues within tolerance
/// below zero contribute nothing.
double von_neumann_entropy(const DensityMatrix& rho);

/// (1/2) tr |rho - sigma|
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace cqm
