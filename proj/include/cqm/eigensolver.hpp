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

#include <vector>

#include "cqm/complex_matrix.hpp"

namespace cqm {

/// Spectral decomposition A = V diag(values) V^dag of a Hermitian matrix.
/// Eigenvalues are sorted ascending; column k of `vectors` is the
/// eigenvector of values[k].
struct EigenDecomposition {
  std::vector<double> values;
  ComplexMatrix vectors;
};

/// Cyclic complex Jacobi sweeps. Deterministic for a given input; converges
/// when the off-diagonal Frobenius norm drops below
/// tol::eig_off * max(1, ||A||_F). Intended for the small dimensions this
/// library works at (<= 16); cost is irrelevant there and the rotations are
/// unconditionally stable.
///
/// Throws NotHermitian if the input deviates from Hermiticity beyond
/// tol::herm, DimensionError if not square.
EigenDecomposition hermitian_eigensystem(const ComplexMatrix& a);

/// Smallest eigenvalue of a Hermitian matrix (same Jacobi path).
double min_eigenvalue(const ComplexMatrix& a);

/// f(A) = V diag(f(lambda)) V^dag for Hermitian A.
ComplexMatrix hermitian_function(const ComplexMatrix& a, Complex (*f)(double));

/// exp(i s A) for Hermitian A, via the spectral theorem.
ComplexMatrix unitary_exp(const ComplexMatrix& hermitian, double s);

}  // namespace cqm
