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

// Numerical tolerances used by the state validators and the integrators.
// Exported as named constants so tests can assert against the exact same
// slack the library applies.
namespace cqm::tol {

inline constexpr double herm = 1e-10;     // max |a_ij - conj(a_ji)| for Hermitian types
inline constexpr double trace = 1e-10;    // |tr(rho) - 1| for density matrices
inline constexpr double psd = 1e-9;       // eigenvalues of a density matrix must be >= -psd
inline constexpr double unitary = 1e-10;  // max-abs deviation of U U^dag from identity
inline constexpr double eig_off = 1e-13;  // off-diagonal Frobenius norm target of the Jacobi sweeps

// The fixed-step integrators reject a step when an eigenvalue of the state
// drops below this value; that signals dt is too large for the generator.
inline constexpr double step_reject_eig = -1e-6;

}  // namespace cqm::tol
