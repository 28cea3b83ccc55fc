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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cqm/eigensolver.hpp"
#include "cqm/errors.hpp"
#include "random_states.hpp"

using namespace cqm;
namespace ct = cqm::testing;

TEST_CASE("known 2x2 spectra") {
  const auto eig_z = hermitian_eigensystem(pauli_z());
  CHECK(std::abs(eig_z.values[0] - (-1.0)) < 1e-14);
  CHECK(std::abs(eig_z.values[1] - 1.0) < 1e-14);

  const auto eig_x = hermitian_eigensystem(pauli_x());
  CHECK(std::abs(eig_x.values[0] - (-1.0)) < 1e-13);
  CHECK(std::abs(eig_x.values[1] - 1.0) < 1e-13);

  // [[0.5, 0.6], [0.6, 0.5]] has eigenvalues 0.5 -+ 0.6.
  const auto eig = hermitian_eigensystem(ComplexMatrix::from_rows({{0.5, 0.6}, {0.6, 0.5}}));
  CHECK(std::abs(eig.values[0] - (-0.1)) < 1e-13);
  CHECK(std::abs(eig.values[1] - 1.1) < 1e-13);
}

TEST_CASE("decomposition reconstructs random Hermitian matrices") {
  ct::Rng rng(21);
  for (int n : {2, 3, 4, 9, 16}) {
    for (int trial = 0; trial < 5; ++trial) {
      const ComplexMatrix a = ct::random_hermitian(n, rng);
      const auto eig = hermitian_eigensystem(a);

      // Eigenvalues ascending.
      for (int k = 1; k < n; ++k) CHECK(eig.values[k] >= eig.values[k - 1]);

      // V unitary.
      CHECK(max_abs_diff(dagger(eig.vectors) * eig.vectors, ComplexMatrix::identity(n)) <
            1e-12);

      // A = V diag V^dag.
      ComplexMatrix scaled = eig.vectors;
      for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) scaled(i, k) *= eig.values[k];
      }
      CHECK(max_abs_diff(scaled * dagger(eig.vectors), a) < 1e-12 * std::max(1.0, max_abs(a)));
    }
  }
}

TEST_CASE("degenerate spectra are handled") {
  const auto eig = hermitian_eigensystem(3.0 * ComplexMatrix::identity(4));
  for (double v : eig.values) CHECK(std::abs(v - 3.0) < 1e-13);
  CHECK(max_abs_diff(dagger(eig.vectors) * eig.vectors, ComplexMatrix::identity(4)) < 1e-12);
}

TEST_CASE("non-Hermitian input is rejected") {
  CHECK_THROWS_AS(hermitian_eigensystem(ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}})),
                  NotHermitian);
}

TEST_CASE("min_eigenvalue agrees with the full decomposition") {
  ct::Rng rng(22);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix a = ct::random_hermitian(4, rng);
    CHECK(min_eigenvalue(a) == hermitian_eigensystem(a).values.front());
  }
}

TEST_CASE("unitary_exp reproduces known phases and is unitary") {
  const double t = 0.7;
  const ComplexMatrix u = unitary_exp(pauli_z(), t);
  CHECK(std::abs(u(0, 0) - std::exp(Complex(0.0, t))) < 1e-13);
  CHECK(std::abs(u(1, 1) - std::exp(Complex(0.0, -t))) < 1e-13);
  CHECK(std::abs(u(0, 1)) < 1e-13);

  ct::Rng rng(23);
  const ComplexMatrix h = ct::random_hermitian(4, rng);
  const ComplexMatrix v = unitary_exp(h, 1.3);
  CHECK(max_abs_diff(v * dagger(v), ComplexMatrix::identity(4)) < 1e-12);
  // exp(iHs) exp(-iHs) = 1
  CHECK(max_abs_diff(v * unitary_exp(h, -1.3), ComplexMatrix::identity(4)) < 1e-12);
}
