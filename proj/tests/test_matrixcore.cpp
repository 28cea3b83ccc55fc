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

#include "cqm/complex_matrix.hpp"
#include "cqm/composite.hpp"
#include "cqm/errors.hpp"
#include "cqm/states.hpp"
#include "cqm/tolerances.hpp"
#include "random_states.hpp"

using namespace cqm;
namespace ct = cqm::testing;

namespace {

DensityMatrix basis_state(int n, int k) {
  ComplexMatrix m(n, n);
  m(k, k) = 1.0;
  return DensityMatrix::validated(m);
}

}  // namespace

TEST_CASE("tensor product identities and hand-expanded cases") {
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  CHECK(max_abs_diff(tensor_product(i2, i2), ComplexMatrix::identity(4)) == 0.0);

  // sigma_z x 1 = diag(1, 1, -1, -1)
  ComplexMatrix expected(4, 4);
  expected(0, 0) = 1.0;
  expected(1, 1) = 1.0;
  expected(2, 2) = -1.0;
  expected(3, 3) = -1.0;
  CHECK(max_abs_diff(tensor_product(pauli_z(), i2), expected) == 0.0);

  // |0><0| x |1><1| has a single 1 at row/col (0*2+1, 0*2+1).
  const ComplexMatrix prod =
      tensor_product(basis_state(2, 0).matrix(), basis_state(2, 1).matrix());
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      CHECK(prod(i, j) == ((i == 1 && j == 1) ? Complex(1.0, 0.0) : Complex(0.0, 0.0)));
    }
  }
}

TEST_CASE("tensor product is associative and bilinear") {
  ct::Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = ct::ginibre(2, 2, rng);
    const ComplexMatrix b = ct::ginibre(3, 3, rng);
    const ComplexMatrix c = ct::ginibre(2, 2, rng);
    CHECK(max_abs_diff(tensor_product(tensor_product(a, b), c),
                       tensor_product(a, tensor_product(b, c))) < 1e-12);

    const Complex alpha = ct::complex_gaussian(rng);
    const Complex beta = ct::complex_gaussian(rng);
    const ComplexMatrix lhs = tensor_product(alpha * a + beta * c, b);
    const ComplexMatrix rhs = alpha * tensor_product(a, b) + beta * tensor_product(c, b);
    CHECK(max_abs_diff(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("partial trace recovers the factors of a product state") {
  ct::Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix rho_r = ct::random_density(3, rng);
    const DensityMatrix rho_s = ct::random_density(3, rng);
    const ComplexMatrix full = tensor_product(rho_r.matrix(), rho_s.matrix());
    CHECK(max_abs_diff(partial_trace(full, Subsystem::R, 3, 3), rho_r.matrix()) < 1e-12);
    CHECK(max_abs_diff(partial_trace(full, Subsystem::S, 3, 3), rho_s.matrix()) < 1e-12);
  }
}

TEST_CASE("partial trace of the Bell state is maximally mixed") {
  // (|00> + |11>)/sqrt(2) as a projector.
  ComplexMatrix bell(4, 4);
  bell(0, 0) = 0.5;
  bell(0, 3) = 0.5;
  bell(3, 0) = 0.5;
  bell(3, 3) = 0.5;
  const ComplexMatrix reduced = partial_trace(bell, Subsystem::S, 2, 2);
  CHECK(max_abs_diff(reduced, 0.5 * ComplexMatrix::identity(2)) < 1e-15);
}

TEST_CASE("partial trace preserves the total trace and checks dimensions") {
  ct::Rng rng(13);
  for (int n : {2, 3}) {
    const DensityMatrix rho_c = ct::random_correlated(n, n, rng);
    for (auto keep : {Subsystem::R, Subsystem::S}) {
      const ComplexMatrix reduced = partial_trace(rho_c.matrix(), keep, n, n);
      CHECK(std::abs(trace(reduced) - trace(rho_c.matrix())) < 1e-12);
    }
  }
  CHECK_THROWS_AS(partial_trace(ComplexMatrix::identity(5), Subsystem::R, 2, 2),
                  DimensionError);
}

TEST_CASE("dagger on known operators") {
  const ComplexMatrix id = ComplexMatrix::identity(3);
  CHECK(max_abs_diff(dagger(id), id) == 0.0);

  // |g><e| -> |e><g|
  ComplexMatrix lower(2, 2);
  lower(0, 1) = 1.0;
  ComplexMatrix raise(2, 2);
  raise(1, 0) = 1.0;
  CHECK(max_abs_diff(dagger(lower), raise) == 0.0);

  const ComplexMatrix i_sy = Complex(0.0, 1.0) * pauli_y();
  CHECK(max_abs_diff(dagger(i_sy), -i_sy) == 0.0);
}

TEST_CASE("commutator algebra") {
  ct::Rng rng(14);
  const ComplexMatrix a = ct::random_hermitian(3, rng);
  CHECK(max_abs(commutator(a, a)) < 1e-14);

  const ComplexMatrix two_i_sz = Complex(0.0, 2.0) * pauli_z();
  CHECK(max_abs_diff(commutator(pauli_x(), pauli_y()), two_i_sz) < 1e-15);

  // The swap-type observable commutes with the composite Hamiltonian.
  const CompositeSystem sys = ct::random_system(2, rng);
  const HermitianObservable o_c = measured_observable(sys);
  CHECK(max_abs(commutator(o_c.matrix(), sys.composite_hamiltonian())) < 1e-10);

  CHECK_THROWS_AS(commutator(ComplexMatrix::identity(2), ComplexMatrix::identity(3)),
                  DimensionError);
}

TEST_CASE("linear entropy on known states and bounds") {
  CHECK(linear_entropy(basis_state(2, 0)) == 0.0);
  for (int n : {2, 3, 4}) {
    const DensityMatrix mixed =
        DensityMatrix::validated((1.0 / n) * ComplexMatrix::identity(n));
    CHECK(std::abs(linear_entropy(mixed) - (1.0 - 1.0 / n)) < 1e-15);
  }
  const DensityMatrix skew =
      DensityMatrix::validated(ComplexMatrix::from_rows({{0.75, 0.0}, {0.0, 0.25}}));
  CHECK(std::abs(linear_entropy(skew) - 0.375) < 1e-15);

  ct::Rng rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(trial % 3);
    const DensityMatrix rho = ct::random_density(n, rng);
    const double s = linear_entropy(rho);
    CHECK(s >= 0.0);
    CHECK(s <= 1.0 - 1.0 / n + 1e-12);
  }
}

TEST_CASE("linear entropy is invariant under unitary conjugation") {
  ct::Rng rng(16);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(trial % 3);
    const DensityMatrix rho = ct::random_density(n, rng);
    const UnitaryMap u = ct::random_unitary(n, rng);
    const DensityMatrix rotated = DensityMatrix::validated(
        hermitian_part(u.matrix() * rho.matrix() * dagger(u.matrix())));
    CHECK(std::abs(linear_entropy(rho) - linear_entropy(rotated)) < 1e-12);
  }
}

TEST_CASE("von Neumann entropy on known states") {
  ct::Rng rng(17);
  CHECK(von_neumann_entropy(ct::random_pure(3, rng)) < 1e-12);
  const DensityMatrix mixed = DensityMatrix::validated(0.5 * ComplexMatrix::identity(2));
  CHECK(std::abs(von_neumann_entropy(mixed) - std::log(2.0)) < 1e-13);

  const DensityMatrix skew =
      DensityMatrix::validated(ComplexMatrix::from_rows({{0.75, 0.0}, {0.0, 0.25}}));
  const double expected = -(0.75 * std::log(0.75) + 0.25 * std::log(0.25));
  CHECK(std::abs(von_neumann_entropy(skew) - expected) < 1e-13);
}

TEST_CASE("density matrix validation reports every violated invariant") {
  CHECK(validate_density_matrix(0.5 * ComplexMatrix::identity(2)).ok());

  // diag(2, -1): trace is exactly 1, so the only violation is positivity.
  {
    const auto result =
        validate_density_matrix(ComplexMatrix::from_rows({{2.0, 0.0}, {0.0, -1.0}}));
    REQUIRE(!result.ok());
    REQUIRE(result.violations.size() == 1);
    CHECK(result.violations[0].kind == InvariantViolation::Kind::NotPositive);
    CHECK(std::abs(result.violations[0].magnitude - (-1.0)) < 1e-12);
  }

  // diag(2, -0.5): trace 1.5 and a negative eigenvalue.
  {
    const auto result =
        validate_density_matrix(ComplexMatrix::from_rows({{2.0, 0.0}, {0.0, -0.5}}));
    REQUIRE(!result.ok());
    REQUIRE(result.violations.size() == 2);
    CHECK(result.violations[0].kind == InvariantViolation::Kind::TraceNotOne);
    CHECK(std::abs(result.violations[0].magnitude - 0.5) < 1e-12);
    CHECK(result.violations[1].kind == InvariantViolation::Kind::NotPositive);
  }

  // Hermitian, trace one, but indefinite: eigenvalues 0.5 +- 0.6.
  {
    const auto result =
        validate_density_matrix(ComplexMatrix::from_rows({{0.5, 0.6}, {0.6, 0.5}}));
    REQUIRE(!result.ok());
    REQUIRE(result.violations.size() == 1);
    CHECK(result.violations[0].kind == InvariantViolation::Kind::NotPositive);
    CHECK(std::abs(result.violations[0].magnitude - (-0.1)) < 1e-12);
  }

  // Non-Hermitian input.
  {
    const auto result =
        validate_density_matrix(ComplexMatrix::from_rows({{0.5, 0.3}, {0.0, 0.5}}));
    REQUIRE(!result.ok());
    CHECK(result.violations[0].kind == InvariantViolation::Kind::NotHermitian);
  }

  // Non-finite entries are rejected outright.
  {
    ComplexMatrix bad = ComplexMatrix::identity(2);
    bad(0, 0) = Complex(std::nan(""), 0.0);
    const auto result = validate_density_matrix(bad);
    REQUIRE(!result.ok());
    CHECK(result.violations[0].kind == InvariantViolation::Kind::NotFinite);
  }

  CHECK_THROWS_AS(DensityMatrix::validated(ComplexMatrix::from_rows({{2.0, 0.0}, {0.0, -1.0}})),
                  NotPositive);
  CHECK_THROWS_AS(DensityMatrix::validated(ComplexMatrix::from_rows({{0.6, 0.0}, {0.0, 0.6}})),
                  TraceNotOne);
}

TEST_CASE("typed wrappers enforce their invariants") {
  CHECK_THROWS_AS(
      HermitianObservable::validated(ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}})),
      NotHermitian);
  CHECK_THROWS_AS(UnitaryMap::validated(2.0 * ComplexMatrix::identity(2)), NotUnitary);

  ct::Rng rng(18);
  const UnitaryMap u = ct::random_unitary(4, rng);
  const ComplexMatrix uu = u.matrix() * dagger(u.matrix());
  CHECK(max_abs_diff(uu, ComplexMatrix::identity(4)) < tol::unitary);
}

TEST_CASE("trace distance basics") {
  const DensityMatrix a = basis_state(2, 0);
  const DensityMatrix b = basis_state(2, 1);
  CHECK(std::abs(trace_distance(a, b) - 1.0) < 1e-12);
  CHECK(trace_distance(a, a) < 1e-15);
}
