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

#include "cqm/states.hpp"

#include <cmath>

#include "cqm/eigensolver.hpp"
#include "cqm/errors.hpp"
#include "cqm/tolerances.hpp"

namespace cqm {

DensityMatrix DensityMatrix::validated(ComplexMatrix m) {
  auto result = validate_density_matrix(m);
  if (result.ok()) return std::move(*result.state);
  const auto& v = result.violations.front();
  switch (v.kind) {
    case InvariantViolation::Kind::NotHermitian:
      throw NotHermitian(v.magnitude);
    case InvariantViolation::Kind::TraceNotOne:
      throw TraceNotOne(v.magnitude);
    case InvariantViolation::Kind::NotPositive:
      throw NotPositive(v.magnitude);
    default:
      throw DimensionError(v.description);
  }
}

HermitianObservable HermitianObservable::validated(ComplexMatrix m) {
  if (!m.is_square()) throw DimensionError("observable must be square");
  if (!all_finite(m)) throw DimensionError("observable has non-finite entries");
  const double dev = hermiticity_deviation(m);
  if (dev > tol::herm) throw NotHermitian(dev);
  return HermitianObservable(std::move(m));
}

UnitaryMap UnitaryMap::validated(ComplexMatrix m) {
  if (!m.is_square()) throw DimensionError("unitary must be square");
  if (!all_finite(m)) throw DimensionError("unitary has non-finite entries");
  const ComplexMatrix id = ComplexMatrix::identity(m.rows());
  const double dev =
      std::max(max_abs_diff(m * dagger(m), id), max_abs_diff(dagger(m) * m, id));
  if (dev > tol::unitary) throw NotUnitary(dev);
  return UnitaryMap(std::move(m));
}

DensityValidation validate_density_matrix(const ComplexMatrix& m) {
  DensityValidation result;
  using Kind = InvariantViolation::Kind;

  if (!m.is_square()) {
    result.violations.push_back({Kind::NotSquare, 0.0, "matrix is not square"});
    return result;
  }
  if (!all_finite(m)) {
    result.violations.push_back({Kind::NotFinite, 0.0, "matrix has non-finite entries"});
    return result;
  }

  const double herm_dev = hermiticity_deviation(m);
  if (herm_dev > tol::herm) {
    result.violations.push_back(
        {Kind::NotHermitian, herm_dev, "Hermiticity deviation exceeds tolerance"});
  }

  const double trace_dev = std::abs(trace(m) - Complex(1.0, 0.0));
  if (trace_dev > tol::trace) {
    result.violations.push_back({Kind::TraceNotOne, trace_dev, "trace differs from 1"});
  }

  // Positivity is checked on the Hermitian part so that a slightly
  // non-Hermitian input still produces a meaningful eigenvalue report.
  const double min_eig = min_eigenvalue(hermitian_part(m));
  if (min_eig < -tol::psd) {
    result.violations.push_back({Kind::NotPositive, min_eig, "negative eigenvalue"});
  }

  if (result.violations.empty()) {
    result.state = DensityMatrix::unchecked(m);
  }
  return result;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho_c, Subsystem keep, int dim_r, int dim_s) {
  if (dim_r <= 0 || dim_s <= 0 || !rho_c.is_square() || rho_c.rows() != dim_r * dim_s) {
    throw DimensionError("partial trace: composite dimension must equal dim_r * dim_s");
  }
  if (keep == Subsystem::R) {
    ComplexMatrix out(dim_r, dim_r);
    for (int i = 0; i < dim_r; ++i) {
      for (int j = 0; j < dim_r; ++j) {
        Complex s(0.0, 0.0);
        for (int alpha = 0; alpha < dim_s; ++alpha) {
          s += rho_c(i * dim_s + alpha, j * dim_s + alpha);
        }
        out(i, j) = s;
      }
    }
    return out;
  }
  ComplexMatrix out(dim_s, dim_s);
  for (int alpha = 0; alpha < dim_s; ++alpha) {
    for (int beta = 0; beta < dim_s; ++beta) {
      Complex s(0.0, 0.0);
      for (int i = 0; i < dim_r; ++i) {
        s += rho_c(i * dim_s + alpha, i * dim_s + beta);
      }
      out(alpha, beta) = s;
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho_c, Subsystem keep, int dim_r, int dim_s) {
  return DensityMatrix::validated(partial_trace(rho_c.matrix(), keep, dim_r, dim_s));
}

double purity(const DensityMatrix& rho) {
  // tr(rho^2) = sum_ij rho_ij conj(rho_ij) for Hermitian rho.
  double s = 0.0;
  for (const auto& v : rho.matrix().data()) s += std::norm(v);
  return s;
}

double linear_entropy(const DensityMatrix& rho) { return 1.0 - purity(rho); }

double von_neumann_entropy(const DensityMatrix& rho) {
  const auto eig = hermitian_eigensystem(rho.matrix());
  double s = 0.0;
  for (double lambda : eig.values) {
    if (lambda > 0.0) s -= lambda * std::log(lambda);
  }
  return s;
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const auto eig = hermitian_eigensystem(rho.matrix() - sigma.matrix());
  double s = 0.0;
  for (double lambda : eig.values) s += std::abs(lambda);
  return 0.5 * s;
}

}  // namespace cqm
