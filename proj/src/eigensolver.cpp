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

#include "cqm/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cqm/errors.hpp"
#include "cqm/tolerances.hpp"

namespace cqm {

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return std::sqrt(s);
}

// One rotation in the (p, q) plane annihilating a(p, q). The complex entry is
// first rotated onto the real axis by the phase of a(p, q), then a standard
// symmetric Jacobi rotation is applied. J differs from the identity only in
//   J(p,p) = c,  J(p,q) = -s,  J(q,p) = s e^{-i phi},  J(q,q) = c e^{-i phi}.
void rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
  const Complex apq = a(p, q);
  const double g = std::abs(apq);
  if (g == 0.0) return;

  const Complex phase = apq / g;  // e^{i phi}
  const double alpha = a(p, p).real();
  const double beta = a(q, q).real();

  const double tau = (alpha - beta) / (2.0 * g);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex jpp = c;
  const Complex jpq = -s;
  const Complex jqp = s * std::conj(phase);
  const Complex jqq = c * std::conj(phase);

  const int n = a.rows();
  // A <- A J (columns p, q)
  for (int k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * jpp + akq * jqp;
    a(k, q) = akp * jpq + akq * jqq;
  }
  // A <- J^dag A (rows p, q)
  for (int k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
  }
  // Pin the entries the rotation is constructed to produce.
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = Complex(a(p, p).real(), 0.0);
  a(q, q) = Complex(a(q, q).real(), 0.0);

  // V <- V J
  for (int k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * jpp + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * jqq;
  }
}

}  // namespace

EigenDecomposition hermitian_eigensystem(const ComplexMatrix& input) {
  if (!input.is_square()) throw DimensionError("eigensystem requires a square matrix");
  const double herm_dev = hermiticity_deviation(input);
  if (herm_dev > tol::herm) throw NotHermitian(herm_dev);

  const int n = input.rows();
  ComplexMatrix a = hermitian_part(input);
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double threshold = tol::eig_off * std::max(1.0, frobenius_norm(a));
  constexpr int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        rotate(a, v, p, q);
      }
    }
  }

  EigenDecomposition result;
  result.values.resize(n);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&a](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  result.vectors = ComplexMatrix(n, n);
  for (int k = 0; k < n; ++k) {
    result.values[k] = a(order[k], order[k]).real();
    for (int i = 0; i < n; ++i) {
      result.vectors(i, k) = v(i, order[k]);
    }
  }
  return result;
}

double min_eigenvalue(const ComplexMatrix& a) {
  return hermitian_eigensystem(a).values.front();
}

ComplexMatrix hermitian_function(const ComplexMatrix& a, Complex (*f)(double)) {
  const auto eig = hermitian_eigensystem(a);
  const int n = a.rows();
  ComplexMatrix scaled = eig.vectors;  // columns scaled by f(lambda_k)
  for (int k = 0; k < n; ++k) {
    const Complex fk = f(eig.values[k]);
    for (int i = 0; i < n; ++i) scaled(i, k) *= fk;
  }
  return scaled * dagger(eig.vectors);
}

ComplexMatrix unitary_exp(const ComplexMatrix& hermitian, double s) {
  const auto eig = hermitian_eigensystem(hermitian);
  const int n = hermitian.rows();
  ComplexMatrix scaled = eig.vectors;
  for (int k = 0; k < n; ++k) {
    const Complex phase = std::exp(Complex(0.0, s * eig.values[k]));
    for (int i = 0; i < n; ++i) scaled(i, k) *= phase;
  }
  return scaled * dagger(eig.vectors);
}

}  // namespace cqm
