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

#include "cqm/closedform.hpp"

#include <cmath>
#include <vector>

#include "cqm/eigensolver.hpp"
#include "cqm/errors.hpp"

namespace cqm {

namespace {

// V^dag rho V, damp element (k,l) by exp(-(w_k - w_l)^2 t / 2), V ... V^dag.
ComplexMatrix damp_in_basis(const ComplexMatrix& rho, const ComplexMatrix& v,
                            const std::vector<double>& w, double t) {
  const int n = rho.rows();
  ComplexMatrix transformed = dagger(v) * rho * v;
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      const double gap = w[k] - w[l];
      transformed(k, l) *= std::exp(-0.5 * gap * gap * t);
    }
  }
  return v * transformed * dagger(v);
}

}  // namespace

DensityMatrix gaussian_solution(const HermitianObservable& o_c, const DensityMatrix& rho0,
                                double t) {
  if (o_c.dim() != rho0.dim()) {
    throw DimensionError("gaussian_solution: observable and state dimensions differ");
  }
  if (t < 0.0) throw DimensionError("gaussian_solution requires t >= 0");
  if (t == 0.0) return rho0;
  const auto eig = hermitian_eigensystem(o_c.matrix());
  ComplexMatrix out = damp_in_basis(rho0.matrix(), eig.vectors, eig.values, t);
  return DensityMatrix::validated(hermitian_part(out));
}

DensityMatrix additive_reduced_state(const AdditiveObservable& obs, const DensityMatrix& rho_r0,
                                     double t) {
  if (obs.a_r.dim() != rho_r0.dim()) {
    throw DimensionError("additive_reduced_state: A_R and rho_R dimensions differ");
  }
  if (t < 0.0) throw DimensionError("additive_reduced_state requires t >= 0");
  if (t == 0.0) return rho_r0;
  const auto eig = hermitian_eigensystem(obs.a_r.matrix());
  ComplexMatrix out = damp_in_basis(rho_r0.matrix(), eig.vectors, eig.values, t);
  return DensityMatrix::validated(hermitian_part(out));
}

DensityMatrix multiplicative_elements(const MultiplicativeObservable& obs,
                                      const DensityMatrix& rho_c0, double t) {
  const int n_r = obs.a_r.dim();
  const int n_s = obs.b_s.dim();
  if (rho_c0.dim() != n_r * n_s) {
    throw DimensionError("multiplicative_elements: state must live on the product space");
  }
  if (t < 0.0) throw DimensionError("multiplicative_elements requires t >= 0");
  if (t == 0.0) return rho_c0;

  const auto eig_a = hermitian_eigensystem(obs.a_r.matrix());
  const auto eig_b = hermitian_eigensystem(obs.b_s.matrix());
  const ComplexMatrix v = tensor_product(eig_a.vectors, eig_b.vectors);

  // Joint eigenvalues of A x B on the product basis (i, alpha) -> i*n_s + alpha.
  std::vector<double> w(static_cast<std::size_t>(n_r) * n_s);
  for (int i = 0; i < n_r; ++i) {
    for (int alpha = 0; alpha < n_s; ++alpha) {
      w[static_cast<std::size_t>(i) * n_s + alpha] = eig_a.values[i] * eig_b.values[alpha];
    }
  }
  ComplexMatrix out = damp_in_basis(rho_c0.matrix(), v, w, t);
  return DensityMatrix::validated(hermitian_part(out));
}

double multiplicative_entropy_rate(const MultiplicativeObservable& obs,
                                   const DensityMatrix& rho_c0, double t) {
  const int n_r = obs.a_r.dim();
  const int n_s = obs.b_s.dim();
  if (rho_c0.dim() != n_r * n_s) {
    throw DimensionError("multiplicative_entropy_rate: state must live on the product space");
  }
  if (t < 0.0) throw DimensionError("multiplicative_entropy_rate requires t >= 0");

  const auto eig_a = hermitian_eigensystem(obs.a_r.matrix());
  const auto eig_b = hermitian_eigensystem(obs.b_s.matrix());
  const ComplexMatrix v = tensor_product(eig_a.vectors, eig_b.vectors);
  const ComplexMatrix rho = dagger(v) * rho_c0.matrix() * v;

  const auto idx = [n_s](int part_r, int part_s) { return part_r * n_s + part_s; };

  Complex rate(0.0, 0.0);
  for (int i = 0; i < n_r; ++i) {
    for (int j = 0; j < n_r; ++j) {
      const double gap = eig_a.values[i] - eig_a.values[j];
      if (gap == 0.0) continue;
      for (int alpha = 0; alpha < n_s; ++alpha) {
        const double b_a = eig_b.values[alpha];
        for (int beta = 0; beta < n_s; ++beta) {
          const double b_b = eig_b.values[beta];
          const double damping = std::exp(-0.5 * (b_a * b_a + b_b * b_b) * gap * gap * t);
          rate += gap * gap * b_b * b_b * damping * rho(idx(i, alpha), idx(j, alpha)) *
                  rho(idx(j, beta), idx(i, beta));
        }
      }
    }
  }
  return rate.real();
}

double multiplicative_entropy_rate_uncorrelated(const MultiplicativeObservable& obs,
                                                const DensityMatrix& rho_r0,
                                                const DensityMatrix& rho_s0, double t) {
  if (obs.a_r.dim() != rho_r0.dim() || obs.b_s.dim() != rho_s0.dim()) {
    throw DimensionError("multiplicative_entropy_rate_uncorrelated: dimension mismatch");
  }
  if (t < 0.0) throw DimensionError("multiplicative_entropy_rate_uncorrelated requires t >= 0");

  const auto eig_a = hermitian_eigensystem(obs.a_r.matrix());
  const auto eig_b = hermitian_eigensystem(obs.b_s.matrix());
  const ComplexMatrix r = dagger(eig_a.vectors) * rho_r0.matrix() * eig_a.vectors;
  const ComplexMatrix s = dagger(eig_b.vectors) * rho_s0.matrix() * eig_b.vectors;
  const int n_r = obs.a_r.dim();
  const int n_s = obs.b_s.dim();

  double rate = 0.0;
  for (int i = 0; i < n_r; ++i) {
    for (int j = 0; j < n_r; ++j) {
      const double gap = eig_a.values[i] - eig_a.values[j];
      if (gap == 0.0) continue;
      const double r_ij_sq = std::norm(r(i, j));
      if (r_ij_sq == 0.0) continue;
      for (int alpha = 0; alpha < n_s; ++alpha) {
        const double b_a = eig_b.values[alpha];
        const double pop_a = s(alpha, alpha).real();
        for (int beta = 0; beta < n_s; ++beta) {
          const double b_b = eig_b.values[beta];
          const double damping = std::exp(-0.5 * (b_a * b_a + b_b * b_b) * gap * gap * t);
          rate += gap * gap * b_b * b_b * damping * r_ij_sq * pop_a * s(beta, beta).real();
        }
      }
    }
  }
  return rate;
}

}  // namespace cqm
