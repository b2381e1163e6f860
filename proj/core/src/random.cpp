// Copyright 2026 The qcorr authors
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

#include "qcorr/random.hpp"

#include <cmath>
#include <string>
#include <vector>

#include <Eigen/QR>

namespace qcorr {

ComplexMatrix ginibre(Eigen::Index rows, Eigen::Index cols, CounterRng& rng) {
  ComplexMatrix g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      g(i, j) = Complex(rng.normal(), rng.normal()) / std::sqrt(2.0);
    }
  }
  return g;
}

ComplexMatrix haar_unitary(Eigen::Index dim, CounterRng& rng) {
  const ComplexMatrix g = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const Complex diag = r(j, j);
    const double mag = std::abs(diag);
    q.col(j) *= mag > 0.0 ? diag / mag : Complex(1.0, 0.0);
  }
  return q;
}

ComplexVector random_unit_vector(Eigen::Index dim, CounterRng& rng) {
  ComplexVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    v(i) = Complex(rng.normal(), rng.normal());
  }
  return v / v.norm();
}

DensityMatrix random_pure_state(Eigen::Index dim, CounterRng& rng) {
  return DensityMatrix::pure(random_unit_vector(dim, rng));
}

DensityMatrix random_mixed_state(Eigen::Index dim, CounterRng& rng) {
  const Eigen::Index env = 1 + static_cast<Eigen::Index>(rng.uniform_int(0, dim - 1));
  const ComplexMatrix g = ginibre(dim, env, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(std::move(rho));
}

ComplexMatrix random_hermitian(Eigen::Index dim, CounterRng& rng) {
  const ComplexMatrix g = ginibre(dim, dim, rng);
  return 0.5 * (g + g.adjoint());
}

Observable random_observable(Eigen::Index dim, CounterRng& rng, double cluster_tol) {
  return make_observable(random_hermitian(dim, rng), cluster_tol);
}

Observable random_dichotomic(Eigen::Index dim, double alpha, CounterRng& rng) {
  const ComplexMatrix u = haar_unitary(dim, rng);
  const Eigen::Index plus_rank = 1 + static_cast<Eigen::Index>(rng.uniform_int(0, dim - 2));
  Eigen::VectorXd diag(dim);
  for (Eigen::Index i = 0; i < dim; ++i) diag(i) = i < plus_rank ? alpha : -alpha;
  const ComplexMatrix a =
      u * diag.asDiagonal().toDenseMatrix().cast<Complex>() * u.adjoint();
  return make_observable(a);
}

Instrument random_instrument(Eigen::Index dim, int num_outcomes, int kraus_per_outcome,
                             CounterRng& rng) {
  const int total_kraus = num_outcomes * kraus_per_outcome;
  const ComplexMatrix u = haar_unitary(dim * total_kraus, rng);
  const ComplexMatrix isometry = u.leftCols(dim);
  std::vector<Outcome> outcomes;
  int block = 0;
  for (int m = 0; m < num_outcomes; ++m) {
    Outcome out;
    out.label = "m" + std::to_string(m);
    for (int k = 0; k < kraus_per_outcome; ++k, ++block) {
      out.kraus.push_back(isometry.middleRows(block * dim, dim));
    }
    outcomes.push_back(std::move(out));
  }
  return Instrument(std::move(outcomes));
}

}  // namespace qcorr
