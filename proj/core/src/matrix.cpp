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

#include "qcorr/matrix.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace qcorr {

void require_square(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw DimensionMismatch("matrix must be square and nonempty, got " +
                            std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  if (!finite_entries(m)) {
    throw InvalidArgument("matrix has non-finite entries");
  }
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("dimension mismatch: " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                            "x" + std::to_string(b.cols()));
  }
}

bool finite_entries(const ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
    }
  }
  return true;
}

double hermiticity_defect(const ComplexMatrix& m) {
  require_square(m);
  return op_norm(m - m.adjoint());
}

SpectralDecomposition eig_hermitian(const ComplexMatrix& m, double herm_tol) {
  require_square(m);
  const double defect = op_norm(m - m.adjoint());
  if (defect > herm_tol) {
    throw NotHermitian("Hermiticity defect " + std::to_string(defect) +
                       " exceeds tolerance " + std::to_string(herm_tol));
  }
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw NumericalFailure("Hermitian eigensolver did not converge");
  }
  return SpectralDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

double trace_norm(const ComplexMatrix& m) {
  require_square(m);
  // Hermitian inputs are the common case: Σ|λ| is cheaper and exact.
  if (op_norm(m - m.adjoint()) <= 1e-12 * (1.0 + m.norm())) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (m + m.adjoint()));
    if (solver.info() != Eigen::Success) {
      throw NumericalFailure("Hermitian eigensolver did not converge");
    }
    return solver.eigenvalues().cwiseAbs().sum();
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues().sum();
}

double op_norm(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw DimensionMismatch("op_norm expects a square nonempty matrix");
  }
  if (!finite_entries(m)) {
    throw InvalidArgument("matrix has non-finite entries");
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues().maxCoeff();
}

}  // namespace qcorr
