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

#pragma once

#include <complex>

#include <Eigen/Dense>

#include "qcorr/errors.hpp"
#include "qcorr/tolerance.hpp"

namespace qcorr {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Eigensystem of a Hermitian matrix: ascending eigenvalues and the unitary
/// whose columns are the matching eigenvectors, so that
/// eigenvectors * diag(eigenvalues) * eigenvectors† reconstructs the input.
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;
  ComplexMatrix eigenvectors;

  ComplexMatrix reconstruct() const {
    return eigenvectors * eigenvalues.asDiagonal().toDenseMatrix().cast<Complex>() *
           eigenvectors.adjoint();
  }
};

/// ‖M − M†‖ (operator norm); zero for exactly Hermitian input.
double hermiticity_defect(const ComplexMatrix& m);

bool finite_entries(const ComplexMatrix& m);

/// Diagonalizes (M + M†)/2. Throws NotHermitian when the Hermiticity defect
/// exceeds herm_tol and NumericalFailure if the eigensolver does not
/// converge. Symmetrizing instead of rejecting keeps decimal-rounded
/// user input usable.
SpectralDecomposition eig_hermitian(const ComplexMatrix& m, double herm_tol = 1e-9);

/// Sum of singular values; computed as Σ|λ| from the eigendecomposition
/// when the input is Hermitian within tolerance.
double trace_norm(const ComplexMatrix& m);

/// Largest singular value.
double op_norm(const ComplexMatrix& m);

inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

inline ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b + b * a;
}

/// The ordering-weighted product α·AB + (1−α)·BA.
inline ComplexMatrix ordered_product(const ComplexMatrix& a, const ComplexMatrix& b,
                                     double alpha) {
  return alpha * (a * b) + (1.0 - alpha) * (b * a);
}

void require_square(const ComplexMatrix& m);
void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qcorr
