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

#include "qcorr/quantum.hpp"

#include <cmath>
#include <numeric>

namespace qcorr {

DensityMatrix::DensityMatrix(ComplexMatrix mat, const ToleranceProfile& tol)
    : mat_(std::move(mat)) {
  require_square(mat_);
  const double defect = hermiticity_defect(mat_);
  if (defect > tol.state_tol) {
    throw InvalidState("state is not Hermitian (defect " + std::to_string(defect) + ")");
  }
  mat_ = 0.5 * (mat_ + mat_.adjoint());
  const double tr = mat_.trace().real();
  if (std::abs(tr - 1.0) > tol.state_tol) {
    throw InvalidState("state trace " + std::to_string(tr) + " is not 1");
  }
  const SpectralDecomposition eig = eig_hermitian(mat_, tol.state_tol);
  if (eig.eigenvalues.minCoeff() < -tol.state_tol) {
    throw InvalidState("state has negative eigenvalue " +
                       std::to_string(eig.eigenvalues.minCoeff()));
  }
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
  const double n = psi.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw InvalidState("pure state vector must be nonzero and finite");
  }
  const ComplexVector unit = psi / n;
  return DensityMatrix(unit * unit.adjoint());
}

std::optional<std::size_t> Observable::find_value(double a, double tol) const {
  for (std::size_t i = 0; i < spectrum_.size(); ++i) {
    if (std::abs(spectrum_[i].value - a) <= tol) return i;
  }
  return std::nullopt;
}

Observable make_observable(const ComplexMatrix& m, double cluster_tol, double herm_tol) {
  const SpectralDecomposition eig = eig_hermitian(m, herm_tol);
  Observable obs;
  obs.mat_ = 0.5 * (m + m.adjoint());
  const Eigen::Index d = m.rows();
  Eigen::Index i = 0;
  while (i < d) {
    Eigen::Index j = i + 1;
    // chain clustering: neighbors within cluster_tol join the same point
    while (j < d && eig.eigenvalues(j) - eig.eigenvalues(j - 1) <= cluster_tol) ++j;
    ComplexMatrix proj = ComplexMatrix::Zero(d, d);
    double mean = 0.0;
    for (Eigen::Index k = i; k < j; ++k) {
      proj += eig.eigenvectors.col(k) * eig.eigenvectors.col(k).adjoint();
      mean += eig.eigenvalues(k);
    }
    mean /= static_cast<double>(j - i);
    obs.spectrum_.push_back(SpectralPoint{mean, std::move(proj)});
    i = j;
  }
  return obs;
}

Instrument::Instrument(std::vector<Outcome> outcomes, const ToleranceProfile& tol)
    : outcomes_(std::move(outcomes)) {
  if (outcomes_.empty()) throw InvalidInstrument("instrument needs at least one outcome");
  Eigen::Index d = -1;
  for (const Outcome& out : outcomes_) {
    if (out.kraus.empty()) {
      throw InvalidInstrument("outcome '" + out.label + "' has no Kraus operators");
    }
    for (const ComplexMatrix& k : out.kraus) {
      require_square(k);
      if (d < 0) d = k.rows();
      if (k.rows() != d) throw DimensionMismatch("Kraus operators differ in dimension");
    }
  }
  ComplexMatrix total = ComplexMatrix::Zero(d, d);
  for (const Outcome& out : outcomes_) {
    for (const ComplexMatrix& k : out.kraus) total += k.adjoint() * k;
  }
  const double defect = op_norm(total - ComplexMatrix::Identity(d, d));
  if (defect > tol.state_tol) {
    throw InvalidInstrument("completeness defect " + std::to_string(defect));
  }
  for (std::size_t m = 0; m < outcomes_.size(); ++m) {
    const SpectralDecomposition eig = eig_hermitian(povm_element(m), tol.state_tol);
    if (eig.eigenvalues.minCoeff() < -tol.state_tol) {
      throw InvalidInstrument("POVM element of outcome '" + outcomes_[m].label +
                              "' is not positive semidefinite");
    }
  }
}

std::size_t Instrument::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < outcomes_.size(); ++i) {
    if (outcomes_[i].label == label) return i;
  }
  throw UnknownOutcome("no outcome labeled '" + label + "'");
}

ComplexMatrix Instrument::povm_element(std::size_t m) const {
  if (m >= outcomes_.size()) throw UnknownOutcome("outcome index out of range");
  const Eigen::Index d = dim();
  ComplexMatrix e = ComplexMatrix::Zero(d, d);
  for (const ComplexMatrix& k : outcomes_[m].kraus) e += k.adjoint() * k;
  return e;
}

Hamiltonian::Hamiltonian(ComplexMatrix mat, double herm_tol) : mat_(std::move(mat)) {
  const double defect = hermiticity_defect(mat_);
  if (defect > herm_tol) {
    throw NotHermitian("Hamiltonian defect " + std::to_string(defect));
  }
  mat_ = 0.5 * (mat_ + mat_.adjoint());
}

Instrument lueders_instrument(const Observable& a) {
  std::vector<Outcome> outcomes;
  outcomes.reserve(a.num_points());
  for (const SpectralPoint& p : a.spectrum()) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", p.value);
    outcomes.push_back(Outcome{buf, {p.projector}, p.value});
  }
  return Instrument(std::move(outcomes));
}

std::pair<double, std::optional<DensityMatrix>> apply_selective(const Instrument& m,
                                                                std::size_t outcome,
                                                                const DensityMatrix& rho,
                                                                double weight_floor) {
  if (outcome >= m.num_outcomes()) throw UnknownOutcome("outcome index out of range");
  if (m.dim() != rho.dim()) throw DimensionMismatch("instrument/state dimension mismatch");
  const Eigen::Index d = rho.dim();
  ComplexMatrix post = ComplexMatrix::Zero(d, d);
  for (const ComplexMatrix& k : m.outcomes()[outcome].kraus) {
    post += k * rho.mat() * k.adjoint();
  }
  const double weight = post.trace().real();
  if (weight <= weight_floor) return {weight, std::nullopt};
  return {weight, DensityMatrix(post / weight)};
}

std::pair<double, std::optional<DensityMatrix>> apply_selective(const Instrument& m,
                                                                const std::string& label,
                                                                const DensityMatrix& rho,
                                                                double weight_floor) {
  return apply_selective(m, m.index_of(label), rho, weight_floor);
}

DensityMatrix apply_nonselective(const Instrument& m, const DensityMatrix& rho) {
  if (m.dim() != rho.dim()) throw DimensionMismatch("instrument/state dimension mismatch");
  const Eigen::Index d = rho.dim();
  ComplexMatrix post = ComplexMatrix::Zero(d, d);
  for (const Outcome& out : m.outcomes()) {
    for (const ComplexMatrix& k : out.kraus) post += k * rho.mat() * k.adjoint();
  }
  return DensityMatrix(std::move(post));
}

ComplexMatrix evolution_unitary(const Hamiltonian& h, double t) {
  const SpectralDecomposition eig = eig_hermitian(h.mat());
  const Eigen::Index d = h.dim();
  ComplexVector phases(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    phases(i) = std::exp(Complex(0.0, -eig.eigenvalues(i) * t));
  }
  return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
}

DensityMatrix evolve(const DensityMatrix& rho, const Hamiltonian& h, double t) {
  if (rho.dim() != h.dim()) throw DimensionMismatch("state/Hamiltonian dimension mismatch");
  const ComplexMatrix u = evolution_unitary(h, t);
  return DensityMatrix(u * rho.mat() * u.adjoint());
}

Observable evolve(const Observable& a, const Hamiltonian& h, double t, double cluster_tol) {
  if (a.dim() != h.dim()) {
    throw DimensionMismatch("observable/Hamiltonian dimension mismatch");
  }
  const ComplexMatrix u = evolution_unitary(h, t);
  return make_observable(u.adjoint() * a.mat() * u, cluster_tol);
}

std::vector<std::pair<double, double>> born(const DensityMatrix& rho, const Observable& a) {
  if (rho.dim() != a.dim()) throw DimensionMismatch("state/observable dimension mismatch");
  std::vector<std::pair<double, double>> dist;
  dist.reserve(a.num_points());
  for (const SpectralPoint& p : a.spectrum()) {
    dist.emplace_back(p.value, (rho.mat() * p.projector).trace().real());
  }
  return dist;
}

}  // namespace qcorr
