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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcorr/matrix.hpp"
#include "qcorr/tolerance.hpp"

namespace qcorr {

/// Density operator: Hermitian, unit trace, positive semidefinite
/// (all within ToleranceProfile::state_tol at construction).
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix mat, const ToleranceProfile& tol = {});

  /// Rank-1 state |ψ⟩⟨ψ| from a (not necessarily normalized) vector.
  static DensityMatrix pure(const ComplexVector& psi);

  const ComplexMatrix& mat() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }

 private:
  ComplexMatrix mat_;
};

struct SpectralPoint {
  double value;
  ComplexMatrix projector;
};

/// Hermitian operator together with its clustered spectral family
/// {(a_i, P(a_i))}, eigenvalues strictly increasing.
class Observable {
 public:
  const ComplexMatrix& mat() const { return mat_; }
  const std::vector<SpectralPoint>& spectrum() const { return spectrum_; }
  Eigen::Index dim() const { return mat_.rows(); }
  std::size_t num_points() const { return spectrum_.size(); }

  /// Index of the spectral point whose eigenvalue matches `a` within `tol`,
  /// or nullopt.
  std::optional<std::size_t> find_value(double a, double tol = 1e-9) const;

 private:
  friend Observable make_observable(const ComplexMatrix&, double, double);
  ComplexMatrix mat_;
  std::vector<SpectralPoint> spectrum_;
};

/// Clusters eigenvalues that are within cluster_tol of their neighbor into
/// one spectral point. The merged projector is the sum of the constituent
/// rank-1 projectors (basis-independent under degeneracy) and the reported
/// eigenvalue is the degeneracy-weighted mean.
Observable make_observable(const ComplexMatrix& m, double cluster_tol = 1e-8,
                           double herm_tol = 1e-9);

/// One measurement outcome: an opaque label, the Kraus operators of its
/// completely positive map, and — for instruments derived from observables —
/// the eigenvalue carried through from clustering.
struct Outcome {
  std::string label;
  std::vector<ComplexMatrix> kraus;
  std::optional<double> value;
};

/// A labeled family of completely positive maps with Σ K†K = I.
class Instrument {
 public:
  explicit Instrument(std::vector<Outcome> outcomes, const ToleranceProfile& tol = {});

  const std::vector<Outcome>& outcomes() const { return outcomes_; }
  std::size_t num_outcomes() const { return outcomes_.size(); }
  Eigen::Index dim() const { return outcomes_.front().kraus.front().rows(); }

  std::size_t index_of(const std::string& label) const;

  /// POVM element E(m) = Σ_k K†K of the m-th outcome.
  ComplexMatrix povm_element(std::size_t m) const;

 private:
  std::vector<Outcome> outcomes_;
};

class Hamiltonian {
 public:
  explicit Hamiltonian(ComplexMatrix mat, double herm_tol = 1e-9);
  const ComplexMatrix& mat() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }

 private:
  ComplexMatrix mat_;
};

/// Projective measurement of A: one outcome per spectral point with the
/// single Kraus operator P(a).
Instrument lueders_instrument(const Observable& a);

/// Selective update: returns (weight, post-state). The post-state is
/// nullopt when the weight falls below weight_floor.
std::pair<double, std::optional<DensityMatrix>> apply_selective(
    const Instrument& m, std::size_t outcome, const DensityMatrix& rho,
    double weight_floor = 1e-12);

/// Label-addressed variant; throws UnknownOutcome.
std::pair<double, std::optional<DensityMatrix>> apply_selective(
    const Instrument& m, const std::string& label, const DensityMatrix& rho,
    double weight_floor = 1e-12);

/// Non-selective update Σ_{m,k} K ρ K†.
DensityMatrix apply_nonselective(const Instrument& m, const DensityMatrix& rho);

/// U ρ U† with U = exp(−iHt) built from the spectral decomposition of H;
/// exact to solver precision, no series truncation.
DensityMatrix evolve(const DensityMatrix& rho, const Hamiltonian& h, double t);

/// Heisenberg-picture observable U†(t) A U(t), re-clustered. Evolution
/// preserves the spectrum; the clustering is a numerical formality.
Observable evolve(const Observable& a, const Hamiltonian& h, double t,
                  double cluster_tol = 1e-8);

ComplexMatrix evolution_unitary(const Hamiltonian& h, double t);

/// Born distribution {(a_i, tr[ρ P(a_i)])}.
std::vector<std::pair<double, double>> born(const DensityMatrix& rho, const Observable& a);

}  // namespace qcorr
