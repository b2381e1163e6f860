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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcorr/matrix.hpp"
#include "qcorr/quantum.hpp"

namespace qcorr {

/// The discrete quasi-joint-probability families.
///   KD     — tr[ρ P_A(a) P_B(b)], complex.
///   Alpha  — convex mixture of the two orderings, Re(KD) + i(2α−1)Im(KD).
///   MH     — Alpha at α = 1/2, real.
///   SS     — B-symmetrized kernel; the second variable lives on midpoints
///            (b+b')/2 of spectral pairs of B and may leave σ(B).
enum class RepKind { KD, Alpha, MH, SS };

/// Alternate convention for the alpha family: the real-valued combination
/// Re(KD) + α·Im(KD) instead of the convex mixture. Kept selectable because
/// the two coincide exactly whenever the table is real; every default uses
/// the convex mixture.
enum class AlphaConvention { ConvexMixture, RealPlusAlphaIm };

struct Representation {
  RepKind kind = RepKind::KD;
  double alpha = 0.5;
  AlphaConvention convention = AlphaConvention::ConvexMixture;

  static Representation kd() { return {RepKind::KD}; }
  static Representation mh() { return {RepKind::MH}; }
  static Representation ss() { return {RepKind::SS}; }
  static Representation alpha_family(double a,
                                     AlphaConvention c = AlphaConvention::ConvexMixture) {
    return {RepKind::Alpha, a, c};
  }

  /// Tag format used on the wire and the CLI: kd | mh | ss | alpha:VALUE.
  static Representation parse(const std::string& tag);
  std::string to_string() const;
};

/// Statistics of the sequential projective measurement A then B:
/// probs(i, j) = tr[P_A(a_i) ρ P_A(a_i) P_B(b_j)].
struct JointDistribution {
  std::vector<double> a_values;
  std::vector<double> b_values;
  Eigen::MatrixXd probs;

  double total() const { return probs.sum(); }
};

/// A finite grid of (a, b) value pairs with complex weights; both marginals
/// reproduce the respective Born distributions (for SS the b-marginal is
/// recovered at spectral points after the midpoint bookkeeping).
struct QjpTable {
  Representation rep;
  std::vector<double> a_values;
  std::vector<double> b_values;
  Eigen::MatrixXcd weights;

  Complex total() const { return weights.sum(); }
  Eigen::VectorXcd a_marginal() const { return weights.rowwise().sum(); }
  Eigen::VectorXcd b_marginal() const { return weights.colwise().sum().transpose(); }
};

/// Empirical counts from sequential sampling; Σ counts = n.
struct SampleRecord {
  std::uint64_t seed = 0;
  std::int64_t n = 0;
  std::vector<double> a_values;
  std::vector<double> b_values;
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> counts;
};

JointDistribution op_joint(const DensityMatrix& rho, const Observable& a,
                           const Observable& b);

/// Σ ab over the sequential joint distribution.
double op_correlation(const DensityMatrix& rho, const Observable& a, const Observable& b);

/// tr[ρ (α AB + (1−α) BA)]. The real part does not depend on α.
Complex alg_correlation(const DensityMatrix& rho, const Observable& a, const Observable& b,
                        double alpha);

QjpTable qjp(const DensityMatrix& rho, const Observable& a, const Observable& b,
             const Representation& rep, double cluster_tol = 1e-8);

/// Moment-over-marginal slice of the table conditioned on the second
/// variable equal to `condition_value`. The slice is evaluated with the
/// conditioning projector adjacent to the state (conjugated weights), which
/// leaves real tables untouched and makes the Kirkwood-Dirac conditional
/// coincide with the standard post-selected value. Returns nullopt when the
/// slice marginal falls below weight_floor; throws ValueNotInSupport when
/// the value is not on the table's grid.
std::optional<Complex> quasi_cond_expect(const QjpTable& table, double condition_value,
                                         double weight_floor = 1e-12,
                                         double value_tol = 1e-9);

/// ⟨φ|A|ψ⟩ / ⟨φ|ψ⟩ for a rank-1 pre-state |ψ⟩⟨ψ| and post-selection vector
/// |φ⟩; nullopt when the overlap |⟨φ|ψ⟩|² falls below weight_floor.
std::optional<Complex> weak_value(const DensityMatrix& pre, const ComplexVector& post,
                                  const Observable& a, double weight_floor = 1e-12);

/// n i.i.d. sequential runs (draw a, Lüders update, draw b); bit-reproducible
/// for a fixed seed.
SampleRecord sample_sequential(const DensityMatrix& rho, const Observable& a,
                               const Observable& b, std::int64_t n, std::uint64_t seed);

}  // namespace qcorr
