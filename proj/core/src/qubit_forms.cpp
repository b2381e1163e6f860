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

#include "qcorr/qubit_forms.hpp"

#include <cmath>

#include "qcorr/bounds.hpp"
#include "qcorr/correlations.hpp"
#include "qcorr/measures.hpp"

namespace qcorr::qubit {

namespace {

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

}  // namespace

void validate_bloch(const BlochVector& r, double tol) {
  const double norm2 = r.x * r.x + r.y * r.y + r.z * r.z;
  if (!(norm2 <= 1.0 + tol) || !std::isfinite(norm2)) {
    throw InvalidBloch("Bloch vector length " + std::to_string(std::sqrt(norm2)) +
                       " exceeds 1");
  }
}

DensityMatrix bloch_state(const BlochVector& r) {
  validate_bloch(r);
  ComplexMatrix m = 0.5 * (ComplexMatrix::Identity(2, 2) + r.x * pauli_x() +
                           r.y * pauli_y() + r.z * pauli_z());
  // clip roundoff from boundary states so validation does not trip
  return DensityMatrix(std::move(m), ToleranceProfile{.state_tol = 1e-7});
}

Observable sigma_z_observable() { return make_observable(pauli_z()); }

Observable sigma_theta_observable(double theta) {
  return make_observable(std::cos(theta) * pauli_z() + std::sin(theta) * pauli_x());
}

QubitQuantities compute_numeric(double theta, const BlochVector& r) {
  const DensityMatrix rho = bloch_state(r);
  const Observable a = sigma_z_observable();
  const Observable b = sigma_theta_observable(theta);

  QubitQuantities q;
  const JointDistribution ab = op_joint(rho, a, b);
  const JointDistribution ba = op_joint(rho, b, a);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      q.p_ab[i][j] = ab.probs(i, j);
      q.p_ba[i][j] = ba.probs(i, j);
    }
  }
  q.tv = tv_two_orders(ab, ba);

  const Instrument lueders_a = lueders_instrument(a);
  const Instrument lueders_b = lueders_instrument(b);
  q.inv_a = invasiveness_state(lueders_a, rho);
  q.inv_b = invasiveness_state(lueders_b, rho);
  q.delta_ab = max_disturbance(lueders_a, b, rho);
  q.delta_ba = max_disturbance(lueders_b, a, rho);

  for (const SpectralPoint& pa : a.spectrum()) {
    for (const SpectralPoint& pb : b.spectrum()) {
      q.anticommutator_norm_sum +=
          op_norm(0.5 * anticommutator(pa.projector, pb.projector));
      q.commutator_norm_sum_a +=
          op_norm(pa.projector * commutator(pa.projector, pb.projector));
      q.commutator_norm_sum_b +=
          op_norm(pb.projector * commutator(pb.projector, pa.projector));
    }
  }
  q.upper_bound = std::min(q.anticommutator_norm_sum, q.commutator_norm_sum_a) * q.inv_a +
                  std::min(q.anticommutator_norm_sum, q.commutator_norm_sum_b) * q.inv_b;
  q.lower_bound = std::max(q.delta_ab, q.delta_ba);

  const ComplexMatrix comm = commutator(a.mat(), b.mat());
  q.commutator_expect_im = (rho.mat() * comm).trace().imag();
  q.commutator_second_moment = (-(comm * comm) * rho.mat()).trace().real();
  return q;
}

QubitQuantities compute_closed(double theta, const BlochVector& r) {
  validate_bloch(r);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double m = c * r.z + s * r.x;  // ⟨σθ⟩

  QubitQuantities q;
  const double values[2] = {-1.0, 1.0};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double first = values[i];   // outcome of the first measurement
      const double second = values[j];  // outcome of the second
      q.p_ab[i][j] = 0.25 * (1.0 + first * second * c) * (1.0 + first * r.z);
      q.p_ba[i][j] = 0.25 * (1.0 + first * second * c) * (1.0 + first * m);
    }
  }
  q.delta_ab = std::abs(s * r.x);
  q.delta_ba = std::abs(s * (-s * r.z + c * r.x));
  q.tv = std::max(q.delta_ab, q.delta_ba);
  q.inv_a = std::sqrt(r.x * r.x + r.y * r.y);
  const double transverse_b = -s * r.z + c * r.x;
  q.inv_b = std::sqrt(transverse_b * transverse_b + r.y * r.y);
  q.anticommutator_norm_sum = 1.0 + 0.5 * std::sqrt((1.0 + c) * (1.0 + c) + s * s) +
                              0.5 * std::sqrt((1.0 - c) * (1.0 - c) + s * s);
  q.commutator_norm_sum_a = 2.0 * std::abs(s);
  q.commutator_norm_sum_b = 2.0 * std::abs(s);
  q.upper_bound = std::min(q.anticommutator_norm_sum, q.commutator_norm_sum_a) * q.inv_a +
                  std::min(q.anticommutator_norm_sum, q.commutator_norm_sum_b) * q.inv_b;
  q.lower_bound = std::max(q.delta_ab, q.delta_ba);
  q.commutator_expect_im = 2.0 * s * r.y;
  q.commutator_second_moment = 4.0 * s * s;
  return q;
}

double tv_piecewise_form(double theta, const BlochVector& r) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return 0.5 * (1.0 + c) * std::abs((1.0 - c) * r.z - s * r.x) +
         0.5 * (1.0 - c) * std::abs((1.0 + c) * r.z + s * r.x);
}

}  // namespace qcorr::qubit
