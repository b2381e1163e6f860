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

#include "qcorr/quantum.hpp"

namespace qcorr::qubit {

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Throws InvalidBloch when x² + y² + z² exceeds 1 (beyond roundoff).
void validate_bloch(const BlochVector& r, double tol = 1e-9);

DensityMatrix bloch_state(const BlochVector& r);

Observable sigma_z_observable();

/// σθ = cosθ·σz + sinθ·σx.
Observable sigma_theta_observable(double theta);

/// Every benchmark quantity of the A = σz, B = σθ pair on one Bloch state.
/// Probability tables are indexed in ascending spectral order
/// (index 0 ↔ eigenvalue −1, index 1 ↔ +1); p_ba is indexed (b, a).
struct QubitQuantities {
  double p_ab[2][2] = {};
  double p_ba[2][2] = {};
  double tv = 0.0;
  double inv_a = 0.0;
  double inv_b = 0.0;
  double delta_ab = 0.0;  // Δ_A(B;ρ)
  double delta_ba = 0.0;  // Δ_B(A;ρ)
  double anticommutator_norm_sum = 0.0;   // Σ_{a,b} ‖{P_A(a),P_B(b)}/2‖
  double commutator_norm_sum_a = 0.0;     // Σ_{a,b} ‖P_A(a)[P_A(a),P_B(b)]‖
  double commutator_norm_sum_b = 0.0;     // Σ_{a,b} ‖P_B(b)[P_B(b),P_A(a)]‖
  double upper_bound = 0.0;  // min{…}·Inv_A + min{…}·Inv_B
  double lower_bound = 0.0;  // max{Δ_A(B;ρ), Δ_B(A;ρ)}
  double commutator_expect_im = 0.0;      // ⟨[A,B]⟩ is purely imaginary
  double commutator_second_moment = 0.0;  // tr[−[A,B]² ρ]
};

/// All quantities evaluated through the full numerical pipeline
/// (spectral decomposition, sequential joints, trace norms, channel maps).
QubitQuantities compute_numeric(double theta, const BlochVector& r);

/// The same quantities from their closed forms:
///   P^{A→B}(a→b) = (1 + ab·cosθ)(1 + a⟨σz⟩)/4
///   P^{B→A}(b→a) = (1 + ab·cosθ)(1 + b⟨σθ⟩)/4
///   TV           = max{|sinθ⟨σx⟩|, |sinθ(−sinθ⟨σz⟩ + cosθ⟨σx⟩)|}
///   Inv_A        = √(⟨σx⟩² + ⟨σy⟩²)
///   Inv_B        = √((−sinθ⟨σz⟩ + cosθ⟨σx⟩)² + ⟨σy⟩²)
///   Δ_A(B;ρ)     = |sinθ⟨σx⟩|,  Δ_B(A;ρ) = |sinθ(−sinθ⟨σz⟩ + cosθ⟨σx⟩)|
///   Σ‖{P,Q}/2‖   = 1 + √((1+cosθ)²+sin²θ)/2 + √((1−cosθ)²+sin²θ)/2
///   Σ‖P[P,Q]‖    = 2|sinθ|   (four cells of operator norm |sinθ|/2 each)
///   ⟨[A,B]⟩      = 2i·sinθ⟨σy⟩,  tr[−[A,B]²ρ] = 4sin²θ
QubitQuantities compute_closed(double theta, const BlochVector& r);

/// The TV distance in its equivalent two-term form
/// (1+cosθ)/2·|(1−cosθ)⟨σz⟩ − sinθ⟨σx⟩| + (1−cosθ)/2·|(1+cosθ)⟨σz⟩ + sinθ⟨σx⟩|.
double tv_piecewise_form(double theta, const BlochVector& r);

}  // namespace qcorr::qubit
