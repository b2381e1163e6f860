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

#include "qcorr/matrix.hpp"
#include "qcorr/quantum.hpp"
#include "qcorr/rng.hpp"

namespace qcorr {

/// Ginibre matrix with i.i.d. standard complex Gaussian entries.
ComplexMatrix ginibre(Eigen::Index rows, Eigen::Index cols, CounterRng& rng);

/// Haar-distributed unitary (QR of a Ginibre matrix with the R-diagonal
/// phase correction).
ComplexMatrix haar_unitary(Eigen::Index dim, CounterRng& rng);

ComplexVector random_unit_vector(Eigen::Index dim, CounterRng& rng);

DensityMatrix random_pure_state(Eigen::Index dim, CounterRng& rng);

/// Mixed state of uniformly sampled rank in {1..dim}: partial trace of a
/// Haar pure state over an environment of that dimension.
DensityMatrix random_mixed_state(Eigen::Index dim, CounterRng& rng);

/// GUE-style Hermitian matrix (Gaussian entries, symmetrized).
ComplexMatrix random_hermitian(Eigen::Index dim, CounterRng& rng);

Observable random_observable(Eigen::Index dim, CounterRng& rng, double cluster_tol = 1e-8);

/// ±alpha-valued observable with a random eigenbasis and random rank split.
Observable random_dichotomic(Eigen::Index dim, double alpha, CounterRng& rng);

/// Random instrument: Haar isometry from C^d into C^(d·K) cut into K Kraus
/// blocks, grouped into `num_outcomes` labeled outcomes (kraus_per_outcome
/// blocks each). Completeness holds by construction.
Instrument random_instrument(Eigen::Index dim, int num_outcomes, int kraus_per_outcome,
                             CounterRng& rng);

}  // namespace qcorr
