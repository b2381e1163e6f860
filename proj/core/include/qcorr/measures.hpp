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
#include <functional>
#include <vector>

#include "qcorr/matrix.hpp"
#include "qcorr/quantum.hpp"

namespace qcorr {

struct OptimizerConfig {
  int restarts = 32;
  int budget = 10000;  // total objective evaluations across restarts
  std::uint64_t seed = 0x51D5EEDull;
  int threads = 0;  // 0 = hardware concurrency
};

/// Result of a state-space supremum search. `value` equals the objective
/// re-evaluated at `argmax_state`; `budget_exhausted` flags a best-so-far
/// answer returned after the evaluation budget ran out.
struct StateOptimum {
  double value;
  DensityMatrix argmax_state;
  int iterations;
  int restarts;
  bool budget_exhausted;
};

/// Inv_M(ρ) = ‖Λ_M(ρ) − ρ‖₁.
double invasiveness_state(const Instrument& m, const DensityMatrix& rho);

/// sup over states of Inv_M(ρ). Pure states suffice: the objective is convex
/// in ρ and pure states are the extreme points. Multi-start Nelder-Mead over
/// the pure-state chart; deterministic given (seed, restarts).
StateOptimum invasiveness_sup(const Instrument& m, const OptimizerConfig& cfg = {});

/// Generic pure-state maximizer shared by the bound audits. extra_seeds are
/// prepended to the random restarts (each consumes one restart slot's
/// budget on top of the configured restarts).
StateOptimum maximize_over_pure_states(
    Eigen::Index dim, const std::function<double(const DensityMatrix&)>& objective,
    const OptimizerConfig& cfg, const std::vector<ComplexVector>& extra_seeds = {});

/// δ_M(A) = Λ_M†(A) − A = Σ K†AK − A.
ComplexMatrix disturbance_operator(const Instrument& m, const Observable& a);

/// Δ_M(A;ρ): largest normalized expectation shift over functions of A.
/// On a finite spectrum the ℓ∞-ball supremum is attained at sign choices,
/// giving the closed form Σ_a |tr[(Λ_M(ρ)−ρ) P_A(a)]|.
double max_disturbance(const Instrument& m, const Observable& a, const DensityMatrix& rho);

/// Sign observable of a Hermitian matrix: spectral points from the
/// positive / zero / negative eigenspaces with values +1 / 0 / −1. This is
/// the witness observable attaining Inv_M(ρ) = sup_A Δ_M(A;ρ).
Observable eigen_sign_observable(const ComplexMatrix& hermitian, double zero_tol = 1e-12);

}  // namespace qcorr
