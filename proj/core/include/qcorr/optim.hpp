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

#include <functional>
#include <vector>

#include "qcorr/matrix.hpp"

namespace qcorr {

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
};

/// Derivative-free simplex minimizer. Suited to the nonsmooth trace-norm
/// objectives here, where gradient steps are unreliable. Runs until the
/// simplex collapses below xtol/ftol or the evaluation budget is spent.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, double step, int max_evals,
                             double xtol = 1e-10, double ftol = 1e-12);

/// Chart over pure states: 2(d−1) unconstrained reals (d−1 mixing angles,
/// d−1 relative phases) -> unit vector with a real first component.
ComplexVector pure_state_from_chart(const std::vector<double>& params, Eigen::Index dim);

/// Inverse chart (up to global phase); pure_state_from_chart round-trips it.
std::vector<double> chart_from_pure_state(const ComplexVector& psi);

}  // namespace qcorr
