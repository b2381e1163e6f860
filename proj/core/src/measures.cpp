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

#include "qcorr/measures.hpp"

#include <algorithm>
#include <cmath>

#include "qcorr/optim.hpp"
#include "qcorr/parallel.hpp"
#include "qcorr/random.hpp"
#include "qcorr/rng.hpp"

namespace qcorr {

double invasiveness_state(const Instrument& m, const DensityMatrix& rho) {
  if (m.dim() != rho.dim()) throw DimensionMismatch("instrument/state dimension mismatch");
  return trace_norm(apply_nonselective(m, rho).mat() - rho.mat());
}

StateOptimum maximize_over_pure_states(
    Eigen::Index dim, const std::function<double(const DensityMatrix&)>& objective,
    const OptimizerConfig& cfg, const std::vector<ComplexVector>& extra_seeds) {
  const int total_starts = cfg.restarts + static_cast<int>(extra_seeds.size());
  const int per_start = std::max(50, cfg.budget / std::max(1, total_starts));
  CounterRng seeder(cfg.seed);

  struct StartResult {
    double value = 0.0;
    std::vector<double> chart;
    int evals = 0;
  };
  std::vector<std::vector<double>> starts;
  starts.reserve(static_cast<std::size_t>(total_starts));
  for (const ComplexVector& seed_vec : extra_seeds) {
    starts.push_back(chart_from_pure_state(seed_vec));
  }
  for (int r = 0; r < cfg.restarts; ++r) {
    CounterRng rng = seeder.split(static_cast<std::uint64_t>(r));
    starts.push_back(chart_from_pure_state(random_unit_vector(dim, rng)));
  }

  auto negated = [&](const std::vector<double>& params) {
    return -objective(DensityMatrix::pure(pure_state_from_chart(params, dim)));
  };

  std::vector<StartResult> results(starts.size());
  parallel_for(starts.size(), cfg.threads, [&](std::size_t i) {
    const NelderMeadResult local = nelder_mead(negated, starts[i], 0.3, per_start);
    results[i] = StartResult{-local.value, local.x, local.evaluations};
  });

  int evals = 0;
  std::size_t best = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    evals += results[i].evals;
    if (results[i].value > results[best].value) best = i;
  }
  DensityMatrix argmax =
      DensityMatrix::pure(pure_state_from_chart(results[best].chart, dim));
  // re-evaluate so the reported value is exactly the objective at the witness
  const double value = objective(argmax);
  return StateOptimum{value, std::move(argmax), evals, total_starts, evals >= cfg.budget};
}

StateOptimum invasiveness_sup(const Instrument& m, const OptimizerConfig& cfg) {
  return maximize_over_pure_states(
      m.dim(), [&](const DensityMatrix& rho) { return invasiveness_state(m, rho); }, cfg);
}

ComplexMatrix disturbance_operator(const Instrument& m, const Observable& a) {
  if (m.dim() != a.dim()) {
    throw DimensionMismatch("instrument/observable dimension mismatch");
  }
  const Eigen::Index d = a.dim();
  ComplexMatrix heis = ComplexMatrix::Zero(d, d);
  for (const Outcome& out : m.outcomes()) {
    for (const ComplexMatrix& k : out.kraus) heis += k.adjoint() * a.mat() * k;
  }
  return heis - a.mat();
}

double max_disturbance(const Instrument& m, const Observable& a,
                       const DensityMatrix& rho) {
  if (m.dim() != a.dim() || m.dim() != rho.dim()) {
    throw DimensionMismatch("max_disturbance: operand dimensions differ");
  }
  const ComplexMatrix shift = apply_nonselective(m, rho).mat() - rho.mat();
  double total = 0.0;
  for (const SpectralPoint& p : a.spectrum()) {
    total += std::abs((shift * p.projector).trace().real());
  }
  return total;
}

Observable eigen_sign_observable(const ComplexMatrix& hermitian, double zero_tol) {
  const SpectralDecomposition eig = eig_hermitian(hermitian, 1e-9);
  const Eigen::Index d = hermitian.rows();
  ComplexMatrix sign = ComplexMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    double s = 0.0;
    if (eig.eigenvalues(i) > zero_tol) s = 1.0;
    if (eig.eigenvalues(i) < -zero_tol) s = -1.0;
    sign += s * (eig.eigenvectors.col(i) * eig.eigenvectors.col(i).adjoint());
  }
  return make_observable(sign, 1e-6);
}

}  // namespace qcorr
