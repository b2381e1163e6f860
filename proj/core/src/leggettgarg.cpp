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

#include "qcorr/leggettgarg.hpp"

#include <algorithm>
#include <cmath>

#include "qcorr/optim.hpp"
#include "qcorr/parallel.hpp"

namespace qcorr {

namespace {

void require_dichotomic_pm1(const Observable& obs, double tol) {
  if (obs.num_points() != 2 || std::abs(obs.spectrum()[0].value + 1.0) > tol ||
      std::abs(obs.spectrum()[1].value - 1.0) > tol) {
    throw NonDichotomic("the K functional needs a ±1-valued observable");
  }
}

void require_ordered(const LgScenario& s) {
  if (!(s.t1 <= s.t2 && s.t2 <= s.t3)) {
    throw InvalidArgument("scenario times must satisfy t1 <= t2 <= t3");
  }
}

KResult finish(KMode mode, const Representation& rep, double c12, double c23, double c13) {
  KResult r;
  r.mode = mode;
  r.rep = rep;
  r.c12 = c12;
  r.c23 = c23;
  r.c13 = c13;
  r.k = c12 + c23 - c13;
  r.violates = r.k > 1.0 + 1e-9;
  return r;
}

}  // namespace

KResult lg_k(const LgScenario& s, KMode mode, const KOptions& options) {
  require_ordered(s);
  require_dichotomic_pm1(s.obs, options.cluster_tol);
  const Observable a1 = evolve(s.obs, s.h, s.t1, options.cluster_tol);
  const Observable a2 = evolve(s.obs, s.h, s.t2, options.cluster_tol);
  const Observable a3 = evolve(s.obs, s.h, s.t3, options.cluster_tol);

  switch (mode) {
    case KMode::Operational:
      return finish(mode, options.rep, op_correlation(s.rho0, a1, a2),
                    op_correlation(s.rho0, a2, a3), op_correlation(s.rho0, a1, a3));
    case KMode::AlgebraicSym: {
      auto sym = [&](const Observable& x, const Observable& y) {
        return alg_correlation(s.rho0, x, y, 0.5).real();
      };
      return finish(mode, options.rep, sym(a1, a2), sym(a2, a3), sym(a1, a3));
    }
    case KMode::Quasi:
      break;
  }

  // Quasi reading: first and last measurements are real, the middle value
  // is the representation's conditional expectation given the last outcome.
  const Instrument first = lueders_instrument(a1);
  double c12 = 0.0;
  double c23 = 0.0;
  double c13 = 0.0;
  bool midpoint_excluded = false;
  for (std::size_t i = 0; i < a1.num_points(); ++i) {
    const auto [w1, post] = apply_selective(first, i, s.rho0, options.weight_floor);
    if (!post) continue;
    const double v1 = a1.spectrum()[i].value;
    const QjpTable table = qjp(*post, a2, a3, options.rep, options.cluster_tol);

    if (options.rep.kind == RepKind::SS) {
      // weight present at off-spectrum midpoints is excluded from the
      // conditional sum; remember that it was there
      for (std::size_t j = 0; j < table.b_values.size(); ++j) {
        if (a3.find_value(table.b_values[j], options.cluster_tol)) continue;
        double column_mass = 0.0;
        for (Eigen::Index row = 0; row < table.weights.rows(); ++row) {
          column_mass += std::abs(table.weights(row, static_cast<Eigen::Index>(j)));
        }
        if (column_mass > options.weight_floor) midpoint_excluded = true;
      }
    }

    for (const SpectralPoint& p3 : a3.spectrum()) {
      const double joint_weight = w1 * (post->mat() * p3.projector).trace().real();
      if (joint_weight <= options.weight_floor) continue;
      std::optional<Complex> conditional;
      try {
        conditional = quasi_cond_expect(table, p3.value, options.weight_floor,
                                        options.cluster_tol);
      } catch (const ValueNotInSupport&) {
        conditional = std::nullopt;
      }
      if (!conditional) {
        throw UndefinedConditional("conditional at outcome " + std::to_string(p3.value) +
                                   " carries weight but is undefined");
      }
      const double middle = conditional->real();
      c12 += v1 * middle * joint_weight;
      c23 += middle * p3.value * joint_weight;
      c13 += v1 * p3.value * joint_weight;
    }
  }
  KResult r = finish(KMode::Quasi, options.rep, c12, c23, c13);
  r.midpoint_excluded = midpoint_excluded;
  return r;
}

LgTemplate standard_qubit_template(double omega) {
  ComplexMatrix sz(2, 2);
  sz << 1, 0, 0, -1;
  ComplexMatrix sx(2, 2);
  sx << 0, 1, 1, 0;
  ComplexVector z_plus(2);
  z_plus << 1, 0;
  return LgTemplate{DensityMatrix::pure(z_plus), Hamiltonian(0.5 * omega * sx),
                    make_observable(sz)};
}

std::vector<ScanCell> lg_scan(const LgTemplate& tmpl, const std::vector<double>& t_grid,
                              const std::vector<double>& T_grid, KMode mode,
                              const KOptions& options, int threads) {
  std::vector<ScanCell> cells(t_grid.size() * T_grid.size());
  parallel_for(cells.size(), threads, [&](std::size_t flat) {
    const std::size_t it = flat / T_grid.size();
    const std::size_t iT = flat % T_grid.size();
    ScanCell cell;
    cell.t = t_grid[it];
    cell.T = T_grid[iT];
    if (cell.t <= cell.T && cell.t >= 0.0) {
      const LgScenario s{tmpl.rho0, tmpl.h, 0.0, cell.t, cell.T, tmpl.obs};
      try {
        cell.result = lg_k(s, mode, options);
        cell.defined = true;
      } catch (const UndefinedConditional&) {
        cell.defined = false;
        cell.result.defined = false;
      }
    }
    cells[flat] = cell;
  });
  return cells;
}

ScanMax locate_scan_max(const std::vector<ScanCell>& cells) {
  ScanMax best;
  best.k = -1e300;
  for (const ScanCell& cell : cells) {
    if (cell.defined && cell.result.k > best.k) {
      best = ScanMax{cell.t, cell.T, cell.result.k};
    }
  }
  return best;
}

ScanMax refine_scan_max(const LgTemplate& tmpl, KMode mode, const KOptions& options,
                        const ScanMax& start, int max_evals) {
  auto objective = [&](const std::vector<double>& x) {
    const double t = x[0];
    const double T = x[1];
    if (!(t >= 0.0 && t <= T)) return 1e300;
    const LgScenario s{tmpl.rho0, tmpl.h, 0.0, t, T, tmpl.obs};
    try {
      return -lg_k(s, mode, options).k;
    } catch (const UndefinedConditional&) {
      return 1e300;
    }
  };
  const NelderMeadResult polished =
      nelder_mead(objective, {start.t, start.T}, 0.02, max_evals, 1e-12, 1e-14);
  if (-polished.value <= start.k) return start;
  return ScanMax{polished.x[0], polished.x[1], -polished.value};
}

double lg_kd_closed_form(double phase_t, double phase_T) {
  return 2.0 * std::cos(0.5 * phase_T) * std::cos(0.5 * phase_T - phase_t) -
         std::cos(phase_T);
}

double lg_ss_closed_form(double phase_t, double phase_T) {
  return 0.5 * std::cos(phase_t) + std::cos(phase_T - phase_t) +
         0.5 * std::cos(2.0 * phase_T - phase_t) - std::cos(phase_T);
}

DichotomyWitness dichotomy_gap(const Observable& a) {
  if (a.num_points() < 2) {
    throw TrivialObservable("observable has a single spectral point");
  }
  std::size_t best_i = 0;
  std::size_t best_j = 1;
  double best_sum = -1.0;
  for (std::size_t i = 0; i < a.num_points(); ++i) {
    for (std::size_t j = i + 1; j < a.num_points(); ++j) {
      const double sum = std::abs(a.spectrum()[i].value + a.spectrum()[j].value);
      if (sum > best_sum) {
        best_sum = sum;
        best_i = i;
        best_j = j;
      }
    }
  }
  auto range_vector = [](const ComplexMatrix& projector) {
    Eigen::Index pick = 0;
    projector.diagonal().real().maxCoeff(&pick);
    ComplexVector v = projector.col(pick);
    return ComplexVector(v / v.norm());
  };
  const ComplexVector u = range_vector(a.spectrum()[best_i].projector);
  const ComplexVector v = range_vector(a.spectrum()[best_j].projector);

  DichotomyWitness witness;
  witness.eigenvalue_first = a.spectrum()[best_i].value;
  witness.eigenvalue_second = a.spectrum()[best_j].value;
  witness.gap = 0.5 * best_sum;
  witness.witness_b = u * v.adjoint() + v * u.adjoint();
  witness.witness_rho = DensityMatrix::pure((u + v) / std::sqrt(2.0));
  return witness;
}

}  // namespace qcorr
