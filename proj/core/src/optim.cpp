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

#include "qcorr/optim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qcorr {

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, double step, int max_evals,
                             double xtol, double ftol) {
  const std::size_t n = x0.size();
  int evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return f(x);
  };

  std::vector<std::vector<double>> simplex(n + 1, x0);
  std::vector<double> values(n + 1);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += step;
  for (std::size_t i = 0; i <= n; ++i) values[i] = eval(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  while (evals < max_evals) {
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order[0];
    const std::size_t worst = order[n];
    const std::size_t second_worst = order[n - 1];

    double spread = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      spread = std::max(spread, std::abs(simplex[worst][i] - simplex[best][i]));
    }
    if (spread < xtol && std::abs(values[worst] - values[best]) < ftol) break;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i][k];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    auto blend = [&](double coeff) {
      std::vector<double> x(n);
      for (std::size_t k = 0; k < n; ++k) {
        x[k] = centroid[k] + coeff * (centroid[k] - simplex[worst][k]);
      }
      return x;
    };

    const std::vector<double> reflected = blend(1.0);
    const double fr = eval(reflected);
    if (fr < values[best]) {
      const std::vector<double> expanded = blend(2.0);
      const double fe = eval(expanded);
      if (fe < fr) {
        simplex[worst] = expanded;
        values[worst] = fe;
      } else {
        simplex[worst] = reflected;
        values[worst] = fr;
      }
    } else if (fr < values[second_worst]) {
      simplex[worst] = reflected;
      values[worst] = fr;
    } else {
      const std::vector<double> contracted = blend(-0.5);
      const double fc = eval(contracted);
      if (fc < values[worst]) {
        simplex[worst] = contracted;
        values[worst] = fc;
      } else {
        // shrink toward the best vertex
        for (std::size_t i = 0; i <= n; ++i) {
          if (i == best) continue;
          for (std::size_t k = 0; k < n; ++k) {
            simplex[i][k] = simplex[best][k] + 0.5 * (simplex[i][k] - simplex[best][k]);
          }
          values[i] = eval(simplex[i]);
        }
      }
    }
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (values[i] < values[best]) best = i;
  }
  return NelderMeadResult{simplex[best], values[best], evals};
}

ComplexVector pure_state_from_chart(const std::vector<double>& params, Eigen::Index dim) {
  const std::size_t d = static_cast<std::size_t>(dim);
  ComplexVector psi(dim);
  if (d == 1) {
    psi(0) = Complex(1.0, 0.0);
    return psi;
  }
  double running = 1.0;  // product of sines consumed so far
  for (std::size_t k = 0; k + 1 < d; ++k) {
    const double theta = params[k];
    psi(static_cast<Eigen::Index>(k)) = Complex(running * std::cos(theta), 0.0);
    running *= std::sin(theta);
  }
  psi(static_cast<Eigen::Index>(d - 1)) = Complex(running, 0.0);
  for (std::size_t k = 1; k < d; ++k) {
    const double phi = params[d - 2 + k];
    psi(static_cast<Eigen::Index>(k)) *= std::exp(Complex(0.0, phi));
  }
  return psi;
}

std::vector<double> chart_from_pure_state(const ComplexVector& psi) {
  const std::size_t d = static_cast<std::size_t>(psi.size());
  std::vector<double> params(2 * (d - 1), 0.0);
  if (d == 1) return params;
  ComplexVector unit = psi / psi.norm();
  // rotate the global phase so component 0 is real nonnegative
  if (std::abs(unit(0)) > 0.0) {
    unit *= std::exp(Complex(0.0, -std::arg(unit(0))));
  }
  double running = 1.0;
  for (std::size_t k = 0; k + 1 < d; ++k) {
    const double mag = std::abs(unit(static_cast<Eigen::Index>(k)));
    double c = running > 1e-300 ? mag / running : 1.0;
    c = std::clamp(c, -1.0, 1.0);
    const double theta = std::acos(c);
    params[k] = theta;
    running *= std::sin(theta);
  }
  for (std::size_t k = 1; k < d; ++k) {
    const Complex z = unit(static_cast<Eigen::Index>(k));
    params[d - 2 + k] = std::abs(z) > 0.0 ? std::arg(z) : 0.0;
  }
  return params;
}

}  // namespace qcorr
