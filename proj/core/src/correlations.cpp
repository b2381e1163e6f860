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

#include "qcorr/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "qcorr/rng.hpp"

namespace qcorr {

Representation Representation::parse(const std::string& tag) {
  if (tag == "kd") return kd();
  if (tag == "mh") return mh();
  if (tag == "ss") return ss();
  if (tag.rfind("alpha:", 0) == 0) {
    std::size_t pos = 0;
    const std::string value = tag.substr(6);
    double a = 0.0;
    try {
      a = std::stod(value, &pos);
    } catch (const std::exception&) {
      throw UnknownRepresentation("bad alpha value in representation tag '" + tag + "'");
    }
    if (pos != value.size() || !std::isfinite(a)) {
      throw UnknownRepresentation("bad alpha value in representation tag '" + tag + "'");
    }
    return alpha_family(a);
  }
  throw UnknownRepresentation("unknown representation tag '" + tag + "'");
}

std::string Representation::to_string() const {
  switch (kind) {
    case RepKind::KD:
      return "kd";
    case RepKind::MH:
      return "mh";
    case RepKind::SS:
      return "ss";
    case RepKind::Alpha: {
      char buf[48];
      std::snprintf(buf, sizeof(buf), "alpha:%.17g", alpha);
      return buf;
    }
  }
  throw UnknownRepresentation("corrupt representation kind");
}

JointDistribution op_joint(const DensityMatrix& rho, const Observable& a,
                           const Observable& b) {
  if (rho.dim() != a.dim() || rho.dim() != b.dim()) {
    throw DimensionMismatch("op_joint: operand dimensions differ");
  }
  JointDistribution joint;
  for (const SpectralPoint& p : a.spectrum()) joint.a_values.push_back(p.value);
  for (const SpectralPoint& q : b.spectrum()) joint.b_values.push_back(q.value);
  joint.probs.resize(static_cast<Eigen::Index>(joint.a_values.size()),
                     static_cast<Eigen::Index>(joint.b_values.size()));
  for (std::size_t i = 0; i < a.spectrum().size(); ++i) {
    const ComplexMatrix post =
        a.spectrum()[i].projector * rho.mat() * a.spectrum()[i].projector;
    for (std::size_t j = 0; j < b.spectrum().size(); ++j) {
      double p = (post * b.spectrum()[j].projector).trace().real();
      if (p < 0.0 && p > -1e-12) p = 0.0;  // roundoff clip only
      joint.probs(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = p;
    }
  }
  return joint;
}

double op_correlation(const DensityMatrix& rho, const Observable& a, const Observable& b) {
  const JointDistribution joint = op_joint(rho, a, b);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < joint.probs.rows(); ++i) {
    for (Eigen::Index j = 0; j < joint.probs.cols(); ++j) {
      sum += joint.a_values[static_cast<std::size_t>(i)] *
             joint.b_values[static_cast<std::size_t>(j)] * joint.probs(i, j);
    }
  }
  return sum;
}

Complex alg_correlation(const DensityMatrix& rho, const Observable& a, const Observable& b,
                        double alpha) {
  if (rho.dim() != a.dim() || rho.dim() != b.dim()) {
    throw DimensionMismatch("alg_correlation: operand dimensions differ");
  }
  const Complex ab = (rho.mat() * a.mat() * b.mat()).trace();
  const Complex ba = (rho.mat() * b.mat() * a.mat()).trace();
  return alpha * ab + (1.0 - alpha) * ba;
}

namespace {

QjpTable qjp_spectral_grid(const DensityMatrix& rho, const Observable& a,
                           const Observable& b, const Representation& rep) {
  QjpTable table;
  table.rep = rep;
  for (const SpectralPoint& p : a.spectrum()) table.a_values.push_back(p.value);
  for (const SpectralPoint& q : b.spectrum()) table.b_values.push_back(q.value);
  table.weights.resize(static_cast<Eigen::Index>(table.a_values.size()),
                       static_cast<Eigen::Index>(table.b_values.size()));
  for (std::size_t i = 0; i < a.spectrum().size(); ++i) {
    for (std::size_t j = 0; j < b.spectrum().size(); ++j) {
      const Complex kd =
          (rho.mat() * a.spectrum()[i].projector * b.spectrum()[j].projector).trace();
      Complex w = kd;
      if (rep.kind == RepKind::MH) {
        w = Complex(kd.real(), 0.0);
      } else if (rep.kind == RepKind::Alpha) {
        w = rep.convention == AlphaConvention::ConvexMixture
                ? Complex(kd.real(), (2.0 * rep.alpha - 1.0) * kd.imag())
                : Complex(kd.real() + rep.alpha * kd.imag(), 0.0);
      }
      table.weights(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = w;
    }
  }
  return table;
}

QjpTable qjp_semi_symmetrized(const DensityMatrix& rho, const Observable& a,
                              const Observable& b, double cluster_tol) {
  // Midpoint support: (b + b')/2 over ordered spectral pairs of B, merged
  // within cluster_tol. Kept sorted so the table grid is canonical.
  std::vector<double> midpoints;
  for (const SpectralPoint& q1 : b.spectrum()) {
    for (const SpectralPoint& q2 : b.spectrum()) {
      const double m = 0.5 * (q1.value + q2.value);
      bool found = false;
      for (double& existing : midpoints) {
        if (std::abs(existing - m) <= cluster_tol) {
          found = true;
          break;
        }
      }
      if (!found) midpoints.push_back(m);
    }
  }
  std::sort(midpoints.begin(), midpoints.end());

  QjpTable table;
  table.rep = Representation::ss();
  for (const SpectralPoint& p : a.spectrum()) table.a_values.push_back(p.value);
  table.b_values = midpoints;
  table.weights = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(table.a_values.size()),
                                         static_cast<Eigen::Index>(midpoints.size()));
  for (std::size_t i = 0; i < a.spectrum().size(); ++i) {
    for (const SpectralPoint& q1 : b.spectrum()) {
      for (const SpectralPoint& q2 : b.spectrum()) {
        const double m = 0.5 * (q1.value + q2.value);
        std::size_t slot = 0;
        for (; slot < midpoints.size(); ++slot) {
          if (std::abs(midpoints[slot] - m) <= cluster_tol) break;
        }
        // kernel P_B(b') P_A(a) P_B(b), collected by midpoint
        table.weights(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(slot)) +=
            (rho.mat() * q2.projector * a.spectrum()[i].projector * q1.projector).trace();
      }
    }
  }
  return table;
}

}  // namespace

QjpTable qjp(const DensityMatrix& rho, const Observable& a, const Observable& b,
             const Representation& rep, double cluster_tol) {
  if (rho.dim() != a.dim() || rho.dim() != b.dim()) {
    throw DimensionMismatch("qjp: operand dimensions differ");
  }
  switch (rep.kind) {
    case RepKind::KD:
    case RepKind::MH:
    case RepKind::Alpha:
      return qjp_spectral_grid(rho, a, b, rep);
    case RepKind::SS:
      return qjp_semi_symmetrized(rho, a, b, cluster_tol);
  }
  throw UnknownRepresentation("corrupt representation kind");
}

std::optional<Complex> quasi_cond_expect(const QjpTable& table, double condition_value,
                                         double weight_floor, double value_tol) {
  Eigen::Index col = -1;
  for (std::size_t j = 0; j < table.b_values.size(); ++j) {
    if (std::abs(table.b_values[j] - condition_value) <= value_tol) {
      col = static_cast<Eigen::Index>(j);
      break;
    }
  }
  if (col < 0) {
    throw ValueNotInSupport("condition value " + std::to_string(condition_value) +
                            " is not on the table grid");
  }
  Complex moment(0.0, 0.0);
  Complex marginal(0.0, 0.0);
  for (Eigen::Index i = 0; i < table.weights.rows(); ++i) {
    const Complex w = std::conj(table.weights(i, col));
    moment += table.a_values[static_cast<std::size_t>(i)] * w;
    marginal += w;
  }
  if (std::abs(marginal) < weight_floor) return std::nullopt;
  return moment / marginal;
}

std::optional<Complex> weak_value(const DensityMatrix& pre, const ComplexVector& post,
                                  const Observable& a, double weight_floor) {
  if (pre.dim() != a.dim() || post.size() != a.dim()) {
    throw DimensionMismatch("weak_value: operand dimensions differ");
  }
  const SpectralDecomposition eig = eig_hermitian(pre.mat());
  const Eigen::Index top = pre.dim() - 1;  // ascending order: last is largest
  if (eig.eigenvalues(top) <= 1.0 - 1e-9) {
    throw NotPureState("pre-state largest eigenvalue " +
                       std::to_string(eig.eigenvalues(top)) + " below purity threshold");
  }
  const ComplexVector psi = eig.eigenvectors.col(top);
  const ComplexVector phi = post / post.norm();
  const Complex overlap = phi.dot(psi);  // Eigen dot conjugates the left side
  if (std::norm(overlap) < weight_floor) return std::nullopt;
  const Complex numerator = phi.dot(a.mat() * psi);
  return numerator / overlap;
}

SampleRecord sample_sequential(const DensityMatrix& rho, const Observable& a,
                               const Observable& b, std::int64_t n, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("sample_sequential requires n >= 1");
  if (rho.dim() != a.dim() || rho.dim() != b.dim()) {
    throw DimensionMismatch("sample_sequential: operand dimensions differ");
  }
  const std::size_t na = a.num_points();
  const std::size_t nb = b.num_points();

  // Precompute the outcome-a weights and per-a conditional b-distributions;
  // each draw is then two inverse-CDF lookups.
  std::vector<double> pa(na);
  std::vector<std::vector<double>> pb_given_a(na, std::vector<double>(nb, 0.0));
  for (std::size_t i = 0; i < na; ++i) {
    const ComplexMatrix post = a.spectrum()[i].projector * rho.mat() * a.spectrum()[i].projector;
    pa[i] = std::max(0.0, post.trace().real());
    if (pa[i] > 0.0) {
      for (std::size_t j = 0; j < nb; ++j) {
        pb_given_a[i][j] =
            std::max(0.0, (post * b.spectrum()[j].projector).trace().real() / pa[i]);
      }
    }
  }

  SampleRecord record;
  record.seed = seed;
  record.n = n;
  for (const SpectralPoint& p : a.spectrum()) record.a_values.push_back(p.value);
  for (const SpectralPoint& q : b.spectrum()) record.b_values.push_back(q.value);
  record.counts = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>::Zero(
      static_cast<Eigen::Index>(na), static_cast<Eigen::Index>(nb));

  CounterRng rng(seed);
  auto draw = [](const std::vector<double>& dist, double u) {
    double acc = 0.0;
    for (std::size_t k = 0; k + 1 < dist.size(); ++k) {
      acc += dist[k];
      if (u < acc) return k;
    }
    return dist.size() - 1;
  };
  for (std::int64_t run = 0; run < n; ++run) {
    const std::size_t i = draw(pa, rng.uniform());
    const std::size_t j = draw(pb_given_a[i], rng.uniform());
    record.counts(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) += 1;
  }
  return record;
}

}  // namespace qcorr
