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

#include "qcorr/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "qcorr/json_io.hpp"
#include "qcorr/parallel.hpp"
#include "qcorr/random.hpp"
#include "qcorr/rng.hpp"

namespace qcorr {

std::string inequality_name(InequalityId id) {
  switch (id) {
    case InequalityId::CorrUpper:
      return "corr_upper";
    case InequalityId::CorrOrderUpper:
      return "corr_order_upper";
    case InequalityId::SupCorr:
      return "sup_corr";
    case InequalityId::ProbUpper:
      return "prob_upper";
    case InequalityId::ProbOrderUpper:
      return "prob_order_upper";
    case InequalityId::ProbLower:
      return "prob_lower";
    case InequalityId::ProbOrderLower:
      return "prob_order_lower";
    case InequalityId::PovmUpper:
      return "povm_upper";
    case InequalityId::InvDeltaDuality:
      return "inv_delta_duality";
  }
  throw InvalidArgument("corrupt inequality id");
}

InequalityId inequality_from_name(const std::string& name) {
  for (InequalityId id :
       {InequalityId::CorrUpper, InequalityId::CorrOrderUpper, InequalityId::SupCorr,
        InequalityId::ProbUpper, InequalityId::ProbOrderUpper, InequalityId::ProbLower,
        InequalityId::ProbOrderLower, InequalityId::PovmUpper,
        InequalityId::InvDeltaDuality}) {
    if (inequality_name(id) == name) return id;
  }
  throw InvalidArgument("unknown inequality '" + name + "'");
}

namespace {

AuditReport finish_upper(InequalityId id, double lhs, double rhs, double tol,
                         nlohmann::json witness) {
  AuditReport report;
  report.id = id;
  report.lhs = lhs;
  report.rhs = rhs;
  report.slack = rhs - lhs;
  report.pass = report.slack >= -tol;
  report.witness = std::move(witness);
  return report;
}

AuditReport finish_lower(InequalityId id, double lhs, double rhs, double tol,
                         nlohmann::json witness) {
  AuditReport report;
  report.id = id;
  report.lhs = lhs;
  report.rhs = rhs;
  report.slack = lhs - rhs;
  report.pass = report.slack >= -tol;
  report.witness = std::move(witness);
  return report;
}

nlohmann::json witness_rho_ab(const DensityMatrix& rho, const Observable& a,
                              const Observable& b) {
  return nlohmann::json{{"rho", state_to_json(rho)},
                        {"A", observable_to_json(a)},
                        {"B", observable_to_json(b)}};
}

double lueders_invasiveness(const Observable& a, const DensityMatrix& rho) {
  return invasiveness_state(lueders_instrument(a), rho);
}

}  // namespace

AuditReport audit_corr_upper(const DensityMatrix& rho, const Observable& a,
                             const Observable& b, double alpha, double tol) {
  const double op = op_correlation(rho, a, b);
  const Complex alg = alg_correlation(rho, a, b, alpha);
  const double lhs = std::abs(Complex(op, 0.0) - alg);
  const double inv = lueders_invasiveness(a, rho);
  const double bound_product = op_norm(ordered_product(a.mat(), b.mat(), alpha)) * inv;
  double rhs = bound_product;
  nlohmann::json witness = witness_rho_ab(rho, a, b);
  witness["alpha"] = alpha;
  AuditReport report;
  if (alpha >= 0.0 && alpha <= 1.0) {
    // the ‖A‖‖B‖ shortcut only applies on the convex range
    const double bound_normprod = op_norm(a.mat()) * op_norm(b.mat()) * inv;
    rhs = std::min(bound_product, bound_normprod);
    report = finish_upper(InequalityId::CorrUpper, lhs, rhs, tol, std::move(witness));
    report.details["bound_normprod"] = bound_normprod;
  } else {
    report = finish_upper(InequalityId::CorrUpper, lhs, rhs, tol, std::move(witness));
  }
  report.details["bound_product"] = bound_product;
  report.details["invasiveness_a"] = inv;
  return report;
}

AuditReport audit_corr_order_upper(const DensityMatrix& rho, const Observable& a,
                                   const Observable& b, double alpha, double tol) {
  const double ab = op_correlation(rho, a, b);
  const double ba = op_correlation(rho, b, a);
  const double lhs = std::abs(ab - ba);
  const double inv_a = lueders_invasiveness(a, rho);
  const double inv_b = lueders_invasiveness(b, rho);
  const double rhs = op_norm(ordered_product(a.mat(), b.mat(), alpha)) * (inv_a + inv_b);
  nlohmann::json witness = witness_rho_ab(rho, a, b);
  witness["alpha"] = alpha;
  AuditReport report =
      finish_upper(InequalityId::CorrOrderUpper, lhs, rhs, tol, std::move(witness));
  report.details["corr_ab"] = ab;
  report.details["corr_ba"] = ba;
  report.details["invasiveness_a"] = inv_a;
  report.details["invasiveness_b"] = inv_b;
  return report;
}

AuditReport audit_sup_correlation(const Observable& a, const Observable& b, double alpha,
                                  const OptimizerConfig& cfg, double tol) {
  if (a.dim() != b.dim()) throw DimensionMismatch("observable dimensions differ");
  const Eigen::Index d = a.dim();

  // Operational objective operator: Σ_a a · P_A(a) B P_A(a). Its extreme
  // eigenvectors are the exact maximizers, so seed the search with them.
  ComplexMatrix g = ComplexMatrix::Zero(d, d);
  for (const SpectralPoint& p : a.spectrum()) {
    g += p.value * (p.projector * b.mat() * p.projector);
  }
  const SpectralDecomposition g_eig = eig_hermitian(g, 1e-7);
  std::vector<ComplexVector> op_seeds{g_eig.eigenvectors.col(0),
                                      g_eig.eigenvectors.col(d - 1)};
  const StateOptimum op_sup = maximize_over_pure_states(
      d, [&](const DensityMatrix& rho) { return std::abs(op_correlation(rho, a, b)); },
      cfg, op_seeds);

  // Algebraic side: numerical radius of A∘αB; seed with the extreme
  // eigenvectors of its Hermitian and anti-Hermitian parts.
  const ComplexMatrix prod = ordered_product(a.mat(), b.mat(), alpha);
  const SpectralDecomposition herm = eig_hermitian(0.5 * (prod + prod.adjoint()), 1e-7);
  const SpectralDecomposition skew = eig_hermitian(
      Complex(0.0, -0.5) * (prod - prod.adjoint()), 1e-7);
  std::vector<ComplexVector> alg_seeds{herm.eigenvectors.col(0),
                                       herm.eigenvectors.col(d - 1),
                                       skew.eigenvectors.col(0),
                                       skew.eigenvectors.col(d - 1)};
  const StateOptimum alg_sup = maximize_over_pure_states(
      d,
      [&](const DensityMatrix& rho) { return std::abs(alg_correlation(rho, a, b, alpha)); },
      cfg, alg_seeds);

  nlohmann::json witness{{"A", observable_to_json(a)},
                         {"B", observable_to_json(b)},
                         {"alpha", alpha},
                         {"op_witness", state_to_json(op_sup.argmax_state)},
                         {"alg_witness", state_to_json(alg_sup.argmax_state)}};
  AuditReport report = finish_upper(InequalityId::SupCorr, op_sup.value, alg_sup.value,
                                    tol, std::move(witness));
  report.details["op_evaluations"] = op_sup.iterations;
  report.details["alg_evaluations"] = alg_sup.iterations;
  if (op_sup.budget_exhausted || alg_sup.budget_exhausted) {
    report.notes = "optimizer budget exhausted; values are best-so-far";
  }
  return report;
}

namespace {

struct CellRef {
  std::size_t index_a;
  std::size_t index_b;
};

CellRef locate_cell(const Observable& a, const Observable& b, double value_a,
                    double value_b) {
  const auto ia = a.find_value(value_a);
  if (!ia) {
    throw ValueNotInSpectrum("value " + std::to_string(value_a) + " not in spectrum of A");
  }
  const auto ib = b.find_value(value_b);
  if (!ib) {
    throw ValueNotInSpectrum("value " + std::to_string(value_b) + " not in spectrum of B");
  }
  return CellRef{*ia, *ib};
}

}  // namespace

AuditReport audit_prob_upper(const DensityMatrix& rho, const Observable& a,
                             const Observable& b, double value_a, double value_b,
                             double alpha, double tol) {
  if (alpha < 0.0 || alpha > 1.0) {
    throw InvalidArgument("prob_upper requires alpha in [0,1]");
  }
  const CellRef cell = locate_cell(a, b, value_a, value_b);
  const ComplexMatrix& pa = a.spectrum()[cell.index_a].projector;
  const ComplexMatrix& pb = b.spectrum()[cell.index_b].projector;

  const JointDistribution joint = op_joint(rho, a, b);
  const double p_op = joint.probs(static_cast<Eigen::Index>(cell.index_a),
                                  static_cast<Eigen::Index>(cell.index_b));
  const QjpTable table = qjp(rho, a, b, Representation::alpha_family(alpha));
  const Complex p_alpha = table.weights(static_cast<Eigen::Index>(cell.index_a),
                                        static_cast<Eigen::Index>(cell.index_b));
  const double lhs = std::abs(Complex(p_op, 0.0) - p_alpha);

  const double norm_comm = op_norm(commutator(pa, pb));
  const double norm_jordan = op_norm(ordered_product(pa, pb, alpha));
  const double inv = lueders_invasiveness(a, rho);
  const double rhs = std::min(norm_comm, norm_jordan) * inv;

  nlohmann::json witness = witness_rho_ab(rho, a, b);
  witness["alpha"] = alpha;
  witness["a"] = value_a;
  witness["b"] = value_b;
  AuditReport report =
      finish_upper(InequalityId::ProbUpper, lhs, rhs, tol, std::move(witness));
  report.details["norm_commutator"] = norm_comm;
  report.details["norm_jordan"] = norm_jordan;
  report.details["invasiveness_a"] = inv;
  return report;
}

AuditReport audit_prob_order_upper(const DensityMatrix& rho, const Observable& a,
                                   const Observable& b, double value_a, double value_b,
                                   double alpha, double tol) {
  if (alpha < 0.0 || alpha > 1.0) {
    throw InvalidArgument("prob_order_upper requires alpha in [0,1]");
  }
  const CellRef cell = locate_cell(a, b, value_a, value_b);
  const ComplexMatrix& pa = a.spectrum()[cell.index_a].projector;
  const ComplexMatrix& pb = b.spectrum()[cell.index_b].projector;

  const JointDistribution ab = op_joint(rho, a, b);
  const JointDistribution ba = op_joint(rho, b, a);
  const double lhs = std::abs(ab.probs(static_cast<Eigen::Index>(cell.index_a),
                                       static_cast<Eigen::Index>(cell.index_b)) -
                              ba.probs(static_cast<Eigen::Index>(cell.index_b),
                                       static_cast<Eigen::Index>(cell.index_a)));
  const double norm_comm = op_norm(commutator(pa, pb));
  const double norm_jordan = op_norm(ordered_product(pa, pb, alpha));
  const double inv_a = lueders_invasiveness(a, rho);
  const double inv_b = lueders_invasiveness(b, rho);
  const double rhs = std::min(norm_comm, norm_jordan) * (inv_a + inv_b);

  nlohmann::json witness = witness_rho_ab(rho, a, b);
  witness["alpha"] = alpha;
  witness["a"] = value_a;
  witness["b"] = value_b;
  AuditReport report =
      finish_upper(InequalityId::ProbOrderUpper, lhs, rhs, tol, std::move(witness));
  report.details["norm_commutator"] = norm_comm;
  report.details["norm_jordan"] = norm_jordan;
  report.details["invasiveness_a"] = inv_a;
  report.details["invasiveness_b"] = inv_b;
  return report;
}

double tv_joint_vs_qjp(const JointDistribution& op, const QjpTable& table,
                       double value_tol) {
  if (op.a_values.size() != table.a_values.size()) {
    throw DimensionMismatch("tables disagree on the first-variable support");
  }
  for (std::size_t i = 0; i < op.a_values.size(); ++i) {
    if (std::abs(op.a_values[i] - table.a_values[i]) > value_tol) {
      throw DimensionMismatch("tables disagree on the first-variable support");
    }
  }
  // union of the second-variable supports; one-sided cells count fully
  std::vector<double> union_b = op.b_values;
  for (double bv : table.b_values) {
    bool found = false;
    for (double existing : union_b) {
      if (std::abs(existing - bv) <= value_tol) {
        found = true;
        break;
      }
    }
    if (!found) union_b.push_back(bv);
  }
  std::sort(union_b.begin(), union_b.end());

  auto column_of = [&](const std::vector<double>& values, double target) -> Eigen::Index {
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (std::abs(values[j] - target) <= value_tol) return static_cast<Eigen::Index>(j);
    }
    return -1;
  };

  double tv = 0.0;
  for (std::size_t i = 0; i < op.a_values.size(); ++i) {
    for (double bv : union_b) {
      const Eigen::Index j_op = column_of(op.b_values, bv);
      const Eigen::Index j_tab = column_of(table.b_values, bv);
      const Complex lhs =
          j_op >= 0 ? Complex(op.probs(static_cast<Eigen::Index>(i), j_op), 0.0)
                    : Complex(0.0, 0.0);
      const Complex rhs = j_tab >= 0
                              ? table.weights(static_cast<Eigen::Index>(i), j_tab)
                              : Complex(0.0, 0.0);
      tv += std::abs(lhs - rhs);
    }
  }
  return tv;
}

double tv_two_orders(const JointDistribution& ab, const JointDistribution& ba,
                     double value_tol) {
  if (ab.a_values.size() != ba.b_values.size() ||
      ab.b_values.size() != ba.a_values.size()) {
    throw DimensionMismatch("order tables do not transpose onto each other");
  }
  double tv = 0.0;
  for (std::size_t i = 0; i < ab.a_values.size(); ++i) {
    for (std::size_t j = 0; j < ab.b_values.size(); ++j) {
      if (std::abs(ab.a_values[i] - ba.b_values[i]) > value_tol ||
          std::abs(ab.b_values[j] - ba.a_values[j]) > value_tol) {
        throw DimensionMismatch("order tables do not transpose onto each other");
      }
      tv += std::abs(ab.probs(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) -
                     ba.probs(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)));
    }
  }
  return tv;
}

AuditReport audit_prob_lower(const DensityMatrix& rho, const Observable& a,
                             const Observable& b, const Representation& rep, double tol) {
  const JointDistribution joint = op_joint(rho, a, b);
  const QjpTable table = qjp(rho, a, b, rep);
  const double lhs = tv_joint_vs_qjp(joint, table);
  const double rhs = max_disturbance(lueders_instrument(a), b, rho);
  nlohmann::json witness = witness_rho_ab(rho, a, b);
  witness["rep"] = rep.to_string();
  AuditReport report =
      finish_lower(InequalityId::ProbLower, lhs, rhs, tol, std::move(witness));
  report.details["delta_a_of_b"] = rhs;
  return report;
}

AuditReport audit_prob_order_lower(const DensityMatrix& rho, const Observable& a,
                                   const Observable& b, double tol) {
  const JointDistribution ab = op_joint(rho, a, b);
  const JointDistribution ba = op_joint(rho, b, a);
  const double lhs = tv_two_orders(ab, ba);
  const double delta_ab = max_disturbance(lueders_instrument(a), b, rho);
  const double delta_ba = max_disturbance(lueders_instrument(b), a, rho);
  const double rhs = std::max(delta_ab, delta_ba);

  nlohmann::json witness = witness_rho_ab(rho, a, b);
  AuditReport report =
      finish_lower(InequalityId::ProbOrderLower, lhs, rhs, tol, std::move(witness));
  report.details["delta_a_of_b"] = delta_ab;
  report.details["delta_b_of_a"] = delta_ba;
  // state-dependent non-commutativity, recorded because TV = 0 does not
  // imply it vanishes
  const ComplexMatrix comm = commutator(a.mat(), b.mat());
  const Complex comm_expect = (rho.mat() * comm).trace();
  const double comm_second = (-(comm * comm) * rho.mat()).trace().real();
  report.details["commutator_expect_im"] = comm_expect.imag();
  report.details["commutator_second_moment"] = comm_second;
  if (lhs <= tol && comm_second > tol) {
    report.notes =
        "orders coincide in TV while state-dependent non-commutativity persists";
  }
  return report;
}

AuditReport audit_povm_upper(const DensityMatrix& rho, const Instrument& m,
                             const Instrument& n, std::size_t outcome_m,
                             std::size_t outcome_n, double alpha, double tol) {
  if (m.dim() != rho.dim() || n.dim() != rho.dim()) {
    throw DimensionMismatch("instrument/state dimension mismatch");
  }
  if (outcome_m >= m.num_outcomes() || outcome_n >= n.num_outcomes()) {
    throw UnknownOutcome("outcome index out of range");
  }
  const Eigen::Index d = rho.dim();
  const ComplexMatrix em = m.povm_element(outcome_m);
  const ComplexMatrix en = n.povm_element(outcome_n);

  // unnormalized selective update M_m(ρ)
  ComplexMatrix selected = ComplexMatrix::Zero(d, d);
  for (const ComplexMatrix& k : m.outcomes()[outcome_m].kraus) {
    selected += k * rho.mat() * k.adjoint();
  }
  const double p_op = (selected * en).trace().real();
  const Complex p_alg = (rho.mat() * ordered_product(em, en, alpha)).trace();
  const double lhs = std::abs(Complex(p_op, 0.0) - p_alg);

  const double inv = invasiveness_state(m, rho);
  const double term_invasiveness = op_norm(ordered_product(em, en, alpha)) * inv;

  ComplexMatrix rest_povm = ComplexMatrix::Zero(d, d);
  ComplexMatrix rest_update = ComplexMatrix::Zero(d, d);
  for (std::size_t mm = 0; mm < m.num_outcomes(); ++mm) {
    if (mm == outcome_m) continue;
    rest_povm += m.povm_element(mm);
    for (const ComplexMatrix& k : m.outcomes()[mm].kraus) {
      rest_update += k * rho.mat() * k.adjoint();
    }
  }
  const double term_nonrepeat =
      op_norm(en) * trace_norm(ordered_product(selected, rest_povm, alpha) +
                               ordered_product(rest_update, em, alpha));
  const double rhs = term_invasiveness + term_nonrepeat;

  nlohmann::json witness{{"rho", state_to_json(rho)},
                         {"M", instrument_to_json(m)},
                         {"N", instrument_to_json(n)},
                         {"m", outcome_m},
                         {"n", outcome_n},
                         {"alpha", alpha}};
  AuditReport report =
      finish_upper(InequalityId::PovmUpper, lhs, rhs, tol, std::move(witness));
  report.details["term_invasiveness"] = term_invasiveness;
  report.details["term_nonrepeat"] = term_nonrepeat;
  report.details["invasiveness_m"] = inv;
  return report;
}

AuditReport audit_inv_delta_duality(const Instrument& m, const DensityMatrix& rho,
                                    double tol) {
  const double lhs = invasiveness_state(m, rho);
  const ComplexMatrix shift = apply_nonselective(m, rho).mat() - rho.mat();
  const Observable sign = eigen_sign_observable(shift);
  const double rhs = max_disturbance(m, sign, rho);

  nlohmann::json witness{{"rho", state_to_json(rho)},
                         {"M", instrument_to_json(m)},
                         {"sign_witness", observable_to_json(sign)}};
  AuditReport report;
  report.id = InequalityId::InvDeltaDuality;
  report.lhs = lhs;
  report.rhs = rhs;
  report.slack = -std::abs(lhs - rhs);
  report.pass = report.slack >= -tol;
  report.witness = std::move(witness);
  return report;
}

namespace {

AuditReport campaign_trial(InequalityId id, const CampaignSpec& spec, int trial,
                           CounterRng rng) {
  const int dim = spec.dims[static_cast<std::size_t>(
      rng.uniform_int(0, static_cast<std::int64_t>(spec.dims.size()) - 1))];
  switch (id) {
    case InequalityId::CorrUpper: {
      const DensityMatrix rho = random_mixed_state(dim, rng);
      const Observable a = random_observable(dim, rng);
      const Observable b = random_observable(dim, rng);
      const double alpha = rng.uniform(-1.0, 2.0);
      return audit_corr_upper(rho, a, b, alpha, spec.tol_audit);
    }
    case InequalityId::CorrOrderUpper: {
      const DensityMatrix rho = random_mixed_state(dim, rng);
      const Observable a = random_observable(dim, rng);
      const Observable b = random_observable(dim, rng);
      const double alpha = rng.uniform(-1.0, 2.0);
      return audit_corr_order_upper(rho, a, b, alpha, spec.tol_audit);
    }
    case InequalityId::SupCorr: {
      const Observable a = random_observable(dim, rng);
      const Observable b = random_observable(dim, rng);
      const double alpha = rng.uniform(0.0, 1.0);
      OptimizerConfig cfg;
      cfg.seed = rng.next_u64();
      cfg.threads = 1;  // the campaign already parallelizes over trials
      return audit_sup_correlation(a, b, alpha, cfg);
    }
    case InequalityId::ProbUpper: {
      const DensityMatrix rho = random_mixed_state(dim, rng);
      const Observable a = random_observable(dim, rng);
      const Observable b = random_observable(dim, rng);
      const double alpha = rng.uniform(0.0, 1.0);
      const double va = a.spectrum()[static_cast<std::size_t>(rng.uniform_int(
                                         0, static_cast<std::int64_t>(a.num_points()) - 1))]
                            .value;
      const double vb = b.spectrum()[static_cast<std::size_t>(rng.uniform_int(
                                         0, static_cast<std::int64_t>(b.num_points()) - 1))]
                            .value;
      return audit_prob_upper(rho, a, b, va, vb, alpha, spec.tol_audit);
    }
    case InequalityId::ProbOrderUpper: {
      const DensityMatrix rho = random_mixed_state(dim, rng);
      const Observable a = random_observable(dim, rng);
      const Observable b = random_observable(dim, rng);
      const double alpha = rng.uniform(0.0, 1.0);
      const double va = a.spectrum()[static_cast<std::size_t>(rng.uniform_int(
                                         0, static_cast<std::int64_t>(a.num_points()) - 1))]
                            .value;
      const double vb = b.spectrum()[static_cast<std::size_t>(rng.uniform_int(
                                         0, static_cast<std::int64_t>(b.num_points()) - 1))]
                            .value;
      return audit_prob_order_upper(rho, a, b, va, vb, alpha, spec.tol_audit);
    }
    case InequalityId::ProbLower: {
      const DensityMatrix rho = random_mixed_state(dim, rng);
      const Observable a = random_observable(dim, rng);
      const Observable b = random_observable(dim, rng);
      Representation rep;
      switch (rng.uniform_int(0, 3)) {
        case 0:
          rep = Representation::kd();
          break;
        case 1:
          rep = Representation::mh();
          break;
        case 2:
          rep = Representation::alpha_family(rng.uniform(0.0, 1.0));
          break;
        default:
          rep = Representation::ss();
          break;
      }
      return audit_prob_lower(rho, a, b, rep, spec.tol_audit);
    }
    case InequalityId::ProbOrderLower: {
      const DensityMatrix rho = random_mixed_state(dim, rng);
      const Observable a = random_observable(dim, rng);
      const Observable b = random_observable(dim, rng);
      return audit_prob_order_lower(rho, a, b, spec.tol_audit);
    }
    case InequalityId::PovmUpper: {
      const DensityMatrix rho = random_mixed_state(dim, rng);
      const int outcomes_m = static_cast<int>(rng.uniform_int(2, 3));
      const int kraus_m = static_cast<int>(rng.uniform_int(1, 2));
      const int outcomes_n = static_cast<int>(rng.uniform_int(2, 3));
      const int kraus_n = static_cast<int>(rng.uniform_int(1, 2));
      const Instrument m = random_instrument(dim, outcomes_m, kraus_m, rng);
      const Instrument n = random_instrument(dim, outcomes_n, kraus_n, rng);
      const std::size_t om = static_cast<std::size_t>(rng.uniform_int(0, outcomes_m - 1));
      const std::size_t on = static_cast<std::size_t>(rng.uniform_int(0, outcomes_n - 1));
      const double alpha = rng.uniform(0.0, 1.0);
      return audit_povm_upper(rho, m, n, om, on, alpha, spec.tol_audit);
    }
    case InequalityId::InvDeltaDuality: {
      const DensityMatrix rho = random_mixed_state(dim, rng);
      const int outcomes_m = static_cast<int>(rng.uniform_int(2, 3));
      const int kraus_m = static_cast<int>(rng.uniform_int(1, 2));
      const Instrument m = random_instrument(dim, outcomes_m, kraus_m, rng);
      return audit_inv_delta_duality(m, rho, spec.tol_audit);
    }
  }
  throw InvalidArgument("corrupt inequality id");
}

}  // namespace

std::vector<AuditReport> run_campaign(const CampaignSpec& spec) {
  if (spec.trials < 1) throw InvalidArgument("campaign needs at least one trial");
  if (spec.dims.empty()) throw InvalidArgument("campaign needs at least one dimension");
  const std::size_t total =
      spec.inequalities.size() * static_cast<std::size_t>(spec.trials);
  std::vector<AuditReport> reports(total);
  const CounterRng root(spec.seed);
  parallel_for(total, spec.threads, [&](std::size_t flat) {
    const std::size_t which = flat / static_cast<std::size_t>(spec.trials);
    const int trial = static_cast<int>(flat % static_cast<std::size_t>(spec.trials));
    const InequalityId id = spec.inequalities[which];
    // stream depends only on (inequality, trial): stable under threading
    // and under selecting a subset of inequalities
    const std::uint64_t stream =
        (static_cast<std::uint64_t>(id) << 32) | static_cast<std::uint64_t>(trial);
    AuditReport report = campaign_trial(id, spec, trial, root.split(stream));
    report.witness["trial"] = trial;
    report.witness["seed"] = spec.seed;
    reports[flat] = std::move(report);
  });
  return reports;
}

}  // namespace qcorr
