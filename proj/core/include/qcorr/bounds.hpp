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
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qcorr/correlations.hpp"
#include "qcorr/measures.hpp"
#include "qcorr/quantum.hpp"

namespace qcorr {

enum class InequalityId {
  CorrUpper,
  CorrOrderUpper,
  SupCorr,
  ProbUpper,
  ProbOrderUpper,
  ProbLower,
  ProbOrderLower,
  PovmUpper,
  InvDeltaDuality,
};

std::string inequality_name(InequalityId id);
InequalityId inequality_from_name(const std::string& name);

/// One verified inequality instance. slack is oriented so that slack >= 0
/// means the bound holds (rhs − lhs for upper bounds, lhs − rhs for lower
/// bounds, −|lhs − rhs| for equalities); pass <=> slack >= −tol.
struct AuditReport {
  InequalityId id = InequalityId::CorrUpper;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool pass = false;
  nlohmann::json witness;
  std::map<std::string, double> details;
  std::string notes;
};

/// |⟨A→B⟩op − ⟨A∘αB⟩ρ| ≤ ‖A∘αB‖·Inv_A(ρ); for α∈[0,1] the looser
/// ‖A‖‖B‖·Inv_A(ρ) also applies and the minimum is used.
AuditReport audit_corr_upper(const DensityMatrix& rho, const Observable& a,
                             const Observable& b, double alpha, double tol = 1e-9);

/// |⟨A→B⟩op − ⟨B→A⟩op| ≤ ‖A∘αB‖·(Inv_A(ρ) + Inv_B(ρ)).
AuditReport audit_corr_order_upper(const DensityMatrix& rho, const Observable& a,
                                   const Observable& b, double alpha, double tol = 1e-9);

/// sup_ρ|⟨A→B⟩op| ≤ sup_ρ|⟨A∘αB⟩ρ|; both sides estimated by the multi-start
/// pure-state optimizer, the operational side seeded with the eigenvectors
/// of its objective operator Σ_a a·P_A(a) B P_A(a).
AuditReport audit_sup_correlation(const Observable& a, const Observable& b, double alpha,
                                  const OptimizerConfig& cfg = {}, double tol = 1e-6);

/// |P^{A→B}(a→b) − P^α(a,b)| ≤ min{‖[P_A(a),P_B(b)]‖, ‖P_A(a)∘αP_B(b)‖}·Inv_A(ρ),
/// for α ∈ [0,1].
AuditReport audit_prob_upper(const DensityMatrix& rho, const Observable& a,
                             const Observable& b, double value_a, double value_b,
                             double alpha, double tol = 1e-9);

/// Same per-cell bound with (Inv_A(ρ) + Inv_B(ρ)) for the two orders.
AuditReport audit_prob_order_upper(const DensityMatrix& rho, const Observable& a,
                                   const Observable& b, double value_a, double value_b,
                                   double alpha, double tol = 1e-9);

/// ‖P^{A→B} − P^#‖_TV ≥ Δ_A(B;ρ) for the given representation.
AuditReport audit_prob_lower(const DensityMatrix& rho, const Observable& a,
                             const Observable& b, const Representation& rep,
                             double tol = 1e-9);

/// ‖P^{A→B} − P^{B→A}‖_TV ≥ max{Δ_A(B;ρ), Δ_B(A;ρ)}.
AuditReport audit_prob_order_lower(const DensityMatrix& rho, const Observable& a,
                                   const Observable& b, double tol = 1e-9);

/// POVM-level upper bound: invasiveness term plus the non-repeatability
/// trace-norm term, both itemized in `details`.
AuditReport audit_povm_upper(const DensityMatrix& rho, const Instrument& m,
                             const Instrument& n, std::size_t outcome_m,
                             std::size_t outcome_n, double alpha, double tol = 1e-9);

/// Inv_M(ρ) = Δ_M(A*;ρ) at the eigen-sign witness A* of Λ_M(ρ)−ρ.
AuditReport audit_inv_delta_duality(const Instrument& m, const DensityMatrix& rho,
                                    double tol = 1e-9);

/// Total variation of the difference over the union support: cells present
/// on only one side contribute their full absolute weight. Grid values are
/// matched within value_tol.
double tv_joint_vs_qjp(const JointDistribution& op, const QjpTable& table,
                       double value_tol = 1e-9);

/// TV between the two measurement orders over σ(A)×σ(B); the B→A table is
/// transposed onto the A→B grid.
double tv_two_orders(const JointDistribution& ab, const JointDistribution& ba,
                     double value_tol = 1e-9);

struct CampaignSpec {
  std::vector<int> dims{2, 3, 4, 6};
  int trials = 1000;
  std::uint64_t seed = 0x51D5EEDull;
  std::vector<InequalityId> inequalities{
      InequalityId::CorrUpper,      InequalityId::CorrOrderUpper,
      InequalityId::ProbUpper,      InequalityId::ProbOrderUpper,
      InequalityId::ProbLower,      InequalityId::ProbOrderLower,
      InequalityId::PovmUpper,      InequalityId::InvDeltaDuality,
  };
  double tol_audit = 1e-9;
  int threads = 0;
};

/// Randomized audit campaign: Haar pure/mixed states, GUE observables,
/// Haar-isometry instruments. Deterministic given the seed — every trial
/// derives its own generator stream from (inequality, trial index), so
/// reports do not depend on threading or on which other inequalities run.
/// Reports are ordered by (inequality, trial).
std::vector<AuditReport> run_campaign(const CampaignSpec& spec);

}  // namespace qcorr
