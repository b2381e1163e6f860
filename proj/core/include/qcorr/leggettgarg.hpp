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

#include <vector>

#include "qcorr/correlations.hpp"
#include "qcorr/quantum.hpp"

namespace qcorr {

/// Three-time scenario for the K = C12 + C23 − C13 functional. Times may
/// coincide (t1 ≤ t2 ≤ t3): the semi-symmetrized maximum sits exactly at
/// t2 = t3 and every mode is continuous there. The observable must be
/// ±1-valued for the inequality to be meaningful; lg_k enforces that.
struct LgScenario {
  DensityMatrix rho0;
  Hamiltonian h;
  double t1;
  double t2;
  double t3;
  Observable obs;
};

enum class KMode { Operational, AlgebraicSym, Quasi };

struct KOptions {
  Representation rep = Representation::kd();
  /// Transparency knob for midpoint-supported representations: the middle
  /// value is always conditioned at spectral points of the final observable
  /// (off-spectrum support carries zero sequential weight), and with this
  /// flag set the result and scan cells additionally mark whenever the
  /// representation held weight at excluded off-spectrum midpoints.
  bool restrict_spectrum = false;
  double weight_floor = 1e-12;
  double cluster_tol = 1e-8;
};

struct KResult {
  KMode mode = KMode::Operational;
  Representation rep;  // meaningful for KMode::Quasi
  double c12 = 0.0;
  double c23 = 0.0;
  double c13 = 0.0;
  double k = 0.0;  // always c12 + c23 − c13
  bool violates = false;
  /// False when a required quasi-conditional expectation was undefined.
  bool defined = true;
  /// True when the representation carried weight at off-spectrum midpoints
  /// that the conditional sum excludes (semi-symmetrized case).
  bool midpoint_excluded = false;
};

/// K under the chosen reading.
///   Operational  — each C_ij from a fresh two-time sequential projective
///                  run of the Heisenberg-picture observables.
///   AlgebraicSym — C_ij = Re tr[ρ0 {A_i(t_i), A_j(t_j)}/2].
///   Quasi        — measure at t1 and t3, insert the quasi-conditional
///                  expectation of A(t2) for the middle value, weight by
///                  the sequential t1→t3 distribution.
/// Throws NonDichotomic unless σ(obs) ⊆ {−1,+1}; Quasi mode throws
/// UndefinedConditional when a conditional with nonzero sequential weight
/// is undefined.
KResult lg_k(const LgScenario& s, KMode mode, const KOptions& options = {});

/// Scan template: t1 = 0, (t2, t3) ranging over the grids.
struct LgTemplate {
  DensityMatrix rho0;
  Hamiltonian h;
  Observable obs;
};

/// ρ0 = |z+⟩⟨z+|, obs = σ_z, H = (ω/2)σ_x. With this generator scale the
/// survival amplitude is cos(ωT/2) and the scan grids are read directly in
/// the phase coordinates (ωt, ωT).
LgTemplate standard_qubit_template(double omega = 1.0);

struct ScanCell {
  double t = 0.0;  // = t2
  double T = 0.0;  // = t3
  KResult result;
  bool defined = false;  // false also for out-of-order cells (t > T)
};

/// K over the rectangular grid; cells run row-major in (t, T) with
/// deterministic ordering. Undefined conditionals mark the cell and the
/// scan continues.
std::vector<ScanCell> lg_scan(const LgTemplate& tmpl, const std::vector<double>& t_grid,
                              const std::vector<double>& T_grid, KMode mode,
                              const KOptions& options = {}, int threads = 0);

struct ScanMax {
  double t = 0.0;
  double T = 0.0;
  double k = 0.0;
};

/// Argmax over defined cells.
ScanMax locate_scan_max(const std::vector<ScanCell>& cells);

/// Deterministic simplex polish of the grid maximum; the polished point
/// converges to the analytic maximizer as the grid refines.
ScanMax refine_scan_max(const LgTemplate& tmpl, KMode mode, const KOptions& options,
                        const ScanMax& start, int max_evals = 400);

/// Closed forms for the standard qubit template, phases φt = ωt, φT = ωT.
double lg_kd_closed_form(double phase_t, double phase_T);
double lg_ss_closed_form(double phase_t, double phase_T);

/// Constructive witness for the gap between operational and symmetrized
/// algebraic correlations. For a ±α-valued observable the gap is zero;
/// otherwise the eigenvalue pair (α, α′) with |α + α′| maximal yields
/// B = |u⟩⟨u′| + |u′⟩⟨u|, ρ = |(u+u′)/√2⟩⟨·| and gap |α + α′|/2.
struct DichotomyWitness {
  double gap = 0.0;
  ComplexMatrix witness_b;
  DensityMatrix witness_rho;
  double eigenvalue_first = 0.0;
  double eigenvalue_second = 0.0;
};

DichotomyWitness dichotomy_gap(const Observable& a);

}  // namespace qcorr
