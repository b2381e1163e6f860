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

namespace qcorr {

/// One knob-set shared by every layer; the CLI overrides fields and passes
/// the profile down, library defaults apply everywhere else.
struct ToleranceProfile {
  /// Accepted Hermiticity defect ‖M − M†‖ before an input is rejected.
  /// Inputs within the tolerance are symmetrized, not rejected.
  double herm_tol = 1e-9;
  /// Eigenvalues closer than this are merged into one spectral point.
  double cluster_tol = 1e-8;
  /// Conditional weights below this are treated as vanishing; the
  /// conditional state / expectation is then undefined rather than noise.
  double weight_floor = 1e-12;
  /// Slack tolerance for inequality audits: pass <=> slack >= -tol_audit.
  double tol_audit = 1e-9;
  /// Validation slack for density matrices (trace, positivity).
  double state_tol = 1e-9;
};

}  // namespace qcorr
