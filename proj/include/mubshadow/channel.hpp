// Copyright 2026 The MUB Shadow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MUBSHADOW_CHANNEL_HPP
#define MUBSHADOW_CHANNEL_HPP

#include "mubshadow/mub.hpp"
#include "mubshadow/observable.hpp"
#include "mubshadow/statevector.hpp"

namespace mubshadow {

/// M^{-1}(A) = (2^n + 1) A - tr(A) I
DensityOp inverse_channel(const DensityOp& a);
/// M(A) = (A + tr(A) I) / (2^n + 1)
DensityOp forward_channel(const DensityOp& a);

// Exact oracles below enumerate all (2^n + 1) 2^n basis projectors of a
// family and are meant for n <= 5.

/// (1/(2^n+1)) sum_{j,k} tr(rho P_jk) P_jk
DensityOp exact_channel_enum(const MubFamily& fam, const DensityOp& rho);

/// sum_{j,b} Pr(j,b) X(j,b) with Pr(j,b) = tr(rho P_jb)/(2^n+1) and X the
/// engine's snapshot_expectation.
double exact_snapshot_mean(const MubFamily& fam, const DensityOp& rho, const Observable& o);

/// Var[X] over the same exact distribution.
double exact_single_shot_variance(const MubFamily& fam, const DensityOp& rho, const Observable& o);

struct ShadowNorm {
    double value = 0.0;  // ||O_0||^2_shadow
    double bound = 0.0;  // 2 tr(O_0^2)
};

/// Largest eigenvalue of (2^n+1) sum_{j,k} tr(O_0 P_jk)^2 P_jk, the maximum
/// over states sigma of the single-snapshot second moment.
ShadowNorm shadow_norm_sq(const MubFamily& fam, const Eigen::MatrixXcd& o);
inline ShadowNorm shadow_norm_sq(const MubFamily& fam, const Observable& o) { return shadow_norm_sq(fam, o.matrix()); }

/// 3 tr(O_0^2), the uniform-Clifford variance bound.
double clifford_variance_bound(const Eigen::MatrixXcd& o);

}  // namespace mubshadow

#endif
