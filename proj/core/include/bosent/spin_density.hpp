// Copyright 2026 The bosent Authors
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

#pragma once

#include <Eigen/Core>

#include "bosent/core_state.hpp"

namespace bosent {

/// Index of |(L, left), (R, right)> in the basis {L↑R↑, L↑R↓, L↓R↑, L↓R↓}.
constexpr int two_qubit_index(Spin left, Spin right) {
  return 2 * static_cast<int>(left) + static_cast<int>(right);
}

/// Possibly unnormalized two-qubit spin state of the (L, R) registers.
/// `weight` carries the trace, i.e. the post-selection probability mass.
struct SpinDensityMatrix {
  Eigen::Matrix4cd matrix = Eigen::Matrix4cd::Zero();
  double weight = 0.0;

  /// Builds from a matrix, taking weight = Re tr(matrix).
  static SpinDensityMatrix from_matrix(const Eigen::Matrix4cd& m);

  Eigen::Matrix4cd normalized() const;
};

/// Largest deviation from the SpinDensityMatrix invariants: Hermiticity,
/// positivity (most negative eigenvalue) and tr(matrix) = weight.
double invariant_deviation(const SpinDensityMatrix& rho);

}  // namespace bosent
