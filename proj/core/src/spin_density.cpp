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

#include "bosent/spin_density.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <stdexcept>

namespace bosent {

SpinDensityMatrix SpinDensityMatrix::from_matrix(const Eigen::Matrix4cd& m) {
  return {m, m.trace().real()};
}

Eigen::Matrix4cd SpinDensityMatrix::normalized() const {
  if (!(weight > 0.0)) throw std::domain_error("no post-selection support: weight is zero");
  return matrix / weight;
}

double invariant_deviation(const SpinDensityMatrix& rho) {
  const double hermitian = (rho.matrix - rho.matrix.adjoint()).cwiseAbs().maxCoeff();
  const Eigen::Matrix4cd sym = 0.5 * (rho.matrix + rho.matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig(sym, Eigen::EigenvaluesOnly);
  const double negativity = std::max(0.0, -eig.eigenvalues().minCoeff());
  const double trace = std::abs(rho.matrix.trace() - Complex{rho.weight, 0.0});
  return std::max({hermitian, negativity, trace});
}

}  // namespace bosent
