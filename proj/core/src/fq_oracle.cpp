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

#include "bosent/fq_oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace bosent::oracle {

Eigen::VectorXcd slot_vector(const SpatialAmplitudes& spatial, const Eigen::Vector2cd& spin,
                             const DistVector& dist) {
  const std::size_t d = dist.dim();
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(slot_dim(d)));
  const Complex mode_amp[2] = {spatial.left, spatial.right};
  for (Mode m : {Mode::Left, Mode::Right}) {
    for (Spin s : {Spin::Up, Spin::Down}) {
      for (std::size_t a = 0; a < d; ++a) {
        v(static_cast<Eigen::Index>(slot_index(m, s, a, d))) =
            mode_amp[static_cast<int>(m)] * spin(static_cast<int>(s)) * dist.amplitudes[a];
      }
    }
  }
  return v;
}

Eigen::VectorXcd slot_vector(const SingleParticleState& p) {
  Eigen::Vector2cd spin = Eigen::Vector2cd::Zero();
  spin(static_cast<int>(p.spin)) = 1.0;
  return slot_vector(p.spatial, spin, p.dist);
}

LabeledState::LabeledState(std::size_t dist_dim)
    : dist_dim_(dist_dim),
      amps_(Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(oracle::slot_dim(dist_dim)),
                                   static_cast<Eigen::Index>(oracle::slot_dim(dist_dim)))) {}

LabeledState LabeledState::product(const Eigen::VectorXcd& first, const Eigen::VectorXcd& second) {
  if (first.size() != second.size() || first.size() % 4 != 0) {
    throw DimensionMismatch(static_cast<std::size_t>(first.size()), static_cast<std::size_t>(second.size()));
  }
  LabeledState out(static_cast<std::size_t>(first.size()) / 4);
  for (Eigen::Index i = 0; i < first.size(); ++i) {
    for (Eigen::Index j = 0; j < second.size(); ++j) out.amps_(i, j) = first(i) * second(j);
  }
  return out;
}

LabeledState LabeledState::swapped() const {
  LabeledState out(dist_dim_);
  out.amps_ = amps_.transpose();
  return out;
}

LabeledState& LabeledState::operator+=(const LabeledState& other) {
  if (other.dist_dim_ != dist_dim_) throw DimensionMismatch(dist_dim_, other.dist_dim_);
  amps_ += other.amps_;
  return *this;
}

LabeledState& LabeledState::operator*=(Complex c) {
  amps_ *= c;
  return *this;
}

LabeledState symmetrize(const SingleParticleState& a, const SingleParticleState& b) {
  if (a.dist.dim() != b.dist.dim()) throw DimensionMismatch(a.dist.dim(), b.dist.dim());
  const Eigen::VectorXcd va = slot_vector(a);
  const Eigen::VectorXcd vb = slot_vector(b);
  LabeledState s = LabeledState::product(va, vb) + LabeledState::product(vb, va);
  return Complex{1.0 / std::sqrt(2.0), 0.0} * std::move(s);
}

Complex labeled_inner(const LabeledState& bra, const LabeledState& ket) {
  if (bra.dist_dim() != ket.dist_dim()) throw DimensionMismatch(bra.dist_dim(), ket.dist_dim());
  const auto& x = bra.amplitudes();
  const auto& y = ket.amplitudes();
  Complex total{};
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) total += std::conj(x(i, j)) * y(i, j);
  }
  return total;
}

SpinDensityMatrix oracle_postselected_density(const LabeledState& state) {
  const std::size_t d = state.dist_dim();
  const auto& t = state.amplitudes();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  // amp[q](a, b) = <sym((L,s1,X_a),(R,s2,X_b))|T>, the (1,1) amplitude with the
  // L-particle's spin in qubit 1, whichever slot carries it.
  Eigen::MatrixXcd amp[4];
  for (Spin s1 : {Spin::Up, Spin::Down}) {
    for (Spin s2 : {Spin::Up, Spin::Down}) {
      const int q = two_qubit_index(s1, s2);
      amp[q] = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
          const auto l = static_cast<Eigen::Index>(slot_index(Mode::Left, s1, a, d));
          const auto r = static_cast<Eigen::Index>(slot_index(Mode::Right, s2, b, d));
          amp[q](static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = inv_sqrt2 * (t(l, r) + t(r, l));
        }
      }
    }
  }
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  for (int p = 0; p < 4; ++p) {
    for (int q = 0; q < 4; ++q) {
      Complex sum{};
      for (Eigen::Index a = 0; a < amp[p].rows(); ++a) {
        for (Eigen::Index b = 0; b < amp[p].cols(); ++b) sum += amp[p](a, b) * std::conj(amp[q](a, b));
      }
      rho(p, q) = sum;
    }
  }
  return SpinDensityMatrix::from_matrix(rho);
}

NumberWeights number_weights(const LabeledState& state) {
  const std::size_t d = state.dist_dim();
  const auto& t = state.amplitudes();
  const auto mode_of = [d](Eigen::Index i) { return static_cast<std::size_t>(i) / (2 * d) == 0 ? Mode::Left : Mode::Right; };
  NumberWeights w;
  for (Eigen::Index i = 0; i < t.rows(); ++i) {
    for (Eigen::Index j = 0; j < t.cols(); ++j) {
      const double p = std::norm(t(i, j));
      const Mode m1 = mode_of(i);
      const Mode m2 = mode_of(j);
      if (m1 == Mode::Left && m2 == Mode::Left) {
        w.both_left += p;
      } else if (m1 == Mode::Right && m2 == Mode::Right) {
        w.both_right += p;
      } else {
        w.one_each += p;
      }
    }
  }
  w.norm_squared = w.both_left + w.one_each + w.both_right;
  if (w.norm_squared > 0.0) {
    w.both_left /= w.norm_squared;
    w.one_each /= w.norm_squared;
    w.both_right /= w.norm_squared;
  }
  return w;
}

namespace {

// Q = |mode><mode| ⊗ |port><port| ⊗ 1_d on one slot.
Eigen::MatrixXcd port_projector(std::size_t d, Mode mode, const Eigen::Vector2cd& port) {
  const auto n = static_cast<Eigen::Index>(slot_dim(d));
  Eigen::MatrixXcd q = Eigen::MatrixXcd::Zero(n, n);
  for (Spin s : {Spin::Up, Spin::Down}) {
    for (Spin s2 : {Spin::Up, Spin::Down}) {
      const Complex e = port(static_cast<int>(s)) * std::conj(port(static_cast<int>(s2)));
      for (std::size_t a = 0; a < d; ++a) {
        q(static_cast<Eigen::Index>(slot_index(mode, s, a, d)), static_cast<Eigen::Index>(slot_index(mode, s2, a, d))) = e;
      }
    }
  }
  return q;
}

}  // namespace

double coincidence_probability(const LabeledState& state, Mode mode, const Eigen::Vector2cd& port0,
                               const Eigen::Vector2cd& port1) {
  const double total = state.norm_squared();
  if (total == 0.0) return 0.0;
  const std::size_t d = state.dist_dim();
  const Eigen::MatrixXcd q0 = port_projector(d, mode, port0.normalized());
  const Eigen::MatrixXcd q1 = port_projector(d, mode, port1.normalized());
  const auto& t = state.amplitudes();
  // (Q0 ⊗ Q1) T and (Q1 ⊗ Q0) T are orthogonal, so their weights add.
  const double p01 = (q0 * t * q1.transpose()).squaredNorm();
  const double p10 = (q1 * t * q0.transpose()).squaredNorm();
  return (p01 + p10) / total;
}

}  // namespace bosent::oracle
