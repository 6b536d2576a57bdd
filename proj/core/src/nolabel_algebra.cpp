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

#include "bosent/nolabel_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace bosent {

namespace {

// Lexicographic over (real, imag) pairs; returns <0, 0, >0.
int compare_complex(Complex x, Complex y) {
  if (x.real() != y.real()) return x.real() < y.real() ? -1 : 1;
  if (x.imag() != y.imag()) return x.imag() < y.imag() ? -1 : 1;
  return 0;
}

int compare_kets(const SingleParticleState& a, const SingleParticleState& b) {
  // R amplitude first, so |L> = (1, 0) sorts before |R>.
  if (int c = compare_complex(a.spatial.right, b.spatial.right)) return c;
  if (int c = compare_complex(b.spatial.left, a.spatial.left)) return c;
  if (a.spin != b.spin) return static_cast<int>(a.spin) < static_cast<int>(b.spin) ? -1 : 1;
  const auto& x = a.dist.amplitudes;
  const auto& y = b.dist.amplitudes;
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    if (int c = compare_complex(x[i], y[i])) return c;
  }
  if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
  return 0;
}

int compare_pairs(const ParticlePair& p, const ParticlePair& q) {
  if (int c = compare_kets(p.first, q.first)) return c;
  return compare_kets(p.second, q.second);
}

bool is_one_per_detector(const ParticlePair& p) {
  const auto m1 = detector_mode(p.first.spatial);
  const auto m2 = detector_mode(p.second.spatial);
  if (!m1 || !m2) {
    throw std::invalid_argument("post-selection requires detector-basis kets (spatial part |L> or |R>)");
  }
  return *m1 != *m2;
}

}  // namespace

bool ket_less(const SingleParticleState& a, const SingleParticleState& b) { return compare_kets(a, b) < 0; }

void SymmetricTwoBosonState::add(Complex c, const SingleParticleState& a, const SingleParticleState& b) {
  ParticlePair pair = ket_less(b, a) ? ParticlePair{b, a} : ParticlePair{a, b};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), pair,
                             [](const SymmetricTerm& t, const ParticlePair& p) { return compare_pairs(t.pair, p) < 0; });
  if (it != terms_.end() && compare_pairs(it->pair, pair) == 0) {
    it->coefficient += c;
    if (it->coefficient == Complex{}) terms_.erase(it);
    return;
  }
  if (c == Complex{}) return;
  terms_.insert(it, SymmetricTerm{c, std::move(pair)});
}

bool operator==(const SymmetricTwoBosonState& x, const SymmetricTwoBosonState& y) {
  if (x.terms_.size() != y.terms_.size()) return false;
  for (std::size_t i = 0; i < x.terms_.size(); ++i) {
    if (x.terms_[i].coefficient != y.terms_[i].coefficient) return false;
    if (compare_pairs(x.terms_[i].pair, y.terms_[i].pair) != 0) return false;
  }
  return true;
}

Complex transition_two(const ParticlePair& bra, const ParticlePair& ket) {
  const auto& [c, d] = bra;
  const auto& [a, b] = ket;
  return inner_single(c, a) * inner_single(d, b) + inner_single(c, b) * inner_single(d, a);
}

Complex inner(const SymmetricTwoBosonState& bra, const SymmetricTwoBosonState& ket) {
  Complex total{};
  for (const auto& x : bra.terms()) {
    for (const auto& y : ket.terms()) total += std::conj(x.coefficient) * y.coefficient * transition_two(x.pair, y.pair);
  }
  return total;
}

Complex SingleParticleResidual::contract(const SingleParticleState& d) const {
  Complex total{};
  for (const auto& [w, ket] : terms) total += w * inner_single(d, ket);
  return total;
}

SingleParticleResidual project_single(const SingleParticleState& bra, const ParticlePair& ket) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const auto& [a, b] = ket;
  SingleParticleResidual r;
  const Complex wb = inv_sqrt2 * inner_single(bra, a);
  const Complex wa = inv_sqrt2 * inner_single(bra, b);
  if (wb != Complex{}) r.terms.emplace_back(wb, b);
  if (wa != Complex{}) r.terms.emplace_back(wa, a);
  return r;
}

SymmetricTwoBosonState expand_in_detector_basis(const SingleParticleState& a, const SingleParticleState& b) {
  if (a.spin != Spin::Up || b.spin != Spin::Down) {
    throw UnsupportedConfiguration(std::string("detector-basis expansion supports (s_A, s_B) = (up, down) only; got (") +
                                   to_string(a.spin) + ", " + to_string(b.spin) + ")");
  }
  if (a.dist.dim() != b.dist.dim()) throw DimensionMismatch(a.dist.dim(), b.dist.dim());
  const auto ket = [](Mode m, Spin s, const DistVector& phi) {
    return SingleParticleState{SpatialAmplitudes::at(m), s, phi};
  };
  const Complex al = a.spatial.left, ar = a.spatial.right;
  const Complex bl = b.spatial.left, br = b.spatial.right;
  SymmetricTwoBosonState out;
  out.add(al * bl, ket(Mode::Left, Spin::Up, a.dist), ket(Mode::Left, Spin::Down, b.dist));
  out.add(al * br, ket(Mode::Left, Spin::Up, a.dist), ket(Mode::Right, Spin::Down, b.dist));
  out.add(ar * bl, ket(Mode::Left, Spin::Down, b.dist), ket(Mode::Right, Spin::Up, a.dist));
  out.add(ar * br, ket(Mode::Right, Spin::Up, a.dist), ket(Mode::Right, Spin::Down, b.dist));
  return out;
}

SymmetricTwoBosonState postselect_one_per_detector(const SymmetricTwoBosonState& s) {
  SymmetricTwoBosonState out;
  for (const auto& t : s.terms()) {
    if (is_one_per_detector(t.pair)) out.add(t.coefficient, t.pair.first, t.pair.second);
  }
  return out;
}

}  // namespace bosent
