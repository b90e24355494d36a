// Copyright 2026 The Fourier Characterization Authors.
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
#include <span>
#include <vector>

#include "fourier/axioms.hpp"
#include "fourier/operator.hpp"

namespace fourier::torus {

/// M equispaced samples i/M of [0, 1), each cell weighted 1/M. Sample
/// indices add mod M, which is the exact group law of the torus restricted
/// to the subgroup (1/M)Z/Z.
class TorusGrid {
 public:
  explicit TorusGrid(std::size_t m);

  std::size_t size() const noexcept { return m_; }
  double point(std::size_t i) const { return static_cast<double>(i) / static_cast<double>(m_); }
  double weight() const noexcept { return 1.0 / static_cast<double>(m_); }

 private:
  std::size_t m_;
};

/// Kernels h_xi on the grid for xi in the window {-N..N}: the operator acts as
/// T f(xi) = sum_i f(x_i) h_xi(x_i) / M.
struct KernelFamily {
  std::size_t grid_size = 0;  // M
  std::int64_t window = 0;    // N
  std::vector<std::vector<Complex>> kernels;  // index xi + N

  const std::vector<Complex>& at(std::int64_t xi) const;
};

/// (2N + 1) x M table of a linear map from grid signals to the frequency
/// window; row r is the frequency r - N.
struct FrequencyTable {
  std::int64_t window = 0;
  Matrix table;
};

/// Canonical form T f(xi) = chi_E(xi) f^(phi(xi)). `freq_map` holds phi on the
/// support; the kernel there is h_xi(x) = e^{-2 i pi phi(xi) x}.
struct TorusClassification {
  std::int64_t window = 0;
  std::vector<std::int64_t> support;
  std::map<std::int64_t, std::int64_t> freq_map;
  double residual = 0.0;
};

KernelFamily extract_kernels(const FrequencyTable& t, const TorusGrid& grid);
/// Inverse of extract_kernels: table entries h_xi(x_i) / M.
FrequencyTable table_from_kernels(const KernelFamily& family);
/// f -> its first 2N+1 Fourier coefficients by the rectangle rule.
FrequencyTable fourier_coefficient_table(std::int64_t window, const TorusGrid& grid);
std::vector<Complex> apply(const FrequencyTable& t, std::span<const Complex> f);

/// h(x) = e^{2 i pi a x} on the grid.
std::vector<Complex> character(std::int64_t a, const TorusGrid& grid);

/// max over all index pairs of |h(i + j mod M) - h(i) h(j)|.
AxiomReport check_character_equation(std::span<const Complex> h, double tol = kDefaultTol);

/// Unsnapped frequency estimate: cumulative sum of h, windowed differences of
/// that sum, least-squares slope of their unwrapped phase. This is the
/// real-line pipeline, with no integer lattice to snap to.
double estimate_frequency(std::span<const Complex> h);

struct FrequencyOptions {
  double tol = kDefaultTol;
  /// Largest |estimate - nearest integer| accepted before re-verification.
  double snap_window = 0.25;
};

/// Integer a with h ~ e^{2 i pi a x}. Errors: NotUnimodular,
/// SnapFailure(estimate, nearest, deviation), CharacterMismatch.
std::int64_t recover_frequency(std::span<const Complex> h, const FrequencyOptions& opts = {});

/// Per frequency: vanishing kernels leave the support, the rest must pass the
/// character equation and have a recoverable frequency; the assembled form
/// is then checked on a battery of seeded test signals.
TorusClassification classify_torus_operator(const FrequencyTable& t, const TorusGrid& grid,
                                            double tol = kDefaultTol, std::uint64_t seed = 0);

}  // namespace fourier::torus
