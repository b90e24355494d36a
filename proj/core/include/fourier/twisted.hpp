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

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "fourier/operator.hpp"
#include "fourier/signal.hpp"

namespace fourier::twisted {

/// Samples x_i = -L + i h, h = 2L/S, i = 0..S-1, on each axis. S is even so
/// the origin is the sample S/2.
class PlaneGrid {
 public:
  PlaneGrid(double half_width, std::size_t side);

  double half_width() const noexcept { return half_width_; }
  std::size_t side() const noexcept { return side_; }
  double step() const noexcept { return step_; }
  double point(std::size_t i) const { return -half_width_ + static_cast<double>(i) * step_; }
  std::size_t origin() const noexcept { return side_ / 2; }

  friend bool operator==(const PlaneGrid&, const PlaneGrid&) = default;

 private:
  double half_width_;
  std::size_t side_;
  double step_;
};

/// S x S samples f(x_i, y_j); also used for operator kernels K(x_i, y_j).
class GridFunction {
 public:
  GridFunction(PlaneGrid grid, Matrix values);

  static GridFunction sample(const PlaneGrid& grid,
                             const std::function<Complex(double, double)>& f);
  static GridFunction zero(const PlaneGrid& grid);

  const PlaneGrid& grid() const noexcept { return grid_; }
  const Matrix& values() const noexcept { return values_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return values_(i, j); }

  /// Largest magnitude on the outermost ring of samples.
  double boundary_max() const;

 private:
  PlaneGrid grid_;
  Matrix values_;
};

using PhaseSpaceFunction = GridFunction;
using OperatorKernel = GridFunction;

/// (f # g)(x, y) = h^2 sum_{s,t} f(x - s, y - t) g(s, t) e^{i pi (x t - y s)},
/// off-grid arguments contributing zero.
PhaseSpaceFunction twisted_convolve(const PhaseSpaceFunction& f, const PhaseSpaceFunction& g);

/// rho(p, q) phi(x) = e^{2 i pi q x + i pi p q} phi(x + p), zero-filled outside
/// the window. p must be a multiple of the grid step (OffLatticeShift).
std::vector<Complex> rho_point(double p, double q, std::span<const Complex> phi,
                               const PlaneGrid& grid);

/// K_f(x, y) = h sum_q f(y - x, q) e^{i pi q (x + y)}.
OperatorKernel rho_kernel(const PhaseSpaceFunction& f);

/// (K1 K2)(x, y) = h sum_z K1(x, z) K2(z, y).
OperatorKernel compose_kernels(const OperatorKernel& k1, const OperatorKernel& k2);

struct HomomorphismReport {
  double relative_error = 0.0;
  double f_boundary = 0.0;
  double g_boundary = 0.0;
};

/// Relative L2 distance between K_{f # g} and K_f K_g, measured against the
/// norm of K_f K_g, plus the truncation diagnostic of the inputs.
HomomorphismReport verify_rho_homomorphism(const PhaseSpaceFunction& f,
                                           const PhaseSpaceFunction& g);

/// ||a - b||_2 / ||b||_2 over all samples (0 when both vanish).
double relative_l2(const Matrix& a, const Matrix& b);

/// e^{-pi (x^2 + y^2)} displaced to (x0, y0).
PhaseSpaceFunction gaussian(const PlaneGrid& grid, double x0 = 0.0, double y0 = 0.0);

}  // namespace fourier::twisted
