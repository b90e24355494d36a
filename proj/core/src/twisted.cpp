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

#include "fourier/twisted.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fourier/error.hpp"

namespace fourier::twisted {

namespace {

constexpr double kPi = std::numbers::pi;

void require_same_grid(const PlaneGrid& a, const PlaneGrid& b, const char* context) {
  if (!(a == b)) throw ArgumentError("GridMismatch", context);
}

}  // namespace

PlaneGrid::PlaneGrid(double half_width, std::size_t side)
    : half_width_(half_width), side_(side), step_(2.0 * half_width / static_cast<double>(side)) {
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw ArgumentError("InvalidGrid", "half width must be positive");
  }
  if (side < 2 || side % 2 != 0) {
    throw ArgumentError("InvalidGrid", "side count must be even and >= 2, got " +
                                           std::to_string(side));
  }
}

GridFunction::GridFunction(PlaneGrid grid, Matrix values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.rows() != grid_.side() || values_.cols() != grid_.side()) {
    throw ArgumentError("DimensionMismatch",
                        "values are " + std::to_string(values_.rows()) + "x" +
                            std::to_string(values_.cols()) + ", grid side is " +
                            std::to_string(grid_.side()));
  }
  for (const Complex& z : values_.data()) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw ArgumentError("NonFiniteValue", "grid function entry");
    }
  }
}

GridFunction GridFunction::sample(const PlaneGrid& grid,
                                  const std::function<Complex(double, double)>& f) {
  Matrix m(grid.side(), grid.side());
  for (std::size_t i = 0; i < grid.side(); ++i) {
    for (std::size_t j = 0; j < grid.side(); ++j) m(i, j) = f(grid.point(i), grid.point(j));
  }
  return GridFunction(grid, std::move(m));
}

GridFunction GridFunction::zero(const PlaneGrid& grid) {
  return GridFunction(grid, Matrix(grid.side(), grid.side()));
}

double GridFunction::boundary_max() const {
  const std::size_t s = grid_.side();
  double m = 0.0;
  for (std::size_t k = 0; k < s; ++k) {
    m = std::max({m, std::abs(values_(0, k)), std::abs(values_(s - 1, k)),
                  std::abs(values_(k, 0)), std::abs(values_(k, s - 1))});
  }
  return m;
}

PhaseSpaceFunction twisted_convolve(const PhaseSpaceFunction& f, const PhaseSpaceFunction& g) {
  require_same_grid(f.grid(), g.grid(), "twisted_convolve");
  const PlaneGrid& grid = f.grid();
  const std::size_t s = grid.side();
  const std::size_t o = grid.origin();
  const double h = grid.step();

  // e_table(a, d) = e^{i pi x_a x_d}
  Matrix e_table(s, s);
  for (std::size_t a = 0; a < s; ++a) {
    for (std::size_t d = 0; d < s; ++d) {
      e_table(a, d) = std::polar(1.0, kPi * grid.point(a) * grid.point(d));
    }
  }

  Matrix out(s, s);
  Matrix weighted(s, s);
  for (std::size_t a = 0; a < s; ++a) {
    // weighted(c, d) = g(s_c, t_d) e^{i pi x_a t_d}
    for (std::size_t c = 0; c < s; ++c) {
      for (std::size_t d = 0; d < s; ++d) weighted(c, d) = g(c, d) * e_table(a, d);
    }
    // f index a - c + o must stay in [0, s)
    const std::size_t c_lo = a + o >= s ? a + o - s + 1 : 0;
    const std::size_t c_hi = std::min(s - 1, a + o);
    for (std::size_t b = 0; b < s; ++b) {
      const std::size_t d_lo = b + o >= s ? b + o - s + 1 : 0;
      const std::size_t d_hi = std::min(s - 1, b + o);
      Complex total = 0.0;
      for (std::size_t c = c_lo; c <= c_hi; ++c) {
        const auto f_row = f.values().row(a + o - c);
        const auto w_row = weighted.row(c);
        Complex inner = 0.0;
        for (std::size_t d = d_lo; d <= d_hi; ++d) inner += f_row[b + o - d] * w_row[d];
        // e^{-i pi y_b s_c}
        total += inner * std::conj(e_table(b, c));
      }
      out(a, b) = total * (h * h);
    }
  }
  return PhaseSpaceFunction(grid, std::move(out));
}

std::vector<Complex> rho_point(double p, double q, std::span<const Complex> phi,
                               const PlaneGrid& grid) {
  if (phi.size() != grid.side()) {
    throw ArgumentError("LengthMismatch", "function has " + std::to_string(phi.size()) +
                                              " samples, grid side is " +
                                              std::to_string(grid.side()));
  }
  const double shift = p / grid.step();
  const double nearest = std::round(shift);
  if (std::abs(shift - nearest) > 1e-9 * std::max(1.0, std::abs(shift))) {
    throw ArgumentError("OffLatticeShift", "p=" + std::to_string(p) +
                                               " is not a multiple of h=" +
                                               std::to_string(grid.step()));
  }
  const auto k = static_cast<std::int64_t>(nearest);
  const auto s = static_cast<std::int64_t>(grid.side());
  std::vector<Complex> out(phi.size(), 0.0);
  for (std::int64_t i = 0; i < s; ++i) {
    const std::int64_t src = i + k;
    if (src < 0 || src >= s) continue;
    const double x = grid.point(static_cast<std::size_t>(i));
    out[static_cast<std::size_t>(i)] =
        std::polar(1.0, 2.0 * kPi * q * x + kPi * p * q) * phi[static_cast<std::size_t>(src)];
  }
  return out;
}

OperatorKernel rho_kernel(const PhaseSpaceFunction& f) {
  const PlaneGrid& grid = f.grid();
  const std::size_t s = grid.side();
  const std::size_t o = grid.origin();
  const double h = grid.step();

  // phase(a + b, d) = e^{i pi q_d (x_a + y_b)}, x_a + y_b = 2 x_0 + (a + b) h
  Matrix phase(2 * s - 1, s);
  for (std::size_t sum = 0; sum < 2 * s - 1; ++sum) {
    const double xy = 2.0 * grid.point(0) + static_cast<double>(sum) * h;
    for (std::size_t d = 0; d < s; ++d) phase(sum, d) = std::polar(1.0, kPi * grid.point(d) * xy);
  }

  Matrix k(s, s);
  for (std::size_t a = 0; a < s; ++a) {
    for (std::size_t b = 0; b < s; ++b) {
      // y_b - x_a = (b - a) h sits at index b - a + o
      const auto idx = static_cast<std::int64_t>(b) - static_cast<std::int64_t>(a) +
                       static_cast<std::int64_t>(o);
      if (idx < 0 || idx >= static_cast<std::int64_t>(s)) continue;
      const auto f_row = f.values().row(static_cast<std::size_t>(idx));
      const auto p_row = phase.row(a + b);
      Complex acc = 0.0;
      for (std::size_t d = 0; d < s; ++d) acc += f_row[d] * p_row[d];
      k(a, b) = acc * h;
    }
  }
  return OperatorKernel(grid, std::move(k));
}

OperatorKernel compose_kernels(const OperatorKernel& k1, const OperatorKernel& k2) {
  require_same_grid(k1.grid(), k2.grid(), "compose_kernels");
  Matrix prod = k1.values() * k2.values();
  const double h = k1.grid().step();
  Matrix scaled(prod.rows(), prod.cols());
  for (std::size_t i = 0; i < prod.rows(); ++i) {
    for (std::size_t j = 0; j < prod.cols(); ++j) scaled(i, j) = prod(i, j) * h;
  }
  return OperatorKernel(k1.grid(), std::move(scaled));
}

double relative_l2(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ArgumentError("DimensionMismatch", "relative_l2");
  }
  double diff = 0.0, ref = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    diff += std::norm(a.data()[i] - b.data()[i]);
    ref += std::norm(b.data()[i]);
  }
  if (ref == 0.0) return diff == 0.0 ? 0.0 : std::sqrt(diff);
  return std::sqrt(diff / ref);
}

HomomorphismReport verify_rho_homomorphism(const PhaseSpaceFunction& f,
                                           const PhaseSpaceFunction& g) {
  require_same_grid(f.grid(), g.grid(), "verify_rho_homomorphism");
  const OperatorKernel direct = rho_kernel(twisted_convolve(f, g));
  const OperatorKernel composed = compose_kernels(rho_kernel(f), rho_kernel(g));
  return {relative_l2(direct.values(), composed.values()), f.boundary_max(),
          g.boundary_max()};
}

PhaseSpaceFunction gaussian(const PlaneGrid& grid, double x0, double y0) {
  return GridFunction::sample(grid, [x0, y0](double x, double y) {
    return Complex(std::exp(-kPi * ((x - x0) * (x - x0) + (y - y0) * (y - y0))), 0.0);
  });
}

}  // namespace fourier::twisted
