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

#include "fourier/torus_kernel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fourier/error.hpp"
#include "fourier/random.hpp"

namespace fourier::torus {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string xi_prefix(std::int64_t xi) { return "xi=" + std::to_string(xi) + ", "; }

}  // namespace

TorusGrid::TorusGrid(std::size_t m) : m_(m) {
  if (m < 2) throw ArgumentError("InvalidGrid", "torus grid needs M >= 2");
}

const std::vector<Complex>& KernelFamily::at(std::int64_t xi) const {
  if (xi < -window || xi > window) {
    throw ArgumentError("OutsideWindow", "xi=" + std::to_string(xi));
  }
  return kernels[static_cast<std::size_t>(xi + window)];
}

KernelFamily extract_kernels(const FrequencyTable& t, const TorusGrid& grid) {
  const auto rows = static_cast<std::size_t>(2 * t.window + 1);
  if (t.window < 0 || t.table.rows() != rows || t.table.cols() != grid.size()) {
    throw ArgumentError("DimensionMismatch",
                        "table is " + std::to_string(t.table.rows()) + "x" +
                            std::to_string(t.table.cols()) + ", expected " +
                            std::to_string(rows) + "x" + std::to_string(grid.size()));
  }
  KernelFamily fam;
  fam.grid_size = grid.size();
  fam.window = t.window;
  fam.kernels.resize(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto row = t.table.row(r);
    auto& h = fam.kernels[r];
    h.resize(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) h[i] = row[i] / grid.weight();
  }
  return fam;
}

FrequencyTable table_from_kernels(const KernelFamily& family) {
  const auto rows = static_cast<std::size_t>(2 * family.window + 1);
  if (family.kernels.size() != rows) {
    throw ArgumentError("DimensionMismatch", "kernel family has " +
                                                 std::to_string(family.kernels.size()) +
                                                 " kernels, expected " + std::to_string(rows));
  }
  const TorusGrid grid(family.grid_size);
  FrequencyTable t{family.window, Matrix(rows, family.grid_size)};
  for (std::size_t r = 0; r < rows; ++r) {
    if (family.kernels[r].size() != family.grid_size) {
      throw ArgumentError("DimensionMismatch", "kernel " + std::to_string(r) + " length");
    }
    for (std::size_t i = 0; i < family.grid_size; ++i) {
      t.table(r, i) = family.kernels[r][i] * grid.weight();
    }
  }
  return t;
}

std::vector<Complex> character(std::int64_t a, const TorusGrid& grid) {
  const auto m = static_cast<std::int64_t>(grid.size());
  std::vector<Complex> h(grid.size());
  for (std::int64_t i = 0; i < m; ++i) {
    // reduce a*i mod M first so the angle stays exact on the subgroup
    h[static_cast<std::size_t>(i)] =
        std::polar(1.0, kTwoPi * static_cast<double>(mod(a * i, m)) / static_cast<double>(m));
  }
  return h;
}

FrequencyTable fourier_coefficient_table(std::int64_t window, const TorusGrid& grid) {
  const auto rows = static_cast<std::size_t>(2 * window + 1);
  FrequencyTable t{window, Matrix(rows, grid.size())};
  for (std::size_t r = 0; r < rows; ++r) {
    const auto h = character(-(static_cast<std::int64_t>(r) - window), grid);
    for (std::size_t i = 0; i < grid.size(); ++i) t.table(r, i) = h[i] * grid.weight();
  }
  return t;
}

std::vector<Complex> apply(const FrequencyTable& t, std::span<const Complex> f) {
  if (f.size() != t.table.cols()) {
    throw ArgumentError("LengthMismatch", "signal has " + std::to_string(f.size()) +
                                              " samples, table expects " +
                                              std::to_string(t.table.cols()));
  }
  std::vector<Complex> out(t.table.rows(), 0.0);
  for (std::size_t r = 0; r < out.size(); ++r) {
    const auto row = t.table.row(r);
    for (std::size_t i = 0; i < f.size(); ++i) out[r] += row[i] * f[i];
  }
  return out;
}

AxiomReport check_character_equation(std::span<const Complex> h, double tol) {
  const std::size_t m = h.size();
  ReportBuilder rb(tol);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Complex lhs = h[(i + j) % m];
      const Complex rhs = h[i] * h[j];
      rb.record(std::abs(lhs - rhs), [&] {
        return Witness{"h(x_" + std::to_string(i) + " + x_" + std::to_string(j) +
                           ") != h(x_" + std::to_string(i) + ") h(x_" + std::to_string(j) + ")",
                       {},
                       {lhs},
                       {rhs}};
      });
    }
  }
  return std::move(rb).finish();
}

double estimate_frequency(std::span<const Complex> h) {
  const std::size_t m = h.size();
  if (m < 2) throw ArgumentError("InvalidGrid", "need at least two samples");
  const double dm = static_cast<double>(m);

  // coarse estimate from the mean per-sample phase increment
  Complex inc = 0.0;
  for (std::size_t i = 0; i < m; ++i) inc += h[(i + 1) % m] * std::conj(h[i]);
  const double coarse = std::arg(inc) * dm / kTwoPi;

  // windowed differences of the cumulative integral H; for a character they
  // equal h(x_k) H(x_w), so their phase advances like h while the noise is
  // averaged over w samples
  const double limit = dm / (4.0 * std::max(1.0, std::abs(coarse)));
  const std::size_t w = std::max<std::size_t>(1, static_cast<std::size_t>(limit));
  std::vector<Complex> cumulative(m + 1, 0.0);
  for (std::size_t i = 0; i < m; ++i) cumulative[i + 1] = cumulative[i] + h[i] / dm;
  auto window_diff = [&](std::size_t k) {
    const std::size_t end = k + w;
    if (end <= m) return cumulative[end] - cumulative[k];
    return (cumulative[m] - cumulative[k]) + cumulative[end - m];
  };

  std::vector<double> phase(m);
  double prev = std::arg(window_diff(0));
  phase[0] = prev;
  for (std::size_t k = 1; k < m; ++k) {
    const double raw = std::arg(window_diff(k));
    const double step = std::remainder(raw - prev, kTwoPi);
    phase[k] = phase[k - 1] + step;
    prev = raw;
  }

  // least-squares slope of phase against k
  double sk = 0, sp = 0, skk = 0, skp = 0;
  for (std::size_t k = 0; k < m; ++k) {
    const double dk = static_cast<double>(k);
    sk += dk;
    sp += phase[k];
    skk += dk * dk;
    skp += dk * phase[k];
  }
  const double slope = (dm * skp - sk * sp) / (dm * skk - sk * sk);
  return slope * dm / kTwoPi;
}

std::int64_t recover_frequency(std::span<const Complex> h, const FrequencyOptions& opts) {
  double worst = 0.0;
  for (const Complex& z : h) worst = std::max(worst, std::abs(std::abs(z) - 1.0));
  if (worst > opts.tol) {
    throw ClassificationError("NotUnimodular", "max ||h| - 1| = " + std::to_string(worst));
  }
  const AxiomReport eq = check_character_equation(h, opts.tol);
  if (!eq.passed) {
    throw ClassificationError("CharacterEquationViolation",
                              eq.witness->description +
                                  ", residual=" + std::to_string(eq.max_residual));
  }

  const double est = estimate_frequency(h);
  const std::int64_t nearest = std::llround(est);
  const double dev = std::abs(est - static_cast<double>(nearest));
  auto snap_failure = [&](const std::string& why) {
    return ClassificationError("SnapFailure", "estimate=" + std::to_string(est) +
                                                  ", nearest=" + std::to_string(nearest) +
                                                  ", deviation=" + std::to_string(dev) + why);
  };
  if (dev > opts.snap_window) throw snap_failure("");

  const auto expected = character(nearest, TorusGrid(h.size()));
  const double mismatch = max_abs_diff(h, expected);
  if (mismatch > opts.tol) {
    throw snap_failure(", samples deviate from the snapped character by " +
                       std::to_string(mismatch));
  }
  return nearest;
}

TorusClassification classify_torus_operator(const FrequencyTable& t, const TorusGrid& grid,
                                            double tol, std::uint64_t seed) {
  const KernelFamily fam = extract_kernels(t, grid);
  TorusClassification out;
  out.window = t.window;

  for (std::int64_t xi = -t.window; xi <= t.window; ++xi) {
    const auto& h = fam.at(xi);
    const double peak = max_abs(h);
    if (peak <= tol) {
      out.residual = std::max(out.residual, peak);
      continue;
    }
    std::int64_t a = 0;
    try {
      a = recover_frequency(h, {.tol = tol});
    } catch (const ClassificationError& e) {
      throw ClassificationError(e.kind(), xi_prefix(xi) + e.what());
    }
    out.residual =
        std::max(out.residual, max_abs_diff(h, character(a, grid)));
    out.support.push_back(xi);
    // h_xi = e^{2 i pi a x} means T f(xi) = f^(-a)
    out.freq_map.emplace(xi, -a);
  }

  // battery: T f(xi) = chi_E(xi) f^(phi(xi)) with f^ taken by the same rule
  Rng rng(seed);
  const Group g = Group::cyclic(static_cast<std::int64_t>(grid.size()));
  for (int trial = 0; trial < 8; ++trial) {
    const Signal f = rng.signal(g);
    const auto lhs = apply(t, f.values());
    std::vector<Complex> rhs(lhs.size(), 0.0);
    for (const auto& [xi, phi] : out.freq_map) {
      const auto ch = character(-phi, grid);
      Complex acc = 0.0;
      for (std::size_t i = 0; i < grid.size(); ++i) acc += f[i] * ch[i];
      rhs[static_cast<std::size_t>(xi + t.window)] = acc * grid.weight();
    }
    const double r = relative_residual(lhs, rhs);
    if (r > tol) {
      throw ClassificationError("BatteryMismatch", "trial " + std::to_string(trial) +
                                                       ", residual=" + std::to_string(r));
    }
    out.residual = std::max(out.residual, r);
  }
  return out;
}

}  // namespace fourier::torus
