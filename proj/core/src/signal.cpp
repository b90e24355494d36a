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

#include "fourier/signal.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "fourier/error.hpp"

namespace fourier {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// roots[m] = e^{sign * 2 i pi m / n}
std::vector<Complex> root_table(std::size_t n, double sign) {
  std::vector<Complex> roots(n);
  for (std::size_t m = 0; m < n; ++m) {
    roots[m] = std::polar(1.0, sign * 2.0 * std::numbers::pi * static_cast<double>(m) /
                                   static_cast<double>(n));
  }
  return roots;
}

void dft_line_direct(std::vector<Complex>& line, const std::vector<Complex>& roots) {
  const std::size_t n = line.size();
  std::vector<Complex> out(n);
  for (std::size_t eta = 0; eta < n; ++eta) {
    Complex acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) acc += line[k] * roots[(k * eta) % n];
    out[eta] = acc;
  }
  line.swap(out);
}

void dft_line_radix2(std::vector<Complex>& a, const std::vector<Complex>& roots) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t step = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const Complex u = a[i + k];
        const Complex v = a[i + k + len / 2] * roots[k * step];
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
}

// Applies the 1-d transform along every axis of the group.
std::vector<Complex> transform(const Signal& f, double sign, bool allow_fast) {
  const Group& g = f.group();
  std::vector<Complex> data(f.values().begin(), f.values().end());
  std::size_t stride = g.order();
  for (std::int64_t n_signed : g.factors()) {
    const auto n = static_cast<std::size_t>(n_signed);
    stride /= n;
    const auto roots = root_table(n, sign);
    const bool fast = allow_fast && std::has_single_bit(n);
    std::vector<Complex> line(n);
    const std::size_t block = stride * n;
    for (std::size_t base = 0; base < data.size(); base += block) {
      for (std::size_t off = 0; off < stride; ++off) {
        for (std::size_t k = 0; k < n; ++k) line[k] = data[base + off + k * stride];
        if (fast) {
          dft_line_radix2(line, roots);
        } else {
          dft_line_direct(line, roots);
        }
        for (std::size_t k = 0; k < n; ++k) data[base + off + k * stride] = line[k];
      }
    }
  }
  return data;
}

}  // namespace

Signal::Signal(Group group, std::vector<Complex> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_.order()) {
    throw ArgumentError("LengthMismatch", "signal has " + std::to_string(values_.size()) +
                                              " values, group order is " +
                                              std::to_string(group_.order()));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!finite(values_[i])) {
      throw ArgumentError("NonFiniteValue", "entry " + std::to_string(i));
    }
  }
}

Complex Signal::at(std::int64_t k) const {
  const std::int64_t n = group_.require_cyclic("Signal::at");
  return values_[static_cast<std::size_t>(mod(k, n))];
}

Signal delta(const Group& group, std::span<const std::int64_t> element) {
  std::vector<Complex> v(group.order(), 0.0);
  v[group.index(element)] = 1.0;
  return Signal(group, std::move(v));
}

Signal delta(const Group& group, std::int64_t k) {
  const std::int64_t n = group.require_cyclic("delta(group, k)");
  std::vector<Complex> v(group.order(), 0.0);
  v[static_cast<std::size_t>(mod(k, n))] = 1.0;
  return Signal(group, std::move(v));
}

Signal constant(const Group& group, Complex c) {
  return Signal(group, std::vector<Complex>(group.order(), c));
}

Signal zeros(const Group& group) { return constant(group, 0.0); }
Signal ones(const Group& group) { return constant(group, 1.0); }

void require_same_group(const Group& a, const Group& b, const char* context) {
  if (!(a == b)) throw ArgumentError("GroupMismatch", context);
}

Signal convolve(const Signal& f, const Signal& g) {
  require_same_group(f.group(), g.group(), "convolve");
  const Group& grp = f.group();
  const std::size_t n = grp.order();
  std::vector<Complex> out(n, 0.0);
  for (std::size_t t = 0; t < n; ++t) {
    if (f[t] == 0.0) continue;
    for (std::size_t s = 0; s < n; ++s) {
      // x = t + s, so g is evaluated at x - t = s
      out[grp.add(t, s)] += f[t] * g[s];
    }
  }
  return Signal(grp, std::move(out));
}

Signal pointwise_mul(const Signal& f, const Signal& g) {
  require_same_group(f.group(), g.group(), "pointwise_mul");
  std::vector<Complex> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f[i] * g[i];
  return Signal(f.group(), std::move(out));
}

Signal dft(const Signal& f) { return Signal(f.group(), transform(f, -1.0, true)); }

Signal dft_direct(const Signal& f) { return Signal(f.group(), transform(f, -1.0, false)); }

Signal idft(const Signal& f) {
  auto data = transform(f, 1.0, true);
  const double inv = 1.0 / static_cast<double>(f.size());
  for (auto& z : data) z *= inv;
  return Signal(f.group(), std::move(data));
}

Complex expectation(const Signal& a) {
  Complex acc = 0.0;
  for (const Complex& z : a.values()) acc += z;
  return acc;
}

Signal scale(const Signal& f, Complex c) {
  std::vector<Complex> out(f.values().begin(), f.values().end());
  for (auto& z : out) z *= c;
  return Signal(f.group(), std::move(out));
}

Signal add(const Signal& f, const Signal& g) {
  require_same_group(f.group(), g.group(), "add");
  std::vector<Complex> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f[i] + g[i];
  return Signal(f.group(), std::move(out));
}

Signal conj(const Signal& f) {
  std::vector<Complex> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::conj(f[i]);
  return Signal(f.group(), std::move(out));
}

Signal reflect(const Signal& f) {
  std::vector<Complex> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f[f.group().negate(i)];
  return Signal(f.group(), std::move(out));
}

double max_abs(std::span<const Complex> v) {
  double m = 0.0;
  for (const Complex& z : v) m = std::max(m, std::abs(z));
  return m;
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) {
    throw ArgumentError("LengthMismatch", std::to_string(a.size()) + " vs " +
                                              std::to_string(b.size()));
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double relative_residual(std::span<const Complex> a, std::span<const Complex> b) {
  return max_abs_diff(a, b) / (1.0 + std::max(max_abs(a), max_abs(b)));
}

std::string to_string(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g%+.6gi", z.real(), z.imag());
  return buf;
}

}  // namespace fourier
