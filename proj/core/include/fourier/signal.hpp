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

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fourier/group.hpp"

namespace fourier {

using Complex = std::complex<double>;

/// Default absolute tolerance per entry.
inline constexpr double kDefaultTol = 1e-9;

/// A complex-valued function on a finite group, stored in flat-index order.
/// Values are immutable after construction and always finite.
class Signal {
 public:
  Signal(Group group, std::vector<Complex> values);

  const Group& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const Complex> values() const noexcept { return values_; }
  const Complex& operator[](std::size_t i) const { return values_[i]; }

  /// Value at a (possibly non-canonical) element of a cyclic group.
  Complex at(std::int64_t k) const;

  friend bool operator==(const Signal&, const Signal&) = default;

 private:
  Group group_;
  std::vector<Complex> values_;
};

Signal delta(const Group& group, std::span<const std::int64_t> element);
Signal delta(const Group& group, std::int64_t k);
Signal constant(const Group& group, Complex c);
Signal zeros(const Group& group);
Signal ones(const Group& group);

Signal convolve(const Signal& f, const Signal& g);
Signal pointwise_mul(const Signal& f, const Signal& g);

/// f^(eta) = sum_t f(t) e^{-2 i pi <t, eta>}, counting measure, no scaling.
/// Power-of-two cyclic factors take a radix-2 path; everything else is a
/// direct O(n^2) sum per axis.
Signal dft(const Signal& f);
/// Inverse of dft, carrying the 1/|G| factor.
Signal idft(const Signal& f);
/// Reference O(|G|^2) summation, no fast path.
Signal dft_direct(const Signal& f);

/// E[a] = sum of all entries.
Complex expectation(const Signal& a);

Signal scale(const Signal& f, Complex c);
Signal add(const Signal& f, const Signal& g);
Signal conj(const Signal& f);
/// j -> f(-j).
Signal reflect(const Signal& f);

double max_abs(std::span<const Complex> v);
double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b);
/// max|a - b| / (1 + max(|a|_inf, |b|_inf)).
double relative_residual(std::span<const Complex> a, std::span<const Complex> b);

void require_same_group(const Group& a, const Group& b, const char* context);

std::string to_string(Complex z);

}  // namespace fourier
