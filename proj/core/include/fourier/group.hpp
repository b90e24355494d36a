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
#include <cstdint>
#include <span>
#include <vector>

namespace fourier {

/// A finite Abelian group Z/n_1 x ... x Z/n_k. Elements are addressed either
/// by coordinates (each reduced mod its factor) or by their mixed-radix flat
/// index, first factor most significant.
class Group {
 public:
  explicit Group(std::vector<std::int64_t> factors);

  static Group cyclic(std::int64_t n) { return Group({n}); }

  const std::vector<std::int64_t>& factors() const noexcept { return factors_; }
  std::size_t order() const noexcept { return order_; }
  std::size_t rank() const noexcept { return factors_.size(); }
  bool is_cyclic() const noexcept { return factors_.size() == 1; }

  /// Flat index of a coordinate tuple; coordinates may be any integers.
  std::size_t index(std::span<const std::int64_t> coords) const;
  std::vector<std::int64_t> coords(std::size_t flat) const;

  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t subtract(std::size_t a, std::size_t b) const;
  std::size_t negate(std::size_t a) const;

  /// Throws ArgumentError unless this is a single cyclic factor; returns n.
  std::int64_t require_cyclic(const char* context) const;

  friend bool operator==(const Group&, const Group&) = default;

 private:
  std::vector<std::int64_t> factors_;
  std::vector<std::size_t> strides_;
  std::size_t order_ = 1;
};

/// Canonical representative of k mod n in [0, n).
constexpr std::int64_t mod(std::int64_t k, std::int64_t n) {
  const std::int64_t r = k % n;
  return r < 0 ? r + n : r;
}

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Inverse of a mod n; throws ArgumentError when gcd(a, n) != 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t n);

}  // namespace fourier
