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

#include "fourier/group.hpp"

#include <numeric>
#include <string>
#include <tuple>
#include <utility>

#include "fourier/error.hpp"

namespace fourier {

Group::Group(std::vector<std::int64_t> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) {
    throw ArgumentError("InvalidGroup", "a group needs at least one factor");
  }
  strides_.assign(factors_.size(), 1);
  for (std::size_t i = factors_.size(); i-- > 0;) {
    if (factors_[i] < 1) {
      throw ArgumentError("InvalidGroup",
                          "modulus " + std::to_string(factors_[i]) + " < 1");
    }
    strides_[i] = order_;
    order_ *= static_cast<std::size_t>(factors_[i]);
  }
}

std::size_t Group::index(std::span<const std::int64_t> coords) const {
  if (coords.size() != factors_.size()) {
    throw ArgumentError("GroupMismatch",
                        "element has " + std::to_string(coords.size()) +
                            " coordinates, group has " +
                            std::to_string(factors_.size()) + " factors");
  }
  std::size_t flat = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    flat += static_cast<std::size_t>(mod(coords[i], factors_[i])) * strides_[i];
  }
  return flat;
}

std::vector<std::int64_t> Group::coords(std::size_t flat) const {
  std::vector<std::int64_t> out(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    out[i] = static_cast<std::int64_t>(flat / strides_[i]) % factors_[i];
  }
  return out;
}

std::size_t Group::add(std::size_t a, std::size_t b) const {
  if (is_cyclic()) return (a + b) % order_;
  std::size_t flat = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto n = static_cast<std::size_t>(factors_[i]);
    flat += ((a / strides_[i] % n + b / strides_[i] % n) % n) * strides_[i];
  }
  return flat;
}

std::size_t Group::negate(std::size_t a) const {
  if (is_cyclic()) return (order_ - a % order_) % order_;
  std::size_t flat = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto n = static_cast<std::size_t>(factors_[i]);
    flat += ((n - a / strides_[i] % n) % n) * strides_[i];
  }
  return flat;
}

std::size_t Group::subtract(std::size_t a, std::size_t b) const {
  return add(a, negate(b));
}

std::int64_t Group::require_cyclic(const char* context) const {
  if (!is_cyclic()) {
    throw ArgumentError("NotCyclic", std::string(context) +
                                         " is defined on a single cyclic factor only");
  }
  return factors_.front();
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  return std::gcd(a, b);
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t n) {
  // extended Euclid on (a mod n, n)
  std::int64_t r0 = n, r1 = mod(a, n);
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
  }
  if (r0 != 1) {
    throw ArgumentError("NotInvertible", std::to_string(a) + " has no inverse mod " +
                                             std::to_string(n));
  }
  return mod(t0, n);
}

}  // namespace fourier
