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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "fourier/signal.hpp"

namespace fourier {

/// Seeded generator whose draws are identical on every platform: doubles are
/// built from the raw 64-bit engine output rather than through the
/// implementation-defined std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::int64_t integer(std::int64_t lo, std::int64_t hi_inclusive) {
    const auto span = static_cast<std::uint64_t>(hi_inclusive - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  /// Uniform on the closed complex unit disc.
  Complex unit_disc() {
    const double r = std::sqrt(uniform());
    return std::polar(r, 2.0 * std::numbers::pi * uniform());
  }

  Signal signal(const Group& g) {
    std::vector<Complex> v(g.order());
    for (auto& z : v) z = unit_disc();
    return Signal(g, std::move(v));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace fourier
