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
#include <string>
#include <utility>
#include <vector>

#include "fourier/axioms.hpp"
#include "fourier/operator.hpp"

namespace fourier {

enum class ExchangeVariant { kDirect, kFourier };

const char* to_string(ExchangeVariant v);

/// Samples of beta(c) = E[T((c/n) 1)], the action of T on constants.
struct BetaProbe {
  std::vector<std::pair<Complex, Complex>> samples;  // (c, beta(c))
};

/// Canonical form of a map exchanging products with themselves:
/// T(a)(eta j) = a(j), or its complex conjugate when `conjugate` is set.
/// For the Fourier variant the same pair classifies F^{-1} T.
struct ExchangeClassification {
  std::int64_t order = 2;
  std::int64_t eta = 1;
  bool conjugate = false;
  ExchangeVariant variant = ExchangeVariant::kDirect;
  double residual = 0.0;
  BetaProbe beta;
  /// Which hypotheses were verified on probes and which were assumed.
  std::vector<std::string> notes;
};

struct ExchangeOptions {
  double tol = kDefaultTol;
  std::uint64_t seed = 0;
  int sweep_signals = 32;
};

/// Runs the structural argument as an algorithm against a blackbox map.
///
/// Checks, in execution order:
///   1. T(0) = 0                                       FixedPointViolation
///   2. T(c1) = beta(c) 1 with beta(c) in {c, conj c},
///      beta multiplicative on probe pairs             BetaNotIdentityOrConjugation
///   3. T(delta_j) = delta_{sigma(j)}, sigma(0) = 0,   DeltaImageNotDelta(j),
///      sigma(j) = j sigma(1), gcd(sigma(1), n) = 1     FixedPointViolation, EtaNotCoprime
///   4. T(a)(eta j) = a(j) (or conjugate) on seeded
///      random signals                                 FinalSweepViolation
///
/// Constants are examined before deltas so that a map failing on both is
/// reported at the constants step. Passing is evidence of conformance, not
/// proof: bijectivity and continuity are only probed.
ExchangeClassification classify_exchange(const Operator& t, const ExchangeOptions& opts = {});

/// Classifies F^{-1} T for maps that swap the two products. The result
/// satisfies (F^{-1} T)(a)(eta j) = a(j) or its conjugate; equivalently
/// T(a)(xi) = a^(eta xi) in the direct case and T(a)(xi) = conj(a^(-eta xi))
/// in the conjugate case.
ExchangeClassification classify_fourier_exchange(const Operator& t,
                                                 const ExchangeOptions& opts = {});

/// T(T(a))(k) = a(-k) on seeded random signals.
AxiomReport check_involution_symmetry(const Operator& t, double tol, int samples,
                                      std::uint64_t seed);

/// The canonical map with T(a)(eta j) = a(j) (conjugated if requested).
/// Throws ArgumentError unless gcd(eta, n) = 1.
Operator exchange_map(const Group& group, std::int64_t eta, bool conjugate);

/// F composed with exchange_map: the canonical map of the Fourier variant.
Operator fourier_exchange_map(const Group& group, std::int64_t eta, bool conjugate);

}  // namespace fourier
