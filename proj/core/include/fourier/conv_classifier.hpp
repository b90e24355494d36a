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
#include <vector>

#include "fourier/axioms.hpp"
#include "fourier/operator.hpp"

namespace fourier {

/// Canonical form T(f)(eta) = chi_E(eta) f^(sigma(eta)) of a linear map taking
/// convolution on Z/n to pointwise product.
///
/// `support` is the set of frequencies where T does not vanish. sigma is
/// defined on the support only; it need not be injective.
struct ConvClassification {
  std::int64_t order = 1;
  std::vector<std::int64_t> support;            // ascending
  std::map<std::int64_t, std::int64_t> sigma;   // keys == support
  double residual = 0.0;

  /// Throws ArgumentError for eta outside the support.
  std::int64_t sigma_at(std::int64_t eta) const;
  bool in_support(std::int64_t eta) const { return sigma.contains(eta); }
};

/// Recovers (support, sigma) from a dense table. The basis homomorphism check
/// runs first and its failure is raised as ClassificationError
/// "AxiomViolation". Other failures: RowNotHomomorphic, NotRootOfUnity.
ConvClassification classify_conv(const Operator& t, double tol = kDefaultTol);

/// Column k, row eta = e^{-2 i pi k sigma(eta) / n} on the support, 0 off it.
Operator construct_conv(const Group& group, const std::map<std::int64_t, std::int64_t>& sigma);

/// Infinity-norm distance between T's table and the table rebuilt from `cls`.
double roundtrip_residual(const Operator& t, const ConvClassification& cls);

/// Index m in [0, n) of the n-th root of unity nearest to z, together with
/// the angular deviation from it.
struct LatticeSnap {
  std::int64_t index = 0;
  double deviation = 0.0;
};
LatticeSnap snap_to_lattice(double angle, std::int64_t n);

}  // namespace fourier
