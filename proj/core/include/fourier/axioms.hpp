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
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fourier/operator.hpp"
#include "fourier/signal.hpp"

namespace fourier {

/// Inputs and both sides of the first violated identity found by a checker.
struct Witness {
  std::string description;
  std::vector<Signal> inputs;
  std::vector<Complex> lhs;
  std::vector<Complex> rhs;
};

/// Outcome of an axiom check. passed iff max_residual <= tolerance; a witness
/// is present iff the check failed. `notes` records hypotheses that were only
/// probed or assumed rather than verified.
struct AxiomReport {
  bool passed = true;
  double max_residual = 0.0;
  double tolerance = kDefaultTol;
  std::optional<Witness> witness;
  std::vector<std::string> notes;
};

/// Accumulates residuals for one report and keeps the first violation.
class ReportBuilder {
 public:
  explicit ReportBuilder(double tol) { report_.tolerance = tol; }

  /// Records one comparison; returns true when it violated the tolerance.
  bool record(double residual, const std::function<Witness()>& make_witness);
  void note(std::string text) { report_.notes.push_back(std::move(text)); }
  AxiomReport finish() &&;

 private:
  AxiomReport report_;
};

struct BasisMode {};
struct SampledMode {
  int count = 64;
  std::uint64_t seed = 0;
};
using CheckMode = std::variant<BasisMode, SampledMode>;

/// T(f * g) = T(f).T(g). Basis mode checks all n^2 delta pairs, which is
/// sufficient for a linear T since both sides are bilinear; sampled mode
/// draws pairs with entries uniform on the unit disc.
AxiomReport check_conv_homomorphism(const Operator& t, const CheckMode& mode,
                                    double tol = kDefaultTol);

/// T(a.b) = T(a).T(b) and T(a * b) = T(a) * T(b) on seeded random pairs,
/// plus the structured pairs (c1, a) and (delta_j, a).
AxiomReport check_exchange_axioms(const Operator& t, int count, std::uint64_t seed,
                                  double tol = kDefaultTol);

}  // namespace fourier
