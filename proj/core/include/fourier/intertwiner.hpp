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
#include <vector>

#include "fourier/axioms.hpp"
#include "fourier/operator.hpp"

namespace fourier {

/// A purely imaginary phase function phi(j) = i * angle(j), angles kept in
/// [0, 2 pi). Only phi modulo 2 i pi matters.
class PhaseFunction {
 public:
  explicit PhaseFunction(std::vector<double> angles);

  /// Angles given in turns (multiples of 2 pi).
  static PhaseFunction from_turns(const std::vector<double>& turns);
  /// phi(j) = (2 i pi / n)(slope j + offset).
  static PhaseFunction affine(std::int64_t n, std::int64_t slope, std::int64_t offset);

  std::size_t size() const noexcept { return angles_.size(); }
  double angle(std::size_t j) const { return angles_[j]; }
  std::vector<double> turns() const;
  /// e^{k phi(j)}.
  Complex exp(std::int64_t k, std::size_t j) const;

 private:
  std::vector<double> angles_;
};

/// tau_k a(j) = a(j + k).
Signal translate(const Signal& a, std::int64_t k);
/// M_k a(j) = e^{k phi(j)} a(j).
Signal modulate(const Signal& a, std::int64_t k, const PhaseFunction& phi);

/// Parameters of T(a)(l) = c e^{2 i pi l m1 / n} a^(k0 l + m0).
struct IntertwinerClassification {
  std::int64_t order = 1;
  std::int64_t k0 = 0;
  std::int64_t m0 = 0;
  std::int64_t m1 = 0;
  Complex c = 1.0;
  double residual = 0.0;
};

/// Column j, row l = c e^{2 i pi (l m1 - j (k0 l + m0)) / n}. Throws
/// ArgumentError when c = 0.
Operator construct_intertwiner(const Group& group, std::int64_t k0, std::int64_t m0,
                               std::int64_t m1, Complex c);

/// The phases the constructed operator intertwines with:
/// phi(l) = (2 i pi / n)(k0 l + m0), psi(j) = (2 i pi / n)(m1 - k0 j).
PhaseFunction intertwiner_phi(std::int64_t n, std::int64_t k0, std::int64_t m0);
PhaseFunction intertwiner_psi(std::int64_t n, std::int64_t k0, std::int64_t m1);

/// T tau_k = M_k^(phi) T and T M_k^(psi) = tau_k T for every k, checked on the
/// full basis.
AxiomReport check_intertwining(const Operator& t, const PhaseFunction& phi,
                               const PhaseFunction& psi, double tol = kDefaultTol);

/// Reads c from T(delta_0)(0), psi from the ratio of rows 1 and 0, m0 from
/// column 1, then verifies the whole table against the reconstruction.
/// Errors: ZeroOperator, EntryVanishes, PhaseOffLattice, ReconstructionMismatch.
IntertwinerClassification classify_intertwiner(const Operator& t, double tol = kDefaultTol);

}  // namespace fourier
