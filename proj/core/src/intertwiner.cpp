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

#include "fourier/intertwiner.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fourier/conv_classifier.hpp"
#include "fourier/error.hpp"

namespace fourier {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double canonical_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0) r += kTwoPi;
  // fmod can return exactly 2 pi after the shift for tiny negative inputs
  return r >= kTwoPi ? 0.0 : r;
}

Complex lattice_root(std::int64_t m, std::int64_t n) {
  return std::polar(1.0, kTwoPi * static_cast<double>(mod(m, n)) / static_cast<double>(n));
}

}  // namespace

PhaseFunction::PhaseFunction(std::vector<double> angles) : angles_(std::move(angles)) {
  for (double& a : angles_) {
    if (!std::isfinite(a)) throw ArgumentError("NonFiniteValue", "phase angle");
    a = canonical_angle(a);
  }
}

PhaseFunction PhaseFunction::from_turns(const std::vector<double>& turns) {
  std::vector<double> angles(turns.size());
  for (std::size_t i = 0; i < turns.size(); ++i) angles[i] = kTwoPi * turns[i];
  return PhaseFunction(std::move(angles));
}

PhaseFunction PhaseFunction::affine(std::int64_t n, std::int64_t slope, std::int64_t offset) {
  std::vector<double> angles(static_cast<std::size_t>(n));
  for (std::int64_t j = 0; j < n; ++j) {
    angles[static_cast<std::size_t>(j)] =
        kTwoPi * static_cast<double>(mod(slope * j + offset, n)) / static_cast<double>(n);
  }
  return PhaseFunction(std::move(angles));
}

std::vector<double> PhaseFunction::turns() const {
  std::vector<double> out(angles_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = angles_[i] / kTwoPi;
  return out;
}

Complex PhaseFunction::exp(std::int64_t k, std::size_t j) const {
  return std::polar(1.0, canonical_angle(static_cast<double>(k) * angles_[j]));
}

Signal translate(const Signal& a, std::int64_t k) {
  a.group().require_cyclic("translate");
  const auto n = static_cast<std::int64_t>(a.size());
  std::vector<Complex> out(a.size());
  for (std::int64_t j = 0; j < n; ++j) out[static_cast<std::size_t>(j)] = a.at(j + k);
  return Signal(a.group(), std::move(out));
}

Signal modulate(const Signal& a, std::int64_t k, const PhaseFunction& phi) {
  if (phi.size() != a.size()) {
    throw ArgumentError("LengthMismatch", "phase function has " + std::to_string(phi.size()) +
                                              " values, signal has " +
                                              std::to_string(a.size()));
  }
  std::vector<Complex> out(a.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = phi.exp(k, j) * a[j];
  return Signal(a.group(), std::move(out));
}

Operator construct_intertwiner(const Group& group, std::int64_t k0, std::int64_t m0,
                               std::int64_t m1, Complex c) {
  const std::int64_t n = group.require_cyclic("construct_intertwiner");
  if (c == 0.0) throw ArgumentError("ZeroScale", "c must be nonzero");
  const auto un = static_cast<std::size_t>(n);
  Matrix table(un, un);
  for (std::int64_t l = 0; l < n; ++l) {
    for (std::int64_t j = 0; j < n; ++j) {
      // all phase arithmetic stays in Z/n
      const std::int64_t phase = mod(l * m1 - j * mod(k0 * l + m0, n), n);
      table(static_cast<std::size_t>(l), static_cast<std::size_t>(j)) =
          c * lattice_root(phase, n);
    }
  }
  return Operator::dense(group, std::move(table));
}

PhaseFunction intertwiner_phi(std::int64_t n, std::int64_t k0, std::int64_t m0) {
  return PhaseFunction::affine(n, k0, m0);
}

PhaseFunction intertwiner_psi(std::int64_t n, std::int64_t k0, std::int64_t m1) {
  return PhaseFunction::affine(n, -k0, m1);
}

AxiomReport check_intertwining(const Operator& t, const PhaseFunction& phi,
                               const PhaseFunction& psi, double tol) {
  const std::int64_t n = t.group().require_cyclic("check_intertwining");
  const auto un = static_cast<std::size_t>(n);
  if (phi.size() != un || psi.size() != un) {
    throw ArgumentError("LengthMismatch", "phase functions must have n values");
  }
  const Matrix table = t.materialize();
  ReportBuilder rb(tol);
  std::vector<Complex> lhs(un), rhs(un);
  for (std::int64_t k = 0; k < n; ++k) {
    for (std::int64_t j = 0; j < n; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      // T tau_k delta_j = T delta_{j-k}  vs  M_k^(phi) T delta_j
      const auto shifted = static_cast<std::size_t>(mod(j - k, n));
      for (std::size_t l = 0; l < un; ++l) {
        lhs[l] = table(l, shifted);
        rhs[l] = phi.exp(k, l) * table(l, uj);
      }
      rb.record(relative_residual(lhs, rhs), [&] {
        return Witness{"T tau_k != M_k^(phi) T at k=" + std::to_string(k) +
                           " on delta_" + std::to_string(j),
                       {delta(t.group(), j)},
                       lhs,
                       rhs};
      });
      // T M_k^(psi) delta_j = e^{k psi(j)} T delta_j  vs  tau_k T delta_j
      for (std::size_t l = 0; l < un; ++l) {
        lhs[l] = psi.exp(k, uj) * table(l, uj);
        rhs[l] = table(static_cast<std::size_t>(mod(static_cast<std::int64_t>(l) + k, n)), uj);
      }
      rb.record(relative_residual(lhs, rhs), [&] {
        return Witness{"T M_k^(psi) != tau_k T at k=" + std::to_string(k) + " on delta_" +
                           std::to_string(j),
                       {delta(t.group(), j)},
                       lhs,
                       rhs};
      });
    }
  }
  return std::move(rb).finish();
}

IntertwinerClassification classify_intertwiner(const Operator& t, double tol) {
  const std::int64_t n = t.group().require_cyclic("classify_intertwiner");
  const auto un = static_cast<std::size_t>(n);
  const Matrix table = t.materialize();

  if (max_abs(table.data()) <= tol) {
    throw ClassificationError("ZeroOperator", "every entry is within tol of 0");
  }
  for (std::size_t j = 0; j < un; ++j) {
    for (std::size_t l = 0; l < un; ++l) {
      if (std::abs(table(l, j)) <= tol) {
        throw ClassificationError("EntryVanishes",
                                  "j=" + std::to_string(j) + ", l=" + std::to_string(l));
      }
    }
  }

  IntertwinerClassification out;
  out.order = n;
  out.c = table(0, 0);
  if (n > 1) {
    const double window = tol * static_cast<double>(n) / std::numbers::pi;
    auto snap = [&](Complex ratio, std::size_t j) {
      const LatticeSnap s = snap_to_lattice(std::arg(ratio), n);
      if (s.deviation > window) {
        throw ClassificationError("PhaseOffLattice",
                                  "j=" + std::to_string(j) +
                                      ", deviation=" + std::to_string(s.deviation));
      }
      return s.index;
    };
    // psi(j) = (2 i pi / n)(m1 - k0 j) from T(delta_j)(1) / T(delta_j)(0)
    const std::int64_t psi0 = snap(table(1, 0) / table(0, 0), 0);
    const std::int64_t psi1 = snap(table(1, 1) / table(0, 1), 1);
    out.m1 = psi0;
    out.k0 = mod(psi0 - psi1, n);
    // T(delta_1)(0) = c e^{-2 i pi m0 / n}
    out.m0 = mod(-snap(table(0, 1) / out.c, 1), n);
  }

  const Operator rebuilt = construct_intertwiner(t.group(), out.k0, out.m0, out.m1, out.c);
  out.residual = max_abs_diff(table.data(), rebuilt.table().data());
  if (out.residual > tol * std::max(1.0, std::abs(out.c))) {
    throw ClassificationError("ReconstructionMismatch",
                              "residual=" + std::to_string(out.residual));
  }
  return out;
}

}  // namespace fourier
