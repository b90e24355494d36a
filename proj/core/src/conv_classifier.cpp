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

#include "fourier/conv_classifier.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fourier/error.hpp"

namespace fourier {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex lattice_root(std::int64_t m, std::int64_t n) {
  return std::polar(1.0, kTwoPi * static_cast<double>(mod(m, n)) / static_cast<double>(n));
}

}  // namespace

std::int64_t ConvClassification::sigma_at(std::int64_t eta) const {
  const auto it = sigma.find(eta);
  if (it == sigma.end()) {
    throw ArgumentError("OffSupport", "sigma is undefined at eta = " + std::to_string(eta));
  }
  return it->second;
}

LatticeSnap snap_to_lattice(double angle, std::int64_t n) {
  const double step = kTwoPi / static_cast<double>(n);
  const auto nearest = static_cast<std::int64_t>(std::llround(angle / step));
  double dev = angle - static_cast<double>(nearest) * step;
  dev = std::remainder(dev, kTwoPi);
  return {mod(nearest, n), std::abs(dev)};
}

ConvClassification classify_conv(const Operator& t, double tol) {
  const std::int64_t n = t.group().require_cyclic("classify_conv");
  const AxiomReport pre = check_conv_homomorphism(t, BasisMode{}, tol);
  if (!pre.passed) {
    throw ClassificationError("AxiomViolation",
                              pre.witness->description + ", residual " +
                                  std::to_string(pre.max_residual));
  }
  const Matrix table = t.materialize();
  const auto un = static_cast<std::size_t>(n);
  // entries are judged on the scale of the axiom residual; errors in z^k
  // grow with k, so the chained checks get n times that
  const double snap_tol = tol * (1.0 + max_abs(table.data()));
  const double chain_tol = snap_tol * static_cast<double>(n);
  const double angle_window = chain_tol;

  ConvClassification out;
  out.order = n;
  for (std::size_t eta = 0; eta < un; ++eta) {
    const auto row = table.row(eta);
    const Complex at_zero = row[0];
    const auto eta_s = std::to_string(eta);

    if (std::abs(at_zero) <= snap_tol) {
      // pi_eta vanishes at 0, so it must vanish everywhere
      for (std::size_t k = 0; k < un; ++k) {
        if (std::abs(row[k]) > snap_tol) {
          throw ClassificationError("RowNotHomomorphic",
                                    "eta=" + eta_s + ", value=" + to_string(row[k]) +
                                        " at k=" + std::to_string(k) +
                                        " in a row that vanishes at k=0");
        }
        out.residual = std::max(out.residual, std::abs(row[k]));
      }
      continue;
    }
    if (std::abs(at_zero - 1.0) > snap_tol) {
      throw ClassificationError("RowNotHomomorphic",
                                "eta=" + eta_s + ", value=" + to_string(at_zero) +
                                    " at k=0 is neither 0 nor 1");
    }

    const Complex z = row[1 % un];
    const double power_dev = std::abs(std::pow(z, static_cast<double>(n)) - 1.0);
    // canonical rows are e^{-2 i pi k sigma / n}, hence the minus sign
    const LatticeSnap snap = snap_to_lattice(-std::arg(z), n);
    if (power_dev > chain_tol || snap.deviation > angle_window) {
      throw ClassificationError("NotRootOfUnity", "eta=" + eta_s + ", z=" + to_string(z));
    }
    for (std::size_t k = 0; k < un; ++k) {
      const Complex expected =
          lattice_root(-static_cast<std::int64_t>(k) * snap.index, n);
      const double dev = std::abs(row[k] - expected);
      if (dev > chain_tol) {
        throw ClassificationError("RowNotHomomorphic",
                                  "eta=" + eta_s + ", value=" + to_string(row[k]) +
                                      " at k=" + std::to_string(k) + " is not z^k");
      }
      out.residual = std::max(out.residual, dev);
    }
    out.support.push_back(static_cast<std::int64_t>(eta));
    out.sigma.emplace(static_cast<std::int64_t>(eta), snap.index);
  }
  return out;
}

Operator construct_conv(const Group& group,
                        const std::map<std::int64_t, std::int64_t>& sigma) {
  const std::int64_t n = group.require_cyclic("construct_conv");
  const auto un = static_cast<std::size_t>(n);
  Matrix table(un, un);
  for (const auto& [eta, s] : sigma) {
    if (eta < 0 || eta >= n) {
      throw ArgumentError("SupportOutOfRange", "eta=" + std::to_string(eta));
    }
    if (s < 0 || s >= n) {
      throw ArgumentError("SigmaOutOfRange", "sigma(" + std::to_string(eta) +
                                                 ")=" + std::to_string(s));
    }
    for (std::size_t k = 0; k < un; ++k) {
      table(static_cast<std::size_t>(eta), k) =
          lattice_root(-static_cast<std::int64_t>(k) * s, n);
    }
  }
  return Operator::dense(group, std::move(table));
}

double roundtrip_residual(const Operator& t, const ConvClassification& cls) {
  const Operator rebuilt = construct_conv(t.group(), cls.sigma);
  return max_abs_diff(t.materialize().data(), rebuilt.table().data());
}

}  // namespace fourier
