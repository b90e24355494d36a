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

#include "fourier/axioms.hpp"

#include <cstdio>
#include <string>

#include "fourier/error.hpp"
#include "fourier/random.hpp"

namespace fourier {

bool ReportBuilder::record(double residual, const std::function<Witness()>& make_witness) {
  report_.max_residual = std::max(report_.max_residual, residual);
  if (residual <= report_.tolerance) return false;
  if (!report_.witness) report_.witness = make_witness();
  return true;
}

AxiomReport ReportBuilder::finish() && {
  report_.passed = report_.max_residual <= report_.tolerance;
  if (report_.passed) report_.witness.reset();
  return std::move(report_);
}

namespace {

std::vector<Complex> to_vec(const Signal& s) { return {s.values().begin(), s.values().end()}; }

Signal flat_delta(const Group& g, std::size_t k) {
  std::vector<Complex> v(g.order(), 0.0);
  v[k] = 1.0;
  return Signal(g, std::move(v));
}

std::string delta_name(const Group& g, std::size_t k) {
  if (g.is_cyclic()) return "delta_" + std::to_string(k);
  std::string s = "delta_(";
  const auto c = g.coords(k);
  for (std::size_t i = 0; i < c.size(); ++i) {
    s += (i ? "," : "") + std::to_string(c[i]);
  }
  return s + ")";
}

AxiomReport check_basis(const Operator& t, double tol) {
  if (!t.is_linear()) {
    throw ArgumentError("NotLinear", "basis mode needs a linear operator");
  }
  const Group& g = t.group();
  const std::size_t n = g.order();
  const Matrix table = t.materialize();
  ReportBuilder rb(tol);
  std::vector<Complex> rhs(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      const std::size_t sum = g.add(k, l);
      for (std::size_t r = 0; r < n; ++r) rhs[r] = table(r, k) * table(r, l);
      const auto lhs = table.column(sum);
      rb.record(relative_residual(lhs, rhs), [&] {
        return Witness{"T(" + delta_name(g, k) + " * " + delta_name(g, l) +
                           ") != T(" + delta_name(g, k) + ").T(" + delta_name(g, l) + ")",
                       {flat_delta(g, k), flat_delta(g, l)},
                       lhs,
                       rhs};
      });
    }
  }
  rb.note("basis mode: all " + std::to_string(n * n) + " delta pairs checked");
  return std::move(rb).finish();
}

AxiomReport check_sampled(const Operator& t, const SampledMode& mode, double tol) {
  const Group& g = t.group();
  Rng rng(mode.seed);
  ReportBuilder rb(tol);
  for (int i = 0; i < mode.count; ++i) {
    const Signal f = rng.signal(g);
    const Signal h = rng.signal(g);
    const Signal lhs = t.apply(convolve(f, h));
    const Signal rhs = pointwise_mul(t.apply(f), t.apply(h));
    rb.record(relative_residual(lhs.values(), rhs.values()), [&] {
      return Witness{"T(f * g) != T(f).T(g) on sample " + std::to_string(i),
                     {f, h},
                     to_vec(lhs),
                     to_vec(rhs)};
    });
  }
  rb.note("sampled mode: " + std::to_string(mode.count) + " random pairs, seed " +
          std::to_string(mode.seed));
  return std::move(rb).finish();
}

}  // namespace

AxiomReport check_conv_homomorphism(const Operator& t, const CheckMode& mode, double tol) {
  if (std::holds_alternative<BasisMode>(mode)) return check_basis(t, tol);
  return check_sampled(t, std::get<SampledMode>(mode), tol);
}

AxiomReport check_exchange_axioms(const Operator& t, int count, std::uint64_t seed,
                                  double tol) {
  const Group& g = t.group();
  Rng rng(seed);
  ReportBuilder rb(tol);

  auto check_pair = [&](const Signal& a, const Signal& b, const std::string& label) {
    const Signal ta = t.apply(a);
    const Signal tb = t.apply(b);
    const Signal prod_lhs = t.apply(pointwise_mul(a, b));
    const Signal prod_rhs = pointwise_mul(ta, tb);
    rb.record(relative_residual(prod_lhs.values(), prod_rhs.values()), [&] {
      return Witness{"T(a.b) != T(a).T(b) for " + label, {a, b}, to_vec(prod_lhs),
                     to_vec(prod_rhs)};
    });
    const Signal conv_lhs = t.apply(convolve(a, b));
    const Signal conv_rhs = convolve(ta, tb);
    rb.record(relative_residual(conv_lhs.values(), conv_rhs.values()), [&] {
      return Witness{"T(a * b) != T(a) * T(b) for " + label, {a, b}, to_vec(conv_lhs),
                     to_vec(conv_rhs)};
    });
  };

  check_pair(zeros(g), zeros(g), "(0, 0)");
  const std::vector<Complex> constants = {0.0, 1.0, 2.0, {0.0, 1.0}, {-1.5, 0.5}};
  for (const Complex c : constants) {
    check_pair(constant(g, c), rng.signal(g), "(c1, a) with c = " + to_string(c));
  }
  for (std::size_t j = 0; j < g.order(); ++j) {
    check_pair(flat_delta(g, j), rng.signal(g), "(" + delta_name(g, j) + ", a)");
  }
  for (int i = 0; i < count; ++i) {
    const Signal a = rng.signal(g);
    const Signal b = rng.signal(g);
    check_pair(a, b, "random pair " + std::to_string(i));
  }

  // Continuity on constants cannot be certified from finitely many probes;
  // record the largest jump seen on a small grid.
  constexpr double kStep = 1e-6;
  double worst_jump = 0.0;
  for (const Complex c : {Complex{0.0}, Complex{0.5}, Complex{1.0}, Complex{-2.0},
                          Complex{1.0, 1.0}, Complex{0.0, -3.0}}) {
    const Signal here = t.apply(constant(g, c));
    const Signal near = t.apply(constant(g, c + kStep));
    worst_jump = std::max(worst_jump, max_abs_diff(here.values(), near.values()));
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "continuity of c -> T(c1) probed on 6 grid points with step %.0e only; "
                "largest jump %.3g",
                kStep, worst_jump);
  rb.note(buf);
  rb.note("bijectivity assumed, not verified");
  return std::move(rb).finish();
}

}  // namespace fourier
