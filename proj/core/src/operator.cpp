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

#include "fourier/operator.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fourier/error.hpp"

namespace fourier {

std::vector<Complex> Matrix::column(std::size_t c) const {
  std::vector<Complex> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw ArgumentError("DimensionMismatch", std::to_string(a.cols_) + " vs " +
                                                 std::to_string(b.rows_));
  }
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Complex aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Operator Operator::dense(Group group, Matrix table) {
  const std::size_t n = group.order();
  if (table.rows() != n || table.cols() != n) {
    throw ArgumentError("DimensionMismatch",
                        "operator table is " + std::to_string(table.rows()) + "x" +
                            std::to_string(table.cols()) + ", group order is " +
                            std::to_string(n));
  }
  for (const Complex& z : table.data()) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw ArgumentError("NonFiniteValue", "operator table entry");
    }
  }
  return Operator(std::move(group), std::move(table), true);
}

Operator Operator::blackbox(Group group, Evaluator eval, bool linear) {
  if (!eval) throw ArgumentError("InvalidOperator", "empty evaluator");
  return Operator(std::move(group), std::move(eval), linear);
}

const Matrix& Operator::table() const {
  if (const auto* m = std::get_if<Matrix>(&form_)) return *m;
  throw ArgumentError("NotDense", "operator has no table");
}

Matrix Operator::materialize() const {
  if (is_dense()) return table();
  if (!linear_hint_) {
    throw ArgumentError("NotLinear", "cannot tabulate a nonlinear blackbox");
  }
  const std::size_t n = group_.order();
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Complex> d(n, 0.0);
    d[k] = 1.0;
    const Signal col = apply(Signal(group_, std::move(d)));
    for (std::size_t r = 0; r < n; ++r) m(r, k) = col[r];
  }
  return m;
}

Signal Operator::apply(const Signal& a) const {
  require_same_group(group_, a.group(), "Operator::apply");
  if (const auto* m = std::get_if<Matrix>(&form_)) {
    const std::size_t n = group_.order();
    std::vector<Complex> out(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      const Complex ak = a[k];
      if (ak == 0.0) continue;
      for (std::size_t r = 0; r < n; ++r) out[r] += ak * (*m)(r, k);
    }
    return Signal(group_, std::move(out));
  }
  Signal out = std::get<Evaluator>(form_)(a);
  if (!(out.group() == group_)) {
    throw ArgumentError("BlackboxOutputMismatch",
                        "evaluator returned a signal of length " +
                            std::to_string(out.size()) + " on a different group");
  }
  return out;
}

Signal apply(const Operator& t, const Signal& a) { return t.apply(a); }

Operator compose(const Operator& s, const Operator& t) {
  require_same_group(s.group(), t.group(), "compose");
  if (s.is_dense() && t.is_dense()) {
    return Operator::dense(s.group(), s.table() * t.table());
  }
  return Operator::blackbox(
      s.group(), [s, t](const Signal& a) { return s.apply(t.apply(a)); },
      s.is_linear() && t.is_linear());
}

Operator identity_operator(const Group& g) {
  Matrix m(g.order(), g.order());
  for (std::size_t i = 0; i < g.order(); ++i) m(i, i) = 1.0;
  return Operator::dense(g, std::move(m));
}

Operator zero_operator(const Group& g) {
  return Operator::dense(g, Matrix(g.order(), g.order()));
}

namespace {

Matrix character_table(std::size_t n, double sign, double scale) {
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const double angle = sign * 2.0 * std::numbers::pi *
                           static_cast<double>((r * k) % n) / static_cast<double>(n);
      m(r, k) = std::polar(scale, angle);
    }
  }
  return m;
}

}  // namespace

Operator dft_operator(const Group& g) {
  const auto n = static_cast<std::size_t>(g.require_cyclic("dft_operator"));
  return Operator::dense(g, character_table(n, -1.0, 1.0));
}

Operator idft_operator(const Group& g) {
  const auto n = static_cast<std::size_t>(g.require_cyclic("idft_operator"));
  return Operator::dense(g, character_table(n, 1.0, 1.0 / static_cast<double>(n)));
}

Operator unitary_dft_operator(const Group& g) {
  const auto n = static_cast<std::size_t>(g.require_cyclic("unitary_dft_operator"));
  return Operator::dense(g, character_table(n, -1.0, 1.0 / std::sqrt(static_cast<double>(n))));
}

}  // namespace fourier
