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

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "fourier/group.hpp"
#include "fourier/signal.hpp"

namespace fourier {

/// Dense complex matrix, row-major. For an operator table the entry
/// (row eta, column k) is T(delta_k)(eta).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Complex fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Complex> row(std::size_t r) const {
    return std::span<const Complex>(data_).subspan(r * cols_, cols_);
  }
  std::vector<Complex> column(std::size_t c) const;
  std::span<const Complex> data() const noexcept { return data_; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// The transform T on L^1(G): a dense table (linear by construction) or an
/// arbitrary evaluator, possibly nonlinear.
class Operator {
 public:
  using Evaluator = std::function<Signal(const Signal&)>;

  static Operator dense(Group group, Matrix table);
  /// `linear` is a caller promise; it unlocks basis-mode checks and
  /// materialization for evaluators.
  static Operator blackbox(Group group, Evaluator eval, bool linear = false);

  const Group& group() const noexcept { return group_; }
  bool is_dense() const noexcept { return std::holds_alternative<Matrix>(form_); }
  bool is_linear() const noexcept { return is_dense() || linear_hint_; }

  /// Throws ArgumentError for blackbox operators.
  const Matrix& table() const;
  /// Dense table of a linear operator, built column by column from deltas
  /// when the operator is a linear blackbox.
  Matrix materialize() const;

  Signal apply(const Signal& a) const;
  Signal operator()(const Signal& a) const { return apply(a); }

 private:
  Operator(Group group, std::variant<Matrix, Evaluator> form, bool linear)
      : group_(std::move(group)), form_(std::move(form)), linear_hint_(linear) {}

  Group group_;
  std::variant<Matrix, Evaluator> form_;
  bool linear_hint_ = true;
};

Signal apply(const Operator& t, const Signal& a);

/// a -> S(T(a)). Two dense operators compose into a dense table.
Operator compose(const Operator& s, const Operator& t);

Operator identity_operator(const Group& g);
Operator zero_operator(const Group& g);
/// Table of the counting-measure DFT on a cyclic group.
Operator dft_operator(const Group& g);
Operator idft_operator(const Group& g);
/// DFT scaled by 1/sqrt(n).
Operator unitary_dft_operator(const Group& g);

}  // namespace fourier
