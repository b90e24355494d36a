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

#include <gtest/gtest.h>

#include <vector>

#include "fourier/error.hpp"
#include "fourier/group.hpp"
#include "fourier/random.hpp"
#include "fourier/signal.hpp"
#include "oracles.hpp"

namespace fourier {
namespace {

using V = std::vector<Complex>;

void expect_values(const Signal& s, std::span<const Complex> want, double tol = 1e-12) {
  ASSERT_EQ(s.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_NEAR(std::abs(s[i] - want[i]), 0.0, tol) << "index " << i;
  }
}

TEST(Group, RejectsEmptyAndNonPositive) {
  EXPECT_THROW(Group({}), ArgumentError);
  EXPECT_THROW(Group({3, 0}), ArgumentError);
  EXPECT_EQ(Group({1}).order(), 1u);
}

TEST(Group, MixedRadixFirstFactorMostSignificant) {
  const Group g({2, 3});
  EXPECT_EQ(g.order(), 6u);
  const std::int64_t c[] = {1, 2};
  EXPECT_EQ(g.index(c), 5u);
  const std::int64_t wrapped[] = {3, -1};
  EXPECT_EQ(g.index(wrapped), 5u);
  EXPECT_EQ(g.coords(4), (std::vector<std::int64_t>{1, 1}));
  EXPECT_EQ(g.add(5, 4), g.index(std::vector<std::int64_t>{0, 0}));
  EXPECT_EQ(g.negate(4), g.index(std::vector<std::int64_t>{1, 2}));
}

TEST(Group, InverseMod) {
  EXPECT_EQ(inverse_mod(3, 8), 3);
  EXPECT_EQ(inverse_mod(5, 12), 5);
  EXPECT_EQ(mod(7 * inverse_mod(7, 10), 10), 1);
  EXPECT_THROW(inverse_mod(2, 8), ArgumentError);
}

TEST(Signal, RejectsWrongLengthAndNonFinite) {
  EXPECT_THROW(Signal(Group::cyclic(3), V{1, 2}), ArgumentError);
  EXPECT_THROW(Signal(Group::cyclic(2), V{1, Complex(std::nan(""), 0)}), ArgumentError);
}

TEST(Delta, Examples) {
  expect_values(delta(Group::cyclic(4), 0), V{1, 0, 0, 0});
  expect_values(delta(Group::cyclic(4), 2), V{0, 0, 1, 0});
  const Group g({2, 2});
  const std::int64_t e[] = {1, 0};
  const Signal d = delta(g, e);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(d[i], Complex(i == g.index(e) ? 1.0 : 0.0));
}

TEST(Constant, Examples) {
  const Group g = Group::cyclic(3);
  expect_values(constant(g, 1), V{1, 1, 1});
  expect_values(constant(g, 0), V{0, 0, 0});
  expect_values(constant(g, Complex(2, 1)), V(3, Complex(2, 1)));
  EXPECT_EQ(ones(g), constant(g, 1));
  EXPECT_EQ(zeros(g), constant(g, 0));
}

TEST(Convolve, DeltasAdd) {
  const Group g = Group::cyclic(7);
  for (std::int64_t k = 0; k < 7; ++k) {
    for (std::int64_t l = 0; l < 7; ++l) {
      EXPECT_EQ(convolve(delta(g, k), delta(g, l)), delta(g, (k + l) % 7));
    }
  }
}

TEST(Convolve, AgainstOnesIsExpectation) {
  Rng rng(3);
  const Group g = Group::cyclic(6);
  const Signal a = rng.signal(g);
  expect_values(convolve(a, ones(g)), V(6, expectation(a)));
}

TEST(Convolve, SmallOracleExample) {
  const Group g = Group::cyclic(3);
  const Signal f(g, {1, 2, 0});
  const Signal h(g, {1, 0, 1});
  const V want = oracle::convolve(f, h);
  expect_values(convolve(f, h), want);
  // hand sum: x=0: 1+2+0, x=1: 0+2+0, x=2: 1+0+0
  expect_values(convolve(f, h), V{3, 2, 1});
}

TEST(Convolve, MatchesOracleOnProductGroups) {
  Rng rng(11);
  for (const auto& fac : {std::vector<std::int64_t>{2, 3}, {4, 2, 3}, {5}, {1, 6}}) {
    const Group g(fac);
    const Signal f = rng.signal(g), h = rng.signal(g);
    EXPECT_LT(oracle::max_diff(oracle::convolve(f, h), convolve(f, h).values()), 1e-12);
    EXPECT_LT(max_abs_diff(convolve(f, h).values(), convolve(h, f).values()), 1e-12);
    const std::vector<std::int64_t> origin(fac.size(), 0);
    EXPECT_EQ(convolve(delta(g, origin), f), f);
  }
}

TEST(Convolve, GroupMismatch) {
  EXPECT_THROW(convolve(ones(Group::cyclic(3)), ones(Group::cyclic(4))), ArgumentError);
  EXPECT_THROW(pointwise_mul(ones(Group({2, 3})), ones(Group({3, 2}))), ArgumentError);
}

TEST(PointwiseMul, Examples) {
  Rng rng(5);
  const Group g = Group::cyclic(5);
  const Signal a = rng.signal(g);
  EXPECT_EQ(pointwise_mul(a, ones(g)), a);
  EXPECT_EQ(pointwise_mul(a, zeros(g)), zeros(g));
  EXPECT_EQ(pointwise_mul(delta(g, 1), delta(g, 2)), zeros(g));
  EXPECT_EQ(pointwise_mul(delta(g, 3), delta(g, 3)), delta(g, 3));
}

TEST(Bilinearity, ConvolveAndPointwise) {
  Rng rng(8);
  const Group g({3, 4});
  const Signal a = rng.signal(g), b = rng.signal(g), c = rng.signal(g);
  const Complex x(0.3, -1.2), y(2.0, 0.5);
  const Signal comb = add(scale(a, x), scale(b, y));
  for (auto op : {&convolve, &pointwise_mul}) {
    const Signal lhs = op(comb, c);
    const Signal rhs = add(scale(op(a, c), x), scale(op(b, c), y));
    EXPECT_LT(max_abs_diff(lhs.values(), rhs.values()), 1e-12);
  }
}

TEST(Dft, Examples) {
  for (std::int64_t n : {1, 2, 3, 5, 8, 12, 16}) {
    const Group g = Group::cyclic(n);
    expect_values(dft(delta(g, 0)), V(static_cast<std::size_t>(n), 1.0));
    expect_values(dft(ones(g)), scale(delta(g, 0), static_cast<double>(n)).values(), 1e-12 * n);
  }
}

TEST(Dft, MatchesDoubleSumOracle) {
  Rng rng(21);
  for (const auto& fac : std::vector<std::vector<std::int64_t>>{
           {1}, {2}, {7}, {8}, {12}, {64}, {2, 4}, {3, 5}, {4, 8}, {2, 3, 2}}) {
    const Group g(fac);
    const Signal f = rng.signal(g);
    const auto want = oracle::dft(f);
    EXPECT_LT(oracle::max_diff(want, dft(f).values()), 1e-11) << g.order();
    EXPECT_LT(oracle::max_diff(want, dft_direct(f).values()), 1e-11) << g.order();
  }
}

TEST(Dft, ConvolutionTheorem) {
  Rng rng(4);
  for (std::int64_t n = 1; n <= 8; ++n) {
    const Group g = Group::cyclic(n);
    for (int trial = 0; trial < 5; ++trial) {
      const Signal f = rng.signal(g), h = rng.signal(g);
      // both sides from the brute-force oracle, then against the library
      const auto lhs = oracle::dft(Signal(g, oracle::convolve(f, h)));
      const auto fh = oracle::dft(f), hh = oracle::dft(h);
      V rhs(fh.size());
      for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = fh[i] * hh[i];
      EXPECT_LT(oracle::max_diff(lhs, rhs), 1e-12);
      EXPECT_LT(oracle::max_diff(lhs, dft(convolve(f, h)).values()), 1e-11);
      EXPECT_LT(max_abs_diff(dft(convolve(f, h)).values(),
                             pointwise_mul(dft(f), dft(h)).values()),
                1e-11);
    }
  }
}

TEST(Idft, Examples) {
  const Group g = Group::cyclic(8);
  expect_values(idft(dft(delta(g, 3))), delta(g, 3).values());
  expect_values(idft(ones(g)), delta(g, 0).values());
  expect_values(idft(scale(delta(g, 0), 8.0)), ones(g).values());
}

TEST(Idft, UsesPositiveExponentAndOneOverN) {
  Rng rng(9);
  const Group g({3, 4});
  const Signal f = rng.signal(g);
  auto want = oracle::dft(f, +1);
  for (auto& z : want) z /= 12.0;
  EXPECT_LT(oracle::max_diff(want, idft(f).values()), 1e-12);
}

TEST(Idft, RoundTripUpTo1024) {
  Rng rng(1);
  for (std::int64_t n : {1, 2, 3, 17, 64, 100, 255, 256, 1000, 1024}) {
    const Signal f = rng.signal(Group::cyclic(n));
    EXPECT_LT(relative_residual(idft(dft(f)).values(), f.values()), 1e-12) << n;
    EXPECT_LT(relative_residual(dft(idft(f)).values(), f.values()), 1e-12) << n;
  }
}

TEST(Expectation, Examples) {
  EXPECT_EQ(expectation(ones(Group::cyclic(5))), Complex(5));
  EXPECT_EQ(expectation(delta(Group::cyclic(5), 3)), Complex(1));
  EXPECT_EQ(expectation(Signal(Group::cyclic(3), {1, Complex(0, 1), -1})), Complex(0, 1));
}

TEST(Expectation, MultiplicativeAndDftAtZero) {
  Rng rng(12);
  const Group g({2, 5});
  for (int trial = 0; trial < 10; ++trial) {
    const Signal a = rng.signal(g), b = rng.signal(g);
    EXPECT_LT(std::abs(expectation(convolve(a, b)) - expectation(a) * expectation(b)), 1e-12);
    EXPECT_LT(std::abs(expectation(a) - dft(a)[0]), 1e-12);
  }
}

TEST(Residual, ScaleFreeMetric) {
  const V a{Complex(100, 0)}, b{Complex(101, 0)};
  EXPECT_DOUBLE_EQ(relative_residual(a, b), 1.0 / 102.0);
  EXPECT_DOUBLE_EQ(relative_residual(V{0.0}, V{0.0}), 0.0);
}

TEST(Rng, Deterministic) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    const Complex z = a.unit_disc();
    EXPECT_EQ(z, b.unit_disc());
    EXPECT_LE(std::abs(z), 1.0);
  }
}

}  // namespace
}  // namespace fourier
