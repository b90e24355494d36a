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

#include <cmath>
#include <numbers>

#include "fourier/conv_classifier.hpp"
#include "fourier/error.hpp"
#include "fourier/intertwiner.hpp"
#include "fourier/random.hpp"
#include "oracles.hpp"

namespace fourier {
namespace {

// T(delta_j)(l) = c e^{2 i pi l m1 / n} delta_j^(k0 l + m0), by double sum.
Matrix oracle_table(std::int64_t n, std::int64_t k0, std::int64_t m0, std::int64_t m1, Complex c) {
  const Group g = Group::cyclic(n);
  const auto un = static_cast<std::size_t>(n);
  Matrix m(un, un);
  for (std::int64_t j = 0; j < n; ++j) {
    const auto hat = oracle::dft(delta(g, j));
    for (std::int64_t l = 0; l < n; ++l) {
      m(static_cast<std::size_t>(l), static_cast<std::size_t>(j)) =
          c * oracle::root(l * m1, n) * hat[static_cast<std::size_t>(oracle::wrap(k0 * l + m0, n))];
    }
  }
  return m;
}

std::string kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

TEST(Translate, Examples) {
  const Group g = Group::cyclic(4);
  const Signal a = Rng(1).signal(g);
  EXPECT_EQ(translate(a, 0), a);
  EXPECT_EQ(translate(delta(g, 0), 1), delta(g, 3));
  EXPECT_EQ(translate(a, 4), a);
  EXPECT_EQ(translate(a, -1), translate(a, 3));
}

TEST(Modulate, Examples) {
  const Group g = Group::cyclic(6);
  const Signal a = Rng(2).signal(g);
  const PhaseFunction lin = PhaseFunction::affine(6, 1, 0);
  EXPECT_EQ(modulate(a, 0, lin), a);
  EXPECT_EQ(modulate(a, 3, PhaseFunction(std::vector<double>(6, 0.0))), a);
  const Signal row = modulate(ones(g), 1, lin);
  for (std::int64_t j = 0; j < 6; ++j) EXPECT_LT(std::abs(row.at(j) - oracle::root(j, 6)), 1e-15);
  EXPECT_THROW(modulate(a, 1, PhaseFunction::affine(5, 1, 0)), ArgumentError);
}

TEST(PhaseFunction, CanonicalizesAngles) {
  const PhaseFunction p({-std::numbers::pi / 2, 2 * std::numbers::pi, 7.0});
  for (std::size_t j = 0; j < p.size(); ++j) {
    EXPECT_GE(p.angle(j), 0.0);
    EXPECT_LT(p.angle(j), 2 * std::numbers::pi);
  }
  EXPECT_NEAR(p.turns()[0], 0.75, 1e-15);
  EXPECT_NEAR(p.turns()[1], 0.0, 1e-15);
  const PhaseFunction q = PhaseFunction::from_turns({0.25, 1.5});
  EXPECT_NEAR(q.angle(1), std::numbers::pi, 1e-15);
}

TEST(ConstructIntertwiner, Examples) {
  const Group g = Group::cyclic(6);
  EXPECT_LT(max_abs_diff(construct_intertwiner(g, 1, 0, 0, 1.0).table().data(),
                         dft_operator(g).table().data()),
            1e-14);
  // DFT followed by modulation e^{2 i pi l / n}
  const Matrix m = construct_intertwiner(g, 1, 0, 1, 1.0).table();
  const Matrix d = dft_operator(g).table();
  for (std::size_t l = 0; l < 6; ++l) {
    for (std::size_t j = 0; j < 6; ++j) {
      EXPECT_LT(std::abs(m(l, j) - oracle::root(static_cast<std::int64_t>(l), 6) * d(l, j)), 1e-14);
    }
  }
  // rank one: every row e^{-2 i pi j / n}
  const Operator r1 = construct_intertwiner(g, 0, 1, 0, 1.0);
  for (std::size_t l = 0; l < 6; ++l) {
    for (std::size_t j = 0; j < 6; ++j) {
      EXPECT_LT(std::abs(r1.table()(l, j) - oracle::root(-static_cast<std::int64_t>(j), 6)), 1e-14);
    }
  }
  EXPECT_THROW(construct_intertwiner(g, 1, 0, 0, 0.0), ArgumentError);
}

// Both relations by direct substitution: T tau_k a = M_k^phi T a and
// T M_k^psi a = tau_k T a, on basis vectors.
double brute_relations(const Operator& t, std::int64_t n, std::int64_t k0, std::int64_t m0,
                       std::int64_t m1) {
  const Group g = Group::cyclic(n);
  double worst = 0;
  for (std::int64_t k = 0; k < n; ++k) {
    for (std::int64_t j = 0; j < n; ++j) {
      const Signal a = delta(g, j);
      // tau_k delta_j = delta_{j-k}
      const Signal lhs1 = t(delta(g, oracle::wrap(j - k, n)));
      const Signal ta = t(a);
      for (std::int64_t l = 0; l < n; ++l) {
        const Complex rhs1 = oracle::root(k * (k0 * l + m0), n) * ta.at(l);
        worst = std::max(worst, std::abs(lhs1.at(l) - rhs1));
        // M_k^psi delta_j = e^{k psi(j)} delta_j
        const Complex lhs2 = oracle::root(k * (m1 - k0 * j), n) * ta.at(l);
        worst = std::max(worst, std::abs(lhs2 - ta.at(l + k)));
      }
    }
  }
  return worst;
}

TEST(ConstructIntertwiner, MatchesFormulaAndRelations) {
  Rng rng(4);
  for (std::int64_t n : {2, 5, 6, 8}) {
    for (int trial = 0; trial < 5; ++trial) {
      const std::int64_t k0 = rng.integer(0, n - 1), m0 = rng.integer(0, n - 1),
                         m1 = rng.integer(0, n - 1);
      const Complex c = rng.unit_disc() + 0.1;
      const Operator t = construct_intertwiner(Group::cyclic(n), k0, m0, m1, c);
      EXPECT_LT(max_abs_diff(t.table().data(), oracle_table(n, k0, m0, m1, c).data()), 1e-12);
      EXPECT_LT(brute_relations(t, n, k0, m0, m1), 1e-12);
      const AxiomReport r = check_intertwining(t, intertwiner_phi(n, k0, m0),
                                               intertwiner_psi(n, k0, m1));
      EXPECT_TRUE(r.passed);
      EXPECT_LE(r.max_residual, 1e-11);
    }
  }
}

TEST(CheckIntertwining, Examples) {
  const std::int64_t n = 7;
  const Group g = Group::cyclic(n);
  const PhaseFunction phi = PhaseFunction::affine(n, 1, 0);
  const PhaseFunction psi = PhaseFunction::affine(n, -1, 0);
  EXPECT_TRUE(check_intertwining(dft_operator(g), phi, psi).passed);
  EXPECT_LT(brute_relations(dft_operator(g), n, 1, 0, 0), 1e-12);
  EXPECT_TRUE(check_intertwining(zero_operator(g), phi, psi).passed);

  const PhaseFunction zero(std::vector<double>(7, 0.0));
  const AxiomReport r = check_intertwining(dft_operator(g), zero, psi);
  EXPECT_FALSE(r.passed);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_NE(r.witness->description.find("k=1"), std::string::npos) << r.witness->description;
}

TEST(ClassifyIntertwiner, Examples) {
  const IntertwinerClassification d = classify_intertwiner(dft_operator(Group::cyclic(8)));
  EXPECT_EQ(d.k0, 1);
  EXPECT_EQ(d.m0, 0);
  EXPECT_EQ(d.m1, 0);
  EXPECT_LT(std::abs(d.c - 1.0), 1e-12);

  const Complex c(2, -1);
  const IntertwinerClassification r =
      classify_intertwiner(construct_intertwiner(Group::cyclic(8), 3, 2, 5, c));
  EXPECT_EQ(r.k0, 3);
  EXPECT_EQ(r.m0, 2);
  EXPECT_EQ(r.m1, 5);
  EXPECT_LT(std::abs(r.c - c), 1e-12);

  Matrix m = construct_intertwiner(Group::cyclic(8), 3, 2, 5, c).table();
  m(4, 6) = 0.0;
  EXPECT_EQ(kind_of([&] { classify_intertwiner(Operator::dense(Group::cyclic(8), m)); }),
            "EntryVanishes");
}

TEST(ClassifyIntertwiner, ErrorTaxonomy) {
  const Group g = Group::cyclic(4);
  EXPECT_EQ(kind_of([&] { classify_intertwiner(zero_operator(g)); }), "ZeroOperator");
  Matrix m = dft_operator(g).table();
  m(1, 0) = std::polar(1.0, 0.4);  // psi(0) off the lattice
  EXPECT_EQ(kind_of([&] { classify_intertwiner(Operator::dense(g, m)); }), "PhaseOffLattice");
  Matrix k = dft_operator(g).table();
  k(3, 3) *= -1.0;  // unimodular, but not of the form
  EXPECT_EQ(kind_of([&] { classify_intertwiner(Operator::dense(g, k)); }),
            "ReconstructionMismatch");
}

TEST(ClassifyIntertwiner, RoundTripRandomDraws) {
  Rng rng(41);
  for (std::int64_t n : {4, 8, 16}) {
    for (int trial = 0; trial < 100; ++trial) {
      const std::int64_t k0 = rng.integer(0, n - 1), m0 = rng.integer(0, n - 1),
                         m1 = rng.integer(0, n - 1);
      Complex c = rng.unit_disc() * 3.0;
      if (std::abs(c) < 1e-3) c = 1.0;
      const IntertwinerClassification r =
          classify_intertwiner(construct_intertwiner(Group::cyclic(n), k0, m0, m1, c));
      ASSERT_EQ(r.k0, k0);
      ASSERT_EQ(r.m0, m0);
      ASSERT_EQ(r.m1, m1);
      EXPECT_LE(std::abs(r.c - c) / std::abs(c), 1e-9);
    }
  }
}

TEST(ClassifyIntertwiner, DistinctParametersAreSeparated) {
  for (std::int64_t n = 2; n <= 8; ++n) {
    const auto un = static_cast<std::size_t>(n);
    std::vector<Matrix> tables;
    for (std::size_t code = 0; code < un * un * un; ++code) {
      tables.push_back(construct_intertwiner(Group::cyclic(n), static_cast<std::int64_t>(code / (un * un)),
                                             static_cast<std::int64_t>(code / un % un),
                                             static_cast<std::int64_t>(code % un), 1.0)
                           .table());
    }
    const double gap = std::abs(1.0 - oracle::root(1, n)) - 1e-12;
    for (std::size_t a = 0; a < tables.size(); ++a) {
      for (std::size_t b = a + 1; b < tables.size(); ++b) {
        ASSERT_GE(max_abs_diff(tables[a].data(), tables[b].data()), gap) << n;
      }
    }
  }
}

TEST(ClassifyIntertwiner, ConsistentWithConvClassifier) {
  for (std::int64_t n = 1; n <= 8; ++n) {
    for (std::int64_t k0 = 0; k0 < n; ++k0) {
      const Operator t = construct_intertwiner(Group::cyclic(n), k0, 0, 0, 1.0);
      ASSERT_TRUE(check_conv_homomorphism(t, BasisMode{}).passed);
      const ConvClassification c = classify_conv(t);
      ASSERT_EQ(c.support.size(), static_cast<std::size_t>(n));
      for (std::int64_t l = 0; l < n; ++l) EXPECT_EQ(c.sigma_at(l), k0 * l % n);
    }
  }
}

}  // namespace
}  // namespace fourier
