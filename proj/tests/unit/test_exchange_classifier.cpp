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

#include "fourier/error.hpp"
#include "fourier/exchange_classifier.hpp"
#include "fourier/random.hpp"
#include "oracles.hpp"

namespace fourier {
namespace {

// a -> (j -> a(s j)), optionally conjugated; written out directly.
Operator reindex(std::int64_t n, std::int64_t s, bool conj_values = false) {
  return Operator::blackbox(Group::cyclic(n), [n, s, conj_values](const Signal& a) {
    std::vector<Complex> v(static_cast<std::size_t>(n));
    for (std::int64_t j = 0; j < n; ++j) {
      const Complex x = a[static_cast<std::size_t>(oracle::wrap(s * j, n))];
      v[static_cast<std::size_t>(j)] = conj_values ? std::conj(x) : x;
    }
    return Signal(a.group(), std::move(v));
  });
}

std::int64_t brute_inverse(std::int64_t eta, std::int64_t n) {
  for (std::int64_t s = 1; s < n; ++s) {
    if (oracle::wrap(eta * s, n) == 1) return s;
  }
  return n == 1 ? 0 : -1;
}

std::string kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

TEST(ClassifyExchange, IdentityAndConjugation) {
  const Group g = Group::cyclic(7);
  const ExchangeClassification id = classify_exchange(identity_operator(g));
  EXPECT_EQ(id.eta, 1);
  EXPECT_FALSE(id.conjugate);
  EXPECT_EQ(id.variant, ExchangeVariant::kDirect);
  const ExchangeClassification cj = classify_exchange(
      Operator::blackbox(g, [](const Signal& a) { return conj(a); }));
  EXPECT_EQ(cj.eta, 1);
  EXPECT_TRUE(cj.conjugate);
}

TEST(ClassifyExchange, ReindexByFiveOnSeven) {
  const Operator t = reindex(7, 5);
  // both exchange axioms by brute force on random pairs
  Rng rng(3);
  const Group g = Group::cyclic(7);
  for (int i = 0; i < 10; ++i) {
    const Signal a = rng.signal(g), b = rng.signal(g);
    EXPECT_LT(max_abs_diff(t(pointwise_mul(a, b)).values(), pointwise_mul(t(a), t(b)).values()),
              1e-12);
    const auto conv_ab = oracle::convolve(a, b);
    const auto conv_t = oracle::convolve(t(a), t(b));
    EXPECT_LT(oracle::max_diff(conv_t, t(Signal(g, conv_ab)).values()), 1e-12);
  }
  const ExchangeClassification c = classify_exchange(t);
  EXPECT_EQ(c.eta, 3);
  EXPECT_FALSE(c.conjugate);
  EXPECT_LE(c.residual, 1e-10);
}

TEST(ClassifyExchange, RecoversEveryUnitAndFlag) {
  for (std::int64_t n = 2; n <= 12; ++n) {
    for (std::int64_t eta = 1; eta < n; ++eta) {
      if (std::gcd(eta, n) != 1) continue;
      for (bool conj : {false, true}) {
        // T(a)(eta j) = a(j)  <=>  T(a)(m) = a(eta^{-1} m)
        const Operator t = reindex(n, brute_inverse(eta, n), conj);
        const ExchangeClassification c = classify_exchange(t);
        EXPECT_EQ(c.eta, eta) << "n=" << n;
        EXPECT_EQ(c.conjugate, conj) << "n=" << n << " eta=" << eta;
        EXPECT_LE(c.residual, 1e-10);
        // the library's canonical map agrees
        const Operator lib = exchange_map(Group::cyclic(n), eta, conj);
        const Signal a = Rng(static_cast<std::uint64_t>(n * 100 + eta)).signal(Group::cyclic(n));
        EXPECT_EQ(lib(a), t(a));
      }
    }
  }
}

TEST(ClassifyExchange, BetaIsMultiplicativeOnPassingMaps) {
  const ExchangeClassification c = classify_exchange(reindex(8, 3, true));
  ASSERT_FALSE(c.beta.samples.empty());
  for (const auto& [c1, b1] : c.beta.samples) {
    for (const auto& [c2, b2] : c.beta.samples) {
      for (const auto& [c3, b3] : c.beta.samples) {
        if (std::abs(c3 - c1 * c2) > 1e-15) continue;
        EXPECT_LE(std::abs(b3 - b1 * b2), 1e-9 * (1 + std::abs(c1 * c2)));
      }
    }
    EXPECT_LT(std::abs(b1 - std::conj(c1)), 1e-12);
  }
}

TEST(ClassifyExchange, DoublingFailsAtConstants) {
  const Operator t = Operator::blackbox(Group::cyclic(8),
                                        [](const Signal& a) { return scale(a, 2.0); });
  EXPECT_EQ(kind_of([&] { classify_exchange(t); }), "BetaNotIdentityOrConjugation");
}

TEST(ClassifyExchange, NonInvertibleReindexFailsAtDeltas) {
  const std::string k = kind_of([] { classify_exchange(reindex(8, 2)); });
  EXPECT_TRUE(k == "EtaNotCoprime" || k == "DeltaImageNotDelta") << k;
}

TEST(ClassifyExchange, FixedPointAndNonCoprimeSteps) {
  const Group g = Group::cyclic(6);
  // T(0) = 1
  const Operator shifted =
      Operator::blackbox(g, [g](const Signal& a) { return add(a, ones(g)); });
  EXPECT_EQ(kind_of([&] { classify_exchange(shifted); }), "FixedPointViolation");
  // rotates deltas: T(delta_j) = delta_{j+1}, constants untouched
  const Operator rotate = Operator::blackbox(g, [](const Signal& a) {
    std::vector<Complex> v(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) v[(j + 1) % a.size()] = a[j];
    return Signal(a.group(), std::move(v));
  });
  EXPECT_EQ(kind_of([&] { classify_exchange(rotate); }), "FixedPointViolation");
}

TEST(ClassifyExchange, LocalityCaughtOnlyBySweep) {
  // agrees with the identity on constants and deltas, differs elsewhere
  const Group g = Group::cyclic(5);
  const Operator t = Operator::blackbox(g, [](const Signal& a) {
    int nonzero = 0;
    bool constant = true;
    for (std::size_t j = 0; j < a.size(); ++j) {
      nonzero += a[j] != Complex(0);
      constant = constant && a[j] == a[0];
    }
    if (nonzero <= 1 || constant) return a;
    return conj(a);
  });
  EXPECT_EQ(kind_of([&] { classify_exchange(t); }), "FinalSweepViolation");
}

TEST(ClassifyExchange, RejectsTrivialAndProductGroups) {
  EXPECT_THROW(classify_exchange(identity_operator(Group::cyclic(1))), ArgumentError);
  EXPECT_THROW(classify_exchange(identity_operator(Group({2, 3}))), ArgumentError);
}

TEST(ClassifyExchange, NotesSayBijectivityIsAssumed) {
  const ExchangeClassification c = classify_exchange(identity_operator(Group::cyclic(3)));
  bool found = false;
  for (const auto& s : c.notes) found = found || s.find("bijectiv") != std::string::npos;
  EXPECT_TRUE(found);
}

TEST(ClassifyFourierExchange, DftIsEtaOne) {
  const ExchangeClassification c = classify_fourier_exchange(dft_operator(Group::cyclic(6)));
  EXPECT_EQ(c.eta, 1);
  EXPECT_FALSE(c.conjugate);
  EXPECT_EQ(c.variant, ExchangeVariant::kFourier);
}

TEST(ClassifyFourierExchange, ConjugatedDftOnFive) {
  const Group g = Group::cyclic(5);
  const Operator t = Operator::blackbox(g, [](const Signal& a) { return conj(dft(a)); });
  // oracle: F^{-1}(conj(F a)) by double sums equals conj(a(-j)), i.e. the
  // conjugate branch with eta = n - 1
  const Signal a = Rng(8).signal(g);
  const auto fa = oracle::dft(a);
  std::vector<Complex> conj_fa(fa.size());
  for (std::size_t i = 0; i < fa.size(); ++i) conj_fa[i] = std::conj(fa[i]);
  auto back = oracle::dft(Signal(g, conj_fa), +1);
  for (auto& z : back) z /= 5.0;
  for (std::int64_t j = 0; j < 5; ++j) {
    EXPECT_LT(std::abs(back[static_cast<std::size_t>(oracle::wrap(4 * j, 5))] - std::conj(a.at(j))),
              1e-12);
  }
  const ExchangeClassification c = classify_fourier_exchange(t);
  EXPECT_EQ(c.eta, 4);
  EXPECT_TRUE(c.conjugate);
}

TEST(ClassifyFourierExchange, DilatedDftOnEight) {
  const Group g = Group::cyclic(8);
  // T(a)(j) = a^(3 j)
  const Operator t = Operator::blackbox(g, [](const Signal& a) {
    const auto fa = oracle::dft(a);
    std::vector<Complex> v(8);
    for (std::int64_t j = 0; j < 8; ++j) v[static_cast<std::size_t>(j)] = fa[static_cast<std::size_t>(3 * j % 8)];
    return Signal(a.group(), std::move(v));
  });
  // brute force: T(a)(3 j) = a^(j) because 9 = 1 mod 8
  const Signal a = Rng(2).signal(g);
  const auto fa = oracle::dft(a);
  for (std::int64_t j = 0; j < 8; ++j) {
    EXPECT_LT(std::abs(t(a).at(3 * j) - fa[static_cast<std::size_t>(j)]), 1e-12);
  }
  const ExchangeClassification c = classify_fourier_exchange(t);
  EXPECT_EQ(c.eta, 3);
  EXPECT_FALSE(c.conjugate);
}

TEST(ClassifyFourierExchange, NonSelfInverseUnit) {
  // eta = 2 on Z/5 has inverse 3: T(a)(xi) = a^(2 xi)
  const Operator t = fourier_exchange_map(Group::cyclic(5), 2, false);
  const Signal a = Rng(5).signal(Group::cyclic(5));
  const auto fa = oracle::dft(a);
  for (std::int64_t xi = 0; xi < 5; ++xi) {
    EXPECT_LT(std::abs(t(a).at(xi) - fa[static_cast<std::size_t>(2 * xi % 5)]), 1e-12);
  }
  const ExchangeClassification c = classify_fourier_exchange(t);
  EXPECT_EQ(c.eta, 2);
  // conjugate branch: T(a)(xi) = conj(a^(-eta xi))
  const Operator tc = fourier_exchange_map(Group::cyclic(5), 2, true);
  for (std::int64_t xi = 0; xi < 5; ++xi) {
    EXPECT_LT(std::abs(tc(a).at(xi) - std::conj(fa[static_cast<std::size_t>(oracle::wrap(-2 * xi, 5))])),
              1e-12);
  }
  const ExchangeClassification cc = classify_fourier_exchange(tc);
  EXPECT_EQ(cc.eta, 2);
  EXPECT_TRUE(cc.conjugate);
}

TEST(ClassifyFourierExchange, ErrorsAreAttributedToComposedMap) {
  try {
    classify_fourier_exchange(identity_operator(Group::cyclic(4)));
    FAIL();
  } catch (const ClassificationError& e) {
    EXPECT_NE(std::string(e.what()).find("F^-1 T"), std::string::npos);
  }
}

TEST(InvolutionSymmetry, DftNeedsUnitaryScaling) {
  const Group g = Group::cyclic(5);
  EXPECT_FALSE(check_involution_symmetry(dft_operator(g), 1e-9, 8, 0).passed);
  const AxiomReport r = check_involution_symmetry(unitary_dft_operator(g), 1e-9, 8, 0);
  EXPECT_TRUE(r.passed);
  // oracle: F^2 a(k) = n a(-k)
  const Signal a = Rng(1).signal(g);
  const auto twice = oracle::dft(Signal(g, oracle::dft(a)));
  for (std::int64_t k = 0; k < 5; ++k) {
    EXPECT_LT(std::abs(twice[static_cast<std::size_t>(k)] - 5.0 * a.at(-k)), 1e-12);
  }
}

TEST(InvolutionSymmetry, IndexNegationFails) {
  const Group g = Group::cyclic(5);
  const Operator neg = Operator::blackbox(g, [](const Signal& a) { return reflect(a); });
  // T^2 delta_1 = delta_1, but delta_1(-k) is delta_4
  EXPECT_EQ(neg(neg(delta(g, 1))), delta(g, 1));
  const AxiomReport r = check_involution_symmetry(neg, 1e-9, 8, 0);
  EXPECT_FALSE(r.passed);
  EXPECT_TRUE(r.witness.has_value());
}

TEST(InvolutionSymmetry, IdentityOnZ2Passes) {
  EXPECT_TRUE(check_involution_symmetry(identity_operator(Group::cyclic(2)), 1e-9, 8, 0).passed);
}

TEST(ExchangeMap, RejectsNonUnits) {
  EXPECT_THROW(exchange_map(Group::cyclic(8), 2, false), ArgumentError);
  EXPECT_THROW(fourier_exchange_map(Group::cyclic(9), 3, true), ArgumentError);
}

}  // namespace
}  // namespace fourier
