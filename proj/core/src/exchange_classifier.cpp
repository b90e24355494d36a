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

#include "fourier/exchange_classifier.hpp"

#include <cmath>
#include <string>

#include "fourier/error.hpp"
#include "fourier/random.hpp"

namespace fourier {

const char* to_string(ExchangeVariant v) {
  return v == ExchangeVariant::kDirect ? "direct" : "fourier";
}

namespace {

std::vector<Complex> to_vec(const Signal& s) { return {s.values().begin(), s.values().end()}; }

class ExchangeRun {
 public:
  ExchangeRun(const Operator& t, const ExchangeOptions& opts)
      : t_(t), g_(t.group()), opts_(opts) {
    n_ = g_.require_cyclic("classify_exchange");
    if (n_ < 2) throw ArgumentError("InvalidGroup", "classify_exchange needs n >= 2");
  }

  ExchangeClassification run() {
    check_zero();
    probe_constants();
    read_delta_images();
    sweep();
    out_.order = n_;
    out_.eta = eta_;
    out_.residual = residual_;
    out_.notes = {
        "verified: T(0)=0, T(c1)=beta(c)1 on probe constants, T(delta_j)=delta_{eta j} "
        "for all j, final sweep on " + std::to_string(opts_.sweep_signals) +
            " seeded signals",
        "assumed: bijectivity of T; continuity of c -> T(c1) beyond the probe grid"};
    return out_;
  }

 private:
  void track(double r) { residual_ = std::max(residual_, r); }

  void check_zero() {
    const Signal tz = t_.apply(zeros(g_));
    const double r = max_abs(tz.values());
    if (r > opts_.tol) {
      throw ClassificationError("FixedPointViolation",
                                "step 1: T(0) != 0, |T(0)|_inf = " + std::to_string(r));
    }
    track(r);
  }

  Complex beta(Complex c) {
    const Signal img = t_.apply(constant(g_, c / static_cast<double>(n_)));
    return expectation(img);
  }

  [[noreturn]] void beta_error(Complex c, Complex b, const std::string& why) {
    throw ClassificationError("BetaNotIdentityOrConjugation",
                              "step 3: c=" + to_string(c) + ", beta(c)=" + to_string(b) +
                                  ": " + why);
  }

  void probe_constants() {
    const double tol = opts_.tol;
    auto sample = [&](Complex c) {
      const Complex b = beta(c);
      out_.beta.samples.emplace_back(c, b);
      // T(c1) must itself be the constant beta(c)1
      const Signal img = t_.apply(constant(g_, c));
      const Signal expected = constant(g_, b);
      const double r = relative_residual(img.values(), expected.values());
      if (r > tol) beta_error(c, b, "T(c1) is not a constant signal");
      track(r);
      return b;
    };

    // alpha test: real probes force beta(c) = c once alpha = 1
    for (const double c : {2.0, 3.0, 1.5, 1.0}) {
      const Complex b = sample(c);
      const double r = std::abs(b - c) / (1.0 + c);
      if (r > tol) beta_error(c, b, "expected beta(c) = c for real c");
      track(r);
    }

    const Complex i{0.0, 1.0};
    const Complex bi = sample(i);
    const double d_id = std::abs(bi - i);
    const double d_conj = std::abs(bi + i);
    if (d_id <= tol && d_conj >= 1.0) {
      out_.conjugate = false;
    } else if (d_conj <= tol && d_id >= 1.0) {
      out_.conjugate = true;
    } else {
      beta_error(i, bi, "beta(i) is neither i nor -i");
    }
    track(std::min(d_id, d_conj) / 2.0);

    for (const Complex c : {Complex{1.0, 1.0}, Complex{-2.0, 0.5}, Complex{0.3, -0.7}}) {
      const Complex b = sample(c);
      const Complex want = out_.conjugate ? std::conj(c) : c;
      const double r = std::abs(b - want) / (1.0 + std::abs(c));
      if (r > tol) {
        beta_error(c, b, out_.conjugate ? "expected conj(c)" : "expected c");
      }
      track(r);
    }

    // multiplicativity on all sampled pairs
    const auto samples = out_.beta.samples;
    for (std::size_t a = 0; a < samples.size(); ++a) {
      for (std::size_t b = a; b < samples.size(); ++b) {
        const Complex c12 = samples[a].first * samples[b].first;
        const Complex lhs = beta(c12);
        const Complex rhs = samples[a].second * samples[b].second;
        const double r = std::abs(lhs - rhs) / (1.0 + std::abs(c12));
        if (r > tol) beta_error(c12, lhs, "beta(c1 c2) != beta(c1) beta(c2)");
        track(r);
      }
    }
  }

  void read_delta_images() {
    const double tol = opts_.tol;
    std::vector<std::int64_t> sigma(static_cast<std::size_t>(n_));
    for (std::int64_t j = 0; j < n_; ++j) {
      const Signal img = t_.apply(delta(g_, j));
      std::int64_t hit = -1;
      double dev = 0.0;
      for (std::int64_t m = 0; m < n_; ++m) {
        const Complex v = img[static_cast<std::size_t>(m)];
        if (std::abs(v - 1.0) <= tol && hit < 0) {
          hit = m;
          dev = std::max(dev, std::abs(v - 1.0));
        } else if (std::abs(v) <= tol) {
          dev = std::max(dev, std::abs(v));
        } else {
          hit = -2;
          break;
        }
      }
      if (hit < 0) {
        throw ClassificationError("DeltaImageNotDelta",
                                  "step 2: j=" + std::to_string(j) +
                                      ", T(delta_j) is not a unit Dirac mass");
      }
      track(dev);
      sigma[static_cast<std::size_t>(j)] = hit;
    }
    if (sigma[0] != 0) {
      throw ClassificationError("FixedPointViolation",
                                "step 1: T(delta_0) = delta_" + std::to_string(sigma[0]));
    }
    const std::int64_t s1 = sigma[1];
    for (std::int64_t j = 0; j < n_; ++j) {
      if (sigma[static_cast<std::size_t>(j)] != mod(j * s1, n_)) {
        throw ClassificationError(
            "DeltaImageNotDelta",
            "step 2: j=" + std::to_string(j) + ", T(delta_j) = delta_" +
                std::to_string(sigma[static_cast<std::size_t>(j)]) + ", expected delta_" +
                std::to_string(mod(j * s1, n_)));
      }
    }
    if (gcd(s1, n_) != 1) {
      throw ClassificationError("EtaNotCoprime", "step 2: sigma(1)=" + std::to_string(s1) +
                                                     ", gcd with n=" + std::to_string(n_) +
                                                     " is " + std::to_string(gcd(s1, n_)));
    }
    eta_ = s1;
  }

  void sweep() {
    Rng rng(opts_.seed);
    for (int s = 0; s < opts_.sweep_signals; ++s) {
      const Signal a = rng.signal(g_);
      const Signal ta = t_.apply(a);
      std::vector<Complex> lhs(static_cast<std::size_t>(n_));
      std::vector<Complex> rhs(static_cast<std::size_t>(n_));
      for (std::int64_t j = 0; j < n_; ++j) {
        lhs[static_cast<std::size_t>(j)] = ta.at(eta_ * j);
        rhs[static_cast<std::size_t>(j)] = out_.conjugate ? std::conj(a.at(j)) : a.at(j);
      }
      const double r = relative_residual(lhs, rhs);
      if (r > opts_.tol) {
        throw ClassificationError("FinalSweepViolation",
                                  "step 4: sample " + std::to_string(s) +
                                      ", T(a)(eta j) deviates from " +
                                      (out_.conjugate ? "conj(a(j))" : "a(j)") +
                                      " by " + std::to_string(r));
      }
      track(r);
    }
  }

  const Operator& t_;
  const Group& g_;
  ExchangeOptions opts_;
  std::int64_t n_ = 0;
  std::int64_t eta_ = 1;
  double residual_ = 0.0;
  ExchangeClassification out_;
};

}  // namespace

ExchangeClassification classify_exchange(const Operator& t, const ExchangeOptions& opts) {
  return ExchangeRun(t, opts).run();
}

ExchangeClassification classify_fourier_exchange(const Operator& t,
                                                 const ExchangeOptions& opts) {
  const Operator composed = compose(idft_operator(t.group()), t);
  try {
    ExchangeClassification out = classify_exchange(composed, opts);
    out.variant = ExchangeVariant::kFourier;
    return out;
  } catch (const ClassificationError& e) {
    throw ClassificationError(e.kind(), std::string("on F^-1 T: ") + e.what());
  }
}

AxiomReport check_involution_symmetry(const Operator& t, double tol, int samples,
                                      std::uint64_t seed) {
  Rng rng(seed);
  ReportBuilder rb(tol);
  for (int s = 0; s < samples; ++s) {
    const Signal a = rng.signal(t.group());
    const Signal twice = t.apply(t.apply(a));
    const Signal reflected = reflect(a);
    rb.record(relative_residual(twice.values(), reflected.values()), [&] {
      return Witness{"T(T(a))(k) != a(-k) on sample " + std::to_string(s),
                     {a},
                     to_vec(twice),
                     to_vec(reflected)};
    });
  }
  return std::move(rb).finish();
}

Operator exchange_map(const Group& group, std::int64_t eta, bool conjugate) {
  const std::int64_t n = group.require_cyclic("exchange_map");
  const std::int64_t inv = inverse_mod(eta, n);
  return Operator::blackbox(
      group,
      [group, inv, conjugate](const Signal& a) {
        const std::size_t n = a.size();
        std::vector<Complex> out(n);
        for (std::size_t m = 0; m < n; ++m) {
          const Complex v = a.at(inv * static_cast<std::int64_t>(m));
          out[m] = conjugate ? std::conj(v) : v;
        }
        return Signal(group, std::move(out));
      },
      !conjugate);
}

Operator fourier_exchange_map(const Group& group, std::int64_t eta, bool conjugate) {
  return compose(dft_operator(group), exchange_map(group, eta, conjugate));
}

}  // namespace fourier
