// Copyright 2026 The wiretap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "wiretap/analytic.hpp"
#include "wiretap/errors.hpp"
#include "wiretap/params.hpp"
#include "wiretap/special.hpp"

namespace wiretap {
namespace {

constexpr Regime kRegimes[] = {Regime::GENERAL, Regime::INTERFERENCE_LIMITED,
                               Regime::NOISE_LIMITED};
constexpr Link kLinks[] = {Link::LEGITIMATE, Link::EAVESDROPPER};

double oracle_rate(const SystemParams& p) {
  return oracle::rate_general(p.n_t(), p.delta(), p.noise_over_power(),
                              p.eve_noise_over_power());
}

TEST(SinrCdf, ZeroAtOrigin) {
  for (const auto& p : {SystemParams(2, 0, 0.5, -10), SystemParams(5, 4, 1.0, 10),
                        SystemParams(3, 8, 0.25, 20)}) {
    for (auto r : kRegimes) {
      for (auto l : kLinks) EXPECT_EQ(sinr_cdf(0.0, p, l, r), 0.0);
    }
  }
}

TEST(SinrCdf, FrozenValue) {
  const SystemParams p(5, 4, 1.0, 10.0);
  const double v = sinr_cdf(1.0, p, Link::LEGITIMATE, Regime::GENERAL);
  EXPECT_NEAR(v, 0.821266682857094, 1e-14);
  EXPECT_NEAR(v, 1.0 - std::exp(-0.1) / std::pow(1.5, 4), 1e-15);
}

TEST(SinrCdf, RegimeForms) {
  const SystemParams p(4, 2, 0.5, 3.0);
  const double x = 2.5;
  const double d = p.delta();
  EXPECT_NEAR(sinr_cdf(x, p, Link::LEGITIMATE, Regime::INTERFERENCE_LIMITED),
              1.0 - std::pow(1.0 + d * x, -3), 1e-15);
  EXPECT_NEAR(sinr_cdf(x, p, Link::EAVESDROPPER, Regime::INTERFERENCE_LIMITED),
              1.0 - std::pow(1.0 + x, -3), 1e-15);
  EXPECT_NEAR(sinr_cdf(x, p, Link::LEGITIMATE, Regime::NOISE_LIMITED),
              1.0 - std::exp(-x * p.noise_over_power()), 1e-15);
  EXPECT_NEAR(sinr_cdf(x, p, Link::EAVESDROPPER, Regime::NOISE_LIMITED),
              1.0 - std::exp(-x * p.eve_noise_over_power()), 1e-15);
}

TEST(SinrCdf, MonotoneBoundedAndComplete) {
  for (int n_t : {2, 3, 5}) {
    for (int bits : {0, 1, 4, 8}) {
      for (double alpha : {0.25, 0.5, 1.0}) {
        for (double snr : {-10.0, 0.0, 10.0, 20.0}) {
          const SystemParams p(n_t, bits, alpha, snr);
          for (auto r : kRegimes) {
            for (auto l : kLinks) {
              double prev = sinr_cdf(0.0, p, l, r);
              EXPECT_EQ(prev, 0.0);
              for (int i = 0; i < 1000; ++i) {
                const double x = std::pow(10.0, -6.0 + 10.0 * i / 999.0);
                const double v = sinr_cdf(x, p, l, r);
                ASSERT_GE(v, prev);
                ASSERT_LE(v, 1.0);
                prev = v;
              }
              if (r == Regime::INTERFERENCE_LIMITED) {
                // Pure power-law tail: 1/(1 + delta x)^(n_t - 1), which at
                // n_t = 2 and large bits is still a few percent at 1e4.
                const double scale = l == Link::LEGITIMATE ? p.delta() : 1.0;
                EXPECT_NEAR(1.0 - sinr_cdf(1e4, p, l, r), std::pow(1.0 + scale * 1e4, 1 - n_t),
                            1e-15);
              } else {
                EXPECT_GE(sinr_cdf(1e4, p, l, r), 0.999);
              }
            }
          }
        }
      }
    }
  }
}

TEST(SinrCdf, NoFeedbackMakesLinksIdentical) {
  const SystemParams p(5, 0, 1.0, 7.0);
  for (auto r : kRegimes) {
    for (int i = 0; i <= 200; ++i) {
      const double x = 0.05 * i * i;
      EXPECT_NEAR(sinr_cdf(x, p, Link::LEGITIMATE, r), sinr_cdf(x, p, Link::EAVESDROPPER, r),
                  1e-14);
    }
  }
}

TEST(SinrCdf, NegativeArgument) {
  const SystemParams p(5, 4, 1.0, 10.0);
  EXPECT_THROW(sinr_cdf(-1e-9, p, Link::LEGITIMATE, Regime::GENERAL), DomainError);
  EXPECT_THROW(sinr_ccdf(-1.0, p, Link::EAVESDROPPER, Regime::NOISE_LIMITED), DomainError);
}

TEST(ClosedForm, FrozenReferenceValue) {
  const SystemParams p(5, 4, 1.0, 10.0);
  const double r_star = 1.148311161051072513409;
  EXPECT_LT(std::abs(secrecy_rate_closed_form(p) - r_star) / r_star, 1e-12);
  EXPECT_LT(std::abs(oracle_rate(p) - r_star) / r_star, 1e-10);
  EXPECT_LT(std::abs(rate_from_cdf_quadrature(p, Regime::GENERAL) - r_star), 1e-8);
}

TEST(ClosedForm, FrozenAlphaValues) {
  EXPECT_NEAR(secrecy_rate_closed_form(SystemParams(5, 4, 0.25, 0.0)), 1.680813684819268, 1e-12);
  EXPECT_NEAR(secrecy_rate_closed_form(SystemParams(5, 4, 1.0, 0.0)), 0.646500744604130, 1e-12);
}

TEST(ClosedForm, WeakerEavesdropperRaisesRate) {
  EXPECT_GT(secrecy_rate_closed_form(SystemParams(5, 4, 0.25, 0.0)),
            secrecy_rate_closed_form(SystemParams(5, 4, 1.0, 0.0)));
}

TEST(ClosedForm, VanishesAtVeryLowSnr) {
  for (double alpha : {0.25, 1.0}) {
    EXPECT_LT(std::abs(secrecy_rate_closed_form(SystemParams(5, 4, alpha, -60.0))), 1e-3);
  }
}

TEST(ClosedForm, MatchesIndependentOracleOnGrid) {
  for (int n_t : {2, 3, 5, 8}) {
    for (int bits : {0, 1, 4, 8, 12}) {
      for (double alpha : {0.25, 0.5, 1.0, 2.0}) {
        for (double snr : {-30.0, -10.0, 0.0, 10.0, 20.0, 40.0}) {
          const SystemParams p(n_t, bits, alpha, snr);
          const double want = oracle_rate(p);
          const double got = secrecy_rate_closed_form(p);
          EXPECT_LT(std::abs(got - want) / std::max(std::abs(want), 1e-6), 1e-8)
              << n_t << " " << bits << " " << alpha << " " << snr;
        }
      }
    }
  }
}

TEST(ClosedForm, LibraryQuadratureAgrees) {
  for (int n_t : {2, 3, 5}) {
    for (int bits : {0, 1, 4, 8}) {
      for (double alpha : {0.25, 0.5, 1.0}) {
        for (double snr : {-10.0, 0.0, 10.0, 20.0}) {
          const SystemParams p(n_t, bits, alpha, snr);
          const double q = rate_from_cdf_quadrature(p, Regime::GENERAL);
          EXPECT_LT(std::abs(secrecy_rate_closed_form(p) - q) / std::max(std::abs(q), 1e-6),
                    1e-8);
        }
      }
    }
  }
}

TEST(ClosedForm, NonDecreasingInBits) {
  for (int n_t : {2, 3, 5}) {
    for (double alpha : {0.25, 0.5, 1.0}) {
      for (double snr : {-10.0, 0.0, 10.0, 20.0}) {
        double prev = -1e300;
        for (int bits : {0, 1, 4, 8}) {
          const double r = secrecy_rate_closed_form(SystemParams(n_t, bits, alpha, snr));
          EXPECT_GE(r, prev);
          prev = r;
        }
      }
    }
  }
}

TEST(ClosedForm, NoFeedbackEqualPathLossIsZero) {
  EXPECT_NEAR(secrecy_rate_closed_form(SystemParams(5, 0, 1.0, 10.0)), 0.0, 1e-14);
  EXPECT_NEAR(rate_from_cdf_quadrature(SystemParams(5, 0, 1.0, 10.0), Regime::GENERAL), 0.0,
              1e-9);
}

TEST(ClosedForm, StrongerEavesdropperGivesNegativeRate) {
  EXPECT_LT(secrecy_rate_closed_form(SystemParams(5, 0, 2.0, 10.0)), 0.0);
}

TEST(ClosedForm, HighSnrApproachesInterferenceLimit) {
  for (int n_t : {3, 5}) {
    for (int bits : {0, 1, 4, 8}) {
      const SystemParams high(n_t, bits, 0.5, 50.0);
      EXPECT_LT(std::abs(secrecy_rate_closed_form(high) - secrecy_rate_interference_limited(high)),
                1e-3);
    }
  }
}

// Convergence is O(s ln(1/s)) at n_t = 2, so 50 dB leaves a visible gap.
TEST(ClosedForm, HighSnrTwoAntennasConvergesSlowly) {
  const SystemParams p50(2, 8, 0.5, 50.0);
  const SystemParams p80(2, 8, 0.5, 80.0);
  const double r_il = secrecy_rate_interference_limited(p50);
  EXPECT_GT(std::abs(secrecy_rate_closed_form(p50) - r_il), 1e-3);
  EXPECT_LT(std::abs(secrecy_rate_closed_form(p80) - r_il), 1e-3);
}

TEST(ClosedForm, LowSnrApproachesNoiseLimit) {
  for (int n_t : {2, 3, 5}) {
    for (int bits : {0, 1, 4, 8}) {
      for (double alpha : {0.25, 0.5}) {
        const SystemParams p(n_t, bits, alpha, -40.0);
        const double ratio = secrecy_rate_closed_form(p) / secrecy_rate_noise_limited(p);
        EXPECT_NEAR(ratio, 1.0, 0.01);
      }
    }
  }
}

TEST(InterferenceLimited, FrozenValues) {
  EXPECT_EQ(secrecy_rate_interference_limited(SystemParams(5, 0, 1.0, 0.0)), 0.0);
  EXPECT_EQ(secrecy_rate_interference_limited(SystemParams(2, 0, 0.3, 5.0)), 0.0);
  const double two = secrecy_rate_interference_limited(SystemParams(2, 1, 1.0, 0.0));
  EXPECT_NEAR(two, 1.114609918222073185280, 1e-13);
  EXPECT_NEAR(two, 2.0 * std::numbers::log2e * (2.0 * std::numbers::ln2 - 1.0), 1e-13);
  const double want[] = {0.0, 0.560569234323916, 1.252895684810747, 3.084994639216634};
  const int bits[] = {0, 2, 4, 8};
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(secrecy_rate_interference_limited(SystemParams(5, bits[i], 1.0, 0.0)), want[i],
                1e-12);
  }
}

TEST(InterferenceLimited, StrictlyIncreasingInBits) {
  double prev = -1.0;
  for (int bits : {0, 2, 4, 8}) {
    const double r = secrecy_rate_interference_limited(SystemParams(5, bits, 1.0, 0.0));
    EXPECT_GT(r, prev);
    prev = r;
  }
}

TEST(InterferenceLimited, IndependentOfPowerAndPathLoss) {
  const double base = secrecy_rate_interference_limited(SystemParams(5, 4, 1.0, 0.0));
  EXPECT_EQ(secrecy_rate_interference_limited(SystemParams(5, 4, 0.1, 30.0)), base);
  EXPECT_EQ(secrecy_rate(SystemParams(5, 4, 0.1, -30.0), Regime::INTERFERENCE_LIMITED), base);
}

TEST(InterferenceLimited, MatchesQuadrature) {
  for (int n_t : {2, 3, 5}) {
    for (int bits : {1, 4}) {
      const SystemParams p(n_t, bits, 1.0, 0.0);
      const double r = secrecy_rate_interference_limited(p);
      EXPECT_NEAR(rate_from_cdf_quadrature(p, Regime::INTERFERENCE_LIMITED), r, 1e-8);
      EXPECT_NEAR(oracle::rate_interference_limited(n_t, p.delta()), r, 1e-8);
    }
  }
}

TEST(NoiseLimited, FrozenValue) {
  const SystemParams p(5, 4, 0.5, 0.0);
  const double r = secrecy_rate_noise_limited(p);
  EXPECT_NEAR(r, 2.813267682248112389904, 1e-12);
  const double e = std::numbers::e;
  EXPECT_NEAR(r,
              5.0 * std::numbers::log2e *
                  (e * oracle::e1_series(1.0) - std::exp(4.0) * oracle::e1_quadrature(4.0)),
              1e-12);
}

TEST(NoiseLimited, ZeroForEqualPathLoss) {
  EXPECT_EQ(secrecy_rate_noise_limited(SystemParams(5, 4, 1.0, 3.0)), 0.0);
  EXPECT_EQ(secrecy_rate_noise_limited(SystemParams(2, 0, 1.0, -20.0)), 0.0);
}

TEST(NoiseLimited, IndependentOfBits) {
  EXPECT_EQ(secrecy_rate_noise_limited(SystemParams(5, 0, 0.5, 0.0)),
            secrecy_rate_noise_limited(SystemParams(5, 10, 0.5, 0.0)));
}

TEST(NoiseLimited, MatchesQuadrature) {
  for (double alpha : {0.25, 0.5, 2.0}) {
    for (double snr : {-20.0, 0.0, 20.0}) {
      const SystemParams p(3, 4, alpha, snr);
      EXPECT_NEAR(rate_from_cdf_quadrature(p, Regime::NOISE_LIMITED),
                  secrecy_rate_noise_limited(p), 1e-8);
    }
  }
}

TEST(SecrecyRate, DispatchesByRegime) {
  const SystemParams p(5, 4, 0.5, 10.0);
  EXPECT_EQ(secrecy_rate(p, Regime::GENERAL), secrecy_rate_closed_form(p));
  EXPECT_EQ(secrecy_rate(p, Regime::INTERFERENCE_LIMITED), secrecy_rate_interference_limited(p));
  EXPECT_EQ(secrecy_rate(p, Regime::NOISE_LIMITED), secrecy_rate_noise_limited(p));
}

// At alpha = 1 the eavesdropper term dominates the derivative in SNR for every
// x, so the curve rises monotonically toward the interference limit.
TEST(RateCurve, EqualPathLossCurveIsMonotone) {
  double prev = -1.0;
  for (int i = 0; i <= 50; ++i) {
    const double r = secrecy_rate_closed_form(SystemParams(5, 4, 1.0, -10.0 + i));
    EXPECT_GT(r, prev);
    prev = r;
  }
}

TEST(RateCurve, WeakEavesdropperCurveHasInteriorMaximum) {
  for (double alpha : {0.25, 0.5}) {
    int best = 0;
    double best_r = -1.0;
    for (int i = 0; i <= 50; ++i) {
      const double r = secrecy_rate_closed_form(SystemParams(5, 4, alpha, -10.0 + i));
      if (r > best_r) {
        best_r = r;
        best = i;
      }
    }
    EXPECT_GT(best, 0);
    EXPECT_LT(best, 50);
  }
}

}  // namespace
}  // namespace wiretap
