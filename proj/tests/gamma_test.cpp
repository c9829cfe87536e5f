#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "ppcf/gamma.hpp"

namespace ppcf {
namespace {

TEST(GammaParams, HalfHasUnitBase) {
  const GammaParams p(0.5);
  EXPECT_DOUBLE_EQ(p.c_gamma(), 0.5);
  EXPECT_DOUBLE_EQ(p.cost_exponent(), -2.0);
}

TEST(GammaParams, SevenTenthsMatchesHighPrecision) {
  // 0.3 * 1.4^(7/3) evaluated with 30-digit arithmetic.
  const GammaParams p(0.7);
  EXPECT_NEAR(p.c_gamma(), 0.657789097943861304641517161449, 1e-15);
  EXPECT_NEAR(p.cost_exponent(), -14.0 / 3.0, 1e-15);
}

TEST(GammaParams, RejectsOutsideOpenInterval) {
  for (double g : {0.2, 1.0 / 3.0, 1.0, 1.5, -0.5, std::numeric_limits<double>::quiet_NaN(),
                   std::numeric_limits<double>::infinity()}) {
    EXPECT_THROW(GammaParams{g}, std::invalid_argument) << g;
  }
  EXPECT_NO_THROW(GammaParams{0.334});
  EXPECT_NO_THROW(GammaParams{0.999});
}

TEST(CostFunction, Values) {
  const GammaParams half(0.5);
  EXPECT_DOUBLE_EQ(f_cost(1.0, half), 0.5);
  EXPECT_DOUBLE_EQ(f_cost(2.0, half), 0.125);
  const GammaParams p(0.7);
  EXPECT_NEAR(f_cost(0.5, p), 16.7068016967887749298051246621, 1e-12);
  EXPECT_GT(f_cost(0.5, p), f_cost(1.0, p));
  EXPECT_THROW(f_cost(0.0, p), std::invalid_argument);
  EXPECT_THROW(f_cost(-1.0, p), std::invalid_argument);
}

TEST(CostFunction, StrictlyDecreasing) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> gamma(0.34, 0.99);
  std::uniform_real_distribution<double> log_s(-4.0, 4.0);
  for (int n = 0; n < 2000; ++n) {
    const GammaParams p(gamma(rng));
    double a = std::exp(log_s(rng));
    double b = std::exp(log_s(rng));
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    EXPECT_GT(f_cost(a, p), f_cost(b, p)) << a << ' ' << b << ' ' << p.gamma();
  }
}

TEST(Speed, Branches) {
  const GammaParams p(0.7);
  EXPECT_DOUBLE_EQ(phi(-1.0, p), -1.0);
  EXPECT_DOUBLE_EQ(phi(-1.0, GammaParams(0.4)), -1.0);
  EXPECT_EQ(phi(3.0, p), 0.0);
  EXPECT_EQ(phi(0.0, p), 0.0);
  EXPECT_NEAR(phi(-8.0, GammaParams(0.5)), -2.82842712474619009760337744842, 1e-15);
  // Continuous at zero from the left.
  EXPECT_LT(std::abs(phi(-1e-12, p)), 1e-8);
}

TEST(Speed, PhiS) {
  const GammaParams half(0.5);
  EXPECT_DOUBLE_EQ(phi_s(-1.0, 1.0, half), -1.0);
  EXPECT_DOUBLE_EQ(phi_s(-1.0, 1.0, half), phi(-1.0, half));
  EXPECT_DOUBLE_EQ(phi_s(0.0, 2.0, half), -0.125);
  EXPECT_THROW(phi_s(-1.0, 0.0, half), std::invalid_argument);
}

TEST(Speed, PhiSBelowPhiForNonPositiveCurvature) {
  const GammaParams p(0.7);
  for (double kappa : {-10.0, -1.0, -0.1, 0.0}) {
    for (double s = 0.05; s < 20.0; s *= 1.1) {
      EXPECT_LE(phi_s(kappa, s, p), phi(kappa, p) + 1e-15) << kappa << ' ' << s;
    }
  }
}

TEST(Speed, SupOverFineGridMatchesPhi) {
  const GammaParams p(0.7);
  const double kappa = -4.0;
  const double center = s_maximizer(kappa, p);
  double sup = -std::numeric_limits<double>::infinity();
  constexpr int kPoints = 100000;
  for (int n = 0; n < kPoints; ++n) {
    const double s = center * std::pow(10.0, -2.0 + 4.0 * n / (kPoints - 1));
    sup = std::max(sup, phi_s(kappa, s, p));
  }
  EXPECT_NEAR(sup, phi(kappa, p), 1e-6);
}

TEST(Maximizer, Values) {
  EXPECT_NEAR(s_maximizer(-1.0, GammaParams(0.5)), 1.0, 1e-15);
  const GammaParams p(0.7);
  const double s = s_maximizer(-1.0, p);
  EXPECT_NEAR(s, 1.18321595661992320851346565831, 1e-13);
  EXPECT_GT(phi_s(-1.0, s, p), phi_s(-1.0, s * 1.01, p));
  EXPECT_GT(phi_s(-1.0, s, p), phi_s(-1.0, s * 0.99, p));
  EXPECT_NEAR(phi_s(-1.0, s, p), phi(-1.0, p), 1e-14);
  EXPECT_THROW(s_maximizer(0.0, p), std::invalid_argument);
  EXPECT_THROW(s_maximizer(1.0, p), std::invalid_argument);
}

TEST(Maximizer, Stationary) {
  for (double gamma : {0.4, 0.5, 0.7, 0.9}) {
    const GammaParams p(gamma);
    for (double kappa = -10.0; kappa <= -0.01; kappa /= 1.3) {
      const double s = s_maximizer(kappa, p);
      const double step = 1e-6 * s;
      const double d = (phi_s(kappa, s + step, p) - phi_s(kappa, s - step, p)) / (2.0 * step);
      EXPECT_LT(std::abs(d), 1e-4) << gamma << ' ' << kappa;
    }
  }
}

TEST(AlphaWindow, FromScale) {
  const AlphaWindow w = alphas_from_scale(GammaParams(0.7), 0.9);
  EXPECT_NEAR(w.m1, 3.0 / 14.0, 1e-15);
  EXPECT_NEAR(w.m2, 3.0 / 7.0, 1e-15);
  EXPECT_NEAR(w.alpha1, 0.407142857142857142857142857143, 1e-15);
  EXPECT_NEAR(w.m3, 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(w.alpha2, 0.3, 1e-15);

  const AlphaWindow h = alphas_from_scale(GammaParams(0.5), 0.5);
  EXPECT_DOUBLE_EQ(h.m1, 0.5);
  EXPECT_DOUBLE_EQ(h.m2, 1.0);
  EXPECT_DOUBLE_EQ(h.alpha1, 0.75);
  EXPECT_NEAR(h.m3, 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(h.alpha2, 1.0 / 6.0, 1e-15);

  for (double bad : {0.0, 1.0, -0.2, 1.5}) {
    EXPECT_THROW(alphas_from_scale(GammaParams(0.7), bad), std::invalid_argument);
  }
}

TEST(AlphaWindow, ExplicitValidation) {
  const GammaParams p(0.7);
  EXPECT_THROW(alpha_window(p, 0.1, 0.1), std::invalid_argument);
  EXPECT_THROW(alpha_window(p, 0.43, 0.1), std::invalid_argument);
  EXPECT_THROW(alpha_window(p, 0.4, 0.0), std::invalid_argument);
  EXPECT_THROW(alpha_window(p, 0.4, 0.34), std::invalid_argument);
  const AlphaWindow w = alpha_window(p, 0.4, 0.2);
  EXPECT_DOUBLE_EQ(w.alpha1, 0.4);
  EXPECT_DOUBLE_EQ(w.alpha2, 0.2);
  EXPECT_NEAR(w.m3, std::min(0.4 * 1.4 / 0.3 - 1.0, 1.0 / 3.0), 1e-15);
}

TEST(AlphaWindow, NonEmptyAcrossAdmissibleGamma) {
  for (int n = 0; n < 100; ++n) {
    const double gamma = (1.0 / 3.0 + 1e-3) + n * ((1.0 - 1e-3) - (1.0 / 3.0 + 1e-3)) / 99.0;
    const GammaParams p(gamma);
    for (double scale : {0.1, 0.5, 0.9}) {
      const AlphaWindow w = alphas_from_scale(p, scale);
      EXPECT_LT(w.m1, w.alpha1);
      EXPECT_LT(w.alpha1, w.m2);
      EXPECT_GT(w.m3, 0.0);
      EXPECT_GT(w.alpha2, 0.0);
      EXPECT_LT(w.alpha2, w.m3);
      EXPECT_NO_THROW(alpha_window(p, w.alpha1, w.alpha2));
    }
  }
}

}  // namespace
}  // namespace ppcf
