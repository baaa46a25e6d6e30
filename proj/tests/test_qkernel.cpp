#include <gtest/gtest.h>

#include <random>

#include "ehb/qkernel.hpp"

using namespace ehb;

namespace {

double rel(cd a, cd b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// sum_n (-x)^n p^{n(n-1)/2}, two-sided
cd triple_series(cd x, double p) {
  cd s = 0;
  for (int n = -60; n <= 60; ++n) s += std::pow(-x, n) * std::pow(p, 0.5 * n * (n - 1));
  return s;
}

cd rand_c(std::mt19937_64& g, double lo, double hi) {
  std::uniform_real_distribution<double> m(lo, hi), ph(-M_PI, M_PI);
  return std::polar(m(g), ph(g));
}

}  // namespace

TEST(QPoch, FiniteExamples) {
  EXPECT_EQ(qpoch(cd(0.7, 0.2), cd(3.0), 0), cd(1));
  EXPECT_EQ(qpoch(cd(1), cd(0.5), 3), cd(0));
  EXPECT_NEAR(std::abs(qpoch(cd(0.3), cd(0.5), 2) - cd(0.595)), 0.0, 1e-15);
  EXPECT_THROW(qpoch(cd(0.3), cd(0.5), -1), DomainError);
}

TEST(QPoch, FiniteAllowsLargeQ) {
  cd v = qpoch(cd(0.1), cd(3.0), 3);
  EXPECT_NEAR(std::abs(v - cd(0.9 * 0.7 * 0.1)), 0.0, 1e-15);
}

TEST(QPoch, SplittingLaw) {
  std::mt19937_64 g(11);
  for (int it = 0; it < 200; ++it) {
    cd x = rand_c(g, 0.1, 2.0), q = rand_c(g, 0.1, 1.5);
    int n = it % 7, m = (it / 7) % 5;
    cd lhs = qpoch(x, q, n + m);
    cd rhs = qpoch(x, q, n) * qpoch(cd(x * std::pow(q, n)), q, m);
    EXPECT_LT(std::abs(lhs - rhs), 1e-13 * std::max(1.0, std::abs(lhs)));
  }
}

TEST(QPoch, InfiniteExamples) {
  EXPECT_EQ(qpoch_inf(cd(0), cd(0.5)), cd(1));
  EXPECT_LT(std::abs(qpoch_inf(cd(0.5), cd(0.5)) - qpoch(cd(0.5), cd(0.5), 40)), 1e-12);
  EXPECT_THROW(qpoch_inf(cd(0.5), cd(1.0)), DomainError);
  EXPECT_THROW(qpoch_inf(cd(0.5), cd(0.0, 1.2)), DomainError);
}

TEST(QPoch, EulerPentagonal) {
  for (cd q : {cd(0.5), cd(0.3, 0.4), cd(-0.7, 0.1)}) {
    cd s = 0;
    for (int n = -40; n <= 40; ++n) s += (n % 2 ? -1.0 : 1.0) * std::pow(q, n * (3 * n - 1) / 2);
    EXPECT_LT(rel(qpoch_inf(q, q), s), 1e-13);
  }
}

TEST(QPoch, MaxTermsGuard) {
  Precision pr{1e-16, 5};
  EXPECT_THROW(qpoch_inf(cd(0.5), cd(0.9), pr), NonConvergence);
}

TEST(Theta, Examples) {
  cd x(0.4, 0.1);
  EXPECT_EQ(theta(x, cd(0)), cd(1) - x);
  EXPECT_LT(std::abs(theta(cd(0.1), cd(0.1))), 1e-15);
  EXPECT_LT(rel(theta(x, cd(0.1)), triple_series(x, 0.1) / qpoch_inf(cd(0.1), cd(0.1))), 1e-13);
  EXPECT_THROW(theta(cd(0), cd(0.1)), DomainError);
  EXPECT_THROW(theta(x, cd(1.0)), DomainError);
}

TEST(Theta, QPFinite) {
  cd x(0.6, -0.3), q(0.4, 0.2), p(0.1);
  EXPECT_EQ(theta_qp(x, q, p, 0), cd(1));
  EXPECT_LT(std::abs(theta_qp(x, q, cd(0), 2) - (cd(1) - x) * (cd(1) - x * q)), 1e-15);
  cd v = theta_qp(cd(0.3), cd(2.0), p, 3);
  cd w = theta(cd(0.3), p) * theta(cd(0.6), p) * theta(cd(1.2), p);
  EXPECT_LT(rel(v, w), 1e-14);
}

TEST(Theta, RandomIdentities) {
  std::mt19937_64 g(2024);
  std::uniform_real_distribution<double> pd(0.01, 0.6);
  double worst_qp = 0, worst_tp = 0;
  for (int it = 0; it < 1000; ++it) {
    cd x = rand_c(g, 0.3, 1.5);
    double pr = pd(g);
    cd p(pr);
    cd th = theta(x, p);
    worst_qp = std::max(worst_qp, rel(theta(cd(p * x), p), -th / x));
    worst_qp = std::max(worst_qp, rel(theta(cd(1.0 / x), p), -th / x));
    worst_tp = std::max(worst_tp, rel(qpoch_inf(p, p) * th, triple_series(x, pr)));
  }
  EXPECT_LT(worst_qp, 1e-12);
  EXPECT_LT(worst_tp, 1e-12);
}

TEST(EllipticGamma, Examples) {
  cd p(0.2), q(0.3, 0.1);
  EXPECT_LT(std::abs(elliptic_gamma(std::sqrt(p * q), p, q) - cd(1)), 1e-14);
  cd x(0.5, 0.2);
  EXPECT_LT(std::abs(elliptic_gamma(x, p, q) * elliptic_gamma(cd(p * q / x), p, q) - cd(1)), 1e-13);
  cd g0 = elliptic_gamma(cd(0.5), cd(0), cd(0.3));
  EXPECT_LT(rel(g0, 1.0 / qpoch_inf(cd(0.5), cd(0.3))), 1e-14);
}

TEST(EllipticGamma, Poles) {
  cd p(0.2), q(0.3, 0.1);
  EXPECT_THROW(elliptic_gamma(cd(1), p, q), PoleError);
  EXPECT_THROW(elliptic_gamma(cd(1.0 / (p * q * q)), p, q), PoleError);
  EXPECT_THROW(elliptic_gamma(cd(0.5), cd(1.0), q), DomainError);
}

TEST(EllipticGamma, RandomReflection) {
  std::mt19937_64 g(99);
  std::uniform_real_distribution<double> pd(0.01, 0.4);
  double worst = 0;
  for (int it = 0; it < 1000; ++it) {
    cd p(pd(g)), q = rand_c(g, 0.05, 0.4), x = rand_c(g, 0.3, 1.2);
    worst = std::max(worst, std::abs(elliptic_gamma(x, p, q) * elliptic_gamma(cd(p * q / x), p, q) - cd(1)));
  }
  EXPECT_LT(worst, 1e-12);
}

TEST(EllipticGamma, DegeneratesAtPZero) {
  std::mt19937_64 g(5);
  for (int it = 0; it < 50; ++it) {
    cd q = rand_c(g, 0.1, 0.8), x = rand_c(g, 0.2, 2.0);
    EXPECT_LT(rel(elliptic_gamma(x, cd(0), q), 1.0 / qpoch_inf(x, q)), 1e-12);
  }
}

TEST(PmArgs, Expansion) {
  PmPattern<cd> xy{cd(1), {{cd(2), 1}, {cd(3), 1}}};
  auto v = expand_pm_args(xy);
  ASSERT_EQ(v.size(), 4u);
  EXPECT_LT(std::abs(v[0] - cd(6)), 1e-15);
  EXPECT_LT(std::abs(v[1] - cd(2.0 / 3)), 1e-15);
  EXPECT_LT(std::abs(v[2] - cd(3.0 / 2)), 1e-15);
  EXPECT_LT(std::abs(v[3] - cd(1.0 / 6)), 1e-15);

  auto z2 = expand_pm_args(PmPattern<cd>{cd(1), {{cd(3), 2}}});
  ASSERT_EQ(z2.size(), 2u);
  EXPECT_LT(std::abs(z2[0] - cd(9)), 1e-15);
  EXPECT_LT(std::abs(z2[1] - cd(1.0 / 9)), 1e-15);

  auto tz = expand_pm_args(PmPattern<cd>{cd(2), {{cd(3), 1}}});
  EXPECT_LT(std::abs(tz[0] - cd(6)), 1e-15);
  EXPECT_LT(std::abs(tz[1] - cd(2.0 / 3)), 1e-15);
}

TEST(Multiprecision, TripleProductAt100Digits) {
  mpc100 x(mpreal("0.4"), mpreal("0.1")), p(mpreal("0.1"));
  mpc100 s(0);
  for (int n = -80; n <= 80; ++n) {
    mpc100 term = ipow(mpc100(-x), n) * ipow(p, (long long)n * (n - 1) / 2);
    s += term;
  }
  mpc100 lhs = qpoch_inf(p, p) * theta(x, p);
  EXPECT_LT(mag_d(mpc100(lhs - s)), 1e-90);
}
