#include <gtest/gtest.h>

#include "ehb/biortho.hpp"

using namespace ehb;

namespace {

cd one_fn(cd) { return cd(1); }

EllipticParams<cd> discrete_draw(std::uint64_t seed, int N) {
  std::mt19937_64 g(seed);
  return sample_params<cd>(g, std::polar(0.4, 0.3), cd(0.05), 0.5, 0.9, N);
}

}  // namespace

TEST(Rtilde, DegreeZeroIsOne) {
  auto e = discrete_draw(1, -1);
  EXPECT_EQ(rtilde(0, std::polar(0.7, 0.2), e), cd(1));
}

TEST(Rtilde, NormalizedAtT0) {
  for (std::uint64_t s = 1; s <= 5; ++s) {
    auto e = discrete_draw(s, -1);
    for (int n = 0; n <= 8; ++n) EXPECT_LT(std::abs(rtilde(n, e.t[0], e) - cd(1)), 1e-10) << n;
  }
}

TEST(Rtilde, InversionInvariant) {
  auto e = discrete_draw(2, -1);
  for (int n = 1; n <= 5; ++n) {
    cd z = std::polar(0.8, 0.9 * n);
    EXPECT_LT(std::abs(rtilde(n, z, e) - rtilde(n, cd(1.0 / z), e)), 1e-11 * std::abs(rtilde(n, z, e)));
  }
}

TEST(Rtilde, RejectsUnbalanced) {
  auto e = discrete_draw(3, -1);
  e.u[1] *= 1.01;
  EXPECT_THROW(rtilde(1, cd(0.5), e), DomainError);
  EXPECT_THROW(rtilde(-1, cd(0.5), discrete_draw(3, -1)), DomainError);
}

TEST(Discrete, TotalMassIsOne) {
  for (std::uint64_t s = 1; s <= 20; ++s) {
    auto e = discrete_draw(100 + s, 5);
    cd v = discrete_inner_product<cd>(one_fn, one_fn, e, DiscreteSpec{5});
    EXPECT_LT(std::abs(v - cd(1)), 1e-9) << "seed " << s;
  }
}

TEST(Discrete, BiorthogonalityMatrix) {
  constexpr int N = 5;
  for (std::uint64_t s = 1; s <= 10; ++s) {
    auto e = discrete_draw(200 + s, N);
    auto d = e.swapped();
    double diag_scale = 0;
    std::array<std::array<cd, N>, N> G{};
    for (int n = 0; n < N; ++n)
      for (int m = 0; m < N; ++m)
        G[n][m] = discrete_inner_product<cd>([&](cd x) { return rtilde(n, x, e); },
                                             [&](cd x) { return rtilde(m, x, d); }, e, DiscreteSpec{N});
    for (int n = 0; n < N; ++n) diag_scale = std::max(diag_scale, std::abs(G[n][n]));
    for (int n = 0; n < N; ++n)
      for (int m = 0; m < N; ++m) {
        if (n == m) {
          cd nf = norm_formula(n, e);
          EXPECT_LT(std::abs(G[n][n] / nf - cd(1)), 1e-9) << "seed " << s << " n " << n;
        } else {
          EXPECT_LT(std::abs(G[n][m]), 1e-9 * diag_scale) << "seed " << s << " " << n << "," << m;
        }
      }
  }
}

TEST(Discrete, RejectsNonDiscreteParameters) {
  auto e = discrete_draw(5, -1);
  EXPECT_THROW(discrete_inner_product<cd>(one_fn, one_fn, e, DiscreteSpec{5}), DomainError);
}

TEST(Discrete, RejectsQPowerOnPLattice) {
  // q^2 = p puts q^k on p^Z for k = 2
  cd p(0.09), q(0.3);
  cd t0 = std::polar(0.7, 0.4);
  cd t1 = std::pow(q, -3) / t0;
  auto e = EllipticParams<cd>::balanced({t0, t1, std::polar(0.6, 1.0), std::polar(0.8, -0.7)}, std::polar(0.7, 2.0),
                                        q, p);
  EXPECT_THROW(discrete_inner_product<cd>(one_fn, one_fn, e, DiscreteSpec{3}), PoleError);
}

TEST(NormFormula, DegreeZeroIsOne) {
  auto e = discrete_draw(6, -1);
  EXPECT_LT(std::abs(norm_formula(0, e) - cd(1)), 1e-14);
}

TEST(NormFormula, VanishesWhenT2T3IsInverseQ) {
  cd q = std::polar(0.4, 0.3), p(0.05);
  cd t2 = std::polar(0.8, 0.5);
  cd t3 = 1.0 / (q * t2);
  auto e = EllipticParams<cd>::balanced({std::polar(0.6, 0.1), std::polar(0.7, -1.3), t2, t3}, std::polar(0.55, 2.2),
                                        q, p);
  EXPECT_GT(std::abs(norm_formula(1, e)), 1e-6);
  EXPECT_LT(std::abs(norm_formula(2, e)), 1e-12);
  EXPECT_LT(std::abs(norm_formula(3, e)), 1e-12);
}

TEST(Continuous, TotalMassIsOne) {
  cd q = std::polar(0.3, 0.4), p(0.25);
  std::mt19937_64 g(5);
  int done = 0;
  while (done < 3) {
    auto e = sample_params<cd>(g, q, p, 0.45, 0.8);
    if (std::abs(e.u[1]) > 0.8) continue;
    auto r = continuous_inner_product<cd>(one_fn, one_fn, e, 0, 0, 512);
    EXPECT_LT(std::abs(r.value - cd(1)), 1e-6);
    EXPECT_LT(std::abs(r.doubled - r.value), 1e-8);
    ++done;
  }
}

TEST(Continuous, LowDegreeBiorthogonality) {
  cd q = std::polar(0.3, 0.4), p(0.02);
  auto e = EllipticParams<cd>::balanced(
      {std::polar(0.6, 0.3), std::polar(0.7, -1.0), std::polar(0.65, 2.0), std::polar(0.7, 0.4)}, std::polar(0.2, 1.1),
      q, p);
  auto d = e.swapped();
  for (int n = 0; n <= 1; ++n)
    for (int m = 0; m <= 1; ++m) {
      auto r = continuous_inner_product<cd>([&](cd x) { return rtilde(n, x, e); },
                                            [&](cd x) { return rtilde(m, x, d); }, e, n, m, 512);
      if (n == m)
        EXPECT_LT(std::abs(r.value / norm_formula(n, e) - cd(1)), 1e-8);
      else
        EXPECT_LT(std::abs(r.value), 1e-9);
    }
}

TEST(Continuous, RejectsBadContour) {
  cd q = std::polar(0.3, 0.4), p(0.02);
  auto e = EllipticParams<cd>::balanced(
      {std::polar(1.2, 0.3), std::polar(0.7, -1.0), std::polar(0.65, 2.0), std::polar(0.7, 0.4)}, std::polar(0.2, 1.1),
      q, p);
  EXPECT_THROW(continuous_inner_product<cd>(one_fn, one_fn, e, 0, 0, 128), ContourError);
}

TEST(Continuous, CoarseGridFlagsNonConvergence) {
  cd q = std::polar(0.3, 0.4), p(0.25);
  std::mt19937_64 g(5);
  auto e = sample_params<cd>(g, q, p, 0.45, 0.8);
  while (std::abs(e.u[1]) >= 0.8) e = sample_params<cd>(g, q, p, 0.45, 0.8);
  EXPECT_THROW(continuous_inner_product<cd>(one_fn, one_fn, e, 0, 0, 4, Precision::for_type<cd>(), 1e-14),
               NonConvergence);
}

TEST(Symmetries, AllResidualsSmall) {
  for (std::uint64_t s = 1; s <= 5; ++s) {
    std::mt19937_64 g(s);
    auto e = sample_params<cd>(g, std::polar(0.4, 0.3), cd(0.05));
    for (int n : {1, 3}) {
      auto rep = check_symmetries<cd>(n, std::polar(0.8, 0.7), std::polar(1.2, -0.3), e);
      EXPECT_LT(rep.max(), 1e-10) << "seed " << s << " n " << n;
    }
  }
}

TEST(Multiprecision, MassAndNormalizationAt100Digits) {
  std::mt19937_64 g(17);
  mpc100 q = convert<mpc100>(std::polar(0.4, 0.3)), p = convert<mpc100>(cd(0.05));
  auto e = sample_params<mpc100>(g, q, p, 0.5, 0.9, 4);
  auto one = [](const mpc100&) { return mpc100(1); };
  mpc100 v = discrete_inner_product<mpc100>(one, one, e, DiscreteSpec{4});
  EXPECT_LT(mag_d(mpc100(v - mpc100(1))), 1e-80);
  EXPECT_LT(mag_d(mpc100(rtilde(3, e.t[0], e) - mpc100(1))), 1e-80);
}
