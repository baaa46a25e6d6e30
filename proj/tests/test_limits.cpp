#include <gtest/gtest.h>

#include "ehb/limits.hpp"

using namespace ehb;

namespace {

const Q h(1, 2);
const cd q0(0.3, 0.2);

cd rand_c(std::mt19937_64& g, double lo = 0.5, double hi = 0.9) {
  std::uniform_real_distribution<double> m(lo, hi), ph(-M_PI, M_PI);
  return std::polar(m(g), ph(g));
}

// Six parameters with product q and |t_5| < 0.92.
std::array<cd, 6> measure_params(std::uint64_t seed, cd q) {
  std::mt19937_64 g(seed);
  for (;;) {
    std::array<cd, 6> t;
    cd pr = 1;
    for (int r = 0; r < 5; ++r) pr *= (t[r] = rand_c(g, 0.6, 0.9));
    t[5] = q / pr;
    if (std::abs(t[5]) < 0.92) return t;
  }
}

cd one(cd) { return cd(1); }

Alpha alpha(std::initializer_list<Q> xs) {
  Alpha a{};
  std::copy(xs.begin(), xs.end(), a.begin());
  return a;
}

}  // namespace

// ---------------------------------------------------------------- Pastro

TEST(Pastro, HypergeometricRoutesAgree) {
  std::mt19937_64 g(2);
  for (int d = 0; d < 20; ++d) {
    std::array<cd, 4> t{rand_c(g), rand_c(g), rand_c(g), rand_c(g)};
    auto b = LimitParams<cd>::balanced(t, rand_c(g), q0);
    cd z = rand_c(g);
    for (int n = 0; n <= 5; ++n) {
      cd a = pastro_P32(n, z, b.t, b.u, q0), c = pastro_P21(n, z, b.t, b.u, q0);
      EXPECT_LT(std::abs(a - c), 1e-9 * std::max(1.0, std::abs(a))) << d << " " << n;
      cd s = pastro_p(n, cd(std::sqrt(q0) / (b.t[2] * b.t[3] * b.u[1] * z)), cd(q0 / (b.t[1] * b.u[0])),
                      cd(q0 / (b.t[3] * b.u[1])), q0);
      EXPECT_LT(std::abs(a - s), 1e-9 * std::max(1.0, std::abs(a))) << d << " " << n;
    }
  }
}

TEST(Pastro, HypergeometricRoutesAgreeAt100Digits) {
  // the terminating 3phi2 loses about q^{-n} digits in double, so compare at higher degree here
  std::mt19937_64 g(3);
  const mpc100 q = convert<mpc100>(q0);
  auto mp = [](cd x) { return convert<mpc100>(x); };
  for (int d = 0; d < 5; ++d) {
    std::array<mpc100, 4> t{mp(rand_c(g)), mp(rand_c(g)), mp(rand_c(g)), mp(rand_c(g))};
    auto b = LimitParams<mpc100>::balanced(t, mp(rand_c(g)), q);
    mpc100 z = mp(rand_c(g));
    for (int n = 0; n <= 8; ++n) {
      mpc100 a = pastro_P32(n, z, b.t, b.u, q), c = pastro_P21(n, z, b.t, b.u, q);
      EXPECT_LT(mag_d(mpc100(a - c)), 1e-80 * std::max(1.0, mag_d(a))) << d << " " << n;
    }
  }
}

TEST(Pastro, RegularizedMatchesDirect) {
  cd A(0.3, 0.1), B(-0.2, 0.35), w(0.4, -0.7);
  for (int n = 0; n <= 6; ++n)
    EXPECT_LT(std::abs(pastro_p(n, w, A, B, q0) - pastro_p_direct(n, w, A, B, q0)), 1e-12);
}

TEST(Pastro, MonomialsAtBEqualsQ) {
  cd A(0.3, 0.1), w(0.4, -0.7);
  for (int n = 0; n <= 6; ++n) {
    cd want = std::pow(w * A, n) * std::pow(std::sqrt(q0), -n);
    EXPECT_LT(std::abs(pastro_p(n, w, A, q0, q0) - want), 1e-14 * std::max(1.0, std::abs(want))) << n;
  }
}

TEST(Pastro, BiorthogonalityMatrix) {
  cd A(0.3, 0.1), B(-0.2, 0.35);
  for (int n = 0; n <= 5; ++n)
    for (int m = 0; m <= 5; ++m) {
      auto r = pastro_inner_product<cd>([&](cd w) { return pastro_p(n, w, A, B, q0); },
                                        [&](cd w) { return pastro_q(m, w, A, B, q0); }, A, B, q0, 256);
      if (n == m)
        EXPECT_LT(std::abs(r.value / pastro_norm(n, A, B, q0) - cd(1)), 1e-8) << n;
      else
        EXPECT_LT(std::abs(r.value), 1e-8 * std::abs(pastro_norm(std::min(n, m), A, B, q0))) << n << "," << m;
    }
}

TEST(Pastro, DualFamilyFromReflection) {
  std::mt19937_64 g(4);
  std::array<cd, 4> t{rand_c(g), rand_c(g), rand_c(g), rand_c(g)};
  auto b = LimitParams<cd>::balanced(t, rand_c(g), q0);
  cd z = rand_c(g);
  for (int n = 0; n <= 4; ++n) {
    cd want = std::pow(1.0 / (b.u[0] * b.t[0] * b.t[1] * b.t[2]), n) *
              pastro_P(n, cd(1.0 / z), {b.t[2], b.t[3], b.t[0], b.t[1]}, {b.u[1], b.u[0]}, q0);
    EXPECT_LT(std::abs(pastro_Q(n, z, b.t, b.u, q0) - want), 1e-12 * std::max(1.0, std::abs(want)));
  }
}

TEST(Pastro, ContourGuard) {
  EXPECT_THROW(pastro_inner_product<cd>(one, one, cd(0.9), cd(0.1), q0, 64), ContourError);
}

// ---------------------------------------------------------------- Askey-Wilson

TEST(AskeyWilson, DegreeOneClosedForm) {
  std::array<cd, 4> t{cd(0.3, 0.1), cd(-0.2, 0.4), cd(0.5), cd(0.1, -0.6)};
  cd q(0.4, 0.1), z(0.7, 0.3);
  cd abcd = t[0] * t[1] * t[2] * t[3];
  // the k = 1 term of the terminating 4phi3
  cd term = (1.0 - 1.0 / q) * (1.0 - abcd) * (1.0 - t[0] * z) * (1.0 - t[0] / z) /
            ((1.0 - q) * (1.0 - t[0] * t[1]) * (1.0 - t[0] * t[2]) * (1.0 - t[0] * t[3])) * q;
  EXPECT_LT(std::abs(askey_wilson(1, z, t, q) - (1.0 + term)), 1e-14);
  EXPECT_EQ(askey_wilson(0, z, t, q), cd(1));
  EXPECT_LT(std::abs(askey_wilson(3, t[0], t, q) - cd(1)), 1e-14);
}

// ---------------------------------------------------------------- hypotheses

TEST(Hypotheses, Predicates) {
  EXPECT_TRUE(nr_hypothesis(alpha({0, 0, 0, 0, Q(1, 3), Q(2, 3)})));
  EXPECT_FALSE(nr_hypothesis(alpha({Q(-1, 4), 0, Q(1, 4), h, 0, h})));
  EXPECT_TRUE(sb_hypothesis(alpha({Q(-1, 4), 0, Q(1, 4), h, 0, h}), {0, 1, 4}));
  EXPECT_TRUE(s2_series_hypothesis(alpha({Q(-1, 4), Q(-1, 4), h, h, Q(1, 4), Q(1, 4)}), 0, 1));
  EXPECT_FALSE(s2_series_hypothesis(alpha({h, h, Q(1, 4), Q(1, 4), Q(-1, 4), Q(-1, 4)}), 4, 5));
  EXPECT_TRUE(s2_hypothesis(alpha({h, h, Q(1, 4), Q(1, 4), Q(-1, 4), Q(-1, 4)}), 4, 5));
  EXPECT_TRUE(sigma_hypothesis(alpha({-h, Q(1, 6), Q(1, 6), h, Q(1, 6), h}), 0));
  EXPECT_FALSE(sigma_hypothesis(alpha({-h, Q(1, 6), Q(1, 6), h, Q(1, 6), h}), 1));
  EXPECT_TRUE(finite_hypothesis(alpha({0, 0, 0, 0, h, h})));
  EXPECT_FALSE(finite_hypothesis(alpha({Q(-1, 4), 0, Q(1, 4), h, 0, h})));
  EXPECT_EQ(*find_sb_triple(alpha({Q(-1, 4), 0, Q(1, 4), h, 0, h})), (std::array<int, 3>{0, 1, 4}));
  EXPECT_EQ(*find_sigma_index(alpha({-h, Q(1, 6), Q(1, 6), h, Q(1, 6), h})), 0);
}

TEST(Hypotheses, ConstructorsReject) {
  auto t = measure_params(4, q0);
  Alpha pp = alpha({Q(-1, 4), 0, Q(1, 4), h, 0, h});
  EXPECT_THROW(nr_measure(pp, t, q0), HypothesisError);
  EXPECT_THROW(sb_measure(pp, {0, 1, 2}, t, q0), HypothesisError);
  EXPECT_THROW(sigma_measure(pp, 0, t, q0), HypothesisError);
  EXPECT_THROW(sigma2_series_measure(pp, 0, 1, t, q0), HypothesisError);
  auto bad = t;
  bad[5] *= 1.1;
  EXPECT_THROW(nr_measure(alpha({0, 0, 0, 0, Q(1, 3), Q(2, 3)}), bad, q0), DomainError);
}

// ---------------------------------------------------------------- limit measures are probability measures

TEST(Measures, NonReducedNormalized) {
  cd q(0.25, 0.12);
  auto t = measure_params(4, q);
  auto m = nr_measure(alpha({0, 0, 0, 0, Q(1, 3), Q(2, 3)}), t, q);
  EXPECT_LT(std::abs(m.apply(one, one) - cd(1)), 1e-12);
}

TEST(Measures, SymmetryBrokenNormalized) {
  cd q(0.25, 0.12);
  auto t = measure_params(4, q);
  auto m = sb_measure(alpha({Q(-1, 4), 0, Q(1, 4), h, 0, h}), {0, 1, 4}, t, q);
  EXPECT_LT(std::abs(m.apply(one, one) - cd(1)), 1e-12);
}

TEST(Measures, DoubleIntegralIndependentOfW) {
  cd q(0.25, 0.12);
  auto t = measure_params(4, q);
  Alpha a = alpha({Q(-1, 4), Q(-1, 4), h, h, Q(1, 4), Q(1, 4)});
  cd v1 = sigma2_measure(a, 0, 1, t, q, cd(0.7, 0.2)).apply(one, one);
  cd v2 = sigma2_measure(a, 0, 1, t, q, cd(-0.3, 0.9)).apply(one, one);
  EXPECT_LT(std::abs(v1 - cd(1)), 1e-12);
  EXPECT_LT(std::abs(v2 - cd(1)), 1e-12);
  cd s = sigma2_series_measure(a, 0, 1, t, q).apply(one, one);
  EXPECT_LT(std::abs(s - cd(1)), 1e-12);
}

TEST(Measures, SingleSeriesNormalized) {
  cd q(0.25, 0.12);
  auto t = measure_params(4, q);
  for (Alpha a : {alpha({-h, Q(1, 6), Q(1, 6), h, Q(1, 6), h}), alpha({-h, Q(1, 4), Q(1, 4), Q(1, 4), Q(1, 4), h}),
                  alpha({Q(-3, 10), Q(1, 10), h, h, Q(1, 10), Q(1, 10)})}) {
    auto idx = find_sigma_index(a);
    ASSERT_TRUE(idx.has_value());
    EXPECT_LT(std::abs(sigma_measure(a, *idx, t, q).apply(one, one) - cd(1)), 1e-12);
  }
}

TEST(Measures, PolynomialMomentsAgreeAcrossForms) {
  cd q(0.25, 0.12);
  auto t = measure_params(4, q);
  Alpha a = alpha({Q(-1, 4), Q(-1, 4), h, h, Q(1, 4), Q(1, 4)});
  // the series weights decay only like q^k, so the test functions must not grow towards zero
  for (int m = 1; m <= 3; ++m) {
    auto f = [m](cd z) { return std::pow(z, m) + 0.5 * z; };
    cd vi = sigma2_measure(a, 0, 1, t, q, cd(0.7, 0.2)).apply(f, one);
    cd vs = sigma2_series_measure(a, 0, 1, t, q).apply(f, one);
    EXPECT_LT(std::abs(vi - vs), 1e-12 * std::max(1.0, std::abs(vs))) << m;
  }
}

// ---------------------------------------------------------------- finite weights

namespace {

struct FiniteSetup {
  cd q{0.3, 0.15};
  int N = 4;
  std::array<cd, 6> t;
  FiniteSetup() {
    std::mt19937_64 g(1);
    cd t0 = rand_c(g, 0.6, 0.95), t2 = rand_c(g, 0.6, 0.95), t3 = rand_c(g, 0.6, 0.95), t4 = rand_c(g, 0.6, 0.95);
    t = {t0, std::pow(q, -N) / t0, t2, t3, t4, std::pow(q, N + 1) / (t2 * t3 * t4)};
  }
};

}  // namespace

TEST(FiniteWeights, SumToOneInEachBranch) {
  FiniteSetup s;
  for (Alpha a : {alpha({0, 0, 0, 0, h, h}), alpha({0, 0, 0, 0, 0, 1}), alpha({Q(-1, 4), Q(1, 4), 0, 0, h, h}),
                  alpha({Q(-1, 4), Q(1, 4), Q(-1, 4), Q(1, 4), h, h}), alpha({-h, h, 0, 0, h, h}),
                  alpha({-h, h, -h, h, h, h})}) {
    cd sum = 0;
    double scale = 0;  // individual weights can be large, so compare against their total size
    for (int k = 0; k <= s.N; ++k) {
      cd w = finite_weights(k, a, s.t, s.N, s.q);
      sum += w;
      scale += std::abs(w);
    }
    EXPECT_LT(std::abs(sum - cd(1)), 1e-14 * scale) << scale;
    EXPECT_LT(std::abs(finite_measure(a, s.t, s.N, s.q).apply(one, one) - cd(1)), 1e-14 * scale);
  }
}

TEST(FiniteWeights, BranchSelection) {
  EXPECT_EQ(finite_branch(alpha({0, 0, 0, 0, h, h})), FiniteBranch::ZERO);
  EXPECT_EQ(finite_branch(alpha({Q(-1, 4), Q(1, 4), 0, 0, h, h})), FiniteBranch::INTERIOR);
  EXPECT_EQ(finite_branch(alpha({-h, h, 0, 0, h, h})), FiniteBranch::HALF);
  EXPECT_THROW(finite_branch(alpha({Q(-1, 4), 0, Q(1, 4), h, 0, h})), BranchError);
}

TEST(FiniteWeights, ArgumentChecks) {
  FiniteSetup s;
  Alpha a = alpha({0, 0, 0, 0, h, h});
  EXPECT_THROW(finite_weights(s.N + 1, a, s.t, s.N, s.q), DomainError);
  auto bad = s.t;
  bad[1] *= 1.01;
  EXPECT_THROW(finite_weights(0, a, bad, s.N, s.q), DomainError);
}

TEST(FiniteWeights, EllipticWeightsApproachLimit) {
  FiniteSetup s;
  using M = mpc100;
  std::array<M, 6> tm;
  M qm = convert<M>(s.q);
  tm[0] = convert<M>(s.t[0]);
  tm[1] = ipow(qm, -s.N) / tm[0];
  for (int r = 2; r < 5; ++r) tm[r] = convert<M>(s.t[r]);
  tm[5] = ipow(qm, s.N + 1) / (tm[2] * tm[3] * tm[4]);
  for (Alpha a : {alpha({0, 0, 0, 0, h, h}), alpha({Q(-1, 4), Q(1, 4), 0, 0, h, h}), alpha({-h, h, 0, 0, h, h})}) {
    double err = 0;
    for (int k = 0; k <= s.N; ++k) {
      M w = finite_weights(k, a, tm, s.N, qm);
      M e = elliptic_finite_weight(k, a, tm, s.N, qm, mpreal("1e-40"));
      err = std::max(err, mag_d(M(e / w - M(1))));
    }
    EXPECT_LT(err, 1e-5);
  }
}

// ---------------------------------------------------------------- numeric limits

TEST(NumericLimit, ConstantFunction) {
  ExponentVector v = parse_exponent_vector("0,0,0,0;1/2,1/2;0");
  std::vector<double> ps{1e-2, 1e-3, 1e-4};
  auto est = numeric_limit<cd>([](double p) { return cd(3.0) * p * p * (1.0 + p); }, v, ps);
  EXPECT_EQ(est.valuation_used, Q(2));
  EXPECT_LT(std::abs(est.limit - cd(3)), 1e-12);
}

TEST(NumericLimit, RejectsBadSequences) {
  ExponentVector v = parse_exponent_vector("0,0,0,0;1/2,1/2;0");
  auto f = [](double) { return cd(1); };
  EXPECT_THROW(numeric_limit<cd>(f, v, std::vector<double>{1e-2}), DomainError);
  EXPECT_THROW(numeric_limit<cd>(f, v, std::vector<double>{1e-3, 1e-2}), DomainError);
  auto wild = [](double p) { return cd(p < 1e-3 ? p * p * p : 1.0); };
  EXPECT_THROW(numeric_limit<cd>(wild, v, std::vector<double>{1e-2, 1e-3, 1e-4, 1e-5}), NonConvergence);
}

TEST(NumericLimit, DegreeOneRtildeTendsToAskeyWilson) {
  using M = mpc100;
  std::mt19937_64 g(2);
  std::array<M, 4> t;
  for (auto& x : t) x = convert<M>(rand_c(g));
  M q = convert<M>(q0);
  auto b = LimitParams<M>::balanced(t, convert<M>(rand_c(g)), q);
  M z = convert<M>(rand_c(g));
  ExponentVector v = parse_exponent_vector("0,0,0,0;1/2,1/2;0");
  std::vector<mpreal> ps{mpreal("1e-4"), mpreal("1e-5"), mpreal("1e-6"), mpreal("1e-7"), mpreal("1e-8")};
  for (int n = 1; n <= 2; ++n) {
    auto est = numeric_limit<M>([&](const mpreal& p) { return rtilde_scaled(n, z, b, v, p); }, v, ps, Q(0));
    M aw = askey_wilson(n, z, b.t, q);
    EXPECT_LT(mag_d(M(est.limit - aw)), 1e-8) << n;
    EXPECT_LT(std::abs(est.valuation), 0.05);
  }
}
