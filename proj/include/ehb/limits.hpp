#pragma once
// p -> 0 limits: Pastro polynomials, the Askey-Wilson top level, the limiting bilinear forms and
// finite weights, and numerical extraction of limits from the elliptic functions.
#include <array>
#include <functional>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "ehb/biortho.hpp"
#include "ehb/polytope.hpp"

namespace ehb {

// ---------------------------------------------------------------- exact hypothesis checks

// Each predicate states one limit proposition's inequality set exactly. Indices refer to the six
// parameters t0..t3, t4 = u0, t5 = u1.
bool nr_hypothesis(const Alpha& a);
bool sb_hypothesis(const Alpha& a, const std::array<int, 3>& abc);
bool s2_hypothesis(const Alpha& a, int i, int j);
bool s2_series_hypothesis(const Alpha& a, int i, int j);  // additionally i, j <= 3
// strict: the stated proposition (index <= 3, all pair sums > 0). extended: any index, pair sums
// >= 0; the form still normalizes, and the appendix's Sigma rows need it.
bool sigma_hypothesis(const Alpha& a, int idx, bool extended = false);
bool finite_hypothesis(const Alpha& a);

std::optional<std::array<int, 3>> find_sb_triple(const Alpha& a);
std::optional<std::pair<int, int>> find_s2_pair(const Alpha& a, bool series = false);
std::optional<int> find_sigma_index(const Alpha& a, bool extended = false);

enum class FiniteBranch { ZERO, INTERIOR, HALF };  // alpha_0 = 0, -1/2 < alpha_0 < 0, alpha_0 = -1/2
FiniteBranch finite_branch(const Alpha& a);        // BranchError unless finite_hypothesis

// ---------------------------------------------------------------- base-q parameters

template <class C> struct LimitParams {
  std::array<C, 4> t;
  std::array<C, 2> u;
  C q;

  static LimitParams balanced(const std::array<C, 4>& t, const C& u0, const C& q) {
    return LimitParams{t, {u0, q / (t[0] * t[1] * t[2] * t[3] * u0)}, q};
  }
  std::array<C, 6> six() const { return {t[0], t[1], t[2], t[3], u[0], u[1]}; }
  void require_balanced(double tol = 1e-12) const {
    C pr = t[0] * t[1] * t[2] * t[3] * u[0] * u[1];
    if (!(mag_d(C(pr / q - C(1))) <= tol)) throw DomainError("LimitParams: prod t prod u != q");
  }
};

// t_r -> t_r p^{alpha_r}, u_r -> u_r p^{gamma_r}; p real in (0,1).
template <class C> EllipticParams<C> scale(const LimitParams<C>& b, const ExponentVector& v, const real_t<C>& p) {
  EllipticParams<C> e;
  for (int r = 0; r < 4; ++r) e.t[r] = b.t[r] * C(rpow<C>(p, v.a[r]));
  for (int r = 0; r < 2; ++r) e.u[r] = b.u[r] * C(rpow<C>(p, v.a[4 + r]));
  e.q = b.q;
  e.p = C(p);
  return e;
}

// R~_n(z p^zeta; t_r p^{alpha_r}; u_r p^{gamma_r}); with swap the u's trade places after scaling.
template <class C>
C rtilde_scaled(int n, const C& z, const LimitParams<C>& b, const ExponentVector& v, const real_t<C>& p,
                bool swap = false, const Precision& pr = Precision::for_type<C>()) {
  auto e = scale(b, v, p);
  if (swap) e = e.swapped();
  return rtilde(n, C(z * C(rpow<C>(p, v.zeta))), e, pr, 1e-20);
}

// ---------------------------------------------------------------- Askey-Wilson top level

// 4phi3(q^{-n}, q^{n-1} t0t1t2t3, t0 z, t0/z; t0t1, t0t2, t0t3; q, q), equal to 1 at z = t0.
template <class C> C askey_wilson(int n, const C& z, const std::array<C, 4>& t, const C& q) {
  const C ab = t[0] * t[1] * t[2] * t[3];
  C s(0);
  for (int k = 0; k <= n; ++k)
    s += qpoch({ipow(q, -n), C(ipow(q, n - 1) * ab), C(t[0] * z), C(t[0] / z)}, q, k) /
         qpoch({q, C(t[0] * t[1]), C(t[0] * t[2]), C(t[0] * t[3])}, q, k) * ipow(q, k);
  return s;
}

// ---------------------------------------------------------------- Pastro polynomials

// 3phi2(q^{-n}, t0/z, q/(u0 t1); t0 t2, 0; q, q)
template <class C>
C pastro_P32(int n, const C& z, const std::array<C, 4>& t, const std::array<C, 2>& u, const C& q) {
  C s(0);
  for (int k = 0; k <= n; ++k)
    s += qpoch({ipow(q, -n), C(t[0] / z), C(q / (u[0] * t[1]))}, q, k) / qpoch({q, C(t[0] * t[2])}, q, k) *
         ipow(q, k);
  return s;
}

// (1/(t3u1);q)_n/(t0t2;q)_n (q/(t1u0))^n 2phi1(q/(t1u0), q^{-n}; q^{1-n} t3 u1; q, q/(t2 z))
template <class C>
C pastro_P21(int n, const C& z, const std::array<C, 4>& t, const std::array<C, 2>& u, const C& q) {
  const C a = q / (t[1] * u[0]);
  C s(0);
  for (int k = 0; k <= n; ++k) {
    C den = qpoch({q, C(ipow(q, 1 - n) * t[3] * u[1])}, q, k);
    if (mag_d(den) == 0.0) throw PoleError("pastro_P21: vanishing denominator");
    s += qpoch({a, ipow(q, -n)}, q, k) / den * ipow(C(q / (t[2] * z)), k);
  }
  return qpoch(C(C(1) / (t[3] * u[1])), q, n) / qpoch(C(t[0] * t[2]), q, n) * ipow(a, n) * s;
}

// Both representations, cross-checked; returns the 3phi2 value.
template <class C>
C pastro_P(int n, const C& z, const std::array<C, 4>& t, const std::array<C, 2>& u, const C& q,
           double tol = 1e-9) {
  C a = pastro_P32(n, z, t, u, q);
  C b = pastro_P21(n, z, t, u, q);
  if (mag_d(C(a - b)) > tol * std::max(1.0, mag_d(a)))
    throw InternalError("pastro_P: 3phi2 and 2phi1 forms disagree");
  return a;
}

// Q_n(z) = (1/(u0 t0 t1 t2))^n P_n(1/z; t2, t3, t0, t1; u1, u0)
template <class C>
C pastro_Q(int n, const C& z, const std::array<C, 4>& t, const std::array<C, 2>& u, const C& q) {
  return ipow(C(C(1) / (u[0] * t[0] * t[1] * t[2])), n) *
         pastro_P32(n, C(C(1) / z), {t[2], t[3], t[0], t[1]}, {u[1], u[0]}, q);
}

// p_n(w;A,B) = (B/q;q)_n/(AB/q;q)_n A^n 2phi1(A, q^{-n}; q^{2-n}/B; q, w q^{3/2}/B), written so that
// the ratio (B/q;q)_n/(q^{2-n}/B;q)_k = (B/q;q)_{n-k} (-B)^k q^{(n-2)k - k(k-1)/2} never forms 0/0.
// B = q is then a regular point.
template <class C> C pastro_p(int n, const C& w, const C& A, const C& B, const C& q) {
  using std::sqrt;
  const C sq = sqrt(q);
  C s(0);
  for (int k = 0; k <= n; ++k) {
    C term = qpoch({A, ipow(q, -n)}, q, k) / qpoch(q, q, k) * qpoch(C(B / q), q, n - k);
    term *= ipow(C(-w), k) * ipow(q, (long long)(n - 2) * k - (long long)k * (k - 1) / 2) * ipow(sq, 3 * k);
    s += term;
  }
  C den = qpoch(C(A * B / q), q, n);
  if (mag_d(den) == 0.0) throw PoleError("pastro_p: (AB/q;q)_n = 0");
  return ipow(A, n) * s / den;
}

// The displayed 2phi1, term by term. Undefined at B = q (0/0); used as a cross-check.
template <class C> C pastro_p_direct(int n, const C& w, const C& A, const C& B, const C& q) {
  using std::sqrt;
  const C x = w * q * sqrt(q) / B;
  C s(0);
  for (int k = 0; k <= n; ++k) {
    C den = qpoch({q, C(ipow(q, 2 - n) / B)}, q, k);
    if (mag_d(den) == 0.0) throw PoleError("pastro_p_direct: vanishing denominator");
    s += qpoch({A, ipow(q, -n)}, q, k) / den * ipow(x, k);
  }
  return qpoch(C(B / q), q, n) / qpoch(C(A * B / q), q, n) * ipow(A, n) * s;
}

template <class C> C pastro_q(int n, const C& w, const C& A, const C& B, const C& q) {
  return pastro_p(n, C(C(1) / w), B, A, q);
}

// (AB/q)^n (q;q)_n / (AB/q;q)_n
template <class C> C pastro_norm(int n, const C& A, const C& B, const C& q) {
  C ab = A * B / q;
  return ipow(ab, n) * qpoch(q, q, n) / qpoch(ab, q, n);
}

// (q, AB/q;q)/(A,B;q) * unit-circle integral of f g theta(q^{1/2} w;q)/(A w/q^{1/2}, B/(w q^{1/2});q).
template <class C, class F, class G>
QuadResult<C> pastro_inner_product(F&& f, G&& g, const C& A, const C& B, const C& q, int quad,
                                   double conv_tol = 1e-8) {
  using std::sqrt;
  if (mag_d(q) >= 1.0) throw DomainError("pastro_inner_product: |q| >= 1");
  const C sq = sqrt(q);
  if (mag_d(C(A / sq)) >= 1.0 || mag_d(C(B / sq)) >= 1.0)
    throw ContourError("pastro_inner_product: |A|, |B| must be < |q|^{1/2}");
  const C pre = qpoch_inf({q, C(A * B / q)}, q) / qpoch_inf({A, B}, q);
  using R = real_t<C>;
  const R two_pi = R(2) * boost::math::constants::pi<R>();
  auto integrate = [&](int M) {
    detail::CompensatedSum<C> acc;
    for (int j = 0; j < M; ++j) {
      using std::cos;
      using std::sin;
      R ang = two_pi * R(j) / R(M);
      C w(cos(ang), sin(ang));
      acc.add(f(w) * g(w) * theta(C(sq * w), q) / qpoch_inf({C(A * w / sq), C(B / (w * sq))}, q));
    }
    return C(pre * acc.value() / C(R(M)));
  };
  QuadResult<C> r{integrate(quad), integrate(2 * quad), 0.0};
  r.residual = mag_d(C(r.doubled - r.value));
  if (r.residual > conv_tol * std::max(1.0, mag_d(r.doubled)))
    throw NonConvergence("pastro_inner_product: quadrature not converged");
  return r;
}

// ---------------------------------------------------------------- finite weights

// w_{k,alpha}(t) for t0 t1 = q^{-N}, t2 t3 t4 t5 = q^{N+1}.
template <class C> C finite_weights(int k, const Alpha& al, const std::array<C, 6>& t, int N, const C& q) {
  const FiniteBranch br = finite_branch(al);
  if (k < 0 || k > N) throw DomainError("finite_weights: k outside 0..N");
  if (mag_d(C(t[0] * t[1] * ipow(q, N) - C(1))) > 1e-10) throw DomainError("finite_weights: t0 t1 != q^{-N}");
  if (mag_d(C(t[2] * t[3] * t[4] * t[5] / ipow(q, N + 1) - C(1))) > 1e-10)
    throw DomainError("finite_weights: t2 t3 t4 t5 != q^{N+1}");
  const C t0 = t[0], t1 = t[1];
  const long long bk = (long long)k * (k - 1) / 2, bN = (long long)N * (N - 1) / 2;
  const Q a0 = al[0];
  C w(1);
  auto vwp = [&] {
    return (C(1) - t0 * t0 * ipow(q, 2 * k)) / (C(1) - t0 * t0) * qpoch({ipow(q, -N), C(t0 * t0)}, q, k) /
           qpoch({q, C(q * t0 / t1)}, q, k) / qpoch(C(t1 / t0), q, N);
  };
  if (br == FiniteBranch::ZERO) {
    w = vwp() * ipow(C(C(1) / (t1 * t0 * t0 * t0 * q)), k) * ipow(q, -2 * bk);
    for (int r = 2; r < 6; ++r) {
      if (al[r] == 0)
        w *= qpoch(C(t0 * t[r]), q, k) * qpoch(C(t1 * t[r]), q, N) / qpoch(C(q * t0 / t[r]), q, k) *
             ipow(C(-q * t0 / t[r]), k) * ipow(q, bk);
      if (al[r] == 1)
        w *= qpoch(C(t0 * t[r]), q, k) * qpoch(C(t1 * t[r]), q, N) / qpoch(C(q * t0 / t[r]), q, k) *
             ipow(C(-t0 * t[r]), -k) * ipow(C(-t1 * t[r]), -N) * ipow(q, -bk - bN);
    }
  } else if (br == FiniteBranch::HALF) {
    w = vwp() * ipow(C(q * t0 / t1), k) * ipow(C(-t1 / t0), N) * ipow(q, 2 * bk + bN);
    const Q h(1, 2);
    for (int r = 2; r < 6; ++r) {
      if (al[r] == -h)
        w *= qpoch(C(t0 * t[r]), q, k) * qpoch(C(t1 * t[r]), q, N) * ipow(C(-q * t0 / t[r]), k) * ipow(q, bk) /
             qpoch(C(q * t0 / t[r]), q, k);
      if (al[r] == h)
        w *= qpoch(C(t0 * t[r]), q, k) * qpoch(C(t1 * t[r]), q, N) / qpoch(C(q * t0 / t[r]), q, k) *
             ipow(C(-t0 * t[r]), -k) * ipow(C(-t1 * t[r]), -N) * ipow(q, -bk - bN);
    }
  } else {
    w = qpoch(ipow(q, -N), q, k) / (qpoch(q, q, k) * ipow(t0, 2 * k) * ipow(q, 2 * bk));
    for (int r = 2; r < 6; ++r) {
      if (al[r] == a0) w *= ipow(C(q * t0 * t0), k) * ipow(q, 2 * bk) / qpoch(C(q * t0 / t[r]), q, k) *
                           qpoch(C(t1 * t[r]), q, N);
      if (a0 < al[r] && al[r] < -a0) w *= ipow(C(-t0 * t[r]), k) * ipow(q, bk);
      if (al[r] == -a0) w *= qpoch(C(t0 * t[r]), q, k);
      if (al[r] == 1 + a0) w *= qpoch(C(q * t0 / t[r]), q, N) / qpoch(C(q * t0 / t[r]), q, k);
    }
  }
  for (int r = 2; r < 6; ++r)
    for (int s = r + 1; s < 6; ++s)
      if (al[r] + al[s] == 1) w /= qpoch(C(q / (t[r] * t[s])), q, N);
  return w;
}

// The elliptic discrete mass at t0 q^k with t_r -> t_r p^{alpha_r}; tends to finite_weights.
template <class C>
C elliptic_finite_weight(int k, const Alpha& al, const std::array<C, 6>& t, int N, const C& q, const real_t<C>& p,
                         const Precision& pr = Precision::for_type<C>()) {
  EllipticParams<C> e;
  for (int r = 0; r < 4; ++r) e.t[r] = t[r] * C(rpow<C>(p, al[r]));
  for (int r = 0; r < 2; ++r) e.u[r] = t[4 + r] * C(rpow<C>(p, al[4 + r]));
  e.q = q;
  e.p = C(p);
  return discrete_weight(k, e, N, pr);
}

// ---------------------------------------------------------------- limit measures

enum class MeasureKind { NR_INTEGRAL, SB_INTEGRAL, SIGMA_SERIES, SIGMA2_SERIES, SIGMA2_INTEGRAL, FINITE_DISCRETE };

template <class C> struct SeriesBranch {
  C base;                          // support base_point * q^k
  C prefactor;
  std::function<C(int)> weight;    // mass at base q^k, without the prefactor
  int terms = -1;                  // fixed length (finite measures), or -1 for an infinite series
};

struct ApplyOptions {
  int quad = 256;
  double tol = 1e-15;
  int max_terms = 4000;
};

template <class C> struct LimitMeasure {
  MeasureKind kind;
  C prefactor{1};
  std::function<C(const C&)> density;  // integral kinds: weight on |z| = 1 against dz/(2 pi i z)
  std::vector<SeriesBranch<C>> branches;
  std::optional<C> aux_w;  // the free parameter of the Sigma^2 integral

  bool is_integral() const { return kind == MeasureKind::NR_INTEGRAL || kind == MeasureKind::SB_INTEGRAL ||
                                    kind == MeasureKind::SIGMA2_INTEGRAL; }

  template <class F, class G> C apply(F&& f, G&& g, const ApplyOptions& o = {}) const {
    using R = real_t<C>;
    if (is_integral()) {
      const R two_pi = R(2) * boost::math::constants::pi<R>();
      detail::CompensatedSum<C> acc;
      for (int j = 0; j < o.quad; ++j) {
        using std::cos;
        using std::sin;
        R ang = two_pi * R(j) / R(o.quad);
        C z(cos(ang), sin(ang));
        acc.add(density(z) * f(z) * g(z));
      }
      return prefactor * acc.value() / C(R(o.quad));
    }
    C total(0);
    const C q = q_;
    for (const auto& b : branches) {
      detail::CompensatedSum<C> acc;
      double running = 0.0;
      int small = 0;
      C x = b.base;
      const int K = b.terms >= 0 ? b.terms : o.max_terms;
      int k = 0;
      for (; k < K; ++k, x *= q) {
        C term = b.weight(k) * f(x) * g(x);
        acc.add(term);
        if (b.terms >= 0) continue;
        running = std::max(running, mag_d(acc.value()));
        small = mag_d(term) < o.tol * std::max(running, 1e-300) ? small + 1 : 0;
        if (small >= 10) break;
      }
      if (b.terms < 0 && k == K) throw SeriesDivergence("limit measure series did not converge");
      total += b.prefactor * acc.value();
    }
    return prefactor * total;
  }

  C q_{0};
};

namespace detail {

template <class C> C pairs_prefactor(const Alpha& al, const std::array<C, 6>& t, const C& q, bool zero_pairs) {
  C pre(1);
  for (int r = 0; r < 6; ++r)
    for (int s = r + 1; s < 6; ++s) {
      if (zero_pairs && al[r] + al[s] == 0) pre *= qpoch_inf(C(t[r] * t[s]), q);
      if (al[r] + al[s] == 1) pre /= qpoch_inf(C(q / (t[r] * t[s])), q);
    }
  return pre;
}

template <class C> void require_inside(const C& x) {
  if (mag_d(x) >= 1.0) throw ContourError("unit circle does not separate the pole families");
}

template <class C> void require_balance_q(const std::array<C, 6>& t, const C& q) {
  C pr(1);
  for (const C& x : t) pr *= x;
  if (mag_d(C(pr / q - C(1))) > 1e-10) throw DomainError("limit measure: prod t_r != q");
}

}  // namespace detail

// Remains a full contour integral: all alpha_r >= 0.
template <class C> LimitMeasure<C> nr_measure(const Alpha& al, const std::array<C, 6>& t, const C& q) {
  if (!nr_hypothesis(al)) throw HypothesisError("nr_measure: hypotheses fail");
  detail::require_balance_q(t, q);
  for (int r = 0; r < 6; ++r)
    if (al[r] == 0) detail::require_inside(t[r]);
  LimitMeasure<C> m{MeasureKind::NR_INTEGRAL};
  m.q_ = q;
  m.prefactor = qpoch_inf(q, q) * detail::pairs_prefactor(al, t, q, true) / C(2);
  m.density = [al, t, q](const C& z) {
    C zi = C(1) / z;
    C v = qpoch_inf({C(z * z), C(zi * zi)}, q);
    for (int r = 0; r < 6; ++r) {
      if (al[r] == 1) v *= qpoch_inf({C(q * z / t[r]), C(q * zi / t[r])}, q);
      if (al[r] == 0) v /= qpoch_inf({C(t[r] * z), C(t[r] * zi)}, q);
    }
    return v;
  };
  return m;
}

// The z -> 1/z symmetry broken around a triple {a,b,c} with zeta = alpha_a + alpha_b + alpha_c.
template <class C>
LimitMeasure<C> sb_measure(const Alpha& al, const std::array<int, 3>& abc, const std::array<C, 6>& t, const C& q) {
  if (!sb_hypothesis(al, abc)) throw HypothesisError("sb_measure: hypotheses fail");
  detail::require_balance_q(t, q);
  const Q ze = al[abc[0]] + al[abc[1]] + al[abc[2]];
  const Q h(1, 2);
  auto in = [abc](int r) { return r == abc[0] || r == abc[1] || r == abc[2]; };
  C pre = qpoch_inf(q, q);
  for (int r = 0; r < 6; ++r)
    for (int s = r + 1; s < 6; ++s) {
      Q sm = al[r] + al[s];
      if (in(r) && in(s) && sm == -1) pre *= qpoch_inf(C(t[r] * t[s]), q);
      if (in(r) != in(s) && sm == 0) pre *= qpoch_inf(C(t[r] * t[s]), q);
      if (in(r) && in(s) && sm == 0) pre /= qpoch_inf(C(q / (t[r] * t[s])), q);
      if (sm == 1) pre /= qpoch_inf(C(q / (t[r] * t[s])), q);
    }
  for (int r = 0; r < 6; ++r) {
    if (in(r) && al[r] == ze) detail::require_inside(t[r]);
    if (!in(r) && al[r] == -ze) detail::require_inside(t[r]);
    if (ze == -h && in(r) && al[r] == -h) detail::require_inside(t[r]);
  }
  LimitMeasure<C> m{MeasureKind::SB_INTEGRAL};
  m.q_ = q;
  m.prefactor = pre;
  const C tabc = t[abc[0]] * t[abc[1]] * t[abc[2]];
  m.density = [al, t, q, ze, h, tabc, in](const C& z) {
    C v = theta(C(q * z / tabc), q);
    for (int r = 0; r < 6; ++r) {
      if (in(r)) {
        if (al[r] == -ze) v *= qpoch_inf(C(q / (t[r] * z)), q);
        if (al[r] == ze) v /= qpoch_inf(C(t[r] / z), q);
      } else {
        if (al[r] == 1 + ze) v *= qpoch_inf(C(q * z / t[r]), q);
        if (al[r] == -ze) v /= qpoch_inf(C(t[r] * z), q);
      }
    }
    if (ze == -h) {
      v *= qpoch_inf(C(z * z), q) / qpoch_inf(C(q * z * z), q);
      for (int r = 0; r < 6; ++r) {
        if (!in(r)) continue;
        if (al[r] == h) v *= qpoch_inf(C(q * z / t[r]), q);
        if (al[r] == -h) v /= qpoch_inf(C(t[r] * z), q);
      }
    }
    return v;
  };
  return m;
}

// alpha_i = alpha_j = zeta < 0: contour integral with a free auxiliary parameter w.
template <class C>
LimitMeasure<C> sigma2_measure(const Alpha& al, int i, int j, const std::array<C, 6>& t, const C& q, const C& w) {
  if (!s2_hypothesis(al, i, j)) throw HypothesisError("sigma2_measure: hypotheses fail");
  detail::require_balance_q(t, q);
  const Q ze = al[i];
  const Q h(1, 2);
  C pre = qpoch_inf(q, q);
  if (ze == -h) pre *= qpoch_inf(C(t[i] * t[j]), q);
  for (int r = 0; r < 6; ++r)
    if (r != i && r != j && al[r] == -ze) pre *= qpoch_inf({C(t[r] * t[i]), C(t[r] * t[j])}, q);
  pre *= detail::pairs_prefactor(al, t, q, false);
  detail::require_inside(t[i]);
  detail::require_inside(t[j]);
  for (int r = 0; r < 6; ++r)
    if (r != i && r != j && al[r] == -ze) detail::require_inside(t[r]);
  LimitMeasure<C> m{MeasureKind::SIGMA2_INTEGRAL};
  m.q_ = q;
  m.prefactor = pre;
  m.aux_w = w;
  m.density = [al, t, q, w, ze, h, i, j](const C& z) {
    C v = theta(C(w * z), q) * theta(C(q * z / (t[i] * t[j] * w)), q) / (theta(C(t[i] * w), q) * theta(C(t[j] * w), q));
    v /= qpoch_inf({C(t[i] / z), C(t[j] / z)}, q);
    for (int r = 0; r < 6; ++r) {
      if (r == i || r == j) continue;
      if (al[r] == 1 + ze) v *= qpoch_inf(C(q * z / t[r]), q);
      if (al[r] == -ze) v /= qpoch_inf(C(t[r] * z), q);
    }
    if (ze == -h) v *= (C(1) - z * z) / qpoch_inf({C(t[i] * z), C(t[j] * z)}, q);
    return v;
  };
  return m;
}

// The same form as a double series supported on t_i q^k and t_j q^k (i, j <= 3).
template <class C>
LimitMeasure<C> sigma2_series_measure(const Alpha& al, int i, int j, const std::array<C, 6>& t, const C& q) {
  if (!s2_series_hypothesis(al, i, j)) throw HypothesisError("sigma2_series_measure: hypotheses fail");
  detail::require_balance_q(t, q);
  const Q ze = al[i];
  const Q h(1, 2);
  LimitMeasure<C> m{MeasureKind::SIGMA2_SERIES};
  m.q_ = q;
  for (auto [x, y] : {std::pair{i, j}, std::pair{j, i}}) {
    const C ta = t[x], tb = t[y];
    C pre = (ze == -h ? C(1) / qpoch_inf(C(q * ta * ta), q) : C(1)) / qpoch_inf(C(tb / ta), q);
    for (int r = 0; r < 6; ++r) {
      if (r == i || r == j) continue;
      if (al[r] == -ze) pre *= qpoch_inf(C(t[r] * tb), q);
      if (al[r] == 1 + ze) pre *= qpoch_inf(C(q * ta / t[r]), q);
    }
    pre *= detail::pairs_prefactor(al, t, q, false);
    auto wk = [al, t, q, ta, tb, ze, h, i, j](int k) {
      C v = ipow(q, k) / qpoch({q, C(q * ta / tb)}, q, k);
      if (ze == -h)
        v *= qpoch(C(q * ta * ta), q, 2 * k) * qpoch({C(ta * ta), C(ta * tb)}, q, k) / qpoch(C(ta * ta), q, 2 * k);
      for (int r = 0; r < 6; ++r) {
        if (r == i || r == j) continue;
        if (al[r] == -ze) v *= qpoch(C(t[r] * ta), q, k);
        if (al[r] == 1 + ze) v /= qpoch(C(q * ta / t[r]), q, k);
      }
      return v;
    };
    m.branches.push_back({ta, pre, wk, -1});
  }
  return m;
}

// Single series supported on t_a q^k.
template <class C>
LimitMeasure<C> sigma_measure(const Alpha& al, int a, const std::array<C, 6>& t, const C& q, bool extended = false) {
  if (!sigma_hypothesis(al, a, extended)) throw HypothesisError("sigma_measure: hypotheses fail");
  detail::require_balance_q(t, q);
  const Q aa = al[a];
  const Q h(1, 2);
  const C ta = t[a];
  C pre = detail::pairs_prefactor(al, t, q, true);
  for (int r = 0; r < 6; ++r) {
    if (r == a) continue;
    if (al[r] == aa + 1) pre *= qpoch_inf(C(q * ta / t[r]), q);
    if (al[r] == -aa) pre /= qpoch_inf(C(t[r] * ta), q);
  }
  if (aa == -h) pre /= qpoch_inf(C(q * ta * ta), q);
  int N = 0;
  C X = C(1);
  for (int r = 0; r < 6; ++r)
    if (r != a && al[r] + aa < 0) {
      ++N;
      X *= t[r];
    }
  X *= ipow(ta, N - 2);
  LimitMeasure<C> m{MeasureKind::SIGMA_SERIES};
  m.q_ = q;
  auto wk = [al, t, q, ta, aa, h, a, N, X](int k) {
    C v = C(1) / qpoch(q, q, k);
    if (aa == -h) v *= (C(1) - ta * ta * ipow(q, 2 * k)) / (C(1) - ta * ta) * qpoch(C(ta * ta), q, k);
    for (int r = 0; r < 6; ++r) {
      if (r == a) continue;
      if (al[r] == -aa) v *= qpoch(C(t[r] * ta), q, k);
      if (al[r] == aa + 1) v /= qpoch(C(q * ta / t[r]), q, k);
    }
    C gauss = ipow(q, (long long)k * (k - 1) / 2);
    if (k % 2) gauss = -gauss;
    return v * ipow(gauss, N - 2) * ipow(X, k);
  };
  m.branches.push_back({ta, C(1), wk, -1});
  m.prefactor = pre;
  return m;
}

// N+1 masses w_{k,alpha} at t0 q^k.
template <class C>
LimitMeasure<C> finite_measure(const Alpha& al, const std::array<C, 6>& t, int N, const C& q) {
  finite_branch(al);
  LimitMeasure<C> m{MeasureKind::FINITE_DISCRETE};
  m.q_ = q;
  m.branches.push_back({t[0], C(1), [al, t, N, q](int k) { return finite_weights(k, al, t, N, q); }, N + 1});
  return m;
}

// ---------------------------------------------------------------- numeric p -> 0 limits

template <class C> struct LimitEstimate {
  C limit;                     // Richardson-extrapolated p^{-val} fn(p) at p = 0
  C raw;                       // p_min^{-val} fn(p_min)
  double valuation = 0;        // last log-slope
  Q valuation_used;            // exact valuation used for rescaling
  std::vector<double> slopes;  // between consecutive p's
  std::vector<C> scaled;       // p^{-val} fn(p) along p_seq
  double error_estimate = 0;   // |limit - next-to-last Richardson estimate|
};

inline long long denominator_lcm(const ExponentVector& v) {
  long long d = v.zeta.denominator();
  for (const Q& x : v.a) d = std::lcm(d, x.denominator());
  return d;
}

// fn(p) for a decreasing p_seq. The valuation is taken from exact_val (or the nearest multiple of
// 1/D to the final log-slope, D the common denominator of v), then p^{-val} fn(p) is
// extrapolated to p = 0 as a polynomial in p^s, s = gap (default 1/D), using every point.
template <class C, class Fn>
LimitEstimate<C> numeric_limit(Fn&& fn, const ExponentVector& v, const std::vector<real_t<C>>& p_seq,
                               std::optional<Q> exact_val = std::nullopt, std::optional<Q> gap = std::nullopt,
                               double slope_tol = 0.1) {
  using R = real_t<C>;
  using std::log;
  if (p_seq.size() < 2) throw DomainError("numeric_limit: need at least two p values");
  for (std::size_t i = 0; i < p_seq.size(); ++i) {
    if (!(p_seq[i] > R(0) && p_seq[i] < R(1))) throw DomainError("numeric_limit: p must lie in (0,1)");
    if (i && !(p_seq[i] < p_seq[i - 1])) throw DomainError("numeric_limit: p_seq must decrease");
  }
  std::vector<C> vals;
  for (const R& p : p_seq) vals.push_back(fn(p));
  LimitEstimate<C> out;
  for (std::size_t i = 1; i < vals.size(); ++i) {
    R num = log(mag(vals[i])) - log(mag(vals[i - 1]));
    R den = log(p_seq[i]) - log(p_seq[i - 1]);
    out.slopes.push_back(static_cast<double>(num / den));
  }
  for (std::size_t i = 1; i < out.slopes.size(); ++i)
    if (std::abs(out.slopes[i] - out.slopes[i - 1]) > slope_tol)
      throw NonConvergence("numeric_limit: log-slope estimates disagree");
  out.valuation = out.slopes.back();
  const long long D = denominator_lcm(v);
  out.valuation_used = exact_val ? *exact_val : Q(std::llround(out.valuation * D), D);
  const Q s = gap ? *gap : Q(1, D);
  std::vector<R> x;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    out.scaled.push_back(vals[i] / C(rpow<C>(p_seq[i], out.valuation_used)));
    x.push_back(rpow<C>(p_seq[i], s));
  }
  out.raw = out.scaled.back();
  // Neville's scheme evaluated at x = 0.
  std::vector<C> T = out.scaled;
  C prev = T.back();
  for (std::size_t j = 1; j < T.size(); ++j) {
    prev = T.back();
    for (std::size_t i = T.size() - 1; i >= j; --i) {
      T[i] = T[i] + (T[i] - T[i - 1]) * C(x[i] / (x[i - j] - x[i]));
    }
  }
  out.limit = T.back();
  out.error_estimate = mag_d(C(out.limit - prev));
  return out;
}

}  // namespace ehb
