#pragma once
// The elliptic biorthogonal functions R~_n and their discrete and continuous biorthogonality
// measures.
#include <algorithm>
#include <array>
#include <boost/math/constants/constants.hpp>
#include <cmath>
#include <random>
#include <vector>

#include "ehb/qkernel.hpp"

namespace ehb {

namespace detail {

// Neumaier summation, applied to real and imaginary parts separately.
template <class C> class CompensatedSum {
 public:
  void add(const C& x) {
    using std::imag;
    using std::real;
    step(re_, cre_, real(x));
    step(im_, cim_, imag(x));
  }
  C value() const { return C(re_ + cre_, im_ + cim_); }

 private:
  using R = real_t<C>;
  static void step(R& s, R& c, const R& x) {
    using std::abs;
    R t = s + x;
    c += abs(s) >= abs(x) ? (s - t) + x : (x - t) + s;
    s = t;
  }
  R re_{0}, cre_{0}, im_{0}, cim_{0};
};

// True when x is within a relative distance tol of p^m for some integer m, i.e. theta(x;p) = 0.
template <class C> bool on_p_lattice(const C& x, const C& p, double tol) {
  using std::log;
  using std::round;
  if (mag_d(x) == 0.0) return true;
  if (mag_d(p) == 0.0) return mag_d(C(C(1) - x)) < tol;
  double m = std::round(std::log(mag_d(x)) / std::log(mag_d(p)));
  C pm = ipow(p, static_cast<long long>(m));
  return mag_d(C(x / pm - C(1))) < tol;
}

// theta(x;q;p)_n that refuses to divide by a vanishing factor.
template <class C> C theta_qp_den(const C& x, const C& q, const C& p, int n, const Precision& pr) {
  C t = x;
  for (int k = 0; k < n; ++k, t *= q)
    if (on_p_lattice(t, p, pr.pole_tol())) throw PoleError("theta factor vanishes in a denominator");
  return theta_qp(x, q, p, n, pr);
}

}  // namespace detail

template <class C> struct EllipticParams {
  std::array<C, 4> t;
  std::array<C, 2> u;
  C q, p;

  // Fills in u1 from t0 t1 t2 t3 u0 u1 = p q.
  static EllipticParams balanced(const std::array<C, 4>& t, const C& u0, const C& q, const C& p) {
    EllipticParams e{t, {u0, C(1)}, q, p};
    e.u[1] = p * q / (t[0] * t[1] * t[2] * t[3] * u0);
    return e;
  }

  C product() const { return t[0] * t[1] * t[2] * t[3] * u[0] * u[1]; }
  double balancing_residual() const { return mag_d(C(product() / (p * q) - C(1))); }
  void require_balanced(double tol = 1e-12) const {
    if (mag_d(p) >= 1.0) throw DomainError("EllipticParams: |p| >= 1");
    if (!(balancing_residual() <= tol)) throw DomainError("EllipticParams: balancing violated");
  }
  EllipticParams swapped() const { return EllipticParams{t, {u[1], u[0]}, q, p}; }
};

// R~_n(z; t0 : t1, t2, t3; u0, u1; q; p) as the terminating very-well-poised sum.
template <class C>
C rtilde(int n, const C& z, const EllipticParams<C>& e, const Precision& pr = Precision::for_type<C>(),
         double balance_tol = 1e-12) {
  if (n < 0) throw DomainError("rtilde: n must be >= 0");
  e.require_balanced(balance_tol);
  const auto& [t0, t1, t2, t3] = e.t;
  const C u0 = e.u[0], u1 = e.u[1], q = e.q, p = e.p;
  const C qn = ipow(q, n);
  detail::CompensatedSum<C> s;
  for (int k = 0; k <= n; ++k) {
    C num = theta_qp({C(t0 / u0), C(p * qn / (u0 * u1)), C(C(1) / qn), C(t0 * z), C(t0 / z), C(q / (u0 * t1)),
                      C(q / (u0 * t2)), C(q / (u0 * t3))},
                     q, p, k, pr);
    if (mag_d(num) == 0.0) continue;
    C den(1);
    for (const C& a : {q, C(q / qn * t0 * u1 / p), C(qn * q * t0 / u0), C(q * z / u0), C(q / (u0 * z)), C(t0 * t1),
                       C(t0 * t2), C(t0 * t3)})
      den *= detail::theta_qp_den(a, q, p, k, pr);
    C vwp = theta_qp(C(q * t0 / u0), q, p, 2 * k, pr) / detail::theta_qp_den(C(t0 / u0), q, p, 2 * k, pr);
    s.add(vwp * num / den * ipow(q, k));
  }
  return s.value();
}

// theta(p/(u0u1))_{2n}/theta(pq/(u0u1))_{2n} * theta(q, t2t3, t1t2, t1t3, q t0/u0, p q t0/u1)_n
//   / theta(p/(u0u1), t0t1, t0t3, t0t2, p/(t0u1), 1/(t0u0))_n * q^{-n}
template <class C>
C norm_formula(int n, const EllipticParams<C>& e, const Precision& pr = Precision::for_type<C>()) {
  if (n < 0) throw DomainError("norm_formula: n must be >= 0");
  const auto& [t0, t1, t2, t3] = e.t;
  const C u0 = e.u[0], u1 = e.u[1], q = e.q, p = e.p;
  C v = theta_qp(C(p / (u0 * u1)), q, p, 2 * n, pr) / detail::theta_qp_den(C(p * q / (u0 * u1)), q, p, 2 * n, pr);
  v *= theta_qp({q, C(t2 * t3), C(t1 * t2), C(t1 * t3), C(q * t0 / u0), C(p * q * t0 / u1)}, q, p, n, pr);
  for (const C& a : {C(p / (u0 * u1)), C(t0 * t1), C(t0 * t3), C(t0 * t2), C(p / (t0 * u1)), C(C(1) / (t0 * u0))})
    v /= detail::theta_qp_den(a, q, p, n, pr);
  return v * ipow(q, -n);
}

// --- discrete measure: t0 t1 = q^{-N}, masses at t0 q^k ----------------------------------

struct DiscreteSpec {
  int N = 0;
};

template <class C> void require_discrete(const EllipticParams<C>& e, const DiscreteSpec& s, const Precision& pr,
                                         double tol = 1e-12) {
  if (s.N < 0) throw DomainError("DiscreteSpec: N must be >= 0");
  if (!(mag_d(C(e.t[0] * e.t[1] * ipow(e.q, s.N) - C(1))) <= tol))
    throw DomainError("DiscreteSpec: t0 t1 != q^{-N}");
  for (int k = 1; k <= s.N; ++k)
    if (detail::on_p_lattice(ipow(e.q, k), e.p, pr.pole_tol()))
      throw PoleError("DiscreteSpec: q^k in p^Z, a point mass is infinite");
}

// Mass at t0 q^k, including the closing theta(...)_N factor.
template <class C>
C discrete_weight(int k, const EllipticParams<C>& e, int N, const Precision& pr = Precision::for_type<C>()) {
  const auto& [t0, t1, t2, t3] = e.t;
  const C u0 = e.u[0], u1 = e.u[1], q = e.q, p = e.p;
  C w = theta_qp(C(q * t0 * t0), q, p, 2 * k, pr) / detail::theta_qp_den(C(t0 * t0), q, p, 2 * k, pr);
  w *= theta_qp({C(t0 * t0), C(t0 * t1), C(t0 * t2), C(t0 * t3), C(t0 * u0), C(t0 * u1 / p)}, q, p, k, pr);
  for (const C& a : {q, C(q * t0 / t1), C(q * t0 / t2), C(q * t0 / t3), C(q * t0 / u0), C(p * q * t0 / u1)})
    w /= detail::theta_qp_den(a, q, p, k, pr);
  w *= ipow(q, k);
  w *= theta_qp({C(q * t0 / u0), C(t1 * t2), C(t1 * t3), C(t1 * u1 / p)}, q, p, N, pr);
  for (const C& a : {C(t1 / t0), C(q / (u0 * t2)), C(q / (u0 * t3)), C(p * q / (u0 * u1))})
    w /= detail::theta_qp_den(a, q, p, N, pr);
  return w;
}

template <class C, class F, class G>
C discrete_inner_product(F&& f, G&& g, const EllipticParams<C>& e, const DiscreteSpec& s,
                         const Precision& pr = Precision::for_type<C>()) {
  require_discrete(e, s, pr);
  detail::CompensatedSum<C> acc;
  for (int k = 0; k <= s.N; ++k) {
    C x = e.t[0] * ipow(e.q, k);
    acc.add(f(x) * g(x) * discrete_weight(k, e, s.N, pr));
  }
  return acc.value();
}

// --- continuous measure ------------------------------------------------------------------

template <class C> struct QuadResult {
  C value;     // with `quad` nodes
  C doubled;   // with 2 quad nodes
  double residual = 0.0;
};

// (p;p)(q;q) / (2 prod_{r<s} Gamma(t_r t_s)) * integral over |z| = 1 of
// f g prod_r Gamma(t_r z^{+-}) / Gamma(z^{+-2}) dz/(2 pi i z), with t4 = u0, t5 = u1.
// m_f, m_g shift u0, u1 by q^{-m}; the unit circle is admissible iff all shifted moduli are < 1.
template <class C, class F, class G>
QuadResult<C> continuous_inner_product(F&& f, G&& g, const EllipticParams<C>& e, int m_f, int m_g, int quad,
                                       const Precision& pr = Precision::for_type<C>(), double conv_tol = 1e-8) {
  if (mag_d(e.q) >= 1.0) throw DomainError("continuous measure needs |q| < 1");
  if (quad < 1) throw DomainError("quad must be >= 1");
  e.require_balanced();
  const std::array<C, 6> t{e.t[0], e.t[1], e.t[2], e.t[3], e.u[0], e.u[1]};
  std::array<C, 6> tt = t;
  tt[4] *= ipow(e.q, -m_f);
  tt[5] *= ipow(e.q, -m_g);
  for (const C& x : tt)
    if (mag_d(x) >= 1.0) throw ContourError("unit circle is not an admissible contour");
  const C p = e.p, q = e.q;
  C pre = qpoch_inf(p, p, pr) * qpoch_inf(q, q, pr) / C(2);
  for (int r = 0; r < 6; ++r)
    for (int s = r + 1; s < 6; ++s) pre /= elliptic_gamma(C(t[r] * t[s]), p, q, pr);
  using R = real_t<C>;
  const R two_pi = R(2) * boost::math::constants::pi<R>();
  auto integrate = [&](int M) {
    detail::CompensatedSum<C> acc;
    for (int j = 0; j < M; ++j) {
      R ang = two_pi * R(j) / R(M);
      using std::cos;
      using std::sin;
      C z(cos(ang), sin(ang));
      C zi = C(1) / z;
      // 1/Gamma(x^{+-}) = theta(x;p) theta(1/x;q)
      C v = theta(C(z * z), p, pr) * theta(C(zi * zi), q, pr);
      for (const C& x : t) v *= elliptic_gamma(C(x * z), p, q, pr) * elliptic_gamma(C(x * zi), p, q, pr);
      acc.add(v * f(z) * g(z));
    }
    return C(pre * acc.value() / C(R(M)));
  };
  QuadResult<C> res;
  res.value = integrate(quad);
  res.doubled = integrate(2 * quad);
  res.residual = mag_d(C(res.doubled - res.value));
  if (res.residual > conv_tol * std::max(1.0, mag_d(res.doubled)))
    throw NonConvergence("continuous_inner_product: doubling the nodes moved the value beyond tolerance");
  return res;
}

// --- symmetries ----------------------------------------------------------------------------

struct SymmetryReport {
  double p_shift = 0;      // t0 -> p t0, u0 -> u0 / p
  double half_shift = 0;   // z, t0, u0, u1 -> * p^{1/2}; t1, t2, t3 -> * p^{-1/2}
  double q_inversion = 0;  // t_r -> 1/t_r, u_r -> p/u_r, q -> 1/q
  double z_p_period = 0;   // z -> p z
  double z_inversion = 0;  // z -> 1/z
  double permutation = 0;  // t1 <-> t2 changes R~_n by a z-independent factor
  double max() const {
    return std::max({p_shift, half_shift, q_inversion, z_p_period, z_inversion, permutation});
  }
};

// p is taken real positive so that p^{1/2} is unambiguous. z2 is a second evaluation point for the
// permutation check.
template <class C>
SymmetryReport check_symmetries(int n, const C& z, const C& z2, const EllipticParams<C>& e,
                                const Precision& pr = Precision::for_type<C>()) {
  auto rel = [](const C& a, const C& b) { return mag_d(C(a - b)) / std::max(mag_d(b), 1e-300); };
  using std::sqrt;
  const C base = rtilde(n, z, e, pr);
  const C p = e.p;
  const C sp = sqrt(p);
  SymmetryReport r;
  {
    auto f = e;
    f.t[0] *= p;
    f.u[0] /= p;
    r.p_shift = rel(rtilde(n, z, f, pr), base);
  }
  {
    auto f = e;
    f.t[0] *= sp;
    for (int i = 1; i < 4; ++i) f.t[i] /= sp;
    f.u[0] *= sp;
    f.u[1] *= sp;
    r.half_shift = rel(rtilde(n, C(z * sp), f, pr), base);
  }
  {
    EllipticParams<C> f{{C(1) / e.t[0], C(1) / e.t[1], C(1) / e.t[2], C(1) / e.t[3]},
                        {C(p / e.u[0]), C(p / e.u[1])},
                        C(C(1) / e.q),
                        p};
    r.q_inversion = rel(rtilde(n, z, f, pr), base);
  }
  r.z_p_period = rel(rtilde(n, C(p * z), e, pr), base);
  r.z_inversion = rel(rtilde(n, C(C(1) / z), e, pr), base);
  {
    auto f = e;
    std::swap(f.t[1], f.t[2]);
    C k1 = rtilde(n, z, f, pr) / base;
    C k2 = rtilde(n, z2, f, pr) / rtilde(n, z2, e, pr);
    r.permutation = rel(k1, k2);
  }
  return r;
}

// --- generic sampling ----------------------------------------------------------------------

// Moduli uniform in [lo, hi], phases uniform; u1 solved from the balancing condition.
// Discrete variant: t1 = q^{-N}/t0. Draws with a theta factor of R~ or of the weight near 0 are
// rejected.
template <class C>
EllipticParams<C> sample_params(std::mt19937_64& rng, const C& q, const C& p, double lo = 0.5, double hi = 0.9,
                                int N = -1) {
  std::uniform_real_distribution<double> mod(lo, hi), ph(-M_PI, M_PI);
  auto draw = [&] { return C(convert<C>(std::polar(mod(rng), ph(rng)))); };
  for (;;) {
    std::array<C, 4> t{draw(), draw(), draw(), draw()};
    if (N >= 0) t[1] = ipow(q, -N) / t[0];
    auto e = EllipticParams<C>::balanced(t, draw(), q, p);
    std::vector<C> xs{C(e.t[0] * e.t[2]), C(e.t[0] * e.t[3]), C(e.t[1] * e.t[2]), C(e.t[1] * e.t[3]),
                      C(e.t[2] * e.t[3]), C(e.t[0] / e.u[0]), C(e.t[0] / e.u[1]), C(e.u[0] * e.u[1]),
                      C(e.t[0] * e.t[0])};
    if (N < 0) xs.push_back(e.t[0] * e.t[1]);  // in the discrete case this one terminates the sum
    bool ok = true;
    for (const C& x : xs)
      for (int j = -12; j <= 12 && ok; ++j) ok = mag_d(theta(C(x * ipow(q, j)), p)) > 1e-6;
    if (ok) return e;
  }
}

}  // namespace ehb
