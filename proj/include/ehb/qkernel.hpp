#pragma once
// q-symbols, theta functions and the elliptic gamma function, in multiplicative notation.
#include <initializer_list>
#include <utility>
#include <vector>

#include "ehb/errors.hpp"
#include "ehb/scalar.hpp"

namespace ehb {

struct Precision {
  double tol = 1e-16;  // relative truncation tolerance
  int max_terms = 200000;

  template <class C> static Precision for_type() { return Precision{epsilon_of<C>(), 200000}; }
  double pole_tol() const { return tol * 1e4; }
};

// (x;q)_n for n >= 0. Terminating, so any q is fine.
template <class C> C qpoch(const C& x, const C& q, int n) {
  if (n < 0) throw DomainError("qpoch: n must be >= 0");
  C r(1), t = x;
  for (int k = 0; k < n; ++k) {
    r *= C(1) - t;
    t *= q;
  }
  return r;
}

// (x;q)_infinity. Stops once the remaining factors are provably within tol of 1:
// |prod_{j>=k}(1 - x q^j) - 1| <~ |x q^k| / (1 - |q|).
template <class C> C qpoch_inf(const C& x, const C& q, const Precision& pr = Precision::for_type<C>()) {
  const double aq = mag_d(q);
  if (aq >= 1.0) throw DomainError("qpoch_inf: |q| >= 1");
  C r(1), t = x;
  const double bound = pr.tol * (1.0 - aq);
  for (int k = 0;; ++k) {
    if (mag_d(t) < bound) return r;
    if (k >= pr.max_terms) throw NonConvergence("qpoch_inf: max_terms reached");
    r *= C(1) - t;
    t *= q;
  }
}

template <class C>
C qpoch_inf(std::initializer_list<C> xs, const C& q, const Precision& pr = Precision::for_type<C>()) {
  C r(1);
  for (const C& x : xs) r *= qpoch_inf(x, q, pr);
  return r;
}

template <class C> C qpoch(std::initializer_list<C> xs, const C& q, int n) {
  C r(1);
  for (const C& x : xs) r *= qpoch(x, q, n);
  return r;
}

// theta(x;p) = (x, p/x; p)
template <class C> C theta(const C& x, const C& p, const Precision& pr = Precision::for_type<C>()) {
  if (mag_d(x) == 0.0) throw DomainError("theta: x = 0");
  if (mag_d(p) >= 1.0) throw DomainError("theta: |p| >= 1");
  if (mag_d(p) == 0.0) return C(1) - x;
  return qpoch_inf(x, p, pr) * qpoch_inf(C(p / x), p, pr);
}

// theta(x;q;p)_n = prod_{r<n} theta(x q^r; p); q unrestricted.
template <class C>
C theta_qp(const C& x, const C& q, const C& p, int n, const Precision& pr = Precision::for_type<C>()) {
  if (n < 0) throw DomainError("theta_qp: n must be >= 0");
  C r(1), t = x;
  for (int k = 0; k < n; ++k) {
    r *= theta(t, p, pr);
    t *= q;
  }
  return r;
}

template <class C>
C theta_qp(std::initializer_list<C> xs, const C& q, const C& p, int n,
           const Precision& pr = Precision::for_type<C>()) {
  C r(1);
  for (const C& x : xs) r *= theta_qp(x, q, p, n, pr);
  return r;
}

// Gamma(x;p,q) = prod_{i,j>=0} (1 - p^{i+1} q^{j+1}/x) / (1 - p^i q^j x).
template <class C>
C elliptic_gamma(const C& x, const C& p, const C& q, const Precision& pr = Precision::for_type<C>()) {
  const double ap = mag_d(p), aq = mag_d(q);
  if (ap >= 1.0 || aq >= 1.0) throw DomainError("elliptic_gamma: |p|,|q| must be < 1");
  if (mag_d(x) == 0.0) throw PoleError("elliptic_gamma: x = 0");
  const double bound = pr.tol * (1.0 - aq) * (1.0 - ap);
  C r(1);
  C a = x;              // p^i x
  C b = p * q / x;      // p^{i+1} q / x
  for (int i = 0;; ++i) {
    if (mag_d(a) < bound && mag_d(b) < bound) return r;
    if (i >= pr.max_terms) throw NonConvergence("elliptic_gamma: max_terms reached");
    // denominator (a;q)_inf with explicit pole detection
    C den(1), t = a;
    for (int k = 0;; ++k) {
      if (mag_d(t) < pr.tol * (1.0 - aq)) break;
      if (k >= pr.max_terms) throw NonConvergence("elliptic_gamma: max_terms reached");
      C f = C(1) - t;
      if (mag_d(f) < pr.pole_tol()) throw PoleError("elliptic_gamma: argument at a pole");
      den *= f;
      t *= q;
    }
    r *= qpoch_inf(b, q, pr) / den;
    a *= p;
    b *= p;
  }
}

template <class C>
C elliptic_gamma(std::initializer_list<C> xs, const C& p, const C& q,
                 const Precision& pr = Precision::for_type<C>()) {
  C r(1);
  for (const C& x : xs) r *= elliptic_gamma(x, p, q, pr);
  return r;
}

// A product argument base * prod_i y_i^{+-e_i}. Expansion enumerates sign patterns with the
// first factor's sign varying slowest, so x^{+-1} y^{+-1} gives {xy, x/y, y/x, 1/(xy)}.
template <class C> struct PmPattern {
  C base = C(1);
  std::vector<std::pair<C, int>> factors;
};

template <class C> std::vector<C> expand_pm_args(const PmPattern<C>& pat) {
  const std::size_t k = pat.factors.size();
  std::vector<C> out;
  out.reserve(std::size_t(1) << k);
  for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
    C v = pat.base;
    for (std::size_t i = 0; i < k; ++i) {
      bool minus = (mask >> (k - 1 - i)) & 1;
      const auto& [y, e] = pat.factors[i];
      v *= ipow(y, minus ? -e : e);
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace ehb
