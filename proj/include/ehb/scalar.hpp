#pragma once
// Complex scalar plumbing shared by the numeric modules. Everything numeric is templated
// on the complex type C: std::complex<double> for routine work, mpc100 when p is pushed
// far enough toward 0 that double range or cancellation becomes the bottleneck.
#include <boost/multiprecision/complex_adaptor.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <complex>
#include <limits>

#include "ehb/rational.hpp"

namespace ehb {

namespace bmp = boost::multiprecision;

using cd = std::complex<double>;
using mpreal = bmp::number<bmp::mpfr_float_backend<100>, bmp::et_off>;
using mpc100 = bmp::number<bmp::complex_adaptor<bmp::mpfr_float_backend<100>>, bmp::et_off>;
// For p around 1e-80, where the terms of R_n cancel over hundreds of digits.
using mpreal300 = bmp::number<bmp::mpfr_float_backend<300>, bmp::et_off>;
using mpc300 = bmp::number<bmp::complex_adaptor<bmp::mpfr_float_backend<300>>, bmp::et_off>;

template <class C> struct real_of;
template <class T> struct real_of<std::complex<T>> { using type = T; };
template <> struct real_of<mpc100> { using type = mpreal; };
template <> struct real_of<mpc300> { using type = mpreal300; };
template <class C> using real_t = typename real_of<C>::type;

template <class C> inline real_t<C> mag(const C& x) {
  using std::abs;
  return abs(x);
}

template <class C> inline double mag_d(const C& x) { return static_cast<double>(mag(x)); }

template <class C> inline C make_c(double re, double im = 0.0) {
  return C(real_t<C>(re), real_t<C>(im));
}

template <class C> inline C convert(const cd& z) { return make_c<C>(z.real(), z.imag()); }

template <class C> inline cd to_cd(const C& z) {
  using std::imag;
  using std::real;
  return cd(static_cast<double>(real(z)), static_cast<double>(imag(z)));
}

template <class C> inline double epsilon_of() {
  return static_cast<double>(std::numeric_limits<real_t<C>>::epsilon());
}

// p^a for real p > 0 and rational a (the principal real power).
template <class C> inline real_t<C> rpow(const real_t<C>& p, const Q& a) {
  using std::exp;
  using std::log;
  if (a.numerator() == 0) return real_t<C>(1);
  return exp(real_t<C>(a.numerator()) / real_t<C>(a.denominator()) * log(p));
}

template <class C> inline C ipow(const C& x, long long k) {
  C r(1), b = x;
  bool inv = k < 0;
  unsigned long long e = inv ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return inv ? C(1) / r : r;
}

}  // namespace ehb
