#pragma once
// Exact valuation calculus for p -> 0 degenerations.
#include <array>
#include <complex>
#include <string>

#include "ehb/rational.hpp"

namespace ehb {

// (alpha_0..alpha_3; gamma_0, gamma_1; zeta), stored as a[0..5] with a[4] = gamma_0, a[5] = gamma_1.
// zeta is the exponent of z itself; printed tables use -zeta.
struct ExponentVector {
  std::array<Q, 6> a{};
  Q zeta{0};

  ExponentVector() = default;
  ExponentVector(std::array<Q, 6> alpha, Q z) : a(alpha), zeta(z) {}

  const Q& alpha(int r) const { return a[r]; }
  const Q& gamma(int r) const { return a[4 + r]; }
  Q sum() const;
  bool balanced() const { return sum() == Q(1); }
  bool operator==(const ExponentVector&) const = default;
  std::string str() const;  // "a0,a1,a2,a3;g0,g1;zeta"
};

// Parses "a0,a1,a2,a3;g0,g1;z" (commas or semicolons, whitespace ignored). With negated_zeta the
// last entry is read as -zeta, matching the appendix table convention.
ExponentVector parse_exponent_vector(const std::string& s, bool negated_zeta = false);

Q theta_val(const Q& alpha);

enum class LcKind { INTEGER_SHIFT, FRACTIONAL_SHIFT };

// Leading coefficient of theta(x p^alpha; p): (1-x)(-x)^{-alpha} for integer alpha,
// (-x)^{-floor(alpha)} otherwise. power is the exponent applied to (-x).
struct ValLc {
  Q val;
  LcKind kind;
  Q power;
  std::complex<double> eval(std::complex<double> x) const;
  std::string str() const;
};

ValLc theta_lc(const Q& alpha);

// These throw DomainError unless v is in P.
Q rtilde_valuation(const ExponentVector& v, int n);
Q norm_valuation(const ExponentVector& v, int n);
Q valuation_deficit(const ExponentVector& v);

}  // namespace ehb
