#include "ehb/exponents.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

#include "ehb/errors.hpp"
#include "ehb/polytope.hpp"

namespace ehb {

Q ExponentVector::sum() const {
  Q s(0);
  for (const Q& x : a) s += x;
  return s;
}

std::string ExponentVector::str() const {
  std::string s;
  for (int r = 0; r < 6; ++r) {
    s += to_string(a[r]);
    s += (r == 3 || r == 5) ? ";" : ",";
  }
  return s + to_string(zeta);
}

ExponentVector parse_exponent_vector(const std::string& s, bool negated_zeta) {
  std::vector<Q> xs;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) xs.push_back(parse_rational(cur));
    cur.clear();
  };
  for (char c : s) {
    if (c == ',' || c == ';' || std::isspace(static_cast<unsigned char>(c)))
      flush();
    else
      cur += c;
  }
  flush();
  if (xs.size() != 7) throw std::invalid_argument("expected 7 rationals, got " + std::to_string(xs.size()));
  ExponentVector v;
  for (int r = 0; r < 6; ++r) v.a[r] = xs[r];
  v.zeta = negated_zeta ? -xs[6] : xs[6];
  return v;
}

Q theta_val(const Q& alpha) {
  Q f = frac_q(alpha);
  return f * (f - 1) / 2 - alpha * (alpha - 1) / 2;
}

ValLc theta_lc(const Q& alpha) {
  if (alpha.denominator() == 1) return {theta_val(alpha), LcKind::INTEGER_SHIFT, -alpha};
  return {theta_val(alpha), LcKind::FRACTIONAL_SHIFT, Q(-floor_q(alpha))};
}

std::complex<double> ValLc::eval(std::complex<double> x) const {
  // power is always an integer here
  std::complex<double> r = std::pow(-x, static_cast<double>(power.numerator()));
  if (kind == LcKind::INTEGER_SHIFT) r *= 1.0 - x;
  return r;
}

std::string ValLc::str() const {
  std::string m = power == 0 ? "" : "(-x)^" + to_string(power);
  if (kind == LcKind::INTEGER_SHIFT) return m.empty() ? "(1-x)" : "(1-x)" + m;
  return m.empty() ? "1" : m;
}

namespace {

void require_P(const ExponentVector& v, const char* who) {
  if (!in_P(v)) throw DomainError(std::string(who) + ": vector not in P: " + v.str());
}

// x * 1{x < 0} and x * 1{x > 0}
Q neg(const Q& x) { return x < 0 ? x : Q(0); }
Q pos(const Q& x) { return x > 0 ? x : Q(0); }

}  // namespace

Q rtilde_valuation(const ExponentVector& v, int n) {
  require_P(v, "rtilde_valuation");
  if (n < 0) throw DomainError("rtilde_valuation: n < 0");
  const auto& a = v.a;
  const Q& z = v.zeta;
  Q s = neg(a[0] - a[4]) - neg(-z - a[4]) - neg(1 + z - a[4]) - neg(a[0] + a[5]);
  for (int r = 1; r <= 3; ++r) s -= neg(a[0] + a[r]);
  return s * n;
}

Q norm_valuation(const ExponentVector& v, int n) {
  require_P(v, "norm_valuation");
  if (n < 0) throw DomainError("norm_valuation: n < 0");
  const auto& a = v.a;
  const Q g = a[4] + a[5];
  Q s = -pos(g) - 2 * neg(g);
  for (int r = 1; r <= 3; ++r)
    for (int t = r + 1; t <= 3; ++t) s += neg(a[r] + a[t]);
  for (int r = 1; r <= 3; ++r) s -= neg(a[r] + a[0]);
  for (int j = 4; j <= 5; ++j) s += -pos(a[0] - a[j]) + pos(a[0] + a[j]);
  return s * n;
}

Q valuation_deficit(const ExponentVector& v) {
  require_P(v, "valuation_deficit");
  const auto& a = v.a;
  const Q& z = v.zeta;
  Q s = pos(a[4] + a[5]);
  for (int r = 0; r < 4; ++r)
    for (int t = r + 1; t < 4; ++t) s += neg(a[r] + a[t]);
  for (int j = 4; j <= 5; ++j) {
    s -= pos(z + a[j]);
    if (1 + z < a[j]) s += 1 + z - a[j];
  }
  return s;
}

}  // namespace ehb
