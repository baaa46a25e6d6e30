#include "ehb/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace ehb {

long long floor_q(const Q& x) {
  long long n = x.numerator(), d = x.denominator();  // d > 0 after normalization
  long long f = n / d;
  if (n % d != 0 && n < 0) --f;
  return f;
}

Q frac_q(const Q& x) { return x - Q(floor_q(x)); }

bool congruent_mod1(const Q& x, const Q& y) { return (x - y).denominator() == 1; }

double to_double(const Q& x) {
  return static_cast<double>(x.numerator()) / static_cast<double>(x.denominator());
}

std::string to_string(const Q& x) {
  if (x.denominator() == 1) return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

namespace {

long long parse_int(const std::string& s, bool allow_sign) {
  if (s.empty()) throw std::invalid_argument("empty integer");
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) throw std::invalid_argument("bad integer: " + s);
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw std::invalid_argument("bad integer: " + s);
  if (s.size() - i > 9) throw std::invalid_argument("integer too large: " + s);
  return std::stoll(s);
}

}  // namespace

Q parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Q(parse_int(s, true));
  long long n = parse_int(s.substr(0, slash), true);
  long long d = parse_int(s.substr(slash + 1), false);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  return Q(n, d);
}

}  // namespace ehb
