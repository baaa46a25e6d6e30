#pragma once
#include <boost/rational.hpp>
#include <string>

// Boost 1.74's mixed rational/integer comparisons recurse forever under C++20's reversed-operator
// rewriting. Exact non-template overloads take precedence and route through rational == rational.
namespace boost {
#define EHB_RATIONAL_CMP(OP, I)                                                                 \
  inline bool operator OP(const rational<long long>& a, I b) { return a OP rational<long long>(b); } \
  inline bool operator OP(I b, const rational<long long>& a) { return rational<long long>(b) OP a; }
#define EHB_RATIONAL_CMPS(I) \
  EHB_RATIONAL_CMP(==, I)    \
  EHB_RATIONAL_CMP(!=, I)    \
  EHB_RATIONAL_CMP(<, I)     \
  EHB_RATIONAL_CMP(>, I)     \
  EHB_RATIONAL_CMP(<=, I)    \
  EHB_RATIONAL_CMP(>=, I)
EHB_RATIONAL_CMPS(int)
EHB_RATIONAL_CMPS(long long)
#undef EHB_RATIONAL_CMPS
#undef EHB_RATIONAL_CMP
}  // namespace boost

namespace ehb {

// Exponent arithmetic. Denominators in this domain stay tiny (lcm of 2,3,4,5,8,12,...),
// so 64-bit components are ample; parse_rational() rejects oversized inputs.
using Q = boost::rational<long long>;

long long floor_q(const Q& x);
Q frac_q(const Q& x);  // x - floor(x), in [0,1)
bool congruent_mod1(const Q& x, const Q& y);
double to_double(const Q& x);
std::string to_string(const Q& x);  // "p/q", or "p" when integral

// Accepts "p", "-p", "p/q". Anything else (floats, garbage) throws std::invalid_argument.
Q parse_rational(const std::string& s);

}  // namespace ehb
