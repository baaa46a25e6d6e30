#pragma once
// Numeric verification suites shared by the CLI and the acceptance runner. Each returns measured
// quantities; callers decide on thresholds and presentation.
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ehb::suites {

struct Normalization {
  double max_err = 0;      // 100-digit evaluation
  double max_seconds = 0;  // per draw, 100 digits
  double double_err = 0;   // the same draws evaluated in double
  double max_condition = 0;  // largest sum |w_k| over the draws
  int draws = 0;
};
Normalization discrete_normalization(int draws, int N, std::uint64_t seed);

struct Matrix {
  double max_offdiag = 0;  // relative to the largest diagonal entry
  double max_diag = 0;     // relative error against the norm formula
  int cases = 0;
};
Matrix discrete_biorthogonality(int N, int nmax, const std::vector<std::uint64_t>& seeds);

struct Continuous {
  double max_err = 0;      // |<1,1> - 1|
  double max_doubling = 0; // |I(2M) - I(M)|
  double max_tmod = 0;     // largest contour parameter modulus used
  int draws = 0;
};
Continuous continuous_normalization(int quad, int draws, std::uint64_t seed);
Matrix continuous_biorthogonality(int quad);

struct Pastro {
  Matrix matrix;
  double monomial = 0;  // max |p_n(w;A,q) - (wA)^n q^{-n/2}| relative, n <= 6
  double routes = 0;    // max disagreement of the two hypergeometric forms
};
Pastro pastro(int nmax, int quad, std::uint64_t seed);

struct SlopeCheck {
  double max_dev_rtilde = 0, max_dev_norm = 0;
  std::string worst;
  int vectors = 0;
};
// Numeric log-slopes between p1 > p2 against the exact valuations; deep mode uses 300 digits.
SlopeCheck valuation_slopes(int count, std::uint64_t seed, const std::string& p1, const std::string& p2, bool deep);

struct DeficitCheck {
  int samples = 0, negative = 0;
  int boundary_samples = 0, boundary_nonzero = 0;
  int face_samples = 0, face_nonzero = 0;
  std::map<int, std::pair<int, int>> interior;  // t -> (positive, sampled)
};
DeficitCheck deficit_law(std::uint64_t seed);

struct LimitRow {
  int n = 0;
  std::vector<double> errors;  // along the p sequence
  double extrapolated = -1;    // |extrapolated limit - reference|, -1 if unavailable
  std::string note;
};
struct LimitTable {
  std::string face;
  std::vector<std::string> ps;
  std::vector<LimitRow> rows;
  std::string reference;  // closed form compared against
};
// Raw errors of p^{-val} R_n(scaled) against the closed form along ps.
LimitTable limit_table(const std::string& face, int nmax, const std::vector<std::string>& ps,
                       const std::vector<std::string>& extrap_ps, std::uint64_t seed);

struct FiniteBranchCheck {
  std::string branch;
  std::string alpha;
  double weight_err = 0;   // max relative error of the elliptic masses at p
  double matrix_off = 0;   // limit biorthogonality, off-diagonal relative to the diagonal
  double mass_err = 0;     // |sum w - 1|
};
std::vector<FiniteBranchCheck> finite_limits(const std::string& p_weights, const std::string& p_functions, int N,
                                             double q_mod, std::uint64_t seed);

struct MeasureCheck {
  std::string label;
  double err = 0;
};
std::vector<MeasureCheck> measure_normalizations(std::uint64_t seed);

struct KernelCheck {
  double triple = 0, quasi = 0, reflection = 0;
  int draws = 0;
};
KernelCheck kernel_identities(int draws, std::uint64_t seed);

}  // namespace ehb::suites
