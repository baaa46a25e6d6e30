#include "ehb/limits.hpp"

#include <algorithm>

namespace ehb {

namespace {

const Q kHalf(1, 2);

Q sum(const Alpha& a) {
  Q s(0);
  for (const Q& x : a) s += x;
  return s;
}

bool distinct(std::initializer_list<int> xs) {
  std::vector<int> v(xs);
  for (int x : v)
    if (x < 0 || x > 5) return false;
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

}  // namespace

bool nr_hypothesis(const Alpha& a) {
  if (sum(a) != 1) return false;
  for (const Q& x : a)
    if (x < 0) return false;
  return true;
}

bool sb_hypothesis(const Alpha& a, const std::array<int, 3>& abc) {
  if (!distinct({abc[0], abc[1], abc[2]}) || sum(a) != 1) return false;
  const Q ze = a[abc[0]] + a[abc[1]] + a[abc[2]];
  if (!(-kHalf <= ze && ze < 0)) return false;
  for (int r = 0; r < 6; ++r) {
    bool in = r == abc[0] || r == abc[1] || r == abc[2];
    if (in && !(ze <= a[r] && a[r] <= -ze)) return false;
    if (!in && !(-ze <= a[r] && a[r] <= 1 + ze)) return false;
  }
  return true;
}

bool s2_hypothesis(const Alpha& a, int i, int j) {
  if (!distinct({i, j}) || sum(a) != 1) return false;
  const Q ze = a[i];
  if (a[j] != ze || !(-kHalf <= ze && ze < 0)) return false;
  for (int r = 0; r < 6; ++r)
    if (r != i && r != j && !(-ze <= a[r] && a[r] <= 1 + ze)) return false;
  return true;
}

bool s2_series_hypothesis(const Alpha& a, int i, int j) { return i <= 3 && j <= 3 && s2_hypothesis(a, i, j); }

bool sigma_hypothesis(const Alpha& a, int idx, bool extended) {
  if (idx < 0 || idx > 5 || sum(a) != 1) return false;
  if (!extended && idx > 3) return false;
  const Q aa = a[idx];
  if (!(-kHalf <= aa && aa < 0)) return false;
  Q negsum(0);
  for (int r = 0; r < 6; ++r) {
    if (r == idx) continue;
    if (!(aa < a[r] && a[r] <= 1 + aa)) return false;
    if (a[r] + aa < 0) negsum += a[r] + aa;
    for (int s = r + 1; s < 6; ++s) {
      if (s == idx) continue;
      Q ps = a[r] + a[s];
      if (ps > 1 || ps < 0 || (!extended && ps == 0)) return false;
    }
  }
  return 2 * aa == negsum;
}

bool finite_hypothesis(const Alpha& a) {
  const Q a0 = a[0];
  if (a[1] != -a0 || !(-kHalf <= a0 && a0 <= 0)) return false;
  if (a[2] + a[3] + a[4] + a[5] != 1) return false;
  Q negsum(0);
  for (int r = 2; r < 6; ++r) {
    if (!(a0 <= a[r] && a[r] <= 1 + a0)) return false;
    if (a[r] < -a0) negsum += a0 + a[r];
    for (int s = r + 1; s < 6; ++s)
      if (a[r] + a[s] > 1) return false;
  }
  return negsum == 2 * a0;
}

std::optional<std::array<int, 3>> find_sb_triple(const Alpha& a) {
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k)
        if (sb_hypothesis(a, {i, j, k})) return std::array<int, 3>{i, j, k};
  return std::nullopt;
}

std::optional<std::pair<int, int>> find_s2_pair(const Alpha& a, bool series) {
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (series ? s2_series_hypothesis(a, i, j) : s2_hypothesis(a, i, j)) return std::pair{i, j};
  return std::nullopt;
}

std::optional<int> find_sigma_index(const Alpha& a, bool extended) {
  for (int i = 0; i < 6; ++i)
    if (sigma_hypothesis(a, i, extended)) return i;
  return std::nullopt;
}

FiniteBranch finite_branch(const Alpha& a) {
  if (!finite_hypothesis(a)) throw BranchError("finite_weights: alpha violates the finite-measure conditions");
  if (a[0] == 0) return FiniteBranch::ZERO;
  if (a[0] == -kHalf) return FiniteBranch::HALF;
  return FiniteBranch::INTERIOR;
}

}  // namespace ehb
