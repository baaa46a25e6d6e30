#include "ehb/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ehb/errors.hpp"

namespace ehb {

namespace {

const Q H(1, 2);

Q absq(const Q& x) { return x < 0 ? -x : x; }

// Inequalities of P written in (alpha, m) with m = |zeta + 1/2|: c.a + cm*m <= b.
struct PIneq {
  std::array<int, 6> c{};
  int cm = 0;
  Q b;
};

std::vector<PIneq> build_P_ineqs() {
  std::vector<PIneq> L;
  L.push_back({{}, 1, H});  // m <= 1/2
  for (int i = 0; i < 6; ++i) {  // m - 1/2 <= a_i
    PIneq e{{}, 1, H};
    e.c[i] = -1;
    L.push_back(e);
  }
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (i != j) {
        PIneq e{{}, 0, Q(1)};
        e.c[i] = 1;
        e.c[j] = -1;
        L.push_back(e);
      }
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      PIneq e{{}, 0, Q(1)};
      e.c[i] = e.c[j] = 1;
      L.push_back(e);
    }
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k) {
        PIneq e{{}, 1, Q(3, 2)};
        e.c[i] = e.c[j] = e.c[k] = 1;
        L.push_back(e);
      }
  return L;
}

const std::vector<PIneq>& P_ineqs() {
  static const std::vector<PIneq> L = build_P_ineqs();
  return L;
}

Q lhs(const PIneq& e, const Alpha& a, const Q& m) {
  Q s = m * e.cm;
  for (int i = 0; i < 6; ++i) s += a[i] * e.c[i];
  return s;
}

Q max_diff(const Alpha& a) {
  auto [lo, hi] = std::minmax_element(a.begin(), a.end());
  return *hi - *lo;
}

Q smallest_triple(const Alpha& a) {
  Alpha s = a;
  std::sort(s.begin(), s.end());
  return s[0] + s[1] + s[2];
}

// Translations only: lands in B.
void reduce_to_B(ExponentVector& v, Word& w) {
  for (int guard = 0;; ++guard) {
    if (guard > 100000) throw NonTermination("reduce_to_P: difference loop");
    if (max_diff(v.a) <= 1) break;
    int lo = int(std::min_element(v.a.begin(), v.a.end()) - v.a.begin());
    int hi = int(std::max_element(v.a.begin(), v.a.end()) - v.a.begin());
    LatticeVector s{};
    s[lo] = 1;
    s[hi] = -1;
    auto g = SymmetryElement::translation(s);
    v = apply(g, v);
    w.push_back(g);
  }
  // zeta into [-1, 0]
  long long k = floor_q(v.zeta + 1);  // zeta + 1 in [k, k+1)
  if (v.zeta == 0) k = 0;
  if (k != 0) {
    LatticeVector s{};
    s[6] = Q(-k);
    auto g = SymmetryElement::translation(s);
    v = apply(g, v);
    w.push_back(g);
  }
  Q m = absq(H + v.zeta);
  if (smallest_triple(v.a) < m - H) {
    std::array<int, 6> idx{0, 1, 2, 3, 4, 5};
    std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) { return v.a[x] > v.a[y]; });
    LatticeVector s{};
    for (int i = 0; i < 3; ++i) s[idx[i]] = -H;
    for (int i = 3; i < 6; ++i) s[idx[i]] = H;
    Q th = v.zeta + H;
    s[6] = absq(th + H) <= H ? H : -H;
    auto g = SymmetryElement::translation(s);
    v = apply(g, v);
    w.push_back(g);
  }
  if (!in_B(v)) throw InternalError("reduce_to_P: translation stage did not reach B: " + v.str());
}

}  // namespace

bool in_P(const ExponentVector& v) {
  if (!v.balanced()) return false;
  Q m = absq(H + v.zeta);
  if (m > H) return false;
  for (const auto& e : P_ineqs())
    if (lhs(e, v.a, m) > e.b) return false;
  return true;
}

bool in_B(const ExponentVector& v) {
  if (!v.balanced()) return false;
  Q m = absq(H + v.zeta);
  if (m > H) return false;
  if (max_diff(v.a) > 1) return false;
  return smallest_triple(v.a) >= m - H;
}

bool in_P0(const Alpha& a) {
  Q s(0);
  for (const Q& x : a) s += x;
  if (s != 1) return false;
  for (int r = 0; r < 6; ++r) {
    if (a[r] < -H) return false;
    for (int t = 0; t < 6; ++t)
      if (r != t && a[r] - a[t] > 1) return false;
    for (int t = r + 1; t < 6; ++t)
      if (a[r] + a[t] > 1) return false;
  }
  return true;
}

// --- lattice and group ---------------------------------------------------------------

bool in_lattice(const LatticeVector& x) {
  // Lambda = { k*h + w + m*(0;1) : w in Z^6 with sum 0 }, h = (-1/2,-1/2,-1/2,1/2,1/2,1/2; 1/2).
  Q s(0);
  for (int i = 0; i < 6; ++i) s += x[i];
  if (s != 0) return false;
  Q k2 = 2 * x[6];
  if (k2.denominator() != 1) return false;
  const Q k = k2;
  for (int i = 0; i < 6; ++i) {
    Q h = i < 3 ? -H : H;
    if ((x[i] - k * h).denominator() != 1) return false;
  }
  return true;
}

SymmetryElement SymmetryElement::translation(const LatticeVector& s) {
  if (!in_lattice(s)) throw DomainError("translation vector not in the lattice");
  SymmetryElement g;
  g.kind = Kind::TRANSLATION;
  g.shift = s;
  return g;
}

SymmetryElement SymmetryElement::flip() {
  SymmetryElement g;
  g.kind = Kind::FLIP;
  return g;
}

SymmetryElement SymmetryElement::permutation(const std::array<int, 6>& p) {
  SymmetryElement g;
  g.kind = Kind::PERMUTATION;
  g.perm = p;
  return g;
}

std::string SymmetryElement::str() const {
  switch (kind) {
    case Kind::FLIP:
      return "flip";
    case Kind::PERMUTATION: {
      std::string s = "perm(";
      for (int i = 0; i < 6; ++i) s += std::to_string(perm[i]) + (i < 5 ? "," : ")");
      return s;
    }
    case Kind::TRANSLATION:
    default: {
      std::string s = "t(";
      for (int i = 0; i < 7; ++i) s += to_string(shift[i]) + (i == 3 || i == 5 ? ";" : i == 6 ? ")" : ",");
      return s;
    }
  }
}

ExponentVector apply(const SymmetryElement& g, const ExponentVector& v) {
  ExponentVector r = v;
  switch (g.kind) {
    case SymmetryElement::Kind::TRANSLATION:
      for (int i = 0; i < 6; ++i) r.a[i] += g.shift[i];
      r.zeta += g.shift[6];
      break;
    case SymmetryElement::Kind::FLIP:
      r = flip(v);
      break;
    case SymmetryElement::Kind::PERMUTATION:
      for (int i = 0; i < 6; ++i) r.a[i] = v.a[g.perm[i]];
      break;
  }
  return r;
}

ExponentVector apply(const Word& w, const ExponentVector& v) {
  ExponentVector r = v;
  for (const auto& g : w) r = apply(g, r);
  return r;
}

ExponentVector flip(const ExponentVector& v) {
  return ExponentVector({-v.a[0], -v.a[1], 1 - v.a[2], 1 - v.a[3], -v.a[4], -v.a[5]}, v.zeta);
}

Reduction reduce_to_P(const ExponentVector& v) {
  if (!v.balanced()) throw DomainError("reduce_to_P: balancing violated: " + v.str());
  Reduction red;
  red.result = v;
  if (in_P(v)) return red;
  reduce_to_B(red.result, red.word);
  if (in_P(red.result)) return red;
  // B \ P: the flip composed with an integral re-centering of its "1 -" pair, then back into B.
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      Word w = red.word;
      ExponentVector x = apply(SymmetryElement::flip(), red.result);
      w.push_back(SymmetryElement::flip());
      LatticeVector s{};
      s[i] += 1;
      s[j] += 1;
      s[2] -= 1;
      s[3] -= 1;
      if (std::any_of(s.begin(), s.end(), [](const Q& c) { return c != 0; })) {
        auto g = SymmetryElement::translation(s);
        x = apply(g, x);
        w.push_back(g);
      }
      reduce_to_B(x, w);
      if (in_P(x)) return {w, x};
    }
  throw NonTermination("reduce_to_P: no flip variant landed in P for " + v.str());
}

const std::vector<std::array<int, 6>>& s4xs2() {
  static const std::vector<std::array<int, 6>> perms = [] {
    std::vector<std::array<int, 6>> out;
    std::array<int, 4> p{0, 1, 2, 3};
    do {
      out.push_back({p[0], p[1], p[2], p[3], 4, 5});
      out.push_back({p[0], p[1], p[2], p[3], 5, 4});
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return perms;
}

// --- zeta and z-dependence ------------------------------------------------------------

Q zeta_for(const Alpha& a) {
  if (!in_P0(a)) throw DomainError("zeta_for: alpha not in P0");
  Q m(0);
  for (int r = 0; r < 6; ++r) m = std::min(m, a[r]);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k) m = std::min(m, a[i] + a[j] + a[k]);
  return m;
}

bool is_z_dependent(const ExponentVector& v) {
  if (!in_P(v)) throw DomainError("is_z_dependent: vector not in P: " + v.str());
  const auto& a = v.a;
  const Q m = absq(H + v.zeta);
  if (a[4] + m >= H) return true;
  const std::array<int, 5> others{0, 1, 2, 3, 5};
  for (int x = 0; x < 5; ++x)
    for (int y = x + 1; y < 5; ++y)
      if (m == H + a[4] + a[others[x]] + a[others[y]]) return true;
  // On a facet a_r + 1/2 = m the function is z-dependent exactly on the relative boundary.
  const auto& L = P_ineqs();
  auto facet_index = [&](int r) {
    for (std::size_t i = 0; i < L.size(); ++i)
      if (L[i].cm == 1 && L[i].b == H && L[i].c[r] == -1) return i;
    throw InternalError("is_z_dependent: facet lookup");
  };
  auto on_boundary = [&](std::size_t skip, bool with_gamma0_cut) {
    for (std::size_t i = 0; i < L.size(); ++i)
      if (i != skip && lhs(L[i], a, m) == L[i].b) return true;
    return with_gamma0_cut && a[4] + m == H;
  };
  for (int r = 0; r < 6; ++r) {
    if (a[r] + H != m) continue;
    if (r == 4) {
      if (on_boundary(facet_index(4), false)) return true;
    } else if (a[4] + m <= H) {
      if (on_boundary(facet_index(r), true)) return true;
    }
  }
  return false;
}

// --- tiling ----------------------------------------------------------------------------

Q Inequality::eval(const Alpha& a) const {
  Q s(0);
  for (int i = 0; i < 6; ++i) s += a[i] * c[i];
  return s;
}

std::string TileId::str() const {
  switch (kind) {
    case Kind::P_I:
      return "I";
    case Kind::P_II:
      return "II" + std::to_string(idx[0]);
    case Kind::P_III:
    default:
      return "III" + std::to_string(idx[0]) + std::to_string(idx[1]) + std::to_string(idx[2]);
  }
}

const std::vector<TileId>& all_tiles() {
  static const std::vector<TileId> tiles = [] {
    std::vector<TileId> out;
    out.push_back({TileId::Kind::P_I, {-1, -1, -1}});
    for (int t = 0; t < 6; ++t) out.push_back({TileId::Kind::P_II, {t, -1, -1}});
    for (int r = 0; r < 6; ++r)
      for (int s = r + 1; s < 6; ++s)
        for (int t = s + 1; t < 6; ++t) out.push_back({TileId::Kind::P_III, {r, s, t}});
    return out;
  }();
  return tiles;
}

namespace {

std::vector<Inequality> build_tile(const TileId& id) {
  std::vector<Inequality> L;
  auto unit = [](int i, int s) {
    Inequality e;
    e.c[i] = s;
    return e;
  };
  if (id.kind == TileId::Kind::P_I) {
    for (int r = 0; r < 6; ++r) {
      auto e = unit(r, -1);
      e.b = 0;
      L.push_back(e);
    }
  } else if (id.kind == TileId::Kind::P_II) {
    const int t = id.idx[0];
    auto lo = unit(t, -1);
    lo.b = H;  // a_t >= -1/2
    L.push_back(lo);
    auto hi = unit(t, 1);
    hi.b = 0;  // a_t <= 0
    L.push_back(hi);
    for (int r = 0; r < 6; ++r) {
      if (r == t) continue;
      Inequality e1;
      e1.c[t] = 1;
      e1.c[r] = -1;
      e1.b = 0;  // a_t <= a_r
      L.push_back(e1);
      Inequality e2;
      e2.c[r] = 1;
      e2.c[t] = -1;
      e2.b = 1;  // a_r <= 1 + a_t
      L.push_back(e2);
    }
    for (int r = 0; r < 6; ++r)
      for (int s = r + 1; s < 6; ++s) {
        if (r == t || s == t) continue;
        Inequality e1;
        e1.c[r] = e1.c[s] = -1;
        e1.b = 0;
        L.push_back(e1);
        Inequality e2;
        e2.c[r] = e2.c[s] = 1;
        e2.b = 1;
        L.push_back(e2);
      }
  } else {
    const auto& rst = id.idx;
    for (int x = 0; x < 3; ++x)
      for (int y = x + 1; y < 3; ++y) {
        Inequality e;
        e.c[rst[x]] = e.c[rst[y]] = 1;
        e.b = 0;
        L.push_back(e);
      }
    for (int a = 0; a < 6; ++a) {
      if (a == rst[0] || a == rst[1] || a == rst[2]) continue;
      Inequality e1;
      e1.c[a] = -1;
      for (int x : rst) e1.c[x] -= 1;
      e1.b = 0;
      L.push_back(e1);
      Inequality e2;
      e2.c[a] = 1;
      for (int x : rst) e2.c[x] -= 1;
      e2.b = 1;
      L.push_back(e2);
    }
  }
  return L;
}

}  // namespace

const std::vector<Inequality>& tile_inequalities(const TileId& t) {
  static const std::map<TileId, std::vector<Inequality>> cache = [] {
    std::map<TileId, std::vector<Inequality>> m;
    for (const auto& id : all_tiles()) m[id] = build_tile(id);
    return m;
  }();
  return cache.at(t);
}

bool in_tile(const TileId& t, const Alpha& a) {
  for (const auto& e : tile_inequalities(t))
    if (e.eval(a) > e.b) return false;
  return true;
}

bool in_tile_interior(const TileId& t, const Alpha& a) {
  for (const auto& e : tile_inequalities(t))
    if (!(e.eval(a) < e.b)) return false;
  return true;
}

int rational_rank(std::vector<std::vector<Q>> M) {
  int rk = 0;
  const int ncol = M.empty() ? 0 : int(M[0].size());
  for (int c = 0; c < ncol && rk < int(M.size()); ++c) {
    int piv = -1;
    for (int i = rk; i < int(M.size()); ++i)
      if (M[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(M[rk], M[piv]);
    for (int i = 0; i < int(M.size()); ++i)
      if (i != rk && M[i][c] != 0) {
        Q f = M[i][c] / M[rk][c];
        for (int j = c; j < ncol; ++j) M[i][j] -= f * M[rk][j];
      }
    ++rk;
  }
  return rk;
}

std::vector<FaceSignature> face_of(const Alpha& a) {
  if (!in_P0(a)) throw DomainError("face_of: alpha not in P0");
  std::vector<FaceSignature> out;
  for (const auto& t : all_tiles()) {
    if (!in_tile(t, a)) continue;
    FaceSignature f;
    f.tile = t;
    const auto& L = tile_inequalities(t);
    std::vector<std::vector<Q>> rows{std::vector<Q>(6, Q(1))};
    for (int i = 0; i < int(L.size()); ++i)
      if (L[i].eval(a) == L[i].b) {
        f.tight.push_back(i);
        rows.emplace_back(L[i].c.begin(), L[i].c.end());
      }
    f.dim = 6 - rational_rank(rows);
    out.push_back(std::move(f));
  }
  if (out.empty()) throw InternalError("face_of: no tile contains a point of P0");
  return out;
}

bool is_system(const Alpha& a) {
  if (!in_P0(a)) return false;
  for (int t = 0; t < 6; ++t)
    if (in_tile_interior({TileId::Kind::P_II, {t, -1, -1}}, a)) return false;
  return true;
}

std::string face_name(const Alpha& a) {
  if (!is_system(a)) throw DomainError("face_name: not a system point");
  const Q Z = -zeta_for(a);
  auto in_open = [](const Q& x, const Q& lo, const Q& hi) {  // x mod 1 in (lo, hi), hi - lo <= 1
    Q y = lo + frac_q(x - lo);
    return lo < y && y < hi;
  };
  std::string digits;
  if (Z == 0 || Z == H) {
    int n1 = 0;
    for (int r = 0; r < 4; ++r) n1 += congruent_mod1(a[r], Z);
    digits = std::to_string(n1) + std::to_string(4 - n1);
  } else {
    int c[4] = {0, 0, 0, 0};
    for (int r = 0; r < 4; ++r) {
      c[0] += congruent_mod1(a[r], Z);
      c[1] += congruent_mod1(a[r], -Z);
      c[2] += in_open(a[r], -Z, Z);
      c[3] += in_open(a[r], Z, 1 - Z);
    }
    if (c[0] < c[1]) std::swap(c[0], c[1]);
    if (c[2] < c[3]) std::swap(c[2], c[3]);
    for (int x : c) digits += std::to_string(x);
  }
  auto isv = [&](const Q& x) { return congruent_mod1(x, Z) || congruent_mod1(x, -Z); };
  const Q &g0 = a[4], &g1 = a[5];
  std::string suf;
  if (congruent_mod1(g0, g1) && isv(g0))
    suf = "v2";
  else if (congruent_mod1(g0, -g1) && isv(g0))
    suf = "vv";
  else if (isv(g0) || isv(g1))
    suf = "vp";
  else {
    auto I1 = [&](const Q& x) { return in_open(x, -Z, Z); };
    auto I2 = [&](const Q& x) { return in_open(x, Z, 1 - Z); };
    suf = ((I1(g0) && I1(g1)) || (I2(g0) && I2(g1))) ? "as" : "pp";
  }
  return digits + suf;
}

}  // namespace ehb
