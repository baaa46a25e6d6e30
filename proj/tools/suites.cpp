#include "suites.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>

#include "ehb/biortho.hpp"
#include "ehb/limits.hpp"
#include "ehb/scheme.hpp"

namespace ehb::suites {

namespace {

cd polar_draw(std::mt19937_64& g, double lo, double hi) {
  std::uniform_real_distribution<double> m(lo, hi), ph(-M_PI, M_PI);
  return std::polar(m(g), ph(g));
}

ExponentVector random_in_P(std::mt19937_64& g) {
  std::uniform_int_distribution<int> den(1, 12);
  ExponentVector v;
  Q s(0);
  for (int r = 0; r < 5; ++r) {
    int d = den(g);
    std::uniform_int_distribution<int> num(-2 * d, 2 * d);
    v.a[r] = Q(num(g), d);
    s += v.a[r];
  }
  v.a[5] = Q(1) - s;
  int d = den(g);
  std::uniform_int_distribution<int> num(-3 * d, 3 * d);
  v.zeta = Q(num(g), d);
  return reduce_to_P(v).result;
}

template <class C> LimitParams<C> limit_base(std::mt19937_64& g, const cd& q, C& z) {
  std::array<C, 4> t;
  for (auto& x : t) x = convert<C>(polar_draw(g, 0.5, 0.9));
  C u0 = convert<C>(polar_draw(g, 0.5, 0.9));
  z = convert<C>(polar_draw(g, 0.5, 0.9));
  return LimitParams<C>::balanced(t, u0, convert<C>(q));
}

template <class C> double log_slope(const C& a, const C& b, const real_t<C>& p1, const real_t<C>& p2) {
  using std::log;
  return static_cast<double>((log(mag(b)) - log(mag(a))) / (log(p2) - log(p1)));
}

template <class C>
void slopes_for(SlopeCheck& out, const ExponentVector& v, const LimitParams<C>& b, const C& z, const real_t<C>& p1,
                const real_t<C>& p2) {
  for (int n : {1, 2}) {
    C r1 = rtilde_scaled(n, z, b, v, p1), r2 = rtilde_scaled(n, z, b, v, p2);
    double dr = std::abs(log_slope(r1, r2, p1, p2) - boost::rational_cast<double>(rtilde_valuation(v, n)));
    C n1 = norm_formula(n, scale(b, v, p1)), n2 = norm_formula(n, scale(b, v, p2));
    double dn = std::abs(log_slope(n1, n2, p1, p2) - boost::rational_cast<double>(norm_valuation(v, n)));
    if (std::max(dr, dn) > std::max(out.max_dev_rtilde, out.max_dev_norm))
      out.worst = v.str() + " n=" + std::to_string(n);
    out.max_dev_rtilde = std::max(out.max_dev_rtilde, dr);
    out.max_dev_norm = std::max(out.max_dev_norm, dn);
  }
}

const Q kHalf(1, 2);

Alpha make_alpha(std::initializer_list<Q> xs) {
  Alpha a{};
  std::copy(xs.begin(), xs.end(), a.begin());
  return a;
}

}  // namespace

Normalization discrete_normalization(int draws, int N, std::uint64_t seed) {
  Normalization out;
  std::mt19937_64 g(seed), gm(seed);
  const cd q = std::polar(0.4, 0.3), p(0.05);
  const mpc100 qm = convert<mpc100>(q), pm = convert<mpc100>(p);
  const Precision pr = Precision::for_type<cd>();
  for (int d = 0; d < draws; ++d) {
    auto e = sample_params<cd>(g, q, p, 0.5, 0.9, N);
    cd v = 0;
    double cond = 0;
    for (int k = 0; k <= N; ++k) {
      cd w = discrete_weight(k, e, N, pr);
      v += w;
      cond += std::abs(w);
    }
    out.double_err = std::max(out.double_err, std::abs(v - cd(1)));
    out.max_condition = std::max(out.max_condition, cond);
    // the same seed, with t1 and u1 formed in 100 digits
    auto t0 = std::chrono::steady_clock::now();
    auto em = sample_params<mpc100>(gm, qm, pm, 0.5, 0.9, N);
    auto one = [](const mpc100&) { return mpc100(1); };
    mpc100 vm = discrete_inner_product<mpc100>(one, one, em, DiscreteSpec{N});
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.max_err = std::max(out.max_err, mag_d(mpc100(vm - mpc100(1))));
    out.max_seconds = std::max(out.max_seconds, secs);
    ++out.draws;
  }
  return out;
}

Matrix discrete_biorthogonality(int N, int nmax, const std::vector<std::uint64_t>& seeds) {
  Matrix out;
  const cd q = std::polar(0.4, 0.3), p(0.05);
  for (std::uint64_t s : seeds) {
    std::mt19937_64 g(s);
    auto e = sample_params<cd>(g, q, p, 0.5, 0.9, N);
    auto d = e.swapped();
    std::vector<std::vector<cd>> G(nmax + 1, std::vector<cd>(nmax + 1));
    double scale = 0;
    for (int n = 0; n <= nmax; ++n)
      for (int m = 0; m <= nmax; ++m) {
        G[n][m] = discrete_inner_product<cd>([&](cd x) { return rtilde(n, x, e); },
                                             [&](cd x) { return rtilde(m, x, d); }, e, DiscreteSpec{N});
        if (n == m) scale = std::max(scale, std::abs(G[n][n]));
      }
    for (int n = 0; n <= nmax; ++n)
      for (int m = 0; m <= nmax; ++m) {
        if (n == m)
          out.max_diag = std::max(out.max_diag, std::abs(G[n][n] / norm_formula(n, e) - cd(1)));
        else
          out.max_offdiag = std::max(out.max_offdiag, std::abs(G[n][m]) / scale);
      }
    ++out.cases;
  }
  return out;
}

Continuous continuous_normalization(int quad, int draws, std::uint64_t seed) {
  Continuous out;
  std::mt19937_64 g(seed);
  const cd q = std::polar(0.3, 0.4), p(0.25);
  auto one = [](cd) { return cd(1); };
  while (out.draws < draws) {
    auto e = sample_params<cd>(g, q, p, 0.45, 0.8);
    double tm = 0;
    for (const cd& x : e.t) tm = std::max(tm, std::abs(x));
    for (const cd& x : e.u) tm = std::max(tm, std::abs(x));
    if (tm > 0.8) continue;
    auto r = continuous_inner_product<cd>(one, one, e, 0, 0, quad, Precision::for_type<cd>(), 1.0);
    out.max_err = std::max(out.max_err, std::abs(r.value - cd(1)));
    out.max_doubling = std::max(out.max_doubling, r.residual);
    out.max_tmod = std::max(out.max_tmod, tm);
    ++out.draws;
  }
  return out;
}

Matrix continuous_biorthogonality(int quad) {
  Matrix out;
  const cd q = std::polar(0.3, 0.4), p(0.02);
  auto e = EllipticParams<cd>::balanced(
      {std::polar(0.6, 0.3), std::polar(0.7, -1.0), std::polar(0.65, 2.0), std::polar(0.7, 0.4)}, std::polar(0.2, 1.1),
      q, p);
  auto d = e.swapped();
  double scale = 0;
  cd G[2][2];
  for (int n = 0; n <= 1; ++n)
    for (int m = 0; m <= 1; ++m) {
      G[n][m] = continuous_inner_product<cd>([&](cd x) { return rtilde(n, x, e); },
                                             [&](cd x) { return rtilde(m, x, d); }, e, n, m, quad)
                    .value;
      if (n == m) scale = std::max(scale, std::abs(G[n][n]));
    }
  for (int n = 0; n <= 1; ++n)
    for (int m = 0; m <= 1; ++m) {
      if (n == m)
        out.max_diag = std::max(out.max_diag, std::abs(G[n][n] / norm_formula(n, e) - cd(1)));
      else
        out.max_offdiag = std::max(out.max_offdiag, std::abs(G[n][m]) / scale);
    }
  out.cases = 1;
  return out;
}

Pastro pastro(int nmax, int quad, std::uint64_t seed) {
  Pastro out;
  const cd q(0.3, 0.2), A(0.3, 0.1), B(-0.2, 0.35);
  double scale = 0;
  std::vector<std::vector<cd>> G(nmax + 1, std::vector<cd>(nmax + 1));
  for (int n = 0; n <= nmax; ++n)
    for (int m = 0; m <= nmax; ++m) {
      G[n][m] = pastro_inner_product<cd>([&](cd w) { return pastro_p(n, w, A, B, q); },
                                         [&](cd w) { return pastro_q(m, w, A, B, q); }, A, B, q, quad)
                    .value;
      if (n == m) scale = std::max(scale, std::abs(G[n][n]));
    }
  for (int n = 0; n <= nmax; ++n)
    for (int m = 0; m <= nmax; ++m) {
      if (n == m)
        out.matrix.max_diag = std::max(out.matrix.max_diag, std::abs(G[n][n] / pastro_norm(n, A, B, q) - cd(1)));
      else
        out.matrix.max_offdiag = std::max(out.matrix.max_offdiag, std::abs(G[n][m]) / scale);
    }
  out.matrix.cases = 1;
  std::mt19937_64 g(seed);
  for (int d = 0; d < 20; ++d) {
    cd w = polar_draw(g, 0.3, 1.5);
    for (int n = 0; n <= 6; ++n) {
      cd want = std::pow(w * A, n) * std::pow(std::sqrt(q), -n);
      out.monomial = std::max(out.monomial, std::abs(pastro_p(n, w, A, q, q) - want) / std::max(1.0, std::abs(want)));
    }
    std::array<cd, 4> t{polar_draw(g, 0.5, 0.9), polar_draw(g, 0.5, 0.9), polar_draw(g, 0.5, 0.9),
                        polar_draw(g, 0.5, 0.9)};
    auto b = LimitParams<cd>::balanced(t, polar_draw(g, 0.5, 0.9), q);
    cd z = polar_draw(g, 0.5, 0.9);
    for (int n = 0; n <= nmax; ++n) {
      cd a = pastro_P32(n, z, b.t, b.u, q), c = pastro_P21(n, z, b.t, b.u, q);
      out.routes = std::max(out.routes, std::abs(a - c) / std::max(1.0, std::abs(a)));
    }
  }
  return out;
}

SlopeCheck valuation_slopes(int count, std::uint64_t seed, const std::string& p1, const std::string& p2, bool deep) {
  SlopeCheck out;
  std::mt19937_64 g(seed);
  std::mt19937_64 gb(seed + 1000);
  const cd q(0.3, 0.2);
  for (int i = 0; i < count; ++i) {
    ExponentVector v = random_in_P(g);
    if (deep) {
      mpc300 z;
      auto b = limit_base<mpc300>(gb, q, z);
      slopes_for<mpc300>(out, v, b, z, mpreal300(p1), mpreal300(p2));
    } else {
      mpc100 z;
      auto b = limit_base<mpc100>(gb, q, z);
      slopes_for<mpc100>(out, v, b, z, mpreal(p1), mpreal(p2));
    }
    ++out.vectors;
  }
  return out;
}

DeficitCheck deficit_law(std::uint64_t seed) {
  DeficitCheck out;
  std::mt19937_64 g(seed);
  for (int i = 0; i < 1000; ++i) {
    ExponentVector v = random_in_P(g);
    v.zeta = zeta_for(v.a);
    ++out.samples;
    if (valuation_deficit(v) < 0) ++out.negative;
  }
  // Random points in the relative interior of every face of the tiling.
  const auto& V = enumerate_vertices();
  std::uniform_int_distribution<int> wd(1, 9);
  for (const Face& f : enumerate_faces()) {
    bool in_II = false, full_II = false;
    for (const TileId& t : f.tiles)
      if (t.kind == TileId::Kind::P_II) {
        in_II = true;
        if (f.dim == 5) full_II = true;
      }
    if (full_II) continue;
    for (int rep = 0; rep < 3; ++rep) {
      Alpha a{};
      int tot = 0;
      for (int i = 0; i < 21; ++i)
        if (f.vertices >> i & 1) {
          int w = wd(g);
          tot += w;
          for (int c = 0; c < 6; ++c) a[c] += V[i].coords[c] * w;
        }
      for (auto& x : a) x /= tot;
      Q d = valuation_deficit(ExponentVector(a, zeta_for(a)));
      if (in_II) {
        ++out.boundary_samples;
        if (d != 0) ++out.boundary_nonzero;
      } else {
        ++out.face_samples;
        if (d != 0) ++out.face_nonzero;
      }
    }
  }
  // Interior points of each P_II,t by rejection.
  std::uniform_int_distribution<int> num(-12, 24);
  for (int t = 0; t < 6; ++t) {
    TileId id{TileId::Kind::P_II, {t, -1, -1}};
    auto& [pos, cnt] = out.interior[t];
    for (int guard = 0; cnt < 200 && guard < 2000000; ++guard) {
      Alpha a{};
      Q s(0);
      for (int r = 0; r < 5; ++r) s += (a[r] = Q(num(g), 24));
      a[5] = Q(1) - s;
      if (!in_tile_interior(id, a)) continue;
      ++cnt;
      if (valuation_deficit(ExponentVector(a, zeta_for(a))) > 0) ++pos;
    }
  }
  return out;
}

LimitTable limit_table(const std::string& face, int nmax, const std::vector<std::string>& ps,
                       const std::vector<std::string>& extrap_ps, std::uint64_t seed) {
  using M = mpc300;
  using R = mpreal300;
  const auto& systems = enumerate_systems();
  auto it = std::find_if(systems.begin(), systems.end(), [&](const FaceRecord& r) { return r.name == face; });
  if (it == systems.end()) throw std::invalid_argument("unknown system: " + face);
  const ExponentVector v = it->realizations.front().midpoint;
  LimitTable out;
  out.face = face;
  out.ps = ps;
  std::mt19937_64 g(seed);
  M z;
  auto b = limit_base<M>(g, cd(0.3, 0.2), z);
  const bool is_pastro = v == parse_exponent_vector("-1/4,0,1/4,1/2;0,1/2;-1/4");
  const bool is_aw = v == parse_exponent_vector("0,0,0,0;1/2,1/2;0");
  out.reference = is_pastro ? "pastro_P" : is_aw ? "askey_wilson" : "extrapolated limit";
  std::vector<R> xp;
  for (const auto& s : extrap_ps) xp.emplace_back(s);
  for (int n = 1; n <= nmax; ++n) {
    LimitRow row;
    row.n = n;
    const Q val = rtilde_valuation(v, n);
    auto fn = [&](const R& p) { return rtilde_scaled(n, z, b, v, p); };
    std::optional<M> ref;
    if (is_pastro) ref = pastro_P32(n, z, b.t, b.u, b.q);
    if (is_aw) ref = askey_wilson(n, z, b.t, b.q);
    std::optional<M> ext;
    if (!xp.empty()) try {
      auto est = numeric_limit<M>(fn, v, xp, val);
      ext = est.limit;
      if (ref) row.extrapolated = mag_d(M(est.limit - *ref));
    } catch (const NonConvergence& e) {
      row.note = "extrapolation: " + std::string(e.what());
    }
    for (const auto& s : ps) {
      R p(s);
      M scaled = fn(p) / M(rpow<M>(p, val));
      if (ref)
        row.errors.push_back(mag_d(M(scaled - *ref)));
      else if (ext)
        row.errors.push_back(mag_d(M(scaled - *ext)));
      else
        row.errors.push_back(-1);
    }
    out.rows.push_back(row);
  }
  return out;
}

std::vector<FiniteBranchCheck> finite_limits(const std::string& p_weights, const std::string& p_functions, int N,
                                             double q_mod, std::uint64_t seed) {
  using M = mpc300;
  using R = mpreal300;
  std::mt19937_64 g(seed);
  const M q = convert<M>(std::polar(q_mod, std::atan2(0.15, 0.3)));
  const M t0 = convert<M>(polar_draw(g, 0.6, 0.95));
  const M t2 = convert<M>(polar_draw(g, 0.6, 0.95)), t3 = convert<M>(polar_draw(g, 0.6, 0.95)),
          t4 = convert<M>(polar_draw(g, 0.6, 0.95));
  std::array<M, 6> T{t0, M(ipow(q, -N) / t0), t2, t3, t4, M(ipow(q, N + 1) / (t2 * t3 * t4))};
  LimitParams<M> b{{T[0], T[1], T[2], T[3]}, {T[4], T[5]}, q};
  const R pw(p_weights), pf(p_functions);
  const int nmax = std::min(3, N);
  std::vector<FiniteBranchCheck> out;
  const std::vector<std::pair<std::string, Alpha>> branches = {
      {"alpha0=0", make_alpha({0, 0, 0, 0, kHalf, kHalf})},
      {"-1/2<alpha0<0", make_alpha({Q(-1, 4), Q(1, 4), 0, 0, kHalf, kHalf})},
      {"alpha0=-1/2", make_alpha({-kHalf, kHalf, 0, 0, kHalf, kHalf})},
  };
  for (const auto& [label, al] : branches) {
    FiniteBranchCheck c;
    c.branch = label;
    c.alpha = ExponentVector(al, al[0]).str();
    std::vector<M> w(N + 1);
    M mass(0);
    for (int k = 0; k <= N; ++k) {
      w[k] = finite_weights(k, al, T, N, q);
      mass += w[k];
      M e = elliptic_finite_weight(k, al, T, N, q, pw);
      c.weight_err = std::max(c.weight_err, mag_d(M(e / w[k] - M(1))));
    }
    c.mass_err = mag_d(M(mass - M(1)));
    const ExponentVector v(al, al[0]);
    std::vector<std::vector<M>> F(nmax + 1, std::vector<M>(N + 1)), G = F;
    for (int n = 0; n <= nmax; ++n)
      for (int k = 0; k <= N; ++k) {
        M x = T[0] * ipow(q, k);
        F[n][k] = rtilde_scaled(n, x, b, v, pf);
        G[n][k] = rtilde_scaled(n, x, b, v, pf, true);
      }
    std::vector<std::vector<double>> A(nmax + 1, std::vector<double>(nmax + 1));
    for (int n = 0; n <= nmax; ++n)
      for (int m = 0; m <= nmax; ++m) {
        M s(0);
        for (int k = 0; k <= N; ++k) s += w[k] * F[n][k] * G[m][k];
        A[n][m] = mag_d(s);
      }
    for (int n = 0; n <= nmax; ++n)
      for (int m = 0; m <= nmax; ++m)
        if (n != m) c.matrix_off = std::max(c.matrix_off, A[n][m] / std::sqrt(A[n][n] * A[m][m]));
    out.push_back(c);
  }
  return out;
}

std::vector<MeasureCheck> measure_normalizations(std::uint64_t seed) {
  const cd q(0.25, 0.12);
  std::mt19937_64 g(seed);
  std::array<cd, 6> t;
  for (;;) {
    cd pr = 1;
    for (int r = 0; r < 5; ++r) pr *= (t[r] = polar_draw(g, 0.6, 0.9));
    t[5] = q / pr;
    if (std::abs(t[5]) < 0.92) break;
  }
  auto one = [](cd) { return cd(1); };
  std::vector<MeasureCheck> out;
  auto add = [&](const std::string& l, cd v) { out.push_back({l, std::abs(v - cd(1))}); };
  const Q h = kHalf;
  add("NR 0,0,0,0;1/3,2/3", nr_measure(make_alpha({0, 0, 0, 0, Q(1, 3), Q(2, 3)}), t, q).apply(one, one));
  add("SB -1/4,0,1/4,1/2;0,1/2",
      sb_measure(make_alpha({Q(-1, 4), 0, Q(1, 4), h, 0, h}), {0, 1, 4}, t, q).apply(one, one));
  Alpha s2 = make_alpha({Q(-1, 4), Q(-1, 4), h, h, Q(1, 4), Q(1, 4)});
  add("S2 integral w=0.7+0.2i", sigma2_measure(s2, 0, 1, t, q, cd(0.7, 0.2)).apply(one, one));
  add("S2 integral w=-0.3+0.9i", sigma2_measure(s2, 0, 1, t, q, cd(-0.3, 0.9)).apply(one, one));
  add("S2 series", sigma2_series_measure(s2, 0, 1, t, q).apply(one, one));
  for (Alpha a : {make_alpha({-h, Q(1, 6), Q(1, 6), h, Q(1, 6), h}),
                  make_alpha({-h, Q(1, 4), Q(1, 4), Q(1, 4), Q(1, 4), h}),
                  make_alpha({Q(-3, 10), Q(1, 10), h, h, Q(1, 10), Q(1, 10)})}) {
    int idx = *find_sigma_index(a);
    add("S " + ExponentVector(a, Q(0)).str().substr(0, ExponentVector(a, Q(0)).str().rfind(';')),
        sigma_measure(a, idx, t, q).apply(one, one));
  }
  return out;
}

KernelCheck kernel_identities(int draws, std::uint64_t seed) {
  KernelCheck out;
  std::mt19937_64 g(seed);
  std::uniform_real_distribution<double> pd(0.01, 0.4);
  auto rel = [](cd a, cd b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); };
  for (int i = 0; i < draws; ++i) {
    double pr = pd(g);
    cd p(pr), x = polar_draw(g, 0.3, 1.5), q = polar_draw(g, 0.05, 0.4);
    cd th = theta(x, p);
    cd s = 0;
    for (int n = -60; n <= 60; ++n) s += std::pow(-x, n) * std::pow(pr, 0.5 * n * (n - 1));
    out.triple = std::max(out.triple, rel(qpoch_inf(p, p) * th, s));
    out.quasi = std::max(out.quasi, std::max(rel(theta(cd(p * x), p), -th / x), rel(theta(cd(1.0 / x), p), -th / x)));
    out.reflection =
        std::max(out.reflection, std::abs(elliptic_gamma(x, p, q) * elliptic_gamma(cd(p * q / x), p, q) - cd(1)));
    ++out.draws;
  }
  return out;
}

}  // namespace ehb::suites
