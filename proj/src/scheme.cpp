#include "ehb/scheme.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

#include "ehb/appendix_data.hpp"
#include "ehb/errors.hpp"

namespace ehb {

namespace {

const Q H(1, 2);

std::vector<VertexLabel> build_vertices() {
  std::vector<VertexLabel> V;
  auto add = [&](VertexLabel::Kind k, int i, int j, std::string name, Alpha a) {
    V.push_back({k, i, j, std::move(name), a, zeta_for(a)});
  };
  for (int j = 3; j >= 0; --j) {
    Alpha a{};
    a[j] = 1;
    add(VertexLabel::Kind::D, j, -1, "d" + std::to_string(j), a);
  }
  for (int j = 1; j >= 0; --j) {
    Alpha a{};
    a[4 + j] = 1;
    add(VertexLabel::Kind::E, j, -1, "e" + std::to_string(j), a);
  }
  const int fpairs[6][2] = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
  for (const auto& p : fpairs) {
    Alpha a;
    a.fill(H);
    a[p[0]] = a[p[1]] = -H;
    add(VertexLabel::Kind::F, p[0], p[1], "f" + std::to_string(p[0]) + std::to_string(p[1]), a);
  }
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 4; ++i) {
      Alpha a;
      a.fill(H);
      a[i] = a[4 + j] = -H;
      add(VertexLabel::Kind::G, i, j, "g" + std::to_string(i) + std::to_string(j), a);
    }
  // h01: the table entry lists zeta-slot 0, but every midpoint through h01 needs |zeta + 1/2| = 0.
  Alpha h;
  h.fill(H);
  h[4] = h[5] = -H;
  add(VertexLabel::Kind::H, 0, 1, "h01", h);
  return V;
}

constexpr int NV = 21;

Alpha permuted(const Alpha& a, const std::array<int, 6>& p) {
  Alpha r;
  for (int i = 0; i < 6; ++i) r[i] = a[p[i]];
  return r;
}

// perm_table[p][v] = index of the vertex whose coordinates are vertex v's permuted by p
const std::vector<std::array<int, NV>>& perm_table() {
  static const std::vector<std::array<int, NV>> T = [] {
    const auto& V = enumerate_vertices();
    std::vector<std::array<int, NV>> out;
    for (const auto& p : s4xs2()) {
      std::array<int, NV> row{};
      for (int v = 0; v < NV; ++v) {
        Alpha w = permuted(V[v].coords, p);
        int idx = -1;
        for (int u = 0; u < NV; ++u)
          if (V[u].coords == w) idx = u;
        if (idx < 0) throw InternalError("vertex set not closed under permutations");
        row[v] = idx;
      }
      out.push_back(row);
    }
    return out;
  }();
  return T;
}

std::vector<int> indices(VertexSet s) {
  std::vector<int> r;
  for (int v = 0; v < NV; ++v)
    if (s >> v & 1u) r.push_back(v);
  return r;
}

// Lexicographically smallest sorted index list over the S4 x S2 orbit.
std::vector<int> orbit_rep(VertexSet s) {
  std::vector<int> best;
  for (const auto& row : perm_table()) {
    std::vector<int> t;
    for (int v : indices(s)) t.push_back(row[v]);
    std::sort(t.begin(), t.end());
    if (best.empty() || t < best) best = t;
  }
  return best;
}

using Key = std::array<Q, 6>;

Key canon(Alpha x, Q z) {
  if (frac_q(x[0]) >= H) {
    for (int i = 0; i < 6; ++i) x[i] += i < 3 ? -H : H;
    z += H;
  }
  for (int i = 0; i < 5; ++i) {
    Q k(floor_q(x[i]));
    x[i] -= k;
    x[5] += k;
  }
  return {x[0], x[1], x[2], x[3], x[4], frac_q(z)};
}

Key key_of(const ExponentVector& v) {
  std::optional<Key> best;
  for (const auto& p : s4xs2())
    for (const Q& z : {v.zeta, -1 - v.zeta}) {
      Key k = canon(permuted(v.a, p), z);
      if (!best || k < *best) best = k;
    }
  return *best;
}

std::string key_str(const Key& k) {
  std::string s;
  for (int i = 0; i < 6; ++i) s += (i ? "," : "") + to_string(k[i]);
  return s;
}

struct Scheme {
  std::vector<FaceRecord> records;
  std::unordered_map<VertexSet, std::string> face_names;  // every system face
};

const Scheme& scheme() {
  static const Scheme S = [] {
    Scheme out;
    std::vector<VertexSet> sys;
    for (const auto& f : enumerate_faces()) {
      bool full_II = false;
      for (const auto& t : f.tiles)
        if (t.kind == TileId::Kind::P_II && f.vertices == tile_vertices(t)) full_II = true;
      if (!full_II) sys.push_back(f.vertices);
    }
    std::map<Key, std::vector<VertexSet>> classes;
    for (VertexSet s : sys) {
      ExponentVector m = midpoint(s);
      if (!is_system(m.a)) throw InternalError("proper face midpoint is not a system point");
      // zeta is affine on each face
      Q zs(0);
      for (int v : indices(s)) zs += enumerate_vertices()[v].zeta;
      if (zs / popcount(s) != m.zeta) throw InternalError("zeta not affine on a face");
      classes[key_of(m)].push_back(s);
      out.face_names[s] = face_name(m.a);
    }
    std::set<Key> done;
    for (const auto& [k, members] : classes) {
      if (done.count(k)) continue;
      ExponentVector m = midpoint(members.front());
      Key fk = key_of(flip(m));
      std::vector<Key> group{k};
      if (fk != k && classes.count(fk)) group.push_back(fk);
      for (const auto& g : group) done.insert(g);

      // The ordinary class is the one carrying a measure other than a plain Sigma series; if
      // neither does, the one with the smaller canonical vertex list.
      auto best = [&](const Key& c) {
        std::vector<int> b;
        bool only_sigma = true;
        for (VertexSet s : classes.at(c)) {
          auto r = orbit_rep(s);
          if (b.empty() || r < b) b = r;
          only_sigma = only_sigma && measure_tag(s) == MeasureTag::SIGMA;
        }
        return std::make_pair(only_sigma, b);
      };
      if (group.size() == 2 && best(group[1]) < best(group[0])) std::swap(group[0], group[1]);

      FaceRecord rec;
      rec.name = face_name(m.a);
      rec.level = popcount(members.front());
      rec.self_flip = group.size() == 1;
      rec.orbit_id = key_str(group[0]);
      for (std::size_t gi = 0; gi < group.size(); ++gi) {
        std::set<std::vector<int>> reps;
        for (VertexSet s : classes.at(group[gi])) reps.insert(orbit_rep(s));
        for (const auto& r : reps) {
          VertexSet s = 0;
          for (int v : r) s |= 1u << v;
          if (face_name(midpoint(s).a) != rec.name) throw InternalError("name differs within a flip group");
          rec.realizations.push_back({vertex_names(s), midpoint(s), measure_tag(s), gi == 1});
        }
      }
      out.records.push_back(std::move(rec));
    }
    std::sort(out.records.begin(), out.records.end(), [](const FaceRecord& x, const FaceRecord& y) {
      return std::tie(x.level, x.name) < std::tie(y.level, y.name);
    });
    // q-Askey labels
    for (const auto& row : appendix::askey_rows())
      for (auto& r : out.records)
        if (r.name == row.name && !r.askey_label) r.askey_label = row.label;
    return out;
  }();
  return S;
}

}  // namespace

const std::vector<VertexLabel>& enumerate_vertices() {
  static const std::vector<VertexLabel> V = build_vertices();
  return V;
}

int vertex_index(const std::string& name) {
  const auto& V = enumerate_vertices();
  for (int i = 0; i < int(V.size()); ++i)
    if (V[i].name == name) return i;
  throw DomainError("unknown vertex label: " + name);
}

int popcount(VertexSet s) { return std::popcount(s); }

std::vector<std::string> vertex_names(VertexSet s) {
  std::vector<std::string> r;
  for (int v : indices(s)) r.push_back(enumerate_vertices()[v].name);
  return r;
}

VertexSet parse_vertex_set(const std::string& csv) {
  VertexSet s = 0;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) s |= 1u << vertex_index(tok);
  return s;
}

ExponentVector midpoint(VertexSet s) {
  const auto& V = enumerate_vertices();
  Alpha a{};
  int n = 0;
  for (int v : indices(s)) {
    for (int i = 0; i < 6; ++i) a[i] += V[v].coords[i];
    ++n;
  }
  if (n == 0) throw DomainError("midpoint of empty vertex set");
  for (auto& x : a) x /= n;
  return {a, zeta_for(a)};
}

VertexSet tile_vertices(const TileId& t) {
  VertexSet s = 0;
  const auto& V = enumerate_vertices();
  for (int v = 0; v < NV; ++v)
    if (in_tile(t, V[v].coords)) s |= 1u << v;
  return s;
}

std::vector<Alpha> brute_force_tile_vertices(const TileId& t) {
  const auto& L = tile_inequalities(t);
  const int m = int(L.size());
  std::set<Alpha> out;
  std::vector<int> pick(5);
  // all 5-subsets of the inequalities, together with the balancing hyperplane
  std::vector<bool> sel(m, false);
  std::fill(sel.begin(), sel.begin() + std::min(5, m), true);
  do {
    std::vector<std::vector<Q>> M;
    for (int i = 0; i < m; ++i)
      if (sel[i]) {
        std::vector<Q> row(L[i].c.begin(), L[i].c.end());
        row.push_back(L[i].b);
        M.push_back(row);
      }
    std::vector<Q> bal(6, Q(1));
    bal.push_back(Q(1));
    M.push_back(bal);
    // Gauss-Jordan on the 6x7 augmented system
    bool singular = false;
    for (int c = 0; c < 6 && !singular; ++c) {
      int piv = -1;
      for (int r = c; r < 6; ++r)
        if (M[r][c] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) {
        singular = true;
        break;
      }
      std::swap(M[c], M[piv]);
      Q pv = M[c][c];
      for (auto& x : M[c]) x /= pv;
      for (int r = 0; r < 6; ++r)
        if (r != c && M[r][c] != 0) {
          Q f = M[r][c];
          for (int j = 0; j < 7; ++j) M[r][j] -= f * M[c][j];
        }
    }
    if (singular) continue;
    Alpha x;
    for (int i = 0; i < 6; ++i) x[i] = M[i][6];
    if (in_tile(t, x)) out.insert(x);
  } while (std::prev_permutation(sel.begin(), sel.end()));
  return {out.begin(), out.end()};
}

const std::vector<Face>& enumerate_faces() {
  static const std::vector<Face> faces = [] {
    const auto& V = enumerate_vertices();
    std::map<VertexSet, std::vector<TileId>> all;
    for (const auto& t : all_tiles()) {
      const auto& L = tile_inequalities(t);
      if (L.size() > 64) throw InternalError("tile with more than 64 inequalities");
      VertexSet vs = tile_vertices(t);
      std::map<int, std::uint64_t> inc;
      for (int v : indices(vs)) {
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < L.size(); ++i)
          if (L[i].eval(V[v].coords) == L[i].b) m |= std::uint64_t(1) << i;
        inc[v] = m;
      }
      std::vector<VertexSet> facets;
      for (std::size_t i = 0; i < L.size(); ++i) {
        VertexSet s = 0;
        for (auto [v, m] : inc)
          if (m >> i & 1u) s |= 1u << v;
        if (s) facets.push_back(s);
      }
      std::set<VertexSet> found{vs};
      std::vector<VertexSet> frontier{vs};
      while (!frontier.empty()) {
        std::vector<VertexSet> next;
        for (VertexSet f : frontier)
          for (VertexSet s : facets) {
            VertexSet x = f & s;
            if (x && found.insert(x).second) next.push_back(x);
          }
        frontier.swap(next);
      }
      std::set<VertexSet> closed;
      for (VertexSet x : found) {
        std::uint64_t T = ~std::uint64_t(0);
        for (int v : indices(x)) T &= inc[v];
        VertexSet y = 0;
        for (auto [v, m] : inc)
          if ((T & m) == T) y |= 1u << v;
        closed.insert(y);
      }
      for (VertexSet x : closed) all[x].push_back(t);
    }
    std::vector<Face> out;
    for (auto& [s, ts] : all) {
      ExponentVector m0 = midpoint(s);
      std::vector<std::vector<Q>> rows;
      for (int v : indices(s)) {
        std::vector<Q> r(6);
        for (int i = 0; i < 6; ++i) r[i] = V[v].coords[i] - m0.a[i];
        rows.push_back(r);
      }
      out.push_back({s, ts, rational_rank(rows)});
    }
    return out;
  }();
  return faces;
}

std::string to_string(MeasureTag t) {
  switch (t) {
    case MeasureTag::NR:
      return "NR";
    case MeasureTag::SB:
      return "SB";
    case MeasureTag::SIGMA:
      return "S";
    case MeasureTag::SIGMA2:
    default:
      return "S2";
  }
}

MeasureTag parse_measure_tag(const std::string& s) {
  if (s == "NR") return MeasureTag::NR;
  if (s == "SB") return MeasureTag::SB;
  if (s == "S") return MeasureTag::SIGMA;
  if (s == "S2") return MeasureTag::SIGMA2;
  throw DomainError("unknown measure tag: " + s);
}

MeasureTag measure_tag(VertexSet s) {
  bool inI = false, inII = false, inIII = false;
  for (const auto& t : all_tiles()) {
    if ((tile_vertices(t) & s) != s) continue;
    inI |= t.kind == TileId::Kind::P_I;
    inII |= t.kind == TileId::Kind::P_II;
    inIII |= t.kind == TileId::Kind::P_III;
  }
  ExponentVector m = midpoint(s);
  int nmin = 0;
  for (const Q& x : m.a) nmin += x == m.zeta;
  if (inI) return MeasureTag::NR;
  if (nmin >= 2 && m.zeta != -H) return MeasureTag::SIGMA2;
  if (inIII && (!inII || popcount(s) == 5)) return MeasureTag::SB;
  return MeasureTag::SIGMA;
}

std::string orbit_key(const ExponentVector& v) { return key_str(key_of(v)); }

const std::vector<FaceRecord>& enumerate_systems() {
  const auto& recs = scheme().records;
  static const bool checked = [&] {
    std::array<int, 7> lev{};
    for (const auto& r : recs) ++lev[r.level];
    const std::array<int, 7> want{0, 1, 5, 7, 12, 10, 3};
    if (recs.size() != 38 || lev != want) throw InternalError("system counts differ from the appendix");
    return true;
  }();
  (void)checked;
  return recs;
}

DegenerationGraph build_graph(const std::vector<FaceRecord>& systems) {
  DegenerationGraph g;
  for (const auto& r : systems) g.nodes[r.name] = r.level;
  const auto& names = scheme().face_names;
  for (const auto& [s, n] : names) {
    if (!g.nodes.count(n)) continue;
    for (int v = 0; v < NV; ++v) {
      if (s >> v & 1u) continue;
      auto it = names.find(s | 1u << v);
      if (it != names.end() && g.nodes.count(it->second)) g.edges.insert({n, it->second});
    }
  }
  return g;
}

std::string as_twin(const std::string& name) { return name.substr(0, name.size() - 2) + "as"; }

bool is_boxed(const DegenerationGraph& g, const std::string& node) {
  return node.size() > 2 && node.substr(node.size() - 2) != "as" && g.edges.count({node, as_twin(node)});
}

std::vector<std::string> figure_nodes(const DegenerationGraph& g) {
  std::vector<std::string> r;
  for (const auto& [n, l] : g.nodes)
    if (n.substr(n.size() - 2) != "as") r.push_back(n);
  return r;
}

AppendixCheck check_appendix() {
  AppendixCheck c;
  const auto& recs = enumerate_systems();
  std::array<int, 7> lev{};
  for (const auto& r : recs) ++lev[r.level];
  c.counts_ok = recs.size() == 38 && lev == std::array<int, 7>{0, 1, 5, 7, 12, 10, 3};

  std::set<std::pair<std::string, std::vector<std::string>>> used;
  for (const auto& row : appendix::golden_rows()) {
    ++c.rows;
    VertexSet s = parse_vertex_set(row.vertices);
    ExponentVector want = parse_exponent_vector(row.midpoint, true);
    std::string tag = to_string(measure_tag(s));
    const FaceRecord* rec = nullptr;
    for (const auto& r : recs)
      if (r.name == row.name) rec = &r;
    std::string where = std::string(row.name) + " {" + row.vertices + "}";
    if (!rec) {
      c.mismatches.push_back(where + ": no such system");
      continue;
    }
    const Realization* hit = nullptr;
    for (const auto& z : rec->realizations)
      if (z.vertices == vertex_names(s)) hit = &z;
    if (!hit) {
      c.mismatches.push_back(where + ": vertex set not among the computed realizations");
      continue;
    }
    std::vector<std::string> errs;
    if (rec->level != row.level) errs.push_back("level");
    if (hit->flipped != (row.column == 'F')) errs.push_back("ordinary/flipped column");
    if (!(hit->midpoint == want)) errs.push_back("midpoint " + hit->midpoint.str());
    if (to_string(hit->measure) != row.measure || tag != row.measure) errs.push_back("measure " + tag);
    if (face_name(want.a) != row.name) errs.push_back("name");
    if (errs.empty()) {
      ++c.matched;
      used.insert({rec->name, hit->vertices});
    } else {
      std::string m = where + ":";
      for (const auto& e : errs) m += " " + e;
      c.mismatches.push_back(m);
    }
  }
  for (const auto& r : recs)
    for (const auto& z : r.realizations)
      if (!used.count({r.name, z.vertices})) {
        std::string v;
        for (const auto& x : z.vertices) v += (v.empty() ? "" : ",") + x;
        c.extra.push_back(r.name + " {" + v + "} " + to_string(z.measure));
      }

  auto g = build_graph(recs);
  std::set<std::pair<std::string, std::string>> want(appendix::figure_edges().begin(),
                                                     appendix::figure_edges().end());
  const auto& boxes = appendix::boxed_nodes();
  auto boxed = [&](const std::string& x) { return std::find(boxes.begin(), boxes.end(), x) != boxes.end(); };
  for (const auto& b : boxes) want.insert({b, as_twin(b)});
  for (const auto& [x, y] : appendix::figure_edges())
    if (boxed(x) && boxed(y)) want.insert({as_twin(x), as_twin(y)});
  c.edges_ok = g.edges == want;
  if (!c.edges_ok) {
    for (const auto& e : g.edges)
      if (!want.count(e)) c.mismatches.push_back("extra edge " + e.first + " -> " + e.second);
    for (const auto& e : want)
      if (!g.edges.count(e)) c.mismatches.push_back("missing edge " + e.first + " -> " + e.second);
  }
  return c;
}

bool AskeyScheme::ok() const {
  if (!missing_edges.empty()) return false;
  std::set<std::string> fracs;
  for (const auto& r : rows) {
    if (!r.gamma_ok || !r.level_ok || r.computed_name != r.table_name) return false;
    fracs.insert(std::to_string(r.a) + "/" + std::to_string(r.b));
  }
  return fracs.size() == 20;
}

AskeyScheme askey_subscheme() {
  AskeyScheme out;
  const auto& recs = enumerate_systems();
  auto g = build_graph(recs);
  std::map<std::string, const AskeyEntry*> by_label;
  for (const auto& row : appendix::askey_rows()) {
    AskeyEntry e;
    e.label = row.label;
    e.midpoint = parse_exponent_vector(row.midpoint, true);
    e.table_name = row.name;
    e.q_askey = row.q_askey;
    e.discrete = row.discrete;
    std::string frac = e.label;
    if (!frac.empty() && frac.back() == '\'') frac.pop_back();
    Q ab = parse_rational(frac);
    e.a = int(std::stoi(frac.substr(0, frac.find('/'))));
    e.b = int(std::stoi(frac.substr(frac.find('/') + 1)));
    e.gamma_ok = e.midpoint.gamma(0) == ab && e.midpoint.gamma(1) == ab;
    ExponentVector v = in_P(e.midpoint) ? e.midpoint : reduce_to_P(e.midpoint).result;
    e.computed_name = face_name(v.a);
    for (const auto& r : recs)
      if (r.name == e.computed_name) e.computed_level = r.level;
    e.level_ok = 2 * e.computed_level == e.b && (e.b - 4) % 2 == 0;
    out.rows.push_back(e);
  }
  for (const auto& r : out.rows) by_label[r.label] = &r;
  for (const auto& [x, y] : appendix::askey_edges()) {
    const AskeyEntry* lo = by_label.at(x);
    const AskeyEntry* hi = by_label.at(y);
    if (lo->b > hi->b) std::swap(lo, hi);
    out.edges.push_back({lo->label, hi->label});
    if (!g.edges.count({lo->computed_name, hi->computed_name})) out.missing_edges.push_back({lo->label, hi->label});
  }
  return out;
}

}  // namespace ehb
