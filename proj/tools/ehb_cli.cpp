// ehb: classification, verification and scheme generation for p -> 0 limits of the elliptic
// biorthogonal functions. Exit codes: 0 pass, 1 numeric failure, 2 usage error.
#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "ehb/errors.hpp"
#include "ehb/scheme.hpp"
#include "suites.hpp"

using namespace ehb;

namespace {

struct Config {
  double tol = 1e-8;
  int quad = 512;
  std::uint64_t seed = 7;
};

// Defaults from the JSON file named by EHB_CONFIG; command-line flags override them.
Config load_config() {
  Config c;
  const char* path = std::getenv("EHB_CONFIG");
  if (!path) return c;
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("EHB_CONFIG", std::string("cannot read ") + path);
  auto j = nlohmann::json::parse(in);
  c.tol = j.value("tol", c.tol);
  c.quad = j.value("quad", c.quad);
  c.seed = j.value("seed", c.seed);
  return c;
}

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

int cmd_classify(const std::vector<std::string>& args) {
  if (args.size() != 7) {
    std::cerr << "classify: expected 7 rationals a0 a1 a2 a3 g0 g1 zeta\n";
    return 2;
  }
  ExponentVector v;
  try {
    for (int i = 0; i < 6; ++i) v.a[i] = parse_rational(args[i]);
    v.zeta = parse_rational(args[6]);
  } catch (const std::exception& e) {
    std::cerr << "classify: " << e.what() << " (exact rationals p/q only)\n";
    return 2;
  }
  if (!v.balanced()) {
    std::cerr << "classify: entries must sum to 1, got " << to_string(v.sum()) << "\n";
    return 2;
  }
  Reduction r = reduce_to_P(v);
  std::cout << "input       " << v.str() << "\n";
  std::cout << "reduction   ";
  if (r.word.empty()) std::cout << "identity";
  for (std::size_t i = 0; i < r.word.size(); ++i) std::cout << (i ? " . " : "") << r.word[i].str();
  std::cout << "\n";
  const ExponentVector& w = r.result;
  std::cout << "in P        " << w.str() << "\n";
  const Q z = zeta_for(w.a);
  std::cout << "zeta        " << to_string(z) << " (table convention -zeta = " << to_string(-z) << ")\n";
  for (const FaceSignature& f : face_of(w.a)) {
    std::cout << "tile        " << f.tile.str() << " dim " << f.dim << " tight {";
    for (std::size_t i = 0; i < f.tight.size(); ++i) std::cout << (i ? "," : "") << f.tight[i];
    std::cout << "}\n";
  }
  std::cout << "z-dependent " << (is_z_dependent(w) ? "yes" : "no") << "\n";
  const bool sys = is_system(w.a);
  std::cout << "system      " << (sys ? "true" : "false") << "\n";
  if (sys) std::cout << "name        " << face_name(w.a) << "\n";
  const ExponentVector wz(w.a, z);
  std::cout << "val R_1     " << to_string(rtilde_valuation(wz, 1)) << "\n";
  std::cout << "val norm_1  " << to_string(norm_valuation(wz, 1)) << "\n";
  std::cout << "deficit     " << to_string(valuation_deficit(wz)) << "\n";
  return 0;
}

int verify_discrete(int N, std::uint64_t seed, double tol) {
  auto a = suites::discrete_normalization(20, N, seed);
  std::vector<std::uint64_t> seeds;
  for (int i = 0; i < 10; ++i) seeds.push_back(seed * 100 + i);
  auto m = suites::discrete_biorthogonality(N, std::min(N, 4), seeds);
  bool ok = a.max_err < tol && m.max_offdiag < tol && m.max_diag < tol;
  std::printf("mass      max |<1,1>-1| = %.3e over %d draws (100 digits)\n", a.max_err, a.draws);
  std::printf("          in double %.3e, largest sum |w_k| %.3e\n", a.double_err, a.max_condition);
  std::printf("matrix    max offdiag/diag = %.3e, max diag rel err = %.3e over %d seeds\n", m.max_offdiag,
              m.max_diag, m.cases);
  std::printf("%s (tol %.1e)\n", verdict(ok), tol);
  return ok ? 0 : 1;
}

int verify_continuous(int quad, std::uint64_t seed, double tol) {
  auto c = suites::continuous_normalization(quad, 5, seed);
  auto m = suites::continuous_biorthogonality(quad);
  bool ok = c.max_err < std::max(tol, 1e-6) && c.max_doubling < 1e-8 && m.max_offdiag < tol && m.max_diag < tol;
  std::printf("mass      max |<1,1>-1| = %.3e, doubling residual %.3e, max |t| %.2f, %d nodes\n", c.max_err,
              c.max_doubling, c.max_tmod, quad);
  std::printf("n,m<=1    max offdiag/diag = %.3e, diag rel err = %.3e\n", m.max_offdiag, m.max_diag);
  std::printf("%s\n", verdict(ok));
  return ok ? 0 : 1;
}

int verify_pastro(int nmax, int quad, std::uint64_t seed, double tol) {
  auto r = suites::pastro(nmax, quad, seed);
  bool ok = r.matrix.max_offdiag < tol && r.matrix.max_diag < tol && r.monomial < 1e-13 && r.routes < tol;
  std::printf("matrix    n,m<=%d max offdiag/diag = %.3e, diag rel err = %.3e\n", nmax, r.matrix.max_offdiag,
              r.matrix.max_diag);
  std::printf("B=q       max monomial residual (n<=6) = %.3e\n", r.monomial);
  std::printf("routes    3phi2 vs 2phi1 = %.3e\n", r.routes);
  std::printf("%s (tol %.1e)\n", verdict(ok), tol);
  return ok ? 0 : 1;
}

int verify_limit(const std::string& face, int nmax, std::uint64_t seed) {
  std::vector<std::string> ps{"1e-2", "1e-3", "1e-4"};
  const std::vector<std::string> xp{"1e-16", "1e-18", "1e-20", "1e-22", "1e-24"};
  auto t = suites::limit_table(face, nmax, ps, xp, seed);
  std::printf("face %s, reference %s\n", t.face.c_str(), t.reference.c_str());
  std::printf("%-3s", "n");
  for (const auto& p : t.ps) std::printf(" %12s", ("p=" + p).c_str());
  std::printf(" %14s\n", "extrapolated");
  bool ok = true;
  for (const auto& r : t.rows) {
    std::printf("%-3d", r.n);
    for (double e : r.errors) std::printf(" %12.3e", e);
    if (r.extrapolated >= 0)
      std::printf(" %14.3e", r.extrapolated);
    else
      std::printf(" %14s", "-");
    if (!r.note.empty()) std::printf("  (%s)", r.note.c_str());
    std::printf("\n");
    if (!r.note.empty()) ok = false;
    if (t.reference != "extrapolated limit" && (r.extrapolated < 0 || r.extrapolated > 1e-4)) ok = false;
  }
  std::printf("%s\n", verdict(ok));
  return ok ? 0 : 1;
}

int verify_measures(std::uint64_t seed, double tol) {
  bool ok = true;
  for (const auto& m : suites::measure_normalizations(seed)) {
    std::printf("%-40s |mass - 1| = %.3e\n", m.label.c_str(), m.err);
    ok = ok && m.err < tol;
  }
  for (const auto& f : suites::finite_limits("1e-40", "1e-60", 4, std::hypot(0.3, 0.15), seed)) {
    std::printf("finite %-14s |sum w - 1| = %.3e, weights at p=1e-40 %.3e, limit matrix offdiag %.3e\n",
                f.branch.c_str(), f.mass_err, f.weight_err, f.matrix_off);
    ok = ok && f.mass_err < tol;
  }
  std::printf("%s (tol %.1e)\n", verdict(ok), tol);
  return ok ? 0 : 1;
}

int cmd_scheme(const std::string& format, const std::string& out, bool check, bool askey, bool all) {
  if (check) {
    AppendixCheck c = check_appendix();
    std::printf("rows matched %d/%d, per-level counts %s, figure edges %s\n", c.matched, c.rows,
                c.counts_ok ? "ok" : "differ", c.edges_ok ? "ok" : "differ");
    for (const auto& m : c.mismatches) std::printf("mismatch: %s\n", m.c_str());
    for (const auto& x : c.extra) std::printf("untabulated realization: %s\n", x.c_str());
    std::printf("systems %zu\n", enumerate_systems().size());
    std::printf("%s\n", verdict(c.ok()));
    return c.ok() ? 0 : 1;
  }
  std::string text;
  if (askey) {
    text = emit_askey_tsv(askey_subscheme());
  } else {
    Format f = format == "dot" ? Format::DOT : format == "tsv" ? Format::TSV : Format::JSON;
    const auto& s = enumerate_systems();
    text = emit(s, build_graph(s), f, all);
  }
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream o(out);
    if (!o || !(o << text)) {
      std::cerr << "scheme: cannot write " << out << "\n";
      return 1;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  try {
    cfg = load_config();
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  CLI::App app{"Classification and verification of p -> 0 limits of elliptic biorthogonal functions"};
  app.require_subcommand(1);
  app.add_option("--tol", cfg.tol, "numeric tolerance")->check(CLI::Range(1e-300, 1e-2));
  app.add_option("--quad", cfg.quad, "quadrature nodes")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for random parameter draws");

  std::vector<std::string> vec;
  auto* classify = app.add_subcommand("classify", "classify an exponent vector a0 a1 a2 a3 g0 g1 zeta");
  classify->add_option("vector", vec, "seven exact rationals")->required()->allow_extra_args();

  auto* verify = app.add_subcommand("verify", "run a numeric verification suite");
  verify->require_subcommand(1);
  int N = 5, nmax = 5, lnmax = 4;
  std::string face;
  auto* vd = verify->add_subcommand("elliptic-discrete", "discrete elliptic measure");
  vd->add_option("--N", N, "truncation N")->check(CLI::Range(1, 12));
  auto* vc = verify->add_subcommand("elliptic-continuous", "contour-integral elliptic measure");
  auto* vp = verify->add_subcommand("pastro", "Pastro polynomials");
  vp->add_option("--nmax", nmax, "largest degree")->check(CLI::Range(0, 10));
  auto* vl = verify->add_subcommand("limit", "convergence table of a p -> 0 limit");
  vl->add_option("--face", face, "system name, e.g. 1111pp")->required();
  vl->add_option("--nmax", lnmax, "largest degree")->check(CLI::Range(1, 6));
  auto* vm = verify->add_subcommand("measures", "normalization of the limit measures");
  for (auto* s : {vd, vc, vp, vl, vm}) {
    s->add_option("--seed", cfg.seed, "seed for random parameter draws");
    s->add_option("--tol", cfg.tol, "numeric tolerance")->check(CLI::Range(1e-300, 1e-2));
    s->add_option("--quad", cfg.quad, "quadrature nodes")->check(CLI::PositiveNumber);
  }

  auto* scheme = app.add_subcommand("scheme", "emit the degeneration scheme");
  std::string format = "json", out;
  bool check = false, askey = false, all = false;
  scheme->add_option("--format", format, "json, dot or tsv")->check(CLI::IsMember({"json", "dot", "tsv"}));
  scheme->add_option("--out", out, "output file (default stdout)");
  scheme->add_flag("--check-appendix", check, "compare against the embedded appendix tables");
  scheme->add_flag("--askey", askey, "emit the q-Askey sub-scheme table");
  scheme->add_flag("--all", all, "include the as systems in DOT output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*classify) return cmd_classify(vec);
    if (*scheme) return cmd_scheme(format, out, check, askey, all);
    if (*vd) return verify_discrete(N, cfg.seed, cfg.tol);
    if (*vc) return verify_continuous(cfg.quad, cfg.seed, cfg.tol);
    if (*vp) return verify_pastro(nmax, cfg.quad, cfg.seed, cfg.tol);
    if (*vl) return verify_limit(face, lnmax, cfg.seed);
    if (*vm) return verify_measures(cfg.seed, cfg.tol);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
