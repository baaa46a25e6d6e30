#include <json.hpp>
#include <sstream>

#include "ehb/errors.hpp"
#include "ehb/appendix_data.hpp"
#include "ehb/scheme.hpp"

namespace ehb {

namespace {

using json = nlohmann::json;

// Midpoints are rendered in the table convention, last slot -zeta.
std::string table_midpoint(const ExponentVector& v) {
  ExponentVector w = v;
  w.zeta = -v.zeta;
  return w.str();
}

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : sep) + x;
  return s;
}

std::string suffix(const std::string& n) { return n.substr(n.size() - 2); }

}  // namespace

std::string emit(const std::vector<FaceRecord>& systems, const DegenerationGraph& g, Format f, bool all) {
  std::ostringstream out;
  if (f == Format::JSON) {
    json j;
    j["version"] = 1;
    j["systems"] = json::array();
    for (const auto& r : systems) {
      json s;
      s["name"] = r.name;
      s["level"] = r.level;
      s["orbit_id"] = r.orbit_id;
      s["flip_partner"] = r.self_flip ? json(nullptr) : json(r.name);
      if (r.askey_label) s["askey_label"] = *r.askey_label;
      s["realizations"] = json::array();
      for (const auto& z : r.realizations)
        s["realizations"].push_back({{"vertices", z.vertices},
                                     {"midpoint", table_midpoint(z.midpoint)},
                                     {"measure", to_string(z.measure)},
                                     {"flipped", z.flipped}});
      j["systems"].push_back(s);
    }
    j["edges"] = json::array();
    for (const auto& [a, b] : g.edges) j["edges"].push_back({a, b});
    out << j.dump(2) << "\n";
  } else if (f == Format::DOT) {
    const auto& wrap = [&] {
      std::set<std::pair<std::string, std::string>> w;
      for (const auto& e : appendix::wrap_edges()) w.insert(e);
      return w;
    }();
    auto shown = [&](const std::string& n) { return all || suffix(n) != "as"; };
    out << "digraph degenerations {\n  rankdir=TB;\n";
    std::map<int, std::vector<std::string>> ranks;
    for (const auto& [n, l] : g.nodes)
      if (shown(n)) ranks[l].push_back(n);
    for (const auto& [l, ns] : ranks) {
      out << "  subgraph level" << l << " {\n    rank=same;\n";
      for (const auto& n : ns) {
        std::string shape = suffix(n) == "pp" ? "oval" : is_boxed(g, n) ? "box" : "plaintext";
        out << "    \"" << n << "\" [shape=" << shape << (suffix(n) == "as" ? ", style=dashed" : "") << "];\n";
      }
      out << "  }\n";
    }
    for (const auto& [a, b] : g.edges) {
      if (!shown(a) || !shown(b)) continue;
      out << "  \"" << a << "\" -> \"" << b << "\"";
      if (wrap.count({a, b})) out << " [wrap=true, constraint=false]";
      out << ";\n";
    }
    out << "}\n";
  } else {
    out << "level\tname\tordinary\tflipped\n";
    for (const auto& r : systems) {
      std::vector<std::string> cols[2];
      for (const auto& z : r.realizations)
        cols[z.flipped].push_back(join(z.vertices, ",") + ":" + table_midpoint(z.midpoint) + ":" +
                                  to_string(z.measure));
      out << r.level << "\t" << r.name << "\t" << join(cols[0], " | ") << "\t"
          << (r.self_flip ? "-" : join(cols[1], " | ")) << "\n";
    }
  }
  return out.str();
}

std::string emit_askey_tsv(const AskeyScheme& s) {
  std::ostringstream out;
  out << "label\tmidpoint\tname\tq-Askey\tdiscrete\tlevel\tcheck\n";
  for (const auto& r : s.rows)
    out << "[" << r.label << "]\t" << table_midpoint(r.midpoint) << "\t" << r.computed_name << "\t" << r.q_askey
        << "\t" << r.discrete << "\t" << r.computed_level << "\t"
        << (r.gamma_ok && r.level_ok && r.computed_name == r.table_name ? "ok" : "MISMATCH") << "\n";
  return out.str();
}

std::pair<std::vector<FaceRecord>, DegenerationGraph> parse_json(const std::string& text) {
  json j = json::parse(text);
  std::vector<FaceRecord> recs;
  DegenerationGraph g;
  for (const auto& s : j.at("systems")) {
    FaceRecord r;
    r.name = s.at("name").get<std::string>();
    r.level = s.at("level").get<int>();
    r.orbit_id = s.at("orbit_id").get<std::string>();
    r.self_flip = s.at("flip_partner").is_null();
    if (s.contains("askey_label")) r.askey_label = s.at("askey_label").get<std::string>();
    for (const auto& z : s.at("realizations"))
      r.realizations.push_back({z.at("vertices").get<std::vector<std::string>>(),
                                parse_exponent_vector(z.at("midpoint").get<std::string>(), true),
                                parse_measure_tag(z.at("measure").get<std::string>()),
                                z.at("flipped").get<bool>()});
    g.nodes[r.name] = r.level;
    recs.push_back(std::move(r));
  }
  for (const auto& e : j.at("edges")) g.edges.insert({e.at(0).get<std::string>(), e.at(1).get<std::string>()});
  return {recs, g};
}

}  // namespace ehb
