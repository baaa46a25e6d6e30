#pragma once
// Face enumeration of the P0 tiling, system naming and grouping, and the degeneration graph.
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ehb/polytope.hpp"

namespace ehb {

struct VertexLabel {
  enum class Kind { D, E, F, G, H };
  Kind kind;
  int i = -1, j = -1;  // d_i, e_i, f_ij, g_ij
  std::string name;    // "d3", "f01", "h01", ...
  Alpha coords;
  Q zeta;              // zeta_for(coords)
};

// The 21 vertices in the fixed order d3 d2 d1 d0 e1 e0 f01 f02 f12 f03 f13 f23 g00 g10 g20 g30 g01
// g11 g21 g31 h01. A VertexSet is a bitmask over this order.
const std::vector<VertexLabel>& enumerate_vertices();
int vertex_index(const std::string& name);

using VertexSet = std::uint32_t;

std::vector<std::string> vertex_names(VertexSet s);  // ascending in the fixed order
VertexSet parse_vertex_set(const std::string& csv);
ExponentVector midpoint(VertexSet s);  // mean of the vertex coordinates, zeta = zeta_for(mean)
int popcount(VertexSet s);

VertexSet tile_vertices(const TileId& t);
// Independent check: all basic feasible solutions of the tile's inequality system.
std::vector<Alpha> brute_force_tile_vertices(const TileId& t);

struct Face {
  VertexSet vertices;
  std::vector<TileId> tiles;  // tiles having this as a face
  int dim;
};

const std::vector<Face>& enumerate_faces();  // every face of every tile, deduplicated

enum class MeasureTag { NR, SB, SIGMA, SIGMA2 };
std::string to_string(MeasureTag t);  // "NR", "SB", "S", "S2"
MeasureTag parse_measure_tag(const std::string& s);

// Measure type attached to a face by its position in the tiling.
MeasureTag measure_tag(VertexSet s);

struct Realization {
  std::vector<std::string> vertices;  // canonical S4 x S2 representative
  ExponentVector midpoint;
  MeasureTag measure;
  bool flipped = false;
  bool operator==(const Realization&) const = default;
};

struct FaceRecord {
  std::string name;
  int level = 0;
  std::vector<Realization> realizations;  // ordinary first
  bool self_flip = false;                  // no separate flipped realizations
  std::string orbit_id;                    // canonical key of the ordinary class
  std::optional<std::string> askey_label;  // first q-Askey label naming this system
  bool operator==(const FaceRecord&) const = default;
};

// Canonical translation/permutation/zeta-reflection key of an exponent vector.
std::string orbit_key(const ExponentVector& v);

const std::vector<FaceRecord>& enumerate_systems();

struct DegenerationGraph {
  std::map<std::string, int> nodes;                    // name -> level
  std::set<std::pair<std::string, std::string>> edges;  // (higher, lower): level grows by one
  bool operator==(const DegenerationGraph&) const = default;
};

DegenerationGraph build_graph(const std::vector<FaceRecord>& systems);

// Nodes of the figure drawn without an "as" suffix. boxed(x) iff x -> x's "as" twin is an edge.
std::vector<std::string> figure_nodes(const DegenerationGraph& g);
bool is_boxed(const DegenerationGraph& g, const std::string& node);
std::string as_twin(const std::string& name);

struct AppendixCheck {
  int rows = 0, matched = 0;
  std::vector<std::string> mismatches;
  std::vector<std::string> extra;  // computed realizations with no table row
  bool counts_ok = false;
  bool edges_ok = false;
  bool ok() const { return matched == rows && mismatches.empty() && counts_ok && edges_ok; }
};

AppendixCheck check_appendix();

struct AskeyEntry {
  std::string label;
  ExponentVector midpoint;  // as tabulated
  std::string table_name, computed_name, q_askey, discrete;
  int a = 0, b = 0;
  int computed_level = 0;   // level of the computed system
  bool gamma_ok = false;    // gamma_0 = gamma_1 = a/b
  bool level_ok = false;    // computed level = b/2, i.e. (b-4)/2 below the top
};

struct AskeyScheme {
  std::vector<AskeyEntry> rows;
  std::vector<std::pair<std::string, std::string>> edges;  // label pairs, lower b first
  std::vector<std::pair<std::string, std::string>> missing_edges;
  bool ok() const;
};

AskeyScheme askey_subscheme();

// Serialization. JSON keys are sorted; rationals render as "p/q".
enum class Format { JSON, DOT, TSV };
std::string emit(const std::vector<FaceRecord>& systems, const DegenerationGraph& g, Format f, bool all = false);
std::string emit_askey_tsv(const AskeyScheme& s);
std::pair<std::vector<FaceRecord>, DegenerationGraph> parse_json(const std::string& text);

}  // namespace ehb
