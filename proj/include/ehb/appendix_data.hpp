#pragma once
// Reference tables transcribed from the appendix: golden rows, the q-Askey identification table,
// and the edge lists of both degeneration figures.
#include <string>
#include <utility>
#include <vector>

namespace ehb::appendix {

struct GoldenRow {
  int level;
  const char* name;
  char column;          // 'O' ordinary, 'F' flipped
  const char* vertices; // comma separated labels
  const char* midpoint; // "a0,a1,a2,a3;g0,g1;-zeta"
  const char* measure;  // NR, SB, S, S2
};

const std::vector<GoldenRow>& golden_rows();

struct AskeyRow {
  const char* label;     // "a/b", with a trailing ' for the primed duplicate
  const char* midpoint;  // "a0,a1,a2,a3;g0,g1;-zeta"
  const char* name;
  const char* q_askey;
  const char* discrete;
};

const std::vector<AskeyRow>& askey_rows();

// Undirected edges between labels of the q-Askey figure.
const std::vector<std::pair<std::string, std::string>>& askey_edges();

// Directed edges (higher system, lower system) among the non-"as" systems, as drawn.
const std::vector<std::pair<std::string, std::string>>& figure_edges();

// Nodes drawn as rectangles: an "as" twin hangs underneath each of them.
const std::vector<std::string>& boxed_nodes();

// Edges that cross the figure's left/right margin (the same node drawn twice).
const std::vector<std::pair<std::string, std::string>>& wrap_edges();

}  // namespace ehb::appendix
