#pragma once

// Brute-force graph invariants. Nothing here knows about groups: every
// function reads adjacency words only, so its answers are independent of
// the theorem predicates they are compared against.

#include <optional>
#include <vector>

#include "relcay/bitgraph.hpp"

namespace relcay {

class RelCayGraph;

struct OracleLimits {
  int edge_color_cutoff = 40;  // exact chi' only up to this many edges (max 64)
};

struct InvariantReport {
  int clique_number = 0;
  int independence_number = 0;
  int min_vertex_cover = 0;
  int matching_number = 0;
  int domination_number = 0;
  std::optional<int> edge_cover_number;  // nullopt: some vertex is isolated
  int chromatic_number = 0;
  std::optional<int> edge_chromatic_number;  // nullopt: above the edge cutoff
  std::optional<int> diameter;               // nullopt: disconnected
  int component_count = 0;
  int max_degree = 0;
};

struct StructureFlags {
  bool connected = false;
  bool bipartite = false;
  bool forest = false;
  bool tree = false;
  bool triangle_free = false;
  bool square_subgraph_free = false;
  bool claw_free = false;
  bool regular = false;
  bool semi_regular = false;
};

struct ComponentsAndDiameter {
  std::vector<Mask> components;  // ordered by smallest vertex
  std::optional<int> diameter;
};

Mask maximum_clique(const BitGraph& g);
int clique_number(const BitGraph& g);
int independence_number(const BitGraph& g);
int min_vertex_cover(const BitGraph& g);
int matching_number(const BitGraph& g);
/// Maximum matching as (u, v) pairs with u < v.
std::vector<std::pair<int, int>> maximum_matching(const BitGraph& g);
int domination_number(const BitGraph& g);
std::optional<int> edge_cover_number(const BitGraph& g);
int chromatic_number(const BitGraph& g);
/// Exact chromatic index, or nullopt when the graph has more than `cutoff` edges.
std::optional<int> edge_chromatic_number(const BitGraph& g, int cutoff);
ComponentsAndDiameter diameter_components(const BitGraph& g);
StructureFlags structure_flags(const BitGraph& g);
InvariantReport invariant_report(const BitGraph& g, const OracleLimits& limits = {});

ComponentsAndDiameter diameter_components(const RelCayGraph& g);
StructureFlags structure_flags(const RelCayGraph& g);
InvariantReport invariant_report(const RelCayGraph& g, const OracleLimits& limits = {});

}  // namespace relcay
