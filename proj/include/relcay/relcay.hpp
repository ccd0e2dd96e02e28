#pragma once

// Relative Cayley graphs Cay(G,H,C): vertices are the elements of G, and x~y
// when x or y lies in H and x^{-1}y lies in C.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "relcay/bitgraph.hpp"
#include "relcay/group.hpp"

namespace relcay {

/// An inverse-closed subset of G \ {1}.
class ConnectionSet {
 public:
  /// Throws ConnectionSetError if `set` contains 1 or is not inverse-closed.
  explicit ConnectionSet(ElementSet set);

  const ElementSet& set() const { return set_; }
  const GroupTable& group() const { return set_.group(); }
  Mask mask() const { return set_.mask(); }
  int size() const { return set_.size(); }

 private:
  ElementSet set_;
};

ConnectionSet make_connection_set(const GroupTable& group, const std::vector<Element>& members);

/// Indexable enumeration of every inverse-closed subset of G \ {1}.
///
/// Orbits of x -> x^{-1} (involutions and inverse pairs) are ordered by their
/// smallest element; bit i of an index selects orbit i.
class ConnectionSetEnumerator {
 public:
  explicit ConnectionSetEnumerator(const GroupTable& group);

  std::uint64_t count() const;
  ConnectionSet at(std::uint64_t index) const;
  Mask mask_at(std::uint64_t index) const;
  const std::vector<Mask>& orbits() const { return orbits_; }
  int involution_count() const { return involutions_; }
  int pair_count() const { return static_cast<int>(orbits_.size()) - involutions_; }

 private:
  const GroupTable* group_;
  std::vector<Mask> orbits_;
  int involutions_ = 0;
};

class RelCayGraph {
 public:
  RelCayGraph(const GroupTable& group, Subgroup h, ConnectionSet c, std::vector<Mask> adjacency);

  const GroupTable& group() const { return *group_; }
  const Subgroup& subgroup() const { return h_; }
  const ConnectionSet& connection() const { return c_; }
  Mask h_mask() const { return h_.mask(); }
  int order() const { return group_->order(); }
  Mask neighbors(Element x) const { return adjacency_[x]; }
  const std::vector<Mask>& adjacency() const { return adjacency_; }
  BitGraph bit_graph() const;

 private:
  const GroupTable* group_;
  Subgroup h_;
  ConnectionSet c_;
  std::vector<Mask> adjacency_;
};

/// Throws ImproperSubgroupError when H = G and GroupMismatchError when the
/// pieces come from different groups.
RelCayGraph build_relcay(const GroupTable& group, const Subgroup& h, const ConnectionSet& c);

struct DegreeProfile {
  std::vector<std::pair<Element, int>> per_coset;  // (representative of Hx, degree)
  std::set<int> distinct_valencies;
  int max_degree = 0;
};

/// Degrees read from the adjacency. Throws InternalConsistencyError unless
/// they match |C| on H and |x^{-1}H n C| off H, and are constant on each
/// right coset Hx (the formula depends on x only through x^{-1}H). Left
/// cosets xH need not have constant degree when G is nonabelian.
DegreeProfile degree_profile(const RelCayGraph& graph);

/// Edge total from the adjacency, checked against |H|(2|C| - |H n C|)/2.
int edge_count(const RelCayGraph& graph);

/// The subgraph induced on H, which is the Cayley graph Cay(H, H n C).
struct InducedCayley {
  Mask vertices = 0;
  std::vector<Mask> rows;  // indexed by element, rows outside H are empty

  /// Relabelled to 0..|H|-1 in element order.
  BitGraph compact() const;
  int edge_count() const;
};

InducedCayley induced_cayley(const RelCayGraph& graph);

/// Smallest-index representative of the left coset xH.
Element left_coset_rep(const GroupTable& group, Mask h, Element x);
/// Smallest element of Hx.
Element right_coset_rep(const GroupTable& group, Mask h, Element x);

struct DotOptions {
  std::string graph_name;      // defaults to "relcay"
  bool ring_layout = false;    // pin cosets on concentric rings
};

std::string export_dot(const RelCayGraph& graph, const DotOptions& options = {});

}  // namespace relcay
