#include "relcay/relcay.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "relcay/error.hpp"

namespace relcay {

ConnectionSet::ConnectionSet(ElementSet set) : set_(std::move(set)) {
  const GroupTable& g = set_.group();
  if (set_.contains(GroupTable::identity()))
    throw ConnectionSetError("connection set contains the identity");
  for (Element x : set_.members())
    if (!set_.contains(g.inv(x)))
      throw ConnectionSetError("connection set is not inverse-closed: " + g.name(x) + " present but " +
                               g.name(g.inv(x)) + " missing");
}

ConnectionSet make_connection_set(const GroupTable& group, const std::vector<Element>& members) {
  return ConnectionSet(ElementSet::from_members(group, members));
}

ConnectionSetEnumerator::ConnectionSetEnumerator(const GroupTable& group) : group_(&group) {
  std::vector<Mask> pairs;
  for (Element x = 1; x < group.order(); ++x) {
    const Element y = group.inv(x);
    if (y == x) {
      orbits_.push_back(bit(x));
    } else if (x < y) {
      pairs.push_back(bit(x) | bit(y));
    }
  }
  involutions_ = static_cast<int>(orbits_.size());
  orbits_.insert(orbits_.end(), pairs.begin(), pairs.end());
  std::sort(orbits_.begin(), orbits_.end(),
            [](Mask a, Mask b) { return lowest(a) < lowest(b); });
}

std::uint64_t ConnectionSetEnumerator::count() const {
  if (orbits_.size() >= 64) return ~std::uint64_t{0};
  return std::uint64_t{1} << orbits_.size();
}

Mask ConnectionSetEnumerator::mask_at(std::uint64_t index) const {
  Mask m = 0;
  for (std::size_t i = 0; i < orbits_.size(); ++i)
    if ((index >> i) & 1u) m |= orbits_[i];
  return m;
}

ConnectionSet ConnectionSetEnumerator::at(std::uint64_t index) const {
  return ConnectionSet(ElementSet(*group_, mask_at(index)));
}

RelCayGraph::RelCayGraph(const GroupTable& group, Subgroup h, ConnectionSet c, std::vector<Mask> adjacency)
    : group_(&group), h_(std::move(h)), c_(std::move(c)), adjacency_(std::move(adjacency)) {}

BitGraph RelCayGraph::bit_graph() const {
  BitGraph g(order());
  g.rows = adjacency_;
  return g;
}

RelCayGraph build_relcay(const GroupTable& group, const Subgroup& h, const ConnectionSet& c) {
  if (&h.group() != &group || &c.group() != &group)
    throw GroupMismatchError("subgroup and connection set must come from " + group.spec());
  if (!h.is_proper()) throw ImproperSubgroupError("H must be a proper subgroup of " + group.spec());
  const int n = group.order();
  const Mask hm = h.mask();
  std::vector<Mask> adj(n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (x == y) continue;
      const bool touches_h = contains(hm, x) || contains(hm, y);
      if (touches_h && c.set().contains(group.mul(group.inv(x), y))) adj[x] |= bit(y);
    }
  }
  return RelCayGraph(group, h, c, std::move(adj));
}

Element left_coset_rep(const GroupTable& group, Mask h, Element x) {
  return lowest(group.left_translate(x, h));
}

Element right_coset_rep(const GroupTable& group, Mask h, Element x) {
  return lowest(group.right_translate(h, x));
}

DegreeProfile degree_profile(const RelCayGraph& graph) {
  const GroupTable& g = graph.group();
  const Mask h = graph.h_mask();
  const Mask c = graph.connection().mask();
  DegreeProfile out;
  std::map<Element, int> by_rep;
  for (Element x = 0; x < g.order(); ++x) {
    const int d = popcount(graph.neighbors(x));
    const int formula = contains(h, x) ? popcount(c) : popcount(g.left_translate(g.inv(x), h) & c);
    if (d != formula)
      throw InternalConsistencyError("degree of " + g.name(x) + " is " + std::to_string(d) +
                                     " but the coset formula gives " + std::to_string(formula));
    const Element rep = right_coset_rep(g, h, x);
    const auto [it, inserted] = by_rep.emplace(rep, d);
    if (!inserted && it->second != d)
      throw InternalConsistencyError("degree is not constant on the right coset of " + g.name(rep));
    out.distinct_valencies.insert(d);
    out.max_degree = std::max(out.max_degree, d);
  }
  out.per_coset.assign(by_rep.begin(), by_rep.end());
  return out;
}

int edge_count(const RelCayGraph& graph) {
  int twice = 0;
  for (Mask r : graph.adjacency()) twice += popcount(r);
  const int h = graph.subgroup().size();
  const int c = graph.connection().size();
  const int hc = popcount(graph.h_mask() & graph.connection().mask());
  const int formula = h * (2 * c - hc);
  if (twice != formula)
    throw InternalConsistencyError("edge count " + std::to_string(twice / 2) + " disagrees with |H|(2|C|-|HnC|)/2 = " +
                                   std::to_string(formula / 2));
  return twice / 2;
}

InducedCayley induced_cayley(const RelCayGraph& graph) {
  InducedCayley out;
  out.vertices = graph.h_mask();
  out.rows.assign(graph.order(), 0);
  for_each_bit(out.vertices, [&](int v) { out.rows[v] = graph.neighbors(v) & out.vertices; });
  return out;
}

BitGraph InducedCayley::compact() const {
  BitGraph full(static_cast<int>(rows.size()));
  full.rows = rows;
  return full.induced(vertices);
}

int InducedCayley::edge_count() const {
  int twice = 0;
  for (Mask r : rows) twice += popcount(r);
  return twice / 2;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

std::string export_dot(const RelCayGraph& graph, const DotOptions& options) {
  const GroupTable& g = graph.group();
  const Mask h = graph.h_mask();
  std::ostringstream out;
  out << "graph \"" << dot_escape(options.graph_name.empty() ? "relcay" : options.graph_name) << "\" {\n";
  out << "  node [shape=circle];\n";

  // Cosets in order of their representative; the H ring comes first.
  std::map<Element, std::vector<Element>> cosets;
  for (Element x = 0; x < g.order(); ++x) cosets[left_coset_rep(g, h, x)].push_back(x);
  std::map<Element, std::pair<int, int>> slot;  // element -> (ring, position)
  int ring = 0;
  for (const auto& [rep, members] : cosets) {
    for (std::size_t i = 0; i < members.size(); ++i) slot[members[i]] = {ring, static_cast<int>(i)};
    ++ring;
  }
  const int k = graph.subgroup().size();

  for (Element x = 0; x < g.order(); ++x) {
    const Element rep = left_coset_rep(g, h, x);
    out << "  v" << x << " [label=\"" << dot_escape(g.name(x)) << "\", coset=\"" << dot_escape(g.name(rep))
        << "\", h=" << (contains(h, x) ? 1 : 0);
    if (contains(h, x)) out << ", style=filled";
    if (options.ring_layout) {
      const auto [r, i] = slot[x];
      const double angle = 2.0 * M_PI * i / k + M_PI / 2.0;
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.3f,%.3f!", (r + 1) * std::cos(angle), (r + 1) * std::sin(angle));
      out << ", pos=\"" << buf << "\"";
    }
    out << "];\n";
  }
  for (Element x = 0; x < g.order(); ++x) {
    for_each_bit(graph.neighbors(x) & ~low_bits(x + 1), [&](int y) {
      const bool gprime = contains(h, x) && contains(h, y);
      out << "  v" << x << " -- v" << y << " [gprime=" << (gprime ? 1 : 0);
      if (gprime) out << ", penwidth=2";
      out << "];\n";
    });
  }
  out << "}\n";
  return out.str();
}

}  // namespace relcay
