#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "vnum/vertex_set.hpp"

namespace vnum {

/// A graph edge {u, v} with u < v (0-based).
using Edge = std::pair<int, int>;

/// A vertex count plus an antichain of nonempty edges.
///
/// Edges are stored in canonical (lexicographic) order so that two clutters
/// compare equal exactly when they have the same edge sets.
class Clutter {
 public:
  Clutter() = default;
  Clutter(int vertex_count, std::vector<VertexSet> edges);

  static Clutter discrete(int vertex_count) { return Clutter(vertex_count, {}); }

  int vertex_count() const noexcept { return n_; }
  const std::vector<VertexSet>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool is_discrete() const noexcept { return edges_.empty(); }
  /// True when every edge has exactly two vertices (a graph).
  bool is_two_uniform() const noexcept;
  VertexSet vertices() const { return VertexSet::full(n_); }
  /// Vertices lying in no edge.
  VertexSet isolated_vertices() const;

  bool operator==(const Clutter&) const = default;

 protected:
  int n_ = 0;
  std::vector<VertexSet> edges_;
};

/// A simple graph: a clutter whose edges all have two elements, plus
/// adjacency masks for fast neighborhood queries.
class Graph : public Clutter {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);
  /// Rejects loops, repeated edges and out-of-range endpoints.
  Graph(int vertex_count, const std::vector<Edge>& edges);

  static Graph from_clutter(const Clutter& c);

  Mask neighbor_mask(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
  VertexSet neighborhood(int v) const { return VertexSet(n_, neighbor_mask(v)); }
  VertexSet closed_neighborhood(int v) const { return neighborhood(v).with(v); }
  int degree(int v) const;
  bool adjacent(int u, int v) const;
  bool has_edge(const Edge& e) const { return adjacent(e.first, e.second); }
  std::vector<Edge> edge_list() const;

  bool operator==(const Graph& o) const { return Clutter::operator==(o); }

 private:
  std::vector<Mask> adj_;
};

/// A derived graph together with the parent index of each of its vertices.
struct Subgraph {
  Graph graph;
  std::vector<int> to_parent;
};

struct SubClutter {
  Clutter clutter;
  std::vector<int> to_parent;
};

// Stable sets, covers and neighborhoods.

bool is_stable(const Clutter& c, const VertexSet& a);
/// N_C(A): vertices t outside A such that {t} together with A contains an edge.
/// Requires A stable.
VertexSet neighbor_set(const Clutter& c, const VertexSet& a);
bool is_vertex_cover(const Clutter& c, const VertexSet& a);
bool is_minimal_vertex_cover(const Clutter& c, const VertexSet& a);

/// Every stable set, in canonical order. Exponential; intended for small inputs.
std::vector<VertexSet> stable_sets(const Clutter& c);
/// Inclusion-maximal stable sets in canonical order.
std::vector<VertexSet> maximal_stable_sets(const Clutter& c);
/// Minimal vertex covers in canonical order.
std::vector<VertexSet> minimal_vertex_covers(const Clutter& c);
/// Stable sets whose neighbor set is a minimal vertex cover. Throws
/// ZeroIdealError on a discrete clutter.
std::vector<VertexSet> family_a(const Clutter& c);

int independence_number(const Clutter& c);
/// Smallest vertex cover, found by branching on uncovered edges (does not go
/// through stable sets).
int cover_number(const Clutter& c);
int independent_domination_number(const Clutter& c);
int domination_number(const Graph& g);

struct VNumberWitness {
  int value = 0;
  /// Lexicographically smallest stable set attaining the minimum.
  VertexSet stable_set;
};

/// v-number of I(C) as min |A| over family_a. 0 when I(C) is prime (every
/// edge is a single vertex). Throws ZeroIdealError on a discrete clutter.
VNumberWitness v_number_witness(const Clutter& c);
inline int v_number_combinatorial(const Clutter& c) { return v_number_witness(c).value; }

bool is_well_covered(const Clutter& c);
bool is_one_well_covered(const Clutter& c);

/// The clutter of minimal vertex covers. Throws ZeroIdealError when discrete.
Clutter blocker(const Clutter& c);

// Derived clutters and graphs. Vertices of a derived structure are re-indexed
// densely; `to_parent` records where each came from.

SubClutter delete_vertex(const Clutter& c, int v);
SubClutter induced_subclutter(const Clutter& c, const VertexSet& a);
Clutter delete_edge(const Clutter& c, const VertexSet& e);
Clutter disjoint_union(const Clutter& a, const Clutter& b);

Graph whisker_graph(const Graph& g);
/// G_v = G minus N[v].
Subgraph delete_closed_neighborhood(const Graph& g, int v);
/// G_e = G minus (N[t_i] and N[t_j]) for an edge e = {t_i, t_j}.
Subgraph delete_edge_neighborhoods(const Graph& g, const Edge& e);
Graph complement(const Graph& g);
Subgraph induced_subgraph(const Graph& g, const VertexSet& a);
Graph disjoint_union(const Graph& a, const Graph& b);
Subgraph delete_vertex(const Graph& g, int v);
Graph delete_edge(const Graph& g, const Edge& e);
std::vector<Subgraph> connected_components(const Graph& g);

// Structural predicates.

bool is_connected(const Graph& g);
bool is_chordal(const Graph& g);
bool is_claw_free(const Graph& g);
bool is_triangle_free(const Graph& g);
/// Triangle-free, and joining any two non-adjacent vertices creates a triangle.
bool is_maximal_triangle_free(const Graph& g);
/// Greatest distance between two vertices; nullopt when disconnected.
std::optional<int> diameter(const Graph& g);

}  // namespace vnum
