#include "vnum/clutter.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>

namespace vnum {

namespace {

constexpr int kMaxEnumerable = 30;

void require_enumerable(int n) {
  if (n > kMaxEnumerable)
    throw InputError("exhaustive enumeration limited to " + std::to_string(kMaxEnumerable) + " vertices");
}

void require_vertex(int n, int v) {
  if (v < 0 || v >= n) throw InputError("vertex index out of range: " + std::to_string(v + 1));
}

// Answers "is A + {v} still stable?" for a stable A.
class StabilityTest {
 public:
  explicit StabilityTest(const Clutter& c) : forbid_(static_cast<std::size_t>(c.vertex_count()), 0),
                                             rest_(static_cast<std::size_t>(c.vertex_count())) {
    for (const auto& e : c.edges()) {
      for (int v : e) {
        const Mask others = e.bits() & ~(Mask{1} << v);
        if (std::popcount(others) == 1)
          forbid_[static_cast<std::size_t>(v)] |= others;
        else
          rest_[static_cast<std::size_t>(v)].push_back(others);
      }
    }
  }

  bool can_add(Mask a, int v) const {
    const auto i = static_cast<std::size_t>(v);
    if (forbid_[i] & a) return false;
    for (Mask m : rest_[i])
      if ((m & ~a) == 0) return false;
    return true;
  }

 private:
  std::vector<Mask> forbid_;
  std::vector<std::vector<Mask>> rest_;
};

// Visits every stable set containing `a` and extended only by vertices >= start.
template <typename Fn>
void visit_stable(const StabilityTest& st, int n, Mask a, int start, int max_size, Fn& fn) {
  fn(a);
  if (std::popcount(a) >= max_size) return;
  for (int v = start; v < n; ++v)
    if (st.can_add(a, v)) visit_stable(st, n, a | (Mask{1} << v), v + 1, max_size, fn);
}

template <typename Fn>
void for_each_stable_set(const Clutter& c, Fn&& fn, int max_size = kMaxVertices) {
  require_enumerable(c.vertex_count());
  const StabilityTest st(c);
  visit_stable(st, c.vertex_count(), Mask{0}, 0, max_size, fn);
}

bool is_maximal(const StabilityTest& st, int n, Mask a) {
  for (int v = 0; v < n; ++v)
    if (!((a >> v) & 1U) && st.can_add(a, v)) return false;
  return true;
}

void sort_canonical(std::vector<VertexSet>& sets) { std::sort(sets.begin(), sets.end()); }

std::vector<Mask> adjacency_of(const Clutter& c) {
  std::vector<Mask> adj(static_cast<std::size_t>(c.vertex_count()), 0);
  for (const auto& e : c.edges()) {
    const int u = std::countr_zero(e.bits());
    const int v = 63 - std::countl_zero(e.bits());
    adj[static_cast<std::size_t>(u)] |= Mask{1} << v;
    adj[static_cast<std::size_t>(v)] |= Mask{1} << u;
  }
  return adj;
}

// Maximum independent set size of the graph restricted to `p`.
int mis_size(const std::vector<Mask>& adj, Mask p) {
  if (p == 0) return 0;
  int best_v = -1;
  int best_deg = -1;
  for (Mask r = p; r; r &= r - 1) {
    const int v = std::countr_zero(r);
    const int d = std::popcount(adj[static_cast<std::size_t>(v)] & p);
    if (d > best_deg) {
      best_deg = d;
      best_v = v;
    }
    if (d == 0) return 1 + mis_size(adj, p & ~(Mask{1} << v));
  }
  const Mask bit = Mask{1} << best_v;
  const int with_v = 1 + mis_size(adj, p & ~(bit | adj[static_cast<std::size_t>(best_v)]));
  const int without_v = mis_size(adj, p & ~bit);
  return std::max(with_v, without_v);
}

// Bron-Kerbosch with pivoting on the complement: enumerates maximal independent sets.
void bron_kerbosch(const std::vector<Mask>& adj, Mask r, Mask p, Mask x, std::vector<Mask>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  // Pivot u maximizing |P minus N[u]|, i.e. the candidates it excludes.
  int pivot = -1;
  int best = -1;
  for (Mask q = p | x; q; q &= q - 1) {
    const int u = std::countr_zero(q);
    const Mask nonadj = p & ~adj[static_cast<std::size_t>(u)] & ~(Mask{1} << u);
    const int cnt = std::popcount(nonadj);
    if (cnt > best) {
      best = cnt;
      pivot = u;
    }
  }
  // Branch on candidates not independent of the pivot: the pivot itself and its neighbors.
  Mask branch = p & (adj[static_cast<std::size_t>(pivot)] | (Mask{1} << pivot));
  for (; branch; branch &= branch - 1) {
    const int v = std::countr_zero(branch);
    const Mask bit = Mask{1} << v;
    const Mask keep = ~(adj[static_cast<std::size_t>(v)] | bit);
    bron_kerbosch(adj, r | bit, p & keep, x & keep, out);
    p &= ~bit;
    x |= bit;
  }
}

int min_cover(const std::vector<VertexSet>& edges, Mask cover, int size, int best) {
  if (size >= best) return best;
  const VertexSet* open = nullptr;
  for (const auto& e : edges)
    if ((e.bits() & cover) == 0) {
      if (open == nullptr || e.size() < open->size()) open = &e;
    }
  if (open == nullptr) return size;
  for (int v : *open) best = min_cover(edges, cover | (Mask{1} << v), size + 1, best);
  return best;
}

int min_dominating(const std::vector<Mask>& closed, Mask full, Mask dominated, int size, int best) {
  if (dominated == full) return std::min(size, best);
  if (size + 1 >= best) return best;
  const int u = std::countr_zero(full & ~dominated);
  for (Mask cand = closed[static_cast<std::size_t>(u)]; cand; cand &= cand - 1) {
    const int v = std::countr_zero(cand);
    best = min_dominating(closed, full, dominated | closed[static_cast<std::size_t>(v)], size + 1, best);
  }
  return best;
}

Graph graph_from_adjacency(int n, const std::vector<Mask>& adj) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (Mask r = adj[static_cast<std::size_t>(u)] & ~full_mask(u + 1); r; r &= r - 1)
      edges.emplace_back(u, std::countr_zero(r));
  return Graph(n, edges);
}

}  // namespace

// --- Clutter -----------------------------------------------------------------

Clutter::Clutter(int vertex_count, std::vector<VertexSet> edges) : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 0 || n_ > kMaxVertices) throw InputError("vertex count out of range: " + std::to_string(n_));
  for (const auto& e : edges_) {
    if (e.ambient_size() != n_) throw InputError("edge " + e.to_string() + " has the wrong ambient size");
    if (e.empty()) throw InputError("empty edge");
  }
  sort_canonical(edges_);
  for (std::size_t i = 0; i < edges_.size(); ++i)
    for (std::size_t j = 0; j < edges_.size(); ++j)
      if (i != j && edges_[i].is_subset_of(edges_[j]))
        throw InputError("antichain violation: " + edges_[i].to_string() + " is contained in " +
                         edges_[j].to_string());
}

bool Clutter::is_two_uniform() const noexcept {
  return std::all_of(edges_.begin(), edges_.end(), [](const VertexSet& e) { return e.size() == 2; });
}

VertexSet Clutter::isolated_vertices() const {
  Mask covered = 0;
  for (const auto& e : edges_) covered |= e.bits();
  return VertexSet(n_, full_mask(n_) & ~covered);
}

// --- Graph -------------------------------------------------------------------

Graph::Graph(int vertex_count) : Graph(vertex_count, std::vector<Edge>{}) {}

Graph::Graph(int vertex_count, const std::vector<Edge>& edges) {
  if (vertex_count < 0 || vertex_count > kMaxVertices)
    throw InputError("vertex count out of range: " + std::to_string(vertex_count));
  n_ = vertex_count;
  adj_.assign(static_cast<std::size_t>(n_), 0);
  for (auto [u, v] : edges) {
    require_vertex(n_, u);
    require_vertex(n_, v);
    if (u == v) throw InputError("loop at vertex t" + std::to_string(u + 1));
    if ((adj_[static_cast<std::size_t>(u)] >> v) & 1U)
      throw InputError("duplicate edge {t" + std::to_string(std::min(u, v) + 1) + ",t" +
                       std::to_string(std::max(u, v) + 1) + "}");
    adj_[static_cast<std::size_t>(u)] |= Mask{1} << v;
    adj_[static_cast<std::size_t>(v)] |= Mask{1} << u;
    edges_.push_back(VertexSet(n_, (Mask{1} << u) | (Mask{1} << v)));
  }
  sort_canonical(edges_);
}

Graph Graph::from_clutter(const Clutter& c) {
  if (!c.is_two_uniform()) throw InputError("clutter is not a graph: some edge does not have two vertices");
  std::vector<Edge> edges;
  for (const auto& e : c.edges()) {
    const auto m = e.members();
    edges.emplace_back(m[0], m[1]);
  }
  return Graph(c.vertex_count(), edges);
}

int Graph::degree(int v) const { return std::popcount(neighbor_mask(v)); }

bool Graph::adjacent(int u, int v) const {
  require_vertex(n_, u);
  require_vertex(n_, v);
  return (adj_[static_cast<std::size_t>(u)] >> v) & 1U;
}

std::vector<Edge> Graph::edge_list() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) {
    const auto m = e.members();
    out.emplace_back(m[0], m[1]);
  }
  return out;
}

// --- stable sets and covers ----------------------------------------------------

bool is_stable(const Clutter& c, const VertexSet& a) {
  if (a.ambient_size() != c.vertex_count()) throw InputError("vertex set and clutter have different ambients");
  return std::none_of(c.edges().begin(), c.edges().end(), [&](const VertexSet& e) { return e.is_subset_of(a); });
}

VertexSet neighbor_set(const Clutter& c, const VertexSet& a) {
  if (!is_stable(c, a)) throw InputError("neighbor set requires a stable set, got " + a.to_string());
  Mask out = 0;
  for (const auto& e : c.edges()) {
    const Mask rest = e.bits() & ~a.bits();
    if (std::popcount(rest) == 1) out |= rest;
  }
  return VertexSet(c.vertex_count(), out);
}

bool is_vertex_cover(const Clutter& c, const VertexSet& a) {
  if (a.ambient_size() != c.vertex_count()) throw InputError("vertex set and clutter have different ambients");
  return std::all_of(c.edges().begin(), c.edges().end(), [&](const VertexSet& e) { return e.intersects(a); });
}

bool is_minimal_vertex_cover(const Clutter& c, const VertexSet& a) {
  if (!is_vertex_cover(c, a)) return false;
  // Covers are closed upwards, so checking single-vertex removals suffices.
  for (int v : a)
    if (is_vertex_cover(c, a.without(v))) return false;
  return true;
}

std::vector<VertexSet> stable_sets(const Clutter& c) {
  std::vector<VertexSet> out;
  const int n = c.vertex_count();
  for_each_stable_set(c, [&](Mask a) { out.emplace_back(n, a); });
  sort_canonical(out);
  return out;
}

std::vector<VertexSet> maximal_stable_sets(const Clutter& c) {
  const int n = c.vertex_count();
  require_enumerable(n);
  std::vector<Mask> found;
  if (c.is_two_uniform()) {
    bron_kerbosch(adjacency_of(c), 0, full_mask(n), 0, found);
  } else {
    const StabilityTest st(c);
    for_each_stable_set(c, [&](Mask a) {
      if (is_maximal(st, n, a)) found.push_back(a);
    });
  }
  std::vector<VertexSet> out;
  out.reserve(found.size());
  for (Mask m : found) out.emplace_back(n, m);
  sort_canonical(out);
  return out;
}

std::vector<VertexSet> minimal_vertex_covers(const Clutter& c) {
  std::vector<VertexSet> out;
  for (const auto& a : maximal_stable_sets(c)) out.push_back(a.complement());
  sort_canonical(out);
  return out;
}

std::vector<VertexSet> family_a(const Clutter& c) {
  if (c.is_discrete()) throw ZeroIdealError();
  std::vector<VertexSet> out;
  const int n = c.vertex_count();
  for_each_stable_set(c, [&](Mask a) {
    const VertexSet s(n, a);
    if (is_minimal_vertex_cover(c, neighbor_set(c, s))) out.push_back(s);
  });
  sort_canonical(out);
  return out;
}

int independence_number(const Clutter& c) {
  require_enumerable(c.vertex_count());
  if (c.is_two_uniform()) return mis_size(adjacency_of(c), full_mask(c.vertex_count()));
  int best = 0;
  for_each_stable_set(c, [&](Mask a) { best = std::max(best, std::popcount(a)); });
  return best;
}

int cover_number(const Clutter& c) {
  return min_cover(c.edges(), 0, 0, std::numeric_limits<int>::max());
}

int independent_domination_number(const Clutter& c) {
  int best = std::numeric_limits<int>::max();
  for (const auto& a : maximal_stable_sets(c)) best = std::min(best, a.size());
  return best;
}

int domination_number(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  std::vector<Mask> closed(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) closed[static_cast<std::size_t>(v)] = g.neighbor_mask(v) | (Mask{1} << v);
  return min_dominating(closed, full_mask(n), 0, 0, n + 1);
}

VNumberWitness v_number_witness(const Clutter& c) {
  if (c.is_discrete()) throw ZeroIdealError();
  const int n = c.vertex_count();
  if (std::all_of(c.edges().begin(), c.edges().end(), [](const VertexSet& e) { return e.size() == 1; }))
    return {0, VertexSet(n)};
  // Iterative deepening on |A|: the first size with a qualifying A is the v-number.
  for (int k = 1; k <= n; ++k) {
    std::optional<VertexSet> best;
    for_each_stable_set(
        c,
        [&](Mask a) {
          if (std::popcount(a) != k) return;
          const VertexSet s(n, a);
          if ((!best || s < *best) && is_minimal_vertex_cover(c, neighbor_set(c, s))) best = s;
        },
        k);
    if (best) return {k, *best};
  }
  throw ConsistencyError("no stable set has a minimal vertex cover as neighbor set");
}

bool is_well_covered(const Clutter& c) {
  const auto sets = maximal_stable_sets(c);
  return std::all_of(sets.begin(), sets.end(), [&](const VertexSet& a) { return a.size() == sets.front().size(); });
}

bool is_one_well_covered(const Clutter& c) {
  if (!is_well_covered(c)) return false;
  for (int v = 0; v < c.vertex_count(); ++v)
    if (!is_well_covered(delete_vertex(c, v).clutter)) return false;
  return true;
}

Clutter blocker(const Clutter& c) {
  if (c.is_discrete()) throw ZeroIdealError();
  return Clutter(c.vertex_count(), minimal_vertex_covers(c));
}

// --- derived structures -------------------------------------------------------

SubClutter induced_subclutter(const Clutter& c, const VertexSet& a) {
  if (a.ambient_size() != c.vertex_count()) throw InputError("vertex set and clutter have different ambients");
  const auto keep = a.members();
  std::vector<int> to_child(static_cast<std::size_t>(c.vertex_count()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) to_child[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
  const int k = static_cast<int>(keep.size());
  std::vector<VertexSet> edges;
  for (const auto& e : c.edges()) {
    if (!e.is_subset_of(a)) continue;
    VertexSet mapped(k);
    for (int v : e) mapped = mapped.with(to_child[static_cast<std::size_t>(v)]);
    edges.push_back(mapped);
  }
  return {Clutter(k, std::move(edges)), keep};
}

SubClutter delete_vertex(const Clutter& c, int v) {
  require_vertex(c.vertex_count(), v);
  return induced_subclutter(c, c.vertices().without(v));
}

Clutter delete_edge(const Clutter& c, const VertexSet& e) {
  std::vector<VertexSet> edges;
  bool found = false;
  for (const auto& f : c.edges()) {
    if (f == e)
      found = true;
    else
      edges.push_back(f);
  }
  if (!found) throw InputError("edge " + e.to_string() + " is not in the clutter");
  return Clutter(c.vertex_count(), std::move(edges));
}

Clutter disjoint_union(const Clutter& a, const Clutter& b) {
  const int n = a.vertex_count() + b.vertex_count();
  std::vector<VertexSet> edges;
  for (const auto& e : a.edges()) edges.emplace_back(n, e.bits());
  for (const auto& e : b.edges()) edges.emplace_back(n, e.bits() << a.vertex_count());
  return Clutter(n, std::move(edges));
}

Graph whisker_graph(const Graph& g) {
  const int n = g.vertex_count();
  auto edges = g.edge_list();
  for (int v = 0; v < n; ++v) edges.emplace_back(v, n + v);
  return Graph(2 * n, edges);
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& a) {
  auto sub = induced_subclutter(g, a);
  return {Graph::from_clutter(sub.clutter), std::move(sub.to_parent)};
}

Subgraph delete_closed_neighborhood(const Graph& g, int v) {
  require_vertex(g.vertex_count(), v);
  return induced_subgraph(g, g.closed_neighborhood(v).complement());
}

Subgraph delete_edge_neighborhoods(const Graph& g, const Edge& e) {
  require_vertex(g.vertex_count(), e.first);
  require_vertex(g.vertex_count(), e.second);
  if (!g.has_edge(e))
    throw InputError("{t" + std::to_string(e.first + 1) + ",t" + std::to_string(e.second + 1) + "} is not an edge");
  return induced_subgraph(g, (g.closed_neighborhood(e.first) | g.closed_neighborhood(e.second)).complement());
}

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Mask> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    adj[static_cast<std::size_t>(v)] = full_mask(n) & ~g.neighbor_mask(v) & ~(Mask{1} << v);
  return graph_from_adjacency(n, adj);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  return Graph::from_clutter(disjoint_union(static_cast<const Clutter&>(a), static_cast<const Clutter&>(b)));
}

Subgraph delete_vertex(const Graph& g, int v) {
  require_vertex(g.vertex_count(), v);
  return induced_subgraph(g, g.vertices().without(v));
}

Graph delete_edge(const Graph& g, const Edge& e) {
  require_vertex(g.vertex_count(), e.first);
  require_vertex(g.vertex_count(), e.second);
  return Graph::from_clutter(
      delete_edge(static_cast<const Clutter&>(g),
                  VertexSet(g.vertex_count(), (Mask{1} << e.first) | (Mask{1} << e.second))));
}

std::vector<Subgraph> connected_components(const Graph& g) {
  std::vector<Subgraph> out;
  Mask unseen = full_mask(g.vertex_count());
  while (unseen) {
    Mask comp = unseen & (~unseen + 1);
    Mask frontier = comp;
    while (frontier) {
      Mask next = 0;
      for (Mask r = frontier; r; r &= r - 1) next |= g.neighbor_mask(std::countr_zero(r));
      frontier = next & ~comp;
      comp |= next;
    }
    unseen &= ~comp;
    out.push_back(induced_subgraph(g, VertexSet(g.vertex_count(), comp)));
  }
  return out;
}

// --- predicates ----------------------------------------------------------------

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_chordal(const Graph& g) {
  const int n = g.vertex_count();
  // Maximum cardinality search; `order[i]` is the i-th visited vertex.
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<int> position(static_cast<std::size_t>(n), -1);
  std::vector<int> order;
  Mask visited = 0;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!((visited >> v) & 1U) && (pick < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(pick)]))
        pick = v;
    visited |= Mask{1} << pick;
    position[static_cast<std::size_t>(pick)] = step;
    order.push_back(pick);
    for (Mask r = g.neighbor_mask(pick) & ~visited; r; r &= r - 1) ++weight[static_cast<std::size_t>(std::countr_zero(r))];
  }
  // The reverse MCS order is a perfect elimination ordering iff g is chordal.
  Mask earlier = 0;
  for (int v : order) {
    const Mask back = g.neighbor_mask(v) & earlier;
    if (back) {
      int parent = -1;
      for (Mask r = back; r; r &= r - 1) {
        const int u = std::countr_zero(r);
        if (parent < 0 || position[static_cast<std::size_t>(u)] > position[static_cast<std::size_t>(parent)]) parent = u;
      }
      const Mask rest = back & ~(Mask{1} << parent);
      if (rest & ~g.neighbor_mask(parent)) return false;
    }
    earlier |= Mask{1} << v;
  }
  return true;
}

bool is_claw_free(const Graph& g) {
  const auto adj = adjacency_of(g);
  for (int v = 0; v < g.vertex_count(); ++v) {
    const Mask nb = adj[static_cast<std::size_t>(v)];
    if (std::popcount(nb) < 3) continue;
    if (mis_size(adj, nb) >= 3) return false;
  }
  return true;
}

bool is_triangle_free(const Graph& g) {
  for (const auto& [u, v] : g.edge_list())
    if (g.neighbor_mask(u) & g.neighbor_mask(v)) return false;
  return true;
}

bool is_maximal_triangle_free(const Graph& g) {
  if (!is_triangle_free(g)) return false;
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v) && (g.neighbor_mask(u) & g.neighbor_mask(v)) == 0) return false;
  return true;
}

std::optional<int> diameter(const Graph& g) {
  const int n = g.vertex_count();
  int diam = 0;
  for (int s = 0; s < n; ++s) {
    Mask seen = Mask{1} << s;
    Mask frontier = seen;
    int dist = 0;
    while (true) {
      Mask next = 0;
      for (Mask r = frontier; r; r &= r - 1) next |= g.neighbor_mask(std::countr_zero(r));
      next &= ~seen;
      if (!next) break;
      seen |= next;
      frontier = next;
      ++dist;
    }
    if (seen != full_mask(n)) return std::nullopt;
    diam = std::max(diam, dist);
  }
  return diam;
}

}  // namespace vnum
