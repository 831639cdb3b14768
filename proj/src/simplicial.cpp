#include "vnum/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace vnum {

namespace {

std::vector<Mask> maximal_masks(std::vector<Mask> sets) {
  std::sort(sets.begin(), sets.end(), [](Mask a, Mask b) {
    return std::popcount(a) != std::popcount(b) ? std::popcount(a) > std::popcount(b) : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Mask> out;
  for (Mask s : sets)
    if (std::none_of(out.begin(), out.end(), [&](Mask f) { return (s & ~f) == 0; })) out.push_back(s);
  return out;
}

SimplicialComplex from_masks(int n, const std::vector<Mask>& masks) {
  std::vector<VertexSet> facets;
  facets.reserve(masks.size());
  for (Mask m : masks) facets.emplace_back(n, m);
  return SimplicialComplex(n, std::move(facets));
}

IntMatrix boundary_matrix(const std::vector<VertexSet>& lower, const std::vector<VertexSet>& upper) {
  std::unordered_map<Mask, std::size_t> row_of;
  row_of.reserve(lower.size());
  for (std::size_t i = 0; i < lower.size(); ++i) row_of.emplace(lower[i].bits(), i);
  IntMatrix m(lower.size(), upper.size());
  for (std::size_t c = 0; c < upper.size(); ++c) {
    const Mask f = upper[c].bits();
    std::int64_t sign = 1;
    for (Mask r = f; r; r &= r - 1) {
      m(row_of.at(f & ~(r & (~r + 1))), c) = sign;
      sign = -sign;
    }
  }
  return m;
}

}  // namespace

// --- SimplicialComplex -----------------------------------------------------------

SimplicialComplex::SimplicialComplex(int ambient_size, std::vector<VertexSet> facets) : n_(ambient_size) {
  if (ambient_size < 0 || ambient_size > kMaxVertices) throw InputError("ambient size out of range");
  std::vector<Mask> masks;
  masks.reserve(facets.size());
  for (const auto& f : facets) {
    if (f.ambient_size() != ambient_size) throw InputError("facet " + f.to_string() + " has the wrong ambient size");
    masks.push_back(f.bits());
  }
  masks = maximal_masks(std::move(masks));
  std::sort(masks.begin(), masks.end(), lex_less);
  for (Mask m : masks) facets_.emplace_back(n_, m);
}

bool SimplicialComplex::contains(const VertexSet& face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](const VertexSet& f) { return face.is_subset_of(f); });
}

VertexSet SimplicialComplex::vertices() const {
  Mask m = 0;
  for (const auto& f : facets_) m |= f.bits();
  return VertexSet(n_, m);
}

int SimplicialComplex::dimension() const {
  if (is_void()) throw InputError("the void complex has no dimension");
  int d = 0;
  for (const auto& f : facets_) d = std::max(d, f.size());
  return d - 1;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const VertexSet& f) { return f.size() == facets_.front().size(); });
}

bool SimplicialComplex::is_cone() const {
  if (is_void()) return false;
  Mask common = full_mask(n_);
  for (const auto& f : facets_) common &= f.bits();
  return common != 0;
}

std::vector<std::vector<VertexSet>> SimplicialComplex::faces_by_dimension() const {
  if (is_void()) return {};
  std::unordered_set<Mask> seen;
  for (const auto& f : facets_) {
    const Mask full = f.bits();
    // All submasks of the facet, including the facet itself and {}.
    for (Mask s = full;; s = (s - 1) & full) {
      seen.insert(s);
      if (s == 0) break;
    }
  }
  std::vector<std::vector<VertexSet>> out(static_cast<std::size_t>(dimension() + 2));
  for (Mask s : seen) out[static_cast<std::size_t>(std::popcount(s))].emplace_back(n_, s);
  for (auto& level : out) std::sort(level.begin(), level.end());
  return out;
}

SimplicialComplex independence_complex(const Clutter& c) {
  return SimplicialComplex(c.vertex_count(), maximal_stable_sets(c));
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& i) {
  if (!i.is_squarefree()) throw InputError("Stanley-Reisner complex of a non-squarefree ideal");
  const int n = i.ambient_size();
  if (i.is_zero()) return SimplicialComplex::simplex(VertexSet::full(n));
  if (i.is_unit()) return SimplicialComplex::void_complex(n);
  // Maximal faces are complements of the minimal primes.
  std::vector<VertexSet> facets;
  for (const auto& p : associated_primes(i)) facets.push_back(p.variables.complement());
  return SimplicialComplex(n, std::move(facets));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& d, const VertexSet& a) {
  if (a.ambient_size() != d.ambient_size()) throw InputError("vertex set has the wrong ambient size");
  std::vector<Mask> masks;
  masks.reserve(d.facets().size());
  for (const auto& f : d.facets()) masks.push_back(f.bits() & a.bits());
  return from_masks(d.ambient_size(), maximal_masks(std::move(masks)));
}

SimplicialComplex link(const SimplicialComplex& d, const VertexSet& face) {
  if (!d.contains(face)) throw InputError(face.to_string() + " is not a face");
  std::vector<Mask> masks;
  for (const auto& f : d.facets())
    if (face.is_subset_of(f)) masks.push_back(f.bits() & ~face.bits());
  return from_masks(d.ambient_size(), masks);
}

SimplicialComplex deletion(const SimplicialComplex& d, int v) {
  return induced_subcomplex(d, VertexSet::full(d.ambient_size()).without(v));
}

// --- homology --------------------------------------------------------------------

std::size_t HomologyProfile::at(int i) const {
  const auto idx = static_cast<std::size_t>(i + 1);
  return i >= -1 && idx < ranks_.size() ? ranks_[idx] : 0;
}

bool HomologyProfile::vanishes() const {
  return std::all_of(ranks_.begin(), ranks_.end(), [](std::size_t r) { return r == 0; });
}

std::optional<int> HomologyProfile::top() const {
  for (std::size_t idx = ranks_.size(); idx-- > 0;)
    if (ranks_[idx] != 0) return static_cast<int>(idx) - 1;
  return std::nullopt;
}

HomologyProfile reduced_homology_ranks(const SimplicialComplex& d, Field k) {
  const auto faces = d.faces_by_dimension();
  if (faces.empty()) return HomologyProfile{};
  const std::size_t levels = faces.size();
  // boundary_rank[j] = rank of the map from level j to level j-1 (level j
  // holds the (j-1)-faces); level 0 is {} and maps to zero.
  std::vector<std::size_t> boundary_rank(levels + 1, 0);
  for (std::size_t j = 1; j < levels; ++j) boundary_rank[j] = rank(boundary_matrix(faces[j - 1], faces[j]), k);
  std::vector<std::size_t> ranks(levels);
  for (std::size_t j = 0; j < levels; ++j) ranks[j] = faces[j].size() - boundary_rank[j] - boundary_rank[j + 1];
  return HomologyProfile(std::move(ranks));
}

int regularity_hochster(const SimplicialComplex& d, Field k) {
  if (d.is_void()) throw InputError("regularity of the void complex (unit ideal)");
  const Mask verts = d.vertices().bits();
  int reg = 0;
  // Induced subcomplexes only depend on A intersected with the vertex set.
  for (Mask a = verts;; a = (a - 1) & verts) {
    const auto sub = induced_subcomplex(d, VertexSet(d.ambient_size(), a));
    // A cone is acyclic, and H~_{j-1} needs j-1 <= dim.
    if (!sub.is_cone() && sub.dimension() + 1 > reg) {
      if (const auto top = reduced_homology_ranks(sub, k).top()) reg = std::max(reg, *top + 1);
    }
    if (a == 0) break;
  }
  return reg;
}

int regularity_hochster(const MonomialIdeal& i, Field k) {
  if (i.is_zero()) throw ZeroIdealError();
  return regularity_hochster(stanley_reisner_complex(i), k);
}

int regularity_hochster(const Clutter& c, Field k) {
  if (c.is_discrete()) throw ZeroIdealError();
  return regularity_hochster(independence_complex(c), k);
}

// --- Cohen-Macaulay and vertex decomposability -------------------------------------

bool is_cohen_macaulay_reisner(const SimplicialComplex& d, Field k) {
  if (d.is_void()) throw InputError("Cohen-Macaulay test on the void complex");
  // Non-pure complexes fail the criterion at some face; skip the homology.
  if (!d.is_pure()) return false;
  const auto faces = d.faces_by_dimension();
  // Facets have link {{}}, which always passes. Small links first.
  for (std::size_t level = faces.size() - 1; level-- > 0;) {
    for (const auto& f : faces[level]) {
      const auto lk = link(d, f);
      const auto h = reduced_homology_ranks(lk, k);
      const int top = lk.dimension();
      for (int i = -1; i < top; ++i)
        if (h.at(i) != 0) return false;
    }
  }
  return true;
}

namespace {

// Facet list after dropping non-vertices and relabelling vertices by
// decreasing facet degree (ties by index). Equal keys mean isomorphic
// complexes, so a memo hit is always sound; isomorphic complexes may still
// get different keys.
std::vector<Mask> vd_key(const SimplicialComplex& d) {
  const int n = d.ambient_size();
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (const auto& f : d.facets())
    for (int v : f) ++degree[static_cast<std::size_t>(v)];
  std::vector<int> order;
  for (int v = 0; v < n; ++v)
    if (degree[static_cast<std::size_t>(v)] > 0) order.push_back(v);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return degree[static_cast<std::size_t>(a)] > degree[static_cast<std::size_t>(b)];
  });
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < order.size(); ++i) label[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  std::vector<Mask> key;
  key.reserve(d.facets().size() + 1);
  for (const auto& f : d.facets()) {
    Mask m = 0;
    for (int v : f) m |= Mask{1} << label[static_cast<std::size_t>(v)];
    key.push_back(m);
  }
  std::sort(key.begin(), key.end());
  key.push_back(order.size());
  return key;
}

bool vertex_decomposable(const SimplicialComplex& d, std::map<std::vector<Mask>, bool>& memo) {
  if (d.is_void() || d.is_simplex()) return true;
  auto key = vd_key(d);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  bool result = false;
  for (int v : d.vertices()) {
    // v is a shedding vertex when no facet of del(v) lost v; equivalently each
    // facet through v, minus v, sits inside a facet avoiding v.
    const bool shedding = std::all_of(d.facets().begin(), d.facets().end(), [&](const VertexSet& f) {
      if (!f.contains(v)) return true;
      const VertexSet rest = f.without(v);
      return std::any_of(d.facets().begin(), d.facets().end(),
                         [&](const VertexSet& g) { return !g.contains(v) && rest.is_subset_of(g); });
    });
    if (!shedding) continue;
    if (vertex_decomposable(link(d, VertexSet(d.ambient_size()).with(v)), memo) &&
        vertex_decomposable(deletion(d, v), memo)) {
      result = true;
      break;
    }
  }
  memo.emplace(std::move(key), result);
  return result;
}

}  // namespace

bool is_vertex_decomposable(const SimplicialComplex& d) {
  std::map<std::vector<Mask>, bool> memo;
  return vertex_decomposable(d, memo);
}

std::optional<int> one_dim_diameter(const SimplicialComplex& d) {
  if (d.is_void() || d.dimension() != 1 || !d.is_pure())
    throw InputError("one_dim_diameter needs a pure 1-dimensional complex");
  const int n = d.ambient_size();
  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  for (const auto& f : d.facets()) {
    const int a = std::countr_zero(f.bits());
    const int b = 63 - std::countl_zero(f.bits());
    adj[static_cast<std::size_t>(a)] |= Mask{1} << b;
    adj[static_cast<std::size_t>(b)] |= Mask{1} << a;
  }
  const Mask verts = d.vertices().bits();
  int best = 0;
  for (int s : d.vertices()) {
    Mask seen = Mask{1} << s;
    Mask frontier = seen;
    int dist = 0;
    while (true) {
      Mask next = 0;
      for (Mask r = frontier; r; r &= r - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(r))];
      next &= ~seen;
      if (!next) break;
      seen |= next;
      frontier = next;
      ++dist;
    }
    if (seen != verts) return std::nullopt;
    best = std::max(best, dist);
  }
  return best;
}

}  // namespace vnum
