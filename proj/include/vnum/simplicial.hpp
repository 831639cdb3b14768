#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "vnum/clutter.hpp"
#include "vnum/exact_rank.hpp"
#include "vnum/monomial.hpp"
#include "vnum/vertex_set.hpp"

namespace vnum {

/// A simplicial complex on ambient vertices {0..s-1}, stored by its facets.
///
/// An ambient vertex need not be a face. With no facets the complex is void
/// (no faces at all); with the single facet {} it is the irrelevant complex {{}}.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Keeps the inclusion-maximal members of `facets`.
  SimplicialComplex(int ambient_size, std::vector<VertexSet> facets);

  static SimplicialComplex void_complex(int ambient_size) { return SimplicialComplex(ambient_size, {}); }
  static SimplicialComplex irrelevant(int ambient_size) { return SimplicialComplex(ambient_size, {VertexSet(ambient_size)}); }
  static SimplicialComplex simplex(const VertexSet& v) { return SimplicialComplex(v.ambient_size(), {v}); }

  int ambient_size() const noexcept { return n_; }
  const std::vector<VertexSet>& facets() const noexcept { return facets_; }
  bool is_void() const noexcept { return facets_.empty(); }
  bool is_simplex() const noexcept { return facets_.size() == 1; }
  bool contains(const VertexSet& face) const;
  /// Vertices v with {v} a face.
  VertexSet vertices() const;
  /// Largest facet size minus one; -1 for {{}}. Throws on the void complex.
  int dimension() const;
  bool is_pure() const;
  /// Nonvoid and some vertex lies in every facet.
  bool is_cone() const;

  /// Faces grouped by dimension: result[d + 1] lists the d-faces in
  /// canonical order, for d = -1 .. dimension().
  std::vector<std::vector<VertexSet>> faces_by_dimension() const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> facets_;
};

SimplicialComplex independence_complex(const Clutter& c);
/// The complex whose faces are the squarefree monomials outside `i`.
/// Variables lying in `i` are simply not faces.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& i);

SimplicialComplex induced_subcomplex(const SimplicialComplex& d, const VertexSet& a);
/// lk(F) = {H : H and F disjoint, H union F a face}. Throws if F is not a face.
SimplicialComplex link(const SimplicialComplex& d, const VertexSet& face);
SimplicialComplex deletion(const SimplicialComplex& d, int v);

/// Reduced homology ranks, indexed from dimension -1.
class HomologyProfile {
 public:
  HomologyProfile() = default;
  explicit HomologyProfile(std::vector<std::size_t> ranks) : ranks_(std::move(ranks)) {}

  /// dim H~_i; zero outside the stored range.
  std::size_t at(int i) const;
  /// ranks()[i + 1] = dim H~_i.
  const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }
  bool vanishes() const;
  /// Largest i with H~_i nonzero.
  std::optional<int> top() const;

  bool operator==(const HomologyProfile&) const = default;

 private:
  std::vector<std::size_t> ranks_;
};

HomologyProfile reduced_homology_ranks(const SimplicialComplex& d, Field k);

/// max{ j : H~_{j-1}(d[A]) != 0 for some A }, the regularity of the
/// Stanley-Reisner ring. A = {} contributes 0.
int regularity_hochster(const SimplicialComplex& d, Field k);
int regularity_hochster(const MonomialIdeal& i, Field k);
int regularity_hochster(const Clutter& c, Field k);

/// Reisner's criterion. Throws on the void complex.
bool is_cohen_macaulay_reisner(const SimplicialComplex& d, Field k);

bool is_vertex_decomposable(const SimplicialComplex& d);

/// Diameter of the graph formed by the edges of a pure 1-dimensional complex;
/// nullopt when disconnected.
std::optional<int> one_dim_diameter(const SimplicialComplex& d);

}  // namespace vnum
