#pragma once

#include <optional>
#include <vector>

#include "vnum/clutter.hpp"
#include "vnum/exact_rank.hpp"
#include "vnum/vertex_set.hpp"

namespace vnum {

inline constexpr int kDefaultOracleCap = 7;

/// W2 membership. Computes v == beta0, well-covered with F == A, and
/// 1-well-covered, and throws ConsistencyError if they disagree. Throws
/// InputError on graphs with isolated vertices.
bool is_w2(const Graph& g);

/// First edge e (in edge order) with beta0(G - e) == beta0(G); nullopt when
/// the graph is edge-critical. Also checks beta0(G_e) == beta0(G) - 1 edge by
/// edge and throws ConsistencyError on disagreement.
std::optional<Edge> edge_criticality_violation(const Graph& g);
inline bool is_edge_critical(const Graph& g) { return !edge_criticality_violation(g); }

/// Reisner's criterion on the independence complex. The graph with no
/// vertices counts as Cohen-Macaulay.
bool is_cm_graph(const Graph& g, Field k);

/// G is CM, and for every edge e, G_e is CM with beta0(G_e) = beta0(G) - 1.
bool symbolic_square_cm_combinatorial(const Graph& g, Field k);
/// Reisner's criterion on the polarization of I(G)^(2). Requires an edge.
bool symbolic_square_cm_algebraic(const Graph& g, Field k);
/// Combinatorial answer, confirmed by the algebraic route when the graph has
/// at most `oracle_cap` vertices (ConsistencyError on disagreement).
bool symbolic_square_cm(const Graph& g, Field k, int oracle_cap = kDefaultOracleCap);

/// For beta0(G) == 2: edge-criticality, checked against maximal
/// triangle-freeness of the complement and, when the complement is connected
/// with at least 3 vertices, against its diameter being at most 2.
bool symbolic_square_cm_beta2(const Graph& g);

/// I(G) has a linear resolution iff the complement is chordal. Requires at
/// least one edge and no isolated vertices.
bool has_linear_resolution(const Graph& g);

struct FieldInvariants {
  Field field = Field::Rationals;
  int reg = 0;
  bool cohen_macaulay = false;
  /// Graphs only.
  std::optional<bool> symbolic_square_cm;
  /// True when the polarization route confirmed symbolic_square_cm.
  bool symbolic_square_oracle_checked = false;
};

struct ReportOptions {
  std::vector<Field> fields{Field::Rationals};
  int oracle_cap = kDefaultOracleCap;
};

struct InvariantReport {
  bool is_graph = false;
  int vertex_count = 0;
  std::size_t edge_count = 0;
  VertexSet isolated_vertices;

  int v = 0;
  VertexSet v_witness;
  int beta0 = 0;
  int alpha0 = 0;
  int i_dom = 0;
  /// Graphs only.
  std::optional<int> gamma;
  int dim = 0;
  int height = 0;

  bool well_covered = false;
  bool one_well_covered = false;
  bool vertex_decomposable = false;
  /// Null for clutters and for graphs with isolated vertices.
  std::optional<bool> w2;
  /// Null for clutters.
  std::optional<bool> edge_critical;
  std::optional<Edge> edge_critical_violation;
  /// Null for clutters and when the graph has isolated vertices.
  std::optional<bool> linear_resolution;

  std::vector<FieldInvariants> fields;
};

/// Every invariant, with all cross-route checks enabled. Throws
/// ZeroIdealError on a clutter without edges, ConsistencyError when two
/// routes disagree.
InvariantReport full_report(const Clutter& c, const ReportOptions& opts = {});

}  // namespace vnum
