#include "vnum/classifiers.hpp"

#include <algorithm>
#include <string>

#include "vnum/monomial.hpp"
#include "vnum/simplicial.hpp"

namespace vnum {

namespace {

void check(bool ok, const std::string& what) {
  if (!ok) throw ConsistencyError(what);
}

std::string edge_label(const Edge& e) {
  return "{t" + std::to_string(e.first + 1) + ",t" + std::to_string(e.second + 1) + "}";
}

}  // namespace

bool is_w2(const Graph& g) {
  if (!g.isolated_vertices().empty()) throw InputError("W2 is only defined for graphs without isolated vertices");
  if (g.is_discrete()) throw ZeroIdealError();
  const bool by_v_number = v_number_combinatorial(g) == independence_number(g);
  const bool by_family = is_well_covered(g) && maximal_stable_sets(g) == family_a(g);
  const bool by_deletion = is_one_well_covered(g);
  check(by_v_number == by_family, "W2: v == beta0 disagrees with F == A");
  check(by_v_number == by_deletion, "W2: v == beta0 disagrees with 1-well-coveredness");
  return by_v_number;
}

std::optional<Edge> edge_criticality_violation(const Graph& g) {
  const int b = independence_number(g);
  std::optional<Edge> first;
  for (const auto& e : g.edge_list()) {
    const bool by_deletion = independence_number(delete_edge(g, e)) == b + 1;
    const bool by_neighborhoods = independence_number(delete_edge_neighborhoods(g, e).graph) == b - 1;
    check(by_deletion == by_neighborhoods, "edge-criticality routes disagree at " + edge_label(e));
    if (!by_deletion && !first) first = e;
  }
  return first;
}

bool is_cm_graph(const Graph& g, Field k) { return is_cohen_macaulay_reisner(independence_complex(g), k); }

bool symbolic_square_cm_combinatorial(const Graph& g, Field k) {
  if (!is_cm_graph(g, k)) return false;
  const int b = independence_number(g);
  for (const auto& e : g.edge_list()) {
    const Graph ge = delete_edge_neighborhoods(g, e).graph;
    if (independence_number(ge) != b - 1 || !is_cm_graph(ge, k)) return false;
  }
  return true;
}

bool symbolic_square_cm_algebraic(const Graph& g, Field k) {
  const auto square = symbolic_power(edge_ideal(g), 2);
  const auto polar = polarize(square);
  return is_cohen_macaulay_reisner(stanley_reisner_complex(polar.ideal), k);
}

bool symbolic_square_cm(const Graph& g, Field k, int oracle_cap) {
  const bool combinatorial = symbolic_square_cm_combinatorial(g, k);
  if (!g.is_discrete() && g.vertex_count() <= oracle_cap) {
    check(combinatorial == symbolic_square_cm_algebraic(g, k),
          "symbolic square CM over " + to_string(k) + ": graph criterion disagrees with polarization");
  }
  return combinatorial;
}

bool symbolic_square_cm_beta2(const Graph& g) {
  if (independence_number(g) != 2) throw InputError("symbolic_square_cm_beta2 needs independence number 2");
  const bool critical = is_edge_critical(g);
  const Graph h = complement(g);
  check(critical == is_maximal_triangle_free(h), "edge-critical disagrees with maximal triangle-free complement");
  if (g.vertex_count() >= 3) {
    if (const auto diam = diameter(h)) check(critical == (*diam <= 2), "edge-critical disagrees with diameter <= 2");
  }
  return critical;
}

bool has_linear_resolution(const Graph& g) {
  if (g.is_discrete()) throw ZeroIdealError();
  if (!g.isolated_vertices().empty()) throw InputError("linear resolution test needs a graph without isolated vertices");
  return is_chordal(complement(g));
}

InvariantReport full_report(const Clutter& c, const ReportOptions& opts) {
  if (c.is_discrete()) throw ZeroIdealError();
  InvariantReport r;
  r.is_graph = c.is_two_uniform();
  r.vertex_count = c.vertex_count();
  r.edge_count = c.edge_count();
  r.isolated_vertices = c.isolated_vertices();

  const auto ideal = edge_ideal(c);
  const auto witness = v_number_witness(c);
  r.v = witness.value;
  r.v_witness = witness.stable_set;
  check(r.v == v_number_algebraic(ideal), "v-number: stable-set formula disagrees with colon ideals");

  r.beta0 = independence_number(c);
  r.alpha0 = cover_number(c);
  r.dim = krull_dimension(ideal);
  r.height = height(ideal);
  r.i_dom = independent_domination_number(c);
  check(r.dim == r.beta0, "dimension disagrees with independence number");
  check(r.height == r.alpha0, "height disagrees with cover number");
  check(r.alpha0 + r.beta0 == r.vertex_count, "cover number + independence number != vertex count");
  check(r.v <= r.i_dom && r.i_dom <= r.beta0, "v <= i <= beta0 violated");

  r.well_covered = is_well_covered(c);
  r.one_well_covered = is_one_well_covered(c);
  const auto delta = independence_complex(c);
  r.vertex_decomposable = is_vertex_decomposable(delta);

  std::optional<Graph> g;
  if (r.is_graph) {
    g = Graph::from_clutter(c);
    r.gamma = domination_number(*g);
    check(*r.gamma <= r.i_dom, "gamma <= i violated");
    r.edge_critical_violation = edge_criticality_violation(*g);
    r.edge_critical = !r.edge_critical_violation;
    if (r.isolated_vertices.empty()) {
      r.w2 = is_w2(*g);
      check(*r.w2 == (r.v == r.dim), "W2 disagrees with v == dim");
      r.linear_resolution = has_linear_resolution(*g);
    }
  }

  for (Field k : opts.fields) {
    FieldInvariants f;
    f.field = k;
    f.reg = regularity_hochster(delta, k);
    f.cohen_macaulay = is_cohen_macaulay_reisner(delta, k);
    check(f.reg <= r.dim, "reg <= dim violated over " + to_string(k));
    if (r.vertex_decomposable) {
      // Pure and vertex decomposable means shellable, hence Cohen-Macaulay.
      if (r.well_covered) check(f.cohen_macaulay, "pure vertex decomposable but not Cohen-Macaulay over " + to_string(k));
      check(r.v <= f.reg, "vertex decomposable but v > reg over " + to_string(k));
    }
    if (g) {
      f.symbolic_square_cm = symbolic_square_cm(*g, k, opts.oracle_cap);
      f.symbolic_square_oracle_checked = g->vertex_count() <= opts.oracle_cap;
      if (r.linear_resolution.value_or(false))
        check(r.v == 1 && f.reg == 1, "linear resolution but v or reg differs from 1 over " + to_string(k));
    }
    r.fields.push_back(f);
  }
  return r;
}

}  // namespace vnum
