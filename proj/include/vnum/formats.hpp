#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vnum/classifiers.hpp"
#include "vnum/clutter.hpp"

namespace vnum {

/// A parsed input. Edges hold 0-based vertex indices.
struct InputDocument {
  enum class Kind { Graph, Clutter };

  Kind kind = Kind::Graph;
  int vertex_count = 0;
  std::vector<std::vector<int>> edges;
  std::string name;

  Clutter clutter() const;
  /// Throws InputError when the document is a clutter with a non-2-edge.
  Graph graph() const;
};

/// Line 1: "graph <s>" or "clutter <s>"; then one edge per line as
/// 1-based indices. '#' starts a comment; blank lines are ignored.
InputDocument parse_edge_list(std::string_view text);

/// Standard graph6 (optionally prefixed by ">>graph6<<"), up to 64 vertices.
InputDocument parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

/// Edge list when the first meaningful line starts with "graph" or
/// "clutter", graph6 otherwise.
InputDocument parse_input(std::string_view text);

/// Normalized edge-list text: header, then edges in canonical order.
std::string render_edge_list(const InputDocument& doc);

/// 1-based labels, for output.
std::vector<int> one_based(const VertexSet& s);

/// Compact single-line JSON when indent < 0.
std::string report_json(const InvariantReport& r, const std::string& name, int indent = -1);
std::string report_tsv_header(const std::vector<Field>& fields);
std::string report_tsv_row(const InvariantReport& r, const std::string& name, const std::vector<Field>& fields);
/// A TSV row with only the name and an error message filled in.
std::string error_tsv_row(const std::string& name, const std::string& error, const std::vector<Field>& fields);
std::string error_json(const std::string& name, const std::string& error, int indent = -1);
std::string report_text(const InvariantReport& r, const std::string& name);

}  // namespace vnum
