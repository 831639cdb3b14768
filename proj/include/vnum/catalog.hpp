#pragma once

#include <string>
#include <vector>

#include "vnum/clutter.hpp"

namespace vnum {

struct CatalogEntry {
  std::string label;
  int vertex_count = 0;
  /// Edges as "i-j" pairs with 1-based labels, separated by spaces.
  std::string edges;

  Graph graph() const;
};

/// The 36 connected graphs whose edge ideal has a Cohen-Macaulay symbolic
/// square over Q, labelled cm36-01 .. cm36-36.
const std::vector<CatalogEntry>& cm36_catalog();

/// 11-vertex W2 graph, CM over Q, whose regularity is 2 over Q and 3 over GF(2).
Graph characteristic_sensitive_graph();

}  // namespace vnum
