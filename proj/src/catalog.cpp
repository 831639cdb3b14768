#include "vnum/catalog.hpp"

#include <charconv>
#include <sstream>

namespace vnum {

namespace {

std::vector<Edge> parse_pairs(const std::string& text) {
  std::vector<Edge> edges;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    const auto dash = tok.find('-');
    int a = 0;
    int b = 0;
    std::from_chars(tok.data(), tok.data() + dash, a);
    std::from_chars(tok.data() + dash + 1, tok.data() + tok.size(), b);
    edges.emplace_back(a - 1, b - 1);
  }
  return edges;
}

struct Row {
  int n;
  const char* edges;
};

// clang-format off
constexpr Row kCm36[] = {
    {2, "1-2"},
    {3, "1-2 1-3 2-3"},
    {4, "1-2 1-3 1-4 2-3 2-4 3-4"},
    {5, "1-2 1-5 2-3 3-4 4-5"},
    {5, "1-2 1-3 1-4 1-5 2-3 2-4 2-5 3-4 3-5 4-5"},
    {6, "1-2 1-5 1-6 2-3 2-6 3-4 4-5 5-6"},
    {6, "1-2 1-3 1-4 1-5 1-6 2-3 2-4 2-5 2-6 3-4 3-5 3-6 4-5 4-6 5-6"},
    {7, "1-2 1-3 1-6 1-7 2-3 2-4 3-4 4-5 5-6 5-7 6-7"},
    {7, "1-2 1-7 2-3 2-4 3-4 3-5 3-6 4-5 4-6 5-6 5-7 6-7"},
    {7, "1-2 1-3 1-6 1-7 2-3 2-6 2-7 3-4 3-7 4-5 5-6 6-7"},
    {7, "1-2 1-3 1-4 1-5 1-6 1-7 2-3 2-4 2-5 2-6 2-7 3-4 3-5 3-6 3-7 4-5 4-6 4-7 5-6 5-7 6-7"},
    {8, "1-2 1-3 1-6 1-7 2-4 2-6 2-7 3-5 3-7 3-8 4-5 4-6 4-8 5-7 5-8 6-8"},
    {8, "1-2 1-3 1-4 1-7 2-3 2-4 2-8 3-4 3-8 4-8 5-6 5-7 5-8 6-7 6-8"},
    {8, "1-2 1-5 1-6 1-7 2-3 2-4 2-7 3-4 3-8 4-8 5-6 5-7 5-8 6-7 6-8"},
    {8, "1-2 1-5 1-6 2-3 2-4 3-4 3-7 3-8 4-7 4-8 5-6 5-7 5-8 6-7 6-8 7-8"},
    {8, "1-2 1-6 1-7 2-3 2-4 2-7 2-8 3-4 3-5 3-7 3-8 4-5 4-7 4-8 5-6 5-8 7-8"},
    {8, "1-3 1-4 1-5 1-6 1-8 2-3 2-4 2-5 2-6 2-7 3-4 3-5 3-6 4-5 4-6 5-6 7-8"},
    {8, "1-2 1-8 2-3 2-6 3-4 3-7 4-5 5-6 6-7 7-8"},
    {8, "1-2 1-3 1-4 1-5 1-6 1-7 1-8 2-3 2-4 2-5 2-6 2-7 2-8 3-4 3-5 3-6 3-7 3-8 4-5 4-6 4-7 4-8 5-6 5-7 5-8 6-7 6-8 7-8"},
    {9, "1-2 1-3 1-7 2-3 2-7 3-4 3-5 3-9 4-5 4-6 4-8 4-9 5-6 5-8 5-9 6-7 6-8 6-9 7-8 8-9"},
    {9, "1-2 1-3 1-8 1-9 2-3 2-8 2-9 3-4 3-9 4-5 4-6 4-7 5-6 5-7 5-8 6-7 6-8 7-8 8-9"},
    {9, "1-2 1-3 1-7 1-8 2-3 2-7 2-8 3-4 3-5 4-5 4-6 4-9 5-6 5-9 6-7 6-8 6-9 7-8 7-9 8-9"},
    {9, "1-2 1-3 1-4 1-5 1-6 1-7 2-3 2-4 2-5 2-6 2-7 3-4 3-5 3-6 3-7 4-6 4-7 4-8 5-6 5-7 5-9 6-7 8-9"},
    {9, "1-2 1-6 1-7 1-8 2-3 3-4 3-5 3-9 4-5 4-6 4-7 4-8 4-9 5-6 5-7 5-8 5-9 6-7 6-8 6-9 7-8 7-9 8-9"},
    {9, "1-2 1-3 1-7 1-8 2-3 2-4 2-8 2-9 3-4 3-5 3-9 4-5 4-6 4-9 5-6 5-7 5-9 6-7 6-8 6-9 7-8"},
    {9, "1-2 1-3 1-6 1-7 1-8 2-3 2-7 2-8 2-9 3-4 3-8 3-9 4-5 4-6 4-8 4-9 5-6 5-7 5-9 6-7 6-8 7-9"},
    {9, "1-2 1-6 1-7 2-3 2-9 3-4 3-5 3-8 3-9 4-5 4-6 4-7 4-8 4-9 5-6 5-7 5-8 5-9 6-7 6-8 7-8 8-9"},
    {9, "1-2 1-9 2-3 2-7 3-4 3-5 3-8 4-5 4-6 5-6 6-7 7-8 8-9"},
    {9, "1-2 1-7 1-8 1-9 2-3 2-4 2-8 2-9 3-4 3-5 3-6 4-5 4-6 5-6 5-7 6-7 7-8 7-9 8-9"},
    {9, "1-2 1-6 1-7 2-3 2-4 2-9 3-4 3-5 3-8 3-9 4-5 4-8 4-9 5-6 5-7 5-8 5-9 6-7 6-8 7-8 8-9"},
    {9, "1-2 1-3 1-4 1-5 1-6 1-7 1-8 1-9 2-3 2-4 2-5 2-6 2-7 2-8 2-9 3-4 3-5 3-6 3-7 3-8 3-9 4-5 4-6 4-7 4-8 4-9 5-6 5-7 5-8 5-9 6-7 6-8 6-9 7-8 7-9 8-9"},
    {9, "1-2 1-6 1-8 2-3 2-9 3-4 3-7 4-5 4-8 5-6 5-9 6-7 7-8 7-9 8-9"},
    {9, "1-2 1-8 1-9 2-3 2-6 2-9 3-4 3-7 3-9 4-5 5-6 6-7 6-9 7-8"},
    {9, "1-2 1-9 2-3 3-4 3-5 3-8 4-5 4-8 4-9 5-6 5-9 6-7 7-8 8-9"},
    {9, "1-2 1-3 1-7 1-8 1-9 2-3 2-7 2-8 2-9 3-4 3-5 3-8 3-9 4-5 4-6 5-6 6-7 7-8 7-9 8-9"},
    {9, "1-2 1-3 1-4 1-5 1-6 1-8 2-3 2-4 2-5 2-6 2-7 3-4 3-5 3-6 3-7 4-5 4-6 4-7 5-6 5-7 6-8 7-9 8-9"},
};
// clang-format on

}  // namespace

Graph CatalogEntry::graph() const { return Graph(vertex_count, parse_pairs(edges)); }

const std::vector<CatalogEntry>& cm36_catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    std::vector<CatalogEntry> out;
    int k = 0;
    for (const auto& row : kCm36) {
      ++k;
      out.push_back({(k < 10 ? "cm36-0" : "cm36-") + std::to_string(k), row.n, row.edges});
    }
    return out;
  }();
  return catalog;
}

Graph characteristic_sensitive_graph() {
  return CatalogEntry{"", 11,
                      "1-3 1-4 1-7 1-10 1-11 2-4 2-5 2-8 2-10 2-11 3-5 3-6 3-8 3-11 4-6 4-9 4-11 5-7 5-9 5-11 "
                      "6-8 6-9 7-9 7-10 8-10"}
      .graph();
}

}  // namespace vnum
