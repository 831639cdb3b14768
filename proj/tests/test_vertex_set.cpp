#include <doctest.h>

#include <algorithm>
#include <vector>

#include "vnum/vertex_set.hpp"

using vnum::InputError;
using vnum::Mask;
using vnum::VertexSet;

TEST_CASE("basic set algebra") {
  const VertexSet a(5, {0, 2});
  const VertexSet b(5, {2, 3});
  CHECK((a | b) == VertexSet(5, {0, 2, 3}));
  CHECK((a & b) == VertexSet(5, {2}));
  CHECK((a - b) == VertexSet(5, {0}));
  CHECK(a.complement() == VertexSet(5, {1, 3, 4}));
  CHECK(a.size() == 2);
  CHECK(a.contains(2));
  CHECK_FALSE(a.contains(1));
  CHECK(VertexSet(5, {2}).is_subset_of(a));
  CHECK(a.intersects(b));
  CHECK(a.members() == std::vector<int>{0, 2});
  CHECK(a.to_string() == "{t1,t3}");
  CHECK(VertexSet(3).to_string() == "{}");
}

TEST_CASE("mixing ambient sizes or leaving the range is an error") {
  CHECK_THROWS_AS((void)(VertexSet(3, {0}) | VertexSet(4, {0})), InputError);
  CHECK_THROWS_AS((void)VertexSet(3, {0}).is_subset_of(VertexSet(4)), InputError);
  CHECK_THROWS_AS((void)VertexSet(3).with(3), InputError);
  CHECK_THROWS_AS((void)VertexSet(3).with(-1), InputError);
}

TEST_CASE("64 vertices fit") {
  const auto full = VertexSet::full(64);
  CHECK(full.size() == 64);
  CHECK(full.complement().empty());
  CHECK(full.contains(63));
}

TEST_CASE("ordering is lexicographic on sorted member lists") {
  // Compare against std::lexicographical_compare on member lists for all
  // pairs of subsets of a 6-element ambient set.
  const int n = 6;
  for (Mask a = 0; a < (Mask{1} << n); ++a) {
    for (Mask b = 0; b < (Mask{1} << n); ++b) {
      const auto ma = VertexSet(n, a).members();
      const auto mb = VertexSet(n, b).members();
      const bool expected = std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
      REQUIRE(vnum::lex_less(a, b) == expected);
      REQUIRE((VertexSet(n, a) < VertexSet(n, b)) == expected);
    }
  }
}

TEST_CASE("iteration visits members in increasing order") {
  const VertexSet s(10, {9, 1, 4});
  std::vector<int> seen(s.begin(), s.end());
  CHECK(seen == std::vector<int>{1, 4, 9});
}
