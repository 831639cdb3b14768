#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "vnum/exact_rank.hpp"

using namespace vnum;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k) m(i, j) += a(i, k) * b(k, j);
  return m;
}

}  // namespace

TEST_CASE("degenerate shapes") {
  CHECK(rank_rational(IntMatrix()) == 0);
  CHECK(rank_gf2(IntMatrix(0, 5)) == 0);
  CHECK(rank_rational(IntMatrix(4, 0)) == 0);
  CHECK(rank_rational(IntMatrix(3, 3)) == 0);
  CHECK(to_string(Field::Rationals) == "Q");
  CHECK(to_string(Field::GF2) == "GF2");
}

TEST_CASE("field matters") {
  // [[1,1],[1,-1]] has determinant -2.
  IntMatrix m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = -1;
  CHECK(rank(m, Field::Rationals) == 2);
  CHECK(rank(m, Field::GF2) == 1);
}

TEST_CASE("random matrices agree with the oracles") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t r = 1 + static_cast<std::size_t>(trial % 9);
    const std::size_t c = 1 + static_cast<std::size_t>((trial * 7) % 11);
    const auto m = random_matrix(rng, r, c, -2, 2);
    CAPTURE(trial);
    REQUIRE(rank_rational(m) == oracle::rank_rational(m));
    REQUIRE(rank_gf2(m) == oracle::rank_gf2(m));
  }
}

TEST_CASE("rank-deficient products") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t inner = 1 + static_cast<std::size_t>(trial % 5);
    const auto a = random_matrix(rng, 8, inner, -3, 3);
    const auto b = random_matrix(rng, inner, 9, -3, 3);
    const auto m = multiply(a, b);
    CAPTURE(trial);
    REQUIRE(rank_rational(m) <= inner);
    REQUIRE(rank_rational(m) == oracle::rank_rational(m));
    REQUIRE(rank_gf2(m) == oracle::rank_gf2(m));
  }
}

TEST_CASE("large entries fall back to big integers") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = random_matrix(rng, 7, 7, -(std::int64_t{1} << 40), std::int64_t{1} << 40);
    REQUIRE(rank_rational(m) == oracle::rank_rational(m));
  }
  // Rows 0 and 2 are proportional with huge entries.
  IntMatrix m(3, 3);
  const std::int64_t big = std::int64_t{1} << 50;
  m(0, 0) = big;
  m(0, 1) = big - 1;
  m(0, 2) = 3;
  m(1, 0) = big - 7;
  m(1, 1) = 1;
  m(1, 2) = big;
  m(2, 0) = 2 * big;
  m(2, 1) = 2 * (big - 1);
  m(2, 2) = 6;
  CHECK(rank_rational(m) == 2);
  CHECK(rank_rational(m) == oracle::rank_rational(m));
}

TEST_CASE("wide GF(2) matrices cross word boundaries") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = random_matrix(rng, 40, 150, 0, 1);
    REQUIRE(rank_gf2(m) == oracle::rank_gf2(m));
  }
}
