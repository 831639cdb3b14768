#include <doctest.h>

#include <algorithm>
#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "vnum/errors.hpp"
#include "vnum/monomial.hpp"

using namespace vnum;
using corpus::complete;
using corpus::cycle;
using corpus::path;

namespace {

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

MonomialIdeal ideal(int s, std::vector<std::vector<int>> gens) {
  std::vector<Monomial> ms;
  for (auto& g : gens) ms.emplace_back(std::move(g));
  return MonomialIdeal(s, std::move(ms));
}

PrimeCover prime(int s, std::initializer_list<int> one_based) {
  VertexSet v(s);
  for (int i : one_based) v = v.with(i - 1);
  return PrimeCover{v};
}

MonomialIdeal random_ideal(std::mt19937& rng, int s, int max_exp) {
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::vector<Monomial> gens;
  for (int k = count(rng); k > 0; --k) {
    std::vector<int> e(static_cast<std::size_t>(s));
    for (auto& x : e) x = exp(rng);
    gens.emplace_back(e);
  }
  return MonomialIdeal(s, gens);
}

// Generators of I^(n) recovered from membership alone: a monomial lies in
// p^n iff its degree in the variables of p is at least n.
std::vector<Monomial> symbolic_power_by_membership(const Clutter& c, int n) {
  const auto covers = oracle::minimal_covers(c);
  std::vector<Monomial> members;
  for (const auto& m : oracle::all_monomials(c.vertex_count(), n)) {
    bool in = true;
    for (Mask p : covers) {
      int d = 0;
      for (int i = 0; i < c.vertex_count(); ++i)
        if (p >> i & 1) d += m.exponent(i);
      in = in && d >= n;
    }
    if (in) members.push_back(m);
  }
  return minimalize(members);
}

}  // namespace

TEST_CASE("monomials") {
  const auto m = mono({2, 1, 0});
  CHECK(m.degree() == 3);
  CHECK_FALSE(m.is_squarefree());
  CHECK(m.support().bits() == 0b011);
  CHECK(m.to_string() == "t1^2 t2");
  CHECK(Monomial(3).to_string() == "1");
  CHECK(mono({1, 0, 0}).divides(m));
  CHECK_FALSE(mono({0, 0, 1}).divides(m));
  CHECK(m / mono({1, 1, 0}) == mono({1, 0, 0}));
  CHECK(lcm(mono({2, 0, 1}), mono({1, 1, 1})) == mono({2, 1, 1}));
  CHECK(gcd(mono({2, 0, 1}), mono({1, 1, 1})) == mono({1, 0, 1}));
  CHECK(mono({2, 0}) < mono({1, 1}));
  CHECK(mono({1, 1}) < mono({0, 2}));
  CHECK(mono({0, 1}) < mono({2, 0}));
  CHECK(minimalize({mono({1, 0}), mono({1, 1}), mono({1, 0})}) == std::vector<Monomial>{mono({1, 0})});
}

TEST_CASE("ideals and membership") {
  const auto i = ideal(3, {{1, 1, 0}});
  CHECK(i.contains(mono({1, 1, 1})));
  CHECK_FALSE(ideal(3, {{1, 1, 0}, {0, 1, 1}}).contains(mono({1, 0, 1})));
  CHECK(MonomialIdeal::zero(3).is_zero());
  CHECK(MonomialIdeal::zero(3).to_string() == "(0)");
  CHECK(MonomialIdeal::unit(3).is_unit());
  CHECK(ideal(3, {{1, 1, 0}, {0, 1, 1}}).to_string() == "(t1 t2, t2 t3)");
  CHECK(edge_ideal(cycle(4)) == ideal(4, {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {1, 0, 0, 1}}));
  CHECK(edge_ideal(Clutter::discrete(3)).is_zero());
  CHECK(cover_ideal(complete(2)) == ideal(2, {{1, 0}, {0, 1}}));
  CHECK(cover_ideal(path(3)) == ideal(3, {{0, 1, 0}, {1, 0, 1}}));
  CHECK(cover_ideal(cycle(4)) == ideal(4, {{1, 0, 1, 0}, {0, 1, 0, 1}}));
  CHECK_THROWS_AS((void)cover_ideal(Clutter::discrete(2)), ZeroIdealError);
  CHECK(clutter_of(edge_ideal(cycle(5))) == static_cast<const Clutter&>(cycle(5)));
}

TEST_CASE("colon ideals") {
  const auto i = ideal(3, {{1, 1, 0}, {0, 1, 1}});
  CHECK(colon(i, mono({0, 1, 0})) == ideal(3, {{1, 0, 0}, {0, 0, 1}}));
  CHECK(colon(ideal(3, {{1, 1, 0}}), mono({0, 0, 1})) == ideal(3, {{1, 1, 0}}));
  CHECK(colon(i, mono({1, 1, 0})).is_unit());
  CHECK(colon(edge_ideal(path(3)), prime(3, {2})) == ideal(3, {{1, 0, 0}, {0, 0, 1}}));
  CHECK(colon(edge_ideal(complete(2)), prime(2, {1, 2})) == ideal(2, {{1, 1}}));
  CHECK_THROWS_AS((void)colon(i, PrimeCover{VertexSet(3)}), InputError);
}

TEST_CASE("intersections, sums and powers") {
  CHECK(intersect(ideal(2, {{1, 0}}), ideal(2, {{0, 1}})) == ideal(2, {{1, 1}}));
  CHECK(intersect(ideal(3, {{1, 0, 0}, {0, 1, 0}}), ideal(3, {{0, 1, 0}, {0, 0, 1}})) ==
        ideal(3, {{0, 1, 0}, {1, 0, 1}}));
  const auto i = edge_ideal(cycle(5));
  CHECK(intersect(i, MonomialIdeal::unit(5)) == i);
  CHECK(sum(ideal(2, {{1, 0}}), ideal(2, {{0, 1}})) == ideal(2, {{1, 0}, {0, 1}}));
  CHECK(product(ideal(2, {{1, 0}}), ideal(2, {{0, 1}})) == ideal(2, {{1, 1}}));
  CHECK(ordinary_power(ideal(2, {{1, 1}}), 2) == ideal(2, {{2, 2}}));
  CHECK(prime_power(prime(3, {1, 3}), 2) == ideal(3, {{2, 0, 0}, {1, 0, 1}, {0, 0, 2}}));
  CHECK_THROWS_AS((void)prime_power(prime(3, {1}), 0), InputError);
  CHECK(extend_ambient(ideal(2, {{1, 1}}), 3) == ideal(3, {{1, 1, 0}}));
  CHECK(add_variables(ideal(2, {{1, 1}}), VertexSet(2).with(0)) == ideal(2, {{1, 0}}));
}

TEST_CASE("membership coherence on random ideals") {
  std::mt19937 rng(2024);
  const auto monomials = oracle::all_monomials(4, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = random_ideal(rng, 4, 2);
    const auto b = random_ideal(rng, 4, 2);
    const auto f = random_ideal(rng, 4, 1).generators().front();
    const auto q = colon(a, f);
    const auto meet = intersect(a, b);
    const auto join = sum(a, b);
    CAPTURE(trial);
    for (const auto& m : monomials) {
      REQUIRE(q.contains(m) == a.contains(m * f));
      REQUIRE(meet.contains(m) == (a.contains(m) && b.contains(m)));
      REQUIRE(join.contains(m) == (a.contains(m) || b.contains(m)));
    }
    REQUIRE(product(a, b).contains(product(b, a)));
    REQUIRE(a.contains(product(a, b)));
  }
}

TEST_CASE("associated primes are the minimal vertex covers") {
  auto primes = [](const Clutter& c) {
    std::vector<Mask> out;
    for (const auto& p : associated_primes(edge_ideal(c))) out.push_back(p.variables.bits());
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(primes(complete(2)) == std::vector<Mask>{0b01, 0b10});
  CHECK(primes(path(3)) == std::vector<Mask>{0b010, 0b101});
  CHECK(primes(cycle(4)) == std::vector<Mask>{0b0101, 0b1010});
  CHECK_THROWS_AS((void)associated_primes(MonomialIdeal::zero(3)), ZeroIdealError);
  CHECK_THROWS_AS((void)associated_primes(MonomialIdeal::unit(3)), InputError);
  CHECK_THROWS_AS((void)associated_primes(ideal(2, {{2, 0}})), InputError);

  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = oracle::random_clutter(rng, 1 + trial % 9, 6, 4);
    auto expected = oracle::minimal_covers(c);
    std::sort(expected.begin(), expected.end());
    CAPTURE(trial);
    REQUIRE(primes(c) == expected);
    REQUIRE(krull_dimension(edge_ideal(c)) == oracle::independence_number(c));
    REQUIRE(height(edge_ideal(c)) == oracle::cover_number(c));
  }
}

TEST_CASE("alpha of colon quotients and the algebraic v-number") {
  CHECK(alpha_of_colon_quotient(edge_ideal(path(3)), prime(3, {2})) == 1);
  CHECK(alpha_of_colon_quotient(edge_ideal(complete(2)), prime(2, {1})) == 1);
  CHECK(alpha_of_colon_quotient(ideal(3, {{1, 0, 0}, {0, 1, 0}}), prime(3, {1, 2})) == 0);
  CHECK_THROWS_AS((void)alpha_of_colon_quotient(edge_ideal(path(3)), prime(3, {1})), InputError);
  CHECK(v_number_algebraic(edge_ideal(path(3))) == 1);
  // Complete intersection of degrees 3 and 2.
  CHECK(v_number_algebraic(ideal(5, {{1, 1, 1, 0, 0}, {0, 0, 0, 1, 1}})) == 3);
  CHECK_THROWS_AS((void)v_number_algebraic(MonomialIdeal::zero(2)), ZeroIdealError);

  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = oracle::random_clutter(rng, 1 + trial % 9, 6, 4);
    CAPTURE(trial);
    REQUIRE(v_number_algebraic(edge_ideal(c)) == oracle::v_number(c));
  }
}

TEST_CASE("symbolic powers") {
  CHECK(symbolic_power(edge_ideal(complete(2)), 2) == ideal(2, {{2, 2}}));
  CHECK(symbolic_power(edge_ideal(path(3)), 2) == ideal(3, {{2, 2, 0}, {1, 2, 1}, {0, 2, 2}}));
  const auto k3 = symbolic_power(edge_ideal(complete(3)), 2);
  CHECK(k3.contains(mono({1, 1, 1})));
  CHECK(k3 == sum(ordinary_power(edge_ideal(complete(3)), 2), ideal(3, {{1, 1, 1}})));
  CHECK(k3.generators().size() == 4);
  CHECK_THROWS_AS((void)symbolic_power(edge_ideal(path(3)), 0), InputError);
  CHECK_THROWS_AS((void)symbolic_power(MonomialIdeal::zero(2), 2), ZeroIdealError);

  // (I, u)^(2) = (I^(2), uI, u^2) for a new variable u.
  const auto i = extend_ambient(edge_ideal(complete(2)), 3);
  const auto u = ideal(3, {{0, 0, 1}});
  CHECK(symbolic_power(add_variables(i, VertexSet(3).with(2)), 2) ==
        sum(sum(symbolic_power(i, 2), product(u, i)), ordinary_power(u, 2)));

  std::mt19937 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const auto c = oracle::random_clutter(rng, 2 + trial % 6, 5, 3);
    const int n = 1 + trial % 3;
    CAPTURE(trial);
    REQUIRE(symbolic_power(edge_ideal(c), n).generators() == symbolic_power_by_membership(c, n));
  }
}

TEST_CASE("polarization") {
  const auto a = polarize(ideal(1, {{2}}));
  CHECK(a.ideal == ideal(2, {{1, 1}}));
  CHECK(a.origin == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}});
  const auto b = polarize(ideal(2, {{2, 1}}));
  CHECK(b.ideal.ambient_size() == 3);
  CHECK(b.ideal.is_squarefree());
  CHECK(b.ideal.generators().front().degree() == 3);
  const auto k3 = polarize(symbolic_power(edge_ideal(complete(3)), 2));
  CHECK(k3.ideal.is_squarefree());
  CHECK(k3.ideal.ambient_size() <= 6);
  CHECK(k3.ideal.generators().size() == 4);
  // A squarefree ideal is its own polarization.
  CHECK(polarize(edge_ideal(cycle(5))).ideal == edge_ideal(cycle(5)));
}
