#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "vnum/clutter.hpp"
#include "vnum/vertex_set.hpp"

namespace vnum {

/// A monomial t^a in K[t1..ts], stored as its exponent vector.
class Monomial {
 public:
  Monomial() = default;
  /// The monomial 1 on `ambient_size` variables.
  explicit Monomial(int ambient_size);
  explicit Monomial(std::vector<int> exponents);

  /// t_A, the product of the variables in A.
  static Monomial squarefree(const VertexSet& a);
  static Monomial variable(int ambient_size, int i);

  int ambient_size() const noexcept { return static_cast<int>(exp_.size()); }
  const std::vector<int>& exponents() const noexcept { return exp_; }
  int exponent(int i) const { return exp_.at(static_cast<std::size_t>(i)); }
  int degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }
  bool is_squarefree() const noexcept;
  VertexSet support() const;

  bool divides(const Monomial& m) const;
  Monomial operator*(const Monomial& m) const;
  /// Exact quotient; requires `d` to divide *this.
  Monomial operator/(const Monomial& d) const;

  bool operator==(const Monomial& o) const { return exp_ == o.exp_; }
  /// Degree first, then lexicographic with t1 > t2 > ... (t1^2 < t1t2 < t2^2).
  std::strong_ordering operator<=>(const Monomial& o) const;

  /// "t1^2 t2", or "1".
  std::string to_string() const;

 private:
  std::vector<int> exp_;
  int degree_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
std::ostream& operator<<(std::ostream& os, const Monomial& m);

/// Removes duplicates and every monomial divisible by another, then sorts.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// A monomial ideal, always held by its (unique) minimal generating set.
/// The zero ideal has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  explicit MonomialIdeal(int ambient_size) : ambient_(ambient_size) {}
  MonomialIdeal(int ambient_size, std::vector<Monomial> generators);

  static MonomialIdeal zero(int ambient_size) { return MonomialIdeal(ambient_size); }
  static MonomialIdeal unit(int ambient_size) { return MonomialIdeal(ambient_size, {Monomial(ambient_size)}); }

  int ambient_size() const noexcept { return ambient_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_squarefree() const noexcept;

  bool contains(const Monomial& m) const;
  /// Ideal containment: every generator of `j` lies in *this.
  bool contains(const MonomialIdeal& j) const;

  bool operator==(const MonomialIdeal&) const = default;

  /// "(t1 t2, t2 t3)", "(0)" for the zero ideal.
  std::string to_string() const;

 private:
  int ambient_ = 0;
  std::vector<Monomial> gens_;
};

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& i);

/// A monomial prime, generated by the variables in `variables`.
struct PrimeCover {
  VertexSet variables;

  MonomialIdeal ideal() const;
  int height() const { return variables.size(); }
  auto operator<=>(const PrimeCover&) const = default;
};

// Construction from clutters.

MonomialIdeal edge_ideal(const Clutter& c);
/// Edge ideal of the blocker. Throws ZeroIdealError when `c` has no edges.
MonomialIdeal cover_ideal(const Clutter& c);
/// The clutter whose edge ideal is `i`. Requires `i` squarefree and proper.
Clutter clutter_of(const MonomialIdeal& i);

// Arithmetic.

MonomialIdeal colon(const MonomialIdeal& i, const Monomial& f);
/// (I : p) as the intersection of (I : x) over the variables x of p.
MonomialIdeal colon(const MonomialIdeal& i, const PrimeCover& p);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ordinary_power(const MonomialIdeal& i, int n);
MonomialIdeal prime_power(const PrimeCover& p, int n);
/// (I, vs): adjoins the variables in `vs` as generators.
MonomialIdeal add_variables(const MonomialIdeal& i, const VertexSet& vs);
/// The same generators read in a ring with more variables.
MonomialIdeal extend_ambient(const MonomialIdeal& i, int new_size);

// Primary decomposition of squarefree ideals.

/// Minimal primes of a squarefree monomial ideal (its associated primes).
/// Computed as minimal transversals of the generator supports, independently
/// of any stable-set enumeration.
std::vector<PrimeCover> associated_primes(const MonomialIdeal& i);
/// Krull dimension of S/I: s minus the least height of an associated prime.
int krull_dimension(const MonomialIdeal& i);
int height(const MonomialIdeal& i);

/// I^(n), the intersection of p^n over the associated primes of a squarefree I.
MonomialIdeal symbolic_power(const MonomialIdeal& i, int n);

/// Least degree of a monomial in (I : p) that is not in I; 0 when that
/// quotient starts in degree 0 (I prime).
int alpha_of_colon_quotient(const MonomialIdeal& i, const PrimeCover& p);

/// v(I) = min over associated primes p of alpha((I : p) / I).
int v_number_algebraic(const MonomialIdeal& i);

/// Squarefree ideal obtained by splitting every power t_i^k into k new variables.
struct Polarization {
  MonomialIdeal ideal;
  /// origin[j] = (original variable, copy index starting at 0) of new variable j.
  std::vector<std::pair<int, int>> origin;
};

Polarization polarize(const MonomialIdeal& i);

}  // namespace vnum
