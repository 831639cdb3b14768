#include "vnum/monomial.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>

namespace vnum {

namespace {

void require_same_ambient(int a, int b) {
  if (a != b) throw InputError("monomials on different rings (" + std::to_string(a) + " vs " + std::to_string(b) + " variables)");
}

// All exponent vectors of total degree `n` supported on `vars`.
void degree_n_monomials(const std::vector<int>& vars, std::size_t idx, int remaining, std::vector<int>& exp,
                        std::vector<Monomial>& out) {
  if (idx + 1 == vars.size()) {
    exp[static_cast<std::size_t>(vars[idx])] = remaining;
    out.emplace_back(exp);
    exp[static_cast<std::size_t>(vars[idx])] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    exp[static_cast<std::size_t>(vars[idx])] = e;
    degree_n_monomials(vars, idx + 1, remaining - e, exp, out);
  }
  exp[static_cast<std::size_t>(vars[idx])] = 0;
}

}  // namespace

// --- Monomial ------------------------------------------------------------------

Monomial::Monomial(int ambient_size) : exp_(static_cast<std::size_t>(ambient_size), 0) {
  if (ambient_size < 0) throw InputError("negative ambient size");
}

Monomial::Monomial(std::vector<int> exponents) : exp_(std::move(exponents)) {
  for (int e : exp_) {
    if (e < 0) throw InputError("negative exponent");
    degree_ += e;
  }
}

Monomial Monomial::squarefree(const VertexSet& a) {
  std::vector<int> exp(static_cast<std::size_t>(a.ambient_size()), 0);
  for (int v : a) exp[static_cast<std::size_t>(v)] = 1;
  return Monomial(std::move(exp));
}

Monomial Monomial::variable(int ambient_size, int i) { return squarefree(VertexSet(ambient_size).with(i)); }

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(exp_.begin(), exp_.end(), [](int e) { return e <= 1; });
}

VertexSet Monomial::support() const {
  Mask m = 0;
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] > 0) m |= Mask{1} << i;
  return VertexSet(ambient_size(), m);
}

bool Monomial::divides(const Monomial& m) const {
  require_same_ambient(ambient_size(), m.ambient_size());
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] > m.exp_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
  require_same_ambient(ambient_size(), m.ambient_size());
  std::vector<int> e(exp_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += m.exp_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& d) const {
  if (!d.divides(*this)) throw InputError(d.to_string() + " does not divide " + to_string());
  std::vector<int> e(exp_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= d.exp_[i];
  return Monomial(std::move(e));
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  if (auto c = degree_ <=> o.degree_; c != 0) return c;
  // Larger leading exponent sorts first.
  for (std::size_t i = 0; i < std::min(exp_.size(), o.exp_.size()); ++i)
    if (exp_[i] != o.exp_[i]) return o.exp_[i] <=> exp_[i];
  return exp_.size() <=> o.exp_.size();
}

std::string Monomial::to_string() const {
  if (is_one()) return "1";
  std::string s;
  for (std::size_t i = 0; i < exp_.size(); ++i) {
    if (exp_[i] == 0) continue;
    if (!s.empty()) s += ' ';
    s += 't' + std::to_string(i + 1);
    if (exp_[i] > 1) s += '^' + std::to_string(exp_[i]);
  }
  return s;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_ambient(a.ambient_size(), b.ambient_size());
  std::vector<int> e(a.exponents());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], b.exponents()[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_ambient(a.ambient_size(), b.ambient_size());
  std::vector<int> e(a.exponents());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], b.exponents()[i]);
  return Monomial(std::move(e));
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.to_string(); }

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  // After sorting by degree a generator can only be divided by an earlier one.
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (auto& g : gens) {
    const bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) out.push_back(std::move(g));
  }
  return out;
}

// --- MonomialIdeal -------------------------------------------------------------

MonomialIdeal::MonomialIdeal(int ambient_size, std::vector<Monomial> generators) : ambient_(ambient_size) {
  for (const auto& g : generators) require_same_ambient(ambient_size, g.ambient_size());
  gens_ = minimalize(std::move(generators));
}

bool MonomialIdeal::is_squarefree() const noexcept {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  require_same_ambient(ambient_, m.ambient_size());
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& j) const {
  require_same_ambient(ambient_, j.ambient_);
  return std::all_of(j.gens_.begin(), j.gens_.end(), [&](const Monomial& g) { return contains(g); });
}

std::string MonomialIdeal::to_string() const {
  if (is_zero()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ')';
}

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& i) { return os << i.to_string(); }

MonomialIdeal PrimeCover::ideal() const {
  std::vector<Monomial> gens;
  for (int v : variables) gens.push_back(Monomial::variable(variables.ambient_size(), v));
  return MonomialIdeal(variables.ambient_size(), std::move(gens));
}

// --- construction ----------------------------------------------------------------

MonomialIdeal edge_ideal(const Clutter& c) {
  std::vector<Monomial> gens;
  gens.reserve(c.edge_count());
  for (const auto& e : c.edges()) gens.push_back(Monomial::squarefree(e));
  return MonomialIdeal(c.vertex_count(), std::move(gens));
}

MonomialIdeal cover_ideal(const Clutter& c) { return edge_ideal(blocker(c)); }

Clutter clutter_of(const MonomialIdeal& i) {
  if (!i.is_squarefree()) throw InputError("ideal is not squarefree: " + i.to_string());
  if (i.is_unit()) throw InputError("the unit ideal is not the edge ideal of a clutter");
  std::vector<VertexSet> edges;
  for (const auto& g : i.generators()) edges.push_back(g.support());
  return Clutter(i.ambient_size(), std::move(edges));
}

// --- arithmetic --------------------------------------------------------------------

MonomialIdeal colon(const MonomialIdeal& i, const Monomial& f) {
  require_same_ambient(i.ambient_size(), f.ambient_size());
  std::vector<Monomial> gens;
  gens.reserve(i.generators().size());
  for (const auto& g : i.generators()) gens.push_back(g / gcd(g, f));
  return MonomialIdeal(i.ambient_size(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& i, const PrimeCover& p) {
  require_same_ambient(i.ambient_size(), p.variables.ambient_size());
  if (p.variables.empty()) throw InputError("colon by the zero prime");
  std::optional<MonomialIdeal> acc;
  for (int x : p.variables) {
    auto q = colon(i, Monomial::variable(i.ambient_size(), x));
    acc = acc ? intersect(*acc, q) : std::move(q);
  }
  return *acc;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a.ambient_size(), b.ambient_size());
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) gens.push_back(lcm(g, h));
  return MonomialIdeal(a.ambient_size(), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a.ambient_size(), b.ambient_size());
  std::vector<Monomial> gens(a.generators());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.ambient_size(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a.ambient_size(), b.ambient_size());
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) gens.push_back(g * h);
  return MonomialIdeal(a.ambient_size(), std::move(gens));
}

MonomialIdeal ordinary_power(const MonomialIdeal& i, int n) {
  if (n < 0) throw InputError("negative power");
  auto acc = MonomialIdeal::unit(i.ambient_size());
  for (int k = 0; k < n; ++k) acc = product(acc, i);
  return acc;
}

MonomialIdeal prime_power(const PrimeCover& p, int n) {
  if (n < 1) throw InputError("prime power exponent must be at least 1");
  if (p.variables.empty()) throw InputError("power of the zero prime");
  const int s = p.variables.ambient_size();
  std::vector<Monomial> gens;
  std::vector<int> exp(static_cast<std::size_t>(s), 0);
  degree_n_monomials(p.variables.members(), 0, n, exp, gens);
  return MonomialIdeal(s, std::move(gens));
}

MonomialIdeal add_variables(const MonomialIdeal& i, const VertexSet& vs) {
  return sum(i, PrimeCover{vs}.ideal());
}

MonomialIdeal extend_ambient(const MonomialIdeal& i, int new_size) {
  if (new_size < i.ambient_size()) throw InputError("extend_ambient cannot shrink the ring");
  std::vector<Monomial> gens;
  for (const auto& g : i.generators()) {
    std::vector<int> e(g.exponents());
    e.resize(static_cast<std::size_t>(new_size), 0);
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(new_size, std::move(gens));
}

// --- primes ----------------------------------------------------------------------

std::vector<PrimeCover> associated_primes(const MonomialIdeal& i) {
  if (i.is_zero()) throw ZeroIdealError();
  if (i.is_unit()) throw InputError("the unit ideal has no associated primes");
  if (!i.is_squarefree()) throw InputError("associated primes are only computed for squarefree ideals");
  // Berge's sequential dualization: maintain the minimal transversals of the
  // generator supports seen so far.
  std::vector<Mask> transversals{0};
  for (const auto& g : i.generators()) {
    const Mask e = g.support().bits();
    std::vector<Mask> next;
    for (Mask t : transversals) {
      if (t & e) {
        next.push_back(t);
        continue;
      }
      for (Mask r = e; r; r &= r - 1) next.push_back(t | (r & (~r + 1)));
    }
    std::sort(next.begin(), next.end(), [](Mask a, Mask b) {
      return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b;
    });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    transversals.clear();
    for (Mask t : next) {
      const bool redundant =
          std::any_of(transversals.begin(), transversals.end(), [&](Mask u) { return (u & ~t) == 0; });
      if (!redundant) transversals.push_back(t);
    }
  }
  std::vector<PrimeCover> out;
  for (Mask t : transversals) out.push_back({VertexSet(i.ambient_size(), t)});
  std::sort(out.begin(), out.end());
  return out;
}

int height(const MonomialIdeal& i) {
  int h = std::numeric_limits<int>::max();
  for (const auto& p : associated_primes(i)) h = std::min(h, p.height());
  return h;
}

int krull_dimension(const MonomialIdeal& i) {
  if (i.is_zero()) return i.ambient_size();
  return i.ambient_size() - height(i);
}

MonomialIdeal symbolic_power(const MonomialIdeal& i, int n) {
  if (n < 1) throw InputError("symbolic power exponent must be at least 1");
  auto primes = associated_primes(i);
  std::stable_sort(primes.begin(), primes.end(),
                   [](const PrimeCover& a, const PrimeCover& b) { return a.height() < b.height(); });
  std::optional<MonomialIdeal> acc;
  for (const auto& p : primes) {
    auto q = prime_power(p, n);
    acc = acc ? intersect(*acc, q) : std::move(q);
  }
  return *acc;
}

int alpha_of_colon_quotient(const MonomialIdeal& i, const PrimeCover& p) {
  const auto primes = associated_primes(i);
  if (std::find(primes.begin(), primes.end(), p) == primes.end())
    throw InputError("prime " + p.variables.to_string() + " is not associated to " + i.to_string());
  // Every monomial of (I : p) \ I is a multiple of a generator of (I : p)
  // that is itself outside I, so the minimum is attained at a generator.
  int best = std::numeric_limits<int>::max();
  const auto q = colon(i, p);
  for (const auto& g : q.generators())
    if (!i.contains(g)) best = std::min(best, g.degree());
  return best == std::numeric_limits<int>::max() ? 0 : best;
}

int v_number_algebraic(const MonomialIdeal& i) {
  int best = std::numeric_limits<int>::max();
  for (const auto& p : associated_primes(i)) best = std::min(best, alpha_of_colon_quotient(i, p));
  return best;
}

Polarization polarize(const MonomialIdeal& i) {
  const int s = i.ambient_size();
  std::vector<int> max_exp(static_cast<std::size_t>(s), 0);
  for (const auto& g : i.generators())
    for (int v = 0; v < s; ++v) max_exp[static_cast<std::size_t>(v)] = std::max(max_exp[static_cast<std::size_t>(v)], g.exponent(v));
  std::vector<int> first(static_cast<std::size_t>(s), 0);
  Polarization out;
  for (int v = 0; v < s; ++v) {
    first[static_cast<std::size_t>(v)] = static_cast<int>(out.origin.size());
    for (int k = 0; k < max_exp[static_cast<std::size_t>(v)]; ++k) out.origin.emplace_back(v, k);
  }
  const int n = static_cast<int>(out.origin.size());
  std::vector<Monomial> gens;
  for (const auto& g : i.generators()) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < s; ++v)
      for (int k = 0; k < g.exponent(v); ++k) e[static_cast<std::size_t>(first[static_cast<std::size_t>(v)] + k)] = 1;
    gens.emplace_back(std::move(e));
  }
  out.ideal = MonomialIdeal(n, std::move(gens));
  return out;
}

}  // namespace vnum
