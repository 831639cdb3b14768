#include "vnum/exact_rank.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <optional>

namespace vnum {

namespace {

struct Overflow {};

// a*b - c*d, exactly divided by `div`, for the two scalar types.
std::int64_t bareiss_step(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t div) {
  const __int128 num = static_cast<__int128>(a) * b - static_cast<__int128>(c) * d;
  const __int128 q = num / div;
  if (q > INT64_MAX || q < INT64_MIN) throw Overflow{};
  return static_cast<std::int64_t>(q);
}

mpz_class bareiss_step(const mpz_class& a, const mpz_class& b, const mpz_class& c, const mpz_class& d,
                       const mpz_class& div) {
  mpz_class num = a * b - c * d;
  mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), div.get_mpz_t());
  return num;
}

bool is_zero(std::int64_t x) { return x == 0; }
bool is_zero(const mpz_class& x) { return sgn(x) == 0; }

template <class T>
std::size_t bareiss_rank(std::vector<std::vector<T>> a, std::size_t cols) {
  const std::size_t rows = a.size();
  T prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && is_zero(a[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = bareiss_step(a[r][c], a[i][j], a[i][c], a[r][j], prev);
      a[i][c] = T(0);
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

}  // namespace

std::string to_string(Field k) { return k == Field::Rationals ? "Q" : "GF2"; }

std::size_t rank_rational(const IntMatrix& m) {
  std::vector<std::vector<std::int64_t>> a(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  try {
    return bareiss_rank(std::move(a), m.cols());
  } catch (const Overflow&) {
  }
  std::vector<std::vector<mpz_class>> big(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) big[i][j] = static_cast<long>(m(i, j));
  return bareiss_rank(std::move(big), m.cols());
}

std::size_t rank_gf2(const IntMatrix& m) {
  const std::size_t words = (m.cols() + 63) / 64;
  std::vector<std::uint64_t> bits(m.rows() * words, 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) & 1) bits[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
  auto row = [&](std::size_t i) { return bits.data() + i * words; };

  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t piv = r;
    while (piv < m.rows() && !(row(piv)[w] & bit)) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) std::swap_ranges(row(piv), row(piv) + words, row(r));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (!(row(i)[w] & bit)) continue;
      // Columns before w are already zero in both rows.
      for (std::size_t k = w; k < words; ++k) row(i)[k] ^= row(r)[k];
    }
    ++r;
  }
  return r;
}

std::size_t rank(const IntMatrix& m, Field k) { return k == Field::Rationals ? rank_rational(m) : rank_gf2(m); }

}  // namespace vnum
