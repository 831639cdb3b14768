#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "vnum/errors.hpp"

namespace vnum {

using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

/// Mask with the low `n` bits set.
constexpr Mask full_mask(int n) noexcept {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

/// A subset of the ambient vertices {0, ..., ambient_size-1}.
///
/// Vertices are 0-based in the API; text formats use 1-based labels t1..ts.
/// Set algebra between sets of different ambient sizes throws InputError.
class VertexSet {
 public:
  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(Mask rest) : rest_(rest) {}

    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const iterator&) const = default;

   private:
    Mask rest_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(int ambient_size, Mask bits = 0) : ambient_(ambient_size), bits_(bits) {
    if (ambient_size < 0 || ambient_size > kMaxVertices)
      throw InputError("ambient size out of range: " + std::to_string(ambient_size));
    if (bits & ~full_mask(ambient_size)) throw InputError("vertex index out of range");
  }
  VertexSet(int ambient_size, std::initializer_list<int> members);
  static VertexSet from_members(int ambient_size, const std::vector<int>& members);
  static VertexSet full(int ambient_size) { return VertexSet(ambient_size, full_mask(ambient_size)); }

  int ambient_size() const noexcept { return ambient_; }
  Mask bits() const noexcept { return bits_; }
  int size() const noexcept { return std::popcount(bits_); }
  bool empty() const noexcept { return bits_ == 0; }
  bool contains(int v) const noexcept { return v >= 0 && v < ambient_ && ((bits_ >> v) & 1U); }

  VertexSet with(int v) const;
  VertexSet without(int v) const;
  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet operator|(const VertexSet& o) const;
  VertexSet operator&(const VertexSet& o) const;
  VertexSet operator-(const VertexSet& o) const;
  VertexSet complement() const { return VertexSet(ambient_, ~bits_ & full_mask(ambient_)); }

  std::vector<int> members() const;
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  bool operator==(const VertexSet&) const = default;

  /// Lexicographic order on the sorted member lists ({1} < {1,2} < {2}).
  /// Sets on different ambients order by ambient size first.
  std::strong_ordering operator<=>(const VertexSet& o) const;

  /// "{t1,t3}" with 1-based labels.
  std::string to_string() const;

 private:
  void require_same_ambient(const VertexSet& o) const {
    if (ambient_ != o.ambient_)
      throw InputError("vertex sets on different ambients (" + std::to_string(ambient_) + " vs " +
                       std::to_string(o.ambient_) + ")");
  }

  int ambient_ = 0;
  Mask bits_ = 0;
};

/// Lexicographic comparison of two masks viewed as sorted member lists.
bool lex_less(Mask a, Mask b) noexcept;

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

}  // namespace vnum
