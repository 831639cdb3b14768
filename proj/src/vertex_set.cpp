#include "vnum/vertex_set.hpp"

#include <ostream>

namespace vnum {

VertexSet::VertexSet(int ambient_size, std::initializer_list<int> members) : VertexSet(ambient_size) {
  for (int v : members) *this = with(v);
}

VertexSet VertexSet::from_members(int ambient_size, const std::vector<int>& members) {
  VertexSet s(ambient_size);
  for (int v : members) s = s.with(v);
  return s;
}

VertexSet VertexSet::with(int v) const {
  if (v < 0 || v >= ambient_) throw InputError("vertex index out of range: " + std::to_string(v + 1));
  return VertexSet(ambient_, bits_ | (Mask{1} << v));
}

VertexSet VertexSet::without(int v) const {
  if (v < 0 || v >= ambient_) throw InputError("vertex index out of range: " + std::to_string(v + 1));
  return VertexSet(ambient_, bits_ & ~(Mask{1} << v));
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  require_same_ambient(other);
  return (bits_ & ~other.bits_) == 0;
}

bool VertexSet::intersects(const VertexSet& other) const {
  require_same_ambient(other);
  return (bits_ & other.bits_) != 0;
}

VertexSet VertexSet::operator|(const VertexSet& o) const {
  require_same_ambient(o);
  return VertexSet(ambient_, bits_ | o.bits_);
}

VertexSet VertexSet::operator&(const VertexSet& o) const {
  require_same_ambient(o);
  return VertexSet(ambient_, bits_ & o.bits_);
}

VertexSet VertexSet::operator-(const VertexSet& o) const {
  require_same_ambient(o);
  return VertexSet(ambient_, bits_ & ~o.bits_);
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int v : *this) out.push_back(v);
  return out;
}

bool lex_less(Mask a, Mask b) noexcept {
  if (a == b) return false;
  const Mask diff = a ^ b;
  const Mask low = diff & (~diff + 1);
  // Both lists agree below `low`. The list holding `low` is smaller unless the
  // other list has nothing above `low`, in which case the other is a prefix.
  const Mask above = ~((low << 1) - 1);
  if (a & low) return (b & above) != 0;
  return (a & above) == 0;
}

std::strong_ordering VertexSet::operator<=>(const VertexSet& o) const {
  if (ambient_ != o.ambient_) return ambient_ <=> o.ambient_;
  if (bits_ == o.bits_) return std::strong_ordering::equal;
  return lex_less(bits_, o.bits_) ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string VertexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int v : *this) {
    if (!first) s += ',';
    s += 't' + std::to_string(v + 1);
    first = false;
  }
  return s + '}';
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s) { return os << s.to_string(); }

}  // namespace vnum
