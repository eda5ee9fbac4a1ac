#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace semitutte {

// Subset of a ground set with at most 64 elements; bit i = element at
// position i of the ground-set linear order.
struct Subset {
  std::uint64_t bits = 0;

  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t b) : bits(b) {}

  static constexpr Subset single(int i) { return Subset(std::uint64_t{1} << i); }
  // The n lowest positions, i.e. a full ground set of size n.
  static constexpr Subset first_n(int n) {
    return Subset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr bool contains(int i) const { return (bits >> i) & 1u; }
  constexpr bool empty() const { return bits == 0; }
  constexpr int size() const { return std::popcount(bits); }
  constexpr bool subset_of(Subset o) const { return (bits & ~o.bits) == 0; }
  constexpr bool intersects(Subset o) const { return (bits & o.bits) != 0; }

  constexpr Subset with(int i) const { return Subset(bits | (std::uint64_t{1} << i)); }
  constexpr Subset without(int i) const { return Subset(bits & ~(std::uint64_t{1} << i)); }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits | b.bits); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits & b.bits); }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits & ~b.bits); }
  friend constexpr bool operator==(Subset a, Subset b) { return a.bits == b.bits; }
  friend constexpr bool operator!=(Subset a, Subset b) { return a.bits != b.bits; }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t m = bits; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }
};

// Canonical subset order: cardinality first, then lexicographic by the
// ground order (the set containing the smallest differing element wins).
inline bool canonical_less(Subset a, Subset b) {
  int ca = a.size(), cb = b.size();
  if (ca != cb) return ca < cb;
  std::uint64_t d = a.bits ^ b.bits;
  if (d == 0) return false;
  std::uint64_t low = d & (~d + 1);
  return (a.bits & low) != 0;
}

// Re-index a subset after dropping everything outside `keep`: surviving
// elements are packed to positions 0..|keep|-1 preserving relative order.
inline Subset compress_into(Subset s, Subset keep) {
  std::uint64_t out = 0;
  int j = 0;
  for (std::uint64_t m = keep.bits; m; m &= m - 1, ++j) {
    std::uint64_t low = m & (~m + 1);
    if (s.bits & low) out |= std::uint64_t{1} << j;
  }
  return Subset(out);
}

}  // namespace semitutte
