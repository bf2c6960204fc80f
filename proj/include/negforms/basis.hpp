#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "negforms/error.hpp"

namespace negforms {

/// Strictly increasing tuple of 0-based indices, stored as a bitmask. Names
/// both dx_I in the de Rham complex and zeta_S in the Koszul complex; every
/// sign in the library comes from merge_sign().
class IndexSet {
 public:
  static constexpr int kMaxIndex = 32;

  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint32_t bits) : bits_(bits) {}

  IndexSet(std::initializer_list<int> idx) : IndexSet(from_indices(std::vector<int>(idx))) {}

  /// Rejects unsorted, repeated, or out-of-range entries.
  static IndexSet from_indices(const std::vector<int>& idx) {
    std::uint32_t bits = 0;
    int prev = -1;
    for (int i : idx) {
      if (i < 0 || i >= kMaxIndex) throw DomainError("basis index out of range");
      if (i <= prev) throw DomainError("basis indices must be strictly increasing");
      bits |= (1u << i);
      prev = i;
    }
    return IndexSet(bits);
  }

  static IndexSet single(int i) {
    if (i < 0 || i >= kMaxIndex) throw DomainError("basis index out of range");
    return IndexSet(1u << i);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr int max_index() const { return bits_ == 0 ? -1 : 31 - std::countl_zero(bits_); }

  std::vector<int> indices() const {
    std::vector<int> r;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) r.push_back(std::countr_zero(b));
    return r;
  }

  IndexSet without(int i) const { return IndexSet(bits_ & ~(1u << i)); }

  /// Drops index i (which must be absent) and shifts higher indices down by one.
  IndexSet remove_slot(int i) const {
    if (contains(i)) throw DomainError("cannot remove an occupied slot");
    const std::uint32_t low = bits_ & ((1u << i) - 1u);
    const std::uint32_t high = i + 1 >= 32 ? 0u : (bits_ >> (i + 1)) << i;
    return IndexSet(low | high);
  }

  /// Inserts an empty slot at i, shifting indices >= i up by one.
  IndexSet insert_slot(int i) const {
    const std::uint32_t low = bits_ & ((1u << i) - 1u);
    const std::uint32_t high = (bits_ >> i) << (i + 1);
    return IndexSet(low | high);
  }

  friend constexpr bool operator==(IndexSet a, IndexSet b) { return a.bits_ == b.bits_; }

  /// Orders by size, then lexicographically on the increasing tuples.
  friend std::strong_ordering operator<=>(IndexSet a, IndexSet b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    // Lexicographic on sorted tuples: the first differing index decides, and
    // the set holding the smaller one comes first.
    const std::uint32_t diff = a.bits_ ^ b.bits_;
    if (diff == 0) return std::strong_ordering::equal;
    const int first = std::countr_zero(diff);
    return a.contains(first) ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  std::uint32_t bits_ = 0;
};

/// Sign of the permutation sorting the concatenation a ++ b, or 0 when the
/// sets overlap (repeated anticommuting factor).
inline int merge_sign(IndexSet a, IndexSet b) {
  if ((a.bits() & b.bits()) != 0) return 0;
  int inversions = 0;
  for (int j : b.indices()) {
    const std::uint32_t above = j + 1 >= 32 ? 0u : (a.bits() >> (j + 1));
    inversions += std::popcount(above);
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

inline IndexSet merge(IndexSet a, IndexSet b) { return IndexSet(a.bits() | b.bits()); }

}  // namespace negforms
