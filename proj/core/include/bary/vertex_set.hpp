#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace bary {

/// Largest ground set a complex may live on.
inline constexpr int kMaxGroundSize = 64;

/**
 * A subset of the ground set [n] = {1, ..., n} with n <= 64, stored as one
 * machine word. Element v occupies bit v - 1.
 *
 * The ordering operators implement the deterministic order used everywhere
 * in the library: by cardinality first, then lexicographically on the
 * sorted element lists.
 */
class VertexSet {
 public:
  constexpr VertexSet() = default;

  /// Throws Error(VertexOutOfRange) for elements outside 1..64.
  VertexSet(std::initializer_list<int> elements);
  explicit VertexSet(std::span<const int> elements);

  static constexpr VertexSet from_bits(std::uint64_t bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }

  /// The full set [n].
  static constexpr VertexSet range(int n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  static constexpr VertexSet singleton(int v) {
    return from_bits(std::uint64_t{1} << (v - 1));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr bool contains(int v) const {
    return v >= 1 && v <= 64 && ((bits_ >> (v - 1)) & 1U) != 0;
  }
  constexpr bool is_subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool is_proper_subset_of(VertexSet other) const {
    return is_subset_of(other) && bits_ != other.bits_;
  }

  /// Smallest / largest element; 0 for the empty set.
  constexpr int min() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }
  constexpr int max() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

  constexpr VertexSet with(int v) const { return from_bits(bits_ | singleton(v).bits_); }
  constexpr VertexSet without(int v) const { return from_bits(bits_ & ~singleton(v).bits_); }

  std::vector<int> elements() const;
  std::string to_string() const;

  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
      f(std::countr_zero(rest) + 1);
    }
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return from_bits(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return from_bits(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return from_bits(a.bits_ & ~b.bits_); }
  friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return from_bits(a.bits_ ^ b.bits_); }

  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

  // For equal cardinality, the lowest element of the symmetric difference
  // decides the lexicographic comparison of the sorted element lists.
  friend constexpr std::strong_ordering operator<=>(VertexSet a, VertexSet b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    const std::uint64_t diff = a.bits_ ^ b.bits_;
    if (diff == 0) return std::strong_ordering::equal;
    return (a.bits_ & (diff & (~diff + 1))) != 0 ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Sorts into the deterministic order and drops duplicates.
void sort_unique(std::vector<VertexSet>& sets);

/// Keeps only inclusion-maximal members, in deterministic order.
std::vector<VertexSet> maximal_elements(std::vector<VertexSet> sets);

/// Keeps only inclusion-minimal members, in deterministic order.
std::vector<VertexSet> minimal_elements(std::vector<VertexSet> sets);

}  // namespace bary
