#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace coxnerve {

/// Subset of the generators of a Coxeter matrix, as a 64-bit mask over
/// generator indices. Ordering is by (size, mask) so sorted containers list
/// smaller subsets first.
class GeneratorSet {
 public:
  static constexpr int kCapacity = 64;

  constexpr GeneratorSet() = default;
  constexpr explicit GeneratorSet(std::uint64_t bits) : bits_(bits) {}
  GeneratorSet(std::initializer_list<int> indices) {
    for (int i : indices) insert(i);
  }

  static constexpr GeneratorSet first(int n) {
    return GeneratorSet(n >= kCapacity ? ~std::uint64_t{0}
                                       : (std::uint64_t{1} << n) - 1);
  }
  static constexpr GeneratorSet single(int i) {
    return GeneratorSet(std::uint64_t{1} << i);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr void insert(int i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(int i) { bits_ &= ~(std::uint64_t{1} << i); }
  /// Smallest member index; undefined on the empty set.
  constexpr int min() const { return std::countr_zero(bits_); }
  constexpr int max() const { return 63 - std::countl_zero(bits_); }

  constexpr bool subset_of(GeneratorSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool proper_subset_of(GeneratorSet o) const {
    return subset_of(o) && bits_ != o.bits_;
  }
  constexpr bool disjoint(GeneratorSet o) const { return (bits_ & o.bits_) == 0; }

  constexpr GeneratorSet operator|(GeneratorSet o) const { return GeneratorSet(bits_ | o.bits_); }
  constexpr GeneratorSet operator&(GeneratorSet o) const { return GeneratorSet(bits_ & o.bits_); }
  constexpr GeneratorSet operator-(GeneratorSet o) const { return GeneratorSet(bits_ & ~o.bits_); }
  constexpr GeneratorSet& operator|=(GeneratorSet o) { bits_ |= o.bits_; return *this; }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  constexpr bool operator==(const GeneratorSet&) const = default;
  /// Size first, then lexicographic on the sorted index lists.
  std::strong_ordering operator<=>(const GeneratorSet& o) const {
    if (auto c = size() <=> o.size(); c != 0) return c;
    return indices() <=> o.indices();
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace coxnerve
