#ifndef RLAT_ELEMSET_HPP
#define RLAT_ELEMSET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>

namespace rlat {

/// A subset of lattice elements as a 64-bit characteristic mask.
/// Element indices are positions in the owning Lattice's canonical order.
class ElementSet {
 public:
  constexpr ElementSet() : bits_(0) {}
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  ElementSet(std::initializer_list<int> xs) : bits_(0) {
    for (int x : xs) insert(x);
  }

  static constexpr ElementSet full(int n) {
    return ElementSet(n >= 64 ? ~0ull : ((1ull << n) - 1));
  }
  static constexpr ElementSet single(int x) { return ElementSet(1ull << x); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool contains(int x) const { return (bits_ >> x) & 1u; }
  void insert(int x) { bits_ |= (1ull << x); }
  void erase(int x) { bits_ &= ~(1ull << x); }

  constexpr bool subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool proper_subset_of(ElementSet o) const {
    return subset_of(o) && bits_ != o.bits_;
  }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ | b.bits_);
  }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & b.bits_);
  }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(ElementSet a, ElementSet b) = default;

  /// Iterates set members in increasing index order.
  class iterator {
   public:
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    friend constexpr bool operator==(iterator a, iterator b) = default;

   private:
    std::uint64_t rest_;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_;
};

}  // namespace rlat

#endif
