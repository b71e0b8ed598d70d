#ifndef RLAT_FILTERS_HPP
#define RLAT_FILTERS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rlat/lattice.hpp"

namespace rlat {

/// A filter of L: contains the top, closed under ⊙, upward closed.
/// Produced only by the operations below, which establish the invariant.
struct Filter {
  const Lattice* lattice = nullptr;
  ElementSet members;

  bool contains(int x) const { return members.contains(x); }
  bool is_trivial() const { return members == ElementSet::single(lattice->top()); }
  bool is_improper() const { return members == lattice->all(); }

  friend bool operator==(const Filter& a, const Filter& b) {
    return a.lattice == b.lattice && a.members == b.members;
  }
};

/// Whether a subset mask is a filter ((F1) and (F2)).
bool is_filter_subset(const Lattice& l, ElementSet s);

/// Whether a subset mask is a deductive system ((D1) and (D2)).
bool is_deductive_system(const Lattice& l, ElementSet s);

/// [S): least filter containing S — upward closure of the ⊙-closure of S∪{1}.
Filter generated_filter(const Lattice& l, ElementSet s);

/// [x); additionally verified against {z : xⁿ ≤ z for some n ≥ 1}.
Filter principal_filter(const Lattice& l, int x);

Filter filter_meet(const Filter& f, const Filter& g);
Filter filter_join(const Filter& f, const Filter& g);

/// F* = {x : x∨y = 1 for all y ∈ F}, cross-checked against {x : F∩[x) = {1}}.
Filter star_filter(const Filter& f);

/// Canonical order on filters: cardinality, then first differing element
/// (the filter containing it sorts first).
bool filter_order_less(ElementSet a, ElementSet b, int n);

/// Enumeration strategies. The 2ⁿ subset scan doubles as the brute-force
/// oracle; closure generation joins/meets principal filters to a fixpoint.
std::vector<ElementSet> all_filters_scan(const Lattice& l);
std::vector<ElementSet> all_filters_closure(const Lattice& l, std::size_t cap);

/// The complete lattice (Filt(L), ⊆) with meet/join tables and cached
/// per-filter classification flags.
class FilterLattice {
 public:
  const Lattice& lattice() const { return *lat_; }
  int count() const { return static_cast<int>(filters_.size()); }
  ElementSet members(int i) const { return filters_[i]; }
  Filter filter(int i) const { return Filter{lat_, filters_[i]}; }
  int index_of(ElementSet s) const;  // -1 when not a filter of L

  int trivial_index() const { return trivial_; }
  int full_index() const { return full_; }

  int meet(int i, int j) const { return meet_[i * count() + j]; }
  int join(int i, int j) const { return join_[i * count() + j]; }
  bool leq(int i, int j) const { return filters_[i].subset_of(filters_[j]); }

  bool proper(int i) const { return i != full_; }
  bool is_prime(int i) const;
  bool is_maximal(int i) const;
  bool is_minimal_prime(int i) const;
  bool is_simple(int i) const;
  bool is_essential_in_L(int i) const;
  ElementSet principal_generators(int i) const;

  std::vector<int> primes() const;
  std::vector<int> maximals() const;
  std::vector<int> minimal_primes() const;
  std::vector<int> simples() const;  // the atoms of Filt(L)

  /// H ∈ E_F: for every G ∈ Filt(L), H∩G = {1} implies F∩G = {1}.
  /// Uses the F* shortcut when F = L.
  bool essential_in(int h, int f) const;
  std::vector<int> essential_family(int f, std::size_t cap = 1 << 20) const;

  /// Rad(L) = ∩Max(L); verified against the element-wise power formula.
  int radical() const;

 private:
  friend FilterLattice all_filters(const Lattice&, std::size_t);

  void classify() const;

  const Lattice* lat_ = nullptr;
  std::vector<ElementSet> filters_;
  std::vector<std::uint8_t> meet_, join_;
  int trivial_ = -1, full_ = -1;

  // Classification is computed once on first use; the object is logically
  // immutable afterwards.
  mutable bool classified_ = false;
  mutable std::vector<std::uint8_t> prime_, maximal_, minimal_prime_, simple_, essential_;
  mutable std::vector<ElementSet> generators_;
  mutable int radical_ = -1;
};

FilterLattice all_filters(const Lattice& l, std::size_t cap = 1u << 20);

std::string render_filter(const FilterLattice& fl, int i);

}  // namespace rlat

#endif
