#ifndef RLAT_SPECTRUM_HPP
#define RLAT_SPECTRUM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rlat/filters.hpp"

namespace rlat {

enum class SpaceKind { Spec, Max };

/// Point sets are 64-bit masks over positions in `points()`.
using PointSet = std::uint64_t;

/// Spec(L) or Max(L) with the Stone topology. Every open is U(F) for some
/// filter F, so the open family is materialized indexed by filter.
class SpectrumSpace {
 public:
  SpectrumSpace(const FilterLattice& fl, SpaceKind kind);

  SpaceKind kind() const { return kind_; }
  const FilterLattice& filters() const { return *fl_; }
  const std::vector<int>& points() const { return points_; }  // filter indices
  int point_count() const { return static_cast<int>(points_.size()); }
  PointSet everything() const { return all_; }

  /// U(A) = {P : A ⊄ P} (intersected with Max(L) for the subspace).
  PointSet open_set(ElementSet a) const;
  PointSet open_of_filter(int fi) const { return opens_[fi]; }
  /// V(A), the complement of U(A).
  PointSet closed_set(ElementSet a) const { return all_ & ~open_set(a); }

  bool is_open(PointSet y) const;
  bool is_closed(PointSet y) const { return is_open(all_ & ~y); }

  /// Closure computed as V(∩𝔄); cross-checked against the generic
  /// smallest-closed-superset scan.
  PointSet closure(PointSet y) const;
  PointSet closure_by_scan(PointSet y) const;

  /// Largest U(F) contained in Y (the open family is union-closed).
  PointSet interior(PointSet y) const;

  bool is_dense(PointSet y) const;
  bool is_nowhere_dense(PointSet y) const;

  /// M₀(L): points whose singleton is open. Only defined for Max(L); when
  /// Rad(L) = {1} the result is verified against the Boolean-element form and
  /// the direct-summand form.
  PointSet isolated_points() const;

  /// DOT digraph of the specialization preorder (edge P→Q iff P ⊊ Q).
  std::string specialization_dot() const;

 private:
  const FilterLattice* fl_;
  SpaceKind kind_;
  std::vector<int> points_;
  std::vector<PointSet> opens_;  // indexed by filter index
  PointSet all_ = 0;
};

}  // namespace rlat

#endif
