#ifndef RLAT_LATTICE_HPP
#define RLAT_LATTICE_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rlat/elemset.hpp"
#include "rlat/errors.hpp"

namespace rlat {

inline constexpr int kMaxOrder = 64;  // subsets must fit a machine word

/// A finite residuated lattice (L, ∧, ∨, ⊙, →, 0, 1), fully validated at
/// construction and immutable afterwards. Elements are indexed along a fixed
/// linear extension of ≤ with the bottom first and the top last; the original
/// names are kept as labels only.
class Lattice {
 public:
  /// Builds and validates a lattice from raw tables. `leq[i][j]` is the order
  /// relation on the caller's element indexing; `odot` is row-major x⊙y.
  /// When `arrow` is absent it is derived as the residual of ⊙; when present
  /// it is cross-checked against the adjunction.
  static Lattice from_tables(std::vector<std::string> names,
                             const std::vector<std::vector<bool>>& leq,
                             const std::vector<std::vector<int>>& odot,
                             const std::optional<std::vector<std::vector<int>>>& arrow,
                             std::string id = "");

  int size() const { return n_; }
  const std::string& name(int x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& id() const { return id_; }
  void set_id(std::string id) { id_ = std::move(id); }  // label only

  int bottom() const { return 0; }
  int top() const { return n_ - 1; }

  bool leq(int x, int y) const { return (up_[x].bits() >> y) & 1u; }
  int meet(int x, int y) const { return meet_[x * n_ + y]; }
  int join(int x, int y) const { return join_[x * n_ + y]; }
  int odot(int x, int y) const { return odot_[x * n_ + y]; }
  int arrow(int x, int y) const { return arrow_[x * n_ + y]; }

  ElementSet upset(int x) const { return up_[x]; }
  ElementSet downset(int x) const { return down_[x]; }
  ElementSet all() const { return ElementSet::full(n_); }

  int element_index(const std::string& name) const;  // -1 when unknown

 private:
  Lattice() = default;

  int n_ = 0;
  std::string id_;
  std::vector<std::string> names_;
  std::vector<ElementSet> up_, down_;
  std::vector<std::uint8_t> meet_, join_, odot_, arrow_;
};

/// x* := x→0
int star(const Lattice& l, int x);

/// x⁰ := 1, xⁿ := xⁿ⁻¹⊙x
int power(const Lattice& l, int x, int n);

struct BooleanCenter {
  ElementSet members;
  std::array<int, kMaxOrder> complement_of;  // valid for members only
};

/// B(L): elements with a (necessarily unique) lattice complement.
BooleanCenter boolean_center(const Lattice& l);

/// Parses the `rlat 1` text format. `id` labels the lattice in reports.
Lattice load_lattice(const std::string& text, std::string id = "");
Lattice load_lattice_file(const std::string& path);

/// Serializes back to the text format (canonical indexing, arrow included).
std::string to_rlat(const Lattice& l);

std::string render_element_set(const Lattice& l, ElementSet s);

}  // namespace rlat

#endif
