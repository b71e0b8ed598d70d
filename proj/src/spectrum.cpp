#include "rlat/spectrum.hpp"

#include <bit>
#include <sstream>

#include "rlat/structure.hpp"

namespace rlat {

namespace {

[[noreturn]] void internal(const std::string& msg) {
  throw Error(ErrorKind::InternalInconsistency, msg);
}

}  // namespace

SpectrumSpace::SpectrumSpace(const FilterLattice& fl, SpaceKind kind)
    : fl_(&fl), kind_(kind) {
  points_ = kind == SpaceKind::Spec ? fl.primes() : fl.maximals();
  all_ = points_.size() >= 64 ? ~0ull : (1ull << points_.size()) - 1;
  opens_.assign(fl.count(), 0);
  for (int fi = 0; fi < fl.count(); ++fi) {
    PointSet u = 0;
    for (std::size_t p = 0; p < points_.size(); ++p)
      if (!fl.members(fi).subset_of(fl.members(points_[p]))) u |= 1ull << p;
    opens_[fi] = u;
  }
}

PointSet SpectrumSpace::open_set(ElementSet a) const {
  if (a.empty()) return 0;  // ∅ ⊆ P for every point
  return opens_[fl_->index_of(generated_filter(fl_->lattice(), a).members)];
}

bool SpectrumSpace::is_open(PointSet y) const {
  for (PointSet u : opens_)
    if (u == y) return true;
  return false;
}

PointSet SpectrumSpace::closure(PointSet y) const {
  PointSet result;
  if (y == 0) {
    result = 0;
  } else {
    ElementSet cut = fl_->lattice().all();
    for (std::size_t p = 0; p < points_.size(); ++p)
      if (y >> p & 1) cut = cut & fl_->members(points_[p]);
    // ∩𝔄 is a filter (an intersection of filters), so V(∩𝔄) is available.
    int fi = fl_->index_of(cut);
    if (fi < 0) internal("intersection of points is not a filter");
    result = all_ & ~opens_[fi];
  }
  if (result != closure_by_scan(y)) internal("closure routes disagree");
  return result;
}

PointSet SpectrumSpace::closure_by_scan(PointSet y) const {
  // Generic route: intersect every closed superset.
  PointSet best = all_;
  for (PointSet u : opens_) {
    PointSet c = all_ & ~u;
    if ((y & ~c) == 0) best &= c;
  }
  return best;
}

PointSet SpectrumSpace::interior(PointSet y) const {
  // Largest open inside Y; by union-closedness it is U of the join of all
  // filters whose open lies inside Y.
  int g = fl_->trivial_index();
  for (int fi = 0; fi < fl_->count(); ++fi)
    if ((opens_[fi] & ~y) == 0) g = fl_->join(g, fi);
  PointSet u = opens_[g];
  if ((u & ~y) != 0) internal("interior escapes its set");
  return u;
}

bool SpectrumSpace::is_dense(PointSet y) const {
  bool dense = closure(y) == all_;
  // Cross-checks: 𝔄 dense in Spec(L) iff ∩𝔄 = {1}; same for Max(L) when
  // Rad(L) = {1}. Outside that hypothesis only the direct value is reported.
  bool check = kind_ == SpaceKind::Spec ||
               fl_->members(fl_->radical()) == ElementSet::single(fl_->lattice().top());
  if (check) {
    ElementSet cut = fl_->lattice().all();
    for (std::size_t p = 0; p < points_.size(); ++p)
      if (y >> p & 1) cut = cut & fl_->members(points_[p]);
    bool trivialcut = y != 0 && cut == ElementSet::single(fl_->lattice().top());
    if (y != 0 && dense != trivialcut) internal("density routes disagree");
  }
  return dense;
}

bool SpectrumSpace::is_nowhere_dense(PointSet y) const {
  return interior(closure(y)) == 0;
}

PointSet SpectrumSpace::isolated_points() const {
  PointSet m0 = 0;
  for (std::size_t p = 0; p < points_.size(); ++p)
    if (is_open(1ull << p)) m0 |= 1ull << p;
  if (kind_ != SpaceKind::Max) return m0;

  const FilterLattice& fl = *fl_;
  const Lattice& l = fl.lattice();
  if (fl.members(fl.radical()) == ElementSet::single(l.top())) {
    // Three-way check: isolated iff M = [e*) for a Boolean e iff M is a
    // direct summand of L.
    BooleanCenter b = boolean_center(l);
    PointSet byboolean = 0;
    for (std::size_t p = 0; p < points_.size(); ++p)
      for (int e : b.members)
        if (fl.members(points_[p]) == principal_filter(l, star(l, e)).members)
          byboolean |= 1ull << p;
    PointSet bysummand = 0;
    for (std::size_t p = 0; p < points_.size(); ++p)
      if (is_direct_summand_of_l(fl, points_[p])) bysummand |= 1ull << p;
    if (m0 != byboolean || m0 != bysummand) internal("isolated-point routes disagree");
  }
  return m0;
}

std::string SpectrumSpace::specialization_dot() const {
  std::ostringstream out;
  out << "digraph " << (kind_ == SpaceKind::Spec ? "spec" : "max") << " {\n";
  out << "  rankdir=BT;\n";
  for (std::size_t p = 0; p < points_.size(); ++p)
    out << "  p" << p << " [label=\"" << render_filter(*fl_, points_[p]) << "\"];\n";
  for (std::size_t p = 0; p < points_.size(); ++p)
    for (std::size_t q = 0; q < points_.size(); ++q)
      if (p != q && fl_->members(points_[p]).proper_subset_of(fl_->members(points_[q])))
        out << "  p" << p << " -> p" << q << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace rlat
