#include <doctest.h>

#include <bit>

#include "rlat/spectrum.hpp"
#include "support.hpp"

using namespace rlat;
using rlat::test::el;
using rlat::test::load_fixture;
using rlat::test::set_of;

namespace {

PointSet points_named(const SpectrumSpace& sp, const std::vector<ElementSet>& wanted) {
  PointSet y = 0;
  for (std::size_t p = 0; p < sp.points().size(); ++p)
    for (const ElementSet& w : wanted)
      if (sp.filters().members(sp.points()[p]) == w) y |= 1ull << p;
  return y;
}

}  // namespace

TEST_CASE("open sets on ex44") {
  Lattice l = load_fixture("ex44.rlat");
  FilterLattice fl = all_filters(l);
  SpectrumSpace spec(fl, SpaceKind::Spec);
  REQUIRE(spec.point_count() == 3);
  // U(c): c lies in [a) and [b) but not in {1}
  CHECK(spec.open_set(set_of(l, {"c"})) == points_named(spec, {set_of(l, {"1"})}));
  CHECK(spec.open_set(set_of(l, {"1"})) == 0);
  CHECK(spec.closed_set(set_of(l, {"1"})) == spec.everything());
}

TEST_CASE("open sets on ex55 Max") {
  Lattice l = load_fixture("ex55.rlat");
  FilterLattice fl = all_filters(l);
  SpectrumSpace max(fl, SpaceKind::Max);
  REQUIRE(max.point_count() == 2);
  CHECK(max.open_set(set_of(l, {"a"})) == points_named(max, {set_of(l, {"b", "1"})}));
}

TEST_CASE("closure on the fixtures") {
  Lattice ex44 = load_fixture("ex44.rlat");
  FilterLattice fl44 = all_filters(ex44);
  SpectrumSpace spec44(fl44, SpaceKind::Spec);
  CHECK(spec44.closure(points_named(spec44, {set_of(ex44, {"1"})})) == spec44.everything());
  CHECK(spec44.closure(0) == 0);

  Lattice ex55 = load_fixture("ex55.rlat");
  FilterLattice fl55 = all_filters(ex55);
  SpectrumSpace max55(fl55, SpaceKind::Max);
  PointSet pa = points_named(max55, {set_of(ex55, {"a", "1"})});
  CHECK(max55.closure(pa) == pa);
}

TEST_CASE("closure equals the generic smallest-closed-superset on all fixtures") {
  for (const char* f : {"ex44.rlat", "ex55.rlat", "idr.rlat", "bool2.rlat", "bool4.rlat",
                        "bool8.rlat"}) {
    Lattice l = load_fixture(f);
    FilterLattice fl = all_filters(l);
    for (SpaceKind k : {SpaceKind::Spec, SpaceKind::Max}) {
      SpectrumSpace sp(fl, k);
      for (PointSet y = 0; y < (1ull << sp.point_count()); ++y)
        CHECK(sp.closure(y) == sp.closure_by_scan(y));
    }
  }
}

TEST_CASE("interior is the largest open inside") {
  for (const char* f : {"ex44.rlat", "ex55.rlat", "bool8.rlat"}) {
    Lattice l = load_fixture(f);
    FilterLattice fl = all_filters(l);
    for (SpaceKind k : {SpaceKind::Spec, SpaceKind::Max}) {
      SpectrumSpace sp(fl, k);
      for (PointSet y = 0; y < (1ull << sp.point_count()); ++y) {
        PointSet best = 0;
        for (int fi = 0; fi < fl.count(); ++fi)
          if ((sp.open_of_filter(fi) & ~y) == 0) best |= sp.open_of_filter(fi);
        CHECK(sp.interior(y) == best);
      }
    }
  }
}

TEST_CASE("density on ex55 Max") {
  Lattice l = load_fixture("ex55.rlat");
  FilterLattice fl = all_filters(l);
  SpectrumSpace max(fl, SpaceKind::Max);
  CHECK(max.is_dense(max.everything()));
  CHECK(max.is_dense(points_named(
      max, {set_of(l, {"a", "1"}), set_of(l, {"b", "1"})})));  // the whole space
  CHECK_FALSE(max.is_dense(points_named(max, {set_of(l, {"a", "1"})})));
}

TEST_CASE("density matches the intersection test on Spec") {
  // Cor: 𝔄 dense in Spec(L) iff ∩𝔄 = {1}, checked exhaustively
  for (const char* f : {"ex44.rlat", "ex55.rlat", "idr.rlat", "bool8.rlat"}) {
    Lattice l = load_fixture(f);
    FilterLattice fl = all_filters(l);
    SpectrumSpace sp(fl, SpaceKind::Spec);
    for (PointSet y = 1; y < (1ull << sp.point_count()); ++y) {
      ElementSet cut = l.all();
      for (int p = 0; p < sp.point_count(); ++p)
        if (y >> p & 1) cut = cut & fl.members(sp.points()[p]);
      CHECK(sp.is_dense(y) == (cut == ElementSet::single(l.top())));
    }
  }
}

TEST_CASE("nowhere dense on ex55 Max: V_Max([a)) has interior") {
  Lattice l = load_fixture("ex55.rlat");
  FilterLattice fl = all_filters(l);
  SpectrumSpace max(fl, SpaceKind::Max);
  PointSet va = max.closed_set(set_of(l, {"a", "1"}));
  CHECK(va == points_named(max, {set_of(l, {"a", "1"})}));
  // {[a)} = U_Max(b) is itself open, so it is not nowhere dense
  CHECK_FALSE(max.is_nowhere_dense(va));
}

TEST_CASE("the nowhere-dense criterion for essential filters needs a trivial radical") {
  // With Rad(L) = {1} (ex55) the equivalence holds for every filter; on ex44
  // it fails exactly as recorded: [c) is essential yet V_Max([c)) = Max(L).
  Lattice ex55 = load_fixture("ex55.rlat");
  FilterLattice fl55 = all_filters(ex55);
  SpectrumSpace max55(fl55, SpaceKind::Max);
  for (int i = 0; i < fl55.count(); ++i)
    CHECK(fl55.is_essential_in_L(i) ==
          max55.is_nowhere_dense(max55.closed_set(fl55.members(i))));

  Lattice ex44 = load_fixture("ex44.rlat");
  FilterLattice fl44 = all_filters(ex44);
  SpectrumSpace max44(fl44, SpaceKind::Max);
  ElementSet c = set_of(ex44, {"c", "1"});
  CHECK(fl44.is_essential_in_L(fl44.index_of(c)));
  CHECK(max44.closed_set(c) == max44.everything());
  CHECK_FALSE(max44.is_nowhere_dense(max44.closed_set(c)));
}

TEST_CASE("isolated points") {
  Lattice ex55 = load_fixture("ex55.rlat");
  FilterLattice fl55 = all_filters(ex55);
  SpectrumSpace max55(fl55, SpaceKind::Max);
  CHECK(max55.isolated_points() == max55.everything());  // both points isolated

  Lattice idr = load_fixture("idr.rlat");
  FilterLattice flidr = all_filters(idr);
  SpectrumSpace maxidr(flidr, SpaceKind::Max);
  REQUIRE(maxidr.point_count() == 1);  // local lattice
  CHECK(maxidr.isolated_points() == maxidr.everything());

  Lattice ex44 = load_fixture("ex44.rlat");
  FilterLattice fl44 = all_filters(ex44);
  SpectrumSpace max44(fl44, SpaceKind::Max);
  // direct openness only; the Boolean-form equivalence needs Rad(L) = {1}
  CHECK(max44.isolated_points() == max44.everything());
}

TEST_CASE("smss identities over all filter pairs") {
  for (const char* f : {"ex44.rlat", "ex55.rlat", "idr.rlat", "bool8.rlat"}) {
    Lattice l = load_fixture(f);
    FilterLattice fl = all_filters(l);
    SpectrumSpace sp(fl, SpaceKind::Spec);
    for (int i = 0; i < fl.count(); ++i) {
      CHECK((sp.closed_set(fl.members(i)) == 0) == (i == fl.full_index()));
      for (int j = 0; j < fl.count(); ++j) {
        PointSet vi = sp.closed_set(fl.members(i)), vj = sp.closed_set(fl.members(j));
        CHECK(((vi & ~vj) == 0) == fl.leq(j, i));
      }
    }
    for (int x = 0; x < l.size(); ++x)
      for (int y = 0; y < l.size(); ++y)
        CHECK((sp.open_set(ElementSet::single(x)) & sp.open_set(ElementSet::single(y))) ==
              sp.open_set(ElementSet::single(l.join(x, y))));
  }
}

TEST_CASE("spec DOT export of ex44") {
  Lattice l = load_fixture("ex44.rlat");
  FilterLattice fl = all_filters(l);
  SpectrumSpace sp(fl, SpaceKind::Spec);
  std::string dot = sp.specialization_dot();
  CHECK(dot.find("p0 [label=\"{1}\"]") != std::string::npos);
  CHECK(dot.find("p0 -> p1;") != std::string::npos);
  CHECK(dot.find("p0 -> p2;") != std::string::npos);
  CHECK(dot.find("p1 -> p2;") == std::string::npos);
  int nodes = 0, edges = 0;
  for (std::size_t at = 0; (at = dot.find("label", at)) != std::string::npos; ++at) ++nodes;
  for (std::size_t at = 0; (at = dot.find("->", at)) != std::string::npos; ++at) ++edges;
  CHECK(nodes == 3);
  CHECK(edges == 2);
}
