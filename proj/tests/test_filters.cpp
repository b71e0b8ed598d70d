#include <doctest.h>

#include <algorithm>

#include "rlat/filters.hpp"
#include "support.hpp"

using namespace rlat;
using rlat::test::el;
using rlat::test::load_fixture;
using rlat::test::oracle_filters;
using rlat::test::oracle_upclose;
using rlat::test::set_of;

namespace {

const char* kFixtures[] = {"ex44.rlat", "ex55.rlat", "idr.rlat",
                           "bool2.rlat", "bool4.rlat", "bool8.rlat"};

ElementSet trivial(const Lattice& l) { return ElementSet::single(l.top()); }

}  // namespace

TEST_CASE("generated filters on the fixtures") {
  Lattice ex44 = load_fixture("ex44.rlat");
  CHECK(generated_filter(ex44, set_of(ex44, {"c"})).members == set_of(ex44, {"c", "1"}));
  CHECK(generated_filter(ex44, set_of(ex44, {"a"})).members == set_of(ex44, {"a", "c", "1"}));
  // upward-closure oracle: a⊙a = a, so [a) is just the up-set of a
  CHECK(generated_filter(ex44, set_of(ex44, {"a"})).members ==
        oracle_upclose(ex44, set_of(ex44, {"a"})));
  for (const char* f : kFixtures) {
    Lattice l = load_fixture(f);
    CHECK(generated_filter(l, trivial(l)).members == trivial(l));
  }
  CHECK_THROWS_AS((void)generated_filter(ex44, ElementSet()), Error);
}

TEST_CASE("principal filters") {
  Lattice idr = load_fixture("idr.rlat");
  CHECK(principal_filter(idr, el(idr, "a")).members == idr.all());  // a² = 0
  Lattice ex55 = load_fixture("ex55.rlat");
  CHECK(principal_filter(ex55, el(ex55, "b")).members == set_of(ex55, {"b", "1"}));
  for (const char* f : kFixtures) {
    Lattice l = load_fixture(f);
    // Boolean case: [e) is the plain up-set of e
    for (int e : boolean_center(l).members)
      CHECK(principal_filter(l, e).members == l.upset(e));
  }
}

TEST_CASE("all_filters against the brute-force oracle") {
  for (const char* f : kFixtures) {
    Lattice l = load_fixture(f);
    FilterLattice fl = all_filters(l);
    std::vector<ElementSet> oracle = oracle_filters(l);
    REQUIRE(fl.count() == static_cast<int>(oracle.size()));
    for (int i = 0; i < fl.count(); ++i)
      CHECK(std::find(oracle.begin(), oracle.end(), fl.members(i)) != oracle.end());
    // scan and closure strategies agree
    CHECK(all_filters_scan(l) == all_filters_closure(l, 1u << 20));
  }
}

TEST_CASE("fixture filter counts and canonical order") {
  Lattice ex44 = load_fixture("ex44.rlat");
  FilterLattice fl44 = all_filters(ex44);
  REQUIRE(fl44.count() == 5);
  CHECK(fl44.members(0) == set_of(ex44, {"1"}));
  CHECK(fl44.members(1) == set_of(ex44, {"c", "1"}));
  CHECK(fl44.members(2) == set_of(ex44, {"a", "c", "1"}));
  CHECK(fl44.members(3) == set_of(ex44, {"b", "c", "1"}));
  CHECK(fl44.members(4) == ex44.all());

  Lattice idr = load_fixture("idr.rlat");
  FilterLattice flidr = all_filters(idr);
  REQUIRE(flidr.count() == 2);
  CHECK(flidr.members(0) == trivial(idr));
  CHECK(flidr.members(1) == idr.all());

  Lattice ex55 = load_fixture("ex55.rlat");
  FilterLattice fl55 = all_filters(ex55);
  REQUIRE(fl55.count() == 4);
  CHECK(fl55.members(1) == set_of(ex55, {"a", "1"}));
  CHECK(fl55.members(2) == set_of(ex55, {"b", "1"}));
}

TEST_CASE("join and meet of filters") {
  Lattice ex55 = load_fixture("ex55.rlat");
  Filter a = principal_filter(ex55, el(ex55, "a"));
  Filter b = principal_filter(ex55, el(ex55, "b"));
  CHECK(filter_join(a, b).members == ex55.all());  // [a)∨[b) = [a⊙b) = [0)
  Lattice ex44 = load_fixture("ex44.rlat");
  Filter fa = principal_filter(ex44, el(ex44, "a"));
  Filter fb = principal_filter(ex44, el(ex44, "b"));
  CHECK(filter_meet(fa, fb).members == principal_filter(ex44, el(ex44, "c")).members);
  for (const char* f : kFixtures) {
    Lattice l = load_fixture(f);
    FilterLattice fl = all_filters(l);
    Filter one{&l, trivial(l)}, whole{&l, l.all()};
    for (int i = 0; i < fl.count(); ++i) {
      CHECK(filter_join(fl.filter(i), one).members == fl.members(i));
      CHECK(filter_meet(fl.filter(i), whole).members == fl.members(i));
    }
  }
  Lattice idr = load_fixture("idr.rlat");
  Filter other{&idr, idr.all()};
  CHECK_THROWS_AS((void)filter_join(a, other), Error);
}

TEST_CASE("star filter") {
  Lattice ex55 = load_fixture("ex55.rlat");
  CHECK(star_filter(principal_filter(ex55, el(ex55, "a"))).members ==
        set_of(ex55, {"b", "1"}));
  Lattice ex44 = load_fixture("ex44.rlat");
  CHECK(star_filter(principal_filter(ex44, el(ex44, "c"))).members == trivial(ex44));
  for (const char* f : kFixtures) {
    Lattice l = load_fixture(f);
    CHECK(star_filter(Filter{&l, trivial(l)}).members == l.all());
    CHECK(star_filter(Filter{&l, l.all()}).members == trivial(l));
    // F* is the largest filter meeting F trivially (all pairs)
    FilterLattice fl = all_filters(l);
    for (int i = 0; i < fl.count(); ++i) {
      ElementSet fstar = star_filter(fl.filter(i)).members;
      for (int g = 0; g < fl.count(); ++g)
        CHECK(fl.members(g).subset_of(fstar) ==
              ((fl.members(i) & fl.members(g)) == trivial(l)));
    }
  }
}

TEST_CASE("prime, maximal, minimal prime on ex44") {
  Lattice l = load_fixture("ex44.rlat");
  FilterLattice fl = all_filters(l);
  int c = fl.index_of(set_of(l, {"c", "1"}));
  int a = fl.index_of(set_of(l, {"a", "c", "1"}));
  int b = fl.index_of(set_of(l, {"b", "c", "1"}));
  int one = fl.trivial_index();
  CHECK_FALSE(fl.is_prime(c));
  CHECK(fl.is_maximal(a));
  CHECK(fl.is_maximal(b));
  CHECK(fl.minimal_primes() == std::vector<int>{one});
  CHECK(fl.primes() == std::vector<int>{one, a, b});
  CHECK(fl.maximals() == std::vector<int>{a, b});
}

TEST_CASE("improper filter is never prime or maximal") {
  for (const char* f : kFixtures) {
    Lattice l = load_fixture(f);
    FilterLattice fl = all_filters(l);
    CHECK_FALSE(fl.is_prime(fl.full_index()));
    CHECK_FALSE(fl.is_maximal(fl.full_index()));
    CHECK_FALSE(fl.is_minimal_prime(fl.full_index()));
  }
}

TEST_CASE("maximality matches the power-star element test") {
  // oracle: M maximal iff for every x, x ∉ M  ⇔  (xⁿ)* ∈ M for some n
  for (const char* f : kFixtures) {
    Lattice l = load_fixture(f);
    FilterLattice fl = all_filters(l);
    for (int i = 0; i < fl.count(); ++i) {
      if (!fl.proper(i)) continue;
      bool oracle = true;
      for (int x = 0; x < l.size(); ++x) {
        bool has = false;
        for (int n = 1; n <= l.size(); ++n)
          if (fl.members(i).contains(star(l, power(l, x, n)))) has = true;
        if (!fl.members(i).contains(x) != has) oracle = false;
      }
      CHECK(fl.is_maximal(i) == oracle);
    }
  }
}

TEST_CASE("radical of the fixtures") {
  Lattice ex44 = load_fixture("ex44.rlat");
  FilterLattice fl44 = all_filters(ex44);
  CHECK(fl44.members(fl44.radical()) == set_of(ex44, {"c", "1"}));
  for (const char* f : {"ex55.rlat", "idr.rlat", "bool2.rlat", "bool8.rlat"}) {
    Lattice l = load_fixture(f);
    FilterLattice fl = all_filters(l);
    CHECK(fl.radical() == fl.trivial_index());
  }
  // oracle: intersection of the maximal filters, recomputed directly
  for (const char* f : kFixtures) {
    Lattice l = load_fixture(f);
    FilterLattice fl = all_filters(l);
    ElementSet cut = l.all();
    for (int m : fl.maximals()) cut = cut & fl.members(m);
    CHECK(fl.members(fl.radical()) == cut);
  }
}

TEST_CASE("simple filters") {
  Lattice ex44 = load_fixture("ex44.rlat");
  FilterLattice fl44 = all_filters(ex44);
  CHECK(fl44.is_simple(fl44.index_of(set_of(ex44, {"c", "1"}))));
  CHECK_FALSE(fl44.is_simple(fl44.trivial_index()));
  Lattice ex55 = load_fixture("ex55.rlat");
  FilterLattice fl55 = all_filters(ex55);
  CHECK(fl55.is_simple(fl55.index_of(set_of(ex55, {"a", "1"}))));
  CHECK_FALSE(fl55.is_simple(fl55.full_index()));
  // definition-scan oracle: the only filter subsets of T are {1} and T
  for (const char* f : kFixtures) {
    Lattice l = load_fixture(f);
    FilterLattice fl = all_filters(l);
    for (int i = 0; i < fl.count(); ++i) {
      bool oracle = fl.members(i) != ElementSet::single(l.top());
      for (std::uint64_t m = 1; m < (1ull << l.size()) && oracle; ++m) {
        ElementSet s(m);
        if (!s.subset_of(fl.members(i)) || !is_filter_subset(l, s)) continue;
        if (!(s == fl.members(i)) && !(s == ElementSet::single(l.top()))) oracle = false;
      }
      CHECK(fl.is_simple(i) == oracle);
    }
  }
}

TEST_CASE("essential filters") {
  Lattice ex55 = load_fixture("ex55.rlat");
  FilterLattice fl55 = all_filters(ex55);
  int a55 = fl55.index_of(set_of(ex55, {"a", "1"}));
  CHECK_FALSE(fl55.essential_in(a55, fl55.full_index()));
  Lattice ex44 = load_fixture("ex44.rlat");
  FilterLattice fl44 = all_filters(ex44);
  CHECK(fl44.essential_in(fl44.index_of(set_of(ex44, {"c", "1"})), fl44.full_index()));
  for (const char* f : kFixtures) {
    Lattice l = load_fixture(f);
    FilterLattice fl = all_filters(l);
    for (int i = 0; i < fl.count(); ++i) CHECK(fl.essential_in(i, i));  // F ∈ E_F
    // the F = L shortcut coincides with the verbatim definition
    for (int h = 0; h < fl.count(); ++h) {
      bool verbatim = true;
      for (int g = 0; g < fl.count(); ++g)
        if (fl.meet(h, g) == fl.trivial_index() &&
            fl.meet(fl.full_index(), g) != fl.trivial_index())
          verbatim = false;
      CHECK(fl.essential_in(h, fl.full_index()) == verbatim);
    }
  }
  CHECK_THROWS_AS((void)fl44.essential_in(fl44.full_index(), fl44.trivial_index()), Error);
}

TEST_CASE("essential families of the fixtures") {
  Lattice ex44 = load_fixture("ex44.rlat");
  FilterLattice fl44 = all_filters(ex44);
  CHECK(fl44.essential_family(fl44.full_index()) == std::vector<int>{1, 2, 3, 4});
  Lattice ex55 = load_fixture("ex55.rlat");
  FilterLattice fl55 = all_filters(ex55);
  CHECK(fl55.essential_family(fl55.full_index()) ==
        std::vector<int>{fl55.full_index()});
  Lattice b2 = load_fixture("bool2.rlat");
  FilterLattice flb2 = all_filters(b2);
  CHECK(flb2.essential_family(flb2.full_index()) == std::vector<int>{flb2.full_index()});
}

TEST_CASE("filter vs deductive system, every subset of every fixture") {
  for (const char* f : kFixtures) {
    Lattice l = load_fixture(f);
    for (std::uint64_t m = 1; m < (1ull << l.size()); ++m)
      CHECK(is_filter_subset(l, ElementSet(m)) == is_deductive_system(l, ElementSet(m)));
  }
}

TEST_CASE("principal filter identities of Prop 2.555(4)") {
  for (const char* f : kFixtures) {
    Lattice l = load_fixture(f);
    FilterLattice fl = all_filters(l);
    for (int x = 0; x < l.size(); ++x)
      for (int y = 0; y < l.size(); ++y) {
        int jx = fl.index_of(principal_filter(l, x).members);
        int jy = fl.index_of(principal_filter(l, y).members);
        CHECK(fl.join(jx, jy) == fl.index_of(principal_filter(l, l.meet(x, y)).members));
        CHECK(fl.join(jx, jy) == fl.index_of(principal_filter(l, l.odot(x, y)).members));
        CHECK(fl.meet(jx, jy) == fl.index_of(principal_filter(l, l.join(x, y)).members));
      }
  }
}

TEST_CASE("Filt(L) is distributive and the modular identity holds") {
  for (const char* f : kFixtures) {
    Lattice l = load_fixture(f);
    FilterLattice fl = all_filters(l);
    for (int a = 0; a < fl.count(); ++a)
      for (int b = 0; b < fl.count(); ++b)
        for (int c = 0; c < fl.count(); ++c) {
          CHECK(fl.meet(a, fl.join(b, c)) == fl.join(fl.meet(a, b), fl.meet(a, c)));
          if (fl.leq(a, b))
            CHECK(fl.meet(b, fl.join(a, c)) == fl.join(a, fl.meet(b, c)));
        }
  }
}

TEST_CASE("canonical filter order is deterministic") {
  Lattice l = load_fixture("bool8.rlat");
  FilterLattice fl = all_filters(l);
  for (int i = 1; i < fl.count(); ++i)
    CHECK(filter_order_less(fl.members(i - 1), fl.members(i), l.size()));
}
