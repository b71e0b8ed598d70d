#include <doctest.h>

#include "rlat/lattice.hpp"
#include "support.hpp"

using namespace rlat;
using rlat::test::el;
using rlat::test::load_fixture;

namespace {

std::string slurp(const std::string& name) {
  return to_rlat(load_fixture(name));  // re-serialized canonical text
}

ErrorKind kind_of(const std::string& text) {
  try {
    load_lattice(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a load error");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("ex44 loads and matches its tables") {
  Lattice l = load_fixture("ex44.rlat");
  CHECK(l.size() == 5);
  int a = el(l, "a"), b = el(l, "b"), c = el(l, "c");
  CHECK(l.name(l.bottom()) == "0");
  CHECK(l.name(l.top()) == "1");
  CHECK(l.leq(a, c));
  CHECK(!l.leq(a, b));
  CHECK(l.join(a, b) == c);
  CHECK(l.meet(a, b) == l.bottom());
  CHECK(l.odot(a, b) == l.bottom());
  CHECK(l.odot(c, c) == c);
  CHECK(l.arrow(a, l.bottom()) == b);
}

TEST_CASE("two-element chain is the Boolean algebra") {
  Lattice l = load_lattice("rlat 1\nelements: 0 1\nbottom: 0\ntop: 1\nleq:\n11\n01\nodot:\n0 0\n0 1\n");
  CHECK(l.size() == 2);
  CHECK(l.arrow(l.bottom(), l.bottom()) == l.top());
  CHECK(star(l, l.top()) == l.bottom());
}

TEST_CASE("one-element input is rejected") {
  CHECK(kind_of("rlat 1\nelements: x\nbottom: x\ntop: x\nleq:\n1\nodot:\nx\n") ==
        ErrorKind::TrivialLattice);
}

TEST_CASE("corrupting odot(a,b) in ex44 reports a residuation failure") {
  std::string text = slurp("ex44.rlat");
  // row a, column b of the ⊙ table: 0 → c (both symmetric entries)
  std::size_t odot_pos = text.find("odot:");
  std::size_t row_a = text.find('\n', odot_pos) + 1;  // row 0
  row_a = text.find('\n', row_a) + 1;                 // row a
  std::string row = text.substr(row_a, text.find('\n', row_a) - row_a);
  CHECK(row == "0 a 0 a a");
  text.replace(row_a, row.size(), "0 a c a a");
  try {
    load_lattice(text);
    FAIL("expected ResiduationFails");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ResiduationFails);
    CHECK(std::string(e.what()).find("a") != std::string::npos);
    CHECK(std::string(e.what()).find("b") != std::string::npos);
  }
}

TEST_CASE("parser rejects malformed input") {
  std::string good = slurp("ex55.rlat");
  CHECK(kind_of("nope\n") == ErrorKind::ParseError);
  CHECK(kind_of(good + "junk\n") == ErrorKind::ParseError);
  CHECK(kind_of(good + "arrow:\n1 1 1 1\nb 1 b 1\na a 1 1\n0 a b 1\n") ==
        ErrorKind::ParseError);  // duplicate section
  SUBCASE("ragged odot row") {
    std::string text = good;
    std::size_t p = text.find("odot:\n") + 6;
    std::size_t e = text.find('\n', p);
    text.replace(p, e - p, "0 0 0");  // drop a column from row 0
    CHECK(kind_of(text) == ErrorKind::ParseError);
  }
  SUBCASE("duplicate element name") {
    CHECK(kind_of("rlat 1\nelements: x x\nbottom: x\ntop: x\nleq:\n11\n01\nodot:\nx x\nx x\n") ==
          ErrorKind::ParseError);
  }
}

TEST_CASE("non-lattice order is rejected") {
  // 0 < a,b < c,d < 1: a and b have no unique join
  std::string text =
      "rlat 1\n"
      "elements: 0 a b c d 1\n"
      "bottom: 0\ntop: 1\n"
      "leq:\n"
      "111111\n"
      "010111\n"
      "001111\n"
      "000101\n"
      "000011\n"
      "000001\n"
      "odot:\n"
      "0 0 0 0 0 0\n"
      "0 a 0 0 0 a\n"
      "0 0 b 0 0 b\n"
      "0 0 0 c 0 c\n"
      "0 0 0 0 d d\n"
      "0 a b c d 1\n";
  CHECK(kind_of(text) == ErrorKind::NotALattice);
}

TEST_CASE("supplied arrow must match the residual") {
  std::string text = slurp("idr.rlat");
  std::size_t p = text.find("arrow:\n");
  text.replace(p, std::string::npos, "arrow:\n1 1 1\na 1 1\n0 1 1\n");  // 1→a corrupted
  CHECK(kind_of(text) == ErrorKind::ResiduationFails);
}

TEST_CASE("canonical indexing follows the order, not the input listing") {
  // ex44 with shuffled element listing
  std::string text =
      "rlat 1\n"
      "elements: c a 1 b 0\n"
      "bottom: 0\ntop: 1\n"
      "leq:\n"   // rows/cols in listed order c a 1 b 0
      "10100\n"
      "11100\n"
      "00100\n"
      "10110\n"
      "11111\n"
      "odot:\n"
      "c a c b 0\n"
      "a a a 0 0\n"
      "c a 1 b 0\n"
      "b 0 b b 0\n"
      "0 0 0 0 0\n";
  Lattice l = load_lattice(text);
  CHECK(l.name(0) == "0");
  CHECK(l.name(1) == "a");
  CHECK(l.name(2) == "b");
  CHECK(l.name(3) == "c");
  CHECK(l.name(4) == "1");
  Lattice ref = load_fixture("ex44.rlat");
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      CHECK(l.leq(i, j) == ref.leq(i, j));
      CHECK(l.odot(i, j) == ref.odot(i, j));
      CHECK(l.arrow(i, j) == ref.arrow(i, j));
    }
}

TEST_CASE("star on the fixtures") {
  Lattice ex44 = load_fixture("ex44.rlat");
  CHECK(star(ex44, el(ex44, "c")) == ex44.bottom());
  Lattice ex55 = load_fixture("ex55.rlat");
  CHECK(star(ex55, el(ex55, "a")) == el(ex55, "b"));
  for (const char* f : {"ex44.rlat", "ex55.rlat", "idr.rlat", "bool2.rlat", "bool8.rlat"}) {
    Lattice l = load_fixture(f);
    CHECK(star(l, l.top()) == l.bottom());
    CHECK(star(l, l.bottom()) == l.top());
  }
}

TEST_CASE("power on the fixtures") {
  Lattice idr = load_fixture("idr.rlat");
  CHECK(power(idr, el(idr, "a"), 2) == idr.bottom());
  Lattice ex44 = load_fixture("ex44.rlat");
  int a = el(ex44, "a");
  int expect = a;
  for (int k = 1; k <= 7; ++k) {
    CHECK(power(ex44, a, k) == expect);  // a⊙a = a, oracle loop
    expect = ex44.odot(expect, a);
  }
  for (const char* f : {"ex44.rlat", "idr.rlat", "bool4.rlat"}) {
    Lattice l = load_fixture(f);
    for (int x = 0; x < l.size(); ++x) CHECK(power(l, x, 0) == l.top());
  }
}

TEST_CASE("boolean center of the fixtures") {
  Lattice ex44 = load_fixture("ex44.rlat");
  CHECK(boolean_center(ex44).members == rlat::test::set_of(ex44, {"0", "1"}));
  Lattice ex55 = load_fixture("ex55.rlat");
  BooleanCenter b55 = boolean_center(ex55);
  CHECK(b55.members == ex55.all());
  CHECK(b55.complement_of[el(ex55, "a")] == el(ex55, "b"));
  for (const char* f : {"ex44.rlat", "ex55.rlat", "idr.rlat", "bool2.rlat", "bool8.rlat"}) {
    Lattice l = load_fixture(f);
    BooleanCenter b = boolean_center(l);
    CHECK(b.members.contains(l.bottom()));
    CHECK(b.members.contains(l.top()));
    // complements are unique and absent outside B(L); full pair scan
    for (int x = 0; x < l.size(); ++x) {
      int count = 0;
      for (int y = 0; y < l.size(); ++y)
        if (l.meet(x, y) == l.bottom() && l.join(x, y) == l.top()) ++count;
      CHECK(count == (b.members.contains(x) ? 1 : 0));
    }
  }
}

TEST_CASE("adjunction holds on every fixture, all triples") {
  for (const char* f : {"ex44.rlat", "ex55.rlat", "idr.rlat", "bool2.rlat", "bool4.rlat",
                        "bool8.rlat"}) {
    Lattice l = load_fixture(f);
    for (int x = 0; x < l.size(); ++x)
      for (int y = 0; y < l.size(); ++y)
        for (int z = 0; z < l.size(); ++z)
          CHECK(l.leq(l.odot(x, z), y) == l.leq(z, l.arrow(x, y)));
  }
}

TEST_CASE("serialization round-trips") {
  for (const char* f : {"ex44.rlat", "idr.rlat", "bool8.rlat"}) {
    Lattice l = load_fixture(f);
    Lattice back = load_lattice(to_rlat(l), l.id());
    CHECK(back.size() == l.size());
    for (int i = 0; i < l.size(); ++i)
      for (int j = 0; j < l.size(); ++j) {
        CHECK(back.leq(i, j) == l.leq(i, j));
        CHECK(back.odot(i, j) == l.odot(i, j));
      }
  }
}
