#ifndef RLAT_TESTS_SUPPORT_HPP
#define RLAT_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "rlat/filters.hpp"
#include "rlat/lattice.hpp"

namespace rlat::test {

inline std::string fixture_path(const std::string& name) {
  return std::string(RLAT_FIXTURE_DIR) + "/" + name;
}

inline Lattice load_fixture(const std::string& name) {
  return load_lattice_file(fixture_path(name));
}

inline int el(const Lattice& l, const std::string& name) {
  int i = l.element_index(name);
  REQUIRE(i >= 0);
  return i;
}

inline ElementSet set_of(const Lattice& l, const std::vector<std::string>& names) {
  ElementSet s;
  for (const auto& n : names) s.insert(el(l, n));
  return s;
}

// Brute-force oracle: every subset checked directly against (F1)/(F2),
// independent of the library's enumeration strategies.
inline std::vector<ElementSet> oracle_filters(const Lattice& l) {
  std::vector<ElementSet> out;
  for (std::uint64_t m = 1; m < (1ull << l.size()); ++m) {
    ElementSet s(m);
    if (!s.contains(l.top())) continue;
    bool ok = true;
    for (int x : s) {
      for (int y : s)
        if (!s.contains(l.odot(x, y))) ok = false;
      for (int y = 0; y < l.size(); ++y)
        if (l.leq(x, y) && !s.contains(y)) ok = false;
    }
    if (ok) out.push_back(s);
  }
  return out;
}

// Upward-closure oracle used by the generated-filter examples.
inline ElementSet oracle_upclose(const Lattice& l, ElementSet s) {
  ElementSet out;
  for (int x : s)
    for (int y = 0; y < l.size(); ++y)
      if (l.leq(x, y)) out.insert(y);
  return out;
}

}  // namespace rlat::test

#endif
