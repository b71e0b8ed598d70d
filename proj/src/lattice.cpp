#include "rlat/lattice.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace rlat {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotAMonoid: return "NotAMonoid";
    case ErrorKind::ResiduationFails: return "ResiduationFails";
    case ErrorKind::TrivialLattice: return "TrivialLattice";
    case ErrorKind::EmptyGeneratingSet: return "EmptyGeneratingSet";
    case ErrorKind::LatticeMismatch: return "LatticeMismatch";
    case ErrorKind::NotASubfilter: return "NotASubfilter";
    case ErrorKind::EmptyFamily: return "EmptyFamily";
    case ErrorKind::CapacityExceeded: return "CapacityExceeded";
    case ErrorKind::OrderOutOfRange: return "OrderOutOfRange";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::QuerySyntaxError: return "QuerySyntaxError";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Error";
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::QuerySyntaxError:
    case ErrorKind::OrderOutOfRange:
    case ErrorKind::EmptyGeneratingSet:
    case ErrorKind::LatticeMismatch:
    case ErrorKind::NotASubfilter:
    case ErrorKind::EmptyFamily:
      return 2;
    case ErrorKind::NotALattice:
    case ErrorKind::NotAMonoid:
    case ErrorKind::ResiduationFails:
    case ErrorKind::TrivialLattice:
      return 3;
    case ErrorKind::CapacityExceeded:
    case ErrorKind::CapExceeded:
      return 4;
    case ErrorKind::InternalInconsistency:
      return 3;
  }
  return 2;
}

namespace {

[[noreturn]] void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

}  // namespace

Lattice Lattice::from_tables(std::vector<std::string> names,
                             const std::vector<std::vector<bool>>& leq_in,
                             const std::vector<std::vector<int>>& odot_in,
                             const std::optional<std::vector<std::vector<int>>>& arrow_in,
                             std::string id) {
  const int n = static_cast<int>(names.size());
  if (n == 1) fail(ErrorKind::TrivialLattice, "one-element lattice rejected (0 = 1)");
  if (n < 1) fail(ErrorKind::ParseError, "no elements");
  if (n > kMaxOrder) fail(ErrorKind::ParseError, "more than 64 elements");

  auto at = [&](int x) { return names[x]; };

  // Order axioms on the caller's indexing.
  for (int i = 0; i < n; ++i)
    if (!leq_in[i][i]) fail(ErrorKind::NotALattice, "leq not reflexive at " + at(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j && leq_in[i][j] && leq_in[j][i])
        fail(ErrorKind::NotALattice, "leq not antisymmetric at (" + at(i) + ", " + at(j) + ")");
      if (leq_in[i][j])
        for (int k = 0; k < n; ++k)
          if (leq_in[j][k] && !leq_in[i][k])
            fail(ErrorKind::NotALattice,
                 "leq not transitive at (" + at(i) + ", " + at(j) + ", " + at(k) + ")");
    }

  // Canonical reindex: a fixed linear extension of ≤ (down-set size, then the
  // caller's order). Bottom sorts first, top last.
  std::vector<int> dscount(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (leq_in[j][i]) ++dscount[i];
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return dscount[a] < dscount[b]; });
  std::vector<int> pos(n);  // old index -> new index
  for (int p = 0; p < n; ++p) pos[order[p]] = p;

  Lattice l;
  l.n_ = n;
  l.id_ = std::move(id);
  l.names_.resize(n);
  for (int p = 0; p < n; ++p) l.names_[p] = names[order[p]];
  l.up_.assign(n, ElementSet());
  l.down_.assign(n, ElementSet());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (leq_in[order[i]][order[j]]) {
        l.up_[i].insert(j);
        l.down_[j].insert(i);
      }

  auto nm = [&](int x) { return l.names_[x]; };

  // Bounds.
  for (int i = 0; i < n; ++i) {
    if (!l.leq(0, i))
      fail(ErrorKind::NotALattice, "declared bottom is not below " + nm(i));
    if (!l.leq(i, n - 1))
      fail(ErrorKind::NotALattice, "declared top is not above " + nm(i));
  }

  // Meet and join tables; uniqueness is part of being a lattice.
  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ElementSet lows = l.down_[i] & l.down_[j];
      int m = -1;
      for (int k : lows)
        if (lows.subset_of(l.down_[k])) m = k;
      if (m < 0)
        fail(ErrorKind::NotALattice, "no unique meet of (" + nm(i) + ", " + nm(j) + ")");
      l.meet_[i * n + j] = static_cast<std::uint8_t>(m);
      ElementSet ups = l.up_[i] & l.up_[j];
      int jn = -1;
      for (int k : ups)
        if (ups.subset_of(l.up_[k])) jn = k;
      if (jn < 0)
        fail(ErrorKind::NotALattice, "no unique join of (" + nm(i) + ", " + nm(j) + ")");
      l.join_[i * n + j] = static_cast<std::uint8_t>(jn);
    }

  l.odot_.assign(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int v = odot_in[order[i]][order[j]];
      if (v < 0 || v >= n) fail(ErrorKind::ParseError, "odot entry out of range");
      l.odot_[i * n + j] = static_cast<std::uint8_t>(pos[v]);
    }

  // Residual: derive as max{z : x⊙z ≤ y}; cross-check a supplied arrow.
  l.arrow_.assign(n * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int a = 0;  // bottom always qualifies once adjunction holds; start empty
      bool any = false;
      for (int z = 0; z < n; ++z)
        if (l.leq(l.odot(x, z), y)) {
          a = any ? l.join(a, z) : z;
          any = true;
        }
      if (!any)
        fail(ErrorKind::ResiduationFails,
             "no z with " + nm(x) + "⊙z ≤ " + nm(y));
      l.arrow_[x * n + y] = static_cast<std::uint8_t>(a);
    }

  // Adjunction over all triples, against the supplied arrow when given.
  // Checked before the monoid axioms so a bad ⊙ entry is reported as the
  // residuation failure it causes.
  const std::vector<std::vector<int>>* sup = arrow_in ? &*arrow_in : nullptr;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int a = sup ? pos[(*sup)[order[x]][order[y]]] : l.arrow(x, y);
      for (int z = 0; z < n; ++z)
        if (l.leq(l.odot(x, z), y) != l.leq(z, a))
          fail(ErrorKind::ResiduationFails,
               "adjunction fails at x=" + nm(x) + ", z=" + nm(z) + ", y=" + nm(y));
      if (sup && a != l.arrow(x, y))
        fail(ErrorKind::ResiduationFails,
             "supplied arrow disagrees with the residual at (" + nm(x) + ", " + nm(y) + ")");
    }
  if (sup)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        l.arrow_[x * n + y] = static_cast<std::uint8_t>(pos[(*sup)[order[x]][order[y]]]);

  // (⊙, 1) commutative monoid.
  for (int x = 0; x < n; ++x)
    if (l.odot(x, l.top()) != x)
      fail(ErrorKind::NotAMonoid, "top is not a unit at " + nm(x));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (l.odot(x, y) != l.odot(y, x))
        fail(ErrorKind::NotAMonoid, "⊙ not commutative at (" + nm(x) + ", " + nm(y) + ")");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (l.odot(l.odot(x, y), z) != l.odot(x, l.odot(y, z)))
          fail(ErrorKind::NotAMonoid,
               "⊙ not associative at (" + nm(x) + ", " + nm(y) + ", " + nm(z) + ")");

  // Monotonicity is a consequence of the adjunction; checked independently.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (l.leq(y, z) && !l.leq(l.odot(x, y), l.odot(x, z)))
          fail(ErrorKind::InternalInconsistency,
               "⊙ not order-preserving despite adjunction at (" + nm(x) + ", " + nm(y) +
                   ", " + nm(z) + ")");

  return l;
}

int Lattice::element_index(const std::string& name) const {
  for (int i = 0; i < n_; ++i)
    if (names_[i] == name) return i;
  return -1;
}

int star(const Lattice& l, int x) { return l.arrow(x, l.bottom()); }

int power(const Lattice& l, int x, int n) {
  int r = l.top();
  for (int i = 0; i < n; ++i) r = l.odot(r, x);
  return r;
}

BooleanCenter boolean_center(const Lattice& l) {
  BooleanCenter b;
  b.complement_of.fill(-1);
  const int n = l.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (l.meet(x, y) == l.bottom() && l.join(x, y) == l.top()) {
        if (b.members.contains(x) && b.complement_of[x] != y)
          throw Error(ErrorKind::InternalInconsistency,
                      "element " + l.name(x) + " has two complements");
        b.members.insert(x);
        b.complement_of[x] = y;
      }
  return b;
}

namespace {

struct LineReader {
  std::istringstream in;
  int lineno = 0;
  explicit LineReader(const std::string& text) : in(text) {}

  // Next non-empty line with comments stripped; false at end of input.
  bool next(std::string& out) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++lineno;
      auto hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      while (!raw.empty() && (raw.back() == '\r' || raw.back() == ' ' || raw.back() == '\t'))
        raw.pop_back();
      std::size_t s = raw.find_first_not_of(" \t");
      if (s == std::string::npos) continue;
      out = raw.substr(s);
      return true;
    }
    return false;
  }
};

std::vector<std::string> split_tokens(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

}  // namespace

Lattice load_lattice(const std::string& text, std::string id) {
  LineReader rd(text);
  std::string line;
  auto need = [&](const char* what) {
    if (!rd.next(line)) fail(ErrorKind::ParseError, std::string("missing ") + what);
  };

  need("magic line");
  if (line != "rlat 1") fail(ErrorKind::ParseError, "expected `rlat 1` magic line");

  need("elements section");
  auto toks = split_tokens(line);
  if (toks.empty() || toks[0] != "elements:")
    fail(ErrorKind::ParseError, "expected `elements:` section");
  std::vector<std::string> names(toks.begin() + 1, toks.end());
  if (names.empty()) fail(ErrorKind::ParseError, "empty element list");
  const int n = static_cast<int>(names.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (names[i] == names[j])
        fail(ErrorKind::ParseError, "duplicate element name " + names[i]);

  auto index_of = [&](const std::string& nm) {
    for (int i = 0; i < n; ++i)
      if (names[i] == nm) return i;
    fail(ErrorKind::ParseError, "unknown element name " + nm);
  };

  need("bottom section");
  toks = split_tokens(line);
  if (toks.size() != 2 || toks[0] != "bottom:")
    fail(ErrorKind::ParseError, "expected `bottom: <name>`");
  int bot = index_of(toks[1]);

  need("top section");
  toks = split_tokens(line);
  if (toks.size() != 2 || toks[0] != "top:")
    fail(ErrorKind::ParseError, "expected `top: <name>`");
  int top = index_of(toks[1]);

  need("leq section");
  if (line != "leq:") fail(ErrorKind::ParseError, "expected `leq:` section");
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    need("leq row");
    if (static_cast<int>(line.size()) != n)
      fail(ErrorKind::ParseError, "ragged leq row " + std::to_string(i + 1));
    for (int j = 0; j < n; ++j) {
      if (line[j] != '0' && line[j] != '1')
        fail(ErrorKind::ParseError, "leq rows must be 0/1 characters");
      leq[i][j] = line[j] == '1';
    }
  }

  need("odot section");
  if (line != "odot:") fail(ErrorKind::ParseError, "expected `odot:` section");
  std::vector<std::vector<int>> odot(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    need("odot row");
    toks = split_tokens(line);
    if (static_cast<int>(toks.size()) != n)
      fail(ErrorKind::ParseError, "ragged odot row " + std::to_string(i + 1));
    for (int j = 0; j < n; ++j) odot[i][j] = index_of(toks[j]);
  }

  std::optional<std::vector<std::vector<int>>> arrow;
  if (rd.next(line)) {
    if (line == "odot:" || line == "leq:" || line.rfind("elements:", 0) == 0 ||
        line.rfind("bottom:", 0) == 0 || line.rfind("top:", 0) == 0)
      fail(ErrorKind::ParseError, "duplicate section `" + line + "`");
    if (line != "arrow:") fail(ErrorKind::ParseError, "trailing junk: `" + line + "`");
    arrow.emplace(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
      need("arrow row");
      toks = split_tokens(line);
      if (static_cast<int>(toks.size()) != n)
        fail(ErrorKind::ParseError, "ragged arrow row " + std::to_string(i + 1));
      for (int j = 0; j < n; ++j) (*arrow)[i][j] = index_of(toks[j]);
    }
    if (rd.next(line)) {
      if (line == "arrow:") fail(ErrorKind::ParseError, "duplicate section `arrow:`");
      fail(ErrorKind::ParseError, "trailing junk: `" + line + "`");
    }
  }

  // The declared bounds are validated against the order.
  for (int i = 0; i < n; ++i) {
    if (!leq[bot][i]) fail(ErrorKind::NotALattice, "declared bottom is not below " + names[i]);
    if (!leq[i][top]) fail(ErrorKind::NotALattice, "declared top is not above " + names[i]);
  }

  return Lattice::from_tables(std::move(names), leq, odot, arrow, std::move(id));
}

Lattice load_lattice_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string id = path;
  if (auto slash = id.find_last_of('/'); slash != std::string::npos) id.erase(0, slash + 1);
  if (auto dot = id.find_last_of('.'); dot != std::string::npos && dot > 0) id.erase(dot);
  return load_lattice(buf.str(), id);
}

std::string to_rlat(const Lattice& l) {
  std::ostringstream out;
  const int n = l.size();
  out << "rlat 1\n";
  out << "elements:";
  for (int i = 0; i < n; ++i) out << ' ' << l.name(i);
  out << "\nbottom: " << l.name(l.bottom()) << "\ntop: " << l.name(l.top()) << "\nleq:\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out << (l.leq(i, j) ? '1' : '0');
    out << '\n';
  }
  out << "odot:\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out << (j ? " " : "") << l.name(l.odot(i, j));
    out << '\n';
  }
  out << "arrow:\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out << (j ? " " : "") << l.name(l.arrow(i, j));
    out << '\n';
  }
  return out.str();
}

std::string render_element_set(const Lattice& l, ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (int x : s) {
    if (!first) out += ", ";
    out += l.name(x);
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace rlat
