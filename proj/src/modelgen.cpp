#include "rlat/modelgen.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>

#include "rlat/structure.hpp"

namespace rlat {

namespace {

// --------------------------------------------------------------------------
// canonical forms

struct Tables {
  int n;
  std::vector<std::uint8_t> leq;           // n×n 0/1
  std::vector<std::uint8_t> odot;          // n×n element indices; empty for order-only
  bool has_odot() const { return !odot.empty(); }
  bool le(int i, int j) const { return leq[i * n + j]; }
  int od(int i, int j) const { return odot[i * n + j]; }
};

std::vector<std::uint8_t> encode_under(const Tables& t, const std::vector<int>& perm) {
  const int n = t.n;
  std::vector<int> inv(n);
  for (int p = 0; p < n; ++p) inv[perm[p]] = p;
  std::vector<std::uint8_t> enc;
  enc.reserve(1 + n * n * 2);
  enc.push_back(static_cast<std::uint8_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) enc.push_back(t.le(perm[i], perm[j]));
  if (t.has_odot())
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        enc.push_back(static_cast<std::uint8_t>(inv[t.od(perm[i], perm[j])]));
  return enc;
}

int height_to_top(const Tables& t, int x) {
  int best = 0;
  for (int y = 0; y < t.n; ++y)
    if (y != x && t.le(x, y)) best = std::max(best, 1 + height_to_top(t, y));
  return best;
}

// Iterated partition refinement; returns an isomorphism-invariant coloring
// with a canonical order on colors.
std::vector<int> refine_colors(const Tables& t) {
  const int n = t.n;
  std::vector<int> color(n, 0);
  {
    // Initial invariants: degree in ≤ both ways, distance to top, and the
    // ⊙-row multiset of meet-levels when ⊙ is present.
    std::vector<std::vector<int>> keys(n);
    for (int x = 0; x < n; ++x) {
      int down = 0, up = 0;
      for (int y = 0; y < n; ++y) {
        down += t.le(y, x);
        up += t.le(x, y);
      }
      keys[x] = {down, up, height_to_top(t, x)};
      if (t.has_odot()) {
        std::vector<int> row;
        for (int y = 0; y < n; ++y) {
          int p = t.od(x, y);
          int pdown = 0;
          for (int z = 0; z < n; ++z) pdown += t.le(z, p);
          row.push_back(pdown);
        }
        std::sort(row.begin(), row.end());
        keys[x].insert(keys[x].end(), row.begin(), row.end());
      }
    }
    std::vector<std::vector<int>> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int x = 0; x < n; ++x)
      color[x] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), keys[x]) - sorted.begin());
  }
  for (;;) {
    std::vector<std::vector<int>> keys(n);
    for (int x = 0; x < n; ++x) {
      keys[x].push_back(color[x]);
      std::vector<std::vector<int>> sig;
      for (int y = 0; y < n; ++y) {
        std::vector<int> s{color[y], t.le(x, y), t.le(y, x)};
        if (t.has_odot()) s.push_back(color[t.od(x, y)]);
        sig.push_back(std::move(s));
      }
      std::sort(sig.begin(), sig.end());
      for (auto& s : sig) keys[x].insert(keys[x].end(), s.begin(), s.end());
    }
    std::vector<std::vector<int>> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(n);
    for (int x = 0; x < n; ++x)
      next[x] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), keys[x]) - sorted.begin());
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

// Lexicographically least encoding over permutations that list color classes
// in canonical order, backtracking over ties within a class.
std::vector<std::uint8_t> certificate(const Tables& t) {
  const int n = t.n;
  std::vector<int> color = refine_colors(t);
  std::vector<std::vector<int>> by_color;
  {
    int maxc = 0;
    for (int x = 0; x < n; ++x) maxc = std::max(maxc, color[x]);
    by_color.assign(maxc + 1, {});
    for (int x = 0; x < n; ++x) by_color[color[x]].push_back(x);
  }
  std::vector<std::uint8_t> best;
  std::vector<int> perm;
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(perm.size()) == n) {
      std::vector<std::uint8_t> enc = encode_under(t, perm);
      if (best.empty() || enc < best) best = std::move(enc);
      return;
    }
    // Next position must come from the first color class with unused members.
    for (const auto& cls : by_color) {
      bool any = false;
      for (int x : cls)
        if (!used[x]) {
          any = true;
          perm.push_back(x);
          used[x] = true;
          self(self);
          used[x] = false;
          perm.pop_back();
        }
      if (any) return;
    }
  };
  rec(rec);
  return best;
}

Tables tables_of(const Lattice& l) {
  Tables t;
  t.n = l.size();
  t.leq.assign(t.n * t.n, 0);
  t.odot.assign(t.n * t.n, 0);
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j) {
      t.leq[i * t.n + j] = l.leq(i, j);
      t.odot[i * t.n + j] = static_cast<std::uint8_t>(l.odot(i, j));
    }
  return t;
}

// --------------------------------------------------------------------------
// poset enumeration: elements are inserted along a linear extension
// (element 0 the bottom, element n-1 the top); each new element picks a
// down-closed strict down-set. Meets are final once both elements exist, so
// meet uniqueness prunes; join uniqueness is checked on completion.

struct PosetGen {
  int n;
  std::vector<std::uint64_t> down;  // reflexive down-set masks
  std::vector<Tables> out;
  std::set<std::vector<std::uint8_t>> seen;

  explicit PosetGen(int order) : n(order) {}

  bool meets_unique(int k) const {
    for (int i = 0; i < k; ++i) {
      std::uint64_t common = down[i] & down[k];
      bool has_max = false;
      for (int m = 0; m < k && !has_max; ++m)
        if (common >> m & 1 && (common & ~down[m]) == 0) has_max = true;
      if (!has_max) return false;
    }
    return true;
  }

  void finish() {
    // join uniqueness
    std::vector<std::uint64_t> up(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (down[j] >> i & 1) up[i] |= 1ull << j;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        std::uint64_t common = up[i] & up[j];
        bool has_min = false;
        for (int m = 0; m < n && !has_min; ++m)
          if (common >> m & 1 && (common & ~up[m]) == 0) has_min = true;
        if (!has_min) return;
      }
    Tables t;
    t.n = n;
    t.leq.assign(n * n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t.leq[i * n + j] = up[i] >> j & 1;
    auto cert = certificate(t);
    if (seen.insert(cert).second) out.push_back(std::move(t));
  }

  void step(int k) {
    if (k == n) {
      finish();
      return;
    }
    if (k == 0) {
      down.push_back(1);
      step(1);
      down.pop_back();
      return;
    }
    if (k == n - 1) {
      down.push_back((1ull << n) - 1);
      if (meets_unique(k)) step(n);
      down.pop_back();
      return;
    }
    // strict down-set: any down-closed subset of {0..k-1} containing bottom
    for (std::uint64_t d = 1; d < (1ull << k); d += 2) {
      bool closed = true;
      for (int x = 0; x < k && closed; ++x)
        if (d >> x & 1 && (down[x] & ~d)) closed = false;
      if (!closed) continue;
      down.push_back(d | (1ull << k));
      if (meets_unique(k)) step(k + 1);
      down.pop_back();
    }
  }
};

// --------------------------------------------------------------------------
// ⊙-table search over one labeled lattice order

struct TableGen {
  const Tables& order;
  int n, bot, top;
  std::vector<std::vector<int>> meet, join;
  std::vector<std::vector<int>> tab;
  std::vector<std::pair<int, int>> free_pairs;
  std::vector<std::vector<int>>* results;

  TableGen(const Tables& ord, std::vector<std::vector<int>>* out)
      : order(ord), n(ord.n), bot(0), top(ord.n - 1), results(out) {
    meet.assign(n, std::vector<int>(n, -1));
    join.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        for (int m = 0; m < n; ++m) {
          bool lower = order.le(m, i) && order.le(m, j);
          if (!lower) continue;
          bool greatest = true;
          for (int z = 0; z < n; ++z)
            if (order.le(z, i) && order.le(z, j) && !order.le(z, m)) greatest = false;
          if (greatest) meet[i][j] = m;
        }
        for (int m = 0; m < n; ++m) {
          bool upper = order.le(i, m) && order.le(j, m);
          if (!upper) continue;
          bool least = true;
          for (int z = 0; z < n; ++z)
            if (order.le(i, z) && order.le(j, z) && !order.le(m, z)) least = false;
          if (least) join[i][j] = m;
        }
      }
    tab.assign(n, std::vector<int>(n, -1));
    for (int x = 0; x < n; ++x) {
      tab[x][top] = tab[top][x] = x;
      tab[x][bot] = tab[bot][x] = bot;
    }
    for (int i = 1; i <= n - 2; ++i)
      for (int j = i; j <= n - 2; ++j) free_pairs.emplace_back(i, j);
  }

  bool consistent() const {
    // monotone in each argument, over defined entries
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (tab[a][b] < 0) continue;
        for (int d = 0; d < n; ++d) {
          if (tab[a][d] < 0 || !order.le(b, d)) continue;
          if (!order.le(tab[a][b], tab[a][d])) return false;
        }
      }
    // join-distributivity and associativity over defined entries
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          int yz = join[y][z];
          if (tab[x][yz] >= 0 && tab[x][y] >= 0 && tab[x][z] >= 0 &&
              tab[x][yz] != join[tab[x][y]][tab[x][z]])
            return false;
          int xy = tab[x][y];
          int yz2 = tab[y][z];
          if (xy >= 0 && yz2 >= 0 && tab[xy][z] >= 0 && tab[x][yz2] >= 0 &&
              tab[xy][z] != tab[x][yz2])
            return false;
        }
    return true;
  }

  void rec(std::size_t k) {
    if (k == free_pairs.size()) {
      results->push_back({});
      auto& flat = results->back();
      flat.reserve(n * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) flat.push_back(tab[i][j]);
      return;
    }
    auto [i, j] = free_pairs[k];
    for (int v = 0; v < n; ++v) {
      if (!order.le(v, meet[i][j])) continue;
      tab[i][j] = tab[j][i] = v;
      if (consistent()) rec(k + 1);
    }
    tab[i][j] = tab[j][i] = -1;
  }
};

std::vector<std::string> enum_names(int n) {
  std::vector<std::string> names(n);
  names[0] = "0";
  names[n - 1] = "1";
  for (int i = 1; i < n - 1; ++i) names[i] = std::string(1, static_cast<char>('a' + i - 1));
  return names;
}

}  // namespace

CanonicalForm canonical_form(const Lattice& l) {
  return CanonicalForm{certificate(tables_of(l))};
}

EnumerationResult enumerate_order(int n, std::size_t cap) {
  if (n < 2 || n > kMaxEnumOrder)
    throw Error(ErrorKind::OrderOutOfRange,
                "order must be between 2 and " + std::to_string(kMaxEnumOrder));
  PosetGen pg(n);
  pg.step(0);

  EnumerationResult result;
  std::map<std::vector<std::uint8_t>, Lattice> classes;
  for (const Tables& ord : pg.out) {
    std::vector<std::vector<int>> tabs;
    TableGen tg(ord, &tabs);
    tg.rec(0);
    for (const auto& flat : tabs) {
      std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
      std::vector<std::vector<int>> od(n, std::vector<int>(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          leq[i][j] = ord.le(i, j);
          od[i][j] = flat[i * n + j];
        }
      std::optional<Lattice> l;
      try {
        // Adjunction backstop: the join-distributivity pruning is only a
        // necessary condition, full validation decides.
        l = Lattice::from_tables(enum_names(n), leq, od, std::nullopt);
      } catch (const Error&) {
        continue;
      }
      auto cert = certificate(tables_of(*l));
      if (classes.count(cert)) continue;
      if (classes.size() >= cap) {
        result.truncated = true;
        break;
      }
      classes.emplace(std::move(cert), std::move(*l));
    }
    if (result.truncated) break;
  }
  int idx = 0;
  for (auto& [cert, l] : classes) {
    // certificate order within each order; stable ids for reports
    l.set_id("n" + std::to_string(n) + "c" + std::to_string(idx++));
    result.classes.push_back(std::move(l));
  }
  return result;
}

std::size_t naive_class_count(int n) {
  if (n < 2 || n > 4)
    throw Error(ErrorKind::OrderOutOfRange, "naive generator supports 2 ≤ n ≤ 4");
  std::set<std::vector<std::uint8_t>> classes;
  std::vector<std::pair<int, int>> offdiag;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) offdiag.emplace_back(i, j);

  for (std::uint64_t bits = 0; bits < (1ull << offdiag.size()); ++bits) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) leq[i][i] = true;
    for (std::size_t k = 0; k < offdiag.size(); ++k)
      if (bits >> k & 1) leq[offdiag[k].first][offdiag[k].second] = true;

    // cheap order prefilter before the table loop
    bool order_ok = true;
    for (int i = 0; i < n && order_ok; ++i)
      for (int j = 0; j < n && order_ok; ++j) {
        if (i != j && leq[i][j] && leq[j][i]) order_ok = false;
        if (leq[i][j])
          for (int k = 0; k < n; ++k)
            if (leq[j][k] && !leq[i][k]) order_ok = false;
      }
    if (!order_ok) continue;
    int top = -1, bot = -1;
    for (int i = 0; i < n; ++i) {
      bool is_top = true, is_bot = true;
      for (int j = 0; j < n; ++j) {
        if (!leq[j][i]) is_top = false;
        if (!leq[i][j]) is_bot = false;
      }
      if (is_top) top = i;
      if (is_bot) bot = i;
    }
    if (top < 0 || bot < 0) continue;
    for (int i = 0; i < n && order_ok; ++i)
      for (int j = 0; j < n && order_ok; ++j) {
        int nmeet = 0, njoin = 0;
        for (int m = 0; m < n; ++m) {
          bool low = leq[m][i] && leq[m][j], great = true;
          bool up = leq[i][m] && leq[j][m], least = true;
          for (int z = 0; z < n; ++z) {
            if (leq[z][i] && leq[z][j] && !leq[z][m]) great = false;
            if (leq[i][z] && leq[j][z] && !leq[m][z]) least = false;
          }
          if (low && great) ++nmeet;
          if (up && least) ++njoin;
        }
        if (nmeet != 1 || njoin != 1) order_ok = false;
      }
    if (!order_ok) continue;

    std::vector<int> rest;
    for (int i = 0; i < n; ++i)
      if (i != top) rest.push_back(i);
    std::vector<std::pair<int, int>> cells;
    for (std::size_t a = 0; a < rest.size(); ++a)
      for (std::size_t b = a; b < rest.size(); ++b) cells.emplace_back(rest[a], rest[b]);

    std::uint64_t total = 1;
    for (std::size_t c = 0; c < cells.size(); ++c) total *= n;
    for (std::uint64_t t = 0; t < total; ++t) {
      std::vector<std::vector<int>> od(n, std::vector<int>(n));
      for (int x = 0; x < n; ++x) od[x][top] = od[top][x] = x;
      std::uint64_t rem = t;
      for (auto [a, b] : cells) {
        od[a][b] = od[b][a] = static_cast<int>(rem % n);
        rem /= n;
      }
      std::optional<Lattice> l;
      try {
        l = Lattice::from_tables(enum_names(n), leq, od, std::nullopt);
      } catch (const Error&) {
        continue;
      }
      // brute-force canonicalization: least encoding over all n! bijections
      Tables tb = tables_of(*l);
      std::vector<int> perm(n);
      for (int i = 0; i < n; ++i) perm[i] = i;
      std::vector<std::uint8_t> best;
      do {
        auto enc = encode_under(tb, perm);
        if (best.empty() || enc < best) best = enc;
      } while (std::next_permutation(perm.begin(), perm.end()));
      classes.insert(best);
    }
  }
  return classes.size();
}

// --------------------------------------------------------------------------
// query parsing and search

namespace {

const std::vector<std::string> kFilterAtoms = {
    "simple", "prime", "maximal", "minimal_prime", "essential", "boolean_generated"};
const std::vector<std::string> kLatticeAtoms = {
    "semisimple", "hyperarchimedean", "radical_trivial", "local"};

struct Parser {
  const std::string& s;
  std::size_t pos = 0;
  Query* q;

  void skip() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }

  [[noreturn]] void err(const std::string& msg) {
    throw Error(ErrorKind::QuerySyntaxError, msg + " at offset " + std::to_string(pos));
  }

  int parse_expr() {
    int lhs = parse_term();
    skip();
    while (pos < s.size() && s[pos] == '&') {
      ++pos;
      int rhs = parse_term();
      q->nodes.push_back({Query::Node::Kind::And, -1, lhs, rhs});
      lhs = static_cast<int>(q->nodes.size()) - 1;
      skip();
    }
    return lhs;
  }

  int parse_term() {
    skip();
    if (pos >= s.size()) err("expected a term");
    if (s[pos] == '!') {
      ++pos;
      int inner = parse_term();
      q->nodes.push_back({Query::Node::Kind::Not, -1, inner, -1});
      return static_cast<int>(q->nodes.size()) - 1;
    }
    if (s[pos] == '(') {
      ++pos;
      int inner = parse_expr();
      skip();
      if (pos >= s.size() || s[pos] != ')') err("expected `)`");
      ++pos;
      return inner;
    }
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (start == pos) err("expected an atom");
    std::string name = s.substr(start, pos - start);
    for (std::size_t i = 0; i < kFilterAtoms.size(); ++i)
      if (kFilterAtoms[i] == name) {
        note_scope(Query::Scope::Filter, name);
        q->nodes.push_back({Query::Node::Kind::Atom, static_cast<int>(i), -1, -1});
        return static_cast<int>(q->nodes.size()) - 1;
      }
    for (std::size_t i = 0; i < kLatticeAtoms.size(); ++i)
      if (kLatticeAtoms[i] == name) {
        note_scope(Query::Scope::Lattice, name);
        q->nodes.push_back({Query::Node::Kind::Atom, static_cast<int>(i), -1, -1});
        return static_cast<int>(q->nodes.size()) - 1;
      }
    err("unknown atom `" + name + "`");
  }

  bool scope_set = false;
  void note_scope(Query::Scope sc, const std::string& name) {
    if (!scope_set) {
      q->scope = sc;
      scope_set = true;
    } else if (q->scope != sc) {
      err("atom `" + name + "` mixes filter and lattice scopes");
    }
  }
};

bool eval_query(const Query& q, int node, const std::vector<bool>& atom_values) {
  const Query::Node& nd = q.nodes[node];
  switch (nd.kind) {
    case Query::Node::Kind::Atom: return atom_values[nd.atom];
    case Query::Node::Kind::Not: return !eval_query(q, nd.lhs, atom_values);
    case Query::Node::Kind::And:
      return eval_query(q, nd.lhs, atom_values) && eval_query(q, nd.rhs, atom_values);
  }
  return false;
}

}  // namespace

Query parse_query(const std::string& text) {
  Query q;
  q.text = text;
  Parser p{text, 0, &q};
  q.root = p.parse_expr();
  p.skip();
  if (p.pos != text.size()) p.err("trailing input");
  return q;
}

SearchResult search(const Query& q, int max_order, std::size_t cap) {
  if (max_order < 2 || max_order > kMaxEnumOrder)
    throw Error(ErrorKind::OrderOutOfRange,
                "max order must be between 2 and " + std::to_string(kMaxEnumOrder));
  SearchResult result;
  for (int n = 2; n <= max_order && !result.truncated; ++n) {
    EnumerationResult en = enumerate_order(n, cap);
    result.truncated |= en.truncated;
    for (Lattice& l : en.classes) {
      FilterLattice fl = all_filters(l);
      if (q.scope == Query::Scope::Lattice) {
        std::vector<bool> vals(kLatticeAtoms.size());
        vals[0] = is_semisimple_lattice(fl).value;
        vals[1] = is_hyperarchimedean(fl);
        vals[2] = fl.members(fl.radical()) == ElementSet::single(l.top());
        vals[3] = is_local(fl);
        if (eval_query(q, q.root, vals)) {
          if (result.hits.size() >= cap) {
            result.truncated = true;
            break;
          }
          result.hits.push_back(SearchHit{l, std::nullopt});
        }
      } else {
        BooleanCenter bc = boolean_center(l);
        for (int f = 0; f < fl.count(); ++f) {
          std::vector<bool> vals(kFilterAtoms.size());
          vals[0] = fl.is_simple(f);
          vals[1] = fl.is_prime(f);
          vals[2] = fl.is_maximal(f);
          vals[3] = fl.is_minimal_prime(f);
          vals[4] = fl.is_essential_in_L(f);
          bool bgen = false;
          for (int e : bc.members)
            if (principal_filter(l, e).members == fl.members(f)) bgen = true;
          vals[5] = bgen;
          if (eval_query(q, q.root, vals)) {
            if (result.hits.size() >= cap) {
              result.truncated = true;
              break;
            }
            result.hits.push_back(SearchHit{l, fl.members(f)});
          }
        }
        if (result.truncated) break;
      }
    }
  }
  return result;
}

}  // namespace rlat
