#include "rlat/filters.hpp"

#include <algorithm>

namespace rlat {

namespace {

[[noreturn]] void internal(const std::string& msg) {
  throw Error(ErrorKind::InternalInconsistency, msg);
}

}  // namespace

bool is_filter_subset(const Lattice& l, ElementSet s) {
  if (!s.contains(l.top())) return false;
  for (int x : s) {
    if (!l.upset(x).subset_of(s)) return false;            // (F2)
    for (int y : s)
      if (!s.contains(l.odot(x, y))) return false;         // (F1)
  }
  return true;
}

bool is_deductive_system(const Lattice& l, ElementSet s) {
  if (!s.contains(l.top())) return false;                  // (D1)
  for (int x : s)
    for (int y = 0; y < l.size(); ++y)
      if (s.contains(l.arrow(x, y)) && !s.contains(y)) return false;  // (D2)
  return true;
}

Filter generated_filter(const Lattice& l, ElementSet s) {
  if (s.empty()) throw Error(ErrorKind::EmptyGeneratingSet, "[S) needs a non-empty S");
  ElementSet c = s;
  c.insert(l.top());
  for (bool grew = true; grew;) {
    grew = false;
    for (int x : c)
      for (int y : c) {
        int p = l.odot(x, y);
        if (!c.contains(p)) {
          c.insert(p);
          grew = true;
        }
      }
  }
  ElementSet up;
  for (int x : c) up = up | l.upset(x);
  return Filter{&l, up};
}

Filter principal_filter(const Lattice& l, int x) {
  Filter f = generated_filter(l, ElementSet::single(x));
  // Prop-style element form: [x) = {z : xⁿ ≤ z for some 1 ≤ n ≤ |L|}.
  ElementSet byform;
  int p = l.top();
  for (int n = 1; n <= l.size(); ++n) {
    p = l.odot(p, x);
    byform = byform | l.upset(p);
  }
  if (!(byform == f.members))
    internal("principal filter of " + l.name(x) + " disagrees with the power form");
  return f;
}

Filter filter_meet(const Filter& f, const Filter& g) {
  if (f.lattice != g.lattice)
    throw Error(ErrorKind::LatticeMismatch, "filters of different lattices");
  return Filter{f.lattice, f.members & g.members};
}

Filter filter_join(const Filter& f, const Filter& g) {
  if (f.lattice != g.lattice)
    throw Error(ErrorKind::LatticeMismatch, "filters of different lattices");
  const Lattice& l = *f.lattice;
  Filter j = generated_filter(l, f.members | g.members);
  // Element form: F∨G = {x : a⊙b ≤ x for some a ∈ F, b ∈ G}.
  ElementSet byform;
  for (int a : f.members)
    for (int b : g.members) byform = byform | l.upset(l.odot(a, b));
  if (!(byform == j.members)) internal("filter join disagrees with the element form");
  return j;
}

Filter star_filter(const Filter& f) {
  const Lattice& l = *f.lattice;
  ElementSet byjoin;
  for (int x = 0; x < l.size(); ++x) {
    bool all1 = true;
    for (int y : f.members)
      if (l.join(x, y) != l.top()) {
        all1 = false;
        break;
      }
    if (all1) byjoin.insert(x);
  }
  // Dual route: F* = {x : F∩[x) = {1}}.
  ElementSet bydef;
  for (int x = 0; x < l.size(); ++x)
    if ((f.members & principal_filter(l, x).members) == ElementSet::single(l.top()))
      bydef.insert(x);
  if (!(byjoin == bydef)) internal("F* characterizations disagree");
  if (!is_filter_subset(l, byjoin)) internal("F* is not a filter");
  return Filter{&l, byjoin};
}

bool filter_order_less(ElementSet a, ElementSet b, int n) {
  if (a.count() != b.count()) return a.count() < b.count();
  for (int i = 0; i < n; ++i) {
    bool ai = a.contains(i), bi = b.contains(i);
    if (ai != bi) return ai;  // the filter containing the earlier element first
  }
  return false;
}

std::vector<ElementSet> all_filters_scan(const Lattice& l) {
  std::vector<ElementSet> out;
  const int n = l.size();
  const std::uint64_t topbit = 1ull << l.top();
  for (std::uint64_t m = 0; m < (1ull << n); ++m) {
    if (!(m & topbit)) continue;
    ElementSet s(m);
    if (is_filter_subset(l, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(),
            [n](ElementSet a, ElementSet b) { return filter_order_less(a, b, n); });
  return out;
}

std::vector<ElementSet> all_filters_closure(const Lattice& l, std::size_t cap) {
  std::vector<ElementSet> found;
  auto add = [&](ElementSet s) {
    if (std::find(found.begin(), found.end(), s) != found.end()) return false;
    if (found.size() >= cap)
      throw Error(ErrorKind::CapacityExceeded, "filter count exceeds cap");
    found.push_back(s);
    return true;
  };
  add(ElementSet::single(l.top()));
  for (int x = 0; x < l.size(); ++x) add(principal_filter(l, x).members);
  // Breadth-first closure under pairwise join and meet.
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t k = found.size();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        Filter a{&l, found[i]}, b{&l, found[j]};
        if (add(filter_join(a, b).members)) grew = true;
        if (add(filter_meet(a, b).members)) grew = true;
      }
  }
  std::sort(found.begin(), found.end(), [n = l.size()](ElementSet a, ElementSet b) {
    return filter_order_less(a, b, n);
  });
  return found;
}

FilterLattice all_filters(const Lattice& l, std::size_t cap) {
  FilterLattice fl;
  fl.lat_ = &l;
  fl.filters_ = l.size() <= 20 ? all_filters_scan(l) : all_filters_closure(l, cap);
  if (fl.filters_.size() > cap)
    throw Error(ErrorKind::CapacityExceeded, "filter count exceeds cap");
  const int k = fl.count();
  fl.meet_.assign(k * k, 0);
  fl.join_.assign(k * k, 0);
  for (int i = 0; i < k; ++i) {
    if (fl.filters_[i] == ElementSet::single(l.top())) fl.trivial_ = i;
    if (fl.filters_[i] == l.all()) fl.full_ = i;
  }
  if (fl.trivial_ < 0 || fl.full_ < 0) internal("Filt(L) is missing {1} or L");
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int m = fl.index_of(fl.filters_[i] & fl.filters_[j]);
      int jn = fl.index_of(filter_join(fl.filter(i), fl.filter(j)).members);
      if (m < 0 || jn < 0) internal("Filt(L) not closed under meet/join");
      fl.meet_[i * k + j] = static_cast<std::uint8_t>(m);
      fl.join_[i * k + j] = static_cast<std::uint8_t>(jn);
    }
  return fl;
}

int FilterLattice::index_of(ElementSet s) const {
  for (int i = 0; i < count(); ++i)
    if (filters_[i] == s) return i;
  return -1;
}

void FilterLattice::classify() const {
  if (classified_) return;
  const Lattice& l = *lat_;
  const int k = count();
  const int n = l.size();
  prime_.assign(k, 0);
  maximal_.assign(k, 0);
  minimal_prime_.assign(k, 0);
  simple_.assign(k, 0);
  essential_.assign(k, 0);
  generators_.assign(k, ElementSet());

  for (int i = 0; i < k; ++i) {
    ElementSet f = filters_[i];
    bool isproper = i != full_;

    // Prime: element definition, cross-checked against the Filt(L)-order form
    // (F∩G ⊆ P implies F ⊆ P or G ⊆ P).
    bool prime = isproper;
    for (int x = 0; x < n && prime; ++x)
      for (int y = 0; y < n; ++y)
        if (f.contains(l.join(x, y)) && !f.contains(x) && !f.contains(y)) {
          prime = false;
          break;
        }
    bool prime_order = isproper;
    for (int a = 0; a < k && prime_order; ++a)
      for (int b = 0; b < k; ++b)
        if ((filters_[a] & filters_[b]).subset_of(f) && !filters_[a].subset_of(f) &&
            !filters_[b].subset_of(f)) {
          prime_order = false;
          break;
        }
    if (prime != prime_order) internal("prime predicate routes disagree");
    prime_[i] = prime;

    // Maximal: no proper filter strictly above, cross-checked against the
    // element test (x ∉ M iff (xⁿ)* ∈ M for some n).
    bool maximal = isproper;
    for (int a = 0; a < k && maximal; ++a)
      if (a != full_ && f.proper_subset_of(filters_[a])) maximal = false;
    bool maximal_elem = isproper;
    for (int x = 0; x < n && maximal_elem; ++x) {
      bool powerstar = false;
      for (int e = 1; e <= n && !powerstar; ++e)
        if (f.contains(star(l, power(l, x, e)))) powerstar = true;
      if (!f.contains(x) != powerstar) maximal_elem = false;
    }
    if (maximal != maximal_elem) internal("maximal predicate routes disagree");
    maximal_[i] = maximal;

    for (int x = 0; x < n; ++x)
      if (generated_filter(l, ElementSet::single(x)).members == f) generators_[i].insert(x);

    // Simple: an atom of Filt(L).
    bool simple = i != trivial_;
    for (int a = 0; a < k && simple; ++a)
      if (a != trivial_ && a != i && filters_[a].proper_subset_of(f)) simple = false;
    simple_[i] = simple;

    essential_[i] =
        star_filter(filter(i)).members == ElementSet::single(l.top());
  }

  for (int i = 0; i < k; ++i) {
    // Minimal prime: no prime strictly below, cross-checked against the
    // element test (every x ∈ P has y ∉ P with x∨y = 1).
    bool minp = prime_[i];
    for (int a = 0; a < k && minp; ++a)
      if (prime_[a] && filters_[a].proper_subset_of(filters_[i])) minp = false;
    bool minp_elem = prime_[i];
    for (int x : filters_[i]) {
      if (!minp_elem) break;
      bool witness = false;
      for (int y = 0; y < n && !witness; ++y)
        if (!filters_[i].contains(y) && l.join(x, y) == l.top()) witness = true;
      if (!witness) minp_elem = false;
    }
    if (minp != minp_elem) internal("minimal-prime predicate routes disagree");
    minimal_prime_[i] = minp;
  }

  // Rad(L) = ∩Max(L), verified against the power formula
  // {x : for every n there is k with ((xⁿ)*)ᵏ = 0}.
  ElementSet rad = l.all();
  for (int i = 0; i < k; ++i)
    if (maximal_[i]) rad = rad & filters_[i];
  ElementSet byformula;
  for (int x = 0; x < n; ++x) {
    bool in = true;
    for (int e = 1; e <= n && in; ++e) {
      int s = star(l, power(l, x, e));
      bool nil = false;
      for (int kk = 1; kk <= n && !nil; ++kk)
        if (power(l, s, kk) == l.bottom()) nil = true;
      if (!nil) in = false;
    }
    if (in) byformula.insert(x);
  }
  if (!(rad == byformula)) internal("radical routes disagree");
  radical_ = index_of(rad);
  if (radical_ < 0) internal("radical is not a filter");

  classified_ = true;
}

bool FilterLattice::is_prime(int i) const {
  classify();
  return prime_[i];
}
bool FilterLattice::is_maximal(int i) const {
  classify();
  return maximal_[i];
}
bool FilterLattice::is_minimal_prime(int i) const {
  classify();
  return minimal_prime_[i];
}
bool FilterLattice::is_simple(int i) const {
  classify();
  return simple_[i];
}
bool FilterLattice::is_essential_in_L(int i) const {
  classify();
  return essential_[i];
}
ElementSet FilterLattice::principal_generators(int i) const {
  classify();
  return generators_[i];
}

std::vector<int> FilterLattice::primes() const {
  std::vector<int> out;
  for (int i = 0; i < count(); ++i)
    if (is_prime(i)) out.push_back(i);
  return out;
}
std::vector<int> FilterLattice::maximals() const {
  std::vector<int> out;
  for (int i = 0; i < count(); ++i)
    if (is_maximal(i)) out.push_back(i);
  return out;
}
std::vector<int> FilterLattice::minimal_primes() const {
  std::vector<int> out;
  for (int i = 0; i < count(); ++i)
    if (is_minimal_prime(i)) out.push_back(i);
  return out;
}
std::vector<int> FilterLattice::simples() const {
  std::vector<int> out;
  for (int i = 0; i < count(); ++i)
    if (is_simple(i)) out.push_back(i);
  return out;
}

bool FilterLattice::essential_in(int h, int f) const {
  if (!filters_[h].subset_of(filters_[f]))
    throw Error(ErrorKind::NotASubfilter,
                render_filter(*this, h) + " is not a subfilter of " + render_filter(*this, f));
  if (f == full_) return is_essential_in_L(h);
  const int triv = trivial_;
  for (int g = 0; g < count(); ++g)
    if (meet(h, g) == triv && meet(f, g) != triv) return false;
  return true;
}

std::vector<int> FilterLattice::essential_family(int f, std::size_t cap) const {
  std::vector<int> out;
  for (int h = 0; h < count(); ++h)
    if (leq(h, f) && essential_in(h, f)) {
      if (out.size() >= cap)
        throw Error(ErrorKind::CapacityExceeded, "essential family exceeds cap");
      out.push_back(h);
    }
  return out;
}

int FilterLattice::radical() const {
  classify();
  return radical_;
}

std::string render_filter(const FilterLattice& fl, int i) {
  return render_element_set(fl.lattice(), fl.members(i));
}

}  // namespace rlat
