#include "rlat/structure.hpp"

#include <algorithm>

namespace rlat {

namespace {

[[noreturn]] void internal(const std::string& msg) {
  throw Error(ErrorKind::InternalInconsistency, msg);
}

int join_of(const FilterLattice& fl, const std::vector<int>& xs) {
  int j = fl.trivial_index();
  for (int x : xs) j = fl.join(j, x);
  return j;
}

// ⊙-factorization form (tuples f, f' with ⊙fᵢ ≤ ⊙f'ᵢ force fᵢ ≤ f'ᵢ).
// Only evaluated when the tuple space is small.
bool independent_by_factorization(const FilterLattice& fl, const std::vector<int>& family,
                                  bool& evaluated) {
  const Lattice& l = fl.lattice();
  std::size_t tuples = 1;
  for (int f : family) {
    tuples *= static_cast<std::size_t>(fl.members(f).count());
    if (tuples > 512) {
      evaluated = false;
      return true;
    }
  }
  evaluated = true;
  const int k = static_cast<int>(family.size());
  std::vector<std::vector<int>> elems(k);
  for (int i = 0; i < k; ++i)
    for (int x : fl.members(family[i])) elems[i].push_back(x);

  std::vector<std::vector<int>> all_tuples;
  std::vector<int> cur(k, 0);
  for (std::size_t t = 0; t < tuples; ++t) {
    std::size_t rest = t;
    for (int i = 0; i < k; ++i) {
      cur[i] = elems[i][rest % elems[i].size()];
      rest /= elems[i].size();
    }
    all_tuples.push_back(cur);
  }
  auto prod = [&](const std::vector<int>& xs) {
    int p = l.top();
    for (int x : xs) p = l.odot(p, x);
    return p;
  };
  for (const auto& f : all_tuples)
    for (const auto& g : all_tuples)
      if (l.leq(prod(f), prod(g)))
        for (int i = 0; i < k; ++i)
          if (!l.leq(f[i], g[i])) return false;
  return true;
}

}  // namespace

bool is_independent(const FilterLattice& fl, const std::vector<int>& family) {
  if (family.empty()) throw Error(ErrorKind::EmptyFamily, "independence of an empty family");
  const int triv = fl.trivial_index();
  const int k = static_cast<int>(family.size());

  bool bydef = true;
  for (int j = 0; j < k && bydef; ++j) {
    int rest = triv;
    for (int i = 0; i < k; ++i)
      if (i != j) rest = fl.join(rest, family[i]);
    if (fl.meet(family[j], rest) != triv) bydef = false;
  }

  // Disjoint-block form: any two disjoint non-empty index blocks have
  // trivially meeting joins.
  if (k <= 12) {
    bool byblocks = true;
    for (unsigned a = 1; a < (1u << k) && byblocks; ++a)
      for (unsigned b = 1; b < (1u << k); ++b) {
        if (a & b) continue;
        int ja = triv, jb = triv;
        for (int i = 0; i < k; ++i) {
          if (a >> i & 1) ja = fl.join(ja, family[i]);
          if (b >> i & 1) jb = fl.join(jb, family[i]);
        }
        if (fl.meet(ja, jb) != triv) {
          byblocks = false;
          break;
        }
      }
    if (bydef != byblocks) internal("independence block form disagrees");
  }

  bool evaluated = false;
  bool byfact = independent_by_factorization(fl, family, evaluated);
  if (evaluated && bydef != byfact) internal("independence factorization form disagrees");

  return bydef;
}

std::vector<DirectSumWitness> decompose_direct_sum(const FilterLattice& fl, int f) {
  const int triv = fl.trivial_index();
  std::vector<DirectSumWitness> out;
  for (int g = 0; g < fl.count(); ++g)
    for (int h = 0; h < fl.count(); ++h)
      if (fl.meet(g, h) == triv && fl.join(g, h) == f)
        out.push_back(DirectSumWitness{{g, h}, f});

  if (f == fl.full_index()) {
    // L = F⊕G exactly when F = [e), G = [e*) for a Boolean e.
    const Lattice& l = fl.lattice();
    BooleanCenter b = boolean_center(l);
    std::vector<std::pair<int, int>> byboolean;
    for (int e : b.members)
      byboolean.emplace_back(fl.index_of(principal_filter(l, e).members),
                             fl.index_of(principal_filter(l, star(l, e)).members));
    std::sort(byboolean.begin(), byboolean.end());
    std::vector<std::pair<int, int>> direct;
    for (const auto& w : out) direct.emplace_back(w.parts[0], w.parts[1]);
    std::sort(direct.begin(), direct.end());
    if (byboolean != direct) internal("direct sums of L disagree with the Boolean form");
  }
  return out;
}

bool is_direct_summand_of_l(const FilterLattice& fl, int f) {
  const int triv = fl.trivial_index();
  for (int g = 0; g < fl.count(); ++g)
    if (fl.meet(f, g) == triv && fl.join(f, g) == fl.full_index()) return true;
  return false;
}

int socle(const FilterLattice& fl, int f) {
  const int triv = fl.trivial_index();
  if (f == triv) return triv;  // no simple subfilters
  int soc = triv;
  for (int a : fl.simples())
    if (fl.leq(a, f)) soc = fl.join(soc, a);
  // Independent route: Soc(F) = ∩E_F for F ≠ {1}.
  ElementSet cut = fl.lattice().all();
  for (int h : fl.essential_family(f)) cut = cut & fl.members(h);
  if (fl.index_of(cut) != soc) internal("socle routes disagree");
  return soc;
}

bool is_archimedean(const Lattice& l, int x) {
  BooleanCenter b = boolean_center(l);
  int p = l.top();
  for (int n = 1; n <= l.size(); ++n) {
    int next = l.odot(p, x);
    if (b.members.contains(next)) return true;
    if (next == p) return false;  // power sequence stabilized
    p = next;
  }
  return false;
}

bool is_hyperarchimedean(const FilterLattice& fl) {
  const Lattice& l = fl.lattice();
  bool byelems = true;
  for (int x = 0; x < l.size(); ++x)
    if (!is_archimedean(l, x)) {
      byelems = false;
      break;
    }
  bool specmax = fl.primes() == fl.maximals();
  bool specminp = fl.primes() == fl.minimal_primes();
  if (byelems != specmax || byelems != specminp)
    internal("hyperarchimedean routes disagree");
  return byelems;
}

bool is_local(const FilterLattice& fl) { return fl.maximals().size() == 1; }

bool is_semilocal(const FilterLattice& fl) {
  (void)fl;
  return true;  // Max(L) is finite for every finite L
}

namespace {

std::vector<int> atoms_below(const FilterLattice& fl, int f) {
  std::vector<int> out;
  for (int a : fl.simples())
    if (fl.leq(a, f)) out.push_back(a);
  return out;
}

// Condition (2): F is a direct sum of simple filters. Greedy maximal
// independent subfamily first, exhaustive over atom subsets as fallback.
bool sum_of_simples(const FilterLattice& fl, int f) {
  const int triv = fl.trivial_index();
  std::vector<int> atoms = atoms_below(fl, f);
  if (atoms.empty()) return false;
  std::vector<int> fam;
  int j = triv;
  for (int a : atoms)
    if (fl.meet(a, j) == triv) {
      fam.push_back(a);
      j = fl.join(j, a);
    }
  if (j == f && is_independent(fl, fam)) return true;
  if (atoms.size() <= 16) {
    for (unsigned m = 1; m < (1u << atoms.size()); ++m) {
      std::vector<int> sub;
      for (std::size_t i = 0; i < atoms.size(); ++i)
        if (m >> i & 1) sub.push_back(atoms[i]);
      if (join_of(fl, sub) == f && is_independent(fl, sub)) return true;
    }
  }
  return false;
}

}  // namespace

SemisimpleFilterVerdict is_semisimple_filter(const FilterLattice& fl, int f) {
  const int triv = fl.trivial_index();
  if (f == triv)
    internal("semi-simplicity is defined for F ≠ {1}");
  SemisimpleFilterVerdict v{};

  // (1) F is a join of simple filters.
  std::vector<int> atoms = atoms_below(fl, f);
  v.conditions[0] = !atoms.empty() && join_of(fl, atoms) == f;

  // (2) F is a direct sum of simple filters.
  v.conditions[1] = sum_of_simples(fl, f);

  // (3) every subfilter splits off: H ⊆ F has G with F = H⊕G.
  bool c3 = true;
  for (int h = 0; h < fl.count() && c3; ++h) {
    if (!fl.leq(h, f)) continue;
    int cand = fl.meet(fl.index_of(star_filter(fl.filter(h)).members), f);
    if (fl.meet(h, cand) == triv && fl.join(h, cand) == f) continue;
    bool found = false;
    for (int g = 0; g < fl.count() && !found; ++g)
      if (fl.meet(h, g) == triv && fl.join(h, g) == f) found = true;
    c3 = found;
  }
  v.conditions[2] = c3;

  // (4) the splitting is always H⊕(H*∩F).
  bool c4 = true;
  for (int h = 0; h < fl.count() && c4; ++h) {
    if (!fl.leq(h, f)) continue;
    int g = fl.meet(fl.index_of(star_filter(fl.filter(h)).members), f);
    if (!(fl.meet(h, g) == triv && fl.join(h, g) == f)) c4 = false;
  }
  v.conditions[3] = c4;

  // (5) E_F = {F}.
  v.conditions[4] = fl.essential_family(f) == std::vector<int>{f};

  for (bool c : v.conditions)
    if (c != v.conditions[0]) internal("semi-simple filter conditions disagree");
  v.value = v.conditions[0];
  return v;
}

SemisimpleLatticeVerdict is_semisimple_lattice(const FilterLattice& fl) {
  const int triv = fl.trivial_index();
  const int full = fl.full_index();
  const Lattice& l = fl.lattice();
  SemisimpleLatticeVerdict v{};

  SemisimpleFilterVerdict base = is_semisimple_filter(fl, full);
  v.conditions[0] = base.conditions[0];
  v.conditions[1] = base.conditions[1];
  v.conditions[2] = base.conditions[2];
  v.conditions[3] = base.conditions[3];
  v.conditions[5] = base.conditions[4];  // E_L = {L}

  // (5) every filter is generated by a Boolean element.
  BooleanCenter b = boolean_center(l);
  bool c5 = true;
  for (int i = 0; i < fl.count() && c5; ++i) {
    bool gen = false;
    for (int e : b.members)
      if (principal_filter(l, e).members == fl.members(i)) {
        gen = true;
        break;
      }
    c5 = gen;
  }
  v.conditions[4] = c5;

  // (7) L is a finite direct sum of simples, decided through the complements
  // of the maximal filters (Nᵢ = ∩ of the other maximals).
  std::vector<int> maxs = fl.maximals();
  {
    std::vector<int> parts;
    for (std::size_t i = 0; i < maxs.size(); ++i) {
      int ni = full;
      for (std::size_t j = 0; j < maxs.size(); ++j)
        if (j != i) ni = fl.meet(ni, maxs[j]);
      parts.push_back(ni);
    }
    bool c7 = !parts.empty();
    for (int p : parts)
      if (!fl.is_simple(p)) c7 = false;
    if (c7) c7 = is_independent(fl, parts) && join_of(fl, parts) == full;
    v.conditions[6] = c7;
  }

  // (8), (9)
  v.conditions[7] = is_hyperarchimedean(fl) && is_semilocal(fl);
  v.conditions[8] = fl.radical() == triv && is_semilocal(fl);

  // (10) every proper filter is a unique intersection of distinct maximals.
  if (maxs.size() > 20)
    throw Error(ErrorKind::CapacityExceeded, "too many maximal filters to enumerate");
  bool c10 = true;
  for (int f = 0; f < fl.count() && c10; ++f) {
    if (f == full) continue;
    std::vector<int> above;
    for (int m : maxs)
      if (fl.leq(f, m)) above.push_back(m);
    int reps = 0;
    for (unsigned msk = 1; msk < (1u << above.size()); ++msk) {
      ElementSet cut = l.all();
      for (std::size_t i = 0; i < above.size(); ++i)
        if (msk >> i & 1) cut = cut & fl.members(above[i]);
      if (cut == fl.members(f)) ++reps;
    }
    c10 = reps == 1;
  }
  v.conditions[9] = c10;

  // (11) {1} is an intersection of maximals, i.e. ∩Max(L) = {1}.
  ElementSet cut = l.all();
  for (int m : maxs) cut = cut & fl.members(m);
  v.conditions[10] = cut == ElementSet::single(l.top());

  // (12) every non-trivial filter is semi-simple.
  bool c12 = true;
  for (int f = 0; f < fl.count() && c12; ++f)
    if (f != triv && !is_semisimple_filter(fl, f).value) c12 = false;
  v.conditions[11] = c12;

  for (bool c : v.conditions)
    if (c != v.conditions[0]) internal("semi-simple lattice conditions disagree");
  v.value = v.conditions[0];
  return v;
}

}  // namespace rlat
