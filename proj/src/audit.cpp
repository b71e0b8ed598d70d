#include "rlat/audit.hpp"

#include <bit>
#include <functional>
#include <optional>
#include <sstream>

#include "rlat/filters.hpp"
#include "rlat/spectrum.hpp"
#include "rlat/structure.hpp"

namespace rlat {

namespace {

using Witness = std::optional<std::string>;

struct Ctx {
  const Lattice& l;
  const FilterLattice& fl;
  BooleanCenter bc;
  SpectrumSpace spec, max;
  int triv, full, rad;
  bool rad_trivial;
  std::vector<int> maxs, prms, minps, atoms;

  explicit Ctx(const Lattice& lat, const FilterLattice& filt)
      : l(lat),
        fl(filt),
        bc(boolean_center(lat)),
        spec(filt, SpaceKind::Spec),
        max(filt, SpaceKind::Max),
        triv(filt.trivial_index()),
        full(filt.full_index()),
        rad(filt.radical()),
        rad_trivial(filt.members(filt.radical()) == ElementSet::single(lat.top())),
        maxs(filt.maximals()),
        prms(filt.primes()),
        minps(filt.minimal_primes()),
        atoms(filt.simples()) {}

  std::string en(int x) const { return l.name(x); }
  std::string fn(int i) const { return render_filter(fl, i); }
  int pf(int x) const { return fl.index_of(principal_filter(l, x).members); }
  int starf(int i) const { return fl.index_of(star_filter(fl.filter(i)).members); }
  bool hyper_elems() const {
    for (int x = 0; x < l.size(); ++x)
      if (!is_archimedean(l, x)) return false;
    return true;
  }
};

struct Claim {
  const char* id;
  const char* gate;  // human description of the hypothesis; empty if ungated
  std::function<bool(const Ctx&)> applicable;
  std::function<Witness(const Ctx&)> run;
};

bool always(const Ctx&) { return true; }
bool rad_trivial(const Ctx& c) { return c.rad_trivial; }

// ---------------------------------------------------------------------------
// core element laws

Witness chk_adjunction(const Ctx& c) {
  const Lattice& l = c.l;
  for (int x = 0; x < l.size(); ++x)
    for (int y = 0; y < l.size(); ++y)
      for (int z = 0; z < l.size(); ++z)
        if (l.leq(l.odot(x, z), y) != l.leq(z, l.arrow(x, y)))
          return "x=" + c.en(x) + " y=" + c.en(y) + " z=" + c.en(z);
  return {};
}

Witness chk_law_01(const Ctx& c) {
  const Lattice& l = c.l;
  for (int x = 0; x < l.size(); ++x)
    for (int y = 0; y < l.size(); ++y)
      if (l.leq(x, y) != (l.arrow(x, y) == l.top()))
        return "x=" + c.en(x) + " y=" + c.en(y);
  return {};
}

Witness chk_law_02(const Ctx& c) {
  const Lattice& l = c.l;
  for (int x = 0; x < l.size(); ++x)
    for (int y = 0; y < l.size(); ++y)
      if (l.leq(x, y) && !l.leq(star(l, y), star(l, x)))
        return "x=" + c.en(x) + " y=" + c.en(y);
  return {};
}

Witness chk_law_03(const Ctx& c) {
  const Lattice& l = c.l;
  for (int x = 0; x < l.size(); ++x) {
    for (int y = 0; y < l.size(); ++y)
      if ((l.odot(x, y) == l.bottom()) != l.leq(x, star(l, y)))
        return "x=" + c.en(x) + " y=" + c.en(y);
    if (l.odot(x, star(l, x)) != l.bottom()) return "x=" + c.en(x);
  }
  return {};
}

Witness chk_law_04(const Ctx& c) {
  const Lattice& l = c.l;
  for (int x = 0; x < l.size(); ++x)
    for (int y = 0; y < l.size(); ++y) {
      if (!l.leq(l.odot(x, l.arrow(x, y)), y)) return "x=" + c.en(x) + " y=" + c.en(y);
      if (!l.leq(y, l.arrow(x, y))) return "x=" + c.en(x) + " y=" + c.en(y);
    }
  return {};
}

Witness chk_law_05(const Ctx& c) {
  const Lattice& l = c.l;
  for (int x = 0; x < l.size(); ++x)
    for (int y = 0; y < l.size(); ++y) {
      if (l.join(x, y) != l.top()) continue;
      if (l.meet(x, y) != l.odot(x, y)) return "x=" + c.en(x) + " y=" + c.en(y);
      for (int n = 1; n <= l.size(); ++n)
        for (int m = 1; m <= l.size(); ++m)
          if (l.join(power(l, x, n), power(l, y, m)) != l.top())
            return "x=" + c.en(x) + " y=" + c.en(y) + " n=" + std::to_string(n) +
                   " m=" + std::to_string(m);
    }
  return {};
}

Witness chk_law_06(const Ctx& c) {
  const Lattice& l = c.l;
  for (int x = 0; x < l.size(); ++x)
    for (int y = 0; y < l.size(); ++y) {
      if (star(l, l.join(x, y)) != l.meet(star(l, x), star(l, y)))
        return "x=" + c.en(x) + " y=" + c.en(y);
      for (int z = 0; z < l.size(); ++z) {
        if (!l.leq(l.odot(l.join(x, y), l.join(x, z)), l.join(x, l.odot(y, z))))
          return "x=" + c.en(x) + " y=" + c.en(y) + " z=" + c.en(z);
        if (l.odot(x, l.join(y, z)) != l.join(l.odot(x, y), l.odot(x, z)))
          return "x=" + c.en(x) + " y=" + c.en(y) + " z=" + c.en(z);
      }
    }
  return {};
}

Witness chk_law_07(const Ctx& c) {
  const Lattice& l = c.l;
  for (int e : c.bc.members) {
    if (c.bc.complement_of[e] != star(l, e)) return "e=" + c.en(e);
    if (l.meet(e, star(l, e)) != l.bottom()) return "e=" + c.en(e);
    if (l.odot(e, star(l, e)) != l.bottom()) return "e=" + c.en(e);
    if (star(l, star(l, e)) != e) return "e=" + c.en(e);
    for (int n = 1; n <= l.size(); ++n)
      if (power(l, e, n) != e) return "e=" + c.en(e) + " n=" + std::to_string(n);
    for (int f : c.bc.members) {
      if (l.odot(e, f) != l.meet(e, f)) return "e=" + c.en(e) + " f=" + c.en(f);
      if (!c.bc.members.contains(l.odot(e, f))) return "e=" + c.en(e) + " f=" + c.en(f);
    }
  }
  return {};
}

Witness chk_law_08(const Ctx& c) {
  const Lattice& l = c.l;
  for (int e : c.bc.members)
    for (int x = 0; x < l.size(); ++x) {
      if (l.odot(e, x) != l.meet(e, x)) return "e=" + c.en(e) + " x=" + c.en(x);
      for (int y = 0; y < l.size(); ++y) {
        if (l.meet(e, l.odot(x, y)) != l.odot(l.meet(e, x), l.meet(e, y)))
          return "e=" + c.en(e) + " x=" + c.en(x) + " y=" + c.en(y);
        if (l.join(e, l.odot(x, y)) != l.odot(l.join(e, x), l.join(e, y)))
          return "e=" + c.en(e) + " x=" + c.en(x) + " y=" + c.en(y);
      }
    }
  return {};
}

Witness chk_law_09(const Ctx& c) {
  const Lattice& l = c.l;
  for (int e : c.bc.members)
    for (int x = 0; x < l.size(); ++x) {
      if (l.arrow(e, x) != l.join(star(l, e), x)) return "e=" + c.en(e) + " x=" + c.en(x);
      if (l.arrow(x, e) != l.join(star(l, x), e)) return "e=" + c.en(e) + " x=" + c.en(x);
      if (l.odot(e, l.arrow(e, x)) != l.meet(e, x)) return "e=" + c.en(e) + " x=" + c.en(x);
      if (l.odot(x, l.arrow(x, e)) != l.meet(e, x)) return "e=" + c.en(e) + " x=" + c.en(x);
    }
  return {};
}

Witness chk_law_10(const Ctx& c) {
  const Lattice& l = c.l;
  for (int x = 0; x < l.size(); ++x)
    if (l.join(x, star(l, x)) == l.top() && !c.bc.members.contains(x))
      return "x=" + c.en(x);
  return {};
}

Witness chk_law_11(const Ctx& c) {
  const Lattice& l = c.l;
  for (int e : c.bc.members)
    for (int x = 0; x < l.size(); ++x) {
      bool a = l.leq(e, x);
      bool b = l.arrow(e, x) == l.top();
      bool d = l.join(star(l, e), x) == l.top();
      if (a != b || b != d) return "e=" + c.en(e) + " x=" + c.en(x);
    }
  return {};
}

Witness chk_boolean_center(const Ctx& c) {
  const Lattice& l = c.l;
  for (int x = 0; x < l.size(); ++x) {
    int ncomp = 0;
    for (int y = 0; y < l.size(); ++y)
      if (l.meet(x, y) == l.bottom() && l.join(x, y) == l.top()) ++ncomp;
    if (c.bc.members.contains(x) && ncomp != 1) return "x=" + c.en(x);
    if (!c.bc.members.contains(x) && ncomp != 0) return "x=" + c.en(x);
  }
  return {};
}

// ---------------------------------------------------------------------------
// filter theory

void each_subset(const Ctx& c, const std::function<void(ElementSet)>& f) {
  const int n = c.l.size();
  if (n <= 16) {
    for (std::uint64_t m = 0; m < (1ull << n); ++m) f(ElementSet(m));
    return;
  }
  // Deterministic sample for oversized carriers.
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  std::uint64_t lim = n >= 64 ? ~0ull : (1ull << n) - 1;
  for (int i = 0; i < 4096; ++i) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    f(ElementSet(state & lim));
  }
  for (int x = 0; x < n; ++x) f(c.l.upset(x));
}

Witness chk_filter_iff_deductive(const Ctx& c) {
  Witness w;
  each_subset(c, [&](ElementSet s) {
    if (w || s.empty()) return;
    if (is_filter_subset(c.l, s) != is_deductive_system(c.l, s))
      w = "S=" + render_element_set(c.l, s);
  });
  return w;
}

Witness chk_2_555_4(const Ctx& c) {
  const Lattice& l = c.l;
  for (int x = 0; x < l.size(); ++x)
    for (int y = 0; y < l.size(); ++y) {
      int jx = c.pf(x), jy = c.pf(y);
      int join = c.fl.join(jx, jy);
      if (join != c.pf(l.meet(x, y)) || join != c.pf(l.odot(x, y)))
        return "x=" + c.en(x) + " y=" + c.en(y);
      if (c.fl.meet(jx, jy) != c.pf(l.join(x, y)))
        return "x=" + c.en(x) + " y=" + c.en(y);
    }
  return {};
}

Witness chk_2_555_6(const Ctx& c) {
  for (int f = 0; f < c.fl.count(); ++f) {
    int fs = c.starf(f);
    for (int g = 0; g < c.fl.count(); ++g)
      if (c.fl.leq(g, fs) != (c.fl.meet(f, g) == c.triv))
        return "F=" + c.fn(f) + " G=" + c.fn(g);
  }
  return {};
}

Witness chk_distributive(const Ctx& c) {
  const int k = c.fl.count();
  for (int f = 0; f < k; ++f)
    for (int g = 0; g < k; ++g)
      for (int h = 0; h < k; ++h)
        if (c.fl.meet(f, c.fl.join(g, h)) != c.fl.join(c.fl.meet(f, g), c.fl.meet(f, h)))
          return "F=" + c.fn(f) + " G=" + c.fn(g) + " H=" + c.fn(h);
  return {};
}

Witness chk_modul(const Ctx& c) {
  const int k = c.fl.count();
  for (int f = 0; f < k; ++f)
    for (int g = 0; g < k; ++g) {
      if (!c.fl.leq(f, g)) continue;
      for (int h = 0; h < k; ++h)
        if (c.fl.meet(g, c.fl.join(f, h)) != c.fl.join(f, c.fl.meet(g, h)))
          return "F=" + c.fn(f) + " G=" + c.fn(g) + " H=" + c.fn(h);
    }
  return {};
}

Witness chk_efe(const Ctx& c) {
  for (int f = 0; f < c.fl.count(); ++f)
    for (int h = 0; h < c.fl.count(); ++h) {
      if (!c.fl.leq(h, f)) continue;
      int cand = c.fl.join(h, c.fl.meet(c.starf(h), f));
      if (!c.fl.essential_in(cand, f)) return "F=" + c.fn(f) + " H=" + c.fn(h);
    }
  return {};
}

Witness chk_remark_key(const Ctx& c) {
  for (int t : c.atoms)
    for (int x : c.fl.members(t))
      if (x != c.l.top() && c.pf(x) != t) return "T=" + c.fn(t) + " x=" + c.en(x);
  return {};
}

Witness chk_smb(const Ctx& c) {
  for (int e : c.bc.members)
    if (c.fl.is_maximal(c.pf(e)) != c.fl.is_simple(c.pf(star(c.l, e))))
      return "e=" + c.en(e);
  return {};
}

Witness chk_133(const Ctx& c) {
  for (int t : c.atoms) {
    bool case1 = false;
    for (int x : c.bc.members) {
      if (x == c.l.top() || c.pf(x) != t) continue;
      // [x*) must be the unique maximal filter not containing T.
      std::vector<int> notcontaining;
      for (int m : c.maxs)
        if (!c.fl.leq(t, m)) notcontaining.push_back(m);
      if (notcontaining == std::vector<int>{c.pf(star(c.l, x))}) case1 = true;
    }
    bool case2 = c.fl.leq(t, c.rad);
    for (int x : c.fl.members(t))
      if (x != c.l.top() && c.pf(star(c.l, x)) != c.full) case2 = false;
    if (!case1 && !case2) return "T=" + c.fn(t);
  }
  return {};
}

Witness chk_sr1(const Ctx& c) {
  for (int t = 0; t < c.fl.count(); ++t) {
    if (t == c.triv) continue;
    bool boolean_form = false;
    for (int e : c.bc.members)
      if (c.pf(e) == t && c.fl.is_maximal(c.pf(star(c.l, e)))) boolean_form = true;
    if (c.fl.is_simple(t) != boolean_form) return "T=" + c.fn(t);
  }
  return {};
}

Witness chk_scro1(const Ctx& c) {
  for (int t : c.atoms)
    for (int x : c.fl.members(t)) {
      bool lhs = c.pf(star(c.l, x)) != c.full;
      bool rhs = c.bc.members.contains(x) && x != c.l.top() && c.pf(x) == t;
      if (lhs != rhs) return "T=" + c.fn(t) + " x=" + c.en(x);
    }
  return {};
}

Witness chk_esse(const Ctx& c) {
  const Lattice& l = c.l;
  for (int f = 0; f < c.fl.count(); ++f) {
    bool e1 = c.fl.is_essential_in_L(f);
    bool e2 = c.starf(f) == c.triv;
    bool e3 = true;
    for (int x = 0; x < l.size(); ++x) {
      bool joins_all = true;
      for (int y : c.fl.members(f))
        if (l.join(x, y) != l.top()) joins_all = false;
      if (joins_all && x != l.top()) e3 = false;
    }
    bool e4 = true;
    for (int x = 0; x < l.size(); ++x) {
      if (x == l.top()) continue;
      bool witness = false;
      for (int y : c.fl.members(f))
        if (l.join(x, y) != l.top()) witness = true;
      if (!witness) e4 = false;
    }
    if (e1 != e2 || e2 != e3 || e3 != e4) return "F=" + c.fn(f);
  }
  return {};
}

Witness chk_1166(const Ctx& c) {
  for (int p : c.prms)
    if (!c.fl.is_essential_in_L(p) && !c.fl.is_minimal_prime(p)) return "P=" + c.fn(p);
  return {};
}

Witness chk_pes(const Ctx& c) {
  for (int p : c.prms)
    if (!c.fl.is_essential_in_L(p) != c.fl.is_minimal_prime(p)) return "P=" + c.fn(p);
  return {};
}

Witness chk_nm(const Ctx& c) {
  for (int f = 0; f < c.fl.count(); ++f) {
    bool rhs = true;
    for (int p : c.minps)
      if (c.fl.leq(f, p)) rhs = false;
    if (c.fl.is_essential_in_L(f) != rhs) return "F=" + c.fn(f);
  }
  return {};
}

Witness chk_2_700(const Ctx& c) {
  for (int f = 0; f < c.fl.count(); ++f) {
    if (f == c.full) continue;
    ElementSet cut = c.l.all();
    for (int p : c.prms)
      if (c.fl.leq(f, p)) cut = cut & c.fl.members(p);
    if (!(cut == c.fl.members(f))) return "F=" + c.fn(f);
  }
  ElementSet cut_spec = c.l.all(), cut_minp = c.l.all();
  for (int p : c.prms) cut_spec = cut_spec & c.fl.members(p);
  for (int p : c.minps) cut_minp = cut_minp & c.fl.members(p);
  ElementSet one = ElementSet::single(c.l.top());
  if (!(cut_spec == one)) return "∩Spec(L) ≠ {1}";
  if (!(cut_minp == one)) return "∩MinP(L) ≠ {1}";
  return {};
}

Witness chk_eiclu(const Ctx& c) {
  const int k = c.fl.count();
  for (int h = 0; h < k; ++h)
    for (int g = 0; g < k; ++g) {
      if (!c.fl.leq(h, g)) continue;
      for (int f = 0; f < k; ++f) {
        if (!c.fl.leq(g, f)) continue;
        bool hf = c.fl.essential_in(h, f);
        bool hg = c.fl.essential_in(h, g);
        bool gf = c.fl.essential_in(g, f);
        if (hf && !(hg && gf)) return "H=" + c.fn(h) + " G=" + c.fn(g) + " F=" + c.fn(f);
        if (hg && gf && !hf) return "H=" + c.fn(h) + " G=" + c.fn(g) + " F=" + c.fn(f);
      }
    }
  return {};
}

// ---------------------------------------------------------------------------
// spectrum

Witness chk_smss(const Ctx& c) {
  const Lattice& l = c.l;
  const int k = c.fl.count();
  for (int f = 0; f < k; ++f) {
    bool vempty_spec = c.spec.closed_set(c.fl.members(f)) == 0;
    bool vempty_max = c.max.closed_set(c.fl.members(f)) == 0;
    if ((f == c.full) != vempty_spec || (f == c.full) != vempty_max)
      return "F=" + c.fn(f);
    for (int g = 0; g < k; ++g) {
      PointSet vf = c.spec.closed_set(c.fl.members(f));
      PointSet vg = c.spec.closed_set(c.fl.members(g));
      PointSet uf = c.spec.open_set(c.fl.members(f));
      PointSet ug = c.spec.open_set(c.fl.members(g));
      bool ginf = c.fl.leq(g, f);
      if (((vf & ~vg) == 0) != ginf) return "F=" + c.fn(f) + " G=" + c.fn(g);
      if (((ug & ~uf) == 0) != ginf) return "F=" + c.fn(f) + " G=" + c.fn(g);
      if ((vf == vg) != (f == g)) return "F=" + c.fn(f) + " G=" + c.fn(g);
    }
  }
  for (int x = 0; x < l.size(); ++x)
    for (int y = 0; y < l.size(); ++y) {
      ElementSet sx = ElementSet::single(x), sy = ElementSet::single(y);
      ElementSet sxy = ElementSet::single(l.join(x, y));
      if ((c.spec.open_set(sx) & c.spec.open_set(sy)) != c.spec.open_set(sxy))
        return "x=" + c.en(x) + " y=" + c.en(y);
      if ((c.max.open_set(sx) & c.max.open_set(sy)) != c.max.open_set(sxy))
        return "x=" + c.en(x) + " y=" + c.en(y);
      if ((c.spec.closed_set(sx) | c.spec.closed_set(sy)) != c.spec.closed_set(sxy))
        return "x=" + c.en(x) + " y=" + c.en(y);
      if ((c.max.closed_set(sx) | c.max.closed_set(sy)) != c.max.closed_set(sxy))
        return "x=" + c.en(x) + " y=" + c.en(y);
    }
  // U(∪Xₖ) = ∪U(Xₖ) over pairs of subsets.
  Witness w;
  each_subset(c, [&](ElementSet a) {
    if (w) return;
    each_subset(c, [&](ElementSet b) {
      if (w) return;
      if (c.spec.open_set(a | b) != (c.spec.open_set(a) | c.spec.open_set(b)))
        w = "X1=" + render_element_set(l, a) + " X2=" + render_element_set(l, b);
      if (c.max.open_set(a | b) != (c.max.open_set(a) | c.max.open_set(b)))
        w = "X1=" + render_element_set(l, a) + " X2=" + render_element_set(l, b);
    });
  });
  return w;
}

Witness chk_smss_rad(const Ctx& c) {
  for (int f = 0; f < c.fl.count(); ++f)
    for (int g = 0; g < c.fl.count(); ++g) {
      bool same = c.max.closed_set(c.fl.members(f)) == c.max.closed_set(c.fl.members(g));
      if (same != (f == g)) return "F=" + c.fn(f) + " G=" + c.fn(g);
    }
  return {};
}

Witness chk_111(const Ctx& c) {
  for (int f = 0; f < c.fl.count(); ++f) {
    bool ess = c.fl.is_essential_in_L(f);
    bool nd = c.max.is_nowhere_dense(c.max.closed_set(c.fl.members(f)));
    if (ess != nd) return "F=" + c.fn(f);
  }
  return {};
}

std::vector<int> non_essential_primes(const Ctx& c) {
  std::vector<int> out;
  for (int p : c.prms)
    if (!c.fl.is_essential_in_L(p)) out.push_back(p);
  return out;
}

Witness chk_1155(const Ctx& c) {
  std::vector<int> fam = non_essential_primes(c);
  PointSet pts = 0;
  for (std::size_t i = 0; i < c.prms.size(); ++i)
    for (int p : fam)
      if (c.prms[i] == p) pts |= 1ull << i;
  bool dense = c.spec.is_dense(pts);
  bool rhs = true;
  for (int f = 0; f < c.fl.count(); ++f) {
    bool notinside = true;
    for (int p : fam)
      if (c.fl.leq(f, p)) notinside = false;
    if (c.fl.is_essential_in_L(f) != notinside) rhs = false;
  }
  if (dense != rhs) return std::string("dense=") + (dense ? "yes" : "no");
  return {};
}

Witness chk_hyp(const Ctx& c) {
  bool h = c.hyper_elems();
  bool sm = c.prms == c.maxs;
  bool sp = c.prms == c.minps;
  if (h != sm || h != sp)
    return std::string("archimedean=") + (h ? "yes" : "no") + " Spec=Max=" +
           (sm ? "yes" : "no") + " Spec=MinP=" + (sp ? "yes" : "no");
  return {};
}

Witness chk_hyp1(const Ctx& c) {
  if (!c.rad_trivial) return "Rad(L)=" + c.fn(c.rad);
  return {};
}

// ---------------------------------------------------------------------------
// independence, socle, semi-simplicity

Witness chk_indep1(const Ctx& c) {
  const Lattice& l = c.l;
  for (int fi = 0; fi < c.fl.count(); ++fi)
    for (int gi = 0; gi < c.fl.count(); ++gi) {
      bool c1 = c.fl.meet(fi, gi) == c.triv;
      bool c2 = true, c3 = true;
      for (int f : c.fl.members(fi))
        for (int g : c.fl.members(gi))
          for (int f2 : c.fl.members(fi))
            for (int g2 : c.fl.members(gi)) {
              if (l.leq(l.odot(f, g), l.odot(f2, g2)) && !(l.leq(f, f2) && l.leq(g, g2)))
                c2 = false;
              if (l.odot(f, g) == l.odot(f2, g2) && !(f == f2 && g == g2)) c3 = false;
            }
      if (c1 != c2 || c1 != c3) return "F=" + c.fn(fi) + " G=" + c.fn(gi);
    }
  return {};
}

Witness chk_indep2(const Ctx& c) {
  const int k = c.fl.count();
  for (int f = 0; f < k; ++f)
    for (int f2 = 0; f2 < k; ++f2) {
      if (!c.fl.leq(f, f2)) continue;
      for (int h = 0; h < k; ++h) {
        if (c.fl.meet(f, h) != c.triv) continue;
        for (int h2 = 0; h2 < k; ++h2) {
          if (!c.fl.leq(h, h2) || c.fl.meet(f2, h2) != c.triv) continue;
          if (c.fl.join(f, h) == c.fl.join(f2, h2) && (f != f2 || h != h2))
            return "F=" + c.fn(f) + " F'=" + c.fn(f2) + " H=" + c.fn(h) +
                   " H'=" + c.fn(h2);
        }
      }
    }
  return {};
}

Witness chk_2_7(const Ctx& c) {
  const int k = c.fl.count();
  // Families of size two and three (with repetition): the definition must
  // agree with the disjoint-block and factorization forms, and independence
  // must pass to subfamilies.
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b)
      for (int d = b; d < k; ++d) {
        std::vector<int> fam{a, b, d};
        bool ind = is_independent(c.fl, fam);  // cross-checks internally
        if (ind) {
          if (!is_independent(c.fl, {a, b}) || !is_independent(c.fl, {a, d}) ||
              !is_independent(c.fl, {b, d}))
            return "family {" + c.fn(a) + ", " + c.fn(b) + ", " + c.fn(d) + "}";
        }
      }
  return {};
}

Witness chk_11(const Ctx& c) {
  for (int f = 0; f < c.fl.count(); ++f)
    for (int g = 0; g < c.fl.count(); ++g) {
      bool sum = c.fl.meet(f, g) == c.triv && c.fl.join(f, g) == c.full;
      bool boolean_form = false;
      for (int e : c.bc.members)
        if (c.pf(e) == f && c.pf(star(c.l, e)) == g) boolean_form = true;
      if (sum != boolean_form) return "F=" + c.fn(f) + " G=" + c.fn(g);
    }
  for (int e : c.bc.members)
    for (int f : c.bc.members) {
      bool sum = c.fl.meet(c.pf(e), c.pf(f)) == c.triv &&
                 c.fl.join(c.pf(e), c.pf(f)) == c.full;
      if (sum && f != star(c.l, e)) return "e=" + c.en(e) + " f=" + c.en(f);
    }
  return {};
}

Witness chk_1222(const Ctx& c) {
  for (int f = 0; f < c.fl.count(); ++f)
    for (int g = 0; g < c.fl.count(); ++g) {
      if (!(c.fl.meet(f, g) == c.triv && c.fl.join(f, g) == c.full)) continue;
      if (c.fl.is_maximal(f) != c.fl.is_simple(g)) return "F=" + c.fn(f) + " G=" + c.fn(g);
    }
  return {};
}

Witness chk_2_10_1(const Ctx& c) {
  for (int t : c.atoms) {
    bool found = false;
    for (int p : c.prms)
      if (c.fl.meet(t, p) == c.triv) found = true;
    if (!found) return "T=" + c.fn(t);
  }
  return {};
}

Witness chk_2_10_2(const Ctx& c) {
  for (int t : c.atoms)
    if (!is_direct_summand_of_l(c.fl, t)) return "T=" + c.fn(t);
  return {};
}

bool sisc_hypothesis(const Ctx& c, int f) {
  for (int h = 0; h < c.fl.count(); ++h) {
    if (!c.fl.leq(h, f)) continue;
    bool split = false;
    for (int g = 0; g < c.fl.count(); ++g)
      if (c.fl.meet(h, g) == c.triv && c.fl.join(h, g) == f) split = true;
    if (!split) return false;
  }
  return true;
}

Witness chk_sisc(const Ctx& c) {
  for (int f = 0; f < c.fl.count(); ++f) {
    if (!sisc_hypothesis(c, f)) continue;
    for (int h = 0; h < c.fl.count(); ++h) {
      if (h == c.triv || !c.fl.leq(h, f)) continue;
      bool found = false;
      for (int t : c.atoms)
        if (c.fl.leq(t, h)) found = true;
      if (!found) return "F=" + c.fn(f) + " H=" + c.fn(h);
    }
  }
  return {};
}

Witness chk_3_3(const Ctx& c) {
  for (int f = 0; f < c.fl.count(); ++f) {
    if (f == c.triv) continue;
    int soc = c.triv;
    for (int a : c.atoms)
      if (c.fl.leq(a, f)) soc = c.fl.join(soc, a);
    ElementSet cut = c.l.all();
    for (int h : c.fl.essential_family(f)) cut = cut & c.fl.members(h);
    if (!(cut == c.fl.members(soc))) return "F=" + c.fn(f);
  }
  return {};
}

Witness chk_3_4(const Ctx& c) {
  int socl = socle(c.fl, c.full);
  for (int f = 0; f < c.fl.count(); ++f) {
    int s = socle(c.fl, f);
    if (s != c.fl.meet(f, socl)) return "F=" + c.fn(f);
    if (socle(c.fl, s) != s) return "F=" + c.fn(f);
  }
  return {};
}

Witness chk_3_6(const Ctx& c) {
  // In the finite setting every U_max(a) is finite, so the statement reads
  // Soc(L) = L.
  if (socle(c.fl, c.full) != c.full) return "Soc(L)=" + c.fn(socle(c.fl, c.full));
  return {};
}

struct Thm37 {
  bool c1, c2, c3, c4;
};

Thm37 thm_3_7_conditions(const Ctx& c) {
  Thm37 t{};
  t.c1 = c.fl.essential_in(socle(c.fl, c.full), c.full);
  t.c2 = true;
  t.c3 = true;
  for (int f = 0; f < c.fl.count(); ++f) {
    if (f == c.triv) continue;
    if (socle(c.fl, f) == c.triv) t.c2 = false;
    bool has = false;
    for (int a : c.atoms)
      if (c.fl.leq(a, f)) has = true;
    if (!has) t.c3 = false;
  }
  t.c4 = true;
  std::vector<int> el;
  for (int f = 0; f < c.fl.count(); ++f)
    if (c.fl.is_essential_in_L(f)) el.push_back(f);
  if (el.size() <= 16) {
    for (unsigned m = 1; m < (1u << el.size()); ++m) {
      ElementSet cut = c.l.all();
      for (std::size_t i = 0; i < el.size(); ++i)
        if (m >> i & 1) cut = cut & c.fl.members(el[i]);
      int idx = c.fl.index_of(cut);
      if (idx < 0 || !c.fl.is_essential_in_L(idx)) t.c4 = false;
    }
  }
  return t;
}

Witness chk_3_7(const Ctx& c) {
  Thm37 t = thm_3_7_conditions(c);
  if (t.c1 != t.c2 || t.c2 != t.c3 || t.c3 != t.c4) {
    std::ostringstream w;
    w << "c1=" << t.c1 << " c2=" << t.c2 << " c3=" << t.c3 << " c4=" << t.c4;
    return w.str();
  }
  return {};
}

Witness chk_3_8(const Ctx& c) {
  // Finite lattices are Artinian, so every non-trivial filter must contain a
  // simple filter.
  if (!thm_3_7_conditions(c).c3) return std::string("some non-trivial filter has no atom below");
  return {};
}

Witness chk_miso(const Ctx& c) {
  PointSet iso = c.max.isolated_points();
  for (std::size_t p = 0; p < c.maxs.size(); ++p) {
    bool i1 = (iso >> p) & 1;
    bool i2 = false;
    for (int e : c.bc.members)
      if (c.pf(star(c.l, e)) == c.maxs[p]) i2 = true;
    bool i3 = is_direct_summand_of_l(c.fl, c.maxs[p]);
    if (i1 != i2 || i2 != i3) return "M=" + c.fn(c.maxs[p]);
  }
  return {};
}

Witness chk_3_9(const Ctx& c) {
  bool dense = c.max.is_dense(c.max.isolated_points());
  bool t37 = thm_3_7_conditions(c).c1;
  if (dense != t37)
    return std::string("M0 dense=") + (dense ? "yes" : "no") + " Soc essential=" +
           (t37 ? "yes" : "no");
  return {};
}

Witness chk_3_10(const Ctx& c) {
  int soc = socle(c.fl, c.full);
  bool principal = !c.fl.principal_generators(soc).empty();
  bool m0finite = true;  // M₀(L) ⊆ Max(L) is finite here
  if (principal != m0finite) return "Soc(L)=" + c.fn(soc);
  return {};
}

Witness chk_4_2(const Ctx& c) {
  for (int f = 0; f < c.fl.count(); ++f) {
    if (f == c.triv) continue;
    try {
      is_semisimple_filter(c.fl, f);
    } catch (const Error& e) {
      return "F=" + c.fn(f) + ": " + e.what();
    }
  }
  return {};
}

Witness chk_4_3(const Ctx& c) {
  for (int f = 0; f < c.fl.count(); ++f) {
    if (f == c.triv || !is_semisimple_filter(c.fl, f).value) continue;
    for (int g = 0; g < c.fl.count(); ++g)
      if (g != c.triv && c.fl.leq(g, f) && !is_semisimple_filter(c.fl, g).value)
        return "F=" + c.fn(f) + " G=" + c.fn(g);
  }
  return {};
}

Witness chk_4_4(const Ctx& c) {
  try {
    is_semisimple_lattice(c.fl);
  } catch (const Error& e) {
    return std::string(e.what());
  }
  return {};
}

Witness chk_4_5(const Ctx& c) {
  bool ss = is_semisimple_lattice(c.fl).value;
  bool hyper = c.hyper_elems();
  if (ss != hyper || ss != c.rad_trivial) {
    std::ostringstream w;
    w << "semisimple=" << ss << " hyperarchimedean=" << hyper
      << " Rad trivial=" << c.rad_trivial;
    return w.str();
  }
  return {};
}

std::vector<Claim> catalog() {
  auto gated_1155 = [](const Ctx& c) { return !non_essential_primes(c).empty(); };
  auto gated_hyper = [](const Ctx& c) { return c.hyper_elems(); };
  return {
      {"adjunction", "", always, chk_adjunction},
      {"prop_2_222_01", "", always, chk_law_01},
      {"prop_2_222_02", "", always, chk_law_02},
      {"prop_2_222_03", "", always, chk_law_03},
      {"prop_2_222_04", "", always, chk_law_04},
      {"prop_2_222_05", "", always, chk_law_05},
      {"prop_2_222_06", "", always, chk_law_06},
      {"prop_2_222_07", "", always, chk_law_07},
      {"prop_2_222_08", "", always, chk_law_08},
      {"prop_2_222_09", "", always, chk_law_09},
      {"prop_2_222_10", "", always, chk_law_10},
      {"prop_2_222_11", "", always, chk_law_11},
      {"boolean_center", "", always, chk_boolean_center},
      {"filter_iff_deductive", "", always, chk_filter_iff_deductive},
      {"prop_2_555_4", "", always, chk_2_555_4},
      {"prop_2_555_6", "", always, chk_2_555_6},
      {"filt_distributive", "", always, chk_distributive},
      {"lemma_modul", "", always, chk_modul},
      {"lemma_efe", "", always, chk_efe},
      {"remark_key", "", always, chk_remark_key},
      {"prop_smb", "", always, chk_smb},
      {"prop_133", "", always, chk_133},
      {"cor_sr1", "Rad(L) = {1}", rad_trivial, chk_sr1},
      {"cor_scro1", "", always, chk_scro1},
      {"prop_esse", "", always, chk_esse},
      {"prop_1166", "", always, chk_1166},
      {"cor_pes", "", always, chk_pes},
      {"thm_nm", "", always, chk_nm},
      {"prop_2_700", "", always, chk_2_700},
      {"remark_eiclu", "", always, chk_eiclu},
      {"prop_smss", "", always, chk_smss},
      {"prop_smss_rad", "Rad(L) = {1}", rad_trivial, chk_smss_rad},
      {"thm_111", "Rad(L) = {1}", rad_trivial, chk_111},
      {"thm_1155", "some prime is not essential in L", gated_1155, chk_1155},
      {"thm_hyp", "", always, chk_hyp},
      {"thm_hyp1", "L is hyperarchimedean", gated_hyper, chk_hyp1},
      {"prop_indep1", "", always, chk_indep1},
      {"cor_indep2", "", always, chk_indep2},
      {"prop_2_7", "", always, chk_2_7},
      {"prop_11", "", always, chk_11},
      {"prop_1222", "", always, chk_1222},
      {"prop_2_10_1", "", always, chk_2_10_1},
      {"prop_2_10_2", "Rad(L) = {1}", rad_trivial, chk_2_10_2},
      {"lemma_sisc", "", always, chk_sisc},
      {"thm_3_3", "", always, chk_3_3},
      {"thm_3_4", "", always, chk_3_4},
      {"thm_3_6", "Rad(L) = {1}", rad_trivial, chk_3_6},
      {"thm_3_7", "", always, chk_3_7},
      {"cor_3_8", "", always, chk_3_8},
      {"thm_miso", "Rad(L) = {1}", rad_trivial, chk_miso},
      {"thm_3_9", "Rad(L) = {1}", rad_trivial, chk_3_9},
      {"thm_3_10", "Rad(L) = {1}", rad_trivial, chk_3_10},
      {"thm_4_2", "", always, chk_4_2},
      {"cor_4_3", "", always, chk_4_3},
      {"thm_4_4", "", always, chk_4_4},
      {"cor_4_5", "", always, chk_4_5},
  };
}

}  // namespace

const std::vector<std::string>& audit_claim_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const Claim& c : catalog()) out.push_back(c.id);
    return out;
  }();
  return ids;
}

AuditReport audit(const Lattice& l) {
  FilterLattice fl = all_filters(l);
  Ctx ctx(l, fl);
  AuditReport r;
  r.lattice_id = l.id();
  for (const Claim& cl : catalog()) {
    ClaimResult res;
    res.id = cl.id;
    if (!cl.applicable(ctx)) {
      res.hypothesis_met = false;
      res.verdict = Verdict::NotApplicable;
      res.detail = std::string("needs ") + cl.gate;
      ++r.not_applicable;
    } else {
      res.hypothesis_met = true;
      Witness w;
      try {
        w = cl.run(ctx);
      } catch (const Error& e) {
        w = std::string(e.what());
      }
      if (w) {
        res.verdict = Verdict::Fails;
        res.detail = *w;
        ++r.fails;
      } else {
        res.verdict = Verdict::Holds;
        ++r.holds;
      }
    }
    r.entries.push_back(std::move(res));
  }
  return r;
}

std::string render_audit_text(const AuditReport& r) {
  std::ostringstream out;
  out << "audit " << r.lattice_id << ": " << r.entries.size() << " claims, " << r.holds
      << " hold, " << r.fails << " fail, " << r.not_applicable << " not applicable\n";
  for (const ClaimResult& e : r.entries) {
    out << "  " << e.id;
    for (std::size_t i = e.id.size(); i < 22; ++i) out << ' ';
    switch (e.verdict) {
      case Verdict::Holds: out << "holds"; break;
      case Verdict::Fails: out << "FAILS  " << e.detail; break;
      case Verdict::NotApplicable: out << "not applicable (" << e.detail << ")"; break;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace rlat
