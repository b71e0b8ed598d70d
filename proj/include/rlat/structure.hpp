#ifndef RLAT_STRUCTURE_HPP
#define RLAT_STRUCTURE_HPP

#include <array>
#include <string>
#include <vector>

#include "rlat/filters.hpp"

namespace rlat {

/// Independence of a family: each member meets the join of the others
/// trivially. Cross-checked against the disjoint-block form and (when the
/// tuple space is small) the ⊙-factorization form.
bool is_independent(const FilterLattice& fl, const std::vector<int>& family);

/// One two-part direct-sum decomposition target = parts[0] ⊕ parts[1].
struct DirectSumWitness {
  std::vector<int> parts;
  int target;
};

/// All ordered two-part decompositions of F. For F = L the result is verified
/// to be exactly {([e), [e*)) : e ∈ B(L)}.
std::vector<DirectSumWitness> decompose_direct_sum(const FilterLattice& fl, int f);

bool is_direct_summand_of_l(const FilterLattice& fl, int f);

/// Soc(F): join of the simple subfilters of F ({1} when there are none);
/// recomputed as ∩E_F for F ≠ {1} and compared.
int socle(const FilterLattice& fl, int f);

/// Whether some power of x lands in B(L).
bool is_archimedean(const Lattice& l, int x);

/// All elements archimedean; cross-checked against Spec(L) = Max(L) and
/// Spec(L) = MinP(L).
bool is_hyperarchimedean(const FilterLattice& fl);

bool is_local(const FilterLattice& fl);
bool is_semilocal(const FilterLattice& fl);  // always true for finite L

/// The five equivalent semi-simplicity conditions for a filter F ≠ {1}:
/// join of simples, ⊕ of simples, every subfilter splits off, the H∗∩F
/// splitting, and E_F = {F}. All five are computed and must agree.
struct SemisimpleFilterVerdict {
  std::array<bool, 5> conditions;
  bool value;
};
SemisimpleFilterVerdict is_semisimple_filter(const FilterLattice& fl, int f);

/// The twelve equivalent conditions for L itself (the five above for F = L
/// plus Boolean generation, finite ⊕, hyperarchimedean ∧ semi-local,
/// Rad = {1} ∧ semi-local, unique/plain maximal-intersection forms, and
/// all non-trivial filters semi-simple). All twelve must agree.
struct SemisimpleLatticeVerdict {
  std::array<bool, 12> conditions;
  bool value;
};
SemisimpleLatticeVerdict is_semisimple_lattice(const FilterLattice& fl);

}  // namespace rlat

#endif
