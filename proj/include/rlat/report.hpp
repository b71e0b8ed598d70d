#ifndef RLAT_REPORT_HPP
#define RLAT_REPORT_HPP

#include <string>
#include <vector>

#include "rlat/audit.hpp"
#include "rlat/filters.hpp"
#include "rlat/structure.hpp"

namespace rlat {

/// Everything `analyze` reports about one lattice. Field values reference
/// elements by source name and filters by index into `filters`.
struct AnalysisReport {
  std::string lattice_id;
  int order = 0;
  std::vector<std::string> elements;
  std::string bottom, top;
  std::vector<std::string> boolean_center;
  struct FilterInfo {
    std::vector<std::string> members;
    std::vector<std::string> generators;
    bool proper, prime, maximal, minimal_prime, simple, essential_in_l;
  };
  std::vector<FilterInfo> filters;
  std::vector<int> spec, max, minp, essential_in_l, simples;
  int radical = -1, socle_of_l = -1;
  std::vector<std::pair<int, int>> direct_sums_of_l;
  bool local = false, semilocal = true, hyperarchimedean = false, semisimple = false;
  SemisimpleLatticeVerdict semisimple_conditions{};
};

AnalysisReport analyze(const Lattice& l);

std::string render_analysis_text(const AnalysisReport& r);
std::string render_analysis_structured(const AnalysisReport& r);

std::string render_audit_structured(const AuditReport& r);

/// DOT digraph of the Hasse diagram of Filt(L) (cover relation).
std::string filters_hasse_dot(const FilterLattice& fl);

}  // namespace rlat

#endif
