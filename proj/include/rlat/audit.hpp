#ifndef RLAT_AUDIT_HPP
#define RLAT_AUDIT_HPP

#include <string>
#include <vector>

#include "rlat/lattice.hpp"

namespace rlat {

enum class Verdict { Holds, Fails, NotApplicable };

struct ClaimResult {
  std::string id;
  bool hypothesis_met = true;
  Verdict verdict = Verdict::Holds;
  std::string detail;  // failure witness, or the unmet hypothesis
};

struct AuditReport {
  std::string lattice_id;
  std::vector<ClaimResult> entries;  // one per catalog claim, catalog order
  int holds = 0, fails = 0, not_applicable = 0;
};

/// Ids of every claim the audit evaluates, in report order.
const std::vector<std::string>& audit_claim_ids();

/// Evaluates the full claim catalog against one lattice. Claims whose
/// hypotheses are unmet are reported not-applicable, never asserted.
AuditReport audit(const Lattice& l);

std::string render_audit_text(const AuditReport& r);

}  // namespace rlat

#endif
