#include <doctest.h>

#include <algorithm>

#include "rlat/audit.hpp"
#include "rlat/report.hpp"
#include "support.hpp"

using namespace rlat;
using rlat::test::load_fixture;

namespace {

const ClaimResult& entry(const AuditReport& r, const std::string& id) {
  for (const ClaimResult& e : r.entries)
    if (e.id == id) return e;
  REQUIRE(false);
  static ClaimResult dummy;
  return dummy;
}

}  // namespace

TEST_CASE("every catalog claim appears exactly once") {
  AuditReport r = audit(load_fixture("ex44.rlat"));
  const auto& ids = audit_claim_ids();
  REQUIRE(r.entries.size() == ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) CHECK(r.entries[i].id == ids[i]);
  auto sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("audit of ex44: no failures, radical-gated claims not applicable") {
  AuditReport r = audit(load_fixture("ex44.rlat"));
  CHECK(r.fails == 0);
  CHECK(r.not_applicable > 0);
  CHECK(entry(r, "thm_111").verdict == Verdict::NotApplicable);
  CHECK_FALSE(entry(r, "thm_111").hypothesis_met);
  CHECK(entry(r, "cor_sr1").verdict == Verdict::NotApplicable);
  CHECK(entry(r, "thm_miso").verdict == Verdict::NotApplicable);
  CHECK(entry(r, "prop_133").verdict == Verdict::Holds);
  CHECK(entry(r, "thm_1155").verdict == Verdict::Holds);
}

TEST_CASE("audit of the semisimple fixtures: everything applicable holds") {
  for (const char* f : {"ex55.rlat", "idr.rlat", "bool2.rlat", "bool4.rlat", "bool8.rlat"}) {
    AuditReport r = audit(load_fixture(f));
    CHECK(r.fails == 0);
    CHECK(r.not_applicable == 0);
    CHECK(entry(r, "thm_111").verdict == Verdict::Holds);
    CHECK(entry(r, "thm_miso").verdict == Verdict::Holds);
    CHECK(entry(r, "thm_3_9").verdict == Verdict::Holds);
  }
}

TEST_CASE("audit rendering") {
  AuditReport r = audit(load_fixture("ex44.rlat"));
  std::string text = render_audit_text(r);
  CHECK(text.find("0 fail") != std::string::npos);
  CHECK(text.find("thm_111") != std::string::npos);
  CHECK(text.find("not applicable") != std::string::npos);
  std::string json = render_audit_structured(r);
  CHECK(json.find("\"id\": \"thm_111\"") != std::string::npos);
  CHECK(json.find("\"status\": \"not-applicable\"") != std::string::npos);
  CHECK(json.find("\"fails\": 0") != std::string::npos);
}
