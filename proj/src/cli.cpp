#include "rlat/cli.hpp"

#include <cstdlib>
#include <ostream>

#include "rlat/audit.hpp"
#include "rlat/errors.hpp"
#include "rlat/modelgen.hpp"
#include "rlat/report.hpp"
#include "rlat/spectrum.hpp"

namespace rlat::cli {

namespace {

int report_error(const Error& e, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  return exit_code_for(e.kind());
}

}  // namespace

std::size_t default_cap() {
  if (const char* env = std::getenv("RLAT_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1u << 20;
}

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
  try {
    Lattice l = load_lattice_file(path);
    out << "ok: " << l.id() << " is a residuated lattice with " << l.size()
        << " elements\n";
    return 0;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

int cmd_analyze(const std::string& path, const std::string& format, std::ostream& out,
                std::ostream& err) {
  try {
    Lattice l = load_lattice_file(path);
    AnalysisReport r = analyze(l);
    out << (format == "structured" ? render_analysis_structured(r)
                                   : render_analysis_text(r));
    return 0;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

int cmd_audit_file(const std::string& path, const std::string& format, std::ostream& out,
                   std::ostream& err) {
  try {
    Lattice l = load_lattice_file(path);
    AuditReport r = audit(l);
    out <<(format == "structured" ? render_audit_structured(r) : render_audit_text(r));
    return r.fails == 0 ? 0 : 1;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

int cmd_audit_enumerate(int max_order, std::size_t cap, const std::string& format,
                        std::ostream& out, std::ostream& err) {
  try {
    long long total = 0, failed = 0, lattices = 0;
    bool truncated = false;
    for (int n = 2; n <= max_order; ++n) {
      EnumerationResult en = enumerate_order(n, cap);
      truncated |= en.truncated;
      for (const Lattice& l : en.classes) {
        AuditReport r = audit(l);
        ++lattices;
        total += r.holds + r.fails;
        failed += r.fails;
        if (format == "structured") {
          out << render_audit_structured(r);
        } else {
          out << "audit " << r.lattice_id << ": " << r.holds << " hold, " << r.fails
              << " fail, " << r.not_applicable << " not applicable\n";
          for (const ClaimResult& e : r.entries)
            if (e.verdict == Verdict::Fails)
              out << "  FAILS " << e.id << ": " << e.detail << "\n";
        }
      }
    }
    out << "checked " << total << " claims over " << lattices << " lattices, " << failed
        << " failed" << (truncated ? " (truncated by cap)" : "") << "\n";
    if (truncated) return 4;
    return failed == 0 ? 0 : 1;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

int cmd_search(const std::string& expr, int max_order, std::size_t cap, std::ostream& out,
               std::ostream& err) {
  try {
    Query q = parse_query(expr);
    SearchResult res = search(q, max_order, cap);
    for (const SearchHit& hit : res.hits) {
      out << hit.lattice.id() << " (" << hit.lattice.size() << " elements)";
      if (hit.witness)
        out << "  witness " << render_element_set(hit.lattice, *hit.witness);
      out << "\n";
    }
    out << res.hits.size() << " result" << (res.hits.size() == 1 ? "" : "s")
        << (res.truncated ? " (truncated by cap)" : "") << "\n";
    return res.hits.empty() ? 1 : 0;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

int cmd_export(const std::string& path, const std::string& what, const std::string& format,
               std::ostream& out, std::ostream& err) {
  try {
    if (format != "dot") throw Error(ErrorKind::ParseError, "unsupported format " + format);
    Lattice l = load_lattice_file(path);
    FilterLattice fl = all_filters(l, default_cap());
    if (what == "filters") {
      out << filters_hasse_dot(fl);
    } else if (what == "spec") {
      out << SpectrumSpace(fl, SpaceKind::Spec).specialization_dot();
    } else {
      throw Error(ErrorKind::ParseError, "unsupported export target " + what);
    }
    return 0;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

}  // namespace rlat::cli
