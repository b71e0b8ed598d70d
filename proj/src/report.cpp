#include "rlat/report.hpp"

#include <sstream>

#include <json.hpp>

namespace rlat {

namespace {

std::vector<std::string> names_of(const Lattice& l, ElementSet s) {
  std::vector<std::string> out;
  for (int x : s) out.push_back(l.name(x));
  return out;
}

std::string set_text(const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ", ";
    out += names[i];
  }
  return out + "}";
}

}  // namespace

AnalysisReport analyze(const Lattice& l) {
  FilterLattice fl = all_filters(l);
  AnalysisReport r;
  r.lattice_id = l.id();
  r.order = l.size();
  r.elements = l.names();
  r.bottom = l.name(l.bottom());
  r.top = l.name(l.top());
  r.boolean_center = names_of(l, boolean_center(l).members);
  for (int i = 0; i < fl.count(); ++i) {
    AnalysisReport::FilterInfo fi;
    fi.members = names_of(l, fl.members(i));
    fi.generators = names_of(l, fl.principal_generators(i));
    fi.proper = fl.proper(i);
    fi.prime = fl.is_prime(i);
    fi.maximal = fl.is_maximal(i);
    fi.minimal_prime = fl.is_minimal_prime(i);
    fi.simple = fl.is_simple(i);
    fi.essential_in_l = fl.is_essential_in_L(i);
    r.filters.push_back(std::move(fi));
  }
  r.spec = fl.primes();
  r.max = fl.maximals();
  r.minp = fl.minimal_primes();
  r.simples = fl.simples();
  r.essential_in_l = fl.essential_family(fl.full_index());
  r.radical = fl.radical();
  r.socle_of_l = socle(fl, fl.full_index());
  for (const DirectSumWitness& w : decompose_direct_sum(fl, fl.full_index()))
    r.direct_sums_of_l.emplace_back(w.parts[0], w.parts[1]);
  r.local = is_local(fl);
  r.semilocal = is_semilocal(fl);
  r.hyperarchimedean = is_hyperarchimedean(fl);
  r.semisimple_conditions = is_semisimple_lattice(fl);
  r.semisimple = r.semisimple_conditions.value;
  return r;
}

std::string render_analysis_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "lattice " << r.lattice_id << ": " << r.order << " elements\n";
  out << "elements:";
  for (const std::string& e : r.elements) out << ' ' << e;
  out << "  (bottom " << r.bottom << ", top " << r.top << ")\n";
  out << "B(L): " << set_text(r.boolean_center) << "\n";
  out << "Filt(L): " << r.filters.size() << " filters\n";
  for (std::size_t i = 0; i < r.filters.size(); ++i) {
    const auto& f = r.filters[i];
    out << "  [" << i << "] " << set_text(f.members);
    if (!f.generators.empty()) out << "  generators " << set_text(f.generators);
    if (!f.proper) out << "  improper";
    if (f.prime) out << "  prime";
    if (f.maximal) out << "  maximal";
    if (f.minimal_prime) out << "  minimal-prime";
    if (f.simple) out << "  simple";
    if (f.essential_in_l) out << "  essential";
    out << '\n';
  }
  auto list = [&](const char* label, const std::vector<int>& idx) {
    out << label << ": {";
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (i) out << ", ";
      out << set_text(r.filters[idx[i]].members);
    }
    out << "}\n";
  };
  list("Spec(L)", r.spec);
  list("Max(L)", r.max);
  list("MinP(L)", r.minp);
  list("SimpF(L)", r.simples);
  list("E_L", r.essential_in_l);
  out << "Rad(L): " << set_text(r.filters[r.radical].members) << "\n";
  out << "Soc(L): " << set_text(r.filters[r.socle_of_l].members) << "\n";
  out << "direct sums of L:";
  if (r.direct_sums_of_l.empty()) out << " none";
  for (const auto& [a, b] : r.direct_sums_of_l)
    out << "  " << set_text(r.filters[a].members) << " ⊕ " << set_text(r.filters[b].members);
  out << '\n';
  out << "local: " << (r.local ? "yes" : "no") << "\n";
  out << "semi-local: " << (r.semilocal ? "yes (finite)" : "no") << "\n";
  out << "hyperarchimedean: " << (r.hyperarchimedean ? "yes" : "no") << "\n";
  out << "semi-simple: " << (r.semisimple ? "yes" : "no") << "\n";
  return out.str();
}

std::string render_analysis_structured(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["lattice"] = r.lattice_id;
  j["order"] = r.order;
  j["elements"] = r.elements;
  j["bottom"] = r.bottom;
  j["top"] = r.top;
  j["boolean_center"] = r.boolean_center;
  j["filters"] = nlohmann::ordered_json::array();
  for (const auto& f : r.filters) {
    nlohmann::ordered_json jf;
    jf["members"] = f.members;
    jf["generators"] = f.generators;
    jf["proper"] = f.proper;
    jf["prime"] = f.prime;
    jf["maximal"] = f.maximal;
    jf["minimal_prime"] = f.minimal_prime;
    jf["simple"] = f.simple;
    jf["essential_in_L"] = f.essential_in_l;
    j["filters"].push_back(std::move(jf));
  }
  j["spec"] = r.spec;
  j["max"] = r.max;
  j["minp"] = r.minp;
  j["simple_filters"] = r.simples;
  j["essential_in_L"] = r.essential_in_l;
  j["radical"] = r.radical;
  j["socle"] = r.socle_of_l;
  j["direct_sums_of_L"] = nlohmann::ordered_json::array();
  for (const auto& [a, b] : r.direct_sums_of_l)
    j["direct_sums_of_L"].push_back(std::vector<int>{a, b});
  j["verdicts"] = {{"local", r.local},
                   {"semi_local", r.semilocal},
                   {"hyperarchimedean", r.hyperarchimedean},
                   {"semisimple", r.semisimple}};
  j["semisimple_conditions"] = r.semisimple_conditions.conditions;
  return j.dump(2) + "\n";
}

std::string render_audit_structured(const AuditReport& r) {
  nlohmann::ordered_json j;
  j["lattice"] = r.lattice_id;
  j["claims"] = nlohmann::ordered_json::array();
  for (const ClaimResult& e : r.entries) {
    nlohmann::ordered_json je;
    je["id"] = e.id;
    je["hypothesis_met"] = e.hypothesis_met;
    je["status"] = e.verdict == Verdict::Holds
                       ? "holds"
                       : e.verdict == Verdict::Fails ? "fails" : "not-applicable";
    if (!e.detail.empty()) je["detail"] = e.detail;
    j["claims"].push_back(std::move(je));
  }
  j["summary"] = {{"holds", r.holds},
                  {"fails", r.fails},
                  {"not_applicable", r.not_applicable}};
  return j.dump(2) + "\n";
}

std::string filters_hasse_dot(const FilterLattice& fl) {
  std::ostringstream out;
  out << "digraph filters {\n  rankdir=BT;\n";
  for (int i = 0; i < fl.count(); ++i)
    out << "  f" << i << " [label=\"" << render_filter(fl, i) << "\"];\n";
  for (int i = 0; i < fl.count(); ++i)
    for (int j = 0; j < fl.count(); ++j) {
      if (i == j || !fl.members(i).proper_subset_of(fl.members(j))) continue;
      bool cover = true;
      for (int k = 0; k < fl.count() && cover; ++k)
        if (k != i && k != j && fl.members(i).proper_subset_of(fl.members(k)) &&
            fl.members(k).proper_subset_of(fl.members(j)))
          cover = false;
      if (cover) out << "  f" << i << " -> f" << j << ";\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace rlat
