#include "cliffsub/render.hpp"

#include <algorithm>
#include <bit>

namespace cliffsub {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string table_text(const Table& table) {
  std::vector<std::string> header;
  for (BladeMask m : table.order) header.push_back(blade_name(m, table.n));
  std::size_t width = 1;
  for (const auto& c : table.cells) width = std::max(width, signed_blade_name(c).size());
  for (const auto& h : header) width = std::max(width, h.size());
  auto pad = [&](const std::string& s) { return std::string(width - s.size() + 1, ' ') + s; };

  std::string out = std::string(width + 1, ' ') + " |";
  for (const auto& h : header) out += pad(h);
  out += "\n" + std::string(width + 3, '-') + std::string(header.size() * (width + 1), '-') + "\n";
  for (std::size_t r = 0; r < table.size(); ++r) {
    out += pad(header[r]) + " |";
    for (std::size_t c = 0; c < table.size(); ++c) out += pad(signed_blade_name(table.at(r, c)));
    out += "\n";
  }
  return out;
}

Json table_json(const Table& table) {
  Json j;
  j["n"] = table.n;
  Json order = Json::array();
  for (BladeMask m : table.order) order.push_back(blade_name(m, table.n));
  j["order"] = order;
  Json rows = Json::array();
  for (std::size_t r = 0; r < table.size(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < table.size(); ++c) row.push_back(signed_blade_name(table.at(r, c)));
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

std::vector<std::string> table_mismatches(const Table& table) {
  const auto& ref = reference_table_g3();
  std::vector<std::string> out;
  if (table.n != 3) {
    out.push_back("the reference table is for n = 3");
    return out;
  }
  for (std::size_t r = 0; r < table.size(); ++r) {
    for (std::size_t c = 0; c < table.size(); ++c) {
      const std::string got = signed_blade_name(table.at(r, c));
      if (got != ref[r][c]) {
        out.push_back(blade_name(table.order[r], 3) + "*" + blade_name(table.order[c], 3) + ": got " + got +
                      ", expected " + ref[r][c]);
      }
    }
  }
  return out;
}

std::string basis_text(const CanonicalBasis& cb, int n) {
  std::string out;
  int k = 1;
  for (const auto& v : symbolic_span(cb, n).vectors()) {
    out += (out.empty() ? "a" : ", a") + std::to_string(k++) + " = " + format_multivector(v);
  }
  return out;
}

std::string basis_text(const CanonicalBasis& cb) {
  if (std::has_single_bit(static_cast<unsigned>(cb.dim)) && cb.dim <= (1 << kMaxGenerators))
    return basis_text(cb, std::countr_zero(static_cast<unsigned>(cb.dim)));
  std::string out;
  int k = 1;
  std::size_t param = 0;
  for (int t : cb.slots()) {
    out += (out.empty() ? "a" : ", a") + std::to_string(k++) + " = g" + std::to_string(t);
    if (t < cb.pivot) out += " + " + cb.params.name(param++) + "*g" + std::to_string(cb.pivot);
  }
  return out;
}

std::string source_label(const ConditionSet& cs, std::size_t source) {
  if (source < cs.conditions.size()) {
    const auto& [i, j] = cs.conditions[source].from_product;
    return "a" + std::to_string(i) + "a" + std::to_string(j);
  }
  return "q" + std::to_string(source - cs.conditions.size() + 1);
}

std::string step_text(const ConditionSet& cs, const Step& step) {
  std::string out = rule_name(step.rule) + " [";
  for (std::size_t k = 0; k < step.sources.size(); ++k) out += (k ? ", " : "") + source_label(cs, step.sources[k]);
  out += "]: " + step.condition.equation_string();
  if (step.var) out += " => " + *step.var + " := " + step.value.to_string();
  return out;
}

std::string conditions_text(const ConditionSet& cs) {
  std::string out;
  for (const auto& c : cs.conditions) {
    out += c.poly.equation_string() + "    (a" + std::to_string(c.from_product.first) + "a" +
           std::to_string(c.from_product.second) + ")\n";
  }
  return out;
}

Json conditions_json(const ConditionSet& cs) {
  Json j;
  j["basis"] = cs.basis;
  Json list = Json::array();
  for (const auto& c : cs.conditions) {
    Json e;
    e["poly"] = c.poly.to_string();
    e["from_product"] = {c.from_product.first, c.from_product.second};
    list.push_back(e);
  }
  j["conditions"] = list;
  return j;
}

namespace {

std::string end_name(Branch::End end) {
  switch (end) {
    case Branch::End::Contradiction: return "contradiction";
    case Branch::End::Family: return "family";
    case Branch::End::Unresolved: return "unresolved";
  }
  return "?";
}

std::vector<std::string> subalgebra_strings(const FamilyReport& f) {
  std::vector<std::string> out;
  for (const auto& v : f.subalgebra) out.push_back(format_multivector(v));
  return out;
}

Json optional_string(const std::optional<std::string>& s) { return s ? Json(*s) : Json(nullptr); }

Json branch_json(const ConditionSet& cs, const Branch& b) {
  Json j;
  j["label"] = b.label;
  j["end"] = end_name(b.end);
  Json trace = Json::array();
  for (const auto& st : b.steps) trace.push_back(step_text(cs, st));
  j["trace"] = trace;
  if (b.end == Branch::End::Contradiction) j["replay"] = replay_contradiction(cs, b).to_string();
  if (b.end == Branch::End::Unresolved) {
    Json rem = Json::array();
    for (const auto& p : b.remaining) rem.push_back(p.equation_string());
    j["remaining"] = rem;
    j["note"] = b.note;
  }
  return j;
}

Json family_json(const FamilyReport& fr) {
  const SolutionFamily& f = fr.family;
  Json j;
  j["branch"] = f.branch;
  Json fixed = Json::object();
  for (const auto& [name, value] : f.fixed) fixed[name] = value.to_string();
  j["fixed"] = fixed;
  j["free"] = f.free_parameter ? Json("a") : Json(nullptr);
  j["parameter"] = optional_string(f.free_parameter);
  j["root"] = optional_string(f.root_variable);
  j["extension"] = f.ring ? Json(f.ring->relation_string()) : Json(nullptr);
  j["terminal_relation"] = fr.terminal_relation ? Json(fr.terminal_relation->equation_string()) : Json(nullptr);
  j["real_certificate"] = f.real_certificate ? Json(f.real_certificate->equation_string()) : Json(nullptr);
  j["closed"] = fr.closed;
  j["subalgebra"] = subalgebra_strings(fr);
  return j;
}

}  // namespace

Json classification_json(const ClassificationResult& result) {
  Json j;
  j["n"] = result.n;
  Json bases = Json::array();
  for (const auto& b : result.bases) {
    Json e;
    e["m"] = b.basis.index;
    e["outcome"] = outcome_name(b.outcome.kind);
    e["conditions"] = b.conditions.conditions.size();
    Json branches = Json::array();
    for (const auto& br : b.outcome.branches) branches.push_back(branch_json(b.conditions, br));
    e["branches"] = branches;
    Json families = Json::array();
    for (const auto& f : b.families) families.push_back(family_json(f));
    e["families"] = families;
    bases.push_back(e);
  }
  j["bases"] = bases;
  const auto& s = result.summary;
  Json summary;
  summary["one_parameter_families"] = s.one_parameter_families;
  summary["isolated"] = s.isolated;
  summary["contradictions"] = s.contradictions;
  summary["unresolved"] = s.unresolved;
  summary["empty_bases"] = s.empty_bases;
  summary["unresolved_bases"] = s.unresolved_bases;
  summary["line"] = result.summary_line();
  j["summary"] = summary;
  return j;
}

std::string classification_text(const ClassificationResult& result) {
  const int N = 1 << result.n;
  std::string out = "g(" + std::to_string(result.n) + "): " + std::to_string(N) + " canonical bases of dimension " +
                    std::to_string(N - 1) + "\n";
  for (const auto& b : result.bases) {
    const std::size_t count = b.conditions.conditions.size();
    out += "\nbasis " + std::to_string(b.basis.index) + ": " + outcome_name(b.outcome.kind) + " (" +
           std::to_string(count) + (count == 1 ? " condition)\n" : " conditions)\n");
    for (const auto& br : b.outcome.branches) {
      out += "  branch " + br.label + ": " + end_name(br.end) + "\n";
      for (const auto& st : br.steps) out += "    " + step_text(b.conditions, st) + "\n";
      if (br.end == Branch::End::Contradiction)
        out += "    replay: " + replay_contradiction(b.conditions, br).to_string() + " = 0\n";
      if (br.end == Branch::End::Unresolved) {
        for (const auto& p : br.remaining) out += "    remaining: " + p.equation_string() + "\n";
        out += "    note: " + br.note + "\n";
      }
    }
    for (const auto& fr : b.families) {
      const SolutionFamily& f = fr.family;
      out += "  family " + f.branch + "\n";
      if (f.free_parameter) out += "    free parameter a = " + *f.free_parameter + "\n";
      if (f.ring) out += "    " + f.ring->relation_string() + "\n";
      if (f.real_certificate) out += "    no real points: " + f.real_certificate->equation_string() + "\n";
      out += std::string("    closed: ") + (fr.closed ? "yes" : "no") + "\n";
      const auto vs = subalgebra_strings(fr);
      std::string span;
      for (const auto& v : vs) span += (span.empty() ? "" : ", ") + v;
      out += "    span{" + span + "}\n";
    }
  }
  out += "\n" + result.summary_line() + "\n";
  return out;
}

}  // namespace cliffsub
