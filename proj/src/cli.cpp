#include "cliffsub/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "cliffsub/render.hpp"

namespace cliffsub::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string product_label(int i, int j) { return "a" + std::to_string(i) + "a" + std::to_string(j); }

std::string signs_text(const std::vector<int>& t) {
  std::string out = "(";
  for (std::size_t k = 0; k < t.size(); ++k) out += (k ? ", " : "") + std::string(t[k] > 0 ? "+" : "-");
  return out + ")";
}

int cmd_table(int n, const std::string& format, bool check_paper, std::ostream& out) {
  if (check_paper && n != 3) throw UsageError("--check-paper needs --n 3");
  const Table table = build_table(n);
  if (!check_paper) {
    out << (format == "json" ? dump(table_json(table)) : table_text(table));
    return kOk;
  }
  const auto bad = table_mismatches(table);
  for (const auto& m : bad) out << m << "\n";
  const std::size_t cells = table.cells.size();
  out << (cells - bad.size()) << "/" << cells << " cells match\n";
  return bad.empty() ? kOk : kVerificationFailed;
}

int cmd_bases(int dim, std::ostream& out) {
  for (const auto& cb : canonical_bases(dim)) {
    std::string omitted = "g" + std::to_string(cb.pivot);
    if (std::has_single_bit(static_cast<unsigned>(dim))) {
      const int n = std::countr_zero(static_cast<unsigned>(dim));
      omitted = blade_name(generator_order(n)[static_cast<std::size_t>(cb.pivot - 1)], n);
    }
    out << "basis " << cb.index << " (omits " << omitted << "): " << basis_text(cb) << "\n";
  }
  return kOk;
}

const CanonicalBasis& pick_basis(const std::vector<CanonicalBasis>& bases, int m) {
  if (m < 1 || m > static_cast<int>(bases.size()))
    throw UsageError("--basis must be between 1 and " + std::to_string(bases.size()));
  return bases[static_cast<std::size_t>(m - 1)];
}

int cmd_conditions(int m, int n, bool json, std::ostream& out) {
  const auto bases = canonical_bases(1 << n);
  const CanonicalBasis& cb = pick_basis(bases, m);
  const ConditionSet cs = derive_conditions(cb, n);
  if (json) {
    out << dump(conditions_json(cs));
    return kOk;
  }
  out << "basis " << m << ": " << basis_text(cb, n) << "\n";
  out << cs.conditions.size() << (cs.conditions.size() == 1 ? " condition\n" : " conditions\n") << conditions_text(cs);
  return kOk;
}

int cmd_classify(int n, bool json, const std::string& path, std::ostream& out) {
  const ClassificationResult r = classify(n);
  const std::string text = json ? dump(classification_json(r)) : classification_text(r);
  if (path.empty()) {
    out << text;
  } else {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot open " + path);
    file << text;
    out << r.summary_line() << "\n";
  }
  const auto families = r.all_families();
  const bool closed = std::all_of(families.begin(), families.end(), [](const FamilyReport* f) { return f->closed; });
  return closed ? kOk : kVerificationFailed;
}

int report_vectors(const std::string& spec, int n, std::ostream& out) {
  std::vector<MultiVector<GaussianRational>> vectors;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ';')) {
    auto v = parse_multivector(item, n);
    if (!v) throw UsageError("cannot parse vector \"" + item + "\"");
    vectors.push_back(std::move(*v));
  }
  if (vectors.empty()) throw UsageError("--vectors is empty");
  if (detect_echelon<GaussianRational>(vectors)) {
    if (auto e = find_escape<GaussianRational>(vectors)) {
      out << "not closed: " << product_label(e->i, e->j) << " = " << e->product << " leaves the span, residual "
          << e->residual << "\n";
      return kVerificationFailed;
    }
  } else if (auto e = first_escaping_product_rref(vectors)) {
    out << "not closed: " << product_label(e->first, e->second) << " leaves the span\n";
    return kVerificationFailed;
  }
  out << "closed: all " << vectors.size() * vectors.size() << " products lie in the span\n";
  return kOk;
}

int cmd_verify(const std::string& family, const std::string& vectors, int n, std::ostream& out) {
  if (!vectors.empty()) return report_vectors(vectors, n, out);
  if (family != "all" && !find_fixture(family)) throw UsageError("--family must be h1..h8 or all");
  const ClassificationResult g3 = classify(3);
  bool ok = true;
  int verified = 0;
  int checked = 0;
  for (const auto& f : theorem_fixtures()) {
    if (family != "all" && f.name != family) continue;
    const FixtureCheck c = check_fixture(f, g3);
    ++checked;
    out << c.name << ": ";
    if (c.escape) {
      out << "not closed: " << product_label(c.escape->i, c.escape->j) << " = " << c.escape->product
          << " leaves the span, residual " << c.escape->residual;
    } else {
      out << "closed";
    }
    if (c.matched_branch) {
      out << "; basis " << *c.matched_basis << ", family " << *c.matched_branch;
    } else {
      out << "; no matching family";
    }
    out << "\n";
    if (c.ok()) {
      ++verified;
    } else {
      ok = false;
    }
  }
  out << verified << "/" << checked << " subalgebras verified\n";
  if (family != "all") return ok ? kOk : kVerificationFailed;

  auto summarize = [&](const std::string& title, const std::vector<SignPattern>& patterns, auto expected) {
    int closed = 0;
    bool consistent = true;
    for (const auto& p : patterns) {
      if (p.closed) ++closed;
      if (p.closed != expected(p)) {
        consistent = false;
        out << "  unexpected: " << signs_text(p.signs) << (p.closed ? " closed" : " not closed") << "\n";
      }
    }
    out << "sign patterns, " << title << ": " << closed << " of " << patterns.size() << " closed"
        << (consistent ? ", exactly the printed ones" : "") << "\n";
    if (!consistent) ok = false;
  };
  summarize("h1-h4 shape", one_parameter_sign_patterns(), [](const SignPattern& p) { return p.fixture.has_value(); });
  // At a = 0 the sign of the a*k term in j + a*k is invisible.
  const auto at_zero = one_parameter_sign_patterns(GaussianRational(0));
  summarize("h1-h4 shape at a = 0", at_zero, [&](const SignPattern& p) {
    return std::any_of(at_zero.begin(), at_zero.end(), [&](const SignPattern& q) {
      return q.fixture && std::equal(p.signs.begin(), p.signs.begin() + 3, q.signs.begin());
    });
  });
  summarize("h5-h8 shape", isolated_sign_patterns(), [](const SignPattern& p) { return p.fixture.has_value(); });
  return ok ? kOk : kVerificationFailed;
}

int cmd_oracle(int m, std::size_t trials, std::uint64_t seed, int n, std::ostream& out) {
  pick_basis(canonical_bases(1 << n), m);
  const OracleReport r = sampling_oracle(m, trials, seed, n);
  out << "basis " << r.basis << " of g(" << r.n << "), " << r.trials << " trials, seed " << r.seed << "\n";
  out << "agreements: " << r.agreements << "\n";
  for (std::size_t t : r.disagreements) out << "disagreement at trial " << t << "\n";
  out << "closure hits: " << r.closure_hits << "; disagreements: " << r.disagreements.size() << "\n";
  return r.disagreements.empty() ? kOk : kVerificationFailed;
}

int cmd_lemma(const std::string& family, int k, const std::string& point_text, std::ostream& out) {
  const Fixture* f = find_fixture(family);
  if (!f) throw UsageError("--family must be one of h1..h8");
  auto a = GaussianRational::parse(point_text);
  if (!a) throw UsageError("cannot parse --point " + point_text);
  auto point = parameter_point(*a);
  if (!point) throw UsageError("-1 - a^2 has no square root in the Gaussian rationals at a = " + a->to_string());
  const LemmaReport r = verify_lemma(*f, *point, k);
  out << r.family;
  if (f->one_parameter) {
    out << " at a = " << point->a.to_string() << ", s = " << point->s.to_string();
  } else {
    out << " (no parameter)";
  }
  out << ": " << (r.closed_in_g3 ? "closed" : "not closed") << " in g(3), ";
  if (r.escape) {
    out << "not closed in g(" << 3 + k << "), " << product_label(r.escape->first, r.escape->second)
        << " leaves the span\n";
  } else {
    out << "closed in g(" << 3 + k << ")\n";
  }
  return r.ok() ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact classification of codimension-one subalgebras of complex Clifford algebras", "cliffsub"};
  app.require_subcommand(1);

  int table_n = 3;
  std::string table_format = "text";
  bool check_paper = false;
  auto* table = app.add_subcommand("table", "Print the multiplication table of g(n)");
  table->add_option("--n", table_n, "Number of generators")->check(CLI::Range(1, 6));
  table->add_option("--format", table_format, "Output format")->check(CLI::IsMember({"text", "json"}));
  table->add_flag("--check-paper", check_paper, "Compare g(3) against the hand-tabulated table");

  int dim = 8;
  auto* bases = app.add_subcommand("bases", "List the canonical bases of hyperplanes");
  bases->add_option("--dim", dim, "Ambient dimension")->check(CLI::Range(2, 64));

  int cond_basis = 0;
  int cond_n = 3;
  bool cond_json = false;
  auto* conditions = app.add_subcommand("conditions", "Derive the closure conditions of one basis");
  conditions->add_option("--basis", cond_basis, "Canonical basis index")->required();
  conditions->add_option("--n", cond_n, "Number of generators")->check(CLI::Range(1, kMaxClassifyN));
  conditions->add_flag("--json", cond_json, "JSON output");

  int cls_n = 3;
  bool cls_json = false;
  std::string cls_out;
  auto* classify_cmd = app.add_subcommand("classify", "Classify all codimension-one subalgebras of g(n)");
  classify_cmd->add_option("--n", cls_n, "Number of generators")->check(CLI::Range(1, kMaxClassifyN));
  classify_cmd->add_flag("--json", cls_json, "JSON output");
  classify_cmd->add_option("--out", cls_out, "Write the result to FILE");

  std::string ver_family = "all";
  std::string ver_vectors;
  int ver_n = 3;
  auto* verify = app.add_subcommand("verify", "Check the eight subalgebras of g(3), or a given list of vectors");
  verify->add_option("--family", ver_family, "h1..h8 or all");
  verify->add_option("--vectors", ver_vectors, "Semicolon-separated vectors of g(n) to test for closure");
  verify->add_option("--n", ver_n, "Number of generators for --vectors")->check(CLI::Range(1, 6));

  int orc_basis = 0;
  std::size_t orc_trials = 1000;
  std::uint64_t orc_seed = 0;
  int orc_n = 3;
  auto* oracle = app.add_subcommand("oracle", "Compare conditions with direct closure on random parameters");
  oracle->add_option("--basis", orc_basis, "Canonical basis index")->required();
  oracle->add_option("--trials", orc_trials, "Number of samples")->check(CLI::PositiveNumber);
  oracle->add_option("--seed", orc_seed, "Random seed")->required();
  oracle->add_option("--n", orc_n, "Number of generators")->check(CLI::Range(1, kMaxClassifyN));

  std::string lem_family;
  int lem_k = 1;
  std::string lem_point = "0";
  auto* lemma = app.add_subcommand("lemma", "Embed a subalgebra of g(3) into g(3 + k) and recheck closure");
  lemma->add_option("--family", lem_family, "h1..h8")->required();
  lemma->add_option("--k", lem_k, "Number of extra generators")->check(CLI::Range(1, 5));
  lemma->add_option("--point", lem_point, "Value of a, e.g. 0 or 5/4*I");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (table->parsed()) return cmd_table(table_n, table_format, check_paper, out);
    if (bases->parsed()) return cmd_bases(dim, out);
    if (conditions->parsed()) return cmd_conditions(cond_basis, cond_n, cond_json, out);
    if (classify_cmd->parsed()) return cmd_classify(cls_n, cls_json, cls_out, out);
    if (verify->parsed()) return cmd_verify(ver_family, ver_vectors, ver_n, out);
    if (oracle->parsed()) return cmd_oracle(orc_basis, orc_trials, orc_seed, orc_n, out);
    if (lemma->parsed()) return cmd_lemma(lem_family, lem_k, lem_point, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace cliffsub::cli
