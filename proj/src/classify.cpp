#include "cliffsub/classify.hpp"

#include <algorithm>
#include <limits>

namespace cliffsub {

std::string ClassificationResult::summary_line() const {
  auto plural = [](int count, const std::string& one, const std::string& many) {
    return std::to_string(count) + " " + (count == 1 ? one : many);
  };
  auto list = [](const std::vector<int>& xs) {
    std::string out;
    for (int x : xs) out += (out.empty() ? "" : ",") + std::to_string(x);
    return out;
  };
  std::string out = plural(summary.one_parameter_families, "one-parameter family", "one-parameter families") + ", " +
                    plural(summary.isolated, "isolated subalgebra", "isolated subalgebras");
  if (!summary.empty_bases.empty()) {
    out += summary.empty_bases.size() == 1 ? "; basis " : "; bases ";
    out += list(summary.empty_bases) + ": none";
  }
  if (!summary.unresolved_bases.empty()) {
    out += summary.unresolved_bases.size() == 1 ? "; basis " : "; bases ";
    out += list(summary.unresolved_bases) + ": unresolved";
  }
  return out;
}

std::vector<const FamilyReport*> ClassificationResult::all_families() const {
  std::vector<const FamilyReport*> out;
  for (const auto& b : bases) {
    for (const auto& f : b.families) out.push_back(&f);
  }
  return out;
}

ClassificationResult classify(int n) {
  if (n < 1 || n > kMaxClassifyN) throw std::out_of_range("classify: n must be between 1 and 4");
  ClassificationResult result;
  result.n = n;
  for (const auto& cb : canonical_bases(1 << n)) {
    BasisReport br;
    br.basis = cb;
    br.conditions = derive_conditions(cb, n);
    br.outcome = solve(br.conditions);
    for (const auto& f : br.outcome.families) {
      FamilyReport fr;
      fr.family = f;
      fr.subalgebra = instantiate<ExtensionElement>(cb, n, f.values).vectors();
      if (!f.relations.empty()) fr.terminal_relation = f.relations.back();
      fr.closed = check_closure_concrete<ExtensionElement>(fr.subalgebra);
      fr.certified = f.real_certificate.has_value() && real_infeasible(*f.real_certificate);
      if (f.is_isolated()) {
        ++result.summary.isolated;
      } else {
        ++result.summary.one_parameter_families;
      }
      br.families.push_back(std::move(fr));
    }
    switch (br.outcome.kind) {
      case SolveOutcome::Kind::Contradiction:
        ++result.summary.contradictions;
        result.summary.empty_bases.push_back(cb.index);
        break;
      case SolveOutcome::Kind::Unresolved:
        ++result.summary.unresolved;
        result.summary.unresolved_bases.push_back(cb.index);
        break;
      case SolveOutcome::Kind::Families: break;
    }
    result.bases.push_back(std::move(br));
  }
  return result;
}

// ---------------------------------------------------------------------------

namespace {

using EMV = MultiVector<ExtensionElement>;

BladeMask g3(std::string_view name) { return *parse_blade(name, 3); }

EMV term(std::string_view lead, std::string_view target = {}, ExtensionElement c = {}) {
  EMV v = EMV::blade(3, g3(lead), ExtensionElement(1));
  if (!target.empty()) v.add_term(g3(target), std::move(c));
  return v;
}

struct Shape {
  std::string name;
  std::vector<int> signs;
};

// Sign vectors as printed: (e1, e3, i, j) coefficients of k for h1..h4 and
// (e2, e3, i) coefficients of j for h5..h8.
const std::vector<Shape>& one_parameter_shapes() {
  static const std::vector<Shape> shapes{
      {"h1", {1, 1, -1, 1}}, {"h2", {1, -1, 1, 1}}, {"h3", {-1, 1, 1, -1}}, {"h4", {-1, -1, -1, -1}}};
  return shapes;
}

const std::vector<Shape>& isolated_shapes() {
  static const std::vector<Shape> shapes{
      {"h5", {1, 1, 1}}, {"h6", {1, -1, -1}}, {"h7", {-1, 1, -1}}, {"h8", {-1, -1, 1}}};
  return shapes;
}

std::vector<EMV> one_parameter_vectors(std::span<const int> t) {
  const auto ring = ExtensionRing::standard();
  const ExtensionElement a = ExtensionElement::parameter(ring);
  const ExtensionElement s = ExtensionElement::root(ring);
  return {term("1"),
          term("e1", "k", ExtensionElement(t[0])),
          term("e2", "k", a),
          term("e3", "k", s * GaussianRational(t[1])),
          term("i", "k", s * GaussianRational(t[2])),
          term("j", "k", a * GaussianRational(t[3])),
          term("z")};
}

std::vector<EMV> isolated_vectors(std::span<const int> t) {
  const GaussianRational I = GaussianRational::I();
  return {term("1"),
          term("e1"),
          term("e2", "j", ExtensionElement(t[0])),
          term("e3", "j", ExtensionElement(I * GaussianRational(t[1]))),
          term("i", "j", ExtensionElement(I * GaussianRational(t[2]))),
          term("k"),
          term("z")};
}

std::vector<std::vector<int>> sign_vectors(int length) {
  std::vector<std::vector<int>> out;
  for (int c = 0; c < (1 << length); ++c) {
    std::vector<int> t;
    for (int k = length - 1; k >= 0; --k) t.push_back(((c >> k) & 1) ? -1 : 1);
    out.push_back(std::move(t));
  }
  return out;
}

std::optional<std::string> printed_shape(const std::vector<Shape>& shapes, const std::vector<int>& t) {
  for (const auto& sh : shapes) {
    if (sh.signs == t) return sh.name;
  }
  return std::nullopt;
}

MultiVector<GaussianRational> at_point(const EMV& v, const ParameterPoint& p) {
  MultiVector<GaussianRational> out(v.n());
  for (const auto& [mask, c] : v.coefficients()) {
    out.add_term(mask, c.evaluate(p.a, p.s));
  }
  return out;
}

}  // namespace

const std::vector<Fixture>& theorem_fixtures() {
  static const std::vector<Fixture> fixtures = [] {
    std::vector<Fixture> out;
    for (const auto& sh : one_parameter_shapes()) out.push_back({sh.name, true, one_parameter_vectors(sh.signs)});
    for (const auto& sh : isolated_shapes()) out.push_back({sh.name, false, isolated_vectors(sh.signs)});
    return out;
  }();
  return fixtures;
}

const Fixture* find_fixture(std::string_view name) {
  for (const auto& f : theorem_fixtures()) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

FixtureCheck check_fixture(const Fixture& fixture, const ClassificationResult& g3) {
  FixtureCheck check;
  check.name = fixture.name;
  check.escape = find_escape<ExtensionElement>(fixture.vectors);
  check.closed = !check.escape.has_value();
  for (const auto& b : g3.bases) {
    for (const auto& f : b.families) {
      if (f.subalgebra == fixture.vectors) {
        check.matched_branch = f.family.branch;
        check.matched_basis = b.basis.index;
        return check;
      }
    }
  }
  return check;
}

bool TheoremReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const FixtureCheck& c) { return c.ok(); });
}

TheoremReport verify_theorem(const ClassificationResult& g3) {
  if (g3.n != 3) throw std::invalid_argument("verify_theorem: expects the classification of g(3)");
  TheoremReport report;
  for (const auto& f : theorem_fixtures()) report.checks.push_back(check_fixture(f, g3));
  return report;
}

TheoremReport verify_theorem() { return verify_theorem(classify(3)); }

std::vector<SignPattern> one_parameter_sign_patterns(const std::optional<GaussianRational>& alpha) {
  std::optional<ParameterPoint> point;
  if (alpha) {
    point = parameter_point(*alpha);
    if (!point) throw std::invalid_argument("sign patterns: -1 - a^2 has no Gaussian-rational root");
  }
  std::vector<SignPattern> out;
  for (auto& t : sign_vectors(4)) {
    const auto vectors = one_parameter_vectors(t);
    SignPattern sp;
    if (point) {
      std::vector<MultiVector<GaussianRational>> concrete;
      for (const auto& v : vectors) concrete.push_back(at_point(v, *point));
      sp.closed = check_closure_concrete<GaussianRational>(concrete);
    } else {
      sp.closed = check_closure_concrete<ExtensionElement>(vectors);
    }
    sp.fixture = printed_shape(one_parameter_shapes(), t);
    sp.signs = std::move(t);
    out.push_back(std::move(sp));
  }
  return out;
}

std::vector<SignPattern> isolated_sign_patterns() {
  std::vector<SignPattern> out;
  for (auto& t : sign_vectors(3)) {
    SignPattern sp;
    sp.closed = check_closure_concrete<ExtensionElement>(isolated_vectors(t));
    sp.fixture = printed_shape(isolated_shapes(), t);
    sp.signs = std::move(t);
    out.push_back(std::move(sp));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::optional<ParameterPoint> parameter_point(const GaussianRational& a) {
  const auto roots = square_roots(GaussianRational(-1) - a * a);
  if (roots.empty()) return std::nullopt;
  return ParameterPoint{a, roots.front()};
}

std::vector<ParameterPoint> lemma_points() {
  return {*parameter_point(0), *parameter_point(GaussianRational(0, Rational(5, 4)))};
}

std::vector<MultiVector<GaussianRational>> instantiate_fixture(const Fixture& fixture, const ParameterPoint& point) {
  std::vector<MultiVector<GaussianRational>> out;
  for (const auto& v : fixture.vectors) out.push_back(at_point(v, point));
  return out;
}

LemmaReport verify_lemma(const Fixture& fixture, const ParameterPoint& point, int k) {
  if (k < 1) throw std::out_of_range("verify_lemma: k must be at least 1");
  if (3 + k > kMaxGenerators) throw std::out_of_range("verify_lemma: k too large");
  LemmaReport report;
  report.family = fixture.name;
  report.point = point;
  report.k = k;
  const auto vectors = instantiate_fixture(fixture, point);
  report.closed_in_g3 = !first_escaping_product_rref(vectors).has_value();
  std::vector<MultiVector<GaussianRational>> embedded;
  for (const auto& v : vectors) embedded.push_back(embed(v, 3, k));
  report.escape = first_escaping_product_rref(embedded);
  report.closed_embedded = !report.escape.has_value();
  return report;
}

// ---------------------------------------------------------------------------

std::uint64_t GaussianSampler::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("GaussianSampler: empty range");
  // 2^64 mod bound; rejecting draws below it leaves a multiple of bound.
  const std::uint64_t threshold = (std::numeric_limits<std::uint64_t>::max() - bound + 1) % bound;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x >= threshold) return x % bound;
  }
}

long GaussianSampler::between(long lo, long hi) {
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

GaussianRational GaussianSampler::next() {
  if (below(2) == 0) {
    static const GaussianRational special[] = {0, 1, -1, GaussianRational::I(), -GaussianRational::I()};
    return special[below(5)];
  }
  const long rn = between(-10, 10);
  const long rd = between(1, 10);
  Rational im = 0;
  if (below(2) == 0) {
    const long in = between(-10, 10);
    const long id = between(1, 10);
    im = Rational(in, id);
    im.canonicalize();
  }
  Rational re(rn, rd);
  re.canonicalize();
  return {re, im};
}

OracleVerdict oracle_check(const CanonicalBasis& cb, const ConditionSet& cs, std::span<const GaussianRational> values) {
  OracleVerdict v;
  v.conditions_vanish = cs.all_vanish(values);
  const auto vectors = instantiate<GaussianRational>(cb, cs.n, values).vectors();
  v.closed = !first_escaping_product_rref(vectors).has_value();
  return v;
}

OracleReport sampling_oracle(int basis, std::size_t trials, std::uint64_t seed, int n) {
  if (n < 1 || n > kMaxClassifyN) throw std::out_of_range("sampling_oracle: n must be between 1 and 4");
  const auto bases = canonical_bases(1 << n);
  if (basis < 1 || basis > static_cast<int>(bases.size())) throw std::out_of_range("sampling_oracle: no such basis");
  if (trials == 0) throw std::out_of_range("sampling_oracle: trials must be at least 1");
  const CanonicalBasis& cb = bases[static_cast<std::size_t>(basis - 1)];
  const ConditionSet cs = derive_conditions(cb, n);

  OracleReport report;
  report.basis = basis;
  report.n = n;
  report.trials = trials;
  report.seed = seed;
  GaussianSampler sampler(seed);
  std::vector<GaussianRational> values(cb.params.size());
  for (std::size_t t = 0; t < trials; ++t) {
    for (auto& x : values) x = sampler.next();
    const OracleVerdict v = oracle_check(cb, cs, values);
    if (v.closed) ++report.closure_hits;
    if (v.agrees()) {
      ++report.agreements;
    } else {
      report.disagreements.push_back(t);
    }
  }
  return report;
}

}  // namespace cliffsub
