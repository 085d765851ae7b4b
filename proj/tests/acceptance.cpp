// One PASS/FAIL line per acceptance criterion. Every check is exact; the
// time limits are wall-clock bounds on the measured computation.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gen.hpp"

#include "cliffsub/classify.hpp"
#include "cliffsub/render.hpp"

using namespace cliffsub;
using testgen::Gen;
using testgen::kCases;

namespace {

using Clock = std::chrono::steady_clock;
using MV = MultiVector<GaussianRational>;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const char* name, double limit_ms, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  if (limit_ms > 0 && ms >= limit_ms) o.fail("took longer than limit");
  if (!o.ok) ++failures;
  char timing[64];
  if (limit_ms > 0) {
    std::snprintf(timing, sizeof timing, "%.3f ms, limit %.0f ms", ms, limit_ms);
  } else {
    std::snprintf(timing, sizeof timing, "%.3f ms", ms);
  }
  std::printf("%s %d %s (%s)%s%s\n", o.ok ? "PASS" : "FAIL", id, name, timing, o.ok ? "" : ": ", o.detail.c_str());
  std::fflush(stdout);
}

const ClassificationResult& g3() {
  static const ClassificationResult r = classify(3);
  return r;
}

bool contains(const ConditionSet& cs, const Polynomial& p) {
  const Polynomial q = p.monic();
  return std::any_of(cs.conditions.begin(), cs.conditions.end(), [&](const Condition& c) { return c.poly == q; });
}

// The eight subalgebras as printed, with s = sqrt(-1 - a^2).
const std::vector<std::vector<std::string>> kPrinted{
    {"1", "e1 + k", "e2 + a*k", "e3 + s*k", "i - s*k", "j + a*k", "z"},
    {"1", "e1 + k", "e2 + a*k", "e3 - s*k", "i + s*k", "j + a*k", "z"},
    {"1", "e1 - k", "e2 + a*k", "e3 + s*k", "i + s*k", "j - a*k", "z"},
    {"1", "e1 - k", "e2 + a*k", "e3 - s*k", "i - s*k", "j - a*k", "z"},
    {"1", "e1", "e2 + j", "e3 + I*j", "i + I*j", "k", "z"},
    {"1", "e1", "e2 + j", "e3 - I*j", "i - I*j", "k", "z"},
    {"1", "e1", "e2 - j", "e3 + I*j", "i - I*j", "k", "z"},
    {"1", "e1", "e2 - j", "e3 - I*j", "i + I*j", "k", "z"},
};

std::vector<std::string> rendered(const std::vector<MultiVector<ExtensionElement>>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(format_multivector(v));
  return out;
}

void table_fidelity(Outcome& o) {
  const auto bad = table_mismatches(build_table(3));
  if (!bad.empty()) o.fail(bad.front());
}

void theorem(Outcome& o) {
  const auto& r = g3();
  if (r.summary.one_parameter_families != 4) o.fail("one-parameter families != 4");
  if (r.summary.isolated != 4) o.fail("isolated != 4");
  if (r.summary.empty_bases != std::vector<int>{1, 4, 5, 6, 7, 8}) o.fail("wrong empty bases");
  for (int m : {1, 4, 5, 6, 7, 8}) {
    if (r.bases[static_cast<std::size_t>(m - 1)].outcome.kind != SolveOutcome::Kind::Contradiction)
      o.fail("basis " + std::to_string(m) + " is not a contradiction");
  }
  std::vector<std::vector<std::string>> found;
  for (const auto* f : r.all_families()) {
    const int basis = f->family.is_isolated() ? 3 : 2;
    bool right_basis = false;
    for (const auto& b : r.bases) {
      for (const auto& fr : b.families) {
        if (&fr == f) right_basis = b.basis.index == basis;
      }
    }
    if (!right_basis) o.fail("family in unexpected basis");
    found.push_back(rendered(f->subalgebra));
  }
  for (std::size_t h = 0; h < kPrinted.size(); ++h) {
    if (std::count(found.begin(), found.end(), kPrinted[h]) != 1) o.fail("h" + std::to_string(h + 1) + " not found once");
  }
  if (!verify_theorem(r).ok()) o.fail("fixture check failed");
}

void golden_conditions(Outcome& o) {
  const auto bases = canonical_bases(8);
  {
    const ConditionSet cs = derive_conditions(bases[1], 3);
    auto v = [&](const char* name) { return Polynomial::variable(cs.vars, name); };
    const Polynomial a17 = v("a17"), a27 = v("a27"), a37 = v("a37"), a47 = v("a47"), a57 = v("a57"), a67 = v("a67");
    const Polynomial one(cs.vars, 1);
    for (const auto& p : {a17, a27 * a27 - one, a57 + a27 * a47, a67 - a27 * a37}) {
      if (!contains(cs, p)) o.fail("basis 2 lacks " + p.equation_string());
    }
    // The last three follow from derived conditions once a17 = 0.
    const Polynomial d5 = a17 * a37 * a47 + a37 * a37 + a47 * a47 + one;
    const Polynomial d6 = a17 * a37 * a67 + a37 * a57 + a47 * a67;
    const Polynomial d7 = a17 * a37 * a57 - a37 * a67 + a47 * a57 - a27;
    if (!contains(cs, d5) || !contains(cs, d6) || !contains(cs, d7)) o.fail("basis 2 lacks a combined condition");
    if (!(-a37 * a37 - a47 * a47 - one == -(d5 - a37 * a47 * a17))) o.fail("d5 identity");
    if (!(-a47 * a67 - a37 * a57 == -(d6 - a37 * a67 * a17))) o.fail("d6 identity");
    if (!(a27 + a37 * a67 - a47 * a57 == -(d7 - a37 * a57 * a17))) o.fail("d7 identity");
    // Conversely every derived condition vanishes on the solutions of the seven.
    const auto ring = ExtensionRing::standard();
    const auto a = ExtensionElement::parameter(ring), s = ExtensionElement::root(ring);
    for (int t : {1, -1}) {
      for (int u : {1, -1}) {
        const ExtensionElement w = s * GaussianRational(u);
        const std::vector<ExtensionElement> point{0, t, a, w, w * GaussianRational(-t), a * GaussianRational(t)};
        for (const auto& c : cs.conditions) {
          if (!c.poly.evaluate<ExtensionElement>(point, ExtensionElement(1)).is_zero())
            o.fail("basis 2 condition not implied: " + c.poly.equation_string());
        }
      }
    }
  }
  {
    const ConditionSet cs = derive_conditions(bases[2], 3);
    auto v = [&](const char* name) { return Polynomial::variable(cs.vars, name); };
    const Polynomial a16 = v("a16"), a26 = v("a26"), a36 = v("a36"), a46 = v("a46"), a56 = v("a56");
    const Polynomial one(cs.vars, 1);
    for (const auto& p : {a16, a26, a36 * a36 - one, a56 - a36 * a46, a56 * a56 + one}) {
      if (!contains(cs, p)) o.fail("basis 3 lacks " + p.equation_string());
    }
    const Polynomial d = a16 * a26 * a46 + a26 * a26 + a46 * a46 + one;
    if (!contains(cs, d) || !(a46 * a46 + one == d - a26 * a46 * a16 - a26 * a26)) o.fail("basis 3 a46 condition");
    const GaussianRational I = GaussianRational::I();
    for (int t : {1, -1}) {
      for (int u : {1, -1}) {
        const std::vector<GaussianRational> point{0, 0, t, I * GaussianRational(u), I * GaussianRational(t * u)};
        if (!cs.all_vanish(point)) o.fail("basis 3 condition not implied");
      }
    }
  }
}

void basis1(Outcome& o) {
  const auto& b = g3().bases[0];
  if (b.outcome.kind != SolveOutcome::Kind::Contradiction) return o.fail("not a contradiction");
  for (const auto& br : b.outcome.branches) {
    if (!(replay_contradiction(b.conditions, br) == GaussianRational(-1))) o.fail("replay does not end in -1");
  }
}

void real_infeasibility(Outcome& o) {
  int certified = 0;
  for (const auto* f : g3().all_families()) {
    if (!f->terminal_relation) {
      o.fail("family without terminal relation");
      continue;
    }
    if (!f->certified || !f->family.real_certificate || !real_infeasible(*f->family.real_certificate))
      o.fail("family " + f->family.branch + " not certified");
    else
      ++certified;
  }
  if (certified != 8) o.fail("certified " + std::to_string(certified) + " of 8");
}

void direct_verification(Outcome& o) {
  const auto& fx = theorem_fixtures();
  if (fx.size() != 8) return o.fail("expected 8 fixtures");
  for (const auto& f : fx) {
    if (f.one_parameter) {
      const auto e = find_escape<ExtensionElement>(f.vectors);
      if (e) o.fail(f.name + " escapes at a" + std::to_string(e->i) + "a" + std::to_string(e->j));
    } else {
      const auto vs = instantiate_fixture(f, lemma_points()[0]);
      const auto e = find_escape<GaussianRational>(vs);
      if (e) o.fail(f.name + " escapes at a" + std::to_string(e->i) + "a" + std::to_string(e->j));
    }
  }
}

void oracle_agreement(Outcome& o) {
  for (int m = 1; m <= 8; ++m) {
    const OracleReport r = sampling_oracle(m, 500, testgen::kSeed);
    if (!r.disagreements.empty() || r.agreements != 500)
      o.fail("basis " + std::to_string(m) + ": " + std::to_string(r.disagreements.size()) + " disagreements");
  }
}

void lemma(Outcome& o) {
  for (const auto& f : theorem_fixtures()) {
    for (const auto& p : lemma_points()) {
      for (int k : {1, 2}) {
        if (!verify_lemma(f, p, k).ok())
          o.fail(f.name + " at a = " + p.a.to_string() + " not closed in g(" + std::to_string(3 + k) + ")");
      }
    }
  }
}

void property_suites(Outcome& o) {
  Gen g;
  int bad = 0;
  const Variables v({"x", "y", "z"});
  for (int c = 0; c < kCases; ++c) {
    const GaussianRational x = g.gaussian(), y = g.gaussian(), z = g.gaussian();
    if (!((x + y) + z == x + (y + z)) || !((x * y) * z == x * (y * z)) || !(x * (y + z) == x * y + x * z)) ++bad;
    if (!y.is_zero() && !((x / y) * y == x)) ++bad;
    const auto p = g.polynomial(v), q = g.polynomial(v), r = g.polynomial(v);
    if (!((p * q) * r == p * (q * r)) || !(p * (q + r) == p * q + p * r) || !(p * q == q * p)) ++bad;
  }
  if (bad) o.fail("scalar/polynomial axioms: " + std::to_string(bad));
  for (int c = 0; c < kCases; ++c) {
    const int n = c % 2 == 0 ? 3 : 4;
    const MV x = g.multivector(n), y = g.multivector(n), z = g.multivector(n);
    if (!((x * y) * z == x * (y * z))) ++bad;
    const int k = static_cast<int>(g.between(1, 2));
    if (!(embed(x * y, n, k) == embed(x, n, k) * embed(y, n, k))) ++bad;
  }
  if (bad) o.fail("multivector properties: " + std::to_string(bad));
  for (int c = 0; c < kCases; ++c) {
    ConditionSet cs;
    cs.vars = v;
    for (long t = g.between(1, 3); t > 0; --t) {
      const Polynomial p = g.polynomial(v, static_cast<int>(g.between(1, 3)), 2).monic();
      if (!p.is_zero()) cs.conditions.push_back({p, {0, 0}});
    }
    if (cs.conditions.empty()) continue;
    const SolveOutcome a = solve(cs), b = solve(cs);
    if (a.branches.size() != b.branches.size() || !(a.families == b.families)) ++bad;
    for (const auto& br : a.branches) {
      if (br.end == Branch::End::Contradiction && replay_contradiction(cs, br).is_zero()) ++bad;
    }
    for (const auto& f : a.families) {
      if (!family_satisfies(cs, f)) ++bad;
    }
  }
  if (bad) o.fail("solve determinism/soundness: " + std::to_string(bad));
  const Variables xy({"x", "y"});
  for (int c = 0; c < kCases; ++c) {
    Polynomial p(xy, 0);
    for (int t = 0; t < 3; ++t) {
      Exponents e{static_cast<std::uint32_t>(g.between(0, 4)), static_cast<std::uint32_t>(g.between(0, 4))};
      p += Polynomial::monomial(xy, e, g.rational(9));
    }
    if (g.coin()) p += Polynomial(xy, Rational(g.between(1, 9)));
    if (!real_infeasible(p)) continue;
    const int sign = sgn(p.constant_term().re());
    for (int k = 0; k < 20; ++k) {
      const GaussianRational value = p.evaluate(std::vector<GaussianRational>{g.rational(20), g.rational(20)});
      if (!value.is_real() || sgn(value.re()) != sign) ++bad;
    }
  }
  if (bad) o.fail("real_infeasible soundness: " + std::to_string(bad));
}

}  // namespace

int main() {
  std::printf("acceptance: exact checks, seed %llu, %d cases per property\n",
              static_cast<unsigned long long>(testgen::kSeed), kCases);
  criterion(1, "table fidelity: 64 cells of g(3)", 1, table_fidelity);
  criterion(2, "classification of g(3) reproduces the eight subalgebras", 5000, theorem);
  criterion(3, "golden condition sets of bases 2 and 3", 0, golden_conditions);
  criterion(4, "basis 1 contradiction replays to -1", 0, basis1);
  criterion(5, "terminal relations are real-infeasible", 0, real_infeasibility);
  criterion(6, "direct closure of h1-h8, 49 products each", 1000, direct_verification);
  criterion(7, "sampling oracle, 500 trials per basis, no disagreements", 5000, oracle_agreement);
  criterion(8, "closure survives embedding into g(4) and g(5)", 0, lemma);
  criterion(9, "property suites over 1000 seeded cases", 0, property_suites);
  std::printf("%s: %d failed\n", failures == 0 ? "PASS" : "FAIL", failures);
  return failures == 0 ? 0 : 1;
}
