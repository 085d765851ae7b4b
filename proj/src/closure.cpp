#include "cliffsub/closure.hpp"

#include <algorithm>

namespace cliffsub {

bool ConditionSet::all_vanish(std::span<const GaussianRational> values) const {
  return std::all_of(conditions.begin(), conditions.end(),
                     [&](const Condition& c) { return c.poly.evaluate(values).is_zero(); });
}

ConditionSet derive_conditions(const CanonicalBasis& cb, int n) {
  ConditionSet cs;
  cs.basis = cb.index;
  cs.n = n;
  cs.vars = cb.params;
  const auto vectors = symbolic_span(cb, n).vectors();
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = 0; j < vectors.size(); ++j) {
      Polynomial r = membership_residual(vectors[i] * vectors[j], cb).residual.monic();
      if (r.is_zero()) continue;
      const bool seen = std::any_of(cs.conditions.begin(), cs.conditions.end(),
                                    [&](const Condition& c) { return c.poly == r; });
      if (!seen) cs.conditions.push_back({std::move(r), {static_cast<int>(i + 1), static_cast<int>(j + 1)}});
    }
  }
  return cs;
}

std::string rule_name(Rule rule) {
  switch (rule) {
    case Rule::Constant: return "constant";
    case Rule::ZeroVariable: return "zero-variable";
    case Rule::PairCombination: return "pair-combination";
    case Rule::Linear: return "linear";
    case Rule::SquareSplit: return "square-split";
    case Rule::FactorSplit: return "factor-split";
    case Rule::Extension: return "extension";
  }
  return "?";
}

std::string outcome_name(SolveOutcome::Kind kind) {
  switch (kind) {
    case SolveOutcome::Kind::Contradiction: return "contradiction";
    case SolveOutcome::Kind::Families: return "families";
    case SolveOutcome::Kind::Unresolved: return "unresolved";
  }
  return "?";
}

bool operator==(const SolutionFamily& x, const SolutionFamily& y) {
  const bool same_ring = (!x.ring && !y.ring) || (x.ring && y.ring && *x.ring == *y.ring);
  return same_ring && x.fixed == y.fixed && x.free_parameter == y.free_parameter && x.values == y.values;
}

bool real_infeasible(const Polynomial& p, std::string* note) {
  if (!p.has_real_coefficients()) {
    if (note) *note = "not a real polynomial";
    return false;
  }
  if (p.is_zero()) return false;
  auto positive_even = [](const Polynomial& q) {
    if (sgn(q.constant_term().re()) <= 0) return false;
    for (const auto& [e, c] : q.terms()) {
      if (sgn(c.re()) <= 0) return false;
      if (std::any_of(e.begin(), e.end(), [](auto x) { return x % 2 != 0; })) return false;
    }
    return true;
  };
  return positive_even(p) || positive_even(-p);
}

namespace {

struct Work {
  Polynomial poly;
  std::size_t source;
};

struct State {
  std::vector<Work> conds;
  std::vector<Step> steps;
  std::vector<std::pair<std::size_t, Polynomial>> subs;
  std::vector<std::string> labels;
  std::vector<std::pair<Polynomial, std::size_t>> derived;
  std::vector<Polynomial> relations;
  std::optional<Polynomial> certificate;
  bool real_so_far = true;
};

// Single variable v with c*v^k (k >= 1).
std::optional<std::size_t> pure_power_variable(const Polynomial& p) {
  if (p.term_count() != 1 || p.is_constant()) return std::nullopt;
  const auto used = p.variables_used();
  if (used.size() != 1) return std::nullopt;
  return used.front();
}

std::optional<std::size_t> single_linear_variable(const Polynomial& p) {
  if (p.term_count() != 1 || p.total_degree() != 1) return std::nullopt;
  return p.variables_used().front();
}

class Solver {
 public:
  Solver(const ConditionSet& cs, const SolveOptions& options) : cs_(cs), options_(options) {}

  SolveOutcome run() {
    State root;
    for (std::size_t k = 0; k < cs_.conditions.size(); ++k) root.conds.push_back({cs_.conditions[k].poly, k});
    live_branches_ = 1;
    explore(std::move(root));

    SolveOutcome out;
    out.branches = std::move(branches_);
    for (auto& f : families_) {
      if (std::find(out.families.begin(), out.families.end(), f) == out.families.end())
        out.families.push_back(std::move(f));
    }
    const bool unresolved = std::any_of(out.branches.begin(), out.branches.end(),
                                        [](const Branch& b) { return b.end == Branch::End::Unresolved; });
    if (unresolved) {
      out.kind = SolveOutcome::Kind::Unresolved;
    } else if (!out.families.empty()) {
      out.kind = SolveOutcome::Kind::Families;
    } else {
      out.kind = SolveOutcome::Kind::Contradiction;
    }
    return out;
  }

 private:
  std::string label(const State& s) const {
    std::string out;
    for (const auto& l : s.labels) out += (out.empty() ? "" : ", ") + l;
    return out.empty() ? "root" : out;
  }

  void end_unresolved(State& s, std::string note) {
    Branch b;
    b.label = label(s);
    b.steps = std::move(s.steps);
    b.end = Branch::End::Unresolved;
    for (const auto& w : s.conds) b.remaining.push_back(w.poly);
    b.note = std::move(note);
    branches_.push_back(std::move(b));
  }

  // Substitute var := value in every working condition, renormalize, dedupe.
  bool substitute(State& s, Step step, std::size_t var, Polynomial value) {
    if (!value.has_real_coefficients()) s.real_so_far = false;
    std::vector<Work> next;
    for (auto& w : s.conds) {
      Polynomial p = w.poly.substitute(var, value).monic();
      if (p.is_zero()) continue;
      if (p.term_count() > options_.max_terms) return false;
      const bool seen = std::any_of(next.begin(), next.end(), [&](const Work& x) { return x.poly == p; });
      if (!seen) next.push_back({std::move(p), w.source});
    }
    s.conds = std::move(next);
    step.var = cs_.vars.name(var);
    step.value = value;
    s.steps.push_back(std::move(step));
    s.subs.emplace_back(var, std::move(value));
    return true;
  }

  void note_relation(State& s, const Polynomial& p) {
    s.relations.push_back(p);
    if (s.real_so_far && !s.certificate && real_infeasible(p)) s.certificate = p;
  }

  void explore(State s) {
    for (;;) {
      if (overflow_) {
        overflow_ = false;
        return end_unresolved(s, "polynomial size budget exhausted");
      }
      if (++steps_taken_ > options_.max_steps) return end_unresolved(s, "step budget exhausted");

      // Constant: contradiction.
      for (const auto& w : s.conds) {
        if (w.poly.is_constant()) {
          Step st{Rule::Constant, {w.source}, w.poly, std::nullopt, Polynomial()};
          s.steps.push_back(std::move(st));
          Branch b;
          b.label = label(s);
          b.steps = std::move(s.steps);
          b.end = Branch::End::Contradiction;
          b.contradiction_source = w.source;
          b.derived = std::move(s.derived);
          branches_.push_back(std::move(b));
          return;
        }
      }
      if (s.conds.empty()) return finish(s, std::nullopt);
      if (apply_zero_variable(s) || apply_pair(s) || apply_linear(s)) continue;
      if (s.conds.empty()) continue;
      if (auto split = find_square(s)) return do_split(std::move(s), *split);
      if (auto factor = find_factor(s)) return do_factor(std::move(s), *factor);
      return try_extension(s);
    }
  }

  bool apply_zero_variable(State& s) {
    for (const auto& w : s.conds) {
      if (auto v = pure_power_variable(w.poly)) {
        Step st{Rule::ZeroVariable, {w.source}, w.poly, std::nullopt, Polynomial()};
        if (!substitute(s, std::move(st), *v, Polynomial(cs_.vars, 0))) return bail(s);
        return true;
      }
    }
    return false;
  }

  // Among all pairs whose sum or difference is c*v, eliminate the highest
  // indexed v (first pair wins ties), matching apply_linear's preference.
  bool apply_pair(State& s) {
    struct Candidate {
      std::size_t var, a, b;
      Polynomial combo;
    };
    std::optional<Candidate> best;
    for (std::size_t a = 0; a < s.conds.size(); ++a) {
      for (std::size_t b = a + 1; b < s.conds.size(); ++b) {
        for (int sign : {-1, 1}) {
          Polynomial combo = sign < 0 ? s.conds[a].poly - s.conds[b].poly : s.conds[a].poly + s.conds[b].poly;
          auto v = single_linear_variable(combo);
          if (v && (!best || *v > best->var)) best = Candidate{*v, a, b, std::move(combo)};
        }
      }
    }
    if (!best) return false;
    Step st{Rule::PairCombination, {s.conds[best->a].source, s.conds[best->b].source}, best->combo, std::nullopt,
            Polynomial()};
    if (!substitute(s, std::move(st), best->var, Polynomial(cs_.vars, 0))) return bail(s);
    return true;
  }

  bool apply_linear(State& s) {
    for (const auto& w : s.conds) {
      const auto used = w.poly.variables_used();
      for (auto it = used.rbegin(); it != used.rend(); ++it) {
        if (w.poly.degree_in(*it) != 1) continue;
        const auto parts = w.poly.coefficients_in(*it);
        if (!parts[1].is_constant()) continue;
        const GaussianRational c = parts[1].constant_term();
        Polynomial value = parts[0] * (-*c.inverse());
        Step st{Rule::Linear, {w.source}, w.poly, std::nullopt, Polynomial()};
        if (!substitute(s, std::move(st), *it, std::move(value))) return bail(s);
        return true;
      }
    }
    return false;
  }

  // Flags a branch whose polynomials exceeded the size budget; explore()
  // turns it into an Unresolved end on its next iteration.
  bool bail(State&) {
    overflow_ = true;
    return true;
  }

  struct Square {
    std::size_t index;
    std::size_t var;
    GaussianRational target;  // v^2 = target
  };

  std::optional<Square> find_square(const State& s) const {
    for (std::size_t k = 0; k < s.conds.size(); ++k) {
      const Polynomial& p = s.conds[k].poly;
      const auto used = p.variables_used();
      if (used.size() != 1) continue;
      const auto parts = p.coefficients_in(used.front());
      if (parts.size() != 3 || !parts[1].is_zero()) continue;
      const GaussianRational c = parts[2].constant_term();
      return Square{k, used.front(), -parts[0].constant_term() / c};
    }
    return std::nullopt;
  }

  void do_split(State s, const Square& sq) {
    const Work w = s.conds[sq.index];
    const auto roots = square_roots(sq.target);
    if (roots.empty()) {
      return end_unresolved(s, cs_.vars.name(sq.var) + "^2 = " + sq.target.to_string() +
                                   " has no root in the Gaussian rationals");
    }
    note_relation(s, w.poly);
    live_branches_ += roots.size() - 1;
    if (live_branches_ > options_.max_branches) return end_unresolved(s, "branch budget exhausted");
    for (const auto& root : roots) {
      State child = s;
      Step st{Rule::SquareSplit, {w.source}, w.poly, std::nullopt, Polynomial()};
      child.labels.push_back(cs_.vars.name(sq.var) + "=" + root.to_string());
      if (!substitute(child, std::move(st), sq.var, Polynomial(cs_.vars, root))) overflow_ = true;
      explore(std::move(child));
    }
  }

  struct Factor {
    std::size_t index;
    std::size_t var;
    Polynomial cofactor;  // condition = var^k * cofactor
  };

  // First condition with a variable dividing every term; the highest such
  // variable is split off.
  std::optional<Factor> find_factor(const State& s) const {
    for (std::size_t k = 0; k < s.conds.size(); ++k) {
      const Polynomial& p = s.conds[k].poly;
      const auto used = p.variables_used();
      for (auto it = used.rbegin(); it != used.rend(); ++it) {
        std::uint32_t content = p.degree_in(*it);
        for (const auto& [e, c] : p.terms()) content = std::min(content, e[*it]);
        if (content == 0) continue;
        Polynomial q(cs_.vars, 0);
        for (const auto& [e, c] : p.terms()) {
          Exponents reduced = e;
          reduced[*it] -= content;
          q += Polynomial::monomial(cs_.vars, std::move(reduced), c);
        }
        return Factor{k, *it, q.monic()};
      }
    }
    return std::nullopt;
  }

  void do_factor(State s, const Factor& f) {
    if (++live_branches_ > options_.max_branches) return end_unresolved(s, "branch budget exhausted");
    const Work w = s.conds[f.index];
    const std::string name = cs_.vars.name(f.var);

    State zero = s;
    zero.labels.push_back(name + "=0");
    Step st{Rule::FactorSplit, {w.source}, w.poly, std::nullopt, Polynomial()};
    if (!substitute(zero, std::move(st), f.var, Polynomial(cs_.vars, 0))) overflow_ = true;
    explore(std::move(zero));

    State rest = std::move(s);
    rest.labels.push_back(f.cofactor.to_string() + "=0");
    rest.steps.push_back(Step{Rule::FactorSplit, {w.source}, w.poly, std::nullopt, Polynomial()});
    const std::size_t id = cs_.conditions.size() + rest.derived.size();
    rest.derived.emplace_back(f.cofactor, rest.steps.size());
    rest.conds[f.index] = Work{f.cofactor, id};
    explore(std::move(rest));
  }

  struct Root {
    std::size_t free_var;
    std::size_t root_var;
    Polynomial relation;  // working condition
    Polynomial s_squared;  // in the ring variable a
  };

  std::optional<Root> find_extension(const State& s) const {
    std::vector<std::size_t> used;
    for (const auto& w : s.conds) {
      for (auto v : w.poly.variables_used()) {
        if (std::find(used.begin(), used.end(), v) == used.end()) used.push_back(v);
      }
    }
    if (used.size() != 2) return std::nullopt;
    std::sort(used.begin(), used.end());
    for (const auto& w : s.conds) {
      for (int pick : {1, 0}) {
        const std::size_t root_var = used[pick];
        const std::size_t free_var = used[1 - pick];
        const auto parts = w.poly.coefficients_in(root_var);
        if (parts.size() != 3 || !parts[1].is_zero() || !parts[2].is_constant()) continue;
        if (!parts[0].depends_on(free_var)) continue;
        const GaussianRational c = parts[2].constant_term();
        Polynomial q = parts[0] * (-*c.inverse());
        std::vector<std::optional<std::size_t>> mapping(cs_.vars.size());
        mapping[free_var] = 0;
        return Root{free_var, root_var, w.poly, q.remap(ExtensionRing::parameter_variables(), mapping)};
      }
    }
    return std::nullopt;
  }

  void try_extension(State& s) {
    auto root = find_extension(s);
    if (!root) return end_unresolved(s, "no rule applies");
    auto ring = ExtensionRing::standard();
    if (!(ring->s_squared() == root->s_squared)) ring = std::make_shared<const ExtensionRing>(root->s_squared);
    const ExtensionElement one(1);
    std::vector<ExtensionElement> point(cs_.vars.size());
    point[root->free_var] = ExtensionElement::parameter(ring);
    point[root->root_var] = ExtensionElement::root(ring);
    for (const auto& w : s.conds) {
      if (!w.poly.evaluate<ExtensionElement>(point, one).is_zero())
        return end_unresolved(s, "remaining system is not a single square-root relation");
    }
    Step st{Rule::Extension, {}, root->relation, std::nullopt, Polynomial()};
    for (const auto& w : s.conds) st.sources.push_back(w.source);
    s.steps.push_back(std::move(st));
    note_relation(s, root->relation);
    s.conds.clear();
    finish(s, Extension{root->free_var, root->root_var, ring});
  }

  struct Extension {
    std::size_t free_var;
    std::size_t root_var;
    std::shared_ptr<const ExtensionRing> ring;
  };

  void finish(State& s, std::optional<Extension> ext) {
    const std::size_t nv = cs_.vars.size();
    std::vector<bool> assigned(nv, false);
    for (const auto& [v, val] : s.subs) assigned[v] = true;
    std::vector<std::size_t> open;
    for (std::size_t v = 0; v < nv; ++v) {
      if (!assigned[v] && !(ext && (v == ext->free_var || v == ext->root_var))) open.push_back(v);
    }
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::size_t free_var = ext ? ext->free_var : kNone;
    if (!ext && open.size() == 1) {
      free_var = open.front();
      open.clear();
    }
    if (!open.empty()) return end_unresolved(s, "solution set has more than one free parameter");

    // Back-substitute so every value depends only on the free/root variables.
    std::vector<std::optional<Polynomial>> resolved(nv);
    for (auto it = s.subs.rbegin(); it != s.subs.rend(); ++it) {
      Polynomial val = it->second;
      for (std::size_t u = 0; u < nv; ++u) {
        if (resolved[u] && val.depends_on(u)) val = val.substitute(u, *resolved[u]);
      }
      resolved[it->first] = std::move(val);
    }

    Branch b;
    b.label = label(s);
    b.steps = s.steps;
    b.end = Branch::End::Family;
    branches_.push_back(std::move(b));

    const std::vector<int> signs = ext ? std::vector<int>{1, -1} : std::vector<int>{1};
    for (int sign : signs) {
      SolutionFamily f;
      f.branch = label(s);
      f.ring = ext ? ext->ring : nullptr;
      f.relations = s.relations;
      f.real_certificate = s.certificate;
      f.steps = s.steps;
      std::vector<ExtensionElement> point(nv);
      if (free_var != kNone) {
        f.free_parameter = cs_.vars.name(free_var);
        point[free_var] = ExtensionElement(f.ring, ExtensionRing::standard()->parameter(), Polynomial());
      }
      if (ext) {
        f.root_variable = cs_.vars.name(ext->root_var);
        point[ext->root_var] = sign > 0 ? ExtensionElement::root(f.ring) : -ExtensionElement::root(f.ring);
        f.branch += (f.branch.empty() ? "" : ", ") + f.root_variable.value() + (sign > 0 ? "=+s" : "=-s");
      }
      const ExtensionElement one(1);
      for (std::size_t v = 0; v < nv; ++v) {
        ExtensionElement value = resolved[v] ? resolved[v]->evaluate<ExtensionElement>(point, one) : point[v];
        if (value.p1().is_zero() && value.p0().is_constant())
          f.fixed.emplace_back(cs_.vars.name(v), value.p0().constant_term());
        f.values.push_back(std::move(value));
      }
      families_.push_back(std::move(f));
    }
  }

  const ConditionSet& cs_;
  const SolveOptions& options_;
  std::vector<Branch> branches_;
  std::vector<SolutionFamily> families_;
  std::size_t steps_taken_ = 0;
  std::size_t live_branches_ = 0;
  bool overflow_ = false;
};

}  // namespace

SolveOutcome solve(const ConditionSet& cs, const SolveOptions& options) { return Solver(cs, options).run(); }

GaussianRational replay_contradiction(const ConditionSet& cs, const Branch& branch) {
  if (branch.end != Branch::End::Contradiction) throw std::invalid_argument("replay: not a contradiction branch");
  Polynomial p;
  std::size_t first_step = 0;
  if (branch.contradiction_source < cs.conditions.size()) {
    p = cs.conditions[branch.contradiction_source].poly;
  } else {
    const auto& [poly, at] = branch.derived.at(branch.contradiction_source - cs.conditions.size());
    p = poly;
    first_step = at;
  }
  for (std::size_t k = first_step; k < branch.steps.size(); ++k) {
    const Step& st = branch.steps[k];
    if (st.var) p = p.substitute(*st.var, st.value);
  }
  if (!p.is_constant() || p.is_zero()) throw std::logic_error("replay did not end in a nonzero constant");
  return p.constant_term();
}

bool family_satisfies(const ConditionSet& cs, const SolutionFamily& family) {
  const ExtensionElement one(1);
  return std::all_of(cs.conditions.begin(), cs.conditions.end(), [&](const Condition& c) {
    return c.poly.evaluate<ExtensionElement>(family.values, one).is_zero();
  });
}

std::optional<std::pair<int, int>> first_escaping_product_rref(std::span<const MultiVector<GaussianRational>> vectors) {
  SpanOracle oracle(vectors);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = 0; j < vectors.size(); ++j) {
      if (!oracle.contains(vectors[i] * vectors[j])) return std::pair{static_cast<int>(i + 1), static_cast<int>(j + 1)};
    }
  }
  return std::nullopt;
}

}  // namespace cliffsub
