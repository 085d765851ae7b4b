#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cliffsub/extension.hpp"
#include "cliffsub/subspace.hpp"

namespace cliffsub {

/// A polynomial that must vanish, with the ordered product a_i a_j (1-based)
/// whose membership residual first produced it.
struct Condition {
  Polynomial poly;
  std::pair<int, int> from_product;
};

/// Closure conditions of one canonical basis, monic and deduplicated, in the
/// order the products a_1a_1, a_1a_2, ..., a_{N-1}a_{N-1} first produce them.
struct ConditionSet {
  int basis = 0;
  int n = 0;
  Variables vars;
  std::vector<Condition> conditions;

  /// True iff every condition evaluates to zero at `values`.
  bool all_vanish(std::span<const GaussianRational> values) const;
};

ConditionSet derive_conditions(const CanonicalBasis& cb, int n);

enum class Rule {
  Constant,         // nonzero constant: contradiction
  ZeroVariable,     // c*v^k = 0: v = 0
  PairCombination,  // p - q or p + q equals c*v: v = 0
  Linear,           // c*v + r with r free of v: v = -r/c
  SquareSplit,      // c*v^2 + d: branch over the square roots of -d/c
  FactorSplit,      // v^k * q: branch into v = 0 and q = 0
  Extension,        // c*w^2 + f(v): adjoin s with s^2 = -f(a)/c
};

std::string rule_name(Rule rule);

/// One rule application. Substituting rules record var := value.
struct Step {
  Rule rule = Rule::Constant;
  std::vector<std::size_t> sources;  // ConditionSet::conditions, then Branch::derived
  Polynomial condition;              // working form that triggered the rule
  std::optional<std::string> var;
  Polynomial value;
};

struct SolutionFamily {
  std::string branch;
  /// Variables whose value is a constant, in declaration order.
  std::vector<std::pair<std::string, GaussianRational>> fixed;
  /// Original name of the variable renamed to the free parameter "a".
  std::optional<std::string> free_parameter;
  /// Variable equal to +s or -s.
  std::optional<std::string> root_variable;
  /// Null for isolated solutions and for families without a square root.
  std::shared_ptr<const ExtensionRing> ring;
  /// Value of every variable, in declaration order.
  std::vector<ExtensionElement> values;
  /// Split and extension relations met on the way, in working form.
  std::vector<Polynomial> relations;
  /// A relation of this branch with no real zero, reached through real
  /// substitutions only; certifies that the branch has no real point.
  std::optional<Polynomial> real_certificate;
  std::vector<Step> steps;

  bool is_isolated() const { return !free_parameter.has_value(); }
  /// Same subalgebra family: identical values over the identical relation.
  friend bool operator==(const SolutionFamily& x, const SolutionFamily& y);
};

struct Branch {
  enum class End { Contradiction, Family, Unresolved };

  std::string label;
  std::vector<Step> steps;
  End end = End::Unresolved;
  /// Condition that collapsed to a nonzero constant (Contradiction only).
  /// Indices past the ConditionSet refer to `derived`.
  std::size_t contradiction_source = 0;
  /// Cofactors introduced by FactorSplit, with the number of steps taken
  /// before each was introduced.
  std::vector<std::pair<Polynomial, std::size_t>> derived;
  /// Remaining system (Unresolved only).
  std::vector<Polynomial> remaining;
  std::string note;
};

struct SolveOutcome {
  enum class Kind { Contradiction, Families, Unresolved };

  Kind kind = Kind::Unresolved;
  std::vector<Branch> branches;
  std::vector<SolutionFamily> families;
};

std::string outcome_name(SolveOutcome::Kind kind);

struct SolveOptions {
  std::size_t max_branches = 64;
  std::size_t max_steps = 4096;
  std::size_t max_terms = 512;
};

/// Substitution and case-split solver. Rules are tried in the order of the
/// Rule enumeration; every rule preserves the solution set of the branch.
SolveOutcome solve(const ConditionSet& cs, const SolveOptions& options = {});

/// Apply the substitutions of a contradiction branch to its source condition.
/// Returns the resulting constant; throws if something non-constant remains.
GaussianRational replay_contradiction(const ConditionSet& cs, const Branch& branch);

/// True iff every condition of cs vanishes on the family, identically in a.
bool family_satisfies(const ConditionSet& cs, const SolutionFamily& family);

/// Sound positivity test for the real zero set of p: true when p (or -p) has
/// real coefficients, only even exponents, positive coefficients and a
/// positive constant term. False when that rule does not apply.
bool real_infeasible(const Polynomial& p, std::string* note = nullptr);

template <CliffordScalar S>
struct EscapingProduct {
  int i = 0;
  int j = 0;
  MultiVector<S> product;
  S residual{};
};

/// First ordered product a_i a_j (1-based) that leaves the span, using forced
/// echelon coefficients. Throws std::invalid_argument if the vectors are not
/// in canonical echelon shape.
template <CliffordScalar S>
std::optional<EscapingProduct<S>> first_escaping_product(std::span<const MultiVector<S>> vectors);

template <CliffordScalar S>
bool check_closure_concrete(std::span<const MultiVector<S>> vectors) {
  return !first_escaping_product<S>(vectors).has_value();
}

/// Closure by exact elimination; works for any list of vectors.
std::optional<std::pair<int, int>> first_escaping_product_rref(std::span<const MultiVector<GaussianRational>> vectors);

// ---------------------------------------------------------------------------

template <CliffordScalar S>
std::optional<EscapingProduct<S>> first_escaping_product(std::span<const MultiVector<S>> vectors) {
  auto span = detect_echelon<S>(vectors);
  if (!span) throw std::invalid_argument("check_closure_concrete: vectors are not in canonical echelon shape");
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = 0; j < vectors.size(); ++j) {
      MultiVector<S> prod = vectors[i] * vectors[j];
      Membership<S> m = membership_residual(prod, *span);
      if (!m.member()) {
        return EscapingProduct<S>{static_cast<int>(i + 1), static_cast<int>(j + 1), std::move(prod),
                                  std::move(m.residual)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace cliffsub
