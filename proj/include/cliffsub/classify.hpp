#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "cliffsub/closure.hpp"

namespace cliffsub {

/// Largest n accepted by classify(); n = 4 is exploratory.
inline constexpr int kMaxClassifyN = 4;

struct FamilyReport {
  SolutionFamily family;
  /// The basis vectors with the family's values put in, over the extension ring.
  std::vector<MultiVector<ExtensionElement>> subalgebra;
  /// Last split or extension relation of the branch.
  std::optional<Polynomial> terminal_relation;
  bool closed = false;
  bool certified = false;
};

struct BasisReport {
  CanonicalBasis basis;
  ConditionSet conditions;
  SolveOutcome outcome;
  std::vector<FamilyReport> families;
};

struct ClassificationSummary {
  int one_parameter_families = 0;
  int isolated = 0;
  int contradictions = 0;
  int unresolved = 0;
  std::vector<int> empty_bases;
  std::vector<int> unresolved_bases;
};

struct ClassificationResult {
  int n = 0;
  std::vector<BasisReport> bases;
  ClassificationSummary summary;

  /// "4 one-parameter families, 4 isolated subalgebras; bases 1,4,5,6,7,8: none"
  std::string summary_line() const;
  /// Every family in basis order.
  std::vector<const FamilyReport*> all_families() const;
};

/// Classify the (2^n - 1)-dimensional subalgebras of g(n). Throws
/// std::out_of_range unless 1 <= n <= kMaxClassifyN.
ClassificationResult classify(int n);

// ---------------------------------------------------------------------------
// The eight subalgebras of g(3) in closed form.

struct Fixture {
  std::string name;  // "h1" .. "h8"
  bool one_parameter = false;
  std::vector<MultiVector<ExtensionElement>> vectors;
};

/// h1..h4 over the standard extension ring, h5..h8 with constant coefficients.
const std::vector<Fixture>& theorem_fixtures();
/// Fixture by name; nullptr if unknown.
const Fixture* find_fixture(std::string_view name);

struct Escape {
  int i = 0;
  int j = 0;
  std::string product;
  std::string residual;
};

/// First escaping product, rendered; nullopt when the vectors are closed.
template <CliffordScalar S>
std::optional<Escape> find_escape(std::span<const MultiVector<S>> vectors) {
  auto e = first_escaping_product<S>(vectors);
  if (!e) return std::nullopt;
  return Escape{e->i, e->j, format_multivector(e->product), e->residual.to_string()};
}

struct FixtureCheck {
  std::string name;
  bool closed = false;
  std::optional<Escape> escape;
  /// Branch label of the matching family of classify(3).
  std::optional<std::string> matched_branch;
  std::optional<int> matched_basis;

  bool ok() const { return closed && matched_branch.has_value(); }
};

FixtureCheck check_fixture(const Fixture& fixture, const ClassificationResult& g3);

struct TheoremReport {
  std::vector<FixtureCheck> checks;
  bool ok() const;
};

/// Check every fixture against `g3`, which must be classify(3).
TheoremReport verify_theorem(const ClassificationResult& g3);
TheoremReport verify_theorem();

struct SignPattern {
  std::vector<int> signs;
  bool closed = false;
  /// Fixture whose printed sign pattern this is.
  std::optional<std::string> fixture;
};

/// {1, e1 + t1*k, e2 + a*k, e3 + t2*s*k, i + t3*s*k, j + t4*a*k, z} over all
/// 16 sign vectors t, symbolically or at a = alpha with s its principal root.
std::vector<SignPattern> one_parameter_sign_patterns(const std::optional<GaussianRational>& alpha = std::nullopt);
/// {1, e1, e2 + t1*j, e3 + t2*I*j, i + t3*I*j, k, z} over all 8 sign vectors.
std::vector<SignPattern> isolated_sign_patterns();

// ---------------------------------------------------------------------------
// Embedding into larger algebras.

struct ParameterPoint {
  GaussianRational a;
  GaussianRational s;  // s^2 = -1 - a^2
};

/// a with s the principal square root of -1 - a^2, if that is a Gaussian rational.
std::optional<ParameterPoint> parameter_point(const GaussianRational& a);
/// a = 0 (s = I) and a = 5/4*I (s = 3/4).
std::vector<ParameterPoint> lemma_points();

std::vector<MultiVector<GaussianRational>> instantiate_fixture(const Fixture& fixture, const ParameterPoint& point);

struct LemmaReport {
  std::string family;
  ParameterPoint point;
  int k = 0;
  bool closed_in_g3 = false;
  bool closed_embedded = false;
  std::optional<std::pair<int, int>> escape;

  bool ok() const { return closed_in_g3 && closed_embedded; }
};

/// Embed the fixture at `point` into g(3 + k) and check closure there by
/// elimination. The point is ignored for isolated fixtures.
LemmaReport verify_lemma(const Fixture& fixture, const ParameterPoint& point, int k);

// ---------------------------------------------------------------------------
// Sampling oracle.

/// Small Gaussian rationals from a seeded 64-bit Mersenne twister. Bounded
/// integers use rejection sampling so streams do not depend on the standard
/// library's distributions.
class GaussianSampler {
 public:
  explicit GaussianSampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  long between(long lo, long hi);
  /// Numerator in [-10, 10], denominator in [1, 10]; a value from
  /// {0, 1, -1, I, -I} half the time.
  GaussianRational next();

 private:
  std::mt19937_64 engine_;
};

struct OracleVerdict {
  bool conditions_vanish = false;
  bool closed = false;
  bool agrees() const { return conditions_vanish == closed; }
};

/// Conditions of `cs` at `values` against elimination-based closure of the
/// instantiated basis.
OracleVerdict oracle_check(const CanonicalBasis& cb, const ConditionSet& cs, std::span<const GaussianRational> values);

struct OracleReport {
  int basis = 0;
  int n = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t agreements = 0;
  std::size_t closure_hits = 0;
  /// Trial indices where the two checks disagree.
  std::vector<std::size_t> disagreements;
};

/// Throws std::out_of_range for a bad basis index or trials == 0.
OracleReport sampling_oracle(int basis, std::size_t trials, std::uint64_t seed, int n = 3);

}  // namespace cliffsub
