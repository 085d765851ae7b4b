#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cliffsub/gaussian.hpp"

namespace cliffsub {

/// Ordered, immutable list of variable names shared by a family of polynomials.
///
/// Declaration order is the variable order for graded-lex comparison: the
/// first declared variable is the largest. A default-constructed set is empty
/// and is compatible with every other set (constants carry no variables).
class Variables {
 public:
  Variables() = default;
  explicit Variables(std::vector<std::string> names);

  std::size_t size() const { return names_ ? names_->size() : 0; }
  bool empty() const { return size() == 0; }
  const std::string& name(std::size_t index) const { return names_->at(index); }
  std::span<const std::string> names() const;
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Variables& a, const Variables& b);

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic "greater": higher total degree first, ties broken
/// lexicographically with the first variable most significant.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over Q(I).
///
/// Terms live in a map sorted by GrlexGreater, so the first entry is the
/// leading term and equality is structural. Zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Exponents, GaussianRational, GrlexGreater>;

  Polynomial() = default;
  Polynomial(GaussianRational c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(GaussianRational(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(Variables vars, GaussianRational c);

  static Polynomial variable(const Variables& vars, std::size_t index);
  static Polynomial variable(const Variables& vars, std::string_view name);
  static Polynomial monomial(const Variables& vars, Exponents exponents, GaussianRational c);

  const Variables& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero if absent).
  GaussianRational constant_term() const;
  /// Coefficient of the leading term; throws on the zero polynomial.
  const GaussianRational& leading_coefficient() const;
  std::uint32_t total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;
  bool depends_on(std::size_t var) const { return degree_in(var) > 0; }
  /// Indices of variables that occur, ascending.
  std::vector<std::size_t> variables_used() const;
  /// True iff every coefficient has zero imaginary part.
  bool has_real_coefficients() const;

  /// Scaled so the leading coefficient is 1; zero stays zero.
  Polynomial monic() const;

  /// Replace `var` by `replacement` everywhere. The replacement must not
  /// mention `var` (throws std::invalid_argument otherwise).
  Polynomial substitute(std::size_t var, const Polynomial& replacement) const;
  Polynomial substitute(std::string_view var, const Polynomial& replacement) const;

  /// Coefficient polynomials of powers of var: result[d] is the coefficient of var^d.
  std::vector<Polynomial> coefficients_in(std::size_t var) const;

  /// Evaluate with one value per declared variable. S must be constructible
  /// via `one * GaussianRational` and support + and *.
  template <class S>
  S evaluate(std::span<const S> values, const S& one) const;
  GaussianRational evaluate(std::span<const GaussianRational> values) const;

  /// Same polynomial over a different variable set; `mapping[i]` is the index
  /// in `target` of this polynomial's variable i (or nullopt if the variable
  /// must not occur).
  Polynomial remap(const Variables& target, std::span<const std::optional<std::size_t>> mapping) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const GaussianRational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const GaussianRational& c) { return a *= c; }
  friend Polynomial operator*(const GaussianRational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(std::uint32_t e) const;

  /// Graded-lex rendering with explicit "*" and "^", e.g. "a37^2 + a47^2 + 1".
  std::string to_string() const;
  /// The condition p = 0 written as "<non-constant terms> = <-constant>".
  std::string equation_string() const;

 private:
  void adopt(const Variables& other);
  void add_term(const Exponents& e, const GaussianRational& c);

  Variables vars_;
  Terms terms_;
};

/// Text of a single coefficient in front of a symbol: sign flag plus magnitude,
/// with compound values parenthesized. Shared by every renderer.
struct CoefficientText {
  bool negative = false;
  bool unit = false;  // magnitude is exactly 1
  std::string magnitude;
};
CoefficientText coefficient_text(const GaussianRational& c);

template <class S>
S Polynomial::evaluate(std::span<const S> values, const S& one) const {
  if (values.size() < vars_.size()) throw std::invalid_argument("evaluate: too few values");
  S total = one * GaussianRational(0);
  for (const auto& [exps, coeff] : terms_) {
    S term = one * coeff;
    for (std::size_t v = 0; v < exps.size(); ++v) {
      for (std::uint32_t k = 0; k < exps[v]; ++k) term = term * values[v];
    }
    total = total + term;
  }
  return total;
}

}  // namespace cliffsub
