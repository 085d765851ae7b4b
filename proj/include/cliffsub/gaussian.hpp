#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cliffsub {

using Rational = mpq_class;

/// Thrown on any exact division by zero in the scalar tower.
class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Exact element re + im*I of Q(I), I^2 = -1.
///
/// Both parts are kept canonical (lowest terms, positive denominator); GMP
/// canonicalizes every arithmetic result, and the constructors canonicalize
/// their inputs.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im = 0);

  static GaussianRational I() { return {0, 1}; }
  /// num/den + 0*I; den must be nonzero.
  static GaussianRational fraction(long num, long den);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// re^2 + im^2.
  Rational norm() const { return re_ * re_ + im_ * im_; }
  std::optional<GaussianRational> inverse() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  /// Total order (re first, then im); for deterministic containers only.
  friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b);

  /// "p/q", "r/s*I", "p/q + r/s*I"; unit imaginary parts print as "I".
  std::string to_string() const;
  /// Inverse of to_string; also accepts surrounding whitespace and "i".
  static std::optional<GaussianRational> parse(std::string_view text);

 private:
  Rational re_;
  Rational im_;
};

/// Division that reports a zero divisor as an absent value instead of throwing.
std::optional<GaussianRational> checked_div(const GaussianRational& x, const GaussianRational& y);

/// Exact square root of a nonnegative rational, if one exists in Q.
std::optional<Rational> rational_sqrt(const Rational& q);

/// All square roots of c inside Q(I): empty, {0}, or {r, -r} with r the root
/// whose real part is positive (or, for purely imaginary r, imaginary part positive).
std::vector<GaussianRational> square_roots(const GaussianRational& c);

}  // namespace cliffsub
