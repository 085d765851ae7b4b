#pragma once

#include <memory>
#include <string>

#include "cliffsub/polynomial.hpp"

namespace cliffsub {

/// The ring Q(I)[a][s] / (s^2 - q(a)) for one fixed polynomial q in a single
/// parameter named "a". The one-parameter subalgebra families live over
/// q(a) = -1 - a^2, i.e. s = sqrt(-1 - a^2).
class ExtensionRing {
 public:
  /// s^2 = q(a); q must be a polynomial over parameter_variables().
  explicit ExtensionRing(Polynomial s_squared);

  /// The ring with s^2 = -1 - a^2.
  static std::shared_ptr<const ExtensionRing> standard();
  static const Variables& parameter_variables();

  const Polynomial& s_squared() const { return s_squared_; }
  const Polynomial& parameter() const { return parameter_; }

  /// "s^2 = -a^2 - 1"
  std::string relation_string() const;

  friend bool operator==(const ExtensionRing& x, const ExtensionRing& y) { return x.s_squared_ == y.s_squared_; }

 private:
  Polynomial s_squared_;
  Polynomial parameter_;
};

/// Element p0(a) + p1(a)*s, always reduced to s-degree < 2.
///
/// An element whose s-part is zero carries no ring (it is a plain
/// polynomial in a) and combines with elements of any ring; elements with
/// nonzero s-parts from two different rings cannot be combined.
class ExtensionElement {
 public:
  ExtensionElement() = default;
  ExtensionElement(GaussianRational c);  // NOLINT(google-explicit-constructor)
  ExtensionElement(long c) : ExtensionElement(GaussianRational(c)) {}  // NOLINT(google-explicit-constructor)
  ExtensionElement(std::shared_ptr<const ExtensionRing> ring, Polynomial p0, Polynomial p1);

  /// The parameter a, as an element of `ring`.
  static ExtensionElement parameter(std::shared_ptr<const ExtensionRing> ring);
  /// The square root s, as an element of `ring`.
  static ExtensionElement root(std::shared_ptr<const ExtensionRing> ring);

  const Polynomial& p0() const { return p0_; }
  const Polynomial& p1() const { return p1_; }
  const std::shared_ptr<const ExtensionRing>& ring() const { return ring_; }

  bool is_zero() const { return p0_.is_zero() && p1_.is_zero(); }
  bool is_one() const { return p1_.is_zero() && p0_.is_constant() && p0_.constant_term().is_one(); }

  /// Value at a = alpha, s = sigma; throws unless sigma^2 = q(alpha).
  GaussianRational evaluate(const GaussianRational& alpha, const GaussianRational& sigma) const;

  ExtensionElement operator-() const;
  ExtensionElement& operator+=(const ExtensionElement& o);
  ExtensionElement& operator-=(const ExtensionElement& o);
  ExtensionElement& operator*=(const GaussianRational& c);

  friend ExtensionElement operator+(ExtensionElement x, const ExtensionElement& y) { return x += y; }
  friend ExtensionElement operator-(ExtensionElement x, const ExtensionElement& y) { return x -= y; }
  friend ExtensionElement operator*(const ExtensionElement& x, const ExtensionElement& y);
  friend ExtensionElement operator*(ExtensionElement x, const GaussianRational& c) { return x *= c; }
  friend ExtensionElement operator*(const GaussianRational& c, ExtensionElement x) { return x *= c; }
  friend bool operator==(const ExtensionElement& x, const ExtensionElement& y);

  /// "a + s", "-s", "(a^2 + 1)*s", ...
  std::string to_string() const;

 private:
  void unify(const ExtensionElement& o);
  void normalize();

  std::shared_ptr<const ExtensionRing> ring_;
  Polynomial p0_;
  Polynomial p1_;
};

/// Multiplication is the only operation that can raise the s-degree:
/// (p0 + p1 s)(r0 + r1 s) = p0 r0 + p1 r1 q(a) + (p0 r1 + p1 r0) s.
ExtensionElement ext_mul(const ExtensionElement& x, const ExtensionElement& y);

}  // namespace cliffsub
