#include "doctest.h"
#include "gen.hpp"

#include "cliffsub/extension.hpp"

using namespace cliffsub;
using testgen::Gen;
using testgen::kCases;

namespace {

// Quotient by the textbook formula on raw rationals.
GaussianRational reference_div(const GaussianRational& x, const GaussianRational& y) {
  const Rational a = x.re(), b = x.im(), c = y.re(), d = y.im();
  const Rational den = c * c + d * d;
  return {(a * c + b * d) / den, (b * c - a * d) / den};
}

const GaussianRational I = GaussianRational::I();

}  // namespace

TEST_CASE("gaussian rational arithmetic") {
  const GaussianRational one_plus_i(1, 1), one_minus_i(1, -1);
  CHECK(one_plus_i / one_minus_i == I);
  CHECK(reference_div(one_plus_i, one_minus_i) == I);
  CHECK(I * I == GaussianRational(-1));
  CHECK(GaussianRational(Rational(2, 4)).re() == Rational(1, 2));
  CHECK(GaussianRational::fraction(6, -4) == GaussianRational(Rational(-3, 2)));
  CHECK(GaussianRational(3, 4).norm() == 25);
  CHECK(*GaussianRational(0, 2).inverse() == GaussianRational(0, Rational(-1, 2)));
  CHECK_FALSE(GaussianRational().inverse().has_value());
}

TEST_CASE("division by zero") {
  CHECK_THROWS_AS(GaussianRational(1) / GaussianRational(0), DivisionByZero);
  CHECK_FALSE(checked_div(1, 0).has_value());
  CHECK(*checked_div(I, 2) == GaussianRational(0, Rational(1, 2)));
}

TEST_CASE("gaussian rational text") {
  CHECK(GaussianRational(Rational(1, 2), Rational(-3, 4)).to_string() == "1/2 - 3/4*I");
  CHECK(I.to_string() == "I");
  CHECK((-I).to_string() == "-I");
  CHECK(GaussianRational(0, Rational(3, 2)).to_string() == "3/2*I");
  CHECK(GaussianRational().to_string() == "0");
  CHECK(*GaussianRational::parse(" (5/4*I) ") == GaussianRational(0, Rational(5, 4)));
  CHECK(*GaussianRational::parse("i") == I);
  CHECK(*GaussianRational::parse("-2 + I") == GaussianRational(-2, 1));
  CHECK_FALSE(GaussianRational::parse("x").has_value());
  CHECK_FALSE(GaussianRational::parse("").has_value());

  Gen g;
  for (int c = 0; c < kCases; ++c) {
    const GaussianRational x = g.gaussian();
    const auto back = GaussianRational::parse(x.to_string());
    REQUIRE(back.has_value());
    CHECK(*back == x);
  }
}

TEST_CASE("square roots") {
  CHECK(square_roots(-1) == std::vector<GaussianRational>{I, -I});
  CHECK(square_roots(GaussianRational(0, 2)) == std::vector<GaussianRational>{{1, 1}, {-1, -1}});
  CHECK(square_roots(Rational(9, 16)) == std::vector<GaussianRational>{Rational(3, 4), Rational(-3, 4)});
  CHECK(square_roots(0) == std::vector<GaussianRational>{0});
  CHECK(square_roots(2).empty());
  CHECK(square_roots(I).empty());
  CHECK(*rational_sqrt(Rational(49, 4)) == Rational(7, 2));
  CHECK_FALSE(rational_sqrt(-4).has_value());

  Gen g;
  for (int c = 0; c < kCases; ++c) {
    const GaussianRational r = g.gaussian();
    const auto roots = square_roots(r * r);
    REQUIRE_FALSE(roots.empty());
    CHECK(std::find(roots.begin(), roots.end(), r) != roots.end());
    for (const auto& x : roots) CHECK(x * x == r * r);
  }
}

TEST_CASE("gaussian rational field axioms") {
  Gen g;
  for (int c = 0; c < kCases; ++c) {
    const GaussianRational x = g.gaussian(), y = g.gaussian(), z = g.gaussian();
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + GaussianRational() == x);
    CHECK(x * GaussianRational(1) == x);
    CHECK(x + (-x) == GaussianRational());
    if (!y.is_zero()) {
      CHECK(x / y == reference_div(x, y));
      CHECK(y * *y.inverse() == GaussianRational(1));
    }
    CHECK((x * y).conj() == x.conj() * y.conj());
  }
}

// ---------------------------------------------------------------------------

TEST_CASE("polynomial rendering") {
  const Variables v({"a17", "a27", "a37", "a47"});
  const auto a17 = Polynomial::variable(v, "a17"), a27 = Polynomial::variable(v, "a27");
  const auto a37 = Polynomial::variable(v, "a37"), a47 = Polynomial::variable(v, "a47");
  CHECK((a37 * a37 + a47 * a47 + Polynomial(v, 1)).to_string() == "a37^2 + a47^2 + 1");
  CHECK((a27 * a27 - Polynomial(v, 1)).equation_string() == "a27^2 = 1");
  CHECK((a17 * a27).equation_string() == "a17*a27 = 0");
  CHECK(Polynomial(v, 1).equation_string() == "1 = 0");
  CHECK((a17 * GaussianRational(0, -2) + a27 * GaussianRational(1, 1)).to_string() == "-2*I*a17 + (1 + I)*a27");
  CHECK(Polynomial(v, 0).to_string() == "0");
}

TEST_CASE("polynomial structure") {
  const Variables v({"x", "y"});
  const auto x = Polynomial::variable(v, "x"), y = Polynomial::variable(v, "y");
  const Polynomial p = x * x * y - x * GaussianRational(3) + Polynomial(v, 5);
  CHECK(p.total_degree() == 3);
  CHECK(p.degree_in(0) == 2);
  CHECK(p.degree_in(1) == 1);
  CHECK(p.constant_term() == GaussianRational(5));
  CHECK(p.leading_coefficient() == GaussianRational(1));
  CHECK((p * GaussianRational(2)).monic() == p);
  const auto parts = p.coefficients_in(1);
  REQUIRE(parts.size() == 2);
  CHECK(parts[1] == x * x);
  CHECK(p.variables_used() == std::vector<std::size_t>{0, 1});
  CHECK(x.pow(3) == x * x * x);
  CHECK_THROWS_AS(p.substitute("x", x + y), std::invalid_argument);
  CHECK_THROWS_AS(Polynomial::variable(v, "w"), std::invalid_argument);
  CHECK(Polynomial(v, 2) == Polynomial(2));
}

TEST_CASE("polynomial ring axioms") {
  const Variables v({"x", "y", "z"});
  Gen g;
  for (int c = 0; c < kCases; ++c) {
    const auto p = g.polynomial(v), q = g.polynomial(v), r = g.polynomial(v);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * q == q * p);
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p - p == Polynomial(v, 0));
  }
}

TEST_CASE("substitution agrees with evaluation") {
  const Variables v({"x", "y", "z"});
  Gen g;
  for (int c = 0; c < kCases; ++c) {
    const auto p = g.polynomial(v, 4);
    const std::size_t var = static_cast<std::size_t>(g.between(0, 2));
    Polynomial q = g.polynomial(v, 2);
    q = q.substitute(var, Polynomial(v, 0));
    std::vector<GaussianRational> at{g.gaussian(), g.gaussian(), g.gaussian()};
    std::vector<GaussianRational> moved = at;
    moved[var] = q.evaluate(at);
    CHECK(p.substitute(var, q).evaluate(at) == p.evaluate(moved));
    CHECK((p * q).evaluate(at) == p.evaluate(at) * q.evaluate(at));
  }
}

// ---------------------------------------------------------------------------

TEST_CASE("extension ring basics") {
  const auto ring = ExtensionRing::standard();
  const auto a = ExtensionElement::parameter(ring);
  const auto s = ExtensionElement::root(ring);
  CHECK(ring->relation_string() == "s^2 = -a^2 - 1");
  CHECK(ring.get() == ExtensionRing::standard().get());
  CHECK(s * s == ExtensionElement(-1) - a * a);
  CHECK((a + s).to_string() == "a + s");
  CHECK((-s).to_string() == "-s");
  CHECK((a * s * GaussianRational(2)).to_string() == "2*a*s");
  CHECK((s - s).is_zero());

  // (a + s)(a - s) = a^2 - s^2 = 2a^2 + 1, checked at a = 5/4*I, s = 3/4.
  const ExtensionElement prod = (a + s) * (a - s);
  const GaussianRational alpha(0, Rational(5, 4)), sigma(Rational(3, 4));
  CHECK((alpha + sigma) * (alpha - sigma) == GaussianRational(Rational(-17, 8)));
  CHECK(prod.evaluate(alpha, sigma) == GaussianRational(Rational(-17, 8)));
  CHECK(prod == a * a * GaussianRational(2) + ExtensionElement(1));
  CHECK_THROWS_AS(s.evaluate(alpha, Rational(1, 2)), std::invalid_argument);
}

TEST_CASE("extension rings do not mix") {
  const auto other = std::make_shared<const ExtensionRing>(
      Polynomial::variable(ExtensionRing::parameter_variables(), 0) + Polynomial(ExtensionRing::parameter_variables(), 2));
  const auto s1 = ExtensionElement::root(ExtensionRing::standard());
  const auto s2 = ExtensionElement::root(other);
  CHECK_THROWS(s1 + s2);
  CHECK_NOTHROW(s1 + ExtensionElement(3));
  CHECK_FALSE(s1 == s2);
}

TEST_CASE("extension arithmetic matches evaluation on the curve") {
  const auto ring = ExtensionRing::standard();
  const auto a = ExtensionElement::parameter(ring);
  const auto s = ExtensionElement::root(ring);
  Gen g;
  auto random_element = [&] {
    return ExtensionElement(g.gaussian(5)) + a * g.gaussian(5) + s * g.gaussian(5) + a * s * g.gaussian(5) +
           a * a * g.gaussian(5);
  };
  for (int c = 0; c < kCases; ++c) {
    const auto [alpha, sigma] = g.curve_point();
    REQUIRE(sigma * sigma == GaussianRational(-1) - alpha * alpha);
    const auto x = random_element(), y = random_element();
    CHECK((x * y).evaluate(alpha, sigma) == x.evaluate(alpha, sigma) * y.evaluate(alpha, sigma));
    CHECK((x + y).evaluate(alpha, sigma) == x.evaluate(alpha, sigma) + y.evaluate(alpha, sigma));
    CHECK((x - y).evaluate(alpha, sigma) == x.evaluate(alpha, sigma) - y.evaluate(alpha, sigma));
    CHECK((x * y) * s == x * (y * s));
    CHECK(x * (y + s) == x * y + x * s);
  }
}
