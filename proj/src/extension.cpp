#include "cliffsub/extension.hpp"

#include <stdexcept>

namespace cliffsub {

const Variables& ExtensionRing::parameter_variables() {
  static const Variables vars(std::vector<std::string>{"a"});
  return vars;
}

ExtensionRing::ExtensionRing(Polynomial s_squared)
    : s_squared_(std::move(s_squared)), parameter_(Polynomial::variable(parameter_variables(), 0)) {
  if (!s_squared_.vars().empty() && !(s_squared_.vars() == parameter_variables()))
    throw std::invalid_argument("ExtensionRing: relation must be a polynomial in a");
  s_squared_ += Polynomial(parameter_variables(), 0);
}

std::shared_ptr<const ExtensionRing> ExtensionRing::standard() {
  static const auto ring = [] {
    const Polynomial a = Polynomial::variable(parameter_variables(), 0);
    return std::make_shared<const ExtensionRing>(Polynomial(-1) - a * a);
  }();
  return ring;
}

std::string ExtensionRing::relation_string() const { return "s^2 = " + s_squared_.to_string(); }

ExtensionElement::ExtensionElement(GaussianRational c) : p0_(std::move(c)) {}

ExtensionElement::ExtensionElement(std::shared_ptr<const ExtensionRing> ring, Polynomial p0, Polynomial p1)
    : ring_(std::move(ring)), p0_(std::move(p0)), p1_(std::move(p1)) {
  const Variables& vars = ExtensionRing::parameter_variables();
  for (const Polynomial* p : {&p0_, &p1_}) {
    if (!p->vars().empty() && !(p->vars() == vars))
      throw std::invalid_argument("ExtensionElement: components must be polynomials in a");
  }
  if (!p1_.is_zero() && !ring_) throw std::invalid_argument("ExtensionElement: s-part needs a ring");
  normalize();
}

ExtensionElement ExtensionElement::parameter(std::shared_ptr<const ExtensionRing> ring) {
  Polynomial a = ring->parameter();
  return {std::move(ring), std::move(a), Polynomial()};
}

ExtensionElement ExtensionElement::root(std::shared_ptr<const ExtensionRing> ring) {
  return {std::move(ring), Polynomial(), Polynomial(1)};
}

void ExtensionElement::normalize() {
  if (p1_.is_zero()) ring_.reset();
}

void ExtensionElement::unify(const ExtensionElement& o) {
  if (!o.ring_) return;
  if (!ring_) {
    ring_ = o.ring_;
    return;
  }
  if (ring_ != o.ring_ && !(*ring_ == *o.ring_))
    throw std::invalid_argument("ExtensionElement: operands from different extension rings");
}

GaussianRational ExtensionElement::evaluate(const GaussianRational& alpha, const GaussianRational& sigma) const {
  const GaussianRational at[] = {alpha};
  if (ring_ && !(sigma * sigma == ring_->s_squared().evaluate(at)))
    throw std::invalid_argument("ExtensionElement::evaluate: sigma^2 != q(alpha)");
  return p0_.evaluate(at) + p1_.evaluate(at) * sigma;
}

ExtensionElement ExtensionElement::operator-() const {
  ExtensionElement out = *this;
  out.p0_ = -out.p0_;
  out.p1_ = -out.p1_;
  return out;
}

ExtensionElement& ExtensionElement::operator+=(const ExtensionElement& o) {
  unify(o);
  p0_ += o.p0_;
  p1_ += o.p1_;
  normalize();
  return *this;
}

ExtensionElement& ExtensionElement::operator-=(const ExtensionElement& o) {
  unify(o);
  p0_ -= o.p0_;
  p1_ -= o.p1_;
  normalize();
  return *this;
}

ExtensionElement& ExtensionElement::operator*=(const GaussianRational& c) {
  p0_ *= c;
  p1_ *= c;
  normalize();
  return *this;
}

ExtensionElement ext_mul(const ExtensionElement& x, const ExtensionElement& y) { return x * y; }

ExtensionElement operator*(const ExtensionElement& x, const ExtensionElement& y) {
  ExtensionElement out;
  out.unify(x);
  out.unify(y);
  out.p0_ = x.p0_ * y.p0_;
  if (!x.p1_.is_zero() && !y.p1_.is_zero()) out.p0_ += x.p1_ * y.p1_ * out.ring_->s_squared();
  out.p1_ = x.p0_ * y.p1_ + x.p1_ * y.p0_;
  out.normalize();
  return out;
}

bool operator==(const ExtensionElement& x, const ExtensionElement& y) {
  if (!(x.p0_ == y.p0_) || !(x.p1_ == y.p1_)) return false;
  if (x.ring_ && y.ring_ && x.ring_ != y.ring_) return *x.ring_ == *y.ring_;
  return true;
}

std::string ExtensionElement::to_string() const {
  if (p1_.is_zero()) return p0_.to_string();
  std::string s_part;
  if (p1_.term_count() == 1) {
    const auto& [e, c] = *p1_.terms().begin();
    CoefficientText ct = coefficient_text(c);
    std::string body = ct.unit ? "" : ct.magnitude + "*";
    if (!p1_.is_constant()) body += Polynomial::monomial(p1_.vars(), e, 1).to_string() + "*";
    s_part = (ct.negative ? "-" : "") + body + "s";
  } else {
    s_part = "(" + p1_.to_string() + ")*s";
  }
  if (p0_.is_zero()) return s_part;
  if (s_part.front() == '-') return p0_.to_string() + " - " + s_part.substr(1);
  return p0_.to_string() + " + " + s_part;
}

}  // namespace cliffsub
