#include "cliffsub/gaussian.hpp"

#include <algorithm>
#include <cctype>

namespace cliffsub {

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::fraction(long num, long den) {
  if (den == 0) throw DivisionByZero();
  Rational q(num, den);
  q.canonicalize();
  return {q, 0};
}

std::optional<GaussianRational> GaussianRational::inverse() const {
  if (is_zero()) return std::nullopt;
  const Rational n = norm();
  return GaussianRational(re_ / n, -im_ / n);
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  auto inv = o.inverse();
  if (!inv) throw DivisionByZero();
  return *this *= *inv;
}

std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
  if (int c = cmp(a.re_, b.re_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  int c = cmp(a.im_, b.im_);
  if (c == 0) return std::strong_ordering::equal;
  return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string GaussianRational::to_string() const {
  auto imag_text = [](const Rational& q) {
    if (q == 1) return std::string("I");
    return q.get_str() + "*I";
  };
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) {
    if (im_ == -1) return "-I";
    return imag_text(im_);
  }
  std::string out = re_.get_str();
  if (sgn(im_) > 0) {
    out += " + " + imag_text(im_);
  } else {
    out += " - " + imag_text(Rational(-im_));
  }
  return out;
}

namespace {

std::optional<Rational> parse_rational(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return std::nullopt;
  bool slash = false;
  for (std::size_t k = start; k < s.size(); ++k) {
    if (s[k] == '/') {
      if (slash || k == start || k + 1 == s.size()) return std::nullopt;
      slash = true;
    } else if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
      return std::nullopt;
    }
  }
  std::string body(s[0] == '+' ? s.substr(1) : s);
  Rational q;
  if (q.set_str(body, 10) != 0) return std::nullopt;
  if (q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

// "I", "-I", "+I", "q*I"
std::optional<Rational> parse_imaginary(std::string_view s) {
  if (s.empty()) return std::nullopt;
  const char last = s.back();
  if (last != 'I' && last != 'i') return std::nullopt;
  std::string_view coeff = s.substr(0, s.size() - 1);
  if (coeff.empty() || coeff == "+") return Rational(1);
  if (coeff == "-") return Rational(-1);
  if (coeff.back() != '*') return std::nullopt;
  return parse_rational(coeff.substr(0, coeff.size() - 1));
}

}  // namespace

std::optional<GaussianRational> GaussianRational::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) return std::nullopt;

  // Split at the last sign that is not leading.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  if (split != std::string::npos) {
    std::string_view whole(s);
    auto re = parse_rational(whole.substr(0, split));
    auto im = parse_imaginary(whole.substr(split));
    if (re && im) return GaussianRational(*re, *im);
    return std::nullopt;
  }
  if (auto im = parse_imaginary(s)) return GaussianRational(0, *im);
  if (auto re = parse_rational(s)) return GaussianRational(*re, 0);
  return std::nullopt;
}

std::optional<GaussianRational> checked_div(const GaussianRational& x, const GaussianRational& y) {
  auto inv = y.inverse();
  if (!inv) return std::nullopt;
  return x * *inv;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (sgn(q) == 0) return Rational(0);
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

std::vector<GaussianRational> square_roots(const GaussianRational& c) {
  if (c.is_zero()) return {GaussianRational()};
  // (x + yI)^2 = c  <=>  x^2 - y^2 = re, 2xy = im; x^2 + y^2 = |c|.
  auto modulus = rational_sqrt(c.norm());
  if (!modulus) return {};
  auto x = rational_sqrt((*modulus + c.re()) / 2);
  auto y = rational_sqrt((*modulus - c.re()) / 2);
  if (!x || !y) return {};
  Rational yy = *y;
  if (sgn(c.im()) < 0) yy = -yy;
  GaussianRational root(*x, yy);
  if (sgn(root.re()) < 0 || (sgn(root.re()) == 0 && sgn(root.im()) < 0)) root = -root;
  return {root, -root};
}

}  // namespace cliffsub
