#include "cliffsub/polynomial.hpp"

#include <algorithm>
#include <numeric>

namespace cliffsub {

Variables::Variables(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {}

std::span<const std::string> Variables::names() const {
  if (!names_) return {};
  return {names_->data(), names_->size()};
}

std::optional<std::size_t> Variables::index_of(std::string_view name) const {
  if (!names_) return std::nullopt;
  auto it = std::find(names_->begin(), names_->end(), name);
  if (it == names_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_->begin());
}

bool operator==(const Variables& a, const Variables& b) {
  if (a.names_ == b.names_) return true;
  if (a.empty() && b.empty()) return true;
  if (!a.names_ || !b.names_) return false;
  return *a.names_ == *b.names_;
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial::Polynomial(GaussianRational c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, std::move(c));
}

Polynomial::Polynomial(Variables vars, GaussianRational c) : vars_(std::move(vars)) {
  if (!c.is_zero()) terms_.emplace(Exponents(vars_.size(), 0), std::move(c));
}

Polynomial Polynomial::variable(const Variables& vars, std::size_t index) {
  if (index >= vars.size()) throw std::out_of_range("Polynomial::variable: index out of range");
  Exponents e(vars.size(), 0);
  e[index] = 1;
  return monomial(vars, std::move(e), 1);
}

Polynomial Polynomial::variable(const Variables& vars, std::string_view name) {
  auto idx = vars.index_of(name);
  if (!idx) throw std::invalid_argument("Polynomial::variable: undeclared variable " + std::string(name));
  return variable(vars, *idx);
}

Polynomial Polynomial::monomial(const Variables& vars, Exponents exponents, GaussianRational c) {
  if (exponents.size() != vars.size()) throw std::invalid_argument("Polynomial::monomial: exponent arity");
  Polynomial p;
  p.vars_ = vars;
  if (!c.is_zero()) p.terms_.emplace(std::move(exponents), std::move(c));
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

GaussianRational Polynomial::constant_term() const {
  if (terms_.empty()) return {};
  // The constant monomial is the smallest in grlex, hence the last entry.
  const auto& [e, c] = *terms_.rbegin();
  if (std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; })) return c;
  return {};
}

const GaussianRational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return terms_.begin()->second;
}

std::uint32_t Polynomial::total_degree() const {
  if (terms_.empty()) return 0;
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) {
    if (var < e.size()) d = std::max(d, e[var]);
  }
  return d;
}

std::vector<std::size_t> Polynomial::variables_used() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vars_.size(); ++v) {
    if (depends_on(v)) out.push_back(v);
  }
  return out;
}

bool Polynomial::has_real_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_real(); });
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  const GaussianRational lead = leading_coefficient();
  if (lead.is_one()) return *this;
  Polynomial out = *this;
  out *= *lead.inverse();
  return out;
}

void Polynomial::adopt(const Variables& other) {
  if (other.empty() || vars_ == other) return;
  if (!vars_.empty()) throw std::invalid_argument("polynomials over different variable sets");
  vars_ = other;
  Terms lifted;
  for (auto& [e, c] : terms_) lifted.emplace(Exponents(vars_.size(), 0), c);
  terms_ = std::move(lifted);
}

void Polynomial::add_term(const Exponents& e, const GaussianRational& c) {
  if (c.is_zero()) return;
  const Exponents* key = &e;
  Exponents lifted;
  if (e.size() != vars_.size()) {
    lifted.assign(vars_.size(), 0);
    key = &lifted;
  }
  auto [it, inserted] = terms_.try_emplace(*key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  adopt(o.vars_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  adopt(o.vars_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  out.adopt(a.vars_);
  out.adopt(b.vars_);
  const std::size_t n = out.vars_.size();
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(n, 0);
      for (std::size_t v = 0; v < ea.size(); ++v) e[v] += ea[v];
      for (std::size_t v = 0; v < eb.size(); ++v) e[v] += eb[v];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.terms_.empty()) return true;
  if (!(a.vars_ == b.vars_)) {
    // A constant may be compared against a constant over any variable set.
    if (!a.is_constant() || !b.is_constant()) return false;
    return a.constant_term() == b.constant_term();
  }
  return a.terms_ == b.terms_;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial result(vars_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& replacement) const {
  if (var >= vars_.size()) throw std::out_of_range("substitute: variable index out of range");
  if (!replacement.vars_.empty() && !(replacement.vars_ == vars_))
    throw std::invalid_argument("substitute: replacement over a different variable set");
  if (replacement.depends_on(var))
    throw std::invalid_argument("substitute: replacement contains " + vars_.name(var));
  std::vector<Polynomial> powers{Polynomial(vars_, 1)};
  Polynomial out(vars_, 0);
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    const std::uint32_t d = rest[var];
    rest[var] = 0;
    while (powers.size() <= d) powers.push_back(powers.back() * replacement);
    out += monomial(vars_, std::move(rest), c) * powers[d];
  }
  return out;
}

Polynomial Polynomial::substitute(std::string_view var, const Polynomial& replacement) const {
  auto idx = vars_.index_of(var);
  if (!idx) throw std::invalid_argument("substitute: undeclared variable " + std::string(var));
  return substitute(*idx, replacement);
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  std::vector<Polynomial> out(degree_in(var) + 1, Polynomial(vars_, 0));
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    const std::uint32_t d = var < rest.size() ? rest[var] : 0;
    if (var < rest.size()) rest[var] = 0;
    out[d] += monomial(vars_, std::move(rest), c);
  }
  return out;
}

GaussianRational Polynomial::evaluate(std::span<const GaussianRational> values) const {
  return evaluate<GaussianRational>(values, GaussianRational(1));
}

Polynomial Polynomial::remap(const Variables& target, std::span<const std::optional<std::size_t>> mapping) const {
  Polynomial out(target, 0);
  for (const auto& [e, c] : terms_) {
    Exponents ne(target.size(), 0);
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (v >= mapping.size() || !mapping[v]) throw std::invalid_argument("remap: variable has no image");
      ne[*mapping[v]] += e[v];
    }
    out.add_term(ne, c);
  }
  return out;
}

CoefficientText coefficient_text(const GaussianRational& c) {
  CoefficientText t;
  if (c.is_real()) {
    t.negative = sgn(c.re()) < 0;
    t.magnitude = Rational(abs(c.re())).get_str();
  } else if (sgn(c.re()) == 0) {
    t.negative = sgn(c.im()) < 0;
    t.magnitude = GaussianRational(0, Rational(abs(c.im()))).to_string();
  } else {
    t.magnitude = "(" + c.to_string() + ")";
  }
  t.unit = t.magnitude == "1";
  return t;
}

namespace {

std::string monomial_text(const Variables& vars, const Exponents& e) {
  std::string out;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars.name(v);
    if (e[v] > 1) out += "^" + std::to_string(e[v]);
  }
  return out;
}

std::string join_terms(const Variables& vars, const Polynomial::Terms& terms, bool skip_constant) {
  std::string out;
  for (const auto& [e, c] : terms) {
    std::string mono = monomial_text(vars, e);
    if (skip_constant && mono.empty()) continue;
    CoefficientText ct = coefficient_text(c);
    std::string body;
    if (mono.empty()) {
      body = ct.magnitude;
    } else if (ct.unit) {
      body = mono;
    } else {
      body = ct.magnitude + "*" + mono;
    }
    if (out.empty()) {
      out = ct.negative ? "-" + body : body;
    } else {
      out += ct.negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  return join_terms(vars_, terms_, false);
}

std::string Polynomial::equation_string() const {
  if (is_constant()) return to_string() + " = 0";
  std::string lhs = join_terms(vars_, terms_, true);
  return lhs + " = " + (-constant_term()).to_string();
}

}  // namespace cliffsub
