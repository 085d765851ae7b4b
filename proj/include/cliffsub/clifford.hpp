#pragma once

#include <bit>
#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cliffsub/gaussian.hpp"

namespace cliffsub {

/// Upper bound on the number of generators e1..en.
inline constexpr int kMaxGenerators = 16;

/// Bit i-1 set <=> e_i is a factor; factors are always in increasing index order.
using BladeMask = std::uint32_t;

struct Blade {
  BladeMask mask = 0;
  int n = 0;

  friend bool operator==(const Blade&, const Blade&) = default;
};

struct SignedBlade {
  int sign = 1;
  Blade blade;

  friend bool operator==(const SignedBlade&, const SignedBlade&) = default;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch() : std::invalid_argument("Clifford operands of different dimension") {}
};

/// Sign of e_A e_B with e_i e_j = -e_j e_i (i != j) and e_i^2 = -1.
///
/// Reordering contributes (-1)^t where t counts pairs (a in A, b in B) with
/// a > b; every shared generator contributes e_i^2 = -1.
constexpr int blade_sign(BladeMask a, BladeMask b) {
  int swaps = 0;
  for (BladeMask rest = a >> 1U; rest != 0; rest >>= 1U) swaps += std::popcount(rest & b);
  swaps += std::popcount(a & b);
  return (swaps & 1) ? -1 : 1;
}

SignedBlade blade_mul(const Blade& a, const Blade& b);

/// Basis order used for coordinates: by grade, then lexicographic on the
/// sorted index list. For n = 3: 1, e1, e2, e3, e12, e13, e23, e123.
std::vector<BladeMask> generator_order(int n);

/// Traditional names for n = 3 (1, e1, e2, e3, i, j, k, z); e-index lists
/// (1, e1, e12, e124, ...) for any other n.
std::string blade_name(BladeMask mask, int n);
std::optional<BladeMask> parse_blade(std::string_view name, int n);

/// Ring operations a scalar type must provide to serve as multivector coefficients.
template <class S>
concept CliffordScalar = requires(const S& x, const S& y) {
  { x + y } -> std::convertible_to<S>;
  { x - y } -> std::convertible_to<S>;
  { x * y } -> std::convertible_to<S>;
  { -x } -> std::convertible_to<S>;
  { x.is_zero() } -> std::convertible_to<bool>;
};

/// Sparse element sum_A c_A e_A of g(n) with coefficients in S.
template <CliffordScalar S>
class MultiVector {
 public:
  using Coefficients = std::map<BladeMask, S>;

  explicit MultiVector(int n = 0) : n_(n) {
    if (n < 0 || n > kMaxGenerators) throw std::out_of_range("MultiVector: dimension out of range");
  }

  static MultiVector blade(int n, BladeMask mask, S coeff) {
    MultiVector out(n);
    out.add_term(mask, std::move(coeff));
    return out;
  }

  int n() const { return n_; }
  const Coefficients& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Nonzero coefficient of e_mask, if any.
  const S* coefficient(BladeMask mask) const {
    auto it = coeffs_.find(mask);
    return it == coeffs_.end() ? nullptr : &it->second;
  }

  void add_term(BladeMask mask, S coeff) {
    if (mask >> n_ != 0) throw std::out_of_range("MultiVector: blade outside g(n)");
    if (coeff.is_zero()) return;
    auto it = coeffs_.find(mask);
    if (it == coeffs_.end()) {
      coeffs_.emplace(mask, std::move(coeff));
      return;
    }
    it->second = it->second + coeff;
    if (it->second.is_zero()) coeffs_.erase(it);
  }

  MultiVector operator-() const {
    MultiVector out(n_);
    for (const auto& [m, c] : coeffs_) out.coeffs_.emplace(m, -c);
    return out;
  }

  MultiVector& operator+=(const MultiVector& o) {
    check(o);
    for (const auto& [m, c] : o.coeffs_) add_term(m, c);
    return *this;
  }
  MultiVector& operator-=(const MultiVector& o) {
    check(o);
    for (const auto& [m, c] : o.coeffs_) add_term(m, -c);
    return *this;
  }

  /// Scale every coefficient by c.
  MultiVector scaled(const S& c) const {
    MultiVector out(n_);
    for (const auto& [m, x] : coeffs_) out.add_term(m, c * x);
    return out;
  }

  friend MultiVector operator+(MultiVector a, const MultiVector& b) { return a += b; }
  friend MultiVector operator-(MultiVector a, const MultiVector& b) { return a -= b; }
  friend MultiVector operator*(const MultiVector& x, const MultiVector& y) { return mv_mul(x, y); }
  friend bool operator==(const MultiVector& a, const MultiVector& b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

  /// Bilinear extension of blade_mul.
  friend MultiVector mv_mul(const MultiVector& x, const MultiVector& y) {
    x.check(y);
    MultiVector out(x.n_);
    for (const auto& [ma, ca] : x.coeffs_) {
      for (const auto& [mb, cb] : y.coeffs_) {
        S prod = ca * cb;
        if (blade_sign(ma, mb) < 0) prod = -prod;
        out.add_term(ma ^ mb, std::move(prod));
      }
    }
    return out;
  }

  /// The same masks read in g(n + k).
  friend MultiVector embed(const MultiVector& x, int n, int k) {
    if (k < 0) throw std::invalid_argument("embed: k must be nonnegative");
    if (x.n_ != n) throw DimensionMismatch();
    MultiVector out(n + k);
    out.coeffs_ = x.coeffs_;
    return out;
  }

 private:
  void check(const MultiVector& o) const {
    if (o.n_ != n_) throw DimensionMismatch();
  }

  int n_;
  Coefficients coeffs_;
};

/// Multiplication table of g(n), rows and columns in generator_order(n).
struct Table {
  int n = 0;
  std::vector<BladeMask> order;
  std::vector<SignedBlade> cells;  // row-major

  std::size_t size() const { return order.size(); }
  const SignedBlade& at(std::size_t row, std::size_t col) const { return cells.at(row * size() + col); }
};

/// Table for 1 <= n <= 6.
Table build_table(int n);

/// The 8x8 product table of g(3) exactly as tabulated by hand (row times
/// column), in the order 1, e1, e2, e3, i, j, k, z. Used as a fixture to
/// check blade_mul, never to compute with.
const std::vector<std::vector<std::string>>& reference_table_g3();

/// "-e3", "k", "-1", ... for one table entry.
std::string signed_blade_name(const SignedBlade& sb);

/// Inverse of format_multivector for Gaussian-rational coefficients:
/// "e2 + j", "e3 - 2*I*j", "(1/2 + I)*e1 + 3". Returns nullopt on bad input.
std::optional<MultiVector<GaussianRational>> parse_multivector(std::string_view text, int n);

/// "e1 + k", "e2 - a*k", "(a + s)*j", "1/2 + I*e1" for any coefficient type
/// with to_string(), terms in generator_order(n).
template <CliffordScalar S>
std::string format_multivector(const MultiVector<S>& x) {
  std::string out;
  for (BladeMask mask : generator_order(x.n())) {
    const S* c = x.coefficient(mask);
    if (!c) continue;
    std::string coeff = c->to_string();
    const bool compound = coeff.find(" + ", 1) != std::string::npos || coeff.find(" - ", 1) != std::string::npos;
    bool negative = false;
    if (!compound && coeff.front() == '-') {
      negative = true;
      coeff.erase(0, 1);
    }
    if (compound && mask != 0) coeff = "(" + coeff + ")";
    std::string body;
    if (mask == 0) {
      body = coeff;
    } else if (coeff == "1") {
      body = blade_name(mask, x.n());
    } else {
      body = coeff + "*" + blade_name(mask, x.n());
    }
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace cliffsub
