#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cliffsub/clifford.hpp"
#include "cliffsub/extension.hpp"
#include "cliffsub/polynomial.hpp"

namespace cliffsub {

/// Echelon basis of an (N-1)-dimensional subspace of an N-dimensional space
/// with coordinates g_1..g_N.
///
/// Basis m omits coordinate p = N + 1 - m. Its vectors are g_t + a_{t,p} g_p
/// for t < p followed by g_t for t > p. For N = 8 with generators
/// 1, e1, e2, e3, i, j, k, z this is the classical list: basis 1 carries
/// parameters on z, basis 8 is e1..z with no parameters.
struct CanonicalBasis {
  int index = 0;
  int dim = 0;
  int pivot = 0;
  /// a_{t,p} for t = 1..p-1.
  Variables params;

  std::size_t size() const { return static_cast<std::size_t>(dim - 1); }
  /// 1-based coordinate carrying the leading 1 of each basis vector.
  std::vector<int> slots() const;
};

/// "a17" style names; "a1_16" once N has two-digit coordinates.
std::string parameter_name(int t, int p, int dim);

/// All N canonical bases, index 1..N. Throws for N < 2.
std::vector<CanonicalBasis> canonical_bases(int dim);

/// The same echelon shape with concrete (or symbolic) coefficients in the
/// pivot column, read inside g(n) via generator_order(n).
template <CliffordScalar S>
struct EchelonSpan {
  int n = 0;
  int pivot = 0;
  std::vector<S> pivot_coeffs;  // coefficient of g_p in vector t, t = 1..p-1

  int dim() const { return 1 << n; }
  std::vector<MultiVector<S>> vectors() const;
};

/// Forced expansion x_t (coordinate of v on the t-th basis slot) and the
/// pivot discrepancy; v lies in the span iff the residual is zero.
template <CliffordScalar S>
struct Membership {
  std::vector<S> coeffs;
  S residual{};

  bool member() const { return residual.is_zero(); }
};

template <CliffordScalar S>
Membership<S> membership_residual(const MultiVector<S>& v, const EchelonSpan<S>& span);

EchelonSpan<Polynomial> symbolic_span(const CanonicalBasis& cb, int n);
Membership<Polynomial> membership_residual(const MultiVector<Polynomial>& v, const CanonicalBasis& cb);

/// cb with its parameters replaced by `values` (one per parameter, in order).
template <CliffordScalar S>
EchelonSpan<S> instantiate(const CanonicalBasis& cb, int n, std::span<const S> values);

/// Recover the echelon shape from explicit vectors. Returns nullopt unless the
/// list is exactly N-1 vectors of the form g_t + c_t g_p (t < p), g_t (t > p).
template <CliffordScalar S>
std::optional<EchelonSpan<S>> detect_echelon(std::span<const MultiVector<S>> vectors);

/// Exact Gauss-Jordan elimination over Q(I) of a fixed list of vectors, for
/// repeated span-membership queries. Makes no assumption about the shape or
/// order of the vectors.
class SpanOracle {
 public:
  explicit SpanOracle(std::span<const MultiVector<GaussianRational>> vectors);

  std::size_t rank() const { return pivots_.size(); }
  /// Coefficients x with sum x_i vectors[i] = v, or nullopt if v is not in the span.
  std::optional<std::vector<GaussianRational>> express(const MultiVector<GaussianRational>& v) const;
  bool contains(const MultiVector<GaussianRational>& v) const { return express(v).has_value(); }

  /// Reduced row echelon rows (dense, generator order) with their pivot columns.
  const std::vector<std::vector<GaussianRational>>& reduced_rows() const { return rows_; }
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

 private:
  int n_ = 0;
  std::size_t count_ = 0;
  std::vector<BladeMask> order_;
  std::vector<std::vector<GaussianRational>> rows_;
  std::vector<std::vector<GaussianRational>> combos_;
  std::vector<std::size_t> pivots_;
};

std::optional<std::vector<GaussianRational>> rref_membership(const MultiVector<GaussianRational>& v,
                                                             std::span<const MultiVector<GaussianRational>> vectors);

struct CanonicalForm {
  int index = 0;
  std::vector<GaussianRational> params;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Canonical-basis index and parameters of the hyperplane spanned by
/// `vectors`; nullopt unless they span a subspace of dimension exactly N-1.
std::optional<CanonicalForm> reduce_to_canonical(std::span<const MultiVector<GaussianRational>> vectors);

// ---------------------------------------------------------------------------

template <CliffordScalar S>
std::vector<MultiVector<S>> EchelonSpan<S>::vectors() const {
  const auto order = generator_order(n);
  const int N = dim();
  std::vector<MultiVector<S>> out;
  for (int t = 1; t <= N; ++t) {
    if (t == pivot) continue;
    MultiVector<S> v = MultiVector<S>::blade(n, order[t - 1], S(1));
    if (t < pivot) v.add_term(order[pivot - 1], pivot_coeffs.at(t - 1));
    out.push_back(std::move(v));
  }
  return out;
}

template <CliffordScalar S>
Membership<S> membership_residual(const MultiVector<S>& v, const EchelonSpan<S>& span) {
  if (v.n() != span.n) throw DimensionMismatch();
  const auto order = generator_order(span.n);
  const int N = span.dim();
  auto coordinate = [&](int t) {
    const S* c = v.coefficient(order[t - 1]);
    return c ? *c : S{};
  };
  Membership<S> m;
  S residual = coordinate(span.pivot);
  for (int t = 1; t <= N; ++t) {
    if (t == span.pivot) continue;
    S x = coordinate(t);
    if (t < span.pivot && !x.is_zero()) residual = residual - x * span.pivot_coeffs.at(t - 1);
    m.coeffs.push_back(std::move(x));
  }
  m.residual = std::move(residual);
  return m;
}

template <CliffordScalar S>
EchelonSpan<S> instantiate(const CanonicalBasis& cb, int n, std::span<const S> values) {
  if (cb.dim != (1 << n)) throw DimensionMismatch();
  if (values.size() != cb.params.size()) throw std::invalid_argument("instantiate: wrong number of parameter values");
  EchelonSpan<S> span;
  span.n = n;
  span.pivot = cb.pivot;
  span.pivot_coeffs.assign(values.begin(), values.end());
  return span;
}

template <CliffordScalar S>
std::optional<EchelonSpan<S>> detect_echelon(std::span<const MultiVector<S>> vectors) {
  if (vectors.empty()) return std::nullopt;
  const int n = vectors.front().n();
  const int N = 1 << n;
  if (vectors.size() != static_cast<std::size_t>(N - 1)) return std::nullopt;
  const auto order = generator_order(n);
  for (int p = 1; p <= N; ++p) {
    EchelonSpan<S> span;
    span.n = n;
    span.pivot = p;
    bool ok = true;
    for (int idx = 0; ok && idx < N - 1; ++idx) {
      const MultiVector<S>& v = vectors[static_cast<std::size_t>(idx)];
      const int t = idx + 1 < p ? idx + 1 : idx + 2;
      if (v.n() != n) return std::nullopt;
      const S* lead = v.coefficient(order[t - 1]);
      if (!lead || !(*lead - S(1)).is_zero()) {
        ok = false;
        break;
      }
      for (const auto& [mask, c] : v.coefficients()) {
        if (mask == order[t - 1]) continue;
        if (t < p && mask == order[p - 1]) continue;
        ok = false;
        break;
      }
      if (ok && t < p) {
        const S* c = v.coefficient(order[p - 1]);
        span.pivot_coeffs.push_back(c ? *c : S{});
      }
    }
    if (ok) return span;
  }
  return std::nullopt;
}

}  // namespace cliffsub
