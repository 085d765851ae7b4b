#include "cliffsub/subspace.hpp"

namespace cliffsub {

std::vector<int> CanonicalBasis::slots() const {
  std::vector<int> out;
  for (int t = 1; t <= dim; ++t) {
    if (t != pivot) out.push_back(t);
  }
  return out;
}

std::string parameter_name(int t, int p, int dim) {
  if (dim <= 9) return "a" + std::to_string(t) + std::to_string(p);
  return "a" + std::to_string(t) + "_" + std::to_string(p);
}

std::vector<CanonicalBasis> canonical_bases(int dim) {
  if (dim < 2) throw std::invalid_argument("canonical_bases: dimension must be at least 2");
  std::vector<CanonicalBasis> out;
  for (int m = 1; m <= dim; ++m) {
    CanonicalBasis cb;
    cb.index = m;
    cb.dim = dim;
    cb.pivot = dim + 1 - m;
    std::vector<std::string> names;
    for (int t = 1; t < cb.pivot; ++t) names.push_back(parameter_name(t, cb.pivot, dim));
    cb.params = Variables(std::move(names));
    out.push_back(std::move(cb));
  }
  return out;
}

EchelonSpan<Polynomial> symbolic_span(const CanonicalBasis& cb, int n) {
  std::vector<Polynomial> values;
  for (std::size_t t = 0; t < cb.params.size(); ++t) values.push_back(Polynomial::variable(cb.params, t));
  return instantiate<Polynomial>(cb, n, values);
}

Membership<Polynomial> membership_residual(const MultiVector<Polynomial>& v, const CanonicalBasis& cb) {
  if (cb.dim != (1 << v.n())) throw DimensionMismatch();
  Membership<Polynomial> m = membership_residual(v, symbolic_span(cb, v.n()));
  // Keep the residual over the basis' variable set even when it is constant.
  m.residual += Polynomial(cb.params, 0);
  return m;
}

namespace {

using Row = std::vector<GaussianRational>;

bool row_is_zero(const Row& r) {
  for (const auto& x : r) {
    if (!x.is_zero()) return false;
  }
  return true;
}

void axpy(Row& y, const GaussianRational& f, const Row& x) {
  for (std::size_t k = 0; k < y.size(); ++k) {
    if (!x[k].is_zero()) y[k] -= f * x[k];
  }
}

}  // namespace

SpanOracle::SpanOracle(std::span<const MultiVector<GaussianRational>> vectors) : count_(vectors.size()) {
  if (vectors.empty()) return;
  n_ = vectors.front().n();
  order_ = generator_order(n_);
  const std::size_t N = order_.size();
  std::vector<std::size_t> position(N);
  for (std::size_t k = 0; k < N; ++k) position[order_[k]] = k;

  std::vector<Row> rows;
  std::vector<Row> combos;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].n() != n_) throw DimensionMismatch();
    Row r(N);
    for (const auto& [mask, c] : vectors[i].coefficients()) r[position[mask]] = c;
    Row e(count_);
    e[i] = 1;
    rows.push_back(std::move(r));
    combos.push_back(std::move(e));
  }

  std::size_t next = 0;
  for (std::size_t col = 0; col < N && next < rows.size(); ++col) {
    std::size_t pick = next;
    while (pick < rows.size() && rows[pick][col].is_zero()) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[pick], rows[next]);
    std::swap(combos[pick], combos[next]);
    const GaussianRational inv = *rows[next][col].inverse();
    for (auto& x : rows[next]) x *= inv;
    for (auto& x : combos[next]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r][col].is_zero()) continue;
      const GaussianRational f = rows[r][col];
      axpy(rows[r], f, rows[next]);
      axpy(combos[r], f, combos[next]);
    }
    pivots_.push_back(col);
    ++next;
  }
  rows.resize(next);
  combos.resize(next);
  rows_ = std::move(rows);
  combos_ = std::move(combos);
}

std::optional<std::vector<GaussianRational>> SpanOracle::express(const MultiVector<GaussianRational>& v) const {
  if (count_ == 0) {
    if (v.is_zero()) return std::vector<GaussianRational>{};
    return std::nullopt;
  }
  if (v.n() != n_) throw DimensionMismatch();
  const std::size_t N = order_.size();
  Row w(N);
  for (std::size_t k = 0; k < N; ++k) {
    if (const GaussianRational* c = v.coefficient(order_[k])) w[k] = *c;
  }
  std::vector<GaussianRational> x(count_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const GaussianRational f = w[pivots_[r]];
    if (f.is_zero()) continue;
    axpy(w, f, rows_[r]);
    for (std::size_t i = 0; i < count_; ++i) {
      if (!combos_[r][i].is_zero()) x[i] += f * combos_[r][i];
    }
  }
  if (!row_is_zero(w)) return std::nullopt;
  return x;
}

std::optional<std::vector<GaussianRational>> rref_membership(const MultiVector<GaussianRational>& v,
                                                             std::span<const MultiVector<GaussianRational>> vectors) {
  return SpanOracle(vectors).express(v);
}

std::optional<CanonicalForm> reduce_to_canonical(std::span<const MultiVector<GaussianRational>> vectors) {
  if (vectors.empty()) return std::nullopt;
  SpanOracle oracle(vectors);
  const int N = 1 << vectors.front().n();
  if (oracle.rank() != static_cast<std::size_t>(N - 1)) return std::nullopt;
  // The single non-pivot column is the omitted coordinate; in reduced form the
  // row with pivot t can only carry a free-column entry when t precedes it.
  std::size_t free_col = static_cast<std::size_t>(N - 1);
  for (std::size_t k = 0; k < oracle.pivot_columns().size(); ++k) {
    if (oracle.pivot_columns()[k] != k) {
      free_col = k;
      break;
    }
  }
  CanonicalForm form;
  form.index = N - static_cast<int>(free_col);
  for (std::size_t r = 0; r < free_col; ++r) form.params.push_back(oracle.reduced_rows()[r][free_col]);
  return form;
}

}  // namespace cliffsub
