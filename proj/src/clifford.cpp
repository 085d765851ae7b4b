#include "cliffsub/clifford.hpp"

#include <algorithm>
#include <array>

namespace cliffsub {

namespace {

constexpr std::array<const char*, 8> kG3Names = {"1", "e1", "e2", "e3", "i", "j", "k", "z"};

std::vector<int> indices_of(BladeMask mask) {
  std::vector<int> out;
  for (int i = 0; mask != 0; ++i, mask >>= 1U) {
    if (mask & 1U) out.push_back(i + 1);
  }
  return out;
}

}  // namespace

SignedBlade blade_mul(const Blade& a, const Blade& b) {
  if (a.n != b.n) throw DimensionMismatch();
  return {blade_sign(a.mask, b.mask), Blade{a.mask ^ b.mask, a.n}};
}

std::vector<BladeMask> generator_order(int n) {
  if (n < 0 || n > kMaxGenerators) throw std::out_of_range("generator_order: n out of range");
  std::vector<BladeMask> order(std::size_t{1} << n);
  for (BladeMask m = 0; m < order.size(); ++m) order[m] = m;
  std::stable_sort(order.begin(), order.end(), [](BladeMask x, BladeMask y) {
    const int gx = std::popcount(x);
    const int gy = std::popcount(y);
    if (gx != gy) return gx < gy;
    return indices_of(x) < indices_of(y);
  });
  return order;
}

std::string blade_name(BladeMask mask, int n) {
  if (mask >> n != 0) throw std::out_of_range("blade_name: blade outside g(n)");
  if (n == 3) {
    const auto order = generator_order(3);
    const auto pos = std::find(order.begin(), order.end(), mask) - order.begin();
    return kG3Names[static_cast<std::size_t>(pos)];
  }
  if (mask == 0) return "1";
  std::string out = "e";
  for (int i : indices_of(mask)) out += std::to_string(i);
  return out;
}

std::optional<BladeMask> parse_blade(std::string_view name, int n) {
  for (BladeMask m = 0; m < (BladeMask{1} << n); ++m) {
    if (blade_name(m, n) == name) return m;
  }
  return std::nullopt;
}

namespace {

std::optional<std::pair<BladeMask, GaussianRational>> parse_term(std::string_view t, int n) {
  if (t.empty()) return std::nullopt;
  if (auto m = parse_blade(t, n)) return std::pair{*m, GaussianRational(1)};
  int depth = 0;
  std::size_t star = std::string_view::npos;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k] == '(') ++depth;
    if (t[k] == ')') --depth;
    if (t[k] == '*' && depth == 0) star = k;
  }
  if (star != std::string_view::npos) {
    if (auto m = parse_blade(t.substr(star + 1), n)) {
      auto c = GaussianRational::parse(t.substr(0, star));
      if (!c) return std::nullopt;
      return std::pair{*m, *c};
    }
  }
  auto c = GaussianRational::parse(t);
  if (!c) return std::nullopt;
  return std::pair{BladeMask{0}, *c};
}

}  // namespace

std::optional<MultiVector<GaussianRational>> parse_multivector(std::string_view text, int n) {
  std::string compact;
  for (char c : text) {
    if (c != ' ' && c != '\t') compact += c;
  }
  if (compact.empty()) return std::nullopt;
  MultiVector<GaussianRational> out(n);
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= compact.size(); ++k) {
    const bool end = k == compact.size();
    if (!end) {
      const char c = compact[k];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth < 0) return std::nullopt;
      const bool split = (c == '+' || c == '-') && depth == 0 && k > start && compact[k - 1] != '*' &&
                         compact[k - 1] != '/' && compact[k - 1] != '+' && compact[k - 1] != '-';
      if (!split) continue;
    }
    std::string_view t(compact.data() + start, k - start);
    bool negative = false;
    if (!t.empty() && (t.front() == '+' || t.front() == '-')) {
      negative = t.front() == '-';
      t.remove_prefix(1);
    }
    auto term = parse_term(t, n);
    if (!term) return std::nullopt;
    out.add_term(term->first, negative ? -term->second : term->second);
    start = k;
  }
  if (depth != 0) return std::nullopt;
  return out;
}

Table build_table(int n) {
  if (n < 1 || n > 6) throw std::out_of_range("build_table: n must be in 1..6");
  Table t;
  t.n = n;
  t.order = generator_order(n);
  t.cells.reserve(t.order.size() * t.order.size());
  for (BladeMask row : t.order) {
    for (BladeMask col : t.order) t.cells.push_back(blade_mul({row, n}, {col, n}));
  }
  return t;
}

const std::vector<std::vector<std::string>>& reference_table_g3() {
  static const std::vector<std::vector<std::string>> table = {
      {"1", "e1", "e2", "e3", "i", "j", "k", "z"},
      {"e1", "-1", "i", "j", "-e2", "-e3", "z", "-k"},
      {"e2", "-i", "-1", "k", "e1", "-z", "-e3", "j"},
      {"e3", "-j", "-k", "-1", "z", "e1", "e2", "-i"},
      {"i", "e2", "-e1", "z", "-1", "k", "-j", "-e3"},
      {"j", "e3", "-z", "-e1", "-k", "-1", "i", "e2"},
      {"k", "z", "e3", "-e2", "j", "-i", "-1", "-e1"},
      {"z", "-k", "j", "-i", "-e3", "e2", "-e1", "1"},
  };
  return table;
}

std::string signed_blade_name(const SignedBlade& sb) {
  return (sb.sign < 0 ? "-" : "") + blade_name(sb.blade.mask, sb.blade.n);
}

}  // namespace cliffsub
