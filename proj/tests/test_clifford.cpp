#include "doctest.h"
#include "gen.hpp"

#include "cliffsub/clifford.hpp"

using namespace cliffsub;
using testgen::Gen;
using testgen::kCases;

namespace {

using MV = MultiVector<GaussianRational>;

// Word reduction: sort the concatenated index list by adjacent swaps
// (each flips the sign) and cancel equal neighbours (e_i e_i = -1).
SignedBlade naive_product(BladeMask a, BladeMask b, int n) {
  std::vector<int> w;
  for (int i = 0; i < n; ++i) {
    if (a >> i & 1U) w.push_back(i);
  }
  for (int i = 0; i < n; ++i) {
    if (b >> i & 1U) w.push_back(i);
  }
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (w[k] > w[k + 1]) {
        std::swap(w[k], w[k + 1]);
        sign = -sign;
        changed = true;
        break;
      }
      if (w[k] == w[k + 1]) {
        w.erase(w.begin() + static_cast<long>(k), w.begin() + static_cast<long>(k) + 2);
        sign = -sign;
        changed = true;
        break;
      }
    }
  }
  BladeMask m = 0;
  for (int i : w) m |= BladeMask{1} << i;
  return {sign, {m, n}};
}

BladeMask g3(std::string_view name) { return *parse_blade(name, 3); }

}  // namespace

TEST_CASE("blade signs") {
  CHECK(blade_sign(0b1, 0b1) == -1);
  CHECK(blade_sign(0b1, 0b10) == 1);
  CHECK(blade_sign(0b10, 0b1) == -1);
  CHECK(blade_sign(0b111, 0b111) == 1);
  CHECK(blade_mul({g3("i"), 3}, {g3("i"), 3}) == SignedBlade{-1, {0, 3}});
  CHECK(blade_mul({g3("e1"), 3}, {g3("e2"), 3}) == SignedBlade{1, {g3("i"), 3}});
  CHECK(blade_mul({g3("e2"), 3}, {g3("e1"), 3}) == SignedBlade{-1, {g3("i"), 3}});
  CHECK(blade_mul({g3("k"), 3}, {g3("z"), 3}) == SignedBlade{-1, {g3("e1"), 3}});
  CHECK_THROWS_AS(blade_mul({1, 3}, {1, 4}), DimensionMismatch);
}

TEST_CASE("blade product agrees with word reduction") {
  for (int n = 1; n <= 5; ++n) {
    for (BladeMask a = 0; a < (BladeMask{1} << n); ++a) {
      for (BladeMask b = 0; b < (BladeMask{1} << n); ++b) {
        CHECK(blade_mul({a, n}, {b, n}) == naive_product(a, b, n));
      }
    }
  }
}

TEST_CASE("generator order and names") {
  std::vector<std::string> names;
  for (BladeMask m : generator_order(3)) names.push_back(blade_name(m, 3));
  CHECK(names == std::vector<std::string>{"1", "e1", "e2", "e3", "i", "j", "k", "z"});
  std::vector<std::string> n4;
  for (BladeMask m : generator_order(4)) n4.push_back(blade_name(m, 4));
  CHECK(n4.size() == 16);
  CHECK(n4[4] == "e4");
  CHECK(n4[5] == "e12");
  CHECK(n4.back() == "e1234");
  CHECK(parse_blade("e124", 4) == BladeMask{0b1011});
  CHECK_FALSE(parse_blade("e5", 4).has_value());
  CHECK_FALSE(parse_blade("q", 3).has_value());
  CHECK(signed_blade_name({-1, {g3("e3"), 3}}) == "-e3");
}

TEST_CASE("table of g(3) matches the hand-tabulated one") {
  const Table t = build_table(3);
  const auto& ref = reference_table_g3();
  int matches = 0;
  for (std::size_t r = 0; r < 8; ++r) {
    for (std::size_t c = 0; c < 8; ++c) {
      if (signed_blade_name(t.at(r, c)) == ref[r][c]) ++matches;
    }
  }
  CHECK(matches == 64);
  CHECK_THROWS_AS(build_table(0), std::out_of_range);
  CHECK_THROWS_AS(build_table(7), std::out_of_range);
  CHECK(build_table(4).cells.size() == 256);
}

TEST_CASE("multivector basics") {
  const MV e1 = MV::blade(3, g3("e1"), 1);
  const MV k = MV::blade(3, g3("k"), 1);
  CHECK((e1 * e1) == MV::blade(3, 0, -1));
  CHECK((e1 + k).coefficient(g3("k"))->is_one());
  CHECK((e1 - e1).is_zero());
  CHECK(e1.scaled(GaussianRational::I()) == MV::blade(3, g3("e1"), GaussianRational::I()));
  CHECK_THROWS_AS(e1 * MV::blade(4, 1, 1), DimensionMismatch);
  CHECK_THROWS_AS(MV(17), std::out_of_range);
  MV x(2);
  CHECK_THROWS_AS(x.add_term(0b100, 1), std::out_of_range);
  CHECK_THROWS_AS(embed(e1, 3, -1), std::invalid_argument);
  CHECK_THROWS_AS(embed(e1, 2, 1), DimensionMismatch);
}

TEST_CASE("multivector text") {
  const MV v = *parse_multivector("e3 - 2*I*j", 3);
  CHECK(format_multivector(v) == "e3 - 2*I*j");
  CHECK(format_multivector(*parse_multivector("(1/2 + I)*e1 + 3", 3)) == "3 + (1/2 + I)*e1");
  CHECK(format_multivector(MV(3)) == "0");
  CHECK(format_multivector(*parse_multivector("-1 + e12 - e4", 4)) == "-1 - e4 + e12");
  CHECK_FALSE(parse_multivector("e4", 3).has_value());
  CHECK_FALSE(parse_multivector("(e1", 3).has_value());
  CHECK_FALSE(parse_multivector("", 3).has_value());

  Gen g;
  for (int c = 0; c < kCases; ++c) {
    const int n = static_cast<int>(g.between(1, 4));
    const MV x = g.multivector(n);
    const auto back = parse_multivector(format_multivector(x), n);
    REQUIRE(back.has_value());
    CHECK(*back == x);
  }
}

TEST_CASE("multivector product is associative in g(3) and g(4)") {
  Gen g;
  for (int c = 0; c < kCases; ++c) {
    const int n = c % 2 == 0 ? 3 : 4;
    const MV x = g.multivector(n), y = g.multivector(n), z = g.multivector(n);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x + y) * z == x * z + y * z);
  }
}

TEST_CASE("embedding is a homomorphism") {
  Gen g;
  for (int c = 0; c < kCases; ++c) {
    const int n = static_cast<int>(g.between(1, 4));
    const int k = static_cast<int>(g.between(1, 3));
    const MV x = g.multivector(n), y = g.multivector(n);
    CHECK(embed(x * y, n, k) == embed(x, n, k) * embed(y, n, k));
    CHECK(embed(x + y, n, k) == embed(x, n, k) + embed(y, n, k));
    CHECK(embed(x, n, k).n() == n + k);
  }
}
