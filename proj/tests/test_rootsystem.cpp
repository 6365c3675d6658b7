#include <doctest.h>

#include "gradus/rootsystem.hpp"
#include "gradus/field.hpp"

using namespace gradus;

namespace {

std::vector<std::pair<SimpleType, int>> sweep_rank_le_8() {
  std::vector<std::pair<SimpleType, int>> out;
  for (int r = 1; r <= 8; ++r) out.push_back({SimpleType::A, r});
  for (int r = 2; r <= 8; ++r) out.push_back({SimpleType::B, r});
  for (int r = 3; r <= 8; ++r) out.push_back({SimpleType::C, r});
  for (int r = 4; r <= 8; ++r) out.push_back({SimpleType::D, r});
  out.push_back({SimpleType::G, 2});
  out.push_back({SimpleType::F, 4});
  out.push_back({SimpleType::E, 6});
  out.push_back({SimpleType::E, 7});
  out.push_back({SimpleType::E, 8});
  return out;
}

}  // namespace

TEST_CASE("root counts match the classical values") {
  for (auto [t, r] : sweep_rank_le_8()) {
    RootSystem rs(t, r);
    CHECK(rs.num_roots() == classical_root_count(t, r));
    CHECK(rs.num_positive() * 2 == rs.num_roots());
  }
}

TEST_CASE("invalid type/rank pairs are rejected") {
  CHECK_THROWS_AS(RootSystem(SimpleType::A, 0), Error);
  CHECK_THROWS_AS(RootSystem(SimpleType::B, 1), Error);
  CHECK_THROWS_AS(RootSystem(SimpleType::C, 2), Error);
  CHECK_THROWS_AS(RootSystem(SimpleType::D, 3), Error);
  CHECK_THROWS_AS(RootSystem(SimpleType::E, 5), Error);
  CHECK_THROWS_AS(RootSystem(SimpleType::E, 9), Error);
  CHECK_THROWS_AS(RootSystem(SimpleType::F, 5), Error);
  CHECK_THROWS_AS(RootSystem(SimpleType::G, 3), Error);
  CHECK_THROWS_AS(type_from_letter('H'), Error);
}

TEST_CASE("G2 positive roots") {
  RootSystem g2(SimpleType::G, 2);
  std::vector<std::vector<int>> expected{{0, 1}, {1, 0}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
  REQUIRE(g2.num_positive() == 6);
  for (const auto& m : expected) CHECK(g2.index_of(m) >= 0);
  CHECK(g2.index_of({2, 2}) == -1);
}

TEST_CASE("A1 has two roots") {
  RootSystem a1(SimpleType::A, 1);
  CHECK(a1.num_roots() == 2);
  CHECK(a1.index_of({1}) >= 0);
  CHECK(a1.index_of({-1}) >= 0);
}

TEST_CASE("coefficients") {
  RootSystem g2(SimpleType::G, 2);
  int hi = g2.highest_root();
  CHECK(g2.coefficient(hi, 2) == 2);
  CHECK(g2.coefficient(g2.simple_root_index(1), 1) == 1);
  RootSystem a3(SimpleType::A, 3);
  CHECK(a3.coefficient(a3.highest_root(), 2) == 1);
}

TEST_CASE("highest roots") {
  for (int l : {1, 3, 5, 8}) {
    RootSystem rs(SimpleType::A, l);
    for (int i = 1; i <= l; ++i) CHECK(rs.coefficient(rs.highest_root(), i) == 1);
  }
  RootSystem g2(SimpleType::G, 2);
  CHECK(g2.roots()[g2.highest_root()] == std::vector<int>{3, 2});
  RootSystem c3(SimpleType::C, 3);
  CHECK(c3.roots()[c3.highest_root()] == std::vector<int>{2, 2, 1});
  // maximality: highest + simple is never a root
  for (auto [t, r] : sweep_rank_le_8()) {
    RootSystem rs(t, r);
    for (int i = 1; i <= r; ++i)
      CHECK(rs.sum_index(rs.highest_root(), rs.simple_root_index(i)) == -1);
  }
}

TEST_CASE("every root is all-nonnegative or all-nonpositive") {
  for (auto [t, r] : sweep_rank_le_8()) {
    RootSystem rs(t, r);
    for (const auto& m : rs.roots()) {
      bool has_pos = false, has_neg = false;
      for (int x : m) {
        has_pos |= x > 0;
        has_neg |= x < 0;
      }
      CHECK_FALSE((has_pos && has_neg));
    }
  }
}

TEST_CASE("structure constant magnitudes and antisymmetry") {
  RootSystem a2(SimpleType::A, 2);
  ChevalleyConstants ca2(a2);
  int i1 = a2.simple_root_index(1), i2 = a2.simple_root_index(2);
  CHECK(std::abs(ca2.n(i1, i2)) == 1);

  RootSystem b2(SimpleType::B, 2);
  ChevalleyConstants cb2(b2);
  int b_2 = b2.simple_root_index(2);
  int b12 = b2.index_of({1, 1});
  CHECK(std::abs(cb2.n(b_2, b12)) == 2);

  for (auto [t, r] : std::vector<std::pair<SimpleType, int>>{
           {SimpleType::G, 2}, {SimpleType::B, 3}, {SimpleType::F, 4}}) {
    RootSystem rs(t, r);
    ChevalleyConstants cc(rs);
    for (int a = 0; a < rs.num_roots(); ++a)
      for (int b = 0; b < rs.num_roots(); ++b) {
        CHECK(cc.n(a, b) == -cc.n(b, a));
        if (rs.negative_of(a) != b && rs.sum_index(a, b) != -1)
          CHECK(std::abs(cc.n(a, b)) == rs.string_down_length(a, b) + 1);
      }
  }
}

TEST_CASE("structure constants are deterministic") {
  RootSystem f4(SimpleType::F, 4);
  ChevalleyConstants one(f4), two(f4);
  CHECK(one.raw() == two.raw());
}

TEST_CASE("levels") {
  RootSystem g2(SimpleType::G, 2);
  JSubset J(g2, {2});
  auto lv = levels(g2, J);
  CHECK(lv[g2.index_of({1, 0})] == 0);
  CHECK(lv[g2.index_of({0, 1})] == 1);
  CHECK(lv[g2.index_of({1, 1})] == 1);
  CHECK(lv[g2.index_of({2, 1})] == 1);
  CHECK(lv[g2.index_of({3, 1})] == 1);
  CHECK(lv[g2.index_of({3, 2})] == 2);

  // with J = Pi the level of the highest root is its height
  JSubset full(g2, {1, 2});
  CHECK(max_level(g2, full) == g2.height(g2.highest_root()));

  RootSystem a3(SimpleType::A, 3);
  CHECK(levels(a3, JSubset(a3, {1, 3}))[a3.index_of({1, 1, 1})] == 2);
}

TEST_CASE("levels are additive on root sums") {
  RootSystem f4(SimpleType::F, 4);
  for (auto js : std::vector<std::vector<int>>{{1}, {4}, {2}, {1, 4}}) {
    JSubset J(f4, js);
    auto lv = levels(f4, J);
    for (int a = 0; a < f4.num_roots(); ++a)
      for (int b = 0; b < f4.num_roots(); ++b) {
        int s = f4.sum_index(a, b);
        if (s != -1) CHECK(lv[s] == lv[a] + lv[b]);
      }
  }
}

TEST_CASE("grading width classification") {
  RootSystem a1(SimpleType::A, 1);
  CHECK(grading_width(a1, JSubset(a1, {1})) == GradingWidth::ThreeGraded);
  RootSystem g2(SimpleType::G, 2);
  CHECK(grading_width(g2, JSubset(g2, {2})) == GradingWidth::FiveGraded);
  CHECK(grading_width(g2, JSubset(g2, {1})) == GradingWidth::TooWide);
}

TEST_CASE("distinguished parabolic counts") {
  RootSystem a1(SimpleType::A, 1);
  CHECK(is_distinguished(a1, JSubset(a1, {1})));
  RootSystem a2(SimpleType::A, 2);
  CHECK_FALSE(is_distinguished(a2, JSubset(a2, {1})));
  RootSystem g2(SimpleType::G, 2);
  CHECK(is_distinguished(g2, JSubset(g2, {1, 2})));
}

TEST_CASE("JSubset validation") {
  RootSystem a2(SimpleType::A, 2);
  CHECK_THROWS_AS(JSubset(a2, {}), Error);
  CHECK_THROWS_AS(JSubset(a2, {3}), Error);
  CHECK_THROWS_AS(JSubset(a2, {0}), Error);
  CHECK(JSubset(a2, {2, 1}).str() == "{1,2}");
}

TEST_CASE("coroot coefficients are integral and pair correctly") {
  for (auto [t, r] : std::vector<std::pair<SimpleType, int>>{
           {SimpleType::B, 3}, {SimpleType::C, 3}, {SimpleType::G, 2}, {SimpleType::F, 4}}) {
    RootSystem rs(t, r);
    for (int a = 0; a < rs.num_roots(); ++a) {
      auto c = rs.coroot_coefficients(a);
      // <alpha, alpha^vee> = 2
      long s = 0;
      for (int i = 1; i <= rs.rank(); ++i) s += (long)c[i - 1] * rs.pairing(a, i);
      CHECK(s == 2);
    }
  }
}
