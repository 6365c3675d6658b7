#include "helpers.hpp"

#include <random>

using namespace gradus;
using gradus::testing::bundled;
using gradus::testing::data_path;
using gradus::testing::model;

TEST_CASE("field specs round-trip") {
  CHECK(field_to_json(FieldSpec::rationals()) == nlohmann::json{{"kind", "Q"}});
  auto j = field_to_json(FieldSpec::gf(5));
  CHECK(j.at("kind") == "GF");
  CHECK(j.at("p") == 5);
  CHECK(field_from_json(j) == FieldSpec::gf(5));
  CHECK_THROWS_AS(field_from_json(nlohmann::json{{"kind", "R"}}), Error);
}

TEST_CASE("scalar strings round-trip under random values") {
  std::mt19937_64 rng(11);
  auto q = FieldSpec::rationals();
  for (int t = 0; t < 100; ++t) {
    Scalar s = Scalar::of(q, (long)(rng() % 4001) - 2000, (long)(rng() % 997) + 1);
    CHECK(Scalar::parse(q, s.str()) == s);
  }
  auto g = FieldSpec::gf(101);
  for (int t = 0; t < 100; ++t) {
    Scalar s = Scalar::residue(rng() % 101, 101);
    CHECK(Scalar::parse(g, s.str()) == s);
  }
}

TEST_CASE("root system document shape") {
  RootSystem g2(SimpleType::G, 2);
  auto j = rootsystem_to_json(g2);
  CHECK(j.at("type") == "G");
  CHECK(j.at("rank") == 2);
  CHECK(j.at("roots").size() == 12);
}

TEST_CASE("bracket tables round-trip") {
  auto M = model(SimpleType::G, 2, FieldSpec::gf(7));
  auto j = lie_to_json(*M.algebra);
  LiePtr back = lie_from_json(j);
  REQUIRE(back->dim() == M.dim());
  CHECK(back->field() == M.algebra->field());
  for (int a = 0; a < M.dim(); ++a)
    for (int b = 0; b < M.dim(); ++b)
      CHECK(back->bracket_basis(a, b) == M.algebra->bracket_basis(a, b));
}

TEST_CASE("structurable algebras round-trip") {
  auto q = FieldSpec::rationals();
  auto A = bundled("m2_transpose", q);
  auto j = structurable_to_json(*A);
  auto back = structurable_from_json(j);
  CHECK(back->dim() == A->dim());
  CHECK(back->unit() == A->unit());
  CHECK(back->involution() == A->involution());
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    Vec x = random_vec(q, 4, rng), y = random_vec(q, 4, rng);
    CHECK(back->mul(x, y) == A->mul(x, y));
  }
  // field override reinterprets the same table over another field
  auto m5 = structurable_from_json(j, FieldSpec::gf(5));
  CHECK(m5->field() == FieldSpec::gf(5));
  CHECK(m5->validate().ok);
}

TEST_CASE("tables round-trip and golden file parses") {
  auto entries = generate_table(SimpleType::C, 3);
  auto back = table_from_json(table_to_json(entries));
  REQUIRE(back.size() == entries.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].J == entries[i].J);
    CHECK(back[i].verdict == entries[i].verdict);
    CHECK(back[i].provenance == entries[i].provenance);
  }
  auto golden = table_from_json(load_json_file(data_path("golden_table.json")));
  CHECK(golden.size() == 248);
}

TEST_CASE("kappa and hat documents carry their extras") {
  auto q = FieldSpec::rationals();
  KappaAlgebra K(bundled("kxk_swap", q));
  auto jk = kappa_to_json(K);
  CHECK(jk.at("block_dims") == nlohmann::json(std::vector<int>{1, 2, 2, 2, 1}));
  CHECK(jk.contains("blocks"));
  LiePtr back = lie_from_json(jk);  // the core table is still a bracket table
  CHECK(back->dim() == K.algebra()->dim());

  auto M = model(SimpleType::A, 1, q);
  HatAlgebra H(grading_from_J(M, JSubset(*M.roots, {1})));
  auto jh = hat_to_json(H, "A1", {1});
  CHECK(jh.at("provenance").at("parent") == "A1");
  CHECK(jh.at("provenance").at("J") == nlohmann::json(std::vector<int>{1}));
}

TEST_CASE("missing and malformed files raise ParseError") {
  CHECK_THROWS_AS(load_json_file("/nonexistent/nothing.json"), Error);
  CHECK_THROWS_AS(structurable_from_json(nlohmann::json{{"dim", 1}}), Error);
}
