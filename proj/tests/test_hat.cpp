#include "helpers.hpp"

#include "gradus/hat.hpp"

using namespace gradus;
using gradus::testing::model;
using gradus::testing::unit_vec;

TEST_CASE("sl2 hat extension") {
  auto q = FieldSpec::rationals();
  auto M = model(SimpleType::A, 1, q);
  Grading g = grading_from_J(M, JSubset(*M.roots, {1}));
  HatAlgebra hat(g);
  CHECK(hat.hat0_dim() == 1);
  CHECK(hat.contains_grading_derivation());
  CHECK(hat.algebra()->verify_jacobi().ok);
  // natural map: h acts as (+2, -2), i.e. twice the grading derivation
  auto nm = hat.natural_map();
  REQUIRE(nm.domain.size() == 1);
  CHECK(nm.homomorphism);
  CHECK(nm.kernel.empty());
  Vec z = hat.zeta();
  Vec h_image = zero_vec(q, hat.algebra()->dim());
  for (int k = 0; k < hat.hat0_dim(); ++k)
    h_image[hat.hat0_offset() + k] = nm.coords.at(k, 0);
  CHECK(h_image == scaled(z, Scalar::of(q, 2)));
}

TEST_CASE("degenerate two-dimensional abelian input") {
  auto q = FieldSpec::rationals();
  LieAlgebraBuilder b(q, {"x", "y"});
  Grading g(b.build(true), {1, -1});
  HatAlgebra hat(g);
  CHECK(hat.hat0_dim() == 2);  // all pairs of 1x1 blocks; constraints vacuous
  CHECK(hat.contains_grading_derivation());
}

TEST_CASE("G2 hat: the natural image of L0 plus zeta spans") {
  auto q = FieldSpec::rationals();
  auto M = model(SimpleType::G, 2, q);
  Grading g = grading_from_J(M, JSubset(*M.roots, {2}));
  HatAlgebra hat(g);
  CHECK(hat.hat0_dim() == 4);  // == dim L_0; zeta lies in the natural image over Q
  CHECK(hat.contains_grading_derivation());
  auto nm = hat.natural_map();
  CHECK(nm.homomorphism);
  CHECK(nm.kernel.empty());
  CHECK(nm.coords.rank() == 4);
  CHECK(hat.algebra()->verify_jacobi().ok);
  CHECK(hat.grading().block_dims() == std::vector<int>{1, 4, 4, 4, 1});
}

TEST_CASE("natural-map kernel picks up the center over GF(5)") {
  auto gf5 = FieldSpec::gf(5);
  auto M = model(SimpleType::A, 4, gf5);
  Grading g = grading_from_J(M, JSubset(*M.roots, {1}));
  HatAlgebra hat(g);
  auto nm = hat.natural_map();
  REQUIRE(nm.kernel.size() == 1);
  auto center = M.algebra->center();
  REQUIRE(center.size() == 1);
  // same line
  RowReducer rr(gf5, M.dim());
  rr.add(nm.kernel[0]);
  CHECK(rr.contains(center[0]));
  CHECK(nm.homomorphism);
}

TEST_CASE("hat0 is closed under commutators") {
  auto M = model(SimpleType::B, 2, FieldSpec::gf(7));
  Grading g = grading_from_J(M, JSubset(*M.roots, {2}));
  HatAlgebra hat(g);
  const FieldSpec& fs = M.algebra->field();
  int n = hat.algebra()->dim();
  for (int a = 0; a < hat.hat0_dim(); ++a)
    for (int b = a + 1; b < hat.hat0_dim(); ++b) {
      Vec bracket = hat.algebra()->bracket(unit_vec(fs, n, hat.hat0_offset() + a),
                                           unit_vec(fs, n, hat.hat0_offset() + b));
      // the commutator of two degree-0 tuples stays in the degree-0 block
      for (int p = 0; p < hat.hat0_offset(); ++p) CHECK(bracket[p].is_zero());
    }
}

TEST_CASE("hat0 dimension agrees across fields (spot check)") {
  for (auto [t, r, J] : std::vector<std::tuple<SimpleType, int, std::vector<int>>>{
           {SimpleType::A, 2, {1, 2}}, {SimpleType::C, 3, {2}}, {SimpleType::A, 4, {1}}}) {
    int dim_q = -1;
    for (auto fs : {FieldSpec::rationals(), FieldSpec::gf(5), FieldSpec::gf(7)}) {
      auto M = model(t, r, fs);
      HatAlgebra hat(grading_from_J(M, JSubset(*M.roots, J)));
      if (dim_q < 0)
        dim_q = hat.hat0_dim();
      else
        CHECK(hat.hat0_dim() == dim_q);
    }
  }
}
