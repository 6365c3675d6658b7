#include "helpers.hpp"

using namespace gradus;
using gradus::testing::bundled;
using gradus::testing::data_path;
using gradus::testing::model;
using gradus::testing::unit_vec;

namespace {

const std::vector<std::string> kBundled{"k_trivial", "kxk_swap", "m2_transpose"};

}  // namespace

TEST_CASE("bundled algebras validate and match their expected sidecars") {
  auto q = FieldSpec::rationals();
  for (const auto& name : kBundled) {
    CAPTURE(name);
    auto A = bundled(name, q);
    auto val = A->validate();
    CHECK(val.ok);
    auto expected = load_json_file(data_path("algebras/" + name + ".expected.json"));
    CHECK(A->skew_dim() == expected.at("skew_dim").get<int>());
    KappaAlgebra K(A);
    CHECK(K.block_dims() == expected.at("block_dims").get<std::vector<int>>());
    CHECK(K.unit_pair_is_grading_derivation());
  }
}

TEST_CASE("operator calculus on the unit") {
  auto q = FieldSpec::rationals();
  for (const auto& name : kBundled) {
    auto A = bundled(name, q);
    int d = A->dim();
    // V_{1,1} = id
    CHECK(A->v_op(A->unit(), A->unit()) == Matrix::identity(q, d));
    // U_x 1 = T_x x
    for (int i = 0; i < d; ++i) {
      Vec x = unit_vec(q, d, i);
      CHECK(A->u_op(x).apply(A->unit()) == A->t_op(x).apply(x));
    }
  }
}

TEST_CASE("one-dimensional case: V is plain multiplication and psi vanishes") {
  auto q = FieldSpec::rationals();
  auto A = bundled("k_trivial", q);
  Vec x{Scalar::of(q, 3)}, y{Scalar::of(q, -2)}, z{Scalar::of(q, 5)};
  CHECK(A->triple(x, y, z) == A->mul(A->mul(x, y), z));
  CHECK(A->skew_dim() == 0);
  CHECK(is_zero_vec(A->psi(x, y)));
  // id = V_{1,1}; its eps transform is -id
  CHECK(A->eps(Matrix::identity(q, 1)) == Matrix::identity(q, 1) * Scalar::of(q, -1));
}

TEST_CASE("psi identities") {
  auto q = FieldSpec::rationals();
  for (const auto& name : kBundled) {
    auto A = bundled(name, q);
    int d = A->dim();
    for (int i = 0; i < d; ++i) {
      CHECK(is_zero_vec(A->psi(unit_vec(q, d, i), unit_vec(q, d, i))));
      for (int j = 0; j < d; ++j) {
        Vec p = A->psi(unit_vec(q, d, i), unit_vec(q, d, j));
        Vec pn = A->psi(unit_vec(q, d, j), unit_vec(q, d, i));
        for (int k = 0; k < d; ++k) CHECK(p[k] == -pn[k]);
        CHECK(A->skew_coordinates(p).has_value());  // psi lands in the skew part
      }
    }
    // psi(1, s) = -2s for skew s
    for (const auto& s : A->skew_basis()) {
      Vec p = A->psi(A->unit(), s);
      CHECK(p == scaled(s, Scalar::of(q, -2)));
    }
  }
}

TEST_CASE("eps/delta transform identities") {
  auto q = FieldSpec::rationals();
  for (const auto& name : kBundled) {
    auto A = bundled(name, q);
    int d = A->dim();
    Matrix zero(q, d, d);
    CHECK(A->eps(zero) == zero);
    CHECK(A->delta(zero) == zero);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Vec x = unit_vec(q, d, i), y = unit_vec(q, d, j);
        Matrix v = A->v_op(x, y);
        // V^eps_{x,y} = -V_{y,x}
        CHECK(A->eps(v) == A->v_op(y, x) * Scalar::of(q, -1));
        // V^delta_{x,y} s = -psi(x, s y)
        for (const auto& s : A->skew_basis()) {
          Vec lhs = A->delta(v).apply(s);
          Vec rhs = A->psi(x, A->mul(s, y));
          CHECK(lhs == scaled(rhs, Scalar::of(q, -1)));
        }
      }
  }
}

TEST_CASE("instrl span dimensions") {
  auto q = FieldSpec::rationals();
  CHECK(bundled("k_trivial", q)->instrl_basis().ops.size() == 1);
  CHECK(bundled("kxk_swap", q)->instrl_basis().ops.size() == 2);
  CHECK(bundled("m2_transpose", q)->instrl_basis().ops.size() == 5);
}

TEST_CASE("a non-involutive map is rejected") {
  auto q = FieldSpec::rationals();
  auto doc = load_json_file(data_path("algebras/m2_transpose.json"));
  doc["involution"][1][2] = "0";
  doc["involution"][1][1] = "1";  // no longer order 2 / anti-automorphic
  auto A = structurable_from_json(doc);
  auto val = A->validate();
  CHECK_FALSE(val.ok);
  CHECK(val.code == Errc::NotInvolution);
}

TEST_CASE("absolute zero divisors") {
  auto gf5 = FieldSpec::gf(5);
  auto k5 = bundled("k_trivial", gf5);
  auto rep = k5->absolute_zero_divisors();
  CHECK(rep.exhaustive);
  CHECK(rep.found.empty());
  auto m25 = bundled("m2_transpose", gf5);
  auto rep2 = m25->absolute_zero_divisors();
  CHECK(rep2.exhaustive);  // 5^4 = 625 elements
  CHECK(rep2.found.empty());
  auto mq = bundled("m2_transpose", FieldSpec::rationals());
  CHECK_FALSE(mq->absolute_zero_divisors().exhaustive);
}

TEST_CASE("Kantor pair of the sl2 grading") {
  auto q = FieldSpec::rationals();
  auto M = model(SimpleType::A, 1, q);
  Grading g = grading_from_J(M, JSubset(*M.roots, {1}));
  KantorPair P(g);
  CHECK(P.dim(1) == 1);
  CHECK(P.dim(-1) == 1);
  // <e, f, e> = -[[e,f],e] = -2e
  Vec one{Scalar::one(q)};
  CHECK(P.triple(1, one, one, one) == Vec{Scalar::of(q, -2)});
  CHECK(P.verify_axioms().ok);
}

TEST_CASE("Kantor pairs from Chevalley gradings") {
  auto q = FieldSpec::rationals();
  auto g2 = model(SimpleType::G, 2, q);
  KantorPair P(grading_from_J(g2, JSubset(*g2.roots, {2})));
  CHECK(P.dim(1) == 4);
  auto rep = P.verify_axioms();
  CHECK(rep.ok);
  CHECK(rep.exhaustive);

  auto a3 = model(SimpleType::A, 3, FieldSpec::gf(5));
  KantorPair P2(grading_from_J(a3, JSubset(*a3.roots, {1, 3})));
  auto rep2 = P2.verify_axioms(100, 2024);
  CHECK(rep2.ok);
  CHECK(rep2.seed == 2024);
}

TEST_CASE("pair extracted from kappa matches the V-operator") {
  auto q = FieldSpec::rationals();
  for (const auto& name : kBundled) {
    auto A = bundled(name, q);
    KappaAlgebra K(A);
    KantorPair P(K.grading());
    int d = A->dim();
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y)
        for (int z = 0; z < d; ++z) {
          Vec t = P.triple(1, unit_vec(q, d, x), unit_vec(q, d, y), unit_vec(q, d, z));
          Vec expect =
              scaled(A->triple(unit_vec(q, d, x), unit_vec(q, d, y), unit_vec(q, d, z)),
                     Scalar::of(q, -1));
          CHECK(t == expect);
        }
  }
}

TEST_CASE("k_matrix agrees with the literal triple-product formula") {
  std::mt19937_64 rng(31);
  for (auto fs : {FieldSpec::rationals(), FieldSpec::gf(7)}) {
    auto g2 = model(SimpleType::G, 2, fs);
    KantorPair P(grading_from_J(g2, JSubset(*g2.roots, {2})));
    for (int sigma : {1, -1}) {
      int ds = P.dim(sigma), dopp = P.dim(-sigma);
      for (int t = 0; t < 5; ++t) {
        Vec a = random_vec(fs, ds, rng), b = random_vec(fs, ds, rng);
        Matrix fast = P.k_matrix(sigma, a, b);
        for (int c = 0; c < dopp; ++c) {
          Vec z = unit_vec(fs, dopp, c);
          Vec col = P.triple(sigma, a, z, b);
          Vec col2 = P.triple(sigma, b, z, a);
          for (int r = 0; r < ds; ++r) CHECK(fast.at(r, c) == col[r] - col2[r]);
        }
      }
    }
  }
}

TEST_CASE("pair construction needs a nonzero +-1 part") {
  auto q = FieldSpec::rationals();
  LieAlgebraBuilder b(q, {"h"});
  Grading g(b.build(true), {0});
  CHECK_THROWS_AS(KantorPair P(g), Error);
}

TEST_CASE("unit pair searches") {
  auto q = FieldSpec::rationals();
  auto a1 = model(SimpleType::A, 1, q);
  JSubset J1(*a1.roots, {1});
  auto up = find_unit_pair(grading_from_J(a1, J1), grading_derivation(a1, J1));
  REQUIRE(up.found);
  CHECK(up.u == unit_vec(q, 3, 0));  // e
  CHECK(up.v == scaled(unit_vec(q, 3, 1), Scalar::of(q, 1, 2)));  // f/2
  CHECK(up.attempts_used == 1);

  auto gf5 = FieldSpec::gf(5);
  auto a2 = model(SimpleType::A, 2, gf5);
  JSubset J2(*a2.roots, {1});
  auto neg = find_unit_pair(grading_from_J(a2, J2), grading_derivation(a2, J2), 4, 9);
  CHECK_FALSE(neg.found);
  CHECK(neg.exhaustive);  // 5^4 pairs scanned

  auto g2 = model(SimpleType::G, 2, q);
  JSubset Jg(*g2.roots, {2});
  auto pos = find_unit_pair(grading_from_J(g2, Jg), grading_derivation(g2, Jg));
  CHECK(pos.found);
  CHECK(pos.attempts_used == 1);
  CHECK(g2.algebra->bracket(pos.u, pos.v) == grading_derivation(g2, Jg).element);

  // outer derivation: the search cannot run
  auto a4 = model(SimpleType::A, 4, gf5);
  JSubset J4(*a4.roots, {1});
  CHECK_THROWS_AS(find_unit_pair(grading_from_J(a4, J4), grading_derivation(a4, J4)), Error);
}

TEST_CASE("graded isomorphism from unit pairs") {
  auto q = FieldSpec::rationals();
  auto A = bundled("k_trivial", q);
  KappaAlgebra K(A);
  auto a1 = model(SimpleType::A, 1, q);
  JSubset J(*a1.roots, {1});
  Grading g = grading_from_J(a1, J);
  auto up = find_unit_pair(g, grading_derivation(a1, J));
  REQUIRE(up.found);
  auto iso = graded_isomorphism_from_pairs(K.grading(), K.unit_plus(), K.unit_minus(), g, up.u,
                                           up.v);
  CHECK(iso.status == GradedIsoResult::Status::Isomorphic);

  // kxk vs sl3 with the full grading: the unit pair alone does not generate,
  // so the check stops at matching dimensions
  auto B = bundled("kxk_swap", q);
  KappaAlgebra K2(B);
  auto a2 = model(SimpleType::A, 2, q);
  JSubset J2(*a2.roots, {1, 2});
  Grading g2 = grading_from_J(a2, J2);
  auto up2 = find_unit_pair(g2, grading_derivation(a2, J2));
  REQUIRE(up2.found);
  auto iso2 = graded_isomorphism_from_pairs(K2.grading(), K2.unit_plus(), K2.unit_minus(), g2,
                                            up2.u, up2.v);
  CHECK(iso2.status == GradedIsoResult::Status::DimsMatchOnly);

  // mismatched dimensions are detected immediately
  auto iso3 = graded_isomorphism_from_pairs(K.grading(), K.unit_plus(), K.unit_minus(), g2,
                                            up2.u, up2.v);
  CHECK(iso3.status == GradedIsoResult::Status::DimsDiffer);
}
