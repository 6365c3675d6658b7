#include <doctest.h>

#include <random>

#include "gradus/linalg.hpp"

using namespace gradus;

namespace {

Matrix random_matrix(const FieldSpec& fs, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix m(fs, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m.at(i, j) = fs.is_rationals() ? Scalar::of(fs, (long)(rng() % 11) - 5)
                                     : Scalar::residue(rng() % fs.p, fs.p);
  return m;
}

}  // namespace

TEST_CASE("solve on the identity") {
  auto q = FieldSpec::rationals();
  Matrix id = Matrix::identity(q, 3);
  Vec b{Scalar::of(q, 1), Scalar::of(q, 2), Scalar::of(q, 3)};
  auto res = solve_linear(id, b);
  REQUIRE(res.consistent);
  CHECK(res.solution == b);
}

TEST_CASE("zero matrix with nonzero rhs is inconsistent") {
  auto q = FieldSpec::rationals();
  Matrix z(q, 2, 2);
  Vec b{Scalar::of(q, 1), Scalar::of(q, 0)};
  CHECK_FALSE(solve_linear(z, b).consistent);
}

TEST_CASE("solve recovers the preimage for invertible systems over GF(101)") {
  auto fs = FieldSpec::gf(101);
  std::mt19937_64 rng(99);
  Matrix A(fs, 0, 0);
  do {
    A = random_matrix(fs, 10, 10, rng);
  } while (A.rank() < 10);
  Vec x0;
  for (int i = 0; i < 10; ++i) x0.push_back(Scalar::residue(rng() % 101, 101));
  Vec b = A.apply(x0);
  auto res = solve_linear(A, b);
  REQUIRE(res.consistent);
  CHECK(res.solution == x0);
}

TEST_CASE("solve_linear rejects mismatched fields") {
  Matrix A = Matrix::identity(FieldSpec::gf(5), 2);
  Vec b{Scalar::one(FieldSpec::gf(7)), Scalar::one(FieldSpec::gf(7))};
  CHECK_THROWS_AS(solve_linear(A, b), Error);
}

TEST_CASE("nullspace basics") {
  auto q = FieldSpec::rationals();
  CHECK(nullspace(Matrix::identity(q, 4)).empty());
  CHECK(nullspace(Matrix(q, 2, 3)).size() == 3);
  auto gf5 = FieldSpec::gf(5);
  Matrix m(gf5, 1, 2);
  m.at(0, 0) = Scalar::of(gf5, 1);
  m.at(0, 1) = Scalar::of(gf5, -1);
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0][0] == ns[0][1]);  // proportional to (1,1)
  CHECK_FALSE(ns[0][0].is_zero());
}

TEST_CASE("rank + nullity = cols for random matrices") {
  std::mt19937_64 rng(5);
  for (auto fs : {FieldSpec::gf(5), FieldSpec::gf(101), FieldSpec::rationals()}) {
    for (int t = 0; t < 20; ++t) {
      std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
      Matrix A = random_matrix(fs, r, c, rng);
      auto ns = nullspace(A);
      CHECK(A.rank() + ns.size() == c);
      for (const auto& v : ns) CHECK(is_zero_vec(A.apply(v)));
    }
  }
}

TEST_CASE("substitute-back is exact for random consistent systems") {
  std::mt19937_64 rng(17);
  for (auto fs : {FieldSpec::gf(5), FieldSpec::rationals()}) {
    for (int t = 0; t < 20; ++t) {
      std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
      Matrix A = random_matrix(fs, r, c, rng);
      Vec x;
      for (std::size_t j = 0; j < c; ++j)
        x.push_back(fs.is_rationals() ? Scalar::of(fs, (long)(rng() % 7) - 3)
                                      : Scalar::residue(rng() % fs.p, fs.p));
      Vec b = A.apply(x);
      auto res = solve_linear(A, b);
      REQUIRE(res.consistent);
      CHECK(A.apply(res.solution) == b);
    }
  }
}

TEST_CASE("sparse-rows nullspace agrees with the dense one") {
  std::mt19937_64 rng(23);
  for (auto fs : {FieldSpec::rationals(), FieldSpec::gf(5)}) {
    for (int t = 0; t < 12; ++t) {
      std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 10;
      std::vector<SparseVec> sparse;
      Matrix dense(fs, rows, cols);
      for (std::size_t i = 0; i < rows; ++i) {
        SparseVec row;
        for (std::size_t j = 0; j < cols; ++j) {
          if (rng() % 3 == 0) {
            Scalar c = fs.is_rationals() ? Scalar::of(fs, (long)(rng() % 9) - 4)
                                         : Scalar::residue(rng() % fs.p, fs.p);
            if (!c.is_zero()) {
              row.emplace_back((int)j, c);
              dense.at(i, j) = c;
            }
          }
        }
        sparse.push_back(row);
      }
      auto a = nullspace_of_sparse_rows(fs, cols, sparse);
      auto b = nullspace(dense);
      CHECK(a.size() == b.size());
      // same subspace: every solver vector kills every row
      for (const auto& v : a) CHECK(is_zero_vec(dense.apply(v)));
    }
  }
}

TEST_CASE("row reducer coordinates recover membership") {
  auto q = FieldSpec::rationals();
  RowReducer rr(q, 3);
  rr.add(Vec{Scalar::of(q, 1), Scalar::of(q, 2), Scalar::of(q, 0)});
  rr.add(Vec{Scalar::of(q, 0), Scalar::of(q, 1), Scalar::of(q, 1)});
  Vec probe{Scalar::of(q, 2), Scalar::of(q, 5), Scalar::of(q, 1)};
  auto coords = rr.coordinates(probe);
  REQUIRE(coords.has_value());
  Vec recon = zero_vec(q, 3);
  for (std::size_t k = 0; k < rr.rank(); ++k) add_scaled(recon, rr.rows()[k], (*coords)[k]);
  CHECK(recon == probe);
  Vec outside{Scalar::of(q, 0), Scalar::of(q, 0), Scalar::of(q, 1)};
  CHECK_FALSE(rr.coordinates(outside).has_value());
}
