#pragma once

// Dense exact linear algebra over a FieldSpec. Elimination uses the first
// nonzero pivot in column order; there are no tolerances anywhere.

#include <optional>
#include <vector>

#include "gradus/field.hpp"

namespace gradus {

using Vec = std::vector<Scalar>;

// sorted (index, coefficient) pairs, zero coefficients omitted
using SparseVec = std::vector<std::pair<int, Scalar>>;

SparseVec to_sparse(const Vec& v);
Vec to_dense(const FieldSpec& fs, std::size_t n, const SparseVec& v);

Vec zero_vec(const FieldSpec& fs, std::size_t n);
Vec scaled(const Vec& v, const Scalar& c);
void add_scaled(Vec& v, const Vec& w, const Scalar& c);  // v += c*w
bool is_zero_vec(const Vec& v);

class Matrix {
public:
  Matrix() = default;
  Matrix(const FieldSpec& fs, std::size_t rows, std::size_t cols)
      : fs_(fs), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(fs)) {}

  static Matrix identity(const FieldSpec& fs, std::size_t n);
  static Matrix from_rows(const FieldSpec& fs, const std::vector<Vec>& rows);
  static Matrix from_cols(const FieldSpec& fs, const std::vector<Vec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return fs_; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Scalar& c) const;
  Vec apply(const Vec& v) const;  // matrix * column vector
  Matrix transpose() const;
  bool operator==(const Matrix& o) const;
  bool is_zero() const;

  std::size_t rank() const;
  // Inverse of a square matrix; nullopt if singular.
  std::optional<Matrix> inverse() const;

private:
  FieldSpec fs_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

struct SolveResult {
  bool consistent = false;
  Vec solution;  // one solution when consistent
};

// Solves A x = b exactly. Throws FieldMismatch if A and b disagree; the
// inconsistent outcome is detected by rank comparison during elimination.
SolveResult solve_linear(const Matrix& A, const Vec& b);

// Basis of {v : A v = 0}; vectors are independent and the count equals
// cols - rank(A).
std::vector<Vec> nullspace(const Matrix& A);

// Nullspace of a large sparse constraint system. Over GF(p) rows are
// eliminated directly in machine words. Over Q a modular pre-pass selects a
// generating subset of rows, the exact nullspace of that subset is computed,
// and every remaining row is verified to annihilate it (falling back to full
// exact elimination when the verification fails), so the result is exact.
std::vector<Vec> nullspace_of_sparse_rows(const FieldSpec& fs, std::size_t width,
                                          const std::vector<SparseVec>& rows);

// Incremental row-space builder: rows are kept in reduced echelon form with
// unit pivots. Used for span computations, membership tests and closures.
class RowReducer {
public:
  explicit RowReducer(const FieldSpec& fs, std::size_t width) : fs_(fs), width_(width) {}

  // Reduces v against the current rows; inserts the remainder if nonzero.
  // Returns true iff the rank grew.
  bool add(Vec v);

  // Reduces v without inserting; returns the remainder.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

  // Coordinates of v in terms of the stored rows, if v lies in the span.
  std::optional<Vec> coordinates(const Vec& v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t width() const { return width_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivs_; }

private:
  FieldSpec fs_;
  std::size_t width_;
  std::vector<Vec> rows_;          // unit-pivot echelon rows, sorted by pivot
  std::vector<std::size_t> pivs_;  // pivot column of each row
};

}  // namespace gradus
