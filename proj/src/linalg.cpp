#include "gradus/linalg.hpp"

#include <algorithm>

namespace gradus {

SparseVec to_sparse(const Vec& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace_back((int)i, v[i]);
  return s;
}

Vec to_dense(const FieldSpec& fs, std::size_t n, const SparseVec& v) {
  Vec d = zero_vec(fs, n);
  for (const auto& [i, c] : v) d[i] = c;
  return d;
}

Vec zero_vec(const FieldSpec& fs, std::size_t n) { return Vec(n, Scalar::zero(fs)); }

Vec scaled(const Vec& v, const Scalar& c) {
  Vec r = v;
  for (auto& x : r) x *= c;
  return r;
}

void add_scaled(Vec& v, const Vec& w, const Scalar& c) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!w[i].is_zero()) v[i] += c * w[i];
  }
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

Matrix Matrix::identity(const FieldSpec& fs, std::size_t n) {
  Matrix m(fs, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(fs);
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& fs, const std::vector<Vec>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  Matrix m(fs, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw Error(Errc::Internal, "ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_cols(const FieldSpec& fs, const std::vector<Vec>& cols) {
  std::size_t r = cols.empty() ? 0 : cols[0].size();
  Matrix m(fs, r, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != r) throw Error(Errc::Internal, "ragged columns");
    for (std::size_t i = 0; i < r; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Vec Matrix::row(std::size_t i) const {
  return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

Vec Matrix::col(std::size_t j) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(Errc::Internal, "shape mismatch");
  Matrix m = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] += o.a_[k];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(Errc::Internal, "shape mismatch");
  Matrix m = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] -= o.a_[k];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error(Errc::Internal, "shape mismatch");
  if (fs_ != o.fs_) throw Error(Errc::FieldMismatch, "matrix product across fields");
  Matrix m(fs_, rows_, o.cols_);
  if (!fs_.is_rationals() && fs_.p < (1u << 20)) {
    // machine-word path with delayed reduction; p^2 * cols stays below 2^64
    std::vector<std::uint64_t> acc(o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < cols_; ++k) {
        std::uint64_t c = at(i, k).res();
        if (!c) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) acc[j] += c * o.at(k, j).res();
      }
      for (std::size_t j = 0; j < o.cols_; ++j)
        m.at(i, j) = Scalar::residue(acc[j] % fs_.p, fs_.p);
    }
    return m;
  }
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& c = at(i, k);
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (!o.at(k, j).is_zero()) m.at(i, j) += c * o.at(k, j);
      }
    }
  return m;
}

Matrix Matrix::operator*(const Scalar& c) const {
  Matrix m = *this;
  for (auto& x : m.a_) x *= c;
  return m;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw Error(Errc::Internal, "shape mismatch");
  Vec r = zero_vec(fs_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i)
      if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
  }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix m(fs_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || fs_ != o.fs_) return false;
  for (std::size_t k = 0; k < a_.size(); ++k)
    if (a_[k] != o.a_[k]) return false;
  return true;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& x) { return x.is_zero(); });
}

std::size_t Matrix::rank() const {
  RowReducer rr(fs_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) rr.add(row(i));
  return rr.rank();
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) throw Error(Errc::Internal, "inverse of non-square matrix");
  std::size_t n = rows_;
  // eliminate on [A | I]
  std::vector<Vec> aug;
  aug.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec r = row(i);
    Vec e = zero_vec(fs_, n);
    e[i] = Scalar::one(fs_);
    r.insert(r.end(), e.begin(), e.end());
    aug.push_back(std::move(r));
  }
  std::size_t piv_row = 0;
  for (std::size_t col = 0; col < n && piv_row < n; ++col) {
    std::size_t sel = piv_row;
    while (sel < n && aug[sel][col].is_zero()) ++sel;
    if (sel == n) return std::nullopt;
    std::swap(aug[sel], aug[piv_row]);
    Scalar inv = aug[piv_row][col].inverse();
    for (auto& x : aug[piv_row]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == piv_row || aug[i][col].is_zero()) continue;
      add_scaled(aug[i], aug[piv_row], -aug[i][col]);
    }
    ++piv_row;
  }
  if (piv_row < n) return std::nullopt;
  Matrix inv(fs_, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug[i][n + j];
  return inv;
}

SolveResult solve_linear(const Matrix& A, const Vec& b) {
  if (A.rows() != b.size()) throw Error(Errc::Internal, "solve_linear: shape mismatch");
  for (const auto& x : b)
    if (x.field() != A.field())
      throw Error(Errc::FieldMismatch, "solve_linear: vector over " + x.field().str() +
                                           ", matrix over " + A.field().str());
  const FieldSpec& fs = A.field();
  std::size_t n = A.rows(), m = A.cols();
  std::vector<Vec> aug;
  aug.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec r = A.row(i);
    r.push_back(b[i]);
    aug.push_back(std::move(r));
  }
  std::vector<std::size_t> piv_col;
  std::size_t piv_row = 0;
  for (std::size_t col = 0; col < m && piv_row < n; ++col) {
    std::size_t sel = piv_row;
    while (sel < n && aug[sel][col].is_zero()) ++sel;
    if (sel == n) continue;
    std::swap(aug[sel], aug[piv_row]);
    Scalar inv = aug[piv_row][col].inverse();
    for (auto& x : aug[piv_row]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == piv_row || aug[i][col].is_zero()) continue;
      add_scaled(aug[i], aug[piv_row], -aug[i][col]);
    }
    piv_col.push_back(col);
    ++piv_row;
  }
  for (std::size_t i = piv_row; i < n; ++i) {
    if (!aug[i][m].is_zero()) return SolveResult{false, {}};
  }
  SolveResult res;
  res.consistent = true;
  res.solution = zero_vec(fs, m);
  for (std::size_t r = 0; r < piv_col.size(); ++r) res.solution[piv_col[r]] = aug[r][m];
  return res;
}

std::vector<Vec> nullspace(const Matrix& A) {
  const FieldSpec& fs = A.field();
  std::size_t m = A.cols();
  RowReducer rr(fs, m);
  for (std::size_t i = 0; i < A.rows(); ++i) rr.add(A.row(i));
  std::vector<bool> is_piv(m, false);
  for (auto p : rr.pivots()) is_piv[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free_col = 0; free_col < m; ++free_col) {
    if (is_piv[free_col]) continue;
    Vec v = zero_vec(fs, m);
    v[free_col] = Scalar::one(fs);
    // back-substitute: pivot variable = -(row entry at free column)
    for (std::size_t r = 0; r < rr.rank(); ++r) {
      const Vec& row = rr.rows()[r];
      if (!row[free_col].is_zero()) v[rr.pivots()[r]] = -row[free_col];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

// machine-word row elimination mod p; keeps reduced rows dense
class FpEliminator {
public:
  FpEliminator(std::uint64_t p, std::size_t width) : p_(p), width_(width) {}

  // returns true iff the row was independent (rank grew)
  bool add(const SparseVec& row, bool rational_source) {
    std::vector<std::uint64_t> r(width_, 0);
    for (const auto& [i, c] : row) {
      if (rational_source) {
        const mpq_class& q = c.rat();
        mpz_class num = q.get_num() % mpz_class((unsigned long)p_);
        mpz_class den = q.get_den() % mpz_class((unsigned long)p_);
        if (den == 0) return true;  // prime divides a denominator: keep the row to be safe
        if (num < 0) num += mpz_class((unsigned long)p_);
        r[i] = num.get_ui() * mod_inverse(den.get_ui(), p_) % p_;
      } else {
        r[i] = c.res();
      }
    }
    return reduce_insert(std::move(r));
  }

  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::vector<std::uint64_t>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivs_; }

private:
  bool reduce_insert(std::vector<std::uint64_t> r) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      std::uint64_t c = r[pivs_[k]];
      if (c == 0) continue;
      std::uint64_t f = p_ - c;
      const auto& pr = rows_[k];
      for (std::size_t j = 0; j < width_; ++j) r[j] = (r[j] + f * pr[j]) % p_;
    }
    std::size_t piv = width_;
    for (std::size_t j = 0; j < width_; ++j)
      if (r[j] != 0) {
        piv = j;
        break;
      }
    if (piv == width_) return false;
    std::uint64_t inv = mod_inverse(r[piv], p_);
    for (auto& x : r) x = x * inv % p_;
    for (auto& pr : rows_) {
      std::uint64_t c = pr[piv];
      if (c == 0) continue;
      std::uint64_t f = p_ - c;
      for (std::size_t j = 0; j < width_; ++j) pr[j] = (pr[j] + f * r[j]) % p_;
    }
    pivs_.push_back(piv);
    rows_.push_back(std::move(r));
    return true;
  }

  std::uint64_t p_;
  std::size_t width_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::size_t> pivs_;
};

std::vector<Vec> nullspace_from_reducer(const FieldSpec& fs, std::size_t width,
                                        const RowReducer& rr) {
  std::vector<bool> is_piv(width, false);
  for (auto p : rr.pivots()) is_piv[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free_col = 0; free_col < width; ++free_col) {
    if (is_piv[free_col]) continue;
    Vec v = zero_vec(fs, width);
    v[free_col] = Scalar::one(fs);
    for (std::size_t r = 0; r < rr.rank(); ++r) {
      const Vec& row = rr.rows()[r];
      if (!row[free_col].is_zero()) v[rr.pivots()[r]] = -row[free_col];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Scalar sparse_dot(const SparseVec& row, const Vec& v) {
  Scalar acc = Scalar::zero(v.empty() ? FieldSpec::rationals() : v[0].field());
  for (const auto& [i, c] : row)
    if (!v[i].is_zero()) acc += c * v[i];
  return acc;
}

}  // namespace

std::vector<Vec> nullspace_of_sparse_rows(const FieldSpec& fs, std::size_t width,
                                          const std::vector<SparseVec>& rows) {
  if (!fs.is_rationals()) {
    FpEliminator el(fs.p, width);
    for (const auto& r : rows) el.add(r, false);
    std::vector<bool> is_piv(width, false);
    for (auto p : el.pivots()) is_piv[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free_col = 0; free_col < width; ++free_col) {
      if (is_piv[free_col]) continue;
      Vec v = zero_vec(fs, width);
      v[free_col] = Scalar::one(fs);
      for (std::size_t r = 0; r < el.rank(); ++r) {
        std::uint64_t x = el.rows()[r][free_col];
        if (x != 0) v[el.pivots()[r]] = Scalar::residue(fs.p - x, fs.p);
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }
  // modular pre-pass selects a row subset of full rank, exact elimination
  // runs on that subset only, and every row is then verified exactly
  const std::uint64_t q = 2147483629ull;  // prime < 2^31
  FpEliminator el(q, width);
  std::vector<std::size_t> selected;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (el.add(rows[i], true)) selected.push_back(i);
  RowReducer rr(fs, width);
  for (auto i : selected) rr.add(to_dense(fs, width, rows[i]));
  std::vector<Vec> basis = nullspace_from_reducer(fs, width, rr);
  bool verified = true;
  for (const auto& row : rows) {
    for (const auto& v : basis)
      if (!sparse_dot(row, v).is_zero()) {
        verified = false;
        break;
      }
    if (!verified) break;
  }
  if (verified) return basis;
  // unlucky prime: fall back to full exact elimination
  RowReducer full(fs, width);
  for (const auto& r : rows) full.add(to_dense(fs, width, r));
  return nullspace_from_reducer(fs, width, full);
}

bool RowReducer::add(Vec v) {
  if (v.size() != width_) throw Error(Errc::Internal, "RowReducer: wrong width");
  v = reduce(v);
  std::size_t piv = width_;
  for (std::size_t j = 0; j < width_; ++j) {
    if (!v[j].is_zero()) {
      piv = j;
      break;
    }
  }
  if (piv == width_) return false;
  Scalar inv = v[piv].inverse();
  for (auto& x : v) x *= inv;
  // keep echelon form: clear this column from existing rows
  for (auto& r : rows_) {
    if (!r[piv].is_zero()) add_scaled(r, v, -r[piv]);
  }
  auto it = std::lower_bound(pivs_.begin(), pivs_.end(), piv);
  std::size_t idx = (std::size_t)(it - pivs_.begin());
  pivs_.insert(it, piv);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

Vec RowReducer::reduce(const Vec& v) const {
  Vec r = v;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar& c = r[pivs_[k]];
    if (!c.is_zero()) add_scaled(r, rows_[k], -c);
  }
  return r;
}

std::optional<Vec> RowReducer::coordinates(const Vec& v) const {
  Vec r = v;
  Vec coeff = zero_vec(fs_, rows_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar& c = r[pivs_[k]];
    if (!c.is_zero()) {
      coeff[k] = c;
      add_scaled(r, rows_[k], -c);
    }
  }
  if (!is_zero_vec(r)) return std::nullopt;
  return coeff;
}

}  // namespace gradus
