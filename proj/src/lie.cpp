#include "gradus/lie.hpp"

#include <algorithm>
#include <sstream>

namespace gradus {

LieAlgebraBuilder::LieAlgebraBuilder(const FieldSpec& fs, std::vector<std::string> labels)
    : fs_(fs), labels_(std::move(labels)) {
  table_.resize(labels_.size() * labels_.size());
}

void LieAlgebraBuilder::set(int i, int j, const SparseVec& v) {
  int n = (int)labels_.size();
  SparseVec clean;
  for (const auto& [k, c] : v)
    if (!c.is_zero()) clean.emplace_back(k, c);
  table_[(std::size_t)i * n + j] = clean;
  SparseVec negv;
  for (const auto& [k, c] : clean) negv.emplace_back(k, -c);
  table_[(std::size_t)j * n + i] = negv;
  if (i == j) table_[(std::size_t)i * n + j].clear();
}

LiePtr LieAlgebraBuilder::build(bool check_jacobi) const {
  auto L = std::make_shared<LieAlgebra>();
  L->fs_ = fs_;
  L->dim_ = (int)labels_.size();
  L->labels_ = labels_;
  L->table_ = table_;
  if (check_jacobi) {
    if (!L->antisymmetry_holds()) throw Error(Errc::JacobiFails, "antisymmetry violated");
    int n = L->dim_;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
          if (!L->jacobi_triple(i, j, k))
            throw Error(Errc::JacobiFails, "Jacobi fails on basis triple (" + std::to_string(i) +
                                               "," + std::to_string(j) + "," + std::to_string(k) +
                                               ")");
  }
  return L;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  Vec r = zero_vec(fs_, dim_);
  std::vector<int> ix, iy;
  for (int i = 0; i < dim_; ++i)
    if (!x[i].is_zero()) ix.push_back(i);
  for (int j = 0; j < dim_; ++j)
    if (!y[j].is_zero()) iy.push_back(j);
  for (int i : ix)
    for (int j : iy) {
      for (const auto& [k, c] : bracket_basis(i, j)) r[k] += x[i] * y[j] * c;
    }
  return r;
}

Vec LieAlgebra::bracket_basis_vec(int i, const Vec& y) const {
  Vec r = zero_vec(fs_, dim_);
  for (int j = 0; j < dim_; ++j) {
    if (y[j].is_zero()) continue;
    for (const auto& [k, c] : bracket_basis(i, j)) r[k] += y[j] * c;
  }
  return r;
}

Matrix LieAlgebra::ad(const Vec& x) const {
  Matrix m(fs_, dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j)
      for (const auto& [k, c] : bracket_basis(i, j)) m.at(k, j) += x[i] * c;
  }
  return m;
}

bool LieAlgebra::antisymmetry_holds() const {
  for (int i = 0; i < dim_; ++i) {
    if (!bracket_basis(i, i).empty()) return false;
    for (int j = 0; j < i; ++j) {
      SparseVec a = bracket_basis(i, j);
      SparseVec b = bracket_basis(j, i);
      if (a.size() != b.size()) return false;
      for (std::size_t t = 0; t < a.size(); ++t)
        if (a[t].first != b[t].first || a[t].second != -b[t].second) return false;
    }
  }
  return true;
}

bool LieAlgebra::jacobi_triple(int i, int j, int k) const {
  Vec acc = zero_vec(fs_, dim_);
  auto add_term = [&](int a, int b, int c) {
    for (const auto& [m, cf] : bracket_basis(a, b)) {
      for (const auto& [t, cf2] : bracket_basis(m, c)) acc[t] += cf * cf2;
    }
  };
  add_term(i, j, k);
  add_term(j, k, i);
  add_term(k, i, j);
  return is_zero_vec(acc);
}

LieAlgebra::JacobiReport LieAlgebra::verify_jacobi(std::size_t samples, std::uint64_t seed,
                                                   int exhaustive_limit) const {
  JacobiReport rep;
  rep.seed = seed;
  if (dim_ <= exhaustive_limit) {
    rep.exhaustive = true;
    for (int i = 0; i < dim_; ++i)
      for (int j = i + 1; j < dim_; ++j)
        for (int k = j + 1; k < dim_; ++k) {
          ++rep.checked;
          if (!jacobi_triple(i, j, k)) {
            rep.counterexample = {i, j, k};
            return rep;
          }
        }
    rep.ok = true;
    return rep;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < samples; ++t) {
    int i = (int)(rng() % dim_);
    int j = (int)(rng() % dim_);
    int k = (int)(rng() % dim_);
    ++rep.checked;
    if (!jacobi_triple(i, j, k)) {
      rep.counterexample = {i, j, k};
      return rep;
    }
  }
  rep.ok = true;
  return rep;
}

std::vector<Vec> LieAlgebra::center() const {
  // x central iff for all j, i: sum_k x_k * coeff([e_k,e_j], i) = 0
  RowReducer rows(fs_, dim_);
  for (int j = 0; j < dim_; ++j) {
    Matrix mj(fs_, dim_, dim_);
    for (int k = 0; k < dim_; ++k)
      for (const auto& [i, c] : bracket_basis(k, j)) mj.at(i, k) += c;
    for (int i = 0; i < dim_; ++i) {
      Vec r = mj.row(i);
      if (!is_zero_vec(r)) rows.add(r);
    }
  }
  // nullspace of the accumulated row span
  std::vector<bool> is_piv(dim_, false);
  for (auto p : rows.pivots()) is_piv[p] = true;
  std::vector<Vec> basis;
  for (int free_col = 0; free_col < dim_; ++free_col) {
    if (is_piv[free_col]) continue;
    Vec v = zero_vec(fs_, dim_);
    v[free_col] = Scalar::one(fs_);
    for (std::size_t r = 0; r < rows.rank(); ++r) {
      const Vec& row = rows.rows()[r];
      if (!row[free_col].is_zero()) v[rows.pivots()[r]] = -row[free_col];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

LieAlgebra::Subalgebra LieAlgebra::derived_subalgebra() const {
  RowReducer rr(fs_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j) {
      const SparseVec& sv = bracket_basis(i, j);
      if (!sv.empty()) rr.add(to_dense(fs_, dim_, sv));
    }
  std::vector<Vec> basis = rr.rows();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < basis.size(); ++i) labels.push_back("d" + std::to_string(i));
  LieAlgebraBuilder b(fs_, labels);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      Vec w = bracket(basis[i], basis[j]);
      auto coords = rr.coordinates(w);
      if (!coords)
        throw Error(Errc::Internal, "derived subalgebra not closed under bracket");
      b.set((int)i, (int)j, *coords);
    }
  Subalgebra sub;
  sub.basis = std::move(basis);
  sub.algebra = b.build(false);
  return sub;
}

Vec LieAlgebra::Quotient::project(const Vec& parent_vec) const {
  // reduce modulo the kernel, then read off the representative coordinates
  const FieldSpec fs = parent_vec.empty() ? FieldSpec::rationals() : parent_vec[0].field();
  RowReducer rr(fs, parent_vec.size());
  for (const auto& k : kernel_basis) rr.add(k);
  Vec red = rr.reduce(parent_vec);
  Vec out;
  out.reserve(rep_indices.size());
  for (int idx : rep_indices) out.push_back(red[idx]);
  return out;
}

LieAlgebra::Quotient LieAlgebra::central_quotient() const {
  Quotient q;
  q.kernel_basis = center();
  RowReducer rr(fs_, dim_);
  for (const auto& v : q.kernel_basis) rr.add(v);
  // bracket well-definedness on cosets: the kernel must bracket to zero
  for (const auto& v : q.kernel_basis)
    for (int j = 0; j < dim_; ++j)
      if (!is_zero_vec(bracket(v, [&] {
            Vec e = zero_vec(fs_, dim_);
            e[j] = Scalar::one(fs_);
            return e;
          }())))
        throw Error(Errc::Internal, "central quotient: kernel is not central");
  std::vector<bool> is_piv(dim_, false);
  for (auto p : rr.pivots()) is_piv[p] = true;
  for (int i = 0; i < dim_; ++i)
    if (!is_piv[i]) q.rep_indices.push_back(i);
  std::vector<std::string> labels;
  for (int idx : q.rep_indices) labels.push_back(labels_[idx] + "~");
  LieAlgebraBuilder b(fs_, labels);
  int m = (int)q.rep_indices.size();
  for (int a = 0; a < m; ++a)
    for (int bidx = a + 1; bidx < m; ++bidx) {
      Vec w = to_dense(fs_, dim_, bracket_basis(q.rep_indices[a], q.rep_indices[bidx]));
      Vec red = rr.reduce(w);
      Vec out = zero_vec(fs_, m);
      for (int t = 0; t < m; ++t) out[t] = red[q.rep_indices[t]];
      b.set(a, bidx, out);
    }
  q.algebra = b.build(dim_ <= 30);
  return q;
}

Grading::Grading(LiePtr L, std::vector<int> degrees) : L_(std::move(L)), degrees_(std::move(degrees)) {
  if ((int)degrees_.size() != L_->dim())
    throw Error(Errc::Internal, "degree map size mismatch");
  for (int d : degrees_) bound_ = std::max(bound_, std::abs(d));
  int n = L_->dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [k, c] : L_->bracket_basis(i, j)) {
        (void)c;
        if (degrees_[k] != degrees_[i] + degrees_[j])
          throw Error(Errc::Internal, "bracket does not respect the grading at (" +
                                          std::to_string(i) + "," + std::to_string(j) + ")");
      }
}

std::vector<int> Grading::block(int deg) const {
  std::vector<int> idx;
  for (int i = 0; i < L_->dim(); ++i)
    if (degrees_[i] == deg) idx.push_back(i);
  return idx;
}

std::vector<int> Grading::block_dims() const {
  std::vector<int> dims(2 * bound_ + 1, 0);
  for (int d : degrees_) dims[d + bound_]++;
  return dims;
}

std::optional<int> Grading::homogeneous_degree(const Vec& v) const {
  std::optional<int> deg;
  for (int i = 0; i < L_->dim(); ++i) {
    if (v[i].is_zero()) continue;
    if (deg && *deg != degrees_[i]) return std::nullopt;
    deg = degrees_[i];
  }
  return deg ? deg : std::optional<int>(0);
}

Vec GradingDerivation::apply(const LieAlgebra& L, const Vec& x) const {
  if (in_algebra) return L.bracket(element, x);
  Vec r = x;
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] *= Scalar::of(r[i].field(), degrees[i]);
  return r;
}

GradingDerivation grading_derivation_generic(const Grading& g) {
  const LieAlgebra& L = g.algebra();
  const FieldSpec& fs = L.field();
  std::vector<int> b0 = g.block(0);
  int n = L.dim(), m = (int)b0.size();
  std::vector<Vec> rows;
  Vec rhs;
  for (int j = 0; j < n; ++j) {
    Matrix cols(fs, n, m);
    for (int t = 0; t < m; ++t)
      for (const auto& [k, c] : L.bracket_basis(b0[t], j)) cols.at(k, t) += c;
    for (int i = 0; i < n; ++i) {
      Vec r = cols.row(i);
      Scalar target = (i == j) ? Scalar::of(fs, g.degree(j)) : Scalar::zero(fs);
      if (is_zero_vec(r) && target.is_zero()) continue;
      r.push_back(target);
      rows.push_back(std::move(r));
    }
  }
  // solve the stacked system
  Matrix A(fs, rows.size(), m);
  Vec b = zero_vec(fs, rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int c = 0; c < m; ++c) A.at(r, c) = rows[r][c];
    b[r] = rows[r][m];
  }
  GradingDerivation zd;
  zd.degrees = g.degrees();
  SolveResult res = solve_linear(A, b);
  if (res.consistent) {
    zd.in_algebra = true;
    zd.element = zero_vec(fs, n);
    for (int t = 0; t < m; ++t) zd.element[b0[t]] = res.solution[t];
  }
  return zd;
}

namespace {

// Dense matrix over GF(p) with delayed-reduction products; used as the fast
// path for automorphism checks at large dimension.
struct FpMat {
  std::size_t n = 0;
  std::uint64_t p = 0;
  std::vector<std::uint64_t> a;

  static bool applicable(const FieldSpec& fs) {
    return !fs.is_rationals() && fs.p < (1u << 20);
  }

  static FpMat from(const Matrix& m) {
    FpMat f;
    f.n = m.rows();
    f.p = m.field().p;
    f.a.resize(f.n * f.n);
    for (std::size_t i = 0; i < f.n; ++i)
      for (std::size_t j = 0; j < f.n; ++j) f.a[i * f.n + j] = m.at(i, j).res();
    return f;
  }

  Matrix to_matrix() const {
    FieldSpec fs = FieldSpec::gf(p);
    Matrix m(fs, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Scalar::residue(a[i * n + j], p);
    return m;
  }

  static FpMat identity(std::size_t n, std::uint64_t p) {
    FpMat f;
    f.n = n;
    f.p = p;
    f.a.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) f.a[i * n + i] = 1;
    return f;
  }

  FpMat mul(const FpMat& o) const {
    FpMat r;
    r.n = n;
    r.p = p;
    r.a.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t* out = &r.a[i * n];
      for (std::size_t k = 0; k < n; ++k) {
        std::uint64_t c = a[i * n + k];
        if (!c) continue;
        const std::uint64_t* row = &o.a[k * n];
        for (std::size_t j = 0; j < n; ++j) out[j] += c * row[j];
      }
      for (std::size_t j = 0; j < n; ++j) out[j] %= p;
    }
    return r;
  }

  void add_scaled_inplace(const FpMat& o, std::uint64_t c) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] = (a[k] + c * o.a[k]) % p;
  }

  bool operator==(const FpMat& o) const { return a == o.a; }

  bool invertible() const {
    std::vector<std::uint64_t> m = a;
    std::size_t piv = 0;
    for (std::size_t col = 0; col < n && piv < n; ++col) {
      std::size_t sel = piv;
      while (sel < n && m[sel * n + col] == 0) ++sel;
      if (sel == n) return false;
      std::swap_ranges(m.begin() + sel * n, m.begin() + (sel + 1) * n, m.begin() + piv * n);
      std::uint64_t inv = mod_inverse(m[piv * n + col], p);
      for (std::size_t j = 0; j < n; ++j) m[piv * n + j] = m[piv * n + j] * inv % p;
      for (std::size_t i = piv + 1; i < n; ++i) {
        std::uint64_t c = m[i * n + col];
        if (!c) continue;
        for (std::size_t j = 0; j < n; ++j)
          m[i * n + j] = (m[i * n + j] + (p - c) * m[piv * n + j]) % p;
      }
      ++piv;
    }
    return piv == n;
  }
};

FpMat fp_ad_basis(const LieAlgebra& L, int i) {
  FpMat m;
  m.n = (std::size_t)L.dim();
  m.p = L.field().p;
  m.a.assign(m.n * m.n, 0);
  for (int j = 0; j < L.dim(); ++j)
    for (const auto& [k, c] : L.bracket_basis(i, j)) m.a[(std::size_t)k * m.n + j] = c.res();
  return m;
}

FpMat fp_ad(const LieAlgebra& L, const Vec& x) {
  FpMat m;
  m.n = (std::size_t)L.dim();
  m.p = L.field().p;
  m.a.assign(m.n * m.n, 0);
  for (int i = 0; i < L.dim(); ++i) {
    if (x[i].is_zero()) continue;
    std::uint64_t c = x[i].res();
    for (int j = 0; j < L.dim(); ++j)
      for (const auto& [k, cf] : L.bracket_basis(i, j)) {
        std::uint64_t& slot = m.a[(std::size_t)k * m.n + j];
        slot = (slot + c * cf.res()) % m.p;
      }
  }
  return m;
}

}  // namespace

Matrix truncated_exp(const Grading& g, int sigma, const Vec& x, const Vec& s) {
  if (g.bound() > 2) throw Error(Errc::TooWideGrading, "grading bound exceeds 2");
  if (sigma != 1 && sigma != -1) throw Error(Errc::NotHomogeneous, "sigma must be +1 or -1");
  auto dx = g.homogeneous_degree(x);
  auto ds = g.homogeneous_degree(s);
  if (!dx || (*dx != sigma && !is_zero_vec(x)))
    throw Error(Errc::NotHomogeneous, "x is not homogeneous of degree sigma");
  if (!ds || (*ds != 2 * sigma && !is_zero_vec(s)))
    throw Error(Errc::NotHomogeneous, "s is not homogeneous of degree 2*sigma");
  const LieAlgebra& L = g.algebra();
  const FieldSpec& fs = L.field();
  Vec xs = x;
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] += s[i];
  if (FpMat::applicable(fs)) {
    FpMat N = fp_ad(L, xs);
    FpMat pow = FpMat::identity(N.n, N.p);
    FpMat acc = FpMat::identity(N.n, N.p);
    std::uint64_t fact = 1;
    for (int i = 1; i <= 4; ++i) {
      pow = pow.mul(N);
      fact = fact * (std::uint64_t)i % N.p;
      acc.add_scaled_inplace(pow, mod_inverse(fact % N.p, N.p));
    }
    return acc.to_matrix();
  }
  Matrix N = L.ad(xs);
  Matrix acc = Matrix::identity(fs, L.dim());
  Matrix pow = Matrix::identity(fs, L.dim());
  long fact = 1;
  for (int i = 1; i <= 4; ++i) {
    pow = pow * N;
    fact *= i;
    acc = acc + pow * Scalar::of(fs, 1, fact);
  }
  return acc;
}

bool is_automorphism(const LieAlgebra& L, const Matrix& f, const std::vector<int>& gens) {
  const FieldSpec& fs = L.field();
  int n = L.dim();
  if (gens.empty()) {
    if (!f.inverse()) return false;
    std::vector<Vec> img;
    img.reserve(n);
    for (int i = 0; i < n; ++i) img.push_back(f.col(i));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Vec lhs = f.apply(to_dense(fs, n, L.bracket_basis(i, j)));
        Vec rhs = L.bracket(img[i], img[j]);
        if (lhs != rhs) return false;
      }
    return true;
  }
  // generator route: f([g,w]) = [f(g), f(w)] for all basis w extends to the
  // subalgebra generated by the gens
  if (FpMat::applicable(fs)) {
    FpMat F = FpMat::from(f);
    if (!F.invertible()) return false;
    for (int gidx : gens) {
      FpMat lhs = F.mul(fp_ad_basis(L, gidx));
      Vec fg = f.col(gidx);
      FpMat rhs = fp_ad(L, fg).mul(F);
      if (!(lhs == rhs)) return false;
    }
    return true;
  }
  if (!f.inverse()) return false;
  for (int gidx : gens) {
    Matrix adg(fs, n, n);
    for (int j = 0; j < n; ++j)
      for (const auto& [k, c] : L.bracket_basis(gidx, j)) adg.at(k, j) += c;
    Matrix lhs = f * adg;
    Matrix rhs = L.ad(f.col(gidx)) * f;
    if (!(lhs == rhs)) return false;
  }
  return true;
}

AlgebraicityReport is_algebraic(const Grading& g, bool exhaustive, std::size_t samples,
                                std::uint64_t seed, const std::vector<int>& gens) {
  const LieAlgebra& L = g.algebra();
  const FieldSpec& fs = L.field();
  AlgebraicityReport rep;
  rep.seed = seed;
  rep.exhaustive = exhaustive;
  auto run_one = [&](int sigma, const Vec& x, const Vec& s) -> bool {
    Matrix f = truncated_exp(g, sigma, x, s);
    ++rep.tested;
    if (is_automorphism(L, f, gens)) return true;
    std::ostringstream os;
    os << "sigma=" << sigma << " x=[";
    for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i].str();
    os << "] s=[";
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i].str();
    os << "]";
    rep.counterexample = os.str();
    return false;
  };
  for (int sigma : {1, -1}) {
    std::vector<int> b1 = g.block(sigma), b2 = g.block(2 * sigma);
    if (exhaustive) {
      if (fs.is_rationals())
        throw Error(Errc::InvalidType, "exhaustive algebraicity scan needs a finite field");
      std::uint64_t p = fs.p;
      std::uint64_t total = 1;
      for (std::size_t t = 0; t < b1.size() + b2.size(); ++t) {
        total *= p;
        if (total > 2000000ull)
          throw Error(Errc::InvalidType, "exhaustive algebraicity scan too large");
      }
      for (std::uint64_t code = 0; code < total; ++code) {
        Vec x = zero_vec(fs, L.dim()), s = zero_vec(fs, L.dim());
        std::uint64_t c = code;
        for (int idx : b1) {
          x[idx] = Scalar::residue(c % p, p);
          c /= p;
        }
        for (int idx : b2) {
          s[idx] = Scalar::residue(c % p, p);
          c /= p;
        }
        if (!run_one(sigma, x, s)) return rep;
      }
    } else {
      std::mt19937_64 rng(seed + (sigma == 1 ? 0 : 1));
      for (std::size_t t = 0; t < samples; ++t) {
        Vec x = zero_vec(fs, L.dim()), s = zero_vec(fs, L.dim());
        for (int idx : b1) x[idx] = random_scalar(fs, rng);
        for (int idx : b2) s[idx] = random_scalar(fs, rng);
        if (!run_one(sigma, x, s)) return rep;
      }
    }
  }
  rep.ok = true;
  return rep;
}

std::vector<Vec> graded_ideal_closure(const Grading& g, const std::vector<Vec>& seeds) {
  const LieAlgebra& L = g.algebra();
  for (const auto& s : seeds)
    if (!g.homogeneous_degree(s))
      throw Error(Errc::NotHomogeneous, "ideal closure seeds must be homogeneous");
  RowReducer rr(L.field(), L.dim());
  std::vector<Vec> work;
  for (const auto& s : seeds)
    if (rr.add(s)) work.push_back(rr.rows()[rr.rank() - 1]);
  // worklist over the reduced rows; bracket against every basis vector
  std::size_t processed = 0;
  std::vector<Vec> queue = seeds;
  while (processed < queue.size()) {
    Vec v = queue[processed++];
    for (int j = 0; j < L.dim(); ++j) {
      Vec w = L.bracket_basis_vec(j, v);
      if (is_zero_vec(w)) continue;
      for (auto& c : w) c = -c;  // [v, e_j] = -[e_j, v]
      if (rr.add(w)) queue.push_back(w);
    }
  }
  return rr.rows();
}

Scalar random_scalar(const FieldSpec& fs, std::mt19937_64& rng) {
  if (fs.is_rationals()) return Scalar::of(fs, (long)(rng() % 19) - 9);
  return Scalar::residue(rng() % fs.p, fs.p);
}

Vec random_vec(const FieldSpec& fs, std::size_t n, std::mt19937_64& rng) {
  Vec v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(fs, rng));
  return v;
}

}  // namespace gradus
