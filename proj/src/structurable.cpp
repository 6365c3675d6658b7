#include "gradus/structurable.hpp"

#include <algorithm>
#include <sstream>

namespace gradus {

namespace {

Vec flatten(const Matrix& m) {
  Vec f;
  f.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) f.push_back(m.at(i, j));
  return f;
}

std::string vec_str(const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + "]";
}

}  // namespace

StructurableAlgebra::StructurableAlgebra(const FieldSpec& fs, std::vector<std::vector<Vec>> mult,
                                         Matrix involution, Vec unit)
    : fs_(fs),
      dim_((int)mult.size()),
      mult_(std::move(mult)),
      inv_(std::move(involution)),
      unit_(std::move(unit)),
      skew_span_(fs, 0) {
  if ((int)inv_.rows() != dim_ || (int)inv_.cols() != dim_ || (int)unit_.size() != dim_)
    throw Error(Errc::ParseError, "algebra tables have inconsistent shapes");
  for (const auto& row : mult_) {
    if ((int)row.size() != dim_) throw Error(Errc::ParseError, "ragged multiplication table");
    for (const auto& v : row)
      if ((int)v.size() != dim_) throw Error(Errc::ParseError, "ragged multiplication table");
  }
  Matrix id = Matrix::identity(fs_, dim_);
  Matrix plus = inv_ - id;   // kernel = hermitian part
  Matrix minus = inv_ + id;  // kernel = skew part
  // normalize both eigenbases through a reducer so that skew_coordinates()
  // is expressed over exactly the vectors stored in skew_
  RowReducer hr(fs_, dim_);
  for (const auto& h : nullspace(plus)) hr.add(h);
  herm_ = hr.rows();
  skew_span_ = RowReducer(fs_, dim_);
  for (const auto& s : nullspace(minus)) skew_span_.add(s);
  skew_ = skew_span_.rows();
}

Vec StructurableAlgebra::mul(const Vec& x, const Vec& y) const {
  Vec r = zero_vec(fs_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar c = x[i] * y[j];
      const Vec& e = mult_[i][j];
      for (int k = 0; k < dim_; ++k)
        if (!e[k].is_zero()) r[k] += c * e[k];
    }
  }
  return r;
}

Matrix StructurableAlgebra::left_mult(const Vec& s) const {
  Matrix m(fs_, dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    Vec e = zero_vec(fs_, dim_);
    e[j] = Scalar::one(fs_);
    Vec col = mul(s, e);
    for (int i = 0; i < dim_; ++i) m.at(i, j) = col[i];
  }
  return m;
}

Matrix StructurableAlgebra::right_mult(const Vec& s) const {
  Matrix m(fs_, dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    Vec e = zero_vec(fs_, dim_);
    e[j] = Scalar::one(fs_);
    Vec col = mul(e, s);
    for (int i = 0; i < dim_; ++i) m.at(i, j) = col[i];
  }
  return m;
}

Vec StructurableAlgebra::triple(const Vec& x, const Vec& y, const Vec& z) const {
  Vec yb = conj(y), xb = conj(x);
  Vec r = mul(mul(x, yb), z);
  Vec t = mul(mul(z, yb), x);
  for (int k = 0; k < dim_; ++k) r[k] += t[k];
  t = mul(mul(z, xb), y);
  for (int k = 0; k < dim_; ++k) r[k] -= t[k];
  return r;
}

Matrix StructurableAlgebra::v_op(const Vec& x, const Vec& y) const {
  Matrix m(fs_, dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    Vec e = zero_vec(fs_, dim_);
    e[j] = Scalar::one(fs_);
    Vec col = triple(x, y, e);
    for (int i = 0; i < dim_; ++i) m.at(i, j) = col[i];
  }
  return m;
}

Matrix StructurableAlgebra::u_op(const Vec& x, const Vec& y) const {
  Matrix m(fs_, dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    Vec e = zero_vec(fs_, dim_);
    e[j] = Scalar::one(fs_);
    Vec col = triple(x, e, y);  // U_{x,y} z = V_{x,z} y
    for (int i = 0; i < dim_; ++i) m.at(i, j) = col[i];
  }
  return m;
}

Vec StructurableAlgebra::psi(const Vec& x, const Vec& y) const {
  Vec r = mul(x, conj(y));
  Vec t = mul(y, conj(x));
  for (int k = 0; k < dim_; ++k) r[k] -= t[k];
  return r;
}

Matrix StructurableAlgebra::eps(const Matrix& A) const {
  Vec a1 = A.apply(unit_);
  Vec w = conj(a1);
  for (int k = 0; k < dim_; ++k) w[k] += a1[k];
  return A - left_mult(w);
}

Matrix StructurableAlgebra::delta(const Matrix& A) const {
  Vec a1 = A.apply(unit_);
  return A + right_mult(conj(a1));
}

std::optional<Vec> StructurableAlgebra::skew_coordinates(const Vec& v) const {
  return skew_span_.coordinates(v);
}

StructurableAlgebra::Validation StructurableAlgebra::validate() const {
  Validation bad;
  bad.ok = false;
  auto basis = [&](int i) {
    Vec e = zero_vec(fs_, dim_);
    e[i] = Scalar::one(fs_);
    return e;
  };
  // unit
  for (int i = 0; i < dim_; ++i) {
    Vec e = basis(i);
    if (mul(unit_, e) != e || mul(e, unit_) != e) {
      bad.code = Errc::NotUnital;
      bad.detail = "unit axiom fails on basis " + std::to_string(i);
      return bad;
    }
  }
  // involution: order 2, fixes 1, anti-automorphism
  if (!(inv_ * inv_ == Matrix::identity(fs_, dim_)) || conj(unit_) != unit_) {
    bad.code = Errc::NotInvolution;
    bad.detail = "involution is not an order-2 map fixing the unit";
    return bad;
  }
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      Vec lhs = conj(mul(basis(i), basis(j)));
      Vec rhs = mul(conj(basis(j)), conj(basis(i)));
      if (lhs != rhs) {
        bad.code = Errc::NotInvolution;
        bad.detail = "involution is not an anti-homomorphism at (" + std::to_string(i) + "," +
                     std::to_string(j) + ")";
        return bad;
      }
    }
  if ((int)(herm_.size() + skew_.size()) != dim_) {
    bad.code = Errc::NotInvolution;
    bad.detail = "hermitian/skew split does not span";
    return bad;
  }
  // main operator identity on basis 4-tuples
  std::vector<Matrix> vops((std::size_t)dim_ * dim_, Matrix(fs_, 0, 0));
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) vops[(std::size_t)i * dim_ + j] = v_op(basis(i), basis(j));
  auto vop = [&](int i, int j) -> const Matrix& { return vops[(std::size_t)i * dim_ + j]; };
  for (int x = 0; x < dim_; ++x)
    for (int y = 0; y < dim_; ++y)
      for (int z = 0; z < dim_; ++z)
        for (int w = 0; w < dim_; ++w) {
          Matrix lhs = vop(x, y) * vop(z, w) - vop(z, w) * vop(x, y);
          Matrix rhs = v_op(triple(basis(x), basis(y), basis(z)), basis(w)) -
                       v_op(basis(z), triple(basis(y), basis(x), basis(w)));
          if (!(lhs == rhs)) {
            bad.code = Errc::StructIdFails;
            bad.detail = "operator identity fails at (" + std::to_string(x) + "," +
                         std::to_string(y) + "," + std::to_string(z) + "," + std::to_string(w) +
                         ")";
            return bad;
          }
        }
  // T-form of the identity on basis 3-tuples
  for (int z = 0; z < dim_; ++z) {
    Matrix tz = t_op(basis(z));
    Matrix tzb = t_op(conj(basis(z)));
    for (int x = 0; x < dim_; ++x)
      for (int y = 0; y < dim_; ++y) {
        Matrix lhs = tz * vop(x, y) - vop(x, y) * tz;
        Matrix rhs = v_op(tz.apply(basis(x)), basis(y)) - v_op(basis(x), tzb.apply(basis(y)));
        if (!(lhs == rhs)) {
          bad.code = Errc::EqDefFails;
          bad.detail = "T-form identity fails at (" + std::to_string(x) + "," +
                       std::to_string(y) + "," + std::to_string(z) + ")";
          return bad;
        }
      }
  }
  Validation ok;
  ok.ok = true;
  return ok;
}

void StructurableAlgebra::validate_or_throw() const {
  Validation v = validate();
  if (!v.ok) throw Error(v.code, v.detail);
}

Vec StructurableAlgebra::InstrlSpan::coordinates(const Matrix& op) const {
  auto c = span.coordinates(flatten(op));
  if (!c) throw Error(Errc::Internal, "operator is not in the V-span");
  return *c;
}

StructurableAlgebra::InstrlSpan StructurableAlgebra::instrl_basis() const {
  InstrlSpan s{{}, RowReducer(fs_, (std::size_t)dim_ * dim_)};
  auto basis = [&](int i) {
    Vec e = zero_vec(fs_, dim_);
    e[i] = Scalar::one(fs_);
    return e;
  };
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) s.span.add(flatten(v_op(basis(i), basis(j))));
  for (const auto& row : s.span.rows()) {
    Matrix m(fs_, dim_, dim_);
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c) m.at(r, c) = row[(std::size_t)r * dim_ + c];
    s.ops.push_back(std::move(m));
  }
  for (std::size_t a = 0; a < s.ops.size(); ++a)
    for (std::size_t b = a + 1; b < s.ops.size(); ++b) {
      Matrix comm = s.ops[a] * s.ops[b] - s.ops[b] * s.ops[a];
      if (!s.span.contains(flatten(comm)))
        throw Error(Errc::Internal, "V-span is not closed under commutators");
    }
  return s;
}

StructurableAlgebra::ZeroDivisorReport StructurableAlgebra::absolute_zero_divisors(
    std::size_t random_samples, std::uint64_t seed) const {
  ZeroDivisorReport rep;
  auto test = [&](const Vec& x) {
    ++rep.tested;
    if (is_zero_vec(x)) return;
    if (u_op(x).is_zero()) rep.found.push_back(x);
  };
  if (!fs_.is_rationals()) {
    std::uint64_t total = 1;
    bool feasible = true;
    for (int i = 0; i < dim_; ++i) {
      total *= fs_.p;
      if (total > 1000000ull) {
        feasible = false;
        break;
      }
    }
    if (feasible) {
      rep.exhaustive = true;
      for (std::uint64_t code = 0; code < total; ++code) {
        Vec x = zero_vec(fs_, dim_);
        std::uint64_t c = code;
        for (int i = 0; i < dim_; ++i) {
          x[i] = Scalar::residue(c % fs_.p, fs_.p);
          c /= fs_.p;
        }
        test(x);
      }
      return rep;
    }
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < dim_; ++i) {
    Vec e = zero_vec(fs_, dim_);
    e[i] = Scalar::one(fs_);
    test(e);
  }
  for (std::size_t t = 0; t < random_samples; ++t) test(random_vec(fs_, dim_, rng));
  return rep;
}

KappaAlgebra::KappaAlgebra(StructurablePtr A) : A_(std::move(A)) {
  A_->validate_or_throw();
  const FieldSpec& fs = A_->field();
  int d = A_->dim();
  auto instrl = A_->instrl_basis();
  skew_ = A_->skew_dim();
  a_ = d;
  instrl_ = (int)instrl.ops.size();
  int total = 2 * skew_ + 2 * a_ + instrl_;

  std::vector<std::string> labels;
  for (int k = 0; k < skew_; ++k) labels.push_back("s-" + std::to_string(k));
  for (int k = 0; k < a_; ++k) labels.push_back("x-" + std::to_string(k));
  for (int k = 0; k < instrl_; ++k) labels.push_back("V" + std::to_string(k));
  for (int k = 0; k < a_; ++k) labels.push_back("x+" + std::to_string(k));
  for (int k = 0; k < skew_; ++k) labels.push_back("s+" + std::to_string(k));

  int sm = sminus_offset(), am = aminus_offset(), in = instrl_offset(), ap = aplus_offset(),
      sp = splus_offset();

  auto abasis = [&](int i) {
    Vec e = zero_vec(fs, d);
    e[i] = Scalar::one(fs);
    return e;
  };
  auto skew_coords_or_throw = [&](const Vec& v) {
    auto c = A_->skew_coordinates(v);
    if (!c) throw Error(Errc::Internal, "psi image left the skew part");
    return *c;
  };
  auto shift = [&](const Vec& coords, int offset) {
    SparseVec s;
    for (std::size_t k = 0; k < coords.size(); ++k)
      if (!coords[k].is_zero()) s.emplace_back(offset + (int)k, coords[k]);
    return s;
  };

  LieAlgebraBuilder b(fs, labels);
  const auto& W = instrl.ops;
  // [Instrl, Instrl] and [Instrl, everything]
  for (int r = 0; r < instrl_; ++r) {
    for (int t = r + 1; t < instrl_; ++t) {
      Matrix comm = W[r] * W[t] - W[t] * W[r];
      b.set(in + r, in + t, shift(instrl.coordinates(comm), in));
    }
    Matrix weps = A_->eps(W[r]);
    Matrix wdelta = A_->delta(W[r]);
    Matrix wepsdelta = A_->delta(weps);
    for (int j = 0; j < a_; ++j) {
      b.set(in + r, ap + j, shift(W[r].col(j), ap));
      b.set(in + r, am + j, shift(weps.col(j), am));
    }
    for (int k = 0; k < skew_; ++k) {
      b.set(in + r, sp + k, shift(skew_coords_or_throw(wdelta.apply(A_->skew_basis()[k])), sp));
      b.set(in + r, sm + k, shift(skew_coords_or_throw(wepsdelta.apply(A_->skew_basis()[k])), sm));
    }
  }
  // [S_pm, A_mp] and [S_+, S_-]
  for (int k = 0; k < skew_; ++k) {
    const Vec& s = A_->skew_basis()[k];
    for (int j = 0; j < a_; ++j) {
      b.set(sp + k, am + j, shift(A_->mul(s, abasis(j)), ap));
      b.set(sm + k, ap + j, shift(A_->mul(s, abasis(j)), am));
    }
    for (int m = 0; m < skew_; ++m) {
      Matrix lslt = A_->left_mult(s) * A_->left_mult(A_->skew_basis()[m]);
      b.set(sp + k, sm + m, shift(instrl.coordinates(lslt), in));
    }
  }
  // [A_+, A_-], [A_+, A_+], [A_-, A_-]
  for (int i = 0; i < a_; ++i) {
    for (int j = 0; j < a_; ++j)
      b.set(ap + i, am + j, shift(instrl.coordinates(A_->v_op(abasis(i), abasis(j))), in));
    for (int j = i + 1; j < a_; ++j) {
      Vec ps = A_->psi(abasis(i), abasis(j));
      b.set(ap + i, ap + j, shift(skew_coords_or_throw(ps), sp));
      b.set(am + i, am + j, shift(skew_coords_or_throw(ps), sm));
    }
  }
  L_ = b.build(true);

  std::vector<int> deg(total, 0);
  for (int k = 0; k < skew_; ++k) {
    deg[sm + k] = -2;
    deg[sp + k] = 2;
  }
  for (int j = 0; j < a_; ++j) {
    deg[am + j] = -1;
    deg[ap + j] = 1;
  }
  grading_.emplace(L_, deg);
}

std::vector<int> KappaAlgebra::block_dims() const {
  return {skew_, a_, instrl_, a_, skew_};
}

Vec KappaAlgebra::embed_plus(const Vec& x) const {
  Vec v = zero_vec(L_->field(), L_->dim());
  for (int k = 0; k < a_; ++k) v[aplus_offset() + k] = x[k];
  return v;
}

Vec KappaAlgebra::embed_minus(const Vec& x) const {
  Vec v = zero_vec(L_->field(), L_->dim());
  for (int k = 0; k < a_; ++k) v[aminus_offset() + k] = x[k];
  return v;
}

bool KappaAlgebra::unit_pair_is_grading_derivation() const {
  Vec z = L_->bracket(unit_plus(), unit_minus());
  const FieldSpec& fs = L_->field();
  for (int j = 0; j < L_->dim(); ++j) {
    Vec e = zero_vec(fs, L_->dim());
    e[j] = Scalar::one(fs);
    if (L_->bracket(z, e) != scaled(e, Scalar::of(fs, grading_->degree(j)))) return false;
  }
  return true;
}

KantorPair::KantorPair(const Grading& g) : g_(g), plus_(g.block(1)), minus_(g.block(-1)) {
  if (plus_.empty() && minus_.empty())
    throw Error(Errc::EmptyPair, "both degree +-1 blocks vanish");
  if (g.bound() > 2) throw Error(Errc::TooWideGrading, "Kantor pair needs a 5-bounded grading");
}

Vec KantorPair::lift(int sigma, const Vec& coords) const {
  const auto& blk = sigma > 0 ? plus_ : minus_;
  Vec v = zero_vec(g_.algebra().field(), g_.algebra().dim());
  for (std::size_t k = 0; k < blk.size(); ++k) v[blk[k]] = coords[k];
  return v;
}

Vec KantorPair::project(int sigma, const Vec& full) const {
  const auto& blk = sigma > 0 ? plus_ : minus_;
  Vec v;
  v.reserve(blk.size());
  for (int idx : blk) v.push_back(full[idx]);
  return v;
}

Vec KantorPair::triple(int sigma, const Vec& x, const Vec& y, const Vec& z) const {
  const LieAlgebra& L = g_.algebra();
  Vec w = L.bracket(lift(sigma, x), lift(-sigma, y));
  Vec r = L.bracket(w, lift(sigma, z));
  for (auto& c : r) c = -c;
  return project(sigma, r);
}

Matrix KantorPair::v_matrix(int sigma, const Vec& x, const Vec& y) const {
  const LieAlgebra& L = g_.algebra();
  const auto& blk = sigma > 0 ? plus_ : minus_;
  Vec w = L.bracket(lift(sigma, x), lift(-sigma, y));
  Matrix m(L.field(), blk.size(), blk.size());
  for (std::size_t c = 0; c < blk.size(); ++c) {
    Vec img = L.bracket_basis_vec(blk[c], w);  // [e_c, w] = -[w, e_c]
    for (std::size_t r = 0; r < blk.size(); ++r) m.at(r, c) = img[blk[r]];
  }
  return m;
}

Matrix KantorPair::k_matrix(int sigma, const Vec& a, const Vec& b) const {
  // z in K_{-sigma} -> <a,z,b> - <b,z,a> in K_sigma; by the Jacobi identity
  // this operator equals -ad([a,b]) restricted to the blocks, with [a,b] in
  // the degree 2*sigma component
  const auto& dom = sigma > 0 ? minus_ : plus_;
  const auto& ran = sigma > 0 ? plus_ : minus_;
  const LieAlgebra& L = g_.algebra();
  Vec w = L.bracket(lift(sigma, a), lift(sigma, b));
  Matrix m(L.field(), ran.size(), dom.size());
  for (std::size_t c = 0; c < dom.size(); ++c) {
    Vec img = L.bracket_basis_vec(dom[c], w);  // [e_c, w] = -[w, e_c]
    for (std::size_t r = 0; r < ran.size(); ++r) m.at(r, c) = img[ran[r]];
  }
  return m;
}

KantorPair::AxiomReport KantorPair::verify_axioms(std::size_t samples, std::uint64_t seed) const {
  AxiomReport rep;
  rep.seed = seed;
  const FieldSpec& fs = g_.algebra().field();
  int dp = dim(1), dm = dim(-1);
  rep.exhaustive = dp <= 6 && dm <= 6;

  auto kp1 = [&](int sigma, const Vec& x, const Vec& y, const Vec& z, const Vec& w) {
    Matrix vxy = v_matrix(sigma, x, y), vzw = v_matrix(sigma, z, w);
    Matrix lhs = vxy * vzw - vzw * vxy;
    Matrix rhs = v_matrix(sigma, triple(sigma, x, y, z), w) -
                 v_matrix(sigma, z, triple(-sigma, y, x, w));
    ++rep.checked;
    if (lhs == rhs) return true;
    std::ostringstream os;
    os << "KP1 sigma=" << sigma << " x=" << vec_str(x) << " y=" << vec_str(y)
       << " z=" << vec_str(z) << " w=" << vec_str(w);
    rep.counterexample = os.str();
    return false;
  };
  auto kp2 = [&](int sigma, const Vec& a, const Vec& b, const Vec& x, const Vec& y) {
    // K_{a,b} V_{x,y} + V_{y,x} K_{a,b} = K_{K_{a,b}x, y}
    Matrix kab = k_matrix(sigma, a, b);
    Matrix vxy = v_matrix(-sigma, x, y);
    Matrix vyx = v_matrix(sigma, y, x);
    Vec kabx = kab.apply(x);
    Matrix lhs = kab * vxy + vyx * kab;
    Matrix rhs = k_matrix(sigma, kabx, y);
    ++rep.checked;
    if (lhs == rhs) return true;
    std::ostringstream os;
    os << "KP2 sigma=" << sigma << " a=" << vec_str(a) << " b=" << vec_str(b)
       << " x=" << vec_str(x) << " y=" << vec_str(y);
    rep.counterexample = os.str();
    return false;
  };

  auto unit = [&](int n, int k) {
    Vec v = zero_vec(fs, n);
    v[k] = Scalar::one(fs);
    return v;
  };
  for (int sigma : {1, -1}) {
    int ds = sigma > 0 ? dp : dm, dopp = sigma > 0 ? dm : dp;
    if (ds == 0) continue;
    if (rep.exhaustive) {
      for (int x = 0; x < ds; ++x)
        for (int y = 0; y < dopp; ++y)
          for (int z = 0; z < ds; ++z)
            for (int w = 0; w < dopp; ++w)
              if (!kp1(sigma, unit(ds, x), unit(dopp, y), unit(ds, z), unit(dopp, w))) return rep;
      for (int a = 0; a < ds; ++a)
        for (int b = a + 1; b < ds; ++b)
          for (int x = 0; x < dopp; ++x)
            for (int y = 0; y < ds; ++y)
              if (!kp2(sigma, unit(ds, a), unit(ds, b), unit(dopp, x), unit(ds, y))) return rep;
    } else {
      std::mt19937_64 rng(seed + (sigma > 0 ? 0 : 1));
      for (std::size_t t = 0; t < samples; ++t) {
        Vec x = random_vec(fs, ds, rng), y = random_vec(fs, dopp, rng),
            z = random_vec(fs, ds, rng), w = random_vec(fs, dopp, rng);
        if (!kp1(sigma, x, y, z, w)) return rep;
        Vec a = random_vec(fs, ds, rng), b = random_vec(fs, ds, rng),
            xx = random_vec(fs, dopp, rng), yy = random_vec(fs, ds, rng);
        if (!kp2(sigma, a, b, xx, yy)) return rep;
      }
    }
  }
  rep.ok = true;
  return rep;
}

UnitPairResult find_unit_pair(const Grading& g, const GradingDerivation& zeta,
                              std::size_t attempts, std::uint64_t seed,
                              const std::vector<Vec>& central) {
  if (!zeta.in_algebra)
    throw Error(Errc::OuterZeta, "the grading derivation is not realized inside the algebra");
  const LieAlgebra& L = g.algebra();
  const FieldSpec& fs = L.field();
  std::vector<int> plus = g.block(1), minus = g.block(-1);
  UnitPairResult res;
  res.seed = seed;

  RowReducer central_span(fs, L.dim());
  for (const auto& z : central) central_span.add(z);

  auto lift = [&](const std::vector<int>& blk, const Vec& coords) {
    Vec v = zero_vec(fs, L.dim());
    for (std::size_t k = 0; k < blk.size(); ++k) v[blk[k]] = coords[k];
    return v;
  };
  // [u,v] must act as multiplication by the degree on every basis vector
  auto acts_as_derivation = [&](const Vec& w) {
    for (int j = 0; j < L.dim(); ++j) {
      Vec e = zero_vec(fs, L.dim());
      e[j] = Scalar::one(fs);
      if (L.bracket(w, e) != scaled(e, Scalar::of(fs, g.degree(j)))) return false;
    }
    return true;
  };
  auto accept = [&](const Vec& u, const Vec& v) {
    Vec w = L.bracket(u, v);
    if (!acts_as_derivation(w)) throw Error(Errc::Internal, "unit-pair action check failed");
    res.found = true;
    res.u = u;
    res.v = v;
    res.zeta_realized = w;
  };
  // solve [fixed, w] = zeta modulo the central shifts, over the opposite block
  auto try_fixed = [&](const Vec& fixed, const std::vector<int>& opposite, bool fixed_is_plus) {
    ++res.attempts_used;
    std::size_t cols = opposite.size() + central.size();
    Matrix A(fs, L.dim(), cols);
    for (std::size_t c = 0; c < opposite.size(); ++c) {
      Vec e = zero_vec(fs, L.dim());
      e[opposite[c]] = Scalar::one(fs);
      Vec col = L.bracket(fixed, e);
      if (!fixed_is_plus)
        for (auto& x : col) x = -x;  // solving [other, fixed] with other on the plus side
      for (int r = 0; r < L.dim(); ++r) A.at(r, c) = col[r];
    }
    for (std::size_t k = 0; k < central.size(); ++k)
      for (int r = 0; r < L.dim(); ++r) A.at(r, opposite.size() + k) = central[k][r];
    SolveResult sol = solve_linear(A, zeta.element);
    if (!sol.consistent) return false;
    Vec other = lift(opposite, Vec(sol.solution.begin(), sol.solution.begin() + opposite.size()));
    Vec u = fixed_is_plus ? fixed : other;
    Vec v = fixed_is_plus ? other : fixed;
    accept(u, v);
    return true;
  };

  if (!plus.empty() && !minus.empty()) {
    Vec ones_plus = lift(plus, Vec(plus.size(), Scalar::one(fs)));
    if (try_fixed(ones_plus, minus, true)) return res;
    Vec ones_minus = lift(minus, Vec(minus.size(), Scalar::one(fs)));
    if (res.attempts_used < attempts && try_fixed(ones_minus, plus, false)) return res;
    std::mt19937_64 rng(seed);
    bool side = true;
    while (res.attempts_used < attempts) {
      if (side) {
        Vec u = lift(plus, random_vec(fs, plus.size(), rng));
        if (try_fixed(u, minus, true)) return res;
      } else {
        Vec v = lift(minus, random_vec(fs, minus.size(), rng));
        if (try_fixed(v, plus, false)) return res;
      }
      side = !side;
    }
  }
  // exhaustive pair scan over small finite configurations
  if (!fs.is_rationals()) {
    std::uint64_t total = 1;
    bool feasible = true;
    for (std::size_t t = 0; t < plus.size() + minus.size(); ++t) {
      total *= fs.p;
      if (total > 1000000ull) {
        feasible = false;
        break;
      }
    }
    if (feasible) {
      res.exhaustive = true;
      for (std::uint64_t code = 0; code < total; ++code) {
        Vec u = zero_vec(fs, L.dim()), v = zero_vec(fs, L.dim());
        std::uint64_t c = code;
        for (int idx : plus) {
          u[idx] = Scalar::residue(c % fs.p, fs.p);
          c /= fs.p;
        }
        for (int idx : minus) {
          v[idx] = Scalar::residue(c % fs.p, fs.p);
          c /= fs.p;
        }
        Vec w = L.bracket(u, v);
        for (int r = 0; r < L.dim(); ++r) w[r] -= zeta.element[r];
        if (central_span.contains(w)) {
          accept(u, v);
          return res;
        }
      }
    }
  }
  return res;
}

GradedIsoResult graded_isomorphism_from_pairs(const Grading& gA, const Vec& uA, const Vec& vA,
                                              const Grading& gB, const Vec& uB, const Vec& vB) {
  GradedIsoResult out;
  if (gA.block_dims() != gB.block_dims() || gA.bound() != gB.bound()) return out;
  out.status = GradedIsoResult::Status::DimsMatchOnly;
  const LieAlgebra& A = gA.algebra();
  const LieAlgebra& B = gB.algebra();
  if (A.dim() > 16) return out;
  const FieldSpec& fs = A.field();

  std::vector<Vec> ka{uA, vA}, kb{uB, vB};
  RowReducer span(fs, A.dim());
  span.add(uA);
  span.add(vA);
  // close the correspondence under brackets; inconsistency means no iso from
  // this pair of unit pairs
  std::size_t i = 0;
  while (i < ka.size()) {
    for (std::size_t j = 0; j < ka.size(); ++j) {
      Vec na = A.bracket(ka[i], ka[j]);
      Vec nb = B.bracket(kb[i], kb[j]);
      if (span.contains(na)) {
        // consistency: na = sum c_t ka_t must force nb = sum c_t kb_t
        SolveResult sol = solve_linear(Matrix::from_cols(fs, ka), na);
        if (!sol.consistent) return out;
        Vec expect = zero_vec(fs, B.dim());
        for (std::size_t t = 0; t < kb.size(); ++t) add_scaled(expect, kb[t], sol.solution[t]);
        if (expect != nb) return out;
      } else {
        span.add(na);
        ka.push_back(na);
        kb.push_back(nb);
      }
    }
    ++i;
  }
  if ((int)span.rank() < A.dim()) return out;  // the unit pair does not generate
  // build the map on the standard basis and verify it
  Matrix K = Matrix::from_cols(fs, ka);
  Matrix Bm = Matrix::from_cols(fs, kb);
  Matrix phi(fs, B.dim(), A.dim());
  for (int c = 0; c < A.dim(); ++c) {
    Vec e = zero_vec(fs, A.dim());
    e[c] = Scalar::one(fs);
    SolveResult sol = solve_linear(K, e);
    if (!sol.consistent) return out;
    Vec img = Bm.apply(sol.solution);
    for (int r = 0; r < B.dim(); ++r) phi.at(r, c) = img[r];
  }
  if (!phi.inverse()) return out;
  for (int c = 0; c < A.dim(); ++c)
    for (int r = 0; r < B.dim(); ++r)
      if (!phi.at(r, c).is_zero() && gB.degree(r) != gA.degree(c)) return out;
  for (int x = 0; x < A.dim(); ++x)
    for (int y = x + 1; y < A.dim(); ++y) {
      Vec lhs = phi.apply(to_dense(fs, A.dim(), A.bracket_basis(x, y)));
      Vec rhs = B.bracket(phi.col(x), phi.col(y));
      if (lhs != rhs) return out;
    }
  out.status = GradedIsoResult::Status::Isomorphic;
  out.map = phi;
  return out;
}

}  // namespace gradus
