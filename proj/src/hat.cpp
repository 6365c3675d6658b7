#include "gradus/hat.hpp"

#include <algorithm>
#include <map>

namespace gradus {

namespace {

// accumulates one sparse constraint row
void bump(std::map<int, Scalar>& row, int unknown, const Scalar& c) {
  auto it = row.find(unknown);
  if (it == row.end())
    row.emplace(unknown, c);
  else
    it->second += c;
}

SparseVec finish(std::map<int, Scalar>&& row) {
  SparseVec out;
  for (auto& [i, c] : row)
    if (!c.is_zero()) out.emplace_back(i, c);
  return out;
}

}  // namespace

HatAlgebra::HatAlgebra(const Grading& g) : parent_(g) {
  const LieAlgebra& L = g.algebra();
  const FieldSpec& fs = L.field();
  int dim = L.dim();

  for (int d = -g.bound(); d <= g.bound(); ++d) {
    if (d == 0) continue;
    auto blk = g.block(d);
    if (!blk.empty()) {
      degrees_.push_back(d);
      blocks_.push_back(std::move(blk));
    }
  }
  block_offset_.resize(blocks_.size());
  for (std::size_t t = 0; t < blocks_.size(); ++t) {
    block_offset_[t] = width_;
    width_ += blocks_[t].size() * blocks_[t].size();
  }
  auto block_pos = [&](std::size_t t, int parent_idx) {
    const auto& blk = blocks_[t];
    return (int)(std::find(blk.begin(), blk.end(), parent_idx) - blk.begin());
  };
  auto find_block = [&](int deg) -> int {
    for (std::size_t t = 0; t < degrees_.size(); ++t)
      if (degrees_[t] == deg) return (int)t;
    return -1;
  };
  auto unknown = [&](std::size_t t, int row, int col) {
    return (int)(block_offset_[t] + (std::size_t)row * blocks_[t].size() + col);
  };

  // --- constraint rows ---
  std::vector<SparseVec> rows;

  // derivation conditions on pairs of nonzero degrees with i+j != 0
  for (std::size_t ti = 0; ti < degrees_.size(); ++ti) {
    for (std::size_t tj = ti; tj < degrees_.size(); ++tj) {
      int i = degrees_[ti], j = degrees_[tj];
      if (i + j == 0) continue;
      int tk = find_block(i + j);
      if (tk < 0) continue;  // [L_i, L_j] = 0, nothing to constrain
      int dk = (int)blocks_[tk].size();
      for (std::size_t ai = 0; ai < blocks_[ti].size(); ++ai) {
        std::size_t b_start = (ti == tj) ? ai + 1 : 0;
        for (std::size_t bi = b_start; bi < blocks_[tj].size(); ++bi) {
          int a = blocks_[ti][ai], b = blocks_[tj][bi];
          std::vector<std::map<int, Scalar>> eq(dk);
          // phi_{i+j}([a,b]) contributes along the column of each component
          for (const auto& [c_idx, w] : L.bracket_basis(a, b)) {
            int c_pos = block_pos(tk, c_idx);
            for (int t = 0; t < dk; ++t) bump(eq[t], unknown(tk, t, c_pos), w);
          }
          // -[phi_i(a), b]
          for (std::size_t m = 0; m < blocks_[ti].size(); ++m) {
            for (const auto& [k_idx, u] : L.bracket_basis(blocks_[ti][m], b))
              bump(eq[block_pos(tk, k_idx)], unknown(ti, (int)m, (int)ai), -u);
          }
          // -[a, phi_j(b)]
          for (std::size_t m = 0; m < blocks_[tj].size(); ++m) {
            for (const auto& [k_idx, u] : L.bracket_basis(a, blocks_[tj][m]))
              bump(eq[block_pos(tk, k_idx)], unknown(tj, (int)m, (int)bi), -u);
          }
          for (auto& e : eq) {
            SparseVec r = finish(std::move(e));
            if (!r.empty()) rows.push_back(std::move(r));
          }
        }
      }
    }
  }

  // triple-bracket conditions for opposite degrees
  for (std::size_t ti = 0; ti < degrees_.size(); ++ti) {
    int i = degrees_[ti];
    if (i <= 0) continue;
    int tmi = find_block(-i);
    if (tmi < 0) continue;
    for (std::size_t ai = 0; ai < blocks_[ti].size(); ++ai) {
      int a = blocks_[ti][ai];
      for (std::size_t bi = 0; bi < blocks_[tmi].size(); ++bi) {
        int b = blocks_[tmi][bi];
        const SparseVec& z = L.bracket_basis(a, b);  // degree 0
        for (std::size_t tj = 0; tj < degrees_.size(); ++tj) {
          int dj = (int)blocks_[tj].size();
          for (int ci = 0; ci < dj; ++ci) {
            int c = blocks_[tj][ci];
            std::vector<std::map<int, Scalar>> eq(dj);
            // phi_j([[a,b],c])
            for (const auto& [zi, zc] : z)
              for (const auto& [k_idx, u] : L.bracket_basis(zi, c)) {
                int cp = block_pos(tj, k_idx);
                for (int t = 0; t < dj; ++t) bump(eq[t], unknown(tj, t, cp), zc * u);
              }
            // -[[phi_i(a), b], c]
            for (std::size_t m = 0; m < blocks_[ti].size(); ++m) {
              for (const auto& [w_idx, w] : L.bracket_basis(blocks_[ti][m], b))
                for (const auto& [k_idx, u] : L.bracket_basis(w_idx, c))
                  bump(eq[block_pos(tj, k_idx)], unknown(ti, (int)m, (int)ai), -(w * u));
            }
            // -[[a, phi_{-i}(b)], c]
            for (std::size_t m = 0; m < blocks_[tmi].size(); ++m) {
              for (const auto& [w_idx, w] : L.bracket_basis(a, blocks_[tmi][m]))
                for (const auto& [k_idx, u] : L.bracket_basis(w_idx, c))
                  bump(eq[block_pos(tj, k_idx)], unknown(tmi, (int)m, (int)bi), -(w * u));
            }
            // -[[a,b], phi_j(c)]
            for (int m = 0; m < dj; ++m) {
              for (const auto& [zi, zc] : z)
                for (const auto& [k_idx, u] : L.bracket_basis(zi, blocks_[tj][m]))
                  bump(eq[block_pos(tj, k_idx)], unknown(tj, m, ci), -(zc * u));
            }
            for (auto& e : eq) {
              SparseVec r = finish(std::move(e));
              if (!r.empty()) rows.push_back(std::move(r));
            }
          }
        }
      }
    }
  }

  hat0_basis_ = nullspace_of_sparse_rows(fs, width_, rows);

  // each nullspace vector carries a distinguishing unit coordinate
  free_cols_.clear();
  for (std::size_t k = 0; k < hat0_basis_.size(); ++k) {
    std::size_t found = width_;
    for (std::size_t j = 0; j < width_; ++j) {
      if (!hat0_basis_[k][j].is_one()) continue;
      bool unique = true;
      for (std::size_t k2 = 0; k2 < hat0_basis_.size(); ++k2)
        if (k2 != k && !hat0_basis_[k2][j].is_zero()) unique = false;
      if (unique) {
        found = j;
        break;
      }
    }
    if (found == width_) throw Error(Errc::Internal, "nullspace basis without unit coordinates");
    free_cols_.push_back(found);
  }

  // --- assemble the hat algebra ---
  parent_to_hat_.assign(dim, -1);
  std::vector<int> hat_parent;  // hat idx -> parent idx
  for (int p = 0; p < dim; ++p)
    if (g.degree(p) != 0) {
      parent_to_hat_[p] = (int)hat_parent.size();
      hat_parent.push_back(p);
    }
  hat0_offset_ = (int)hat_parent.size();
  int hat_dim = hat0_offset_ + (int)hat0_basis_.size();

  std::vector<std::string> labels;
  for (int p : hat_parent) labels.push_back(L.labels()[p]);
  for (int k = 0; k < (int)hat0_basis_.size(); ++k) labels.push_back("phi" + std::to_string(k));

  LieAlgebraBuilder bld(fs, labels);
  auto coords_or_throw = [&](const Vec& flat) {
    auto c = hat0_coordinates(flat);
    if (!c) throw Error(Errc::Internal, "bracket left the constraint space");
    return *c;
  };
  auto sparse_phi = [&](const Vec& coords) {
    SparseVec s;
    for (std::size_t k = 0; k < coords.size(); ++k)
      if (!coords[k].is_zero()) s.emplace_back(hat0_offset_ + (int)k, coords[k]);
    return s;
  };

  for (int hp = 0; hp < hat0_offset_; ++hp) {
    for (int hq = hp + 1; hq < hat0_offset_; ++hq) {
      int p = hat_parent[hp], q = hat_parent[hq];
      if (g.degree(p) + g.degree(q) != 0) {
        SparseVec out;
        for (const auto& [k_idx, c] : L.bracket_basis(p, q))
          out.emplace_back(parent_to_hat_[k_idx], c);
        if (!out.empty()) bld.set(hp, hq, out);
      } else {
        Vec z = to_dense(fs, dim, L.bracket_basis(p, q));
        Vec coords = coords_or_throw(flatten_ad(z));
        SparseVec out = sparse_phi(coords);
        if (!out.empty()) bld.set(hp, hq, out);
      }
    }
  }
  for (int k = 0; k < (int)hat0_basis_.size(); ++k) {
    for (int hq = 0; hq < hat0_offset_; ++hq) {
      Vec img = phi_apply(hat0_basis_[k], hat_parent[hq]);
      SparseVec out;
      for (int t = 0; t < dim; ++t)
        if (!img[t].is_zero()) out.emplace_back(parent_to_hat_[t], img[t]);
      if (!out.empty()) bld.set(hat0_offset_ + k, hq, out);
    }
    for (int k2 = k + 1; k2 < (int)hat0_basis_.size(); ++k2) {
      Vec comm = commutator_flat(hat0_basis_[k], hat0_basis_[k2]);
      SparseVec out = sparse_phi(coords_or_throw(comm));
      if (!out.empty()) bld.set(hat0_offset_ + k, hat0_offset_ + k2, out);
    }
  }
  hat_ = bld.build(false);

  std::vector<int> hat_degs(hat_dim, 0);
  for (int hp = 0; hp < hat0_offset_; ++hp) hat_degs[hp] = g.degree(hat_parent[hp]);
  hat_grading_.emplace(hat_, hat_degs);
}

const std::vector<int>& HatAlgebra::block_of(int degree) const {
  for (std::size_t t = 0; t < degrees_.size(); ++t)
    if (degrees_[t] == degree) return blocks_[t];
  throw Error(Errc::Internal, "no block of degree " + std::to_string(degree));
}

Vec HatAlgebra::flatten_ad(const Vec& parent_x) const {
  const LieAlgebra& L = parent_.algebra();
  const FieldSpec& fs = L.field();
  Vec flat = zero_vec(fs, width_);
  for (std::size_t t = 0; t < blocks_.size(); ++t) {
    const auto& blk = blocks_[t];
    for (std::size_t c = 0; c < blk.size(); ++c) {
      // [x, e_c]
      Vec img = zero_vec(fs, L.dim());
      for (int i = 0; i < L.dim(); ++i) {
        if (parent_x[i].is_zero()) continue;
        for (const auto& [k, cf] : L.bracket_basis(i, blk[c])) img[k] += parent_x[i] * cf;
      }
      for (std::size_t m = 0; m < blk.size(); ++m)
        flat[block_offset_[t] + m * blk.size() + c] = img[blk[m]];
      // components outside the block would violate the grading; the callers
      // only pass degree-0 elements, for which [x, L_i] <= L_i
    }
  }
  return flat;
}

std::optional<Vec> HatAlgebra::hat0_coordinates(const Vec& flat) const {
  const FieldSpec& fs = parent_.algebra().field();
  Vec coords = zero_vec(fs, hat0_basis_.size());
  for (std::size_t k = 0; k < hat0_basis_.size(); ++k) coords[k] = flat[free_cols_[k]];
  Vec recon = zero_vec(fs, width_);
  for (std::size_t k = 0; k < hat0_basis_.size(); ++k)
    add_scaled(recon, hat0_basis_[k], coords[k]);
  for (std::size_t j = 0; j < width_; ++j)
    if (recon[j] != flat[j]) return std::nullopt;
  return coords;
}

Vec HatAlgebra::phi_apply(const Vec& flat, int parent_idx) const {
  const LieAlgebra& L = parent_.algebra();
  const FieldSpec& fs = L.field();
  Vec out = zero_vec(fs, L.dim());
  int deg = parent_.degree(parent_idx);
  for (std::size_t t = 0; t < blocks_.size(); ++t) {
    if (degrees_[t] != deg) continue;
    const auto& blk = blocks_[t];
    std::size_t c = std::find(blk.begin(), blk.end(), parent_idx) - blk.begin();
    for (std::size_t m = 0; m < blk.size(); ++m)
      out[blk[m]] = flat[block_offset_[t] + m * blk.size() + c];
    return out;
  }
  throw Error(Errc::Internal, "phi applied outside the nonzero-degree blocks");
}

Vec HatAlgebra::commutator_flat(const Vec& f, const Vec& g) const {
  const FieldSpec& fs = parent_.algebra().field();
  Vec out = zero_vec(fs, width_);
  for (std::size_t t = 0; t < blocks_.size(); ++t) {
    std::size_t d = blocks_[t].size(), off = block_offset_[t];
    for (std::size_t m = 0; m < d; ++m)
      for (std::size_t c = 0; c < d; ++c) {
        Scalar acc = Scalar::zero(fs);
        for (std::size_t k = 0; k < d; ++k)
          acc += f[off + m * d + k] * g[off + k * d + c] - g[off + m * d + k] * f[off + k * d + c];
        out[off + m * d + c] = acc;
      }
  }
  return out;
}

Vec HatAlgebra::zeta() const {
  const FieldSpec& fs = parent_.algebra().field();
  Vec flat = zero_vec(fs, width_);
  for (std::size_t t = 0; t < blocks_.size(); ++t) {
    std::size_t d = blocks_[t].size();
    for (std::size_t m = 0; m < d; ++m)
      flat[block_offset_[t] + m * d + m] = Scalar::of(fs, degrees_[t]);
  }
  auto coords = hat0_coordinates(flat);
  if (!coords)
    throw Error(Errc::Internal, "grading derivation missing from the constraint space");
  Vec out = zero_vec(fs, hat_->dim());
  for (std::size_t k = 0; k < coords->size(); ++k) out[hat0_offset_ + (int)k] = (*coords)[k];
  return out;
}

bool HatAlgebra::contains_grading_derivation() const {
  Vec z;
  try {
    z = zeta();
  } catch (const Error&) {
    return false;
  }
  // the action must be multiplication by the degree on every basis vector
  const FieldSpec& fs = hat_->field();
  for (int j = 0; j < hat_->dim(); ++j) {
    Vec e = zero_vec(fs, hat_->dim());
    e[j] = Scalar::one(fs);
    Vec lhs = hat_->bracket(z, e);
    Vec rhs = scaled(e, Scalar::of(fs, hat_grading_->degree(j)));
    if (lhs != rhs) return false;
  }
  return true;
}

HatAlgebra::NaturalMap HatAlgebra::natural_map() const {
  const LieAlgebra& L = parent_.algebra();
  const FieldSpec& fs = L.field();
  NaturalMap nm;
  nm.domain = parent_.block(0);
  Matrix coords(fs, hat0_basis_.size(), nm.domain.size());
  std::vector<Vec> flats;
  for (std::size_t c = 0; c < nm.domain.size(); ++c) {
    Vec x = zero_vec(fs, L.dim());
    x[nm.domain[c]] = Scalar::one(fs);
    Vec flat = flatten_ad(x);
    flats.push_back(flat);
    auto co = hat0_coordinates(flat);
    if (!co) throw Error(Errc::Internal, "natural map image misses the constraint space");
    for (std::size_t k = 0; k < co->size(); ++k) coords.at(k, c) = (*co)[k];
  }
  nm.coords = coords;
  for (const auto& kerv : nullspace(coords)) {
    Vec v = zero_vec(fs, L.dim());
    for (std::size_t c = 0; c < nm.domain.size(); ++c) v[nm.domain[c]] = kerv[c];
    nm.kernel.push_back(std::move(v));
  }
  nm.homomorphism = true;
  for (std::size_t a = 0; a < nm.domain.size() && nm.homomorphism; ++a)
    for (std::size_t b = a + 1; b < nm.domain.size() && nm.homomorphism; ++b) {
      Vec z = to_dense(fs, L.dim(), L.bracket_basis(nm.domain[a], nm.domain[b]));
      Vec lhs = flatten_ad(z);
      Vec rhs = commutator_flat(flats[a], flats[b]);
      if (lhs != rhs) nm.homomorphism = false;
    }
  return nm;
}

}  // namespace gradus
