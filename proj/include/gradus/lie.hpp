#pragma once

// Finite-dimensional Lie algebras with explicit bracket tables over an exact
// field, Z-gradings, grading derivations, truncated exponentials and the
// structural operations built on them. Algebras are immutable once built.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gradus/linalg.hpp"

namespace gradus {

class LieAlgebra;
using LiePtr = std::shared_ptr<const LieAlgebra>;

class LieAlgebraBuilder {
public:
  LieAlgebraBuilder(const FieldSpec& fs, std::vector<std::string> labels);

  // Sets [e_i, e_j]; the opposite entry is filled by antisymmetry.
  void set(int i, int j, const SparseVec& v);
  void set(int i, int j, const Vec& v) { set(i, j, to_sparse(v)); }

  // check_jacobi: verify antisymmetry and the Jacobi identity exhaustively
  // (throws JacobiFails). Skipped when false (large algebras are verified
  // separately by verify_jacobi with the sampling policy).
  LiePtr build(bool check_jacobi) const;

private:
  FieldSpec fs_;
  std::vector<std::string> labels_;
  std::vector<SparseVec> table_;
};

class LieAlgebra {
public:
  int dim() const { return dim_; }
  const FieldSpec& field() const { return fs_; }
  const std::vector<std::string>& labels() const { return labels_; }

  const SparseVec& bracket_basis(int i, int j) const { return table_[(std::size_t)i * dim_ + j]; }
  Vec bracket(const Vec& x, const Vec& y) const;
  Vec bracket_basis_vec(int i, const Vec& y) const;  // [e_i, y]
  Matrix ad(const Vec& x) const;

  bool antisymmetry_holds() const;
  // Jacobi on one basis triple.
  bool jacobi_triple(int i, int j, int k) const;

  struct JacobiReport {
    bool ok = false;
    bool exhaustive = false;
    std::size_t checked = 0;
    std::uint64_t seed = 0;
    std::array<int, 3> counterexample{-1, -1, -1};
  };
  // Exhaustive over all basis triples when dim <= exhaustive_limit, else
  // `samples` random triples drawn from the recorded seed.
  JacobiReport verify_jacobi(std::size_t samples = 100000, std::uint64_t seed = 1,
                             int exhaustive_limit = 60) const;

  std::vector<Vec> center() const;

  struct Subalgebra {
    LiePtr algebra;
    std::vector<Vec> basis;  // basis of the subspace inside the parent
  };
  Subalgebra derived_subalgebra() const;

  struct Quotient {
    LiePtr algebra;
    std::vector<int> rep_indices;   // parent basis indices representing cosets
    std::vector<Vec> kernel_basis;  // the ideal that was factored out
    Vec project(const Vec& parent_vec) const;
  };
  // Quotient by the center; bracket well-definedness is rechecked on cosets.
  Quotient central_quotient() const;

private:
  friend class LieAlgebraBuilder;
  FieldSpec fs_;
  int dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<SparseVec> table_;
};

class Grading {
public:
  // Verifies [L_i, L_j] <= L_{i+j} on all basis pairs.
  Grading(LiePtr L, std::vector<int> degrees);

  const LieAlgebra& algebra() const { return *L_; }
  LiePtr algebra_ptr() const { return L_; }
  int degree(int basis) const { return degrees_[basis]; }
  const std::vector<int>& degrees() const { return degrees_; }
  int bound() const { return bound_; }  // max |degree| with nonzero component
  bool is_trivial() const { return bound_ == 0; }

  std::vector<int> block(int deg) const;       // basis indices of L_deg
  std::vector<int> block_dims() const;         // dims of L_{-bound}..L_{bound}
  // Degree of a vector if homogeneous (zero vector counts as any degree).
  std::optional<int> homogeneous_degree(const Vec& v) const;

private:
  LiePtr L_;
  std::vector<int> degrees_;
  int bound_ = 0;
};

// The degree map as a derivation: either realized by an element of the
// degree-0 block or kept as the outer diagonal action.
struct GradingDerivation {
  bool in_algebra = false;
  Vec element;                // set when in_algebra
  std::vector<int> degrees;   // the diagonal action, always available

  Vec apply(const LieAlgebra& L, const Vec& x) const;
};

// Solves [z, b] = deg(b) * b for z in the degree-0 block; intended for small
// algebras (every basis vector contributes equations).
GradingDerivation grading_derivation_generic(const Grading& g);

// e_sigma(x, s) = sum_{i<=4} ad(x+s)^i / i!  for x of degree sigma in {+1,-1}
// and s of degree 2*sigma; requires a grading of bound <= 2.
Matrix truncated_exp(const Grading& g, int sigma, const Vec& x, const Vec& s);

// Is f an automorphism of L? Invertibility plus bracket preservation. With
// `gens` given, f([g,w]) = [f(g), f(w)] is checked for every generator g and
// every basis w; the set {v : f([v,w]) = [f(v), f(w)] for all w} is a
// subalgebra, so this is exact whenever `gens` generates L. Without
// generators every basis pair is checked directly.
bool is_automorphism(const LieAlgebra& L, const Matrix& f, const std::vector<int>& gens = {});

struct AlgebraicityReport {
  bool ok = false;
  bool exhaustive = false;
  std::size_t tested = 0;
  std::uint64_t seed = 0;
  std::string counterexample;  // empty when ok
};

// Tests e_sigma(x,s) over both signs. Exhaustive enumerates all (x,s) over a
// finite field (feasibility guarded by the caller); otherwise `samples`
// seeded random pairs per sign.
AlgebraicityReport is_algebraic(const Grading& g, bool exhaustive, std::size_t samples,
                                std::uint64_t seed, const std::vector<int>& gens = {});

// Smallest graded subspace containing the seeds and closed under bracketing
// with the whole algebra. Seeds must be homogeneous.
std::vector<Vec> graded_ideal_closure(const Grading& g, const std::vector<Vec>& seeds);

// Random field element: small integers over Q, uniform residue over GF(p).
Scalar random_scalar(const FieldSpec& fs, std::mt19937_64& rng);
Vec random_vec(const FieldSpec& fs, std::size_t n, std::mt19937_64& rng);

}  // namespace gradus
