#pragma once

// Structurable algebras with involution, the operator calculus (V, U, T,
// psi, L_s, eps/delta transforms), the 5-graded Lie algebra K(A) built from
// them, Kantor pairs extracted from gradings, and the unit-pair search that
// decides when a grading carries a structurable-algebra realization.

#include <memory>

#include "gradus/lie.hpp"

namespace gradus {

class StructurableAlgebra {
public:
  // mult[i][j] = coordinates of e_i * e_j; involution as a matrix; unit as a
  // coordinate vector. Run validate() before trusting an instance.
  StructurableAlgebra(const FieldSpec& fs, std::vector<std::vector<Vec>> mult, Matrix involution,
                      Vec unit);

  const FieldSpec& field() const { return fs_; }
  int dim() const { return dim_; }
  const Vec& unit() const { return unit_; }
  const Matrix& involution() const { return inv_; }

  Vec mul(const Vec& x, const Vec& y) const;
  Vec conj(const Vec& x) const { return inv_.apply(x); }

  Matrix left_mult(const Vec& s) const;   // L_s : x -> s x
  Matrix right_mult(const Vec& s) const;  // R_s : x -> x s

  // V_{x,y} z = (x ybar) z + (z ybar) x - (z xbar) y
  Matrix v_op(const Vec& x, const Vec& y) const;
  Vec triple(const Vec& x, const Vec& y, const Vec& z) const;
  // U_{x,y} z = V_{x,z} y, as a matrix in z; u_op(x) = U_{x,x}
  Matrix u_op(const Vec& x, const Vec& y) const;
  Matrix u_op(const Vec& x) const { return u_op(x, x); }
  Matrix t_op(const Vec& z) const { return v_op(z, unit_); }

  Vec psi(const Vec& x, const Vec& y) const;  // x ybar - y xbar

  Matrix eps(const Matrix& A) const;    // A - L_{A(1) + conj(A(1))}
  Matrix delta(const Matrix& A) const;  // A + R_{conj(A(1))}

  // +1 / -1 eigenspaces of the involution; their dimensions add up to dim.
  const std::vector<Vec>& hermitian_basis() const { return herm_; }
  const std::vector<Vec>& skew_basis() const { return skew_; }
  int skew_dim() const { return (int)skew_.size(); }
  // Coordinates of a vector over the skew basis; nullopt if not skew.
  std::optional<Vec> skew_coordinates(const Vec& v) const;

  struct Validation {
    bool ok = true;
    Errc code = Errc::Internal;
    std::string detail;
  };
  // Involution axioms, unit axioms, the operator identity on all basis
  // 4-tuples, and the T-form of it on all basis 3-tuples. The two routes
  // must agree; the first failing tuple is reported.
  Validation validate() const;
  void validate_or_throw() const;

  // Row-reduced basis of span{ V_{e_i, e_j} }, with commutator closure
  // checked; elements are operators on A.
  struct InstrlSpan {
    std::vector<Matrix> ops;
    RowReducer span;  // over flattened dim x dim operators
    Vec coordinates(const Matrix& op) const;  // throws if not in the span
  };
  InstrlSpan instrl_basis() const;

  struct ZeroDivisorReport {
    bool exhaustive = false;
    std::size_t tested = 0;
    std::vector<Vec> found;  // nonzero x with U_x = 0
  };
  // Exhaustive over GF(p) when p^dim <= 10^6; otherwise a basis-and-random
  // heuristic (reported as such).
  ZeroDivisorReport absolute_zero_divisors(std::size_t random_samples = 64,
                                           std::uint64_t seed = 1) const;

private:
  FieldSpec fs_;
  int dim_;
  std::vector<std::vector<Vec>> mult_;
  Matrix inv_;
  Vec unit_;
  std::vector<Vec> herm_, skew_;
  RowReducer skew_span_;
};

using StructurablePtr = std::shared_ptr<const StructurableAlgebra>;

// The 5-graded Lie algebra on S- + A- + Instrl + A+ + S+ with the standard
// case-table bracket. Jacobi is verified exhaustively on construction.
class KappaAlgebra {
public:
  explicit KappaAlgebra(StructurablePtr A);

  LiePtr algebra() const { return L_; }
  const Grading& grading() const { return *grading_; }
  const StructurableAlgebra& source() const { return *A_; }
  StructurablePtr source_ptr() const { return A_; }

  std::vector<int> block_dims() const;  // degrees -2..2

  int sminus_offset() const { return 0; }
  int aminus_offset() const { return skew_; }
  int instrl_offset() const { return skew_ + a_; }
  int aplus_offset() const { return skew_ + a_ + instrl_; }
  int splus_offset() const { return skew_ + 2 * a_ + instrl_; }

  Vec embed_plus(const Vec& x) const;   // A -> A+ block
  Vec embed_minus(const Vec& x) const;  // A -> A- block
  Vec unit_plus() const { return embed_plus(A_->unit()); }
  Vec unit_minus() const { return embed_minus(A_->unit()); }

  // [1+, 1-] realizes the grading derivation; rechecked on demand.
  bool unit_pair_is_grading_derivation() const;

private:
  StructurablePtr A_;
  int skew_, a_, instrl_;
  LiePtr L_;
  std::optional<Grading> grading_;
};

// Kantor pair extracted from the +-1 blocks of a 5-bounded grading with the
// product <x,y,z> = -[[x,y],z]. Throws EmptyPair when both blocks vanish.
class KantorPair {
public:
  explicit KantorPair(const Grading& g);

  int dim(int sigma) const { return (int)(sigma > 0 ? plus_ : minus_).size(); }
  const std::vector<int>& block(int sigma) const { return sigma > 0 ? plus_ : minus_; }

  // block coordinates in, block coordinates out
  Vec triple(int sigma, const Vec& x, const Vec& y, const Vec& z) const;
  Matrix v_matrix(int sigma, const Vec& x, const Vec& y) const;  // z -> <x,y,z>
  Matrix k_matrix(int sigma, const Vec& a, const Vec& b) const;  // z -> <a,z,b> - <b,z,a>

  struct AxiomReport {
    bool ok = false;
    bool exhaustive = false;
    std::size_t checked = 0;
    std::uint64_t seed = 0;
    std::string counterexample;
  };
  // KP1 and KP2 for both signs: exhaustive over basis tuples when both sides
  // have dim <= 6, else `samples` seeded random tuples per axiom and sign.
  AxiomReport verify_axioms(std::size_t samples = 100, std::uint64_t seed = 1) const;

private:
  Vec lift(int sigma, const Vec& coords) const;
  Vec project(int sigma, const Vec& full) const;

  Grading g_;
  std::vector<int> plus_, minus_;
};

struct UnitPairResult {
  bool found = false;
  Vec u, v;            // elements of L_1 and L_{-1}, when found
  Vec zeta_realized;   // [u,v]; acts as the grading derivation (verified)
  bool exhaustive = false;  // a NotFound was confirmed by full enumeration
  std::size_t attempts_used = 0;
  std::uint64_t seed = 0;
};

// Searches for u in L_1, v in L_{-1} such that [u,v] acts as the grading
// derivation, i.e. [u,v] = zeta up to a central degree-0 shift (`central`
// must span the central shift space; pass the center of the algebra, empty
// when the center is trivial). Trial order: the sum of the degree-1 basis
// vectors first, then seeded random elements; each trial solves the linear
// system in the opposite block (both sides are tried). Every hit is
// re-verified by its action: [[u,v], x] = i*x on all of L_i. Over a finite
// field with |field|^(d+ + d-) <= 10^6 a NotFound is upgraded to an
// exhaustive pair scan. NotFound without the exhaustive flag is not a proof
// of non-existence. Throws OuterZeta when zeta is not realized inside the
// algebra.
UnitPairResult find_unit_pair(const Grading& g, const GradingDerivation& zeta,
                              std::size_t attempts = 8, std::uint64_t seed = 1,
                              const std::vector<Vec>& central = {});

// Degree-preserving isomorphism search between two graded algebras, given a
// unit pair on each side: the correspondence (uA -> uB, vA -> vB) is closed
// under brackets; when the pairs generate, the induced linear map is built
// and verified. Block dimensions are always compared first.
struct GradedIsoResult {
  enum class Status { Isomorphic, DimsMatchOnly, DimsDiffer };
  Status status = Status::DimsDiffer;
  Matrix map;  // basis of A -> basis of B, when Isomorphic
};
GradedIsoResult graded_isomorphism_from_pairs(const Grading& gA, const Vec& uA, const Vec& vA,
                                              const Grading& gB, const Vec& uB, const Vec& vB);

}  // namespace gradus
