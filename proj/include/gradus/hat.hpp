#pragma once

// The extension of a (2n+1)-graded Lie algebra whose degree-0 part is the
// space of grading-preserving derivation shadows: tuples of endomorphisms of
// the nonzero-degree components satisfying the two derivation-constraint
// families, with the five-case bracket. The zero-degree block of the source
// algebra is replaced, every other block is kept as is.

#include "gradus/lie.hpp"

namespace gradus {

class HatAlgebra {
public:
  // Builds the constraint space, assembles the bracket table, and verifies
  // the grading closure. Degenerate input (trivial grading) is accepted and
  // yields the full endomorphism constraint space.
  explicit HatAlgebra(const Grading& g);

  const Grading& parent() const { return parent_; }
  LiePtr algebra() const { return hat_; }
  const Grading& grading() const { return *hat_grading_; }

  int hat0_dim() const { return (int)hat0_basis_.size(); }
  int hat0_offset() const { return hat0_offset_; }
  const std::vector<Vec>& hat0_basis() const { return hat0_basis_; }  // flattened tuples
  const std::vector<int>& nonzero_degrees() const { return degrees_; }
  const std::vector<int>& block_of(int degree) const;
  std::size_t phi_width() const { return width_; }

  // Flattened tuple (ad(x) restricted to each nonzero block) of x in the
  // parent algebra; the core of the natural map.
  Vec flatten_ad(const Vec& parent_x) const;
  // Coordinates over hat0_basis, if the tuple satisfies the constraints.
  std::optional<Vec> hat0_coordinates(const Vec& flattened) const;

  // The grading derivation (i * id on each block) as an element of the hat
  // algebra. Its existence is a construction guarantee; failure throws.
  Vec zeta() const;
  // Re-derives zeta's membership from scratch; true by construction.
  bool contains_grading_derivation() const;

  // Image coordinates (over hat0_basis) of each degree-0 basis vector of the
  // parent, the kernel of that map, and whether it is a Lie homomorphism on
  // the degree-0 block (it always is; rechecked).
  struct NaturalMap {
    Matrix coords;              // hat0_dim x dim(L_0)
    std::vector<int> domain;    // parent indices of the degree-0 block
    std::vector<Vec> kernel;    // vectors in parent coordinates
    bool homomorphism = false;
  };
  NaturalMap natural_map() const;

  // Parent nonzero-degree basis index -> hat basis index.
  int hat_index_of_parent(int parent_idx) const { return parent_to_hat_[parent_idx]; }

private:
  Vec phi_apply(const Vec& flattened, int parent_idx) const;  // phi(e_parent_idx), parent coords
  Vec commutator_flat(const Vec& f, const Vec& g) const;

  Grading parent_;
  std::vector<int> degrees_;                // nonzero degrees, ascending
  std::vector<std::vector<int>> blocks_;    // parent indices per degree
  std::vector<std::size_t> block_offset_;   // offset of each block in the flattened tuple
  std::size_t width_ = 0;
  std::vector<Vec> hat0_basis_;
  std::vector<std::size_t> free_cols_;      // unit coordinates of the basis vectors
  std::vector<int> parent_to_hat_;
  int hat0_offset_ = 0;
  LiePtr hat_;
  std::optional<Grading> hat_grading_;
};

}  // namespace gradus
