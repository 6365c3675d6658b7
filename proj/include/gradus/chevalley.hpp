#pragma once

// Chevalley algebras: the integral span of root vectors e_alpha and simple
// coroots h_i, reduced over an exact field, with the J-gradings and the
// grading-derivation solve in the Cartan subalgebra.

#include <memory>
#include <optional>

#include "gradus/lie.hpp"
#include "gradus/rootsystem.hpp"

namespace gradus {

struct ChevalleyModel {
  std::shared_ptr<const RootSystem> roots;
  std::shared_ptr<const ChevalleyConstants> constants;
  LiePtr algebra;

  int e_index(int root_idx) const { return root_idx; }
  int h_index(int bourbaki_i) const { return roots->num_roots() + bourbaki_i - 1; }
  int dim() const { return algebra->dim(); }

  // Basis indices of the +/- simple root vectors; they generate the algebra
  // over every admissible field (all structure constants have |N| <= 4).
  std::vector<int> generator_indices() const;

  // Center of the algebra. For a Chevalley algebra every central element
  // lies in the Cartan subalgebra (root coefficients are forced to vanish
  // because their coroots survive reduction), so this is the kernel of the
  // Cartan pairing matrix over the field. Nonempty only when the
  // characteristic divides the connection index.
  std::vector<Vec> center_basis() const;
};

// dim = |Phi| + rank; brackets [e_a,e_b] = N_{a,b} e_{a+b},
// [e_a,e_{-a}] = h_{a^vee}, [h_i,e_b] = <b, alpha_i^vee> e_b.
// Throws BadCharacteristic over GF(2), GF(3) (already unconstructible).
ChevalleyModel chevalley_algebra(std::shared_ptr<const RootSystem> rs,
                                 std::shared_ptr<const ChevalleyConstants> consts,
                                 const FieldSpec& fs);

// degree(e_alpha) = level of alpha w.r.t. J, degree(h) = 0.
// Throws TooWideGrading when the maximal level exceeds 2.
Grading grading_from_J(const ChevalleyModel& M, const JSubset& J);

// Solves alpha_i(h) = level(alpha_i) in the Cartan subalgebra; falls back to
// the outer diagonal action when the system is inconsistent over the field.
GradingDerivation grading_derivation(const ChevalleyModel& M, const JSubset& J);

// Loads the constant table through the disk cache (E types of rank >= 7),
// recomputing and rewriting on any mismatch. cache_dir empty = no caching.
std::shared_ptr<const ChevalleyConstants> constants_with_cache(const RootSystem& rs,
                                                               const std::string& cache_dir);

// Default cache directory: $GRADUS_CACHE_DIR, else $HOME/.cache/gradus.
std::string default_cache_dir();

}  // namespace gradus
