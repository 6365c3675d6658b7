#pragma once

// Reduced irreducible root systems A-G in Bourbaki numbering. Roots are
// stored as integer coefficient vectors over the simple roots, positive
// roots first (sorted by height, then lexicographically), followed by their
// negatives in mirrored order. Immutable after construction.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gradus {

enum class SimpleType { A, B, C, D, E, F, G };

char type_letter(SimpleType t);
SimpleType type_from_letter(char c);  // throws InvalidType

class RootSystem {
public:
  // Valid ranks: A>=1, B>=2, C>=3, D>=4, E in {6,7,8}, F=4, G=2.
  RootSystem(SimpleType type, int rank);

  SimpleType type() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const { return std::string(1, type_letter(type_)) + std::to_string(rank_); }

  // cartan()[i][j] = pairing of alpha_i against the coroot of alpha_j
  // (rows indexed by the root, columns by the coroot).
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  const std::vector<std::vector<int>>& roots() const { return roots_; }
  int num_roots() const { return (int)roots_.size(); }
  int num_positive() const { return n_pos_; }
  bool is_positive(int idx) const { return idx < n_pos_; }
  int negative_of(int idx) const { return idx < n_pos_ ? idx + n_pos_ : idx - n_pos_; }

  // Index of a coefficient vector, or -1 if it is not a root.
  int index_of(const std::vector<int>& coeffs) const;
  // Index of alpha + beta, or -1.
  int sum_index(int a, int b) const;
  int simple_root_index(int bourbaki_i) const;  // 1-based in, root index out

  int height(int idx) const;
  // m_beta(alpha): the beta-coordinate of alpha over the simple roots.
  int coefficient(int root_idx, int bourbaki_beta) const;
  // Unique root of maximal height.
  int highest_root() const { return highest_; }

  // <alpha, alpha_i^vee> for the i-th simple coroot (1-based i).
  int pairing(int root_idx, int bourbaki_i) const;
  // (alpha,alpha), normalized so short simple roots have squared length 2.
  int length_sq(int root_idx) const;
  int simple_length_sq(int bourbaki_i) const { return 2 * d_[bourbaki_i - 1]; }
  // Coefficients c with alpha^vee = sum c_i alpha_i^vee; always integral.
  std::vector<int> coroot_coefficients(int root_idx) const;

  // max { k : beta - k*alpha is a root }
  int string_down_length(int alpha_idx, int beta_idx) const;

private:
  void build_cartan();
  void build_lengths();
  void generate_roots();

  SimpleType type_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> d_;  // half squared lengths of simple roots, min 1
  std::vector<std::vector<int>> roots_;
  std::map<std::vector<int>, int> index_;
  int n_pos_ = 0;
  int highest_ = -1;
};

// Structure constants N_{alpha,beta} of a Chevalley basis, with signs fixed
// by the extraspecial-pair rule: positive roots are ordered by height then
// lexicographically, and the minimal decomposition pair of every positive
// root gets N = +(p+1). Deterministic across runs.
class ChevalleyConstants {
public:
  static constexpr int kConventionVersion = 1;

  explicit ChevalleyConstants(const RootSystem& rs);
  // Builds from a precomputed table (cache load); validates shape only.
  ChevalleyConstants(const RootSystem& rs, std::vector<long long> table);

  // N_{alpha,beta}; 0 whenever alpha+beta is not a root.
  long long n(int a, int b) const { return table_[(std::size_t)a * nroots_ + b]; }
  int num_roots() const { return nroots_; }
  const std::vector<long long>& raw() const { return table_; }

private:
  int nroots_;
  std::vector<long long> table_;
};

// A nonempty set of simple-root indices (1-based Bourbaki), kept sorted.
struct JSubset {
  std::vector<int> members;

  JSubset(const RootSystem& rs, std::vector<int> ms);
  bool contains(int i) const;
  std::string str() const;  // e.g. "{2}" or "{1,3}"
};

// level(alpha) = sum over beta in J of m_beta(alpha), for every root.
std::vector<int> levels(const RootSystem& rs, const JSubset& J);
// level of the highest root = max |level| over all roots.
int max_level(const RootSystem& rs, const JSubset& J);

enum class GradingWidth { ThreeGraded, FiveGraded, TooWide };
GradingWidth grading_width(const RootSystem& rs, const JSubset& J);
std::string width_str(GradingWidth w);

// dim(level-0 roots) + rank == #(level-1 roots)?
bool is_distinguished(const RootSystem& rs, const JSubset& J);

// Classical root counts, used as an independent check in tests.
int classical_root_count(SimpleType t, int rank);

}  // namespace gradus
