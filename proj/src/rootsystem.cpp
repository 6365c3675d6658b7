#include "gradus/rootsystem.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <numeric>

#include "gradus/field.hpp"

namespace gradus {

char type_letter(SimpleType t) {
  switch (t) {
    case SimpleType::A: return 'A';
    case SimpleType::B: return 'B';
    case SimpleType::C: return 'C';
    case SimpleType::D: return 'D';
    case SimpleType::E: return 'E';
    case SimpleType::F: return 'F';
    case SimpleType::G: return 'G';
  }
  return '?';
}

SimpleType type_from_letter(char c) {
  switch (c) {
    case 'A': return SimpleType::A;
    case 'B': return SimpleType::B;
    case 'C': return SimpleType::C;
    case 'D': return SimpleType::D;
    case 'E': return SimpleType::E;
    case 'F': return SimpleType::F;
    case 'G': return SimpleType::G;
    default: throw Error(Errc::InvalidType, std::string("unknown type '") + c + "'");
  }
}

static void check_rank(SimpleType t, int rank) {
  bool ok = false;
  switch (t) {
    case SimpleType::A: ok = rank >= 1; break;
    case SimpleType::B: ok = rank >= 2; break;
    case SimpleType::C: ok = rank >= 3; break;
    case SimpleType::D: ok = rank >= 4; break;
    case SimpleType::E: ok = rank >= 6 && rank <= 8; break;
    case SimpleType::F: ok = rank == 4; break;
    case SimpleType::G: ok = rank == 2; break;
  }
  if (!ok)
    throw Error(Errc::InvalidType,
                std::string("invalid rank ") + std::to_string(rank) + " for type " +
                    std::string(1, type_letter(t)));
}

int classical_root_count(SimpleType t, int rank) {
  switch (t) {
    case SimpleType::A: return rank * (rank + 1);
    case SimpleType::B:
    case SimpleType::C: return 2 * rank * rank;
    case SimpleType::D: return 2 * rank * (rank - 1);
    case SimpleType::E: return rank == 6 ? 72 : (rank == 7 ? 126 : 240);
    case SimpleType::F: return 48;
    case SimpleType::G: return 12;
  }
  return 0;
}

RootSystem::RootSystem(SimpleType type, int rank) : type_(type), rank_(rank) {
  check_rank(type, rank);
  build_cartan();
  build_lengths();
  generate_roots();
}

void RootSystem::build_cartan() {
  int l = rank_;
  cartan_.assign(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) cartan_[i][i] = 2;
  auto bond = [&](int i, int j) {  // 1-based, single bond
    cartan_[i - 1][j - 1] = -1;
    cartan_[j - 1][i - 1] = -1;
  };
  switch (type_) {
    case SimpleType::A:
      for (int i = 1; i < l; ++i) bond(i, i + 1);
      break;
    case SimpleType::B:
      for (int i = 1; i + 1 < l; ++i) bond(i, i + 1);
      // alpha_{l-1} long, alpha_l short
      cartan_[l - 2][l - 1] = -2;
      cartan_[l - 1][l - 2] = -1;
      break;
    case SimpleType::C:
      for (int i = 1; i + 1 < l; ++i) bond(i, i + 1);
      // alpha_{l-1} short, alpha_l long
      cartan_[l - 2][l - 1] = -1;
      cartan_[l - 1][l - 2] = -2;
      break;
    case SimpleType::D:
      for (int i = 1; i + 1 < l; ++i) bond(i, i + 1);
      bond(l - 2, l);
      break;
    case SimpleType::E:
      bond(1, 3);
      bond(3, 4);
      bond(2, 4);
      bond(4, 5);
      bond(5, 6);
      if (l >= 7) bond(6, 7);
      if (l >= 8) bond(7, 8);
      break;
    case SimpleType::F:
      bond(1, 2);
      bond(3, 4);
      cartan_[1][2] = -2;  // alpha_2 long, alpha_3 short
      cartan_[2][1] = -1;
      break;
    case SimpleType::G:
      cartan_[0][1] = -1;  // alpha_1 short, alpha_2 long
      cartan_[1][0] = -3;
      break;
  }
}

void RootSystem::build_lengths() {
  // d_j * cartan[i][j] = d_i * cartan[j][i]; propagate from node 0, then
  // normalize so min d = 1.
  int l = rank_;
  std::vector<mpq_class> d(l, 0);
  d[0] = 1;
  std::deque<int> queue{0};
  std::vector<bool> seen(l, false);
  seen[0] = true;
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int j = 0; j < l; ++j) {
      if (seen[j] || cartan_[i][j] == 0) continue;
      d[j] = d[i] * cartan_[j][i] / cartan_[i][j];
      seen[j] = true;
      queue.push_back(j);
    }
  }
  mpq_class mn = d[0];
  for (auto& x : d) mn = std::min(mn, x);
  d_.resize(l);
  for (int i = 0; i < l; ++i) {
    mpq_class v = d[i] / mn;
    if (v.get_den() != 1) throw Error(Errc::Internal, "non-integral root length ratio");
    d_[i] = (int)v.get_num().get_si();
  }
}

void RootSystem::generate_roots() {
  int l = rank_;
  std::map<std::vector<int>, bool> seen;
  std::deque<std::vector<int>> queue;
  for (int i = 0; i < l; ++i) {
    std::vector<int> e(l, 0);
    e[i] = 1;
    seen[e] = true;
    queue.push_back(e);
  }
  auto pair_with = [&](const std::vector<int>& m, int i) {
    int s = 0;
    for (int j = 0; j < l; ++j) s += m[j] * cartan_[j][i];
    return s;
  };
  while (!queue.empty()) {
    std::vector<int> m = queue.front();
    queue.pop_front();
    for (int i = 0; i < l; ++i) {
      std::vector<int> r = m;
      r[i] -= pair_with(m, i);
      if (!seen.count(r)) {
        seen[r] = true;
        queue.push_back(r);
      }
    }
  }
  std::vector<std::vector<int>> pos;
  for (const auto& [m, _] : seen) {
    int sign = 0;
    for (int x : m) {
      if (x > 0) sign = 1;
      if (x < 0) sign = -1;
      if (sign != 0) break;
    }
    if (sign > 0) pos.push_back(m);
  }
  auto ht = [](const std::vector<int>& m) { return std::accumulate(m.begin(), m.end(), 0); };
  std::sort(pos.begin(), pos.end(), [&](const auto& a, const auto& b) {
    int ha = ht(a), hb = ht(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  n_pos_ = (int)pos.size();
  roots_ = pos;
  for (const auto& m : pos) {
    std::vector<int> neg(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) neg[i] = -m[i];
    roots_.push_back(neg);
  }
  for (int i = 0; i < (int)roots_.size(); ++i) index_[roots_[i]] = i;
  highest_ = n_pos_ - 1;  // maximal height comes last in the sorted positives
}

int RootSystem::index_of(const std::vector<int>& coeffs) const {
  auto it = index_.find(coeffs);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::sum_index(int a, int b) const {
  std::vector<int> s(rank_);
  for (int i = 0; i < rank_; ++i) s[i] = roots_[a][i] + roots_[b][i];
  return index_of(s);
}

int RootSystem::simple_root_index(int bourbaki_i) const {
  std::vector<int> e(rank_, 0);
  e.at(bourbaki_i - 1) = 1;
  return index_of(e);
}

int RootSystem::height(int idx) const {
  return std::accumulate(roots_[idx].begin(), roots_[idx].end(), 0);
}

int RootSystem::coefficient(int root_idx, int bourbaki_beta) const {
  return roots_.at(root_idx).at(bourbaki_beta - 1);
}

int RootSystem::pairing(int root_idx, int bourbaki_i) const {
  int s = 0;
  for (int j = 0; j < rank_; ++j) s += roots_[root_idx][j] * cartan_[j][bourbaki_i - 1];
  return s;
}

int RootSystem::length_sq(int root_idx) const {
  // (alpha,beta) for simple roots is cartan[i][j]*d_j; extend bilinearly.
  const auto& m = roots_[root_idx];
  long long s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (m[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) {
      if (m[j] == 0) continue;
      s += (long long)m[i] * m[j] * cartan_[i][j] * d_[j];
    }
  }
  return (int)s;
}

std::vector<int> RootSystem::coroot_coefficients(int root_idx) const {
  int la = length_sq(root_idx);
  std::vector<int> c(rank_);
  for (int i = 0; i < rank_; ++i) {
    long long num = (long long)roots_[root_idx][i] * 2 * d_[i];
    if (num % la != 0) throw Error(Errc::Internal, "non-integral coroot coefficient");
    c[i] = (int)(num / la);
  }
  return c;
}

int RootSystem::string_down_length(int alpha_idx, int beta_idx) const {
  int k = 0;
  std::vector<int> v = roots_[beta_idx];
  while (true) {
    for (int i = 0; i < rank_; ++i) v[i] -= roots_[alpha_idx][i];
    if (index_of(v) == -1) break;
    ++k;
  }
  return k;
}

namespace {

// Sign computation by the extraspecial-pair rule. All constants are derived
// from the base values N_{eps,delta} = p+1 through the antisymmetry, the
// opposite-pair relation N_{-a,-b} = -N_{a,b}, the cyclic relation
// N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b) for a+b+c = 0, and one
// Jacobi identity per non-extraspecial positive pair.
class ConstantBuilder {
public:
  explicit ConstantBuilder(const RootSystem& rs) : rs_(rs), nr_(rs.num_roots()) {
    memo_.assign((std::size_t)nr_ * nr_, kUnset);
    extra_.assign(nr_, -1);
  }

  std::vector<long long> build() {
    std::vector<long long> table((std::size_t)nr_ * nr_, 0);
    for (int a = 0; a < nr_; ++a)
      for (int b = 0; b < nr_; ++b) {
        if (rs_.negative_of(a) == b) continue;
        if (rs_.sum_index(a, b) == -1) continue;
        table[(std::size_t)a * nr_ + b] = value(a, b);
      }
    return table;
  }

private:
  static constexpr long long kUnset = LLONG_MIN;

  bool pos(int i) const { return rs_.is_positive(i); }
  int neg(int i) const { return rs_.negative_of(i); }

  // extraspecial pair of a positive non-simple root: (eps, gamma - eps) with
  // eps the first positive root (in storage order) whose complement is a
  // positive root
  std::pair<int, int> extraspecial(int gamma) {
    if (extra_[gamma] == -1) {
      for (int e = 0; e < rs_.num_positive(); ++e) {
        int d = diff_index(gamma, e);
        if (d != -1 && pos(d)) {
          extra_[gamma] = e;
          break;
        }
      }
      if (extra_[gamma] == -1) throw Error(Errc::Internal, "no decomposition pair");
    }
    int e = extra_[gamma];
    return {e, diff_index(gamma, e)};
  }

  int diff_index(int a, int b) const { return rs_.sum_index(a, neg(b)); }

  long long value(int a, int b) {
    long long& slot = memo_[(std::size_t)a * nr_ + b];
    if (slot != kUnset) return slot;
    long long v;
    int gamma = rs_.sum_index(a, b);
    if (pos(a) && pos(b)) {
      v = positive_pair(a, b, gamma);
    } else if (!pos(a) && !pos(b)) {
      v = -value(neg(a), neg(b));
    } else if (pos(gamma)) {
      v = -value(neg(a), neg(b));
    } else {
      // mixed pair, negative sum: one negative element in the zero-sum
      // triple (a, b, c); rotate to the all-positive pair.
      int c = neg(gamma);
      if (!pos(a)) {
        v = ratio(value(b, c), rs_.length_sq(c), rs_.length_sq(a));
      } else {
        v = ratio(value(c, a), rs_.length_sq(c), rs_.length_sq(b));
      }
    }
    slot = v;
    return v;
  }

  long long positive_pair(int a, int b, int gamma) {
    auto [eps, delta] = extraspecial(gamma);
    long long base = rs_.string_down_length(eps, delta) + 1;
    if (a == eps && b == delta) return base;
    if (a == delta && b == eps) return -base;
    // Jacobi identity on (e_{-eps}, e_a, e_b), collected on e_delta:
    //   N_{a,b} N_{gamma,-eps} + [a-eps term] + [b-eps term] = 0
    long long t1 = 0, t3 = 0;
    int ae = diff_index(a, eps);
    if (ae != -1) t1 = value(neg(eps), a) * value(ae, b);
    int be = diff_index(b, eps);
    if (be != -1) t3 = value(b, neg(eps)) * value(be, a);
    long long den = value(gamma, neg(eps));
    if (den == 0) throw Error(Errc::Internal, "vanishing pivot constant");
    long long num = -(t1 + t3);
    if (num % den != 0) throw Error(Errc::Internal, "non-integral structure constant");
    return num / den;
  }

  static long long ratio(long long n, int num_len, int den_len) {
    long long v = n * num_len;
    if (v % den_len != 0) throw Error(Errc::Internal, "non-integral length ratio");
    return v / den_len;
  }

  const RootSystem& rs_;
  int nr_;
  std::vector<long long> memo_;
  std::vector<int> extra_;
};

}  // namespace

ChevalleyConstants::ChevalleyConstants(const RootSystem& rs) : nroots_(rs.num_roots()) {
  table_ = ConstantBuilder(rs).build();
}

ChevalleyConstants::ChevalleyConstants(const RootSystem& rs, std::vector<long long> table)
    : nroots_(rs.num_roots()), table_(std::move(table)) {
  if (table_.size() != (std::size_t)nroots_ * nroots_)
    throw Error(Errc::ParseError, "constants table has wrong size");
}

JSubset::JSubset(const RootSystem& rs, std::vector<int> ms) : members(std::move(ms)) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty()) throw Error(Errc::InvalidType, "J must be nonempty");
  for (int i : members)
    if (i < 1 || i > rs.rank())
      throw Error(Errc::InvalidType, "simple-root index " + std::to_string(i) + " out of range");
}

bool JSubset::contains(int i) const {
  return std::find(members.begin(), members.end(), i) != members.end();
}

std::string JSubset::str() const {
  std::string s = "{";
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(members[k]);
  }
  return s + "}";
}

std::vector<int> levels(const RootSystem& rs, const JSubset& J) {
  std::vector<int> lv(rs.num_roots(), 0);
  for (int r = 0; r < rs.num_roots(); ++r) {
    int s = 0;
    for (int i : J.members) s += rs.coefficient(r, i);
    lv[r] = s;
  }
  return lv;
}

int max_level(const RootSystem& rs, const JSubset& J) {
  int s = 0;
  for (int i : J.members) s += rs.coefficient(rs.highest_root(), i);
  return s;
}

GradingWidth grading_width(const RootSystem& rs, const JSubset& J) {
  int m = max_level(rs, J);
  if (m <= 1) return GradingWidth::ThreeGraded;
  if (m == 2) return GradingWidth::FiveGraded;
  return GradingWidth::TooWide;
}

std::string width_str(GradingWidth w) {
  switch (w) {
    case GradingWidth::ThreeGraded: return "ThreeGraded";
    case GradingWidth::FiveGraded: return "FiveGraded";
    case GradingWidth::TooWide: return "TooWide";
  }
  return "?";
}

bool is_distinguished(const RootSystem& rs, const JSubset& J) {
  auto lv = levels(rs, J);
  int zero = 0, one = 0;
  for (int r = 0; r < rs.num_roots(); ++r) {
    if (lv[r] == 0) ++zero;
    if (lv[r] == 1) ++one;
  }
  return zero + rs.rank() == one;
}

}  // namespace gradus
