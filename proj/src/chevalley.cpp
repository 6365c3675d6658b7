#include "gradus/chevalley.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace gradus {

std::vector<int> ChevalleyModel::generator_indices() const {
  std::vector<int> g;
  for (int i = 1; i <= roots->rank(); ++i) {
    int idx = roots->simple_root_index(i);
    g.push_back(e_index(idx));
    g.push_back(e_index(roots->negative_of(idx)));
  }
  return g;
}

std::vector<Vec> ChevalleyModel::center_basis() const {
  const FieldSpec& fs = algebra->field();
  int l = roots->rank();
  Matrix M(fs, l, l);
  for (int j = 1; j <= l; ++j) {
    int idx = roots->simple_root_index(j);
    for (int i = 1; i <= l; ++i) M.at(j - 1, i - 1) = Scalar::of(fs, roots->pairing(idx, i));
  }
  std::vector<Vec> out;
  for (const auto& kern : nullspace(M)) {
    Vec z = zero_vec(fs, dim());
    for (int i = 1; i <= l; ++i) z[h_index(i)] = kern[i - 1];
    out.push_back(std::move(z));
  }
  return out;
}

ChevalleyModel chevalley_algebra(std::shared_ptr<const RootSystem> rs,
                                 std::shared_ptr<const ChevalleyConstants> consts,
                                 const FieldSpec& fs) {
  int nr = rs->num_roots();
  int l = rs->rank();
  std::vector<std::string> labels;
  labels.reserve(nr + l);
  for (int r = 0; r < nr; ++r) {
    std::string s = "e[";
    for (int i = 0; i < l; ++i) s += (i ? "," : "") + std::to_string(rs->roots()[r][i]);
    labels.push_back(s + "]");
  }
  for (int i = 1; i <= l; ++i) labels.push_back("h" + std::to_string(i));

  LieAlgebraBuilder b(fs, labels);
  for (int a = 0; a < nr; ++a) {
    for (int bb = a + 1; bb < nr; ++bb) {
      if (rs->negative_of(a) == bb) {
        auto c = rs->coroot_coefficients(rs->is_positive(a) ? a : bb);
        int sign = rs->is_positive(a) ? 1 : -1;
        SparseVec h;
        for (int i = 0; i < l; ++i)
          if (c[i] != 0) h.emplace_back(nr + i, Scalar::of(fs, sign * c[i]));
        b.set(a, bb, h);
        continue;
      }
      int sum = rs->sum_index(a, bb);
      if (sum == -1) continue;
      long long n = consts->n(a, bb);
      Scalar cn = Scalar::of(fs, (long)n);
      if (!cn.is_zero()) b.set(a, bb, SparseVec{{sum, cn}});
    }
    for (int i = 1; i <= l; ++i) {
      int pr = rs->pairing(a, i);
      if (pr != 0) b.set(nr + i - 1, a, SparseVec{{a, Scalar::of(fs, pr)}});
    }
  }
  ChevalleyModel m;
  m.roots = std::move(rs);
  m.constants = std::move(consts);
  m.algebra = b.build(false);
  return m;
}

Grading grading_from_J(const ChevalleyModel& M, const JSubset& J) {
  if (grading_width(*M.roots, J) == GradingWidth::TooWide)
    throw Error(Errc::TooWideGrading,
                "grading too wide (level " + std::to_string(max_level(*M.roots, J)) + ")");
  auto lv = levels(*M.roots, J);
  std::vector<int> deg(M.dim(), 0);
  for (int r = 0; r < M.roots->num_roots(); ++r) deg[M.e_index(r)] = lv[r];
  return Grading(M.algebra, deg);
}

GradingDerivation grading_derivation(const ChevalleyModel& M, const JSubset& J) {
  const FieldSpec& fs = M.algebra->field();
  int l = M.roots->rank();
  // alpha_i(sum_j c_j h_j) = sum_j c_j <alpha_i, alpha_j^vee>
  Matrix A(fs, l, l);
  Vec target = zero_vec(fs, l);
  for (int i = 1; i <= l; ++i) {
    int idx = M.roots->simple_root_index(i);
    for (int j = 1; j <= l; ++j) A.at(i - 1, j - 1) = Scalar::of(fs, M.roots->pairing(idx, j));
    target[i - 1] = Scalar::of(fs, J.contains(i) ? 1 : 0);
  }
  GradingDerivation zd;
  auto lv = levels(*M.roots, J);
  zd.degrees.assign(M.dim(), 0);
  for (int r = 0; r < M.roots->num_roots(); ++r) zd.degrees[M.e_index(r)] = lv[r];
  SolveResult res = solve_linear(A, target);
  if (res.consistent) {
    zd.in_algebra = true;
    zd.element = zero_vec(fs, M.dim());
    for (int j = 1; j <= l; ++j) zd.element[M.h_index(j)] = res.solution[j - 1];
  }
  return zd;
}

std::string default_cache_dir() {
  if (const char* env = std::getenv("GRADUS_CACHE_DIR")) return env;
  if (const char* home = std::getenv("HOME"))
    return std::string(home) + "/.cache/gradus";
  return ".gradus-cache";
}

namespace {

std::string root_key(const RootSystem& rs, int idx) {
  std::string s;
  for (int i = 0; i < rs.rank(); ++i) s += (i ? "," : "") + std::to_string(rs.roots()[idx][i]);
  return s;
}

}  // namespace

std::shared_ptr<const ChevalleyConstants> constants_with_cache(const RootSystem& rs,
                                                               const std::string& cache_dir) {
  bool cacheable = rs.type() == SimpleType::E && rs.rank() >= 7 && !cache_dir.empty();
  std::filesystem::path file;
  if (cacheable) {
    file = std::filesystem::path(cache_dir) /
           ("constants_" + rs.name() + "_v" +
            std::to_string(ChevalleyConstants::kConventionVersion) + ".json");
    std::ifstream in(file);
    if (in) {
      try {
        nlohmann::json j;
        in >> j;
        if (j.at("convention").get<int>() == ChevalleyConstants::kConventionVersion &&
            j.at("type").get<std::string>() == std::string(1, type_letter(rs.type())) &&
            j.at("rank").get<int>() == rs.rank()) {
          int nr = rs.num_roots();
          std::vector<long long> table((std::size_t)nr * nr, 0);
          std::size_t count = 0;
          for (auto& [key, val] : j.at("constants").items()) {
            auto bar = key.find('|');
            if (bar == std::string::npos) throw Error(Errc::ParseError, "bad cache key");
            std::vector<int> a, b;
            auto parse_vec = [&](const std::string& s, std::vector<int>& out) {
              std::size_t pos = 0;
              while (pos < s.size()) {
                std::size_t next = s.find(',', pos);
                if (next == std::string::npos) next = s.size();
                out.push_back(std::stoi(s.substr(pos, next - pos)));
                pos = next + 1;
              }
            };
            parse_vec(key.substr(0, bar), a);
            parse_vec(key.substr(bar + 1), b);
            int ia = rs.index_of(a), ib = rs.index_of(b);
            if (ia == -1 || ib == -1) throw Error(Errc::ParseError, "cache key is not a root");
            table[(std::size_t)ia * nr + ib] = val.get<long long>();
            ++count;
          }
          if (count > 0) return std::make_shared<ChevalleyConstants>(rs, std::move(table));
        }
      } catch (...) {
        // fall through to recompute
      }
    }
  }
  auto fresh = std::make_shared<ChevalleyConstants>(rs);
  if (cacheable) {
    std::error_code ec;
    std::filesystem::create_directories(file.parent_path(), ec);
    nlohmann::json constants = nlohmann::json::object();
    int nr = rs.num_roots();
    for (int a = 0; a < nr; ++a)
      for (int b = 0; b < nr; ++b)
        if (fresh->n(a, b) != 0)
          constants[root_key(rs, a) + "|" + root_key(rs, b)] = fresh->n(a, b);
    nlohmann::json j{{"convention", ChevalleyConstants::kConventionVersion},
                     {"type", std::string(1, type_letter(rs.type()))},
                     {"rank", rs.rank()},
                     {"constants", constants}};
    std::ofstream out(file);
    if (out) out << j.dump() << "\n";
  }
  return fresh;
}

}  // namespace gradus
