#include "gradus/nilpotent.hpp"

#include <algorithm>
#include <map>

namespace gradus {

WeightedDiagram diagram_from_J(const RootSystem& rs, const JSubset& J) {
  WeightedDiagram d;
  d.type = rs.type();
  d.rank = rs.rank();
  d.weights.assign(rs.rank(), 0);
  for (int i : J.members) d.weights[i - 1] = 2;
  return d;
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw Error(Errc::InvalidType, "partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw Error(Errc::InvalidType, "partition parts must be weakly decreasing");
  }
}

int Partition::total() const {
  int s = 0;
  for (int d : parts) s += d;
  return s;
}

int Partition::multiplicity(int d) const {
  return (int)std::count(parts.begin(), parts.end(), d);
}

namespace {

void check_multiplicities(SimpleType t, const Partition& pi) {
  auto even_mult = [&](auto pred) {
    std::map<int, int> mult;
    for (int d : pi.parts) mult[d]++;
    for (auto [d, m] : mult)
      if (pred(d) && m % 2 != 0)
        throw Error(Errc::BadMultiplicity,
                    "part " + std::to_string(d) + " occurs " + std::to_string(m) + " times");
  };
  switch (t) {
    case SimpleType::A: return;
    case SimpleType::B:
    case SimpleType::D: even_mult([](int d) { return d % 2 == 0; }); return;
    case SimpleType::C: even_mult([](int d) { return d % 2 == 1; }); return;
    default: throw Error(Errc::InvalidType, "partitions classify classical types only");
  }
}

std::vector<int> h_values(const Partition& pi) {
  std::vector<int> h;
  for (int d : pi.parts)
    for (int v = d - 1; v >= 1 - d; v -= 2) h.push_back(v);
  std::sort(h.rbegin(), h.rend());
  return h;
}

WeightedDiagram diagram_from_h(SimpleType t, int rank, const std::vector<int>& h) {
  WeightedDiagram d;
  d.type = t;
  d.rank = rank;
  d.weights.assign(rank, 0);
  switch (t) {
    case SimpleType::A:
      for (int i = 0; i < rank; ++i) d.weights[i] = h[i] - h[i + 1];
      break;
    case SimpleType::B:
      for (int i = 0; i + 1 < rank; ++i) d.weights[i] = h[i] - h[i + 1];
      d.weights[rank - 1] = h[rank - 1];
      break;
    case SimpleType::C:
      for (int i = 0; i + 1 < rank; ++i) d.weights[i] = h[i] - h[i + 1];
      d.weights[rank - 1] = 2 * h[rank - 1];
      break;
    case SimpleType::D:
      for (int i = 0; i + 2 < rank; ++i) d.weights[i] = h[i] - h[i + 1];
      d.weights[rank - 2] = h[rank - 2] - h[rank - 1];
      d.weights[rank - 1] = h[rank - 2] + h[rank - 1];
      break;
    default: throw Error(Errc::InvalidType, "h-sequences exist for classical types only");
  }
  return d;
}

int partition_size(SimpleType t, int n) {
  switch (t) {
    case SimpleType::A: return n;          // partitions of n = rank+1
    case SimpleType::B: return 2 * n + 1;  // so(2n+1)
    case SimpleType::C:
    case SimpleType::D: return 2 * n;  // sp(2n), so(2n)
    default: throw Error(Errc::InvalidType, "partitions classify classical types only");
  }
}

}  // namespace

HSequence h_sequence_from_partition(SimpleType t, int n, const Partition& pi) {
  if (pi.total() != partition_size(t, n))
    throw Error(Errc::InvalidType, "partition total " + std::to_string(pi.total()) +
                                       " does not fit " + std::string(1, type_letter(t)) +
                                       std::to_string(n));
  check_multiplicities(t, pi);
  HSequence out;
  out.h = h_values(pi);
  int rank = (t == SimpleType::A) ? n - 1 : n;
  if (t != SimpleType::A) out.h.resize(n);  // fold: keep the nonnegative half
  out.diagram = diagram_from_h(t, rank, t == SimpleType::A ? h_values(pi) : out.h);
  return out;
}

std::vector<WeightedDiagram> diagrams_from_partition(SimpleType t, int n, const Partition& pi) {
  HSequence hs = h_sequence_from_partition(t, n, pi);
  std::vector<WeightedDiagram> out{hs.diagram};
  if (t == SimpleType::D) {
    bool very_even = true;
    for (int d : pi.parts)
      if (d % 2 != 0) very_even = false;
    if (very_even) {
      WeightedDiagram tw = hs.diagram;
      std::swap(tw.weights[n - 2], tw.weights[n - 1]);
      if (!(tw == hs.diagram)) out.push_back(tw);
    }
  }
  return out;
}

const std::vector<std::pair<std::string, std::vector<std::vector<int>>>>&
exceptional_diagram_table() {
  // weight-2 node sets of the nilpotent diagrams reachable from gradings of
  // bound <= 2 (all other weights are 0)
  static const std::vector<std::pair<std::string, std::vector<std::vector<int>>>> table = {
      {"G2", {{2}}},
      {"F4", {{1}, {4}}},
      {"E6", {{2}, {1, 6}}},
      {"E7", {{1}, {2}, {6}, {7}}},
      {"E8", {{1}, {8}}},
  };
  return table;
}

bool is_nilpotent_diagram(const WeightedDiagram& d) {
  for (int w : d.weights)
    if (w != 0 && w != 2)
      throw Error(Errc::UnsupportedWeights, "only weights {0,2} are supported");
  SimpleType t = d.type;
  if (t == SimpleType::E || t == SimpleType::F || t == SimpleType::G) {
    std::string name = std::string(1, type_letter(t)) + std::to_string(d.rank);
    std::vector<int> two_nodes;
    for (int i = 0; i < d.rank; ++i)
      if (d.weights[i] == 2) two_nodes.push_back(i + 1);
    for (const auto& [nm, sets] : exceptional_diagram_table())
      if (nm == name)
        return std::find(sets.begin(), sets.end(), two_nodes) != sets.end();
    throw Error(Errc::InvalidType, "unknown exceptional type " + name);
  }
  int n = (t == SimpleType::A) ? d.rank + 1 : d.rank;
  int N = partition_size(t, n);
  // parts ∈ {1,2,3}: a part of size >= 4 would force a weight >= 3 somewhere
  for (int threes = 0; 3 * threes <= N; ++threes)
    for (int twos = 0; 3 * threes + 2 * twos <= N; ++twos) {
      int ones = N - 3 * threes - 2 * twos;
      std::vector<int> parts;
      parts.insert(parts.end(), threes, 3);
      parts.insert(parts.end(), twos, 2);
      parts.insert(parts.end(), ones, 1);
      if (parts.empty()) continue;
      Partition pi(parts);
      try {
        for (const auto& cand : diagrams_from_partition(t, n, pi))
          if (cand == d) return true;
      } catch (const Error& e) {
        if (e.code() != Errc::BadMultiplicity) throw;
      }
    }
  return false;
}

std::string verdict_str(Verdict v) {
  return v == Verdict::Structurable ? "Structurable" : "NotStructurable";
}

std::string TableEntry::key() const {
  std::string s = std::string(1, type_letter(type)) + std::to_string(rank) + ":{";
  for (std::size_t i = 0; i < J.size(); ++i) s += (i ? "," : "") + std::to_string(J[i]);
  return s + "}";
}

std::vector<TableEntry> generate_table(SimpleType t, int rank) {
  RootSystem rs(t, rank);
  bool exceptional = t == SimpleType::E || t == SimpleType::F || t == SimpleType::G;
  std::vector<std::vector<int>> candidates;
  for (int i = 1; i <= rank; ++i) candidates.push_back({i});
  for (int i = 1; i <= rank; ++i)
    for (int j = i + 1; j <= rank; ++j) candidates.push_back({i, j});
  std::vector<TableEntry> out;
  for (const auto& js : candidates) {
    JSubset J(rs, js);
    if (grading_width(rs, J) == GradingWidth::TooWide) continue;
    TableEntry e;
    e.type = t;
    e.rank = rank;
    e.J = js;
    e.verdict = is_nilpotent_diagram(diagram_from_J(rs, J)) ? Verdict::Structurable
                                                            : Verdict::NotStructurable;
    e.provenance = exceptional ? "reference-table" : "partition-oracle";
    out.push_back(std::move(e));
  }
  return out;
}

KappaVerdict is_kappa_grading(const ChevalleyModel& M, const JSubset& J, std::size_t attempts,
                              std::uint64_t seed) {
  KappaVerdict out;
  bool combinatorial = is_nilpotent_diagram(diagram_from_J(*M.roots, J));
  GradingDerivation zd = grading_derivation(M, J);
  if (!zd.in_algebra) {
    if (!combinatorial) {
      out.kind = KappaVerdict::Kind::No;
      out.reason = "diagram test rejects; structural search unavailable (outer derivation)";
    } else {
      out.reason = "grading derivation is outer over this field";
    }
    return out;
  }
  Grading g = grading_from_J(M, J);
  UnitPairResult up = find_unit_pair(g, zd, attempts, seed, M.center_basis());
  if (up.found) {
    out.kind = KappaVerdict::Kind::Yes;
    out.u = up.u;
    out.v = up.v;
    return out;
  }
  if (!combinatorial) {
    out.kind = KappaVerdict::Kind::No;
    out.reason = up.exhaustive ? "diagram test rejects; exhaustive pair scan found nothing"
                               : "diagram test rejects; sampled search found nothing";
    return out;
  }
  out.reason = "diagram test accepts but the sampled search found nothing; raise attempts";
  return out;
}

CrossReport cross_validate(SimpleType t, int rank, const std::vector<FieldSpec>& fields,
                           std::size_t attempts, std::uint64_t seed,
                           const std::string& cache_dir) {
  CrossReport rep;
  rep.type = t;
  rep.rank = rank;
  rep.seed = seed;
  rep.attempts = attempts;
  auto rs = std::make_shared<RootSystem>(t, rank);
  auto consts = constants_with_cache(*rs, cache_dir);
  std::vector<TableEntry> entries = generate_table(t, rank);
  bool all_ok = true;
  for (const FieldSpec& fs : fields) {
    ChevalleyModel M = chevalley_algebra(rs, consts, fs);
    for (const TableEntry& e : entries) {
      JSubset J(*rs, e.J);
      CrossCell cell;
      cell.J = e.J;
      cell.field = fs.str();
      cell.expected = e.verdict;
      cell.informational = (t == SimpleType::E && rank == 8 && fs.characteristic() == 5);
      GradingDerivation zd = grading_derivation(M, J);
      if (!zd.in_algebra) {
        cell.outcome = "zeta-outer-skipped";
        cell.consistent = true;
      } else {
        UnitPairResult up = find_unit_pair(grading_from_J(M, J), zd, attempts, seed, M.center_basis());
        if (up.found) {
          cell.outcome = "found";
          cell.u = up.u;
          cell.v = up.v;
          cell.consistent = e.verdict == Verdict::Structurable;
        } else {
          cell.outcome = up.exhaustive ? "not-found-exhaustive" : "not-found-sampled";
          cell.consistent = e.verdict == Verdict::NotStructurable;
        }
      }
      if (!cell.consistent && !cell.informational) {
        all_ok = false;
        if (rep.first_failure.empty())
          rep.first_failure = e.key() + " over " + cell.field + ": expected " +
                              verdict_str(e.verdict) + ", outcome " + cell.outcome;
      }
      rep.cells.push_back(std::move(cell));
    }
  }
  rep.ok = all_ok;
  return rep;
}

}  // namespace gradus
