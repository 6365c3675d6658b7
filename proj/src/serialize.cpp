#include "gradus/serialize.hpp"

#include <fstream>

namespace gradus {

using nlohmann::json;

json field_to_json(const FieldSpec& fs) {
  if (fs.is_rationals()) return json{{"kind", "Q"}};
  return json{{"kind", "GF"}, {"p", fs.p}};
}

FieldSpec field_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "Q") return FieldSpec::rationals();
  if (kind == "GF") return FieldSpec::gf(j.at("p").get<std::uint64_t>());
  throw Error(Errc::ParseError, "unknown field kind '" + kind + "'");
}

json vec_to_json(const Vec& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(c.str());
  return a;
}

Vec vec_from_json(const FieldSpec& fs, const json& j) {
  Vec v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(Scalar::parse(fs, e.get<std::string>()));
  return v;
}

json rootsystem_to_json(const RootSystem& rs) {
  json roots = json::array();
  for (const auto& r : rs.roots()) roots.push_back(r);
  return json{{"type", std::string(1, type_letter(rs.type()))},
              {"rank", rs.rank()},
              {"roots", roots}};
}

json lie_to_json(const LieAlgebra& L) {
  json brackets = json::array();
  for (int i = 0; i < L.dim(); ++i)
    for (int j = i + 1; j < L.dim(); ++j) {
      const SparseVec& sv = L.bracket_basis(i, j);
      if (sv.empty()) continue;
      json out = json::array();
      for (const auto& [k, c] : sv) out.push_back(json::array({std::to_string(k), c.str()}));
      brackets.push_back(json{{"i", i}, {"j", j}, {"out", out}});
    }
  return json{{"field", field_to_json(L.field())},
              {"dim", L.dim()},
              {"labels", L.labels()},
              {"brackets", brackets}};
}

LiePtr lie_from_json(const json& j) {
  try {
    FieldSpec fs = field_from_json(j.at("field"));
    int dim = j.at("dim").get<int>();
    std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
    if ((int)labels.size() != dim) throw Error(Errc::ParseError, "dim/labels mismatch");
    LieAlgebraBuilder b(fs, labels);
    for (const auto& entry : j.at("brackets")) {
      int i = entry.at("i").get<int>();
      int jj = entry.at("j").get<int>();
      SparseVec sv;
      for (const auto& pair : entry.at("out")) {
        int k = std::stoi(pair.at(0).get<std::string>());
        sv.emplace_back(k, Scalar::parse(fs, pair.at(1).get<std::string>()));
      }
      b.set(i, jj, sv);
    }
    return b.build(false);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("bad bracket-table document: ") + e.what());
  }
}

json kappa_to_json(const KappaAlgebra& K) {
  json j = lie_to_json(*K.algebra());
  j["block_dims"] = K.block_dims();
  j["degrees"] = K.grading().degrees();
  j["blocks"] = json{{"s-", K.sminus_offset()},
                     {"a-", K.aminus_offset()},
                     {"instrl", K.instrl_offset()},
                     {"a+", K.aplus_offset()},
                     {"s+", K.splus_offset()}};
  return j;
}

json hat_to_json(const HatAlgebra& H, const std::string& parent_name,
                 const std::vector<int>& J) {
  json j = lie_to_json(*H.algebra());
  j["degrees"] = H.grading().degrees();
  j["provenance"] = json{{"parent", parent_name}, {"J", J}, {"construction", "hat-extension"}};
  return j;
}

json structurable_to_json(const StructurableAlgebra& A) {
  int d = A.dim();
  json mult = json::array();
  auto basis = [&](int i) {
    Vec e = zero_vec(A.field(), d);
    e[i] = Scalar::one(A.field());
    return e;
  };
  for (int i = 0; i < d; ++i) {
    json row = json::array();
    for (int j = 0; j < d; ++j) row.push_back(vec_to_json(A.mul(basis(i), basis(j))));
    mult.push_back(row);
  }
  json inv = json::array();
  for (int i = 0; i < d; ++i) {
    json row = json::array();
    for (int j = 0; j < d; ++j) row.push_back(A.involution().at(i, j).str());
    inv.push_back(row);
  }
  return json{{"field", field_to_json(A.field())},
              {"dim", d},
              {"unit", vec_to_json(A.unit())},
              {"mult", mult},
              {"involution", inv}};
}

StructurablePtr structurable_from_json(const json& j, std::optional<FieldSpec> field_override) {
  try {
    FieldSpec fs = field_override ? *field_override : field_from_json(j.at("field"));
    int d = j.at("dim").get<int>();
    std::vector<std::vector<Vec>> mult;
    for (const auto& row : j.at("mult")) {
      std::vector<Vec> r;
      for (const auto& cell : row) {
        Vec v = vec_from_json(fs, cell);
        if ((int)v.size() != d) throw Error(Errc::ParseError, "mult cell has wrong length");
        r.push_back(std::move(v));
      }
      mult.push_back(std::move(r));
    }
    Matrix inv(fs, d, d);
    int i = 0;
    for (const auto& row : j.at("involution")) {
      int jj = 0;
      for (const auto& cell : row) inv.at(i, jj++) = Scalar::parse(fs, cell.get<std::string>());
      ++i;
    }
    Vec unit = vec_from_json(fs, j.at("unit"));
    return std::make_shared<StructurableAlgebra>(fs, std::move(mult), std::move(inv),
                                                 std::move(unit));
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("bad structurable-algebra document: ") + e.what());
  }
}

json table_to_json(const std::vector<TableEntry>& entries) {
  json a = json::array();
  for (const auto& e : entries)
    a.push_back(json{{"type", std::string(1, type_letter(e.type))},
                     {"rank", e.rank},
                     {"J", e.J},
                     {"verdict", verdict_str(e.verdict)},
                     {"provenance", e.provenance}});
  return a;
}

std::vector<TableEntry> table_from_json(const json& j) {
  std::vector<TableEntry> out;
  try {
    for (const auto& e : j) {
      TableEntry t;
      t.type = type_from_letter(e.at("type").get<std::string>().at(0));
      t.rank = e.at("rank").get<int>();
      t.J = e.at("J").get<std::vector<int>>();
      std::string v = e.at("verdict").get<std::string>();
      if (v == "Structurable")
        t.verdict = Verdict::Structurable;
      else if (v == "NotStructurable")
        t.verdict = Verdict::NotStructurable;
      else
        throw Error(Errc::ParseError, "unknown verdict '" + v + "'");
      if (e.contains("provenance")) t.provenance = e.at("provenance").get<std::string>();
      out.push_back(std::move(t));
    }
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("bad table document: ") + e.what());
  }
  return out;
}

json cross_report_to_json(const CrossReport& rep) {
  json cells = json::array();
  for (const auto& c : rep.cells) {
    json cell{{"J", c.J},           {"field", c.field},
              {"expected", verdict_str(c.expected)}, {"outcome", c.outcome},
              {"consistent", c.consistent},          {"informational", c.informational}};
    if (!c.u.empty()) {
      cell["u"] = vec_to_json(c.u);
      cell["v"] = vec_to_json(c.v);
    }
    cells.push_back(std::move(cell));
  }
  json j{{"type", std::string(1, type_letter(rep.type))},
         {"rank", rep.rank},
         {"ok", rep.ok},
         {"seed", rep.seed},
         {"attempts", rep.attempts},
         {"cells", cells}};
  if (!rep.first_failure.empty()) j["first_failure"] = rep.first_failure;
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  try {
    json j;
    in >> j;
    return j;
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, "cannot parse " + path + ": " + e.what());
  }
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::ParseError, "cannot write " + path);
  out << j.dump(1) << "\n";
}

}  // namespace gradus
