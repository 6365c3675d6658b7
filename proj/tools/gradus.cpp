// gradus - exact computations with graded Lie algebras of Chevalley type:
// root systems, J-gradings, the 5-graded Lie algebra of a structurable
// algebra, and the classification-table verifier.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "gradus/serialize.hpp"

namespace {

constexpr const char* kToolVersion = "gradus 0.1.0";

using namespace gradus;
using nlohmann::json;

FieldSpec parse_field(std::string s) {
  for (auto& c : s) c = (char)std::toupper((unsigned char)c);
  if (s == "Q") return FieldSpec::rationals();
  if (s.rfind("GF", 0) == 0) {
    std::string num = s.substr(2);
    if (!num.empty() && num.front() == '(') num = num.substr(1);
    if (!num.empty() && num.back() == ')') num.pop_back();
    try {
      return FieldSpec::gf(std::stoull(num));
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
  }
  throw Error(Errc::ParseError, "cannot parse field '" + s + "' (expected Q or GF<p>)");
}

std::vector<FieldSpec> parse_fields(const std::string& csv) {
  std::vector<FieldSpec> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t next = csv.find(',', pos);
    if (next == std::string::npos) next = csv.size();
    std::string tok = csv.substr(pos, next - pos);
    if (!tok.empty()) out.push_back(parse_field(tok));
    pos = next + 1;
  }
  if (out.empty()) throw Error(Errc::ParseError, "no fields given");
  return out;
}

std::vector<int> parse_J(const std::string& csv) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t next = csv.find(',', pos);
    if (next == std::string::npos) next = csv.size();
    std::string tok = csv.substr(pos, next - pos);
    if (!tok.empty()) {
      try {
        out.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw Error(Errc::ParseError, "bad J index '" + tok + "'");
      }
    }
    pos = next + 1;
  }
  if (out.empty()) throw Error(Errc::ParseError, "empty J");
  return out;
}

SimpleType parse_type(const std::string& s) {
  if (s.size() != 1) throw Error(Errc::InvalidType, "type must be one letter A-G");
  return type_from_letter((char)std::toupper((unsigned char)s[0]));
}

std::string data_dir() {
  if (const char* env = std::getenv("GRADUS_DATA_DIR")) return env;
  return "data";
}

struct Output {
  std::string out_path;
  std::string format = "text";

  void emit(const json& report, const std::string& text) const {
    if (!out_path.empty()) save_json_file(out_path, report);
    if (format == "json")
      std::cout << report.dump(1) << "\n";
    else
      std::cout << text;
  }
};

json envelope(const std::string& command, std::uint64_t seed,
              const std::vector<FieldSpec>& fields, std::int64_t ms) {
  json f = json::array();
  for (const auto& fs : fields) f.push_back(field_to_json(fs));
  return json{{"tool", kToolVersion}, {"command", command}, {"seed", seed},
              {"fields", f},          {"timing_ms", ms}};
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 t0)
        .count();
  }
};

ChevalleyModel build_model(SimpleType t, int rank, const FieldSpec& fs) {
  auto rs = std::make_shared<RootSystem>(t, rank);
  auto cc = constants_with_cache(*rs, default_cache_dir());
  return chevalley_algebra(rs, cc, fs);
}

// component dimensions over the fixed degree range -2..2
std::vector<int> dims5(const Grading& g) {
  std::vector<int> d(5, 0);
  for (int deg : g.degrees()) d[deg + 2]++;
  return d;
}

int cmd_roots(SimpleType t, int rank, const Output& out) {
  Timer timer;
  RootSystem rs(t, rank);
  json rep = envelope("roots", 0, {}, timer.ms());
  rep["root_system"] = rootsystem_to_json(rs);
  rep["num_roots"] = rs.num_roots();
  rep["num_positive"] = rs.num_positive();
  std::ostringstream text;
  text << rs.name() << ": " << rs.num_roots() << " roots (" << rs.num_positive()
       << " positive)\n";
  for (int i = 0; i < rs.num_positive(); ++i) {
    text << "  +[";
    for (int k = 0; k < rs.rank(); ++k) text << (k ? "," : "") << rs.roots()[i][k];
    text << "]\n";
  }
  rep["timing_ms"] = timer.ms();
  out.emit(rep, text.str());
  return 0;
}

int cmd_grade(SimpleType t, int rank, const std::vector<int>& Jidx, const FieldSpec& fs,
              const Output& out) {
  Timer timer;
  ChevalleyModel M = build_model(t, rank, fs);
  JSubset J(*M.roots, Jidx);
  Grading g = grading_from_J(M, J);  // throws TooWideGrading on invalid input
  GradingDerivation zd = grading_derivation(M, J);
  json rep = envelope("grade", 0, {fs}, 0);
  rep["type"] = std::string(1, type_letter(t));
  rep["rank"] = rank;
  rep["J"] = Jidx;
  rep["width"] = width_str(grading_width(*M.roots, J));
  rep["block_dims"] = dims5(g);
  rep["zeta"] = zd.in_algebra ? "in-algebra" : "outer";
  if (zd.in_algebra) rep["zeta_element"] = vec_to_json(zd.element);
  std::ostringstream text;
  text << M.roots->name() << " J=" << J.str() << " dims";
  for (int d : dims5(g)) text << " " << d;
  text << "\nzeta: " << (zd.in_algebra ? "in-algebra" : "outer") << "\n";
  rep["timing_ms"] = timer.ms();
  out.emit(rep, text.str());
  return 0;
}

int cmd_kappa(const std::string& file, std::optional<FieldSpec> field, const Output& out) {
  Timer timer;
  json doc = load_json_file(file);
  StructurablePtr A = structurable_from_json(doc, field);
  auto val = A->validate();
  if (!val.ok) throw Error(val.code, val.detail);
  KappaAlgebra K(A);  // verifies Jacobi exhaustively
  json rep = envelope("kappa", 0, {A->field()}, 0);
  rep["input"] = file;
  rep["skew_dim"] = A->skew_dim();
  rep["block_dims"] = K.block_dims();
  rep["jacobi"] = "pass";
  rep["unit_pair_acts_as_grading_derivation"] = K.unit_pair_is_grading_derivation();
  rep["algebra"] = kappa_to_json(K);
  std::ostringstream text;
  text << "blocks";
  for (int d : K.block_dims()) text << " " << d;
  text << "\njacobi: pass\n[1+,1-] grading derivation: "
       << (K.unit_pair_is_grading_derivation() ? "yes" : "no") << "\n";
  rep["timing_ms"] = timer.ms();
  out.emit(rep, text.str());
  return K.unit_pair_is_grading_derivation() ? 0 : 1;
}

int cmd_verify_table(SimpleType t, int rank, const std::vector<FieldSpec>& fields,
                     std::uint64_t seed, std::size_t attempts, const std::string& golden_path,
                     const Output& out) {
  Timer timer;
  std::vector<TableEntry> mine = generate_table(t, rank);
  std::vector<TableEntry> golden;
  for (const auto& e : table_from_json(load_json_file(golden_path)))
    if (e.type == t && e.rank == rank) golden.push_back(e);
  std::ostringstream text;
  bool table_ok = mine.size() == golden.size();
  std::size_t upto = std::min(mine.size(), golden.size());
  for (std::size_t i = 0; i < upto; ++i) {
    bool same = mine[i].key() == golden[i].key() && mine[i].verdict == golden[i].verdict;
    if (!same) {
      table_ok = false;
      text << "DIFF " << mine[i].key() << " " << verdict_str(mine[i].verdict) << " vs golden "
           << golden[i].key() << " " << verdict_str(golden[i].verdict) << "\n";
    }
  }
  CrossReport cross = cross_validate(t, rank, fields, attempts, seed, default_cache_dir());
  json rep = envelope("verify-table", seed, fields, 0);
  rep["type"] = std::string(1, type_letter(t));
  rep["rank"] = rank;
  rep["table_matches_golden"] = table_ok;
  rep["generated"] = table_to_json(mine);
  rep["cross_validation"] = cross_report_to_json(cross);
  int structurable = 0;
  for (const auto& e : mine)
    if (e.verdict == Verdict::Structurable) ++structurable;
  text << std::string(1, type_letter(t)) << rank << ": " << mine.size() << " gradings, "
       << structurable << " structurable; golden match: " << (table_ok ? "yes" : "NO") << "\n";
  for (const auto& c : cross.cells) {
    text << "  {";
    for (std::size_t k = 0; k < c.J.size(); ++k) text << (k ? "," : "") << c.J[k];
    text << "} over " << c.field << ": " << c.outcome
         << (c.consistent ? "" : "  << INCONSISTENT")
         << (c.informational ? "  (informational)" : "") << "\n";
  }
  if (!cross.ok) text << "cross-validation FAILED: " << cross.first_failure << "\n";
  rep["timing_ms"] = timer.ms();
  out.emit(rep, text.str());
  return (table_ok && cross.ok) ? 0 : 1;
}

int cmd_algebraic(SimpleType t, int rank, const std::vector<int>& Jidx, const FieldSpec& fs,
                  std::size_t samples, bool exhaustive, std::uint64_t seed, const Output& out) {
  Timer timer;
  ChevalleyModel M = build_model(t, rank, fs);
  JSubset J(*M.roots, Jidx);
  Grading g = grading_from_J(M, J);
  json rep = envelope("algebraic", seed, {fs}, 0);
  rep["type"] = std::string(1, type_letter(t));
  rep["rank"] = rank;
  rep["J"] = Jidx;
  std::ostringstream text;
  if (!exhaustive && samples == 0) {
    rep["result"] = "pass";
    rep["tested"] = 0;
    rep["warning"] = "zero samples requested; nothing was tested";
    text << "pass (vacuous: zero samples; nothing was tested)\n";
    rep["timing_ms"] = timer.ms();
    out.emit(rep, text.str());
    return 0;
  }
  AlgebraicityReport r = is_algebraic(g, exhaustive, samples, seed, M.generator_indices());
  rep["result"] = r.ok ? "pass" : "fail";
  rep["tested"] = r.tested;
  rep["exhaustive"] = r.exhaustive;
  if (!r.ok) rep["counterexample"] = r.counterexample;
  text << (r.ok ? "pass" : "FAIL") << " (" << r.tested << " maps"
       << (r.exhaustive ? ", exhaustive" : "") << ")\n";
  if (!r.ok) text << "counterexample: " << r.counterexample << "\n";
  rep["timing_ms"] = timer.ms();
  out.emit(rep, text.str());
  return r.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(kToolVersion) +
               " - graded Lie algebras of Chevalley type, exactly"};
  app.require_subcommand(1);

  std::string type_s, field_s = "Q", fields_s = "Q", J_s, out_path, format = "text";
  std::string input_file, golden_path = data_dir() + "/golden_table.json";
  int rank = 0;
  std::uint64_t seed = 1;
  std::size_t attempts = 8, samples = 200;
  bool exhaustive = false;

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "write the JSON report to this path");
    cmd->add_option("--format", format, "stdout format: text | json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* roots = app.add_subcommand("roots", "enumerate a root system");
  roots->add_option("type", type_s, "A..G")->required();
  roots->add_option("rank", rank, "rank")->required();
  add_output(roots);

  auto* grade = app.add_subcommand("grade", "grading summary for a J-subset");
  grade->add_option("type", type_s)->required();
  grade->add_option("rank", rank)->required();
  grade->add_option("--J", J_s, "comma list of simple-root indices")->required();
  grade->add_option("--field", field_s, "Q or GF<p>");
  add_output(grade);

  auto* kappa = app.add_subcommand("kappa", "build the 5-graded Lie algebra of a structurable algebra");
  kappa->add_option("file", input_file, "structurable algebra JSON")->required();
  std::string kappa_field;
  kappa->add_option("--field", kappa_field, "override the document's field");
  add_output(kappa);

  auto* verify = app.add_subcommand("verify-table", "check the classification table two ways");
  verify->add_option("type", type_s)->required();
  verify->add_option("rank", rank)->required();
  verify->add_option("--fields", fields_s, "comma list, e.g. Q,GF5,GF7");
  verify->add_option("--field", field_s, "single field (alias for --fields)")->excludes("--fields");
  verify->add_option("--seed", seed);
  verify->add_option("--attempts", attempts);
  verify->add_flag("--exhaustive", exhaustive,
                   "note: pair scans auto-enable whenever |field|^(d+ + d-) <= 10^6");
  verify->add_option("--golden", golden_path, "golden table path");
  add_output(verify);

  auto* algebraic = app.add_subcommand("algebraic", "truncated-exponential automorphism check");
  algebraic->add_option("type", type_s)->required();
  algebraic->add_option("rank", rank)->required();
  algebraic->add_option("--J", J_s)->required();
  algebraic->add_option("--field", field_s);
  algebraic->add_option("-n,--samples", samples);
  algebraic->add_flag("--exhaustive", exhaustive);
  algebraic->add_option("--seed", seed);
  add_output(algebraic);

  CLI11_PARSE(app, argc, argv);

  try {
    Output out{out_path, format};
    if (roots->parsed()) return cmd_roots(parse_type(type_s), rank, out);
    if (grade->parsed())
      return cmd_grade(parse_type(type_s), rank, parse_J(J_s), parse_field(field_s), out);
    if (kappa->parsed()) {
      std::optional<FieldSpec> f;
      if (!kappa_field.empty()) f = parse_field(kappa_field);
      return cmd_kappa(input_file, f, out);
    }
    if (verify->parsed()) {
      auto fields = verify->count("--field") ? std::vector<FieldSpec>{parse_field(field_s)}
                                             : parse_fields(fields_s);
      return cmd_verify_table(parse_type(type_s), rank, fields, seed, attempts, golden_path, out);
    }
    if (algebraic->parsed())
      return cmd_algebraic(parse_type(type_s), rank, parse_J(J_s), parse_field(field_s), samples,
                           exhaustive, seed, out);
  } catch (const gradus::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
