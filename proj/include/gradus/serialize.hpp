#pragma once

// JSON interchange: scalars as strings ("-3/4", "4 mod 5"), field specs as
// {"kind":"Q"} / {"kind":"GF","p":5}, and the document formats for root
// systems, bracket tables, structurable algebras, classification tables and
// verification reports.

#include <json.hpp>

#include "gradus/hat.hpp"
#include "gradus/nilpotent.hpp"
#include "gradus/structurable.hpp"

namespace gradus {

nlohmann::json field_to_json(const FieldSpec& fs);
FieldSpec field_from_json(const nlohmann::json& j);

nlohmann::json vec_to_json(const Vec& v);
Vec vec_from_json(const FieldSpec& fs, const nlohmann::json& j);

nlohmann::json rootsystem_to_json(const RootSystem& rs);

nlohmann::json lie_to_json(const LieAlgebra& L);
LiePtr lie_from_json(const nlohmann::json& j);

nlohmann::json kappa_to_json(const KappaAlgebra& K);
nlohmann::json hat_to_json(const HatAlgebra& H, const std::string& parent_name,
                           const std::vector<int>& J);

nlohmann::json structurable_to_json(const StructurableAlgebra& A);
StructurablePtr structurable_from_json(const nlohmann::json& j,
                                       std::optional<FieldSpec> field_override = std::nullopt);

nlohmann::json table_to_json(const std::vector<TableEntry>& entries);
std::vector<TableEntry> table_from_json(const nlohmann::json& j);

nlohmann::json cross_report_to_json(const CrossReport& rep);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace gradus
