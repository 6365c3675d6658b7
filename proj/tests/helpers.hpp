#pragma once

#include <doctest.h>

#include "gradus/chevalley.hpp"
#include "gradus/serialize.hpp"

namespace gradus::testing {

inline ChevalleyModel model(SimpleType t, int rank, const FieldSpec& fs) {
  auto rs = std::make_shared<RootSystem>(t, rank);
  auto cc = std::make_shared<ChevalleyConstants>(*rs);
  return chevalley_algebra(rs, cc, fs);
}

inline std::string data_path(const std::string& rel) {
  return std::string(GRADUS_DATA_DIR) + "/" + rel;
}

inline StructurablePtr bundled(const std::string& name, const FieldSpec& fs) {
  return structurable_from_json(load_json_file(data_path("algebras/" + name + ".json")), fs);
}

inline Vec unit_vec(const FieldSpec& fs, std::size_t n, std::size_t k) {
  Vec v = zero_vec(fs, n);
  v[k] = Scalar::one(fs);
  return v;
}

}  // namespace gradus::testing
