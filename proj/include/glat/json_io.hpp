#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <variant>

#include "glat/catalog.hpp"
#include "glat/matrix.hpp"

namespace glat {

using json = nlohmann::json;

json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j, const std::string& field);

// glattice-group.v1 / perm-group.v1 files
std::variant<MatrixGroup, PermGroupSpec> group_from_json(const json& j);
json group_to_json(const MatrixGroup& g);
json perm_spec_to_json(const PermGroupSpec& s);

// canonical serialization digest (fnv1a-64 over the compact dump)
std::string digest(const json& j);

std::variant<MatrixGroup, PermGroupSpec> read_group_file(const std::string& path);
IntMatrix read_matrix_file(const std::string& path);

}  // namespace glat
