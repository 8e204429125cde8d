#pragma once

#include <string>
#include <variant>
#include <vector>

#include "glat/group.hpp"

namespace glat {

// Transitive permutation group, generators as 1-indexed image lists.
struct PermGroupSpec {
  std::string name;
  int degree = 0;
  std::vector<std::vector<int>> generators;
};

// Chevalley module J_{G/H} of the norm-one torus: the rank d-1 matrix action
// of the transitive group on Z^d / Z(1,...,1).
MatrixGroup norm1_torus_j(const PermGroupSpec& spec);

bool is_transitive(const PermGroupSpec& spec);

using CatalogEntry = std::variant<MatrixGroup, PermGroupSpec>;

std::vector<std::string> catalog_keys();
const CatalogEntry& catalog_get(const std::string& key);

// Resolve a key to a matrix group; permutation specs go through norm1_torus_j.
MatrixGroup catalog_group(const std::string& key);

}  // namespace glat
