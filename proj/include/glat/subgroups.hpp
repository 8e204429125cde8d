#pragma once

#include <cstdint>
#include <vector>

#include "glat/group.hpp"

namespace glat {

// One conjugacy class of subgroups: the canonical representative (least sorted
// element list among the conjugates) plus bookkeeping against the parent.
struct SubgroupClass {
  std::vector<std::uint32_t> rep_indices;  // sorted, parent element indices
  std::vector<std::uint32_t> gen_indices;  // generating subset of rep_indices
  std::uint64_t subgroup_order = 0;
  std::uint64_t class_size = 0;            // number of conjugate subgroups
  MatrixGroup group;                       // materialized representative
};

// Canonically ordered conjugacy-class representatives of all subgroups:
// ascending (order, trace multiset, lexicographically least element list).
struct SubgroupClassList {
  const MatrixGroup* parent = nullptr;
  std::vector<SubgroupClass> classes;

  std::vector<const MatrixGroup*> groups() const {
    std::vector<const MatrixGroup*> v;
    for (const auto& c : classes) v.push_back(&c.group);
    return v;
  }
};

// Complete enumeration by extending class representatives with cyclic
// subgroups (join-with-element), deduplicating conjugates by element-set
// hashing. Complete for non-solvable groups as well.
SubgroupClassList conjugacy_classes_subgroups(const MatrixGroup& g);

MatrixGroup derived_subgroup(const MatrixGroup& g);
MatrixGroup centre(const MatrixGroup& g);
MatrixGroup sylow_subgroup(const MatrixGroup& g, const Int& p);

// Materialize a subgroup given by element indices of the parent.
MatrixGroup subgroup_from_indices(const MatrixGroup& parent,
                                  const std::vector<std::uint32_t>& idx);

// Greedy deterministic generating subset of a closed index set.
std::vector<std::uint32_t> greedy_generators(const CayleyTable& t,
                                             const std::vector<std::uint32_t>& elems);

}  // namespace glat
