#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "glat/common.hpp"
#include "glat/linalg.hpp"
#include "glat/matrix.hpp"

namespace glat {

// Index-level multiplication table of a finite group, built once per group.
// All subgroup machinery works on element indices against this table.
struct CayleyTable {
  std::uint32_t n = 0;
  std::uint32_t id = 0;                 // index of the identity
  std::vector<std::uint32_t> mult;      // n*n, mult[i*n+j] = index of e_i * e_j
  std::vector<std::uint32_t> inv;
  std::vector<std::uint32_t> elem_order;

  std::uint32_t mul(std::uint32_t i, std::uint32_t j) const {
    return mult[std::size_t(i) * n + j];
  }
  std::uint32_t conj(std::uint32_t x, std::uint32_t g) const {
    return mul(mul(inv[g], x), g);  // g^-1 x g
  }
};

// Finite subgroup of GL(n,Z) given by generators; doubles as the G-lattice on
// Z^n with the tautological right action v -> v*g. Element list and Cayley
// table are cached on first use.
class MatrixGroup {
 public:
  MatrixGroup() = default;
  MatrixGroup(int rank, std::vector<IntMatrix> gens, std::string name = "");

  int rank() const { return rank_; }
  const std::vector<IntMatrix>& gens() const { return gens_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  // Sorted element list (row-major lexicographic), computed by breadth-first
  // product closure. Throws BudgetExceeded past budget().max_elements.
  const std::vector<IntMatrix>& elements() const;
  std::uint64_t order() const { return elements().size(); }
  const CayleyTable& table() const;

  // index of a matrix in elements(), or -1
  long index_of(const IntMatrix& m) const;
  bool contains(const IntMatrix& m) const { return index_of(m) >= 0; }
  bool same_elements(const MatrixGroup& o) const;
  bool is_subgroup_of(const MatrixGroup& g) const;

  bool is_trivial() const { return order() == 1; }

  std::vector<Int> trace_multiset() const;  // sorted traces of all elements

 private:
  int rank_ = 0;
  std::vector<IntMatrix> gens_;
  std::string name_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
  Cache& cache() const;
};

// Generators transposed; as a subgroup of GL(n,Z) this is the group acting on
// the dual lattice.
MatrixGroup transposed_group(const MatrixGroup& g);

// Generators replaced by inverse transposes: the dual G-lattice action with
// the generator labelling preserved.
MatrixGroup dual_lattice(const MatrixGroup& g);

// Block-diagonal sum: all groups must list the same number of generators;
// generator k of the result is diag over the inputs' generator k.
MatrixGroup direct_sum_group(const std::vector<MatrixGroup>& l);

// Direct product: one block generator per input generator, identity elsewhere.
MatrixGroup direct_product_group(const std::vector<MatrixGroup>& l);

// Sub-action on an invariant coordinate window (0-based indices).
MatrixGroup partial_group(const MatrixGroup& g, const std::vector<int>& window);

// Conjugacy classes of elements; representatives sorted lexicographically.
std::vector<std::uint32_t> element_conjugacy_reps(const MatrixGroup& g);

// Coset orderings: the canonical one puts the subgroup itself first and the
// remaining cosets ascending by least element; least_element sorts all cosets
// by least element. Either is deterministic.
enum class CosetOrder { subgroup_first, least_element };

// Permutation matrices of the right-coset action of g's generators on the
// cosets of h. One matrix per generator.
std::vector<IntMatrix> coset_representation(const MatrixGroup& g, const MatrixGroup& h,
                                            CosetOrder order = CosetOrder::subgroup_first);

// Same, but cosets of a subgroup given as sorted element indices in g.
std::vector<IntMatrix> coset_representation_idx(const MatrixGroup& g,
                                                const std::vector<std::uint32_t>& h,
                                                CosetOrder order = CosetOrder::subgroup_first);

}  // namespace glat
