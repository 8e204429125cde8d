#pragma once

#include <optional>
#include <vector>

#include "glat/group.hpp"
#include "glat/subgroups.hpp"

namespace glat {

// Elementary divisors (each >= 2, each dividing the next) of a finite abelian
// group; the empty list is the trivial group.
using TateGroup = std::vector<Int>;

// A G-lattice that is not the tautological one: matrices B(gen_i) aligned with
// g.gens(), extended to all elements through the group structure.
struct ModuleAction {
  int rank = 0;
  std::vector<IntMatrix> gen_mats;

  static ModuleAction tautological(const MatrixGroup& g) {
    return ModuleAction{g.rank(), g.gens()};
  }
};

// Matrices of every group element under a module action, indexed like
// g.elements().
std::vector<IntMatrix> element_module_matrices(const MatrixGroup& g,
                                               const ModuleAction& m);

TateGroup h_minus1(const MatrixGroup& g);
TateGroup h1(const MatrixGroup& g);
TateGroup h0(const MatrixGroup& g);

TateGroup h_minus1(const MatrixGroup& g, const ModuleAction& m);
TateGroup h1(const MatrixGroup& g, const ModuleAction& m);
TateGroup h0(const MatrixGroup& g, const ModuleAction& m);

// General degree via dimension shifting through 0 -> M -> Z[G]⊗M -> Q -> 0
// (degree up) and 0 -> K -> Z[G]⊗M -> M -> 0 (degree down).
TateGroup tate(const MatrixGroup& g, int n,
               const std::optional<ModuleAction>& m = std::nullopt);

ModuleAction up_shift(const MatrixGroup& g, const ModuleAction& m);
ModuleAction down_shift(const MatrixGroup& g, const ModuleAction& m);

bool is_flabby(const MatrixGroup& g);
bool is_coflabby(const MatrixGroup& g);
bool is_flabby(const SubgroupClassList& classes);
bool is_coflabby(const SubgroupClassList& classes);

}  // namespace glat
