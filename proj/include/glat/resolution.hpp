#pragma once

#include <optional>
#include <vector>

#include "glat/cohomology.hpp"
#include "glat/group.hpp"
#include "glat/subgroups.hpp"

namespace glat {

using Vec = std::vector<Int>;

// A finite subset of the dual lattice, closed under the dual group action and
// stored as a concatenation of full orbits.
struct ResolutionBase {
  std::vector<Vec> vectors;
  std::vector<int> orbit_id;  // per vector
  int num_orbits = 0;
};

// 0 -> M -> P -> F -> 0 with P permutation and F flabby.
struct FlabbyResolutionResult {
  IntMatrix injection;   // rank(M) x rank(P)
  IntMatrix surjection;  // rank(P) x rank(F)
  MatrixGroup action_p;
  MatrixGroup action_f;  // rank 0 when the resolution is P = M
};

// HNF basis of the fixed lattice { v : v*g = v for all generators }.
IntMatrix z0_lattice(const std::vector<IntMatrix>& gens, int rank);
IntMatrix z0_lattice(const MatrixGroup& g);

// Full orbit of a row vector under the (right) action of gd, sorted.
std::vector<Vec> vector_orbit(const MatrixGroup& gd, const Vec& v);

ResolutionBase find_coflabby_resolution_base(
    const MatrixGroup& gd, const std::vector<const MatrixGroup*>& classes);

bool check_coflabby_resolution_base(const MatrixGroup& gd,
                                    const std::vector<const MatrixGroup*>& classes,
                                    const std::vector<Vec>& base);
bool check_coflabby_resolution_base(const MatrixGroup& gd,
                                    const std::vector<Vec>& base);

// Method III: all bases assembled from at most `orbit_budget` of the candidate
// orbits (orbits of the fixed-lattice basis vectors), sorted by size.
std::vector<std::vector<Vec>> search_coflabby_resolution_base(const MatrixGroup& gd,
                                                              int orbit_budget);

// Internal state shared by the resolution-based computations: the transposed
// group, its subgroup classes, the base, the permutation action on it and the
// kernel-lattice action.
struct DualResolution {
  MatrixGroup gd;                        // transposed group
  SubgroupClassList classes;             // classes of gd, canonical order
  ResolutionBase base;
  IntMatrix mi;                          // base as an r x d matrix
  int r = 0, d = 0;
  std::vector<std::vector<int>> perms;   // per generator: base[i]*gT = base[perm[i]]
  IntMatrix ms;                          // HNF basis of { x : x*mi = 0 }
  std::vector<IntMatrix> kmats;          // per generator: ms*P(perm) = kmats*ms
};

DualResolution dual_resolution(const MatrixGroup& g,
                               const std::optional<std::vector<Vec>>& base = std::nullopt);

FlabbyResolutionResult flabby_resolution(
    const MatrixGroup& g, const std::optional<std::vector<Vec>>& base = std::nullopt);

// The F-action group G/N together with its subgroup classes (images of the
// classes of G containing N), both in the untransposed convention.
struct QuotientContext {
  MatrixGroup g2;                  // generator k corresponds to generator k of G
  std::vector<MatrixGroup> h2;     // canonical order
  bool is_quotient = false;        // false when G acts faithfully on F
};
QuotientContext f_context(const DualResolution& dr);

// E with [[M]^fl]^fl = [E]; rank-0 group when either stage ends permutation.
MatrixGroup flfl(const MatrixGroup& g);

// Whether the flabby class [M_G]^fl is invertible.
bool is_invertible_f(const MatrixGroup& g);
bool is_invertible_f(const MatrixGroup& g, const DualResolution& dr);

}  // namespace glat
