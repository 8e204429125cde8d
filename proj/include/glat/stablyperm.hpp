#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "glat/resolution.hpp"

namespace glat {

enum class Distinguished { M, F };

// Coefficient vector (a_1..a_r, b_1) over the canonical subgroup-class list
// plus one trailing slot for the distinguished lattice.
using Combo = std::vector<Int>;

Combo nlist(const Combo& l);  // componentwise max(-x, 0)
Combo plist(const Combo& l);  // componentwise max(x, 0)

// The block data every Method I/II computation runs against: the acting group
// (G itself, or the F-action quotient), its canonical subgroup classes, the
// coset representations and the distinguished generator block.
struct BlockContext {
  MatrixGroup g2;
  std::vector<MatrixGroup> h2;
  std::vector<std::vector<IntMatrix>> coset_reps;  // per class, per generator
  std::vector<IntMatrix> dist_gens;
  std::vector<int> block_ranks;  // per class, then the distinguished rank
  bool trivial_resolution = false;  // distinguished F with P = M
};

BlockContext block_context(const MatrixGroup& g, Distinguished which);
BlockContext block_context_from(const MatrixGroup& g, const DualResolution& dr);

// Algorithm F4: HNF basis of the integer solutions (a_1..a_r, b_1) of the
// trace, fixed-rank and p-part equations. If no solution has b_1 = ±1 the
// distinguished lattice is not stably permutation.
std::vector<Combo> possibility_of_stably_permutation(const BlockContext& ctx);
std::vector<Combo> possibility_of_stably_permutation(const MatrixGroup& g,
                                                     Distinguished which);

// HNF-canonical basis of { P : l1[k] P = P l2[k] for all k }.
std::vector<IntMatrix> transformation_mat(const std::vector<IntMatrix>& l1,
                                          const std::vector<IntMatrix>& l2,
                                          int d1 = -1, int d2 = -1);

// Method II: intertwiner lattice between the block groups built from c1, c2.
std::vector<IntMatrix> stably_permutation_check_p(const BlockContext& ctx,
                                                  const Combo& c1, const Combo& c2);

// Block-diagonal generator lists of the two sides.
std::pair<std::vector<IntMatrix>, std::vector<IntMatrix>> stably_permutation_check_gen(
    const BlockContext& ctx, const Combo& c1, const Combo& c2);

// Certificate check: P unimodular and conjugating side one to side two.
bool stably_permutation_check_mat(const BlockContext& ctx, const Combo& c1,
                                  const Combo& c2, const IntMatrix& p);

struct SearchStrategy {
  bool exhaustive = false;
  std::vector<long> coeff_set{0, 1};
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
};

struct SearchResult {
  std::vector<Int> coefficients;
  IntMatrix matrix;
  std::uint64_t trial_index = 0;
};

// A basis combination with determinant ±1, if the strategy finds one.
std::optional<SearchResult> unimodular_search(const std::vector<IntMatrix>& basis,
                                              const SearchStrategy& strategy);

}  // namespace glat
