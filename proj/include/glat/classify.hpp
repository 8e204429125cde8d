#pragma once

#include <nlohmann/json.hpp>

#include "glat/stablyperm.hpp"

namespace glat {

using json = nlohmann::json;

enum class Verdict { stably_rational, retract_not_stably, not_retract, undecided };

const char* verdict_name(Verdict v);

struct Classification {
  Verdict verdict = Verdict::undecided;
  json evidence = json::array();  // ordered step records
};

struct ClassifyOptions {
  std::uint64_t seed = 0;
  std::uint64_t trials = 2000;
  int exhaustive_cap = 16;    // basis sizes up to this get a {0,1} sweep
  int combo_rank_cap = 160;   // skip block assemblies beyond this total rank
  int max_paddings = 3;
  int orbit_budget = 3;       // Method III fallback over smaller bases
  int max_alternate_bases = 3;
};

// F1 -> F2 -> F3 -> F4 -> search, with restriction obstructions along the way.
Classification classify(const MatrixGroup& g, const ClassifyOptions& opt = {});

enum class ZConjOutcome { found, disproved, inconclusive };

struct ZConjResult {
  ZConjOutcome outcome = ZConjOutcome::inconclusive;
  std::optional<IntMatrix> conjugator;  // g1 * P = P * phi(g1)
  std::string reason;
};

struct ZConjOptions {
  std::uint64_t seed = 0;
  std::uint64_t trials = 4000;
  std::uint64_t candidate_cap = 200000;  // generator-image tuples examined
  int exhaustive_cap = 14;
};

// Best-effort GL(n,Z)-conjugacy between two finite matrix groups.
ZConjResult z_conjugacy_search(const MatrixGroup& g1, const MatrixGroup& g2,
                               const ZConjOptions& opt = {});

struct ScanEntry {
  int maximal_index = 0;
  int class_index = 0;
  std::uint64_t order = 0;
  bool flabby = false;
  bool coflabby = false;
};

// Every conjugacy-class subgroup of every listed maximal group, tagged
// flabby/coflabby with the staged prefilters.
std::vector<ScanEntry> flabby_coflabby_scan(const std::vector<MatrixGroup>& maximal);

}  // namespace glat
