#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace glat {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& what) : Error(what) {}
};
struct DepthExceeded : Error {
  explicit DepthExceeded(const std::string& what) : Error(what) {}
};
struct NonUnimodularGenerator : Error {
  explicit NonUnimodularGenerator(const std::string& what) : Error(what) {}
};
struct NotASubgroup : Error {
  explicit NotASubgroup(const std::string& what) : Error(what) {}
};
struct NotTransitive : Error {
  explicit NotTransitive(const std::string& what) : Error(what) {}
};
struct MismatchedGeneratorLists : Error {
  explicit MismatchedGeneratorLists(const std::string& what) : Error(what) {}
};
struct NonInvariantBlock : Error {
  explicit NonInvariantBlock(const std::string& what) : Error(what) {}
};
struct RankMismatch : Error {
  explicit RankMismatch(const std::string& what) : Error(what) {}
};
struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};
struct UnknownKey : Error {
  explicit UnknownKey(const std::string& what) : Error(what) {}
};
struct ParseError : Error {
  std::string field;
  ParseError(const std::string& field_, const std::string& what)
      : Error(what), field(field_) {}
};

// Runtime limits. The CLI overrides these from flags; library code reads them
// at call time, so tests can tighten budgets locally.
struct Budget {
  std::uint64_t max_elements = 1000000;  // group closure cap
  int shift_depth = 4;                   // dimension-shift cap for tate()
};

Budget& budget();

}  // namespace glat
