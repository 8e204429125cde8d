#pragma once

#include <optional>
#include <vector>

#include "glat/matrix.hpp"

namespace glat {

struct SmithForm {
  std::vector<Int> divisors;  // d1 | d2 | ... | dr, all positive
  int rank = 0;
  // present when requested: left * A * right = diag(divisors) padded with 0
  std::optional<IntMatrix> left, right;
};

SmithForm snf(const IntMatrix& a, bool with_transforms = false);

// Unique row-style Hermite normal form of the lattice spanned by the rows:
// zero rows dropped, pivots positive with strictly increasing column indices,
// entries above a pivot reduced into [0, pivot).
IntMatrix hnf_row_basis(const IntMatrix& rows);

// Row HNF together with a unimodular U such that U * A = H (H keeps zero rows
// at the bottom). Returns (H_full, U).
std::pair<IntMatrix, IntMatrix> hnf_with_transform(const IntMatrix& a);

// HNF basis of the saturated left kernel { x : x * A = 0 }.
IntMatrix nullspace_int(const IntMatrix& a);

// Integer X with X * A = B, if one exists.
std::optional<IntMatrix> solve_left(const IntMatrix& a, const IntMatrix& b);

// Membership of a row vector in the row lattice of `a`.
bool in_row_lattice(const IntMatrix& a, const std::vector<Int>& v);

Int det(const IntMatrix& a);

// Inverse of a matrix with determinant +-1.
IntMatrix inverse_unimodular(const IntMatrix& a);

bool is_unimodular(const IntMatrix& a);

}  // namespace glat
