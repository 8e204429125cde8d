#include "glat/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace glat {

namespace {

void swap_rows(IntMatrix& m, int i, int j) {
  if (i == j) return;
  for (int c = 0; c < m.cols(); ++c) std::swap(m.at(i, c), m.at(j, c));
}
void swap_cols(IntMatrix& m, int i, int j) {
  if (i == j) return;
  for (int r = 0; r < m.rows(); ++r) std::swap(m.at(r, i), m.at(r, j));
}
void negate_row(IntMatrix& m, int i) {
  for (int c = 0; c < m.cols(); ++c) m.at(i, c) = -m.at(i, c);
}
// row i -= q * row j
void addmul_row(IntMatrix& m, int i, int j, const Int& q) {
  if (q == 0) return;
  for (int c = 0; c < m.cols(); ++c) m.at(i, c) -= q * m.at(j, c);
}
void addmul_col(IntMatrix& m, int i, int j, const Int& q) {
  if (q == 0) return;
  for (int r = 0; r < m.rows(); ++r) m.at(r, i) -= q * m.at(r, j);
}

// Row echelon reduction into HNF. U accumulates row operations when given.
void hnf_in_place(IntMatrix& m, IntMatrix* u) {
  int rows = m.rows(), cols = m.cols();
  int p = 0;  // next pivot row
  for (int col = 0; col < cols && p < rows; ++col) {
    // eliminate until at most one nonzero at or below p in this column
    for (;;) {
      int best = -1;
      for (int r = p; r < rows; ++r) {
        if (m.at(r, col) != 0 &&
            (best < 0 || mpz_cmpabs(m.at(r, col).get_mpz_t(), m.at(best, col).get_mpz_t()) < 0))
          best = r;
      }
      if (best < 0) break;
      swap_rows(m, p, best);
      if (u) swap_rows(*u, p, best);
      bool clean = true;
      for (int r = p + 1; r < rows; ++r) {
        if (m.at(r, col) == 0) continue;
        Int q = ndiv(m.at(r, col), m.at(p, col));
        addmul_row(m, r, p, q);
        if (u) addmul_row(*u, r, p, q);
        if (m.at(r, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (m.at(p, col) == 0) continue;
    if (m.at(p, col) < 0) {
      negate_row(m, p);
      if (u) negate_row(*u, p);
    }
    // reduce entries above the pivot into [0, pivot)
    for (int r = 0; r < p; ++r) {
      Int q = fdiv(m.at(r, col), m.at(p, col));
      addmul_row(m, r, p, q);
      if (u) addmul_row(*u, r, p, q);
    }
    ++p;
  }
}

int nonzero_rows(const IntMatrix& m) {
  int n = 0;
  for (int i = 0; i < m.rows(); ++i) {
    bool z = true;
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) { z = false; break; }
    if (!z) ++n;
  }
  return n;
}

}  // namespace

std::pair<IntMatrix, IntMatrix> hnf_with_transform(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  hnf_in_place(h, &u);
  return {h, u};
}

IntMatrix hnf_row_basis(const IntMatrix& rows) {
  IntMatrix h = rows;
  hnf_in_place(h, nullptr);
  int r = nonzero_rows(h);
  return h.block(0, r, 0, h.cols());
}

IntMatrix nullspace_int(const IntMatrix& a) {
  auto [h, u] = hnf_with_transform(a);
  int r = nonzero_rows(h);
  IntMatrix ker = u.block(r, u.rows(), 0, u.cols());
  return hnf_row_basis(ker);
}

std::optional<IntMatrix> solve_left(const IntMatrix& a, const IntMatrix& b) {
  assert(a.cols() == b.cols());
  auto [h, u] = hnf_with_transform(a);
  int r = nonzero_rows(h);
  std::vector<int> pivot_col(r);
  for (int i = 0; i < r; ++i) {
    int j = 0;
    while (h.at(i, j) == 0) ++j;
    pivot_col[i] = j;
  }
  IntMatrix x(b.rows(), a.rows());
  std::vector<Int> res(a.cols());
  for (int i = 0; i < b.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) res[j] = b.at(i, j);
    std::vector<Int> coef(r);
    int k = 0;
    for (int j = 0; j < a.cols(); ++j) {
      if (k < r && pivot_col[k] == j) {
        Int q, rem;
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), res[j].get_mpz_t(),
                    h.at(k, j).get_mpz_t());
        if (rem != 0) return std::nullopt;
        coef[k] = q;
        if (q != 0)
          for (int c = j; c < a.cols(); ++c) res[c] -= q * h.at(k, c);
        ++k;
      } else if (res[j] != 0) {
        return std::nullopt;
      }
    }
    for (int t = 0; t < r; ++t)
      if (coef[t] != 0)
        for (int c = 0; c < a.rows(); ++c) x.at(i, c) += coef[t] * u.at(t, c);
  }
  return x;
}

bool in_row_lattice(const IntMatrix& a, const std::vector<Int>& v) {
  IntMatrix b(1, int(v.size()));
  b.set_row(0, v);
  return solve_left(a, b).has_value();
}

SmithForm snf(const IntMatrix& a, bool with_transforms) {
  IntMatrix m = a;
  std::optional<IntMatrix> left, right;
  IntMatrix *lp = nullptr, *rp = nullptr;
  if (with_transforms) {
    left = IntMatrix::identity(a.rows());
    right = IntMatrix::identity(a.cols());
    lp = &*left;
    rp = &*right;
  }
  // Row-reduce tall matrices first; cheap and keeps the working square small.
  if (!with_transforms && m.rows() > m.cols()) {
    hnf_in_place(m, nullptr);
    m = m.block(0, std::min(m.rows(), nonzero_rows(m)), 0, m.cols());
    if (m.rows() == 0) return SmithForm{};
  }
  int rows = m.rows(), cols = m.cols();
  int t = 0;
  int bound = std::min(rows, cols);
  while (t < bound) {
    // locate smallest nonzero entry in the trailing submatrix
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (m.at(i, j) != 0 &&
            (pi < 0 || mpz_cmpabs(m.at(i, j).get_mpz_t(), m.at(pi, pj).get_mpz_t()) < 0)) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    swap_rows(m, t, pi);
    if (lp) swap_rows(*lp, t, pi);
    swap_cols(m, t, pj);
    if (rp) swap_cols(*rp, t, pj);
    bool dirty = false;
    for (int i = t + 1; i < rows; ++i) {
      if (m.at(i, t) == 0) continue;
      Int q = ndiv(m.at(i, t), m.at(t, t));
      addmul_row(m, i, t, q);
      if (lp) addmul_row(*lp, i, t, q);
      if (m.at(i, t) != 0) dirty = true;
    }
    for (int j = t + 1; j < cols; ++j) {
      if (m.at(t, j) == 0) continue;
      Int q = ndiv(m.at(t, j), m.at(t, t));
      addmul_col(m, j, t, q);
      if (rp) addmul_col(*rp, j, t, q);
      if (m.at(t, j) != 0) dirty = true;
    }
    if (dirty) continue;  // remainders left; pick a new pivot
    // enforce divisibility of the trailing block by the pivot
    bool fixed = false;
    for (int i = t + 1; i < rows && !fixed; ++i)
      for (int j = t + 1; j < cols && !fixed; ++j)
        if (!mpz_divisible_p(m.at(i, j).get_mpz_t(), m.at(t, t).get_mpz_t())) {
          // add row i to row t; recreates a smaller pivot next pass
          addmul_row(m, t, i, Int(-1));
          if (lp) addmul_row(*lp, t, i, Int(-1));
          fixed = true;
        }
    if (fixed) continue;
    if (m.at(t, t) < 0) {
      negate_row(m, t);
      if (lp) negate_row(*lp, t);
    }
    ++t;
  }
  SmithForm s;
  s.rank = t;
  for (int i = 0; i < t; ++i) s.divisors.push_back(m.at(i, i));
  if (with_transforms) {
    // transforms were built against the possibly row-reduced copy only when
    // with_transforms is false, so here they match the original matrix
    s.left = std::move(left);
    s.right = std::move(right);
  }
  return s;
}

Int det(const IntMatrix& a) {
  assert(a.rows() == a.cols());
  int n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  // fraction-free Bareiss elimination
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) { piv = i; break; }
      if (piv < 0) return 0;
      swap_rows(m, k, piv);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  Int d = m.at(n - 1, n - 1);
  return sign < 0 ? Int(-d) : d;
}

bool is_unimodular(const IntMatrix& a) {
  if (a.rows() != a.cols()) return false;
  Int d = det(a);
  return d == 1 || d == -1;
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
  auto x = solve_left(a, IntMatrix::identity(a.rows()));
  assert(x.has_value());
  return *x;
}

}  // namespace glat
