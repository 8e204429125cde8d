#pragma once

#include <cassert>
#include <initializer_list>
#include <vector>

#include "glat/bigint.hpp"

namespace glat {

// Dense integer matrix, row-major. Lattice vectors are rows and matrices act
// on the right: v -> v*A. Group elements therefore compose left-to-right,
// A(gh) = A(g)*A(h).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = int(rows.size());
    cols_ = rows_ ? int(rows.begin()->size()) : 0;
    a_.reserve(size_t(rows_) * cols_);
    for (const auto& r : rows) {
      assert(int(r.size()) == cols_);
      for (long v : r) a_.emplace_back(v);
    }
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  static IntMatrix zero(int r, int c) { return IntMatrix(r, c); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  std::vector<Int> row(int i) const {
    return std::vector<Int>(a_.begin() + size_t(i) * cols_,
                            a_.begin() + size_t(i + 1) * cols_);
  }
  void set_row(int i, const std::vector<Int>& v) {
    assert(int(v.size()) == cols_);
    for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    assert(cols_ == o.rows_);
    IntMatrix r(rows_, o.cols_);
    Int acc;
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Int& x = at(i, k);
        if (x == 0) continue;
        for (int j = 0; j < o.cols_; ++j) {
          if (o.at(k, j) == 0) continue;
          r.at(i, j) += x * o.at(k, j);
        }
      }
    return r;
  }
  IntMatrix operator+(const IntMatrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    IntMatrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
  }
  IntMatrix operator-(const IntMatrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    IntMatrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
  }
  IntMatrix operator-() const {
    IntMatrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
  }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  // row-major lexicographic order; shape compared first
  bool operator<(const IntMatrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    for (size_t i = 0; i < a_.size(); ++i) {
      int c = cmp(a_[i], o.a_[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }

  Int trace() const {
    assert(rows_ == cols_);
    Int t = 0;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }
  bool is_zero() const {
    for (const auto& x : a_) if (x != 0) return false;
    return true;
  }

  std::uint64_t hash() const {
    std::uint64_t h = hash_combine(std::uint64_t(rows_), std::uint64_t(cols_));
    for (const auto& x : a_) h = hash_combine(h, hash_int(x));
    return h;
  }

  // rows [r0, r1) and columns [c0, c1)
  IntMatrix block(int r0, int r1, int c0, int c1) const {
    IntMatrix b(r1 - r0, c1 - c0);
    for (int i = r0; i < r1; ++i)
      for (int j = c0; j < c1; ++j) b.at(i - r0, j - c0) = at(i, j);
    return b;
  }

  std::vector<Int> flatten() const { return a_; }
  static IntMatrix from_flat(int r, int c, std::vector<Int> v) {
    IntMatrix m;
    m.rows_ = r;
    m.cols_ = c;
    assert(int(v.size()) == r * c);
    m.a_ = std::move(v);
    return m;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

struct IntMatrixHash {
  std::size_t operator()(const IntMatrix& m) const { return m.hash(); }
};

inline IntMatrix block_diag(const std::vector<IntMatrix>& blocks) {
  int r = 0, c = 0;
  for (const auto& b : blocks) { r += b.rows(); c += b.cols(); }
  IntMatrix m(r, c);
  int ro = 0, co = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) m.at(ro + i, co + j) = b.at(i, j);
    ro += b.rows();
    co += b.cols();
  }
  return m;
}

inline IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty() && a.rows() == 0) {
    if (a.cols() == 0) return b;
  }
  assert(a.cols() == b.cols());
  IntMatrix m(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) m.at(a.rows() + i, j) = b.at(i, j);
  return m;
}

}  // namespace glat
