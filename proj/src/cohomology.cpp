#include "glat/cohomology.hpp"

#include <cassert>

namespace glat {

namespace {

TateGroup divisors_above_1(const SmithForm& s) {
  TateGroup t;
  for (const auto& d : s.divisors)
    if (d > 1) t.push_back(d);
  return t;
}

// stack (B(g) - I) over generators and read off the nontrivial SNF divisors
TateGroup hminus1_of(const std::vector<IntMatrix>& mats, int rank) {
  if (mats.empty()) return {};
  IntMatrix stacked(int(mats.size()) * rank, rank);
  for (std::size_t k = 0; k < mats.size(); ++k)
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j)
        stacked.at(int(k) * rank + i, j) = mats[k].at(i, j) - (i == j ? 1 : 0);
  return divisors_above_1(snf(stacked));
}

}  // namespace

std::vector<IntMatrix> element_module_matrices(const MatrixGroup& g,
                                               const ModuleAction& m) {
  const auto& el = g.elements();
  const CayleyTable& t = g.table();
  std::vector<std::uint32_t> gen_idx;
  for (const auto& gen : g.gens()) gen_idx.push_back(std::uint32_t(g.index_of(gen)));
  std::vector<IntMatrix> mats(el.size());
  std::vector<bool> have(el.size(), false);
  mats[t.id] = IntMatrix::identity(m.rank);
  have[t.id] = true;
  std::vector<std::uint32_t> frontier{t.id};
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    std::uint32_t x = frontier[head];
    for (std::size_t k = 0; k < gen_idx.size(); ++k) {
      std::uint32_t y = t.mul(x, gen_idx[k]);
      if (!have[y]) {
        mats[y] = mats[x] * m.gen_mats[k];
        have[y] = true;
        frontier.push_back(y);
      }
    }
  }
  return mats;
}

TateGroup h_minus1(const MatrixGroup& g) {
  return hminus1_of(g.gens(), g.rank());
}

TateGroup h_minus1(const MatrixGroup& g, const ModuleAction& m) {
  return hminus1_of(m.gen_mats, m.rank);
}

TateGroup h1(const MatrixGroup& g) {
  std::vector<IntMatrix> tr;
  for (const auto& m : g.gens()) tr.push_back(m.transpose());
  return hminus1_of(tr, g.rank());
}

TateGroup h1(const MatrixGroup& g, const ModuleAction& m) {
  std::vector<IntMatrix> tr;
  for (const auto& mat : m.gen_mats) tr.push_back(mat.transpose());
  return hminus1_of(tr, m.rank);
}

TateGroup h0(const MatrixGroup& g) {
  IntMatrix norm(g.rank(), g.rank());
  for (const auto& e : g.elements()) norm = norm + e;
  return divisors_above_1(snf(norm));
}

TateGroup h0(const MatrixGroup& g, const ModuleAction& m) {
  IntMatrix norm(m.rank, m.rank);
  for (const auto& e : element_module_matrices(g, m)) norm = norm + e;
  return divisors_above_1(snf(norm));
}

ModuleAction up_shift(const MatrixGroup& g, const ModuleAction& m) {
  const CayleyTable& t = g.table();
  auto mats = element_module_matrices(g, m);
  const int mr = m.rank;
  const std::uint32_t N = t.n;
  // free module Z[G]⊗M on basis (h, i) with pure permutation action
  // (h,i) -> (h*g, i); M embeds by m -> (h^{-1} m)_h. The identity block of
  // the embedding is I, so the non-identity blocks form a basis of the
  // cokernel Q once b_(e,i) is rewritten as -sum_h A(h^{-1})_{i,*} b_(h,*).
  std::vector<std::uint32_t> pos(N);  // non-identity elements, packed
  std::vector<std::int64_t> slot(N, -1);
  {
    std::uint32_t k = 0;
    for (std::uint32_t h = 0; h < N; ++h)
      if (h != t.id) { pos[k] = h; slot[h] = k; ++k; }
  }
  const int qr = int(N - 1) * mr;
  std::vector<std::uint32_t> gen_idx;
  for (const auto& gen : g.gens()) gen_idx.push_back(std::uint32_t(g.index_of(gen)));
  ModuleAction q;
  q.rank = qr;
  for (std::uint32_t gi : gen_idx) {
    IntMatrix a(qr, qr);
    for (std::uint32_t k = 0; k < N - 1; ++k) {
      std::uint32_t h = pos[k];
      std::uint32_t hg = t.mul(h, gi);
      if (hg != t.id) {
        std::int64_t k2 = slot[hg];
        for (int i = 0; i < mr; ++i) a.at(int(k) * mr + i, int(k2) * mr + i) = 1;
      } else {
        // b_(e,i) = -sum_{h'≠e} sum_j A(h'^{-1})_{ij} b_(h',j)
        for (int i = 0; i < mr; ++i)
          for (std::uint32_t k2 = 0; k2 < N - 1; ++k2) {
            const IntMatrix& ah = mats[t.inv[pos[k2]]];
            for (int j = 0; j < mr; ++j)
              a.at(int(k) * mr + i, int(k2) * mr + j) -= ah.at(i, j);
          }
      }
    }
    q.gen_mats.push_back(std::move(a));
  }
  return q;
}

ModuleAction down_shift(const MatrixGroup& g, const ModuleAction& m) {
  const CayleyTable& t = g.table();
  auto mats = element_module_matrices(g, m);
  const int mr = m.rank;
  const std::uint32_t N = t.n;
  // surjection pi: Z[G]⊗M -> M, b_(h,i) -> e_i * A(h); K = ker(pi)
  IntMatrix pi(int(N) * mr, mr);
  for (std::uint32_t h = 0; h < N; ++h)
    for (int i = 0; i < mr; ++i)
      for (int j = 0; j < mr; ++j) pi.at(int(h) * mr + i, j) = mats[h].at(i, j);
  IntMatrix kbasis = nullspace_int(pi);  // rows span K
  std::vector<std::uint32_t> gen_idx;
  for (const auto& gen : g.gens()) gen_idx.push_back(std::uint32_t(g.index_of(gen)));
  ModuleAction k;
  k.rank = kbasis.rows();
  for (std::uint32_t gi : gen_idx) {
    // permutation action on the free module, then re-express in the K basis
    IntMatrix moved(kbasis.rows(), kbasis.cols());
    for (int r = 0; r < kbasis.rows(); ++r)
      for (std::uint32_t h = 0; h < N; ++h) {
        std::uint32_t hg = t.mul(h, gi);
        for (int i = 0; i < mr; ++i)
          moved.at(r, int(hg) * mr + i) = kbasis.at(r, int(h) * mr + i);
      }
    auto b = solve_left(kbasis, moved);
    assert(b.has_value());
    k.gen_mats.push_back(std::move(*b));
  }
  return k;
}

TateGroup tate(const MatrixGroup& g, int n, const std::optional<ModuleAction>& m) {
  ModuleAction act = m ? *m : ModuleAction::tautological(g);
  int shifts = n >= -1 && n <= 1 ? 0 : (n > 1 ? n - 1 : -1 - n);
  if (shifts > budget().shift_depth)
    throw DepthExceeded("tate degree exceeds the configured shift depth");
  while (n > 1) {
    act = up_shift(g, act);
    --n;
  }
  while (n < -1) {
    act = down_shift(g, act);
    ++n;
  }
  if (n == 1) return h1(g, act);
  if (n == 0) return h0(g, act);
  return h_minus1(g, act);
}

bool is_flabby(const SubgroupClassList& classes) {
  for (const auto& c : classes.classes)
    if (!h_minus1(c.group).empty()) return false;
  return true;
}

bool is_coflabby(const SubgroupClassList& classes) {
  for (const auto& c : classes.classes)
    if (!h1(c.group).empty()) return false;
  return true;
}

bool is_flabby(const MatrixGroup& g) {
  return is_flabby(conjugacy_classes_subgroups(g));
}

bool is_coflabby(const MatrixGroup& g) {
  return is_coflabby(conjugacy_classes_subgroups(g));
}

}  // namespace glat
