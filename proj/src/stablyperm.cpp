#include "glat/stablyperm.hpp"

#include <algorithm>
#include <cassert>
#include <random>

namespace glat {

Combo nlist(const Combo& l) {
  Combo r = l;
  for (auto& x : r) x = x < 0 ? Int(-x) : Int(0);
  return r;
}

Combo plist(const Combo& l) {
  Combo r = l;
  for (auto& x : r) x = x > 0 ? x : Int(0);
  return r;
}

namespace {

struct CosetAction {
  std::vector<std::int32_t> coset_of;   // parent element index -> coset
  std::vector<std::uint32_t> coset_min; // least element per coset
};

CosetAction coset_action(const MatrixGroup& g, const MatrixGroup& h) {
  const CayleyTable& t = g.table();
  std::vector<std::uint32_t> hidx;
  for (const auto& e : h.elements()) {
    long i = g.index_of(e);
    if (i < 0) throw NotASubgroup("class member is not inside the parent group");
    hidx.push_back(std::uint32_t(i));
  }
  CosetAction ca;
  ca.coset_of.assign(t.n, -1);
  for (std::uint32_t x = 0; x < t.n; ++x) {
    if (ca.coset_of[x] >= 0) continue;
    std::int32_t id = std::int32_t(ca.coset_min.size());
    ca.coset_min.push_back(x);
    for (std::uint32_t e : hidx) ca.coset_of[t.mul(e, x)] = id;
  }
  return ca;
}

std::vector<Int> full_h0_divisors(const MatrixGroup& g) {
  IntMatrix norm(g.rank(), g.rank());
  for (const auto& e : g.elements()) norm = norm + e;
  return snf(norm).divisors;
}

}  // namespace

BlockContext block_context_from(const MatrixGroup& g, const DualResolution& dr) {
  BlockContext ctx;
  if (dr.r == dr.d) {
    ctx.trivial_resolution = true;
    return ctx;
  }
  QuotientContext qc = f_context(dr);
  ctx.g2 = std::move(qc.g2);
  ctx.h2 = std::move(qc.h2);
  ctx.dist_gens = ctx.g2.gens();
  for (const auto& h : ctx.h2) {
    ctx.coset_reps.push_back(coset_representation(ctx.g2, h));
    ctx.block_ranks.push_back(int(ctx.g2.order() / h.order()));
  }
  ctx.block_ranks.push_back(ctx.g2.rank());
  return ctx;
}

BlockContext block_context(const MatrixGroup& g, Distinguished which) {
  if (which == Distinguished::F) {
    DualResolution dr = dual_resolution(g);
    return block_context_from(g, dr);
  }
  BlockContext ctx;
  ctx.g2 = g;
  auto cl = conjugacy_classes_subgroups(g);
  for (auto& c : cl.classes) ctx.h2.push_back(std::move(c.group));
  ctx.dist_gens = g.gens();
  for (const auto& h : ctx.h2) {
    ctx.coset_reps.push_back(coset_representation(ctx.g2, h));
    ctx.block_ranks.push_back(int(ctx.g2.order() / h.order()));
  }
  ctx.block_ranks.push_back(g.rank());
  return ctx;
}

std::vector<Combo> possibility_of_stably_permutation(const BlockContext& ctx) {
  if (ctx.trivial_resolution) return {Combo{Int(1), Int(-1)}};
  const MatrixGroup& g = ctx.g2;
  const CayleyTable& t = g.table();
  const int r = int(ctx.h2.size());

  std::vector<CosetAction> actions;
  for (const auto& h : ctx.h2) actions.push_back(coset_action(g, h));

  std::vector<std::vector<std::uint32_t>> h_indices(r);
  for (int i = 0; i < r; ++i)
    for (const auto& e : ctx.h2[i].elements())
      h_indices[i].push_back(std::uint32_t(g.index_of(e)));

  std::vector<Combo> eqs;  // each of length r+1

  // trace equations, one per conjugacy class of elements
  for (std::uint32_t c : element_conjugacy_reps(g)) {
    Combo row(r + 1, Int(0));
    for (int i = 0; i < r; ++i) {
      long fix = 0;
      const auto& ca = actions[i];
      for (std::size_t k = 0; k < ca.coset_min.size(); ++k)
        if (ca.coset_of[t.mul(ca.coset_min[k], c)] == std::int32_t(k)) ++fix;
      row[i] = fix;
    }
    row[r] = g.elements()[c].trace();
    eqs.push_back(std::move(row));
  }

  // fixed-rank and p-part equations, one batch per subgroup class
  for (int j = 0; j < r; ++j) {
    const MatrixGroup& hj = ctx.h2[j];
    Int oh = Int(long(hj.order()));
    // orbit stabilizer orders of h_j on each coset space
    std::vector<std::vector<Int>> stab_orders(r);
    std::vector<std::uint32_t> hj_gens;
    for (const auto& e : hj.gens()) hj_gens.push_back(std::uint32_t(g.index_of(e)));
    for (int i = 0; i < r; ++i) {
      const auto& ca = actions[i];
      int nc = int(ca.coset_min.size());
      std::vector<int> label(nc, -1);
      int next = 0;
      for (int s = 0; s < nc; ++s) {
        if (label[s] >= 0) continue;
        label[s] = next;
        std::vector<int> fr{s};
        int len = 1;
        while (!fr.empty()) {
          int cur = fr.back();
          fr.pop_back();
          for (std::uint32_t gg : hj_gens) {
            int to = ca.coset_of[t.mul(ca.coset_min[cur], gg)];
            if (label[to] < 0) { label[to] = next; fr.push_back(to); ++len; }
          }
        }
        stab_orders[i].push_back(oh / len);
        ++next;
      }
    }
    std::vector<Int> h0 = full_h0_divisors(hj);
    Combo rank_row(r + 1, Int(0));
    for (int i = 0; i < r; ++i) rank_row[i] = long(stab_orders[i].size());
    rank_row[r] = long(h0.size());
    eqs.push_back(std::move(rank_row));
    if (oh > 1) {
      for (const Int& p : prime_factors(oh)) {
        int vmax = p_adic_valuation(oh, p);
        for (int e = 1; e <= vmax; ++e) {
          Combo row(r + 1, Int(0));
          for (int i = 0; i < r; ++i) {
            long cnt = 0;
            for (const auto& s : stab_orders[i])
              if (p_adic_valuation(s, p) == e) ++cnt;
            row[i] = cnt;
          }
          long cnt = 0;
          for (const auto& d : h0)
            if (p_adic_valuation(d, p) == e) ++cnt;
          row[r] = cnt;
          eqs.push_back(std::move(row));
        }
      }
    }
  }

  // unknowns index the rows of the final system
  IntMatrix sys(r + 1, int(eqs.size()));
  for (std::size_t e = 0; e < eqs.size(); ++e)
    for (int u = 0; u <= r; ++u) sys.at(u, int(e)) = eqs[e][u];
  IntMatrix ns = nullspace_int(sys);
  std::vector<Combo> out;
  for (int i = 0; i < ns.rows(); ++i) out.push_back(ns.row(i));
  return out;
}

std::vector<Combo> possibility_of_stably_permutation(const MatrixGroup& g,
                                                     Distinguished which) {
  return possibility_of_stably_permutation(block_context(g, which));
}

std::vector<IntMatrix> transformation_mat(const std::vector<IntMatrix>& l1,
                                          const std::vector<IntMatrix>& l2,
                                          int d1, int d2) {
  if (d1 < 0) d1 = l1.empty() ? 0 : l1[0].rows();
  if (d2 < 0) d2 = l2.empty() ? 0 : l2[0].rows();
  assert(l1.size() == l2.size());
  const int k = int(l1.size());
  IntMatrix sys(d1 * d2, k * d1 * d2);
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d2; ++j) {
      int rowidx = i * d2 + j;
      for (int m = 0; m < k; ++m) {
        // l1[m]*E_ij - E_ij*l2[m]
        for (int a = 0; a < d1; ++a)
          sys.at(rowidx, m * d1 * d2 + a * d2 + j) += l1[m].at(a, i);
        for (int b = 0; b < d2; ++b)
          sys.at(rowidx, m * d1 * d2 + i * d2 + b) -= l2[m].at(j, b);
      }
    }
  IntMatrix ns = nullspace_int(sys);
  std::vector<IntMatrix> out;
  for (int i = 0; i < ns.rows(); ++i)
    out.push_back(IntMatrix::from_flat(d1, d2, ns.row(i)));
  return out;
}

namespace {

const std::vector<IntMatrix>& block_gens(const BlockContext& ctx, int i) {
  return i < int(ctx.h2.size()) ? ctx.coset_reps[i] : ctx.dist_gens;
}

void check_combo_shape(const BlockContext& ctx, const Combo& c) {
  if (c.size() != ctx.h2.size() + 1)
    throw DimensionMismatch("combo length must be class count + 1");
  for (const auto& x : c)
    if (x < 0) throw DimensionMismatch("combo for block assembly must be nonnegative");
}

int total_rank(const BlockContext& ctx, const Combo& c) {
  Int t = 0;
  for (std::size_t i = 0; i < c.size(); ++i) t += c[i] * ctx.block_ranks[i];
  return int(t.get_si());
}

}  // namespace

std::pair<std::vector<IntMatrix>, std::vector<IntMatrix>> stably_permutation_check_gen(
    const BlockContext& ctx, const Combo& c1, const Combo& c2) {
  check_combo_shape(ctx, c1);
  check_combo_shape(ctx, c2);
  if (total_rank(ctx, c1) != total_rank(ctx, c2))
    throw RankMismatch("the two sides have different total rank");
  const int ngens = int(ctx.dist_gens.size());
  auto side = [&](const Combo& c) {
    std::vector<IntMatrix> gens;
    for (int k = 0; k < ngens; ++k) {
      std::vector<IntMatrix> blocks;
      for (std::size_t i = 0; i < c.size(); ++i)
        for (Int copy = 0; copy < c[i]; ++copy)
          blocks.push_back(block_gens(ctx, int(i))[k]);
      gens.push_back(block_diag(blocks));
    }
    return gens;
  };
  return {side(c1), side(c2)};
}

std::vector<IntMatrix> stably_permutation_check_p(const BlockContext& ctx,
                                                  const Combo& c1, const Combo& c2) {
  check_combo_shape(ctx, c1);
  check_combo_shape(ctx, c2);
  const int d1 = total_rank(ctx, c1);
  const int d2 = total_rank(ctx, c2);
  if (d1 != d2) throw RankMismatch("the two sides have different total rank");
  const int nb = int(c1.size());

  std::vector<Vec> flat;
  int off1 = 0;
  for (int i = 0; i < nb; ++i) {
    if (c1[i] == 0) continue;
    int ri = ctx.block_ranks[i];
    int off2 = 0;
    for (int j = 0; j < nb; ++j) {
      if (c2[j] == 0) { continue; }
      int rj = ctx.block_ranks[j];
      auto tm = transformation_mat(block_gens(ctx, i), block_gens(ctx, j), ri, rj);
      for (Int a = 0; a < c1[i]; ++a)
        for (Int b = 0; b < c2[j]; ++b)
          for (const auto& t : tm) {
            IntMatrix p(d1, d2);
            int ro = off1 + int(a.get_si()) * ri;
            int co = off2 + int(b.get_si()) * rj;
            for (int x = 0; x < ri; ++x)
              for (int y = 0; y < rj; ++y) p.at(ro + x, co + y) = t.at(x, y);
            flat.push_back(p.flatten());
          }
      off2 += rj * int(c2[j].get_si());
    }
    off1 += ri * int(c1[i].get_si());
  }
  if (flat.empty()) return {};
  IntMatrix m(int(flat.size()), d1 * d2);
  for (std::size_t i = 0; i < flat.size(); ++i) m.set_row(int(i), flat[i]);
  IntMatrix h = hnf_row_basis(m);
  std::vector<IntMatrix> out;
  for (int i = 0; i < h.rows(); ++i)
    out.push_back(IntMatrix::from_flat(d1, d2, h.row(i)));
  return out;
}

bool stably_permutation_check_mat(const BlockContext& ctx, const Combo& c1,
                                  const Combo& c2, const IntMatrix& p) {
  auto [g1, g2] = stably_permutation_check_gen(ctx, c1, c2);
  int d = g1.empty() ? 0 : g1[0].rows();
  if (p.rows() != d || p.cols() != d)
    throw DimensionMismatch("certificate size does not match the block rank");
  Int dp = det(p);
  if (dp != 1 && dp != -1) return false;
  for (std::size_t k = 0; k < g1.size(); ++k)
    if (g1[k] * p != p * g2[k]) return false;
  return true;
}

std::optional<SearchResult> unimodular_search(const std::vector<IntMatrix>& basis,
                                              const SearchStrategy& strategy) {
  if (basis.empty()) return std::nullopt;
  const int k = int(basis.size());
  const int d = basis[0].rows();
  auto eval = [&](const std::vector<Int>& coeffs) -> std::optional<IntMatrix> {
    IntMatrix s(d, basis[0].cols());
    bool nonzero = false;
    for (int i = 0; i < k; ++i) {
      if (coeffs[i] == 0) continue;
      nonzero = true;
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < s.cols(); ++b)
          s.at(a, b) += coeffs[i] * basis[i].at(a, b);
    }
    if (!nonzero || s.rows() != s.cols()) return std::nullopt;
    Int dd = det(s);
    if (dd == 1 || dd == -1) return s;
    return std::nullopt;
  };
  if (strategy.exhaustive) {
    std::vector<std::size_t> odo(k, 0);
    std::vector<Int> coeffs(k, Int(strategy.coeff_set.at(0)));
    std::uint64_t trial = 0;
    for (;;) {
      if (auto s = eval(coeffs))
        return SearchResult{coeffs, std::move(*s), trial};
      ++trial;
      int pos = k - 1;
      while (pos >= 0 && odo[pos] + 1 == strategy.coeff_set.size()) {
        odo[pos] = 0;
        coeffs[pos] = strategy.coeff_set[0];
        --pos;
      }
      if (pos < 0) return std::nullopt;
      ++odo[pos];
      coeffs[pos] = strategy.coeff_set[odo[pos]];
    }
  }
  // seeded random trials; modulo indexing keeps the stream platform-stable
  std::mt19937_64 rng(strategy.seed);
  std::vector<Int> coeffs(k);
  for (std::uint64_t trial = 0; trial < strategy.trials; ++trial) {
    for (int i = 0; i < k; ++i)
      coeffs[i] = strategy.coeff_set[rng() % strategy.coeff_set.size()];
    if (auto s = eval(coeffs))
      return SearchResult{coeffs, std::move(*s), trial};
  }
  return std::nullopt;
}

}  // namespace glat
