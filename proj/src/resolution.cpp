#include "glat/resolution.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <unordered_map>

namespace glat {

namespace {

IntMatrix rows_to_matrix(const std::vector<Vec>& rows, int cols) {
  IntMatrix m(int(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(int(i), rows[i]);
  return m;
}

Vec apply_right(const Vec& v, const IntMatrix& a) {
  Vec r(a.cols(), Int(0));
  for (int i = 0; i < a.rows(); ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < a.cols(); ++j) r[j] += v[i] * a.at(i, j);
  }
  return r;
}

struct VecHash {
  std::size_t operator()(const Vec& v) const {
    std::uint64_t h = 0x2545f4914f6cdd1dULL ^ v.size();
    for (const auto& x : v) h = hash_combine(h, hash_int(x));
    return h;
  }
};

// partition `vectors` into orbits of the subgroup generated by `gens`;
// returns per-vector orbit label
std::vector<int> orbit_partition(const std::vector<Vec>& vectors,
                                 const std::vector<IntMatrix>& gens) {
  std::unordered_map<Vec, int, VecHash> pos;
  for (std::size_t i = 0; i < vectors.size(); ++i) pos.emplace(vectors[i], int(i));
  std::vector<int> label(vectors.size(), -1);
  int next = 0;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (label[i] >= 0) continue;
    label[i] = next;
    std::vector<int> frontier{int(i)};
    while (!frontier.empty()) {
      int cur = frontier.back();
      frontier.pop_back();
      for (const auto& g : gens) {
        Vec w = apply_right(vectors[cur], g);
        auto it = pos.find(w);
        assert(it != pos.end() && "vector set must be action-closed");
        if (label[it->second] < 0) {
          label[it->second] = next;
          frontier.push_back(it->second);
        }
      }
    }
    ++next;
  }
  return label;
}

// HNF lattice of the h-orbit sums of an action-closed vector set
IntMatrix orbit_sum_lattice(const std::vector<Vec>& vectors,
                            const MatrixGroup& h, int rank) {
  if (vectors.empty()) return IntMatrix(0, rank);
  std::vector<int> label = orbit_partition(vectors, h.gens());
  int norb = 1 + *std::max_element(label.begin(), label.end());
  std::vector<Vec> sums(norb, Vec(rank, Int(0)));
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (int j = 0; j < rank; ++j) sums[label[i]][j] += vectors[i][j];
  return hnf_row_basis(rows_to_matrix(sums, rank));
}

}  // namespace

IntMatrix z0_lattice(const std::vector<IntMatrix>& gens, int rank) {
  if (gens.empty()) return IntMatrix::identity(rank);
  IntMatrix m(rank, rank * int(gens.size()));
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j)
        m.at(i, int(k) * rank + j) = gens[k].at(i, j) - (i == j ? 1 : 0);
  return nullspace_int(m);
}

IntMatrix z0_lattice(const MatrixGroup& g) { return z0_lattice(g.gens(), g.rank()); }

std::vector<Vec> vector_orbit(const MatrixGroup& gd, const Vec& v) {
  std::set<Vec> seen{v};
  std::vector<Vec> frontier{v};
  while (!frontier.empty()) {
    Vec cur = frontier.back();
    frontier.pop_back();
    for (const auto& g : gd.gens()) {
      Vec w = apply_right(cur, g);
      if (seen.insert(w).second) frontier.push_back(w);
    }
  }
  return std::vector<Vec>(seen.begin(), seen.end());
}

bool check_coflabby_resolution_base(const MatrixGroup& gd,
                                    const std::vector<const MatrixGroup*>& classes,
                                    const std::vector<Vec>& base) {
  for (const auto* h : classes) {
    IntMatrix z0 = z0_lattice(*h);
    if (orbit_sum_lattice(base, *h, gd.rank()) != z0) return false;
  }
  return true;
}

bool check_coflabby_resolution_base(const MatrixGroup& gd, const std::vector<Vec>& base) {
  auto cl = conjugacy_classes_subgroups(gd);
  return check_coflabby_resolution_base(gd, cl.groups(), base);
}

ResolutionBase find_coflabby_resolution_base(
    const MatrixGroup& gd, const std::vector<const MatrixGroup*>& classes) {
  const int rank = gd.rank();
  std::vector<IntMatrix> z0s;
  for (const auto* h : classes) z0s.push_back(z0_lattice(*h));

  std::vector<std::vector<Vec>> orbits;
  std::vector<Vec> all;
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    const MatrixGroup& h = *classes[ci];
    IntMatrix ll = orbit_sum_lattice(all, h, rank);
    for (int i = 0; i < z0s[ci].rows(); ++i) {
      Vec v = z0s[ci].row(i);
      if (in_row_lattice(ll, v)) continue;
      std::vector<Vec> orb = vector_orbit(gd, v);
      all.insert(all.end(), orb.begin(), orb.end());
      orbits.push_back(std::move(orb));
      ll = orbit_sum_lattice(all, h, rank);
    }
  }

  // prune removable orbits, largest first (ties by least vector)
  std::vector<int> order(orbits.size());
  for (std::size_t i = 0; i < orbits.size(); ++i) order[i] = int(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (orbits[a].size() != orbits[b].size()) return orbits[a].size() > orbits[b].size();
    return orbits[a].front() < orbits[b].front();
  });
  std::vector<bool> removed(orbits.size(), false);
  for (int oi : order) {
    removed[oi] = true;
    std::vector<Vec> trial;
    for (std::size_t k = 0; k < orbits.size(); ++k)
      if (!removed[k]) trial.insert(trial.end(), orbits[k].begin(), orbits[k].end());
    bool ok = true;
    for (std::size_t ci = 0; ci < classes.size() && ok; ++ci)
      ok = orbit_sum_lattice(trial, *classes[ci], rank) == z0s[ci];
    if (!ok) removed[oi] = false;
  }

  ResolutionBase rb;
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    if (removed[k]) continue;
    for (auto& v : orbits[k]) {
      rb.vectors.push_back(std::move(v));
      rb.orbit_id.push_back(rb.num_orbits);
    }
    ++rb.num_orbits;
  }
  return rb;
}

std::vector<std::vector<Vec>> search_coflabby_resolution_base(const MatrixGroup& gd,
                                                              int orbit_budget) {
  auto cl = conjugacy_classes_subgroups(gd);
  auto classes = cl.groups();
  const int rank = gd.rank();
  std::vector<IntMatrix> z0s;
  for (const auto* h : classes) z0s.push_back(z0_lattice(*h));

  // candidate orbits: orbits of every fixed-lattice basis vector, deduplicated
  std::vector<std::vector<Vec>> orbs;
  std::set<Vec> orbit_keys;
  for (const auto& z0 : z0s)
    for (int i = 0; i < z0.rows(); ++i) {
      std::vector<Vec> o = vector_orbit(gd, z0.row(i));
      if (orbit_keys.insert(o.front()).second) orbs.push_back(std::move(o));
    }

  // per orbit and class: the orbit-sum lattice contribution
  std::vector<std::vector<IntMatrix>> imgs(orbs.size());
  for (std::size_t oi = 0; oi < orbs.size(); ++oi)
    for (std::size_t ci = 0; ci < classes.size(); ++ci)
      imgs[oi].push_back(orbit_sum_lattice(orbs[oi], *classes[ci], rank));

  std::vector<std::vector<Vec>> bases;
  std::vector<int> pick;
  auto test_subset = [&](const std::vector<int>& j) {
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
      IntMatrix stacked(0, rank);
      for (int oi : j) stacked = vstack(stacked, imgs[oi][ci]);
      if (hnf_row_basis(stacked) != z0s[ci]) return false;
    }
    return true;
  };
  // all subsets of size <= budget, sizes ascending, members ascending
  for (int sz = 1; sz <= orbit_budget && sz <= int(orbs.size()); ++sz) {
    std::vector<int> idx(sz);
    for (int i = 0; i < sz; ++i) idx[i] = i;
    for (;;) {
      if (test_subset(idx)) {
        std::vector<Vec> base;
        for (int oi : idx)
          base.insert(base.end(), orbs[oi].begin(), orbs[oi].end());
        std::sort(base.begin(), base.end());
        bases.push_back(std::move(base));
      }
      int k = sz - 1;
      while (k >= 0 && idx[k] == int(orbs.size()) - sz + k) --k;
      if (k < 0) break;
      ++idx[k];
      for (int i = k + 1; i < sz; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  std::stable_sort(bases.begin(), bases.end(),
                   [](const std::vector<Vec>& a, const std::vector<Vec>& b) {
                     return a.size() < b.size();
                   });
  return bases;
}

DualResolution dual_resolution(const MatrixGroup& g,
                               const std::optional<std::vector<Vec>>& base) {
  DualResolution dr;
  dr.gd = transposed_group(g);
  dr.classes = conjugacy_classes_subgroups(dr.gd);
  if (base) {
    for (std::size_t i = 0; i < base->size(); ++i) {
      dr.base.vectors.push_back((*base)[i]);
      dr.base.orbit_id.push_back(0);
    }
    dr.base.num_orbits = base->empty() ? 0 : 1;
  } else {
    dr.base = find_coflabby_resolution_base(dr.gd, dr.classes.groups());
  }
  dr.d = g.rank();
  dr.r = int(dr.base.vectors.size());
  dr.mi = rows_to_matrix(dr.base.vectors, dr.d);

  std::unordered_map<Vec, int, VecHash> pos;
  for (int i = 0; i < dr.r; ++i) pos.emplace(dr.base.vectors[i], i);
  for (const auto& gt : dr.gd.gens()) {
    std::vector<int> p(dr.r);
    for (int i = 0; i < dr.r; ++i) {
      auto it = pos.find(apply_right(dr.base.vectors[i], gt));
      assert(it != pos.end() && "resolution base must be action-closed");
      p[i] = it->second;
    }
    dr.perms.push_back(std::move(p));
  }

  if (dr.r > dr.d) {
    dr.ms = nullspace_int(dr.mi);
    for (const auto& p : dr.perms) {
      // ms * P(perm): column j of P(perm) picks rows i with perm[i] = j
      IntMatrix moved(dr.ms.rows(), dr.r);
      for (int c = 0; c < dr.ms.rows(); ++c)
        for (int i = 0; i < dr.r; ++i) moved.at(c, p[i]) = dr.ms.at(c, i);
      auto b = solve_left(dr.ms, moved);
      assert(b.has_value());
      dr.kmats.push_back(std::move(*b));
    }
  } else {
    dr.ms = IntMatrix(0, dr.r);
  }
  return dr;
}

namespace {

IntMatrix perm_matrix(const std::vector<int>& p) {
  IntMatrix m(int(p.size()), int(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i) m.at(int(i), p[i]) = 1;
  return m;
}

}  // namespace

FlabbyResolutionResult flabby_resolution(const MatrixGroup& g,
                                         const std::optional<std::vector<Vec>>& base) {
  DualResolution dr = dual_resolution(g, base);
  FlabbyResolutionResult res;
  res.injection = dr.mi.transpose();
  std::vector<IntMatrix> pgens, fgens;
  for (const auto& p : dr.perms) pgens.push_back(perm_matrix(p).transpose());
  res.action_p = MatrixGroup(dr.r, std::move(pgens));
  if (dr.r == dr.d) {
    res.surjection = IntMatrix(dr.r, 0);
    res.action_f = MatrixGroup(0, {});
  } else {
    res.surjection = dr.ms.transpose();
    for (const auto& k : dr.kmats) fgens.push_back(k.transpose());
    res.action_f = MatrixGroup(dr.r - dr.d, std::move(fgens));
  }
  return res;
}


namespace {

void canonical_sort(std::vector<MatrixGroup>& groups) {
  std::sort(groups.begin(), groups.end(), [](const MatrixGroup& a, const MatrixGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    auto ta = a.trace_multiset(), tb = b.trace_multiset();
    if (ta != tb)
      return std::lexicographical_compare(ta.begin(), ta.end(), tb.begin(), tb.end(),
                                          [](const Int& x, const Int& y) { return x < y; });
    return a.elements() < b.elements();
  });
}

// matrices of every gd element acting on the kernel lattice K
std::vector<IntMatrix> k_action_elements(const DualResolution& dr) {
  return element_module_matrices(dr.gd, ModuleAction{dr.r - dr.d, dr.kmats});
}

// element indices of gd acting trivially on K
std::vector<std::uint32_t> k_action_kernel(const std::vector<IntMatrix>& kelems) {
  std::vector<std::uint32_t> ker;
  for (std::uint32_t i = 0; i < kelems.size(); ++i)
    if (kelems[i].is_identity()) ker.push_back(i);
  return ker;
}

// subgroup classes of the quotient acting on K: images of the classes of gd
// containing the kernel, canonically sorted
std::vector<MatrixGroup> quotient_classes(const DualResolution& dr,
                                          const std::vector<IntMatrix>& kelems,
                                          const std::vector<std::uint32_t>& ker,
                                          bool transpose) {
  std::vector<MatrixGroup> out;
  for (const auto& c : dr.classes.classes) {
    if (!std::includes(c.rep_indices.begin(), c.rep_indices.end(), ker.begin(),
                       ker.end()))
      continue;
    std::vector<IntMatrix> gens;
    for (std::uint32_t gi : c.gen_indices)
      gens.push_back(transpose ? kelems[gi].transpose() : kelems[gi]);
    out.push_back(MatrixGroup(dr.r - dr.d, std::move(gens)));
  }
  canonical_sort(out);
  return out;
}

}  // namespace

QuotientContext f_context(const DualResolution& dr) {
  QuotientContext qc;
  const int fr = dr.r - dr.d;
  std::vector<IntMatrix> g2gens;
  for (const auto& k : dr.kmats) g2gens.push_back(k.transpose());
  qc.g2 = MatrixGroup(fr, std::move(g2gens));

  std::vector<IntMatrix> kelems = k_action_elements(dr);
  std::vector<std::uint32_t> ker = k_action_kernel(kelems);
  qc.is_quotient = ker.size() > 1;
  qc.h2 = quotient_classes(dr, kelems, ker, /*transpose=*/true);
  return qc;
}

MatrixGroup flfl(const MatrixGroup& g) {
  DualResolution dr = dual_resolution(g);
  if (dr.r == dr.d) return MatrixGroup(0, {});

  // second stage on the kernel lattice K with the quotient's subgroup classes
  MatrixGroup tg2(dr.r - dr.d, dr.kmats);
  std::vector<IntMatrix> kelems = k_action_elements(dr);
  std::vector<std::uint32_t> ker = k_action_kernel(kelems);
  std::vector<MatrixGroup> th2 = quotient_classes(dr, kelems, ker, false);
  std::vector<const MatrixGroup*> th2p;
  for (const auto& h : th2) th2p.push_back(&h);

  ResolutionBase base2 = find_coflabby_resolution_base(tg2, th2p);
  int r2 = int(base2.vectors.size());
  int d2 = dr.r - dr.d;
  if (r2 == d2) return MatrixGroup(0, {});

  IntMatrix mi2 = rows_to_matrix(base2.vectors, d2);
  IntMatrix ms2 = nullspace_int(mi2);
  std::unordered_map<Vec, int, VecHash> pos;
  for (int i = 0; i < r2; ++i) pos.emplace(base2.vectors[i], i);
  std::vector<IntMatrix> egens;
  for (const auto& kt : dr.kmats) {
    IntMatrix moved(ms2.rows(), r2);
    for (int c = 0; c < ms2.rows(); ++c)
      for (int i = 0; i < r2; ++i) {
        auto it = pos.find(apply_right(base2.vectors[i], kt));
        assert(it != pos.end());
        moved.at(c, it->second) = ms2.at(c, i);
      }
    auto b = solve_left(ms2, moved);
    assert(b.has_value());
    egens.push_back(b->transpose());
  }
  return MatrixGroup(r2 - d2, std::move(egens));
}

namespace {

// Decide whether an equivariant section pi with pi ∘ iota = id exists, where
// iota = miT embeds the target module into the permutation module whose basis
// is permuted by `perms` (one permutation per generator, matching `targets`).
bool section_exists(const std::vector<std::vector<int>>& perms,
                    const std::vector<IntMatrix>& targets, const IntMatrix& miT) {
  const int r = miT.cols();
  const int d = miT.rows();
  std::vector<bool> seen(r, false);
  std::vector<Vec> eq_rows;
  for (int p0 = 0; p0 < r; ++p0) {
    if (seen[p0]) continue;
    // transversal with the matrix carrying p0 to each point
    std::vector<int> pts{p0};
    std::vector<IntMatrix> word{IntMatrix::identity(d)};
    std::vector<int> slot(r, -1);
    slot[p0] = 0;
    seen[p0] = true;
    std::vector<IntMatrix> stab;
    for (std::size_t head = 0; head < pts.size(); ++head) {
      for (std::size_t k = 0; k < perms.size(); ++k) {
        int q = perms[k][pts[head]];
        IntMatrix m = word[head] * targets[k];
        if (slot[q] < 0) {
          slot[q] = int(pts.size());
          pts.push_back(q);
          word.push_back(std::move(m));
          seen[q] = true;
        } else {
          // Schreier generator of the stabilizer of p0
          stab.push_back(m * inverse_unimodular(word[slot[q]]));
        }
      }
    }
    IntMatrix z0 = z0_lattice(stab, d);
    for (int zi = 0; zi < z0.rows(); ++zi) {
      Vec z = z0.row(zi);
      IntMatrix m2(r, d);
      for (std::size_t k = 0; k < pts.size(); ++k) {
        Vec img = apply_right(z, word[k]);
        m2.set_row(pts[k], img);
      }
      eq_rows.push_back((miT * m2).flatten());
    }
  }
  eq_rows.push_back(IntMatrix::identity(d).flatten());
  IntMatrix sys = rows_to_matrix(eq_rows, d * d);
  IntMatrix ns = nullspace_int(sys);
  Int g = 0;
  for (int i = 0; i < ns.rows(); ++i) g = gcd(g, ns.at(i, ns.cols() - 1));
  return g == 1;
}

std::vector<int> inverse_perm(const std::vector<int>& p) {
  std::vector<int> q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = int(i);
  return q;
}

}  // namespace

bool is_invertible_f(const MatrixGroup& g, const DualResolution& dr) {
  if (dr.r == dr.d) return true;

  MatrixGroup tg2(dr.r - dr.d, dr.kmats);
  std::vector<IntMatrix> kelems = k_action_elements(dr);
  std::vector<std::uint32_t> ker = k_action_kernel(kelems);
  std::vector<MatrixGroup> th2 = quotient_classes(dr, kelems, ker, false);

  // F not coflabby => not invertible
  for (const auto& h : th2)
    if (!h_minus1(h).empty()) return false;

  bool m_coflabby = true;
  for (const auto& c : dr.classes.classes)
    if (!h_minus1(c.group).empty()) { m_coflabby = false; break; }

  if (m_coflabby) {
    // 0 -> M -> P -> F -> 0 splits iff F is invertible; test a section of iota
    std::vector<std::vector<int>> rho;
    for (const auto& p : dr.perms) rho.push_back(inverse_perm(p));
    return section_exists(rho, g.gens(), dr.mi.transpose());
  }

  // second resolution 0 -> F -> Q -> E -> 0 and a section of F -> Q
  std::vector<const MatrixGroup*> th2p;
  for (const auto& h : th2) th2p.push_back(&h);
  ResolutionBase base2 = find_coflabby_resolution_base(tg2, th2p);
  int r2 = int(base2.vectors.size());
  int d2 = dr.r - dr.d;
  IntMatrix mi2 = rows_to_matrix(base2.vectors, d2);
  std::unordered_map<Vec, int, VecHash> pos;
  for (int i = 0; i < r2; ++i) pos.emplace(base2.vectors[i], i);
  std::vector<std::vector<int>> rho;
  std::vector<IntMatrix> targets;
  for (const auto& kt : dr.kmats) {
    std::vector<int> p(r2);
    for (int i = 0; i < r2; ++i) {
      auto it = pos.find(apply_right(base2.vectors[i], kt));
      assert(it != pos.end());
      p[i] = it->second;
    }
    rho.push_back(inverse_perm(p));
    targets.push_back(kt.transpose());  // the F action itself
  }
  return section_exists(rho, targets, mi2.transpose());
}

bool is_invertible_f(const MatrixGroup& g) {
  DualResolution dr = dual_resolution(g);
  return is_invertible_f(g, dr);
}

}  // namespace glat
