#include "glat/classify.hpp"

#include <algorithm>
#include <set>
#include <cassert>

namespace glat {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::stably_rational: return "stably_rational";
    case Verdict::retract_not_stably: return "retract_not_stably";
    case Verdict::not_retract: return "not_retract";
    default: return "undecided";
  }
}

namespace {

json combo_json(const Combo& c) {
  json a = json::array();
  for (const auto& x : c) a.push_back(x.get_str());
  return a;
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Int b1_gcd(const std::vector<Combo>& basis) {
  Int g = 0;
  for (const auto& c : basis) g = gcd(g, c.back());
  return g;
}

// some combo in the span with b_1 = 1, reduced a little against the
// b_1 = 0 part of the basis
std::optional<Combo> combo_with_unit_b1(const std::vector<Combo>& basis) {
  if (basis.empty()) return std::nullopt;
  const std::size_t n = basis[0].size();
  Combo acc(n, Int(0));
  Int g = 0;
  for (const auto& c : basis) {
    if (c.back() == 0) continue;
    Int ng, s, t;
    mpz_gcdext(ng.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(),
               c.back().get_mpz_t());
    for (std::size_t i = 0; i < n; ++i) acc[i] = s * acc[i] + t * c[i];
    g = ng;
    if (g == 1) break;
  }
  if (g != 1) return std::nullopt;
  // greedy size reduction with the b_1 = 0 rows
  for (int pass = 0; pass < 4; ++pass) {
    for (const auto& c : basis) {
      if (c.back() != 0) continue;
      // minimize the L1 norm of acc + q*c over small q
      auto l1 = [&](const Combo& v) {
        Int s = 0;
        for (const auto& x : v) s += abs(x);
        return s;
      };
      Combo best = acc;
      Int bestn = l1(acc);
      for (long q = -3; q <= 3; ++q) {
        if (q == 0) continue;
        Combo trial = acc;
        for (std::size_t i = 0; i < n; ++i) trial[i] += q * c[i];
        if (l1(trial) < bestn) { best = trial; bestn = l1(best); }
      }
      acc = best;
    }
  }
  return acc;
}

// Try to certify [F] = 0 for the given block context: assemble candidate
// combos with b1 = ±1 (with small permutation paddings) and run the
// exhaustive/seeded unimodular searches over the intertwiner lattice.
bool search_certificates(const BlockContext& ctx, const std::vector<Combo>& basis,
                         const ClassifyOptions& opt, Classification& cl,
                         const std::string& stage,
                         const std::vector<Vec>* base = nullptr) {
  std::vector<Combo> candidates;
  if (auto u = combo_with_unit_b1(basis)) candidates.push_back(*u);
  for (const auto& c : basis)
    if (c.back() == 1 || c.back() == -1) candidates.push_back(c);

  const int r = int(ctx.h2.size());
  for (const Combo& cand : candidates) {
    for (int pad = 0; pad <= opt.max_paddings; ++pad) {
      Combo c1 = nlist(cand), c2 = plist(cand);
      if (pad > 0 && !ctx.trivial_resolution) {
        // add the same small permutation lattice to both sides
        int cls = r - pad;
        if (cls < 0) break;
        c1[cls] += 1;
        c2[cls] += 1;
      }
      Int total = 0;
      for (int i = 0; i <= r && !ctx.trivial_resolution; ++i)
        total += c1[i] * ctx.block_ranks[i];
      if (total > opt.combo_rank_cap) continue;
      std::vector<IntMatrix> bp;
      try {
        bp = stably_permutation_check_p(ctx, c1, c2);
      } catch (const Error&) {
        continue;
      }
      if (bp.empty()) continue;
      std::optional<SearchResult> hit;
      std::string how;
      if (int(bp.size()) <= opt.exhaustive_cap) {
        SearchStrategy s;
        s.exhaustive = true;
        s.coeff_set = {0, 1};
        hit = unimodular_search(bp, s);
        how = "exhaustive01";
        if (!hit && int(bp.size()) <= opt.exhaustive_cap - 4) {
          s.coeff_set = {-1, 0, 1};
          hit = unimodular_search(bp, s);
          how = "exhaustive-101";
        }
      }
      if (!hit) {
        for (auto coeffs : {std::vector<long>{0, 1}, std::vector<long>{-1, 0, 1},
                            std::vector<long>{-1, 0, 1, 2}}) {
          SearchStrategy s;
          s.coeff_set = coeffs;
          s.trials = opt.trials;
          s.seed = opt.seed;
          hit = unimodular_search(bp, s);
          if (hit) {
            how = "random";
            break;
          }
        }
      }
      if (hit && stably_permutation_check_mat(ctx, c1, c2, hit->matrix)) {
        json coeffs = json::array();
        for (const auto& x : hit->coefficients) coeffs.push_back(x.get_str());
        json record = {{"step", "certificate"},
                       {"stage", stage},
                       {"c1", combo_json(c1)},
                       {"c2", combo_json(c2)},
                       {"search", how},
                       {"seed", opt.seed},
                       {"trial", hit->trial_index},
                       {"coefficients", coeffs},
                       {"P", matrix_json(hit->matrix)}};
        if (base) {
          json rows = json::array();
          for (const auto& v : *base) {
            json row = json::array();
            for (const auto& x : v) row.push_back(x.get_str());
            rows.push_back(std::move(row));
          }
          record["base"] = std::move(rows);
        }
        cl.evidence.push_back(std::move(record));
        cl.verdict = Verdict::stably_rational;
        return true;
      }
    }
  }
  return false;
}

}  // namespace

Classification classify(const MatrixGroup& g, const ClassifyOptions& opt) {
  Classification cl;
  try {
    DualResolution dr = dual_resolution(g);
    cl.evidence.push_back({{"step", "resolution"},
                           {"rank_p", dr.r},
                           {"rank_f", dr.r - dr.d}});

    bool inv = is_invertible_f(g, dr);
    cl.evidence.push_back({{"step", "invertible"}, {"value", inv}});
    if (!inv) {
      cl.verdict = Verdict::not_retract;
      return cl;
    }

    MatrixGroup e = flfl(g);
    cl.evidence.push_back({{"step", "flfl"}, {"rank", e.rank()}});
    if (e.rank() == 0) {
      cl.verdict = Verdict::stably_rational;
      return cl;
    }

    BlockContext ctx = block_context_from(g, dr);
    std::vector<Combo> basis = possibility_of_stably_permutation(ctx);
    Int bg = b1_gcd(basis);
    json jb = json::array();
    for (const auto& c : basis) jb.push_back(combo_json(c));
    cl.evidence.push_back(
        {{"step", "possibility"}, {"basis", jb}, {"b1_gcd", bg.get_str()}});
    if (bg != 1) {
      cl.verdict = Verdict::retract_not_stably;
      return cl;
    }

    // restriction obstruction: if F restricted to some subgroup class is not
    // stably permutation, neither is F
    if (!ctx.trivial_resolution) {
      for (std::size_t j = 0; j + 1 < ctx.h2.size(); ++j) {
        const MatrixGroup& h = ctx.h2[j];
        if (h.order() <= 1) continue;
        std::vector<Combo> hb =
            possibility_of_stably_permutation(h, Distinguished::M);
        Int hg = b1_gcd(hb);
        if (hg != 1) {
          cl.evidence.push_back({{"step", "restriction_obstruction"},
                                 {"subgroup_class", int(j)},
                                 {"subgroup_order", h.order()},
                                 {"b1_gcd", hg.get_str()}});
          cl.verdict = Verdict::retract_not_stably;
          return cl;
        }
      }
    }

    // certificate search (Method II with seeded unimodular search), first on
    // the default resolution, then on smaller Method III bases
    if (search_certificates(ctx, basis, opt, cl, "default")) return cl;

    if (!ctx.trivial_resolution && opt.orbit_budget > 0) {
      auto bases = search_coflabby_resolution_base(transposed_group(g),
                                                   opt.orbit_budget);
      int tried = 0;
      std::set<std::size_t> sizes_seen{std::size_t(dr.r)};
      for (const auto& b : bases) {
        if (!sizes_seen.insert(b.size()).second) continue;  // one per size
        if (++tried > opt.max_alternate_bases) break;
        DualResolution dr2 = dual_resolution(g, b);
        BlockContext ctx2 = block_context_from(g, dr2);
        std::vector<Combo> basis2 = possibility_of_stably_permutation(ctx2);
        Int bg2 = b1_gcd(basis2);
        if (bg2 != 1) {
          cl.evidence.push_back({{"step", "possibility_alternate_base"},
                                 {"base_size", b.size()},
                                 {"b1_gcd", bg2.get_str()}});
          cl.verdict = Verdict::retract_not_stably;
          return cl;
        }
        if (search_certificates(ctx2, basis2, opt, cl,
                                "base" + std::to_string(b.size()), &b))
          return cl;
      }
    }
    cl.evidence.push_back({{"step", "search_exhausted"}});
    cl.verdict = Verdict::undecided;
  } catch (const BudgetExceeded& e) {
    cl.evidence.push_back({{"step", "budget_exceeded"}, {"what", e.what()}});
    cl.verdict = Verdict::undecided;
  } catch (const DepthExceeded& e) {
    cl.evidence.push_back({{"step", "depth_exceeded"}, {"what", e.what()}});
    cl.verdict = Verdict::undecided;
  }
  return cl;
}

namespace {

// generator-image tuples that extend to isomorphisms g1 -> g2
struct IsoEnumerator {
  const MatrixGroup& g1;
  const MatrixGroup& g2;
  std::vector<std::uint32_t> gen_idx;  // generator indices inside g1

  IsoEnumerator(const MatrixGroup& a, const MatrixGroup& b) : g1(a), g2(b) {
    const CayleyTable& t1 = g1.table();
    gen_idx = greedy_generators(t1, [&] {
      std::vector<std::uint32_t> all(t1.n);
      for (std::uint32_t i = 0; i < t1.n; ++i) all[i] = i;
      return all;
    }());
  }

  // verify the generator assignment extends to an isomorphism; images indexed
  // into g2's element list
  bool extends(const std::vector<std::uint32_t>& images,
               std::vector<std::uint32_t>& full_map) {
    const CayleyTable& t1 = g1.table();
    const CayleyTable& t2 = g2.table();
    full_map.assign(t1.n, UINT32_MAX);
    full_map[t1.id] = t2.id;
    std::vector<std::uint32_t> frontier{t1.id};
    std::vector<bool> hit(t2.n, false);
    hit[t2.id] = true;
    while (!frontier.empty()) {
      std::uint32_t x = frontier.back();
      frontier.pop_back();
      for (std::size_t k = 0; k < gen_idx.size(); ++k) {
        std::uint32_t y = t1.mul(x, gen_idx[k]);
        std::uint32_t fy = t2.mul(full_map[x], images[k]);
        if (full_map[y] == UINT32_MAX) {
          if (hit[fy]) return false;  // not injective
          full_map[y] = fy;
          hit[fy] = true;
          frontier.push_back(y);
        } else if (full_map[y] != fy) {
          return false;  // not well defined
        }
      }
    }
    // multiplicativity on all pairs (x, gen) already holds by construction;
    // check the remaining products
    for (std::uint32_t x = 0; x < t1.n; ++x)
      for (std::size_t k = 0; k < gen_idx.size(); ++k)
        if (full_map[t1.mul(gen_idx[k], x)] != t2.mul(images[k], full_map[x]))
          return false;
    return true;
  }
};

}  // namespace

ZConjResult z_conjugacy_search(const MatrixGroup& g1, const MatrixGroup& g2,
                               const ZConjOptions& opt) {
  ZConjResult res;
  if (g1.rank() != g2.rank())
    throw RankMismatch("conjugacy search needs equal ranks");
  if (g1.order() != g2.order()) {
    res.outcome = ZConjOutcome::disproved;
    res.reason = "order mismatch";
    return res;
  }
  if (g1.trace_multiset() != g2.trace_multiset()) {
    res.outcome = ZConjOutcome::disproved;
    res.reason = "trace multiset mismatch";
    return res;
  }
  if (g1.order() <= 200) {
    // certified obstruction from conjugation invariants of the class list
    auto fingerprint = [](const MatrixGroup& g) {
      std::vector<std::string> fp;
      for (const auto& c : conjugacy_classes_subgroups(g).classes) {
        std::string s = std::to_string(c.subgroup_order) + "/" +
                        std::to_string(c.class_size);
        for (const auto& d : h_minus1(c.group)) s += " -1:" + d.get_str();
        for (const auto& d : h1(c.group)) s += " +1:" + d.get_str();
        for (const auto& d : h0(c.group)) s += " 0:" + d.get_str();
        fp.push_back(std::move(s));
      }
      std::sort(fp.begin(), fp.end());
      return fp;
    };
    if (fingerprint(g1) != fingerprint(g2)) {
      res.outcome = ZConjOutcome::disproved;
      res.reason = "subgroup cohomology fingerprint mismatch";
      return res;
    }
  }

  IsoEnumerator en(g1, g2);
  const CayleyTable& t2 = g2.table();
  const auto& el1 = g1.elements();
  const auto& el2 = g2.elements();
  const std::size_t k = en.gen_idx.size();

  // candidate images must match order and trace of the generator
  std::vector<std::vector<std::uint32_t>> cand(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::uint32_t gi = en.gen_idx[i];
    Int tr = el1[gi].trace();
    std::uint32_t od = g1.table().elem_order[gi];
    for (std::uint32_t x = 0; x < t2.n; ++x)
      if (t2.elem_order[x] == od && el2[x].trace() == tr) cand[i].push_back(x);
    if (cand[i].empty()) {
      res.outcome = ZConjOutcome::disproved;
      res.reason = "no candidate image for a generator";
      return res;
    }
  }

  bool all_zero = true;
  bool exhausted = true;
  std::vector<std::uint32_t> pick(k, 0);
  std::vector<std::uint32_t> images(k), full_map;
  std::uint64_t examined = 0;
  for (;;) {
    if (examined++ > opt.candidate_cap) {
      exhausted = false;
      break;
    }
    for (std::size_t i = 0; i < k; ++i) images[i] = cand[i][pick[i]];
    if (en.extends(images, full_map)) {
      std::vector<IntMatrix> l1, l2;
      for (std::size_t i = 0; i < k; ++i) {
        l1.push_back(el1[en.gen_idx[i]]);
        l2.push_back(el2[images[i]]);
      }
      if (l1.empty()) {  // trivial group
        res.outcome = ZConjOutcome::found;
        res.conjugator = IntMatrix::identity(g1.rank());
        return res;
      }
      auto tm = transformation_mat(l1, l2);
      if (!tm.empty()) {
        all_zero = false;
        SearchStrategy s;
        if (int(tm.size()) <= opt.exhaustive_cap) {
          s.exhaustive = true;
          s.coeff_set = {-1, 0, 1};
        } else {
          s.coeff_set = {-1, 0, 1};
          s.trials = opt.trials;
          s.seed = opt.seed;
        }
        if (auto hit = unimodular_search(tm, s)) {
          res.outcome = ZConjOutcome::found;
          res.conjugator = hit->matrix;
          return res;
        }
      }
    }
    // advance odometer
    std::size_t pos = 0;
    while (pos < k && ++pick[pos] == cand[pos].size()) {
      pick[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
  if (exhausted && all_zero) {
    res.outcome = ZConjOutcome::disproved;
    res.reason = "no generator correspondence admits a nonzero intertwiner";
    return res;
  }
  res.outcome = ZConjOutcome::inconclusive;
  res.reason = exhausted ? "no unimodular intertwiner found within budget"
                         : "candidate budget exhausted";
  return res;
}

std::vector<ScanEntry> flabby_coflabby_scan(const std::vector<MatrixGroup>& maximal) {
  std::vector<ScanEntry> out;
  for (std::size_t mi = 0; mi < maximal.size(); ++mi) {
    SubgroupClassList cl = conjugacy_classes_subgroups(maximal[mi]);
    for (std::size_t ci = 0; ci < cl.classes.size(); ++ci) {
      const MatrixGroup& h = cl.classes[ci].group;
      ScanEntry e;
      e.maximal_index = int(mi);
      e.class_index = int(ci);
      e.order = h.order();
      bool quick_f = h_minus1(h).empty();
      bool quick_c = h1(h).empty();
      if (quick_f || quick_c) {
        // structural prefilter before the full subgroup sweep
        MatrixGroup der = derived_subgroup(h);
        MatrixGroup cen = centre(h);
        MatrixGroup syl = sylow_subgroup(h, Int(2));
        for (const MatrixGroup* s : {&der, &cen, &syl}) {
          quick_f = quick_f && h_minus1(*s).empty();
          quick_c = quick_c && h1(*s).empty();
        }
      }
      if (quick_f || quick_c) {
        SubgroupClassList sub = conjugacy_classes_subgroups(h);
        e.flabby = quick_f && is_flabby(sub);
        e.coflabby = quick_c && is_coflabby(sub);
      } else {
        e.flabby = false;
        e.coflabby = false;
      }
      out.push_back(e);
    }
  }
  return out;
}

}  // namespace glat
