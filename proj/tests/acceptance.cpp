// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each check pins the reference value it verifies.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>

#include "glat/classify.hpp"
#include "glat/catalog.hpp"
#include "glat/json_io.hpp"

using namespace glat;

namespace {

int failures = 0;
std::chrono::steady_clock::time_point t_start;

void report(const std::string& name, bool ok, const std::string& note = "") {
  double el = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            t_start)
                  .count();
  std::printf("criterion %-24s %s%s%s  [t=%.1fs]\n", name.c_str(),
              ok ? "PASS" : "FAIL", note.empty() ? "" : " — ", note.c_str(), el);
  std::fflush(stdout);
  if (!ok) ++failures;
}

IntMatrix random_unimodular(std::mt19937_64& rng, int n) {
  IntMatrix u = IntMatrix::identity(n);
  for (int step = 0; step < 3 * n; ++step) {
    int i = int(rng() % n), j = int(rng() % n);
    if (i == j) continue;
    long c = long(rng() % 3) - 1;
    for (int k = 0; k < n; ++k) u.at(i, k) += c * u.at(j, k);
  }
  return u;
}

MatrixGroup conjugated(const MatrixGroup& g, const IntMatrix& q) {
  IntMatrix qi = inverse_unimodular(q);
  std::vector<IntMatrix> gens;
  for (const auto& m : g.gens()) gens.push_back(qi * m * q);
  return MatrixGroup(g.rank(), gens);
}

// ---------------------------------------------------------------------------

void criterion1_norm_one_degree5() {
  bool ok = true;
  std::string note;
  const std::pair<const char*, Verdict> expected[] = {
      {"5T1", Verdict::stably_rational},
      {"5T2", Verdict::stably_rational},
      {"5T3", Verdict::retract_not_stably},
      {"5T5", Verdict::retract_not_stably}};
  for (const auto& [key, want] : expected) {
    Classification c = classify(catalog_group(key));
    if (c.verdict != want) {
      ok = false;
      note += std::string(key) + "=" + verdict_name(c.verdict) + " ";
    }
  }
  MatrixGroup a5 = catalog_group("5T4");
  bool inv = is_invertible_f(a5);
  Classification c5 = classify(a5);
  bool a5ok = inv && (c5.verdict == Verdict::stably_rational ||
                      c5.verdict == Verdict::undecided);
  if (!a5ok) { ok = false; note += "5T4 failed"; }
  if (ok) note = std::string("5T4=") + verdict_name(c5.verdict);
  report("1 (degree-5 tori)", ok, note);
}

void criterion2_f20_obstruction() {
  auto basis = possibility_of_stably_permutation(catalog_group("5T3"),
                                                 Distinguished::F);
  bool ok = basis.size() == 1 && (basis[0] == Combo{1, 1, 0, 1, -1, 0, -2} ||
                                  basis[0] == Combo{-1, -1, 0, -1, 1, 0, 2});
  Int g = 0;
  for (const auto& c : basis) g = gcd(g, c.back());
  ok = ok && g == 2;  // no solution with b1 = ±1
  report("2 (F20 obstruction)", ok, "basis = (1,1,0,1,-1,0,-2), b1 gcd 2");
}

void criterion3_q8() {
  MatrixGroup q8 = catalog_group("8T5");
  bool ok = q8.order() == 8;
  ok = ok && !is_invertible_f(q8);
  FlabbyResolutionResult r = flabby_resolution(q8);
  ok = ok && is_flabby(r.action_f) && is_coflabby(r.action_f);
  report("3 (Q8 not invertible)", ok,
         "order 8, invertible=false, F flabby and coflabby");
}

// --- criterion 4: certificate replays --------------------------------------

const IntMatrix kP24{
    {1,-1,-1,-1,-1,-1,1,-1,-1,-1,-1,-1,-1,-1,0,-1,0,1,0,1,1,1,0,0},
    {-1,1,-1,-1,-1,-1,-1,1,-1,-1,-1,-1,-1,-1,0,0,-1,1,1,0,1,1,0,0},
    {-1,-1,1,-1,-1,-1,-1,-1,1,-1,-1,-1,0,-1,-1,1,0,-1,1,0,1,1,0,0},
    {-1,-1,-1,1,-1,-1,-1,-1,-1,1,-1,-1,0,-1,-1,1,-1,0,0,1,1,1,0,0},
    {-1,-1,-1,-1,1,-1,-1,-1,-1,-1,1,-1,-1,0,-1,0,1,-1,0,1,1,1,0,0},
    {-1,-1,-1,-1,-1,1,-1,-1,-1,-1,-1,1,-1,0,-1,-1,1,0,1,0,1,1,0,0},
    {0,0,-1,1,1,-1,-1,1,1,-1,0,0,1,0,0,-1,1,1,-1,-1,0,-1,0,0},
    {0,0,1,-1,-1,1,1,-1,0,0,1,-1,0,1,0,1,-1,1,-1,-1,-1,0,0,0},
    {-1,1,0,0,-1,1,1,-1,-1,1,0,0,0,0,1,1,1,-1,-1,-1,-1,0,0,0},
    {1,-1,0,0,1,-1,0,0,1,-1,-1,1,0,1,0,1,-1,1,-1,-1,0,-1,0,0},
    {1,-1,-1,1,0,0,-1,1,0,0,-1,1,0,0,1,1,1,-1,-1,-1,0,-1,0,0},
    {-1,1,1,-1,0,0,0,0,-1,1,1,-1,1,0,0,-1,1,1,-1,-1,-1,0,0,0},
    {1,1,0,0,1,1,1,0,0,0,0,1,-1,1,1,1,-1,-1,-1,-1,0,0,-1,0},
    {1,1,1,1,0,0,0,1,0,1,0,0,1,-1,1,-1,1,-1,-1,-1,0,0,-1,0},
    {0,0,1,1,1,1,0,0,1,0,1,0,1,1,-1,-1,-1,1,-1,-1,0,0,-1,0},
    {1,0,0,0,0,1,1,1,0,0,1,1,-1,1,1,1,-1,-1,-1,-1,0,0,0,-1},
    {0,1,0,1,0,0,1,1,1,1,0,0,1,-1,1,-1,1,-1,-1,-1,0,0,0,-1},
    {0,0,1,0,1,0,0,0,1,1,1,1,1,1,-1,-1,-1,1,-1,-1,0,0,0,-1},
    {-1,1,1,-1,-1,1,0,-1,-1,0,0,-1,-1,-1,-1,1,1,1,1,0,0,1,0,1},
    {1,-1,-1,1,1,-1,-1,0,0,-1,-1,0,-1,-1,-1,1,1,1,0,1,1,0,0,1},
    {0,-1,-1,0,0,-1,-1,1,1,-1,-1,1,-1,-1,-1,1,1,1,1,0,1,0,1,0},
    {-1,0,0,-1,-1,0,1,-1,-1,1,1,-1,-1,-1,-1,1,1,1,0,1,0,1,1,0},
    {1,1,1,1,1,1,1,1,1,1,1,1,0,0,0,1,1,1,0,0,1,1,1,1},
    {1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,0,0,0,-1,-1,-1,-1,0,0}};

void criterion4a_c6_replay() {
  MatrixGroup c6 = catalog_group("g4-14-2-2");
  BlockContext ctx = block_context(c6, Distinguished::M);
  Combo l{0, 1, 1, -1, -1};
  IntMatrix p{{1, 1, 1, 1, 1},
              {0, 0, -1, 0, -1},
              {0, 0, -1, -1, 0},
              {1, 0, -1, 0, 0},
              {0, -1, 1, 0, 0}};
  bool ok = stably_permutation_check_mat(ctx, nlist(l), plist(l), p);
  report("4a (order-6 5x5 P)", ok, "reference P verifies under check_mat");
}

// The reference 24x24 matrix certifies the permutation-lattice isomorphism
// with respect to the producing system's internal coset numbering and class
// representatives. Those are not printed, so the replay identifies classes by
// (order, structure) and searches conjugate representatives and the two
// deterministic coset orderings this library implements.
void criterion4b_d6_replay() {
  MatrixGroup d6 = catalog_group("g4-14-8-2");
  const CayleyTable& t = d6.table();
  SubgroupClassList cl = conjugacy_classes_subgroups(d6);

  auto conjugates = [&](const SubgroupClass& c) {
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint32_t x = 0; x < t.n; ++x) {
      std::vector<std::uint32_t> s;
      for (std::uint32_t e : c.rep_indices) s.push_back(t.conj(e, x));
      std::sort(s.begin(), s.end());
      if (seen.insert(s).second) out.push_back(std::move(s));
    }
    return out;
  };

  std::vector<int> c2_classes, s3_classes;
  int c22 = -1, c6i = -1, c3i = -1;
  for (std::size_t ci = 0; ci < cl.classes.size(); ++ci) {
    const auto& c = cl.classes[ci];
    if (c.subgroup_order == 2) c2_classes.push_back(int(ci));
    if (c.subgroup_order == 4) c22 = int(ci);
    if (c.subgroup_order == 3) c3i = int(ci);
    if (c.subgroup_order == 6) {
      bool cyclic = false;
      for (std::uint32_t e : c.rep_indices)
        if (t.elem_order[e] == 6) cyclic = true;
      if (cyclic) c6i = int(ci); else s3_classes.push_back(int(ci));
    }
  }
  std::vector<std::uint32_t> full(t.n), triv{t.id};
  for (std::uint32_t i = 0; i < t.n; ++i) full[i] = i;
  auto c3rep = cl.classes[c3i].rep_indices;
  auto c6rep = cl.classes[c6i].rep_indices;
  auto s3a = cl.classes[s3_classes[0]].rep_indices;
  auto s3b = cl.classes[s3_classes[1]].rep_indices;
  auto c22_conj = conjugates(cl.classes[c22]);

  auto try_config = [&](CosetOrder order,
                        const std::vector<std::vector<std::uint32_t>>& subs1,
                        const std::vector<std::vector<std::uint32_t>>& subs2) {
    for (std::size_t k = 0; k < d6.gens().size(); ++k) {
      std::vector<IntMatrix> b1, b2;
      for (const auto& s : subs1)
        b1.push_back(coset_representation_idx(d6, s, order)[k]);
      for (const auto& s : subs2)
        b2.push_back(coset_representation_idx(d6, s, order)[k]);
      IntMatrix g1 = block_diag(b1), g2 = block_diag(b2);
      if (g1 * kP24 != kP24 * g2) return false;
    }
    return true;
  };

  bool ok = is_unimodular(kP24);
  bool matched = false;
  std::vector<int> perm = {0, 1, 2};
  std::sort(perm.begin(), perm.end());
  for (CosetOrder order : {CosetOrder::least_element, CosetOrder::subgroup_first}) {
    do {
      for (const auto& r2a : conjugates(cl.classes[c2_classes[perm[0]]]))
        for (const auto& r2b : conjugates(cl.classes[c2_classes[perm[1]]]))
          for (const auto& r2c : conjugates(cl.classes[c2_classes[perm[2]]]))
            for (const auto& r22 : c22_conj)
              for (int s3swap = 0; s3swap < 2 && !matched; ++s3swap) {
                std::vector<std::vector<std::uint32_t>> subs1{r2a,  r2b, r2c,
                                                              c3rep, full, full};
                std::vector<std::vector<std::uint32_t>> subs2{
                    triv, r22, r22, c6rep, s3swap ? s3b : s3a,
                    s3swap ? s3a : s3b};
                matched = try_config(order, subs1, subs2);
              }
    } while (!matched && std::next_permutation(perm.begin(), perm.end()));
    if (matched) break;
  }
  report("4b (D6 24x24 P)", ok && matched,
         "reference P verifies after class re-identification");
}

void criterion4c_rank5_replay() {
  MatrixGroup g = catalog_group("ks5-xy");
  IntMatrix printed{{0, 0, 1, 0, 1},
                    {0, 0, 1, 1, 0},
                    {0, -1, 1, 0, 0},
                    {1, 0, -1, 0, 0},
                    {0, 0, 0, 0, 1}};
  IntMatrix block_x{{0, 1, 0, 0, 0},
                    {0, 0, 1, 0, 0},
                    {1, 0, 0, 0, 0},
                    {0, 0, 0, 0, 1},
                    {0, 0, 0, 1, 0}};
  IntMatrix block_y{{0, 1, 0, 0, 0},
                    {1, 0, 0, 0, 0},
                    {0, 0, 1, 0, 0},
                    {0, 0, 0, 1, 0},
                    {0, 0, 0, 0, 1}};
  auto verifies = [&](const IntMatrix& p) {
    return is_unimodular(p) && g.gens()[0] * p == p * block_x &&
           g.gens()[1] * p == p * block_y;
  };
  bool literal = verifies(printed);
  report("4c (rank-5 printed P)", literal,
         literal ? "" : "reference matrix fails the conjugation identity "
                        "(defective last row; see the corrected check below)");
  // supplementary: the same matrix with the last row replaced certifies the
  // 3+2 decomposition, so the example's claim itself is machine-checked
  IntMatrix corrected = printed;
  corrected.set_row(4, {Int(1), Int(1), Int(1), Int(1), Int(1)});
  report("4c-corrected (info)", verifies(corrected),
         "one-row correction verifies the 3+2 block decomposition");
}

void criterion5_flfl() {
  bool wb3 = flfl(catalog_group("wb3")).rank() == 0;
  bool wb4 = flfl(catalog_group("wb4")).rank() == 0;
  report("5 (flfl trivial)", wb3 && wb4, "W(B3) and W(B4)");
}

void criterion6_class_counts() {
  std::size_t f20 = conjugacy_classes_subgroups(catalog_group("5T3")).classes.size();
  std::size_t s5 = conjugacy_classes_subgroups(catalog_group("5T5")).classes.size();
  std::size_t wb4 = conjugacy_classes_subgroups(catalog_group("wb4")).classes.size();
  bool ok = f20 == 6 && s5 == 19 && wb4 == 193;
  char buf[96];
  std::snprintf(buf, sizeof buf, "F20=%zu, S5=%zu, W(B4)=%zu", f20, s5, wb4);
  report("6 (subgroup classes)", ok, buf);
}

void criterion7_not_invertible() {
  bool ok = !is_invertible_f(catalog_group("rk6-c2xc2")) &&
            !is_invertible_f(catalog_group("rk9-c2xc2")) &&
            !is_invertible_f(catalog_group("rk9-c2xc2xc2"));
  report("7 (fixed-field lattices)", ok,
         "rank-6 pair and both rank-9 tuples: invertible=false");
}

void criterion8_h2_distinguisher() {
  MatrixGroup f20 = catalog_group("5T3");
  BlockContext ctx = block_context(f20, Distinguished::F);
  Combo l{1, 1, 0, 1, -1, 0, -2};
  auto [g1, g2] = stably_permutation_check_gen(ctx, nlist(l), plist(l));
  MatrixGroup m1(34, g1), m2(34, g2);
  TateGroup a = tate(m1, 2), b = tate(m2, 2);
  bool ok = a == TateGroup{2} && b == TateGroup{10};
  report("8 (H^2 distinguisher)", ok, "rank-34 sides give Z/2 vs Z/10");
}

void criterion9_property_suite() {
  bool ok = true;
  // free-module vanishing for C2, C3, S3, Q8
  std::vector<MatrixGroup> base{
      MatrixGroup(1, {IntMatrix{{-1}}}),
      MatrixGroup(2, {IntMatrix{{0, 1}, {-1, -1}}}),
      MatrixGroup(2, {IntMatrix{{0, 1}, {-1, -1}}, IntMatrix{{0, 1}, {1, 0}}}),
      catalog_group("8T5")};
  for (const auto& g : base) {
    auto reg = coset_representation(g, MatrixGroup(g.rank(), {}));
    MatrixGroup regular(int(g.order()), reg);
    for (int n = -3; n <= 3; ++n)
      if (!tate(regular, n).empty()) ok = false;
  }
  // trivial module: H^0 = Z/|G| for groups of order <= 24
  {
    auto wb3cl = conjugacy_classes_subgroups(catalog_group("wb3"));
    int tested = 0;
    for (const auto& c : wb3cl.classes) {
      if (c.subgroup_order < 2 || c.subgroup_order > 24) continue;
      ModuleAction triv{1, std::vector<IntMatrix>(c.group.gens().size(),
                                                  IntMatrix{{1}})};
      if (h0(c.group, triv) != TateGroup{Int(long(c.subgroup_order))}) ok = false;
      ++tested;
    }
    for (const char* k : {"8T5", "5T3", "4T5", "6T5"}) {
      MatrixGroup g = catalog_group(k);
      ModuleAction triv{1,
                        std::vector<IntMatrix>(g.gens().size(), IntMatrix{{1}})};
      if (h0(g, triv) != TateGroup{Int(long(g.order()))}) ok = false;
      ++tested;
    }
    if (tested < 20) ok = false;
  }
  // cyclic 2-periodicity on 50 random lattices of rank <= 3
  {
    std::mt19937_64 rng(20260810);
    std::vector<MatrixGroup> cyc{
        MatrixGroup(1, {IntMatrix{{-1}}}),
        MatrixGroup(2, {IntMatrix{{0, 1}, {-1, -1}}}),
        MatrixGroup(2, {IntMatrix{{0, 1}, {-1, 0}}}),
        MatrixGroup(2, {IntMatrix{{0, -1}, {1, 1}}}),
        MatrixGroup(3, {IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}}),
        MatrixGroup(3, {IntMatrix{{0, 1, 0}, {-1, 0, 0}, {0, 0, -1}}})};
    for (int trial = 0; trial < 50; ++trial) {
      const MatrixGroup& b = cyc[trial % cyc.size()];
      MatrixGroup m = conjugated(b, random_unimodular(rng, b.rank()));
      for (int n = -3; n <= 1; ++n)
        if (tate(m, n) != tate(m, n + 2)) ok = false;
    }
  }
  // duality on 50 random cases
  {
    std::mt19937_64 rng(424242);
    std::vector<MatrixGroup> pool{
        MatrixGroup(1, {IntMatrix{{-1}}}),
        MatrixGroup(2, {IntMatrix{{0, 1}, {-1, -1}}, IntMatrix{{0, 1}, {1, 0}}}),
        catalog_group("g4-14-2-2"),
        catalog_group("g4-14-8-2"),
        catalog_group("5T2"),
        MatrixGroup(2, {IntMatrix{{0, 1}, {-1, 0}}})};
    for (int trial = 0; trial < 50; ++trial) {
      const MatrixGroup& b = pool[trial % pool.size()];
      MatrixGroup m = conjugated(b, random_unimodular(rng, b.rank()));
      if (h1(m) != h_minus1(dual_lattice(m))) ok = false;
      if (h_minus1(m) != h1(dual_lattice(m))) ok = false;
    }
  }
  report("9 (cohomology properties)", ok,
         "free vanishing, H^0 sizes, periodicity, duality");
}

void criterion10_rank2_sweep() {
  bool ok = true;
  int count = 0;
  for (const char* k : {"wb2", "c2xwa2"}) {
    auto cl = conjugacy_classes_subgroups(catalog_group(k));
    for (const auto& c : cl.classes) {
      if (classify(c.group).verdict != Verdict::stably_rational) ok = false;
      ++count;
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%d classes all stably rational", count);
  report("10 (rank-2 sweep)", ok, buf);
}

void criterion11_rank3_sweep() {
  bool ok = true;
  int count = 0, nonretract = 0;
  for (const char* k : {"wb3", "c2xwa3-a", "c2xwa3-b"}) {
    auto cl = conjugacy_classes_subgroups(catalog_group(k));
    for (const auto& c : cl.classes) {
      Verdict v = classify(c.group).verdict;
      if (v != Verdict::stably_rational && v != Verdict::not_retract) ok = false;
      if (v == Verdict::not_retract) ++nonretract;
      ++count;
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%d classes, %d not retract, none undecided",
                count, nonretract);
  report("11 (rank-3 sweep)", ok, buf);
}

void criterion12_determinism() {
  bool ok = true;
  for (const char* k : {"5T3", "5T4", "g4-14-8-2"}) {
    MatrixGroup g = catalog_group(k);
    ClassifyOptions opt;
    opt.seed = 7;
    Classification a = classify(g, opt);
    Classification b = classify(g, opt);
    if (a.verdict != b.verdict || a.evidence.dump() != b.evidence.dump()) ok = false;
  }
  auto p1 = possibility_of_stably_permutation(catalog_group("5T3"), Distinguished::F);
  auto p2 = possibility_of_stably_permutation(catalog_group("5T3"), Distinguished::F);
  if (p1 != p2) ok = false;
  report("12 (determinism)", ok, "repeated runs byte-identical");
}

}  // namespace

int main() {
  t_start = std::chrono::steady_clock::now();
  criterion1_norm_one_degree5();
  criterion2_f20_obstruction();
  criterion3_q8();
  criterion4a_c6_replay();
  criterion4b_d6_replay();
  criterion4c_rank5_replay();
  criterion5_flfl();
  criterion6_class_counts();
  criterion7_not_invertible();
  criterion8_h2_distinguisher();
  criterion9_property_suite();
  criterion10_rank2_sweep();
  criterion11_rank3_sweep();
  criterion12_determinism();
  std::printf("%d criterion check(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
