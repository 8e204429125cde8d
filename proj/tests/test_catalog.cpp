#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "glat/classify.hpp"
#include "glat/catalog.hpp"

using namespace glat;

TEST_CASE("norm-one construction") {
  MatrixGroup j5 = catalog_group("5T1");
  CHECK(j5.rank() == 4);
  CHECK(j5.order() == 5);
  CHECK(j5.gens()[0] ==
        IntMatrix{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, -1, -1, -1}});

  MatrixGroup j2 = catalog_group("2T1");
  CHECK(j2.rank() == 1);
  CHECK(j2.gens()[0] == IntMatrix{{-1}});

  MatrixGroup q8 = catalog_group("8T5");
  CHECK(q8.order() == 8);
  CHECK(derived_subgroup(q8).order() == 2);
  // quaternion: a unique involution
  int involutions = 0;
  for (const auto& e : q8.elements())
    if (!e.is_identity() && (e * e).is_identity()) ++involutions;
  CHECK(involutions == 1);

  PermGroupSpec bad{"bad", 4, {{2, 1, 3, 4}}};
  CHECK(!is_transitive(bad));
  CHECK_THROWS_AS(norm1_torus_j(bad), NotTransitive);
}

TEST_CASE("transitive specs have the right orders") {
  const std::pair<const char*, std::uint64_t> expected[] = {
      {"2T1", 2},  {"3T1", 3},  {"3T2", 6},   {"4T1", 4},  {"4T2", 4},
      {"4T3", 8},  {"4T4", 12}, {"4T5", 24},  {"5T1", 5},  {"5T2", 10},
      {"5T3", 20}, {"5T4", 60}, {"5T5", 120}, {"6T1", 6},  {"6T2", 6},
      {"6T3", 12}, {"6T4", 12}, {"6T5", 18},  {"6T6", 24}, {"6T7", 24},
      {"6T8", 24}, {"6T9", 36}, {"6T10", 36}, {"6T11", 48}, {"6T12", 60},
      {"6T13", 72}, {"6T14", 120}, {"6T15", 360}, {"6T16", 720}, {"8T5", 8}};
  for (const auto& [key, order] : expected) {
    const auto& e = catalog_get(key);
    REQUIRE(std::holds_alternative<PermGroupSpec>(e));
    const auto& spec = std::get<PermGroupSpec>(e);
    CHECK(is_transitive(spec));
    MatrixGroup g = norm1_torus_j(spec);
    CHECK(g.order() == order);   // norm-one lattice has the full group order
    CHECK(g.rank() == spec.degree - 1);
  }
}

TEST_CASE("catalog matrix entries") {
  CHECK(catalog_group("wb2").order() == 8);
  CHECK(catalog_group("c2xwa2").order() == 12);
  CHECK(catalog_group("wb3").order() == 48);
  CHECK(catalog_group("c2xwa3-a").order() == 48);
  CHECK(catalog_group("c2xwa3-b").order() == 48);
  CHECK(catalog_group("wb4").order() == 384);
  CHECK(catalog_group("g4-14-2-2").order() == 6);
  CHECK(catalog_group("g4-14-2-2").gens()[0] ==
        IntMatrix{{0, 1, 0, 1}, {1, 0, 0, 1}, {0, 0, 0, 1}, {0, 0, -1, -1}});
  CHECK(catalog_group("rk9-c2xc2").order() == 4);
  CHECK(catalog_group("rk9-c2xc2xc2").order() == 8);
  CHECK_THROWS_AS(catalog_get("nonsense"), UnknownKey);
}

TEST_CASE("the three rank-3 maximal groups are pairwise non-conjugate") {
  MatrixGroup a = catalog_group("wb3"), b = catalog_group("c2xwa3-a"),
              c = catalog_group("c2xwa3-b");
  CHECK(a.trace_multiset() == b.trace_multiset());
  // same Q-class, different Z-classes: conjugacy search must not find any
  for (auto [x, y] : {std::pair{&a, &b}, {&a, &c}, {&b, &c}}) {
    ZConjResult r = z_conjugacy_search(*x, *y);
    CHECK(r.outcome != ZConjOutcome::found);
  }
}

TEST_CASE("dual lattice") {
  MatrixGroup perm(3, {IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}});
  CHECK(dual_lattice(perm).same_elements(perm));
  MatrixGroup sign(1, {IntMatrix{{-1}}});
  CHECK(dual_lattice(sign).same_elements(sign));
  MatrixGroup c3(2, {IntMatrix{{0, 1}, {-1, -1}}});
  CHECK(dual_lattice(dual_lattice(c3)).same_elements(c3));
}

TEST_CASE("z-conjugacy search") {
  MatrixGroup j5 = catalog_group("5T1");
  ZConjResult self = z_conjugacy_search(j5, j5);
  CHECK(self.outcome == ZConjOutcome::found);

  // a constructed conjugate is found
  IntMatrix q{{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}};
  REQUIRE(is_unimodular(q));
  IntMatrix qi = inverse_unimodular(q);
  MatrixGroup conj(4, {q * j5.gens()[0] * qi});
  ZConjResult r = z_conjugacy_search(conj, j5);
  REQUIRE(r.outcome == ZConjOutcome::found);
  REQUIRE(r.conjugator.has_value());
  CHECK(is_unimodular(*r.conjugator));

  // sign lattice vs the trivial group: certified mismatch
  MatrixGroup sign(1, {IntMatrix{{-1}}});
  MatrixGroup triv(1, {});
  CHECK(z_conjugacy_search(sign, triv).outcome == ZConjOutcome::disproved);

  // same abstract group, dual non-isomorphic lattice: C4 vs its twist
  MatrixGroup c4a(2, {IntMatrix{{0, 1}, {-1, 0}}});
  MatrixGroup c2d(2, {IntMatrix{{-1, 0}, {0, -1}}});
  CHECK(z_conjugacy_search(c4a, c2d).outcome == ZConjOutcome::disproved);
}

TEST_CASE("classification of small catalog entries") {
  Classification c1 = classify(catalog_group("5T1"));
  CHECK(c1.verdict == Verdict::stably_rational);

  Classification c3 = classify(catalog_group("5T3"));
  CHECK(c3.verdict == Verdict::retract_not_stably);

  Classification c4 = classify(catalog_group("6T4"));
  CHECK(c4.verdict == Verdict::not_retract);
}

TEST_CASE("classification is invariant under unimodular conjugation") {
  MatrixGroup g = catalog_group("5T3");
  IntMatrix q{{1, 0, 1, 0}, {0, 1, 0, 0}, {0, -1, 1, 0}, {1, 0, 0, 1}};
  REQUIRE(is_unimodular(q));
  IntMatrix qi = inverse_unimodular(q);
  std::vector<IntMatrix> gens;
  for (const auto& m : g.gens()) gens.push_back(q * m * qi);
  Classification c = classify(MatrixGroup(4, gens));
  CHECK(c.verdict == Verdict::retract_not_stably);
}

TEST_CASE("flabby-coflabby scan tags") {
  auto entries = flabby_coflabby_scan({catalog_group("g4-14-8-2")});
  bool found_c6 = false;
  for (const auto& e : entries) {
    if (e.order == 1) {
      CHECK(e.flabby);
      CHECK(e.coflabby);
    }
    if (e.order == 6 && e.flabby && e.coflabby) found_c6 = true;
  }
  CHECK(found_c6);
}

TEST_CASE("classification invariance for more catalog groups") {
  std::mt19937_64 rng(31415);
  for (const char* key : {"5T1", "8T5"}) {
    MatrixGroup g = catalog_group(key);
    Verdict expect = classify(g).verdict;
    IntMatrix q = IntMatrix::identity(g.rank());
    for (int step = 0; step < 8; ++step) {
      int i = int(rng() % g.rank()), j = int(rng() % g.rank());
      if (i == j) continue;
      for (int k = 0; k < g.rank(); ++k) q.at(i, k) += q.at(j, k);
    }
    IntMatrix qi = inverse_unimodular(q);
    std::vector<IntMatrix> gens;
    for (const auto& m : g.gens()) gens.push_back(qi * m * q);
    CHECK(classify(MatrixGroup(g.rank(), gens)).verdict == expect);
  }
}

TEST_CASE("classification of block sums of stably rational pieces") {
  MatrixGroup a = catalog_group("5T1");
  MatrixGroup c3(2, {IntMatrix{{0, 1}, {-1, -1}}});
  std::vector<IntMatrix> gens{
      block_diag({a.gens()[0], IntMatrix::identity(2)}),
      block_diag({IntMatrix::identity(4), c3.gens()[0]})};
  Classification c = classify(MatrixGroup(6, gens));
  CHECK(c.verdict == Verdict::stably_rational);
}

TEST_CASE("rank-2 scan survivors are conjugate to permutation groups") {
  auto entries = flabby_coflabby_scan({catalog_group("wb2"), catalog_group("c2xwa2")});
  MatrixGroup perm_triv(2, {});
  MatrixGroup perm_swap(2, {IntMatrix{{0, 1}, {1, 0}}});
  std::vector<MatrixGroup> maximals{catalog_group("wb2"), catalog_group("c2xwa2")};
  for (const auto& e : entries) {
    if (!(e.flabby && e.coflabby)) continue;
    auto cl = conjugacy_classes_subgroups(maximals[e.maximal_index]);
    const MatrixGroup& h = cl.classes[e.class_index].group;
    const MatrixGroup& target = h.order() == 1 ? perm_triv : perm_swap;
    REQUIRE(h.order() <= 2);
    CHECK(z_conjugacy_search(h, target).outcome == ZConjOutcome::found);
  }
}
