#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "glat/catalog.hpp"
#include "glat/resolution.hpp"

using namespace glat;

namespace {

MatrixGroup c2_sign() { return MatrixGroup(1, {IntMatrix{{-1}}}); }
MatrixGroup c3_chevalley() { return MatrixGroup(2, {IntMatrix{{0, 1}, {-1, -1}}}); }

void check_resolution_invariants(const MatrixGroup& g, const FlabbyResolutionResult& r) {
  const int d = g.rank();
  const int rp = r.action_p.rank();
  const int rf = r.action_f.rank();
  CHECK(rp == d + rf);
  CHECK(r.injection.rows() == d);
  CHECK(r.injection.cols() == rp);
  CHECK(r.surjection.rows() == rp);
  CHECK(r.surjection.cols() == rf);
  REQUIRE(g.gens().size() == r.action_p.gens().size());
  for (std::size_t k = 0; k < g.gens().size(); ++k) {
    CHECK(g.gens()[k] * r.injection == r.injection * r.action_p.gens()[k]);
    if (rf > 0)
      CHECK(r.action_p.gens()[k] * r.surjection ==
            r.surjection * r.action_f.gens()[k]);
    const IntMatrix& p = r.action_p.gens()[k];
    for (int i = 0; i < p.rows(); ++i) {
      int ones = 0;
      for (int j = 0; j < p.cols(); ++j) {
        CHECK((p.at(i, j) == 0 || p.at(i, j) == 1));
        if (p.at(i, j) == 1) ++ones;
      }
      CHECK(ones == 1);
    }
  }
  // injection has full rank with torsion-free cokernel
  SmithForm s = snf(r.injection);
  CHECK(s.rank == d);
  for (const auto& dv : s.divisors) CHECK(dv == 1);
  // exactness: the saturated kernel of the surjection is the injection image
  if (rf > 0)
    CHECK(nullspace_int(r.surjection) == hnf_row_basis(r.injection));
}

}  // namespace

TEST_CASE("fixed lattices") {
  CHECK(z0_lattice(MatrixGroup(3, {})) == IntMatrix::identity(3));
  CHECK(z0_lattice(MatrixGroup(2, {IntMatrix{{0, 1}, {1, 0}}})) == IntMatrix{{1, 1}});
  CHECK(z0_lattice(c2_sign()).rows() == 0);
}

TEST_CASE("base construction for small lattices") {
  MatrixGroup c3d = transposed_group(c3_chevalley());
  auto cl = conjugacy_classes_subgroups(c3d);
  ResolutionBase base = find_coflabby_resolution_base(c3d, cl.groups());
  CHECK(base.vectors.size() == 3);
  CHECK(base.num_orbits == 1);
  CHECK(check_coflabby_resolution_base(c3d, cl.groups(), base.vectors));
  CHECK(!check_coflabby_resolution_base(c3d, cl.groups(), {}));

  MatrixGroup triv(1, {});
  auto tl = conjugacy_classes_subgroups(triv);
  ResolutionBase tbase = find_coflabby_resolution_base(triv, tl.groups());
  CHECK(tbase.vectors.size() == 1);
  CHECK(check_coflabby_resolution_base(triv, tl.groups(), {{Int(1)}, {Int(0)}}));
}

TEST_CASE("flabby resolution of the C3 lattice") {
  FlabbyResolutionResult r = flabby_resolution(c3_chevalley());
  CHECK(r.action_f.rank() == 1);
  REQUIRE(r.action_f.gens().size() == 1);
  CHECK(r.action_f.gens()[0] == IntMatrix{{1}});
  check_resolution_invariants(c3_chevalley(), r);
  CHECK(is_flabby(r.action_f));
}

TEST_CASE("flabby resolution of the trivial and sign lattices") {
  FlabbyResolutionResult triv = flabby_resolution(MatrixGroup(2, {}));
  CHECK(triv.action_f.rank() == 0);
  CHECK(triv.action_p.rank() == 2);

  FlabbyResolutionResult sgn = flabby_resolution(c2_sign());
  CHECK(sgn.action_p.rank() == 2);
  CHECK(sgn.action_f.rank() == 1);
  CHECK(sgn.action_p.gens()[0] == IntMatrix{{0, 1}, {1, 0}});
  CHECK(sgn.action_f.gens()[0] == IntMatrix{{1}});
  check_resolution_invariants(c2_sign(), sgn);
}

TEST_CASE("F20 resolution has the reference shape") {
  MatrixGroup f20 = catalog_group("5T3");
  FlabbyResolutionResult r = flabby_resolution(f20);
  CHECK(r.action_p.rank() == 20);
  CHECK(r.action_f.rank() == 16);
  check_resolution_invariants(f20, r);
  CHECK(is_flabby(r.action_f));
}

TEST_CASE("search bases: reference size sets") {
  MatrixGroup a5 = catalog_group("5T4");
  auto bases5 = search_coflabby_resolution_base(transposed_group(a5), 3);
  std::set<std::size_t> sizes;
  for (const auto& b : bases5) sizes.insert(b.size() - 4);
  REQUIRE(sizes.size() >= 3);
  auto sit = sizes.begin();
  CHECK(*sit++ == 16);
  CHECK(*sit++ == 21);
  CHECK(*sit++ == 26);

  MatrixGroup q8 = catalog_group("8T5");
  auto bases8 = search_coflabby_resolution_base(transposed_group(q8), 3);
  std::set<std::size_t> sizes8;
  for (const auto& b : bases8) sizes8.insert(b.size() - 7);
  REQUIRE(sizes8.size() >= 3);
  auto it = sizes8.begin();
  CHECK(*it++ == 9);
  CHECK(*it++ == 11);
  CHECK(*it++ == 13);

  auto basest = search_coflabby_resolution_base(MatrixGroup(1, {}), 1);
  REQUIRE(basest.size() == 1);
  CHECK(basest[0].size() == 1);
}

TEST_CASE("flfl") {
  CHECK(flfl(MatrixGroup(2, {})).rank() == 0);
  CHECK(flfl(catalog_group("wb3")).rank() == 0);
  CHECK(flfl(catalog_group("5T1")).rank() == 0);
}

TEST_CASE("flfl restriction and additivity spot checks") {
  MatrixGroup wb3 = catalog_group("wb3");
  auto cl = conjugacy_classes_subgroups(wb3);
  int checked = 0;
  for (const auto& c : cl.classes) {
    if (c.subgroup_order > 8) continue;
    if (++checked > 8) break;
    CHECK(flfl(c.group).rank() == 0);
  }
  MatrixGroup a = c3_chevalley();
  MatrixGroup b = c2_sign();
  std::vector<IntMatrix> gens = {block_diag({a.gens()[0], IntMatrix::identity(1)}),
                                 block_diag({IntMatrix::identity(2), b.gens()[0]})};
  MatrixGroup sum(3, gens);
  CHECK(flfl(sum).rank() == 0);
}

TEST_CASE("invertibility decisions") {
  CHECK(is_invertible_f(MatrixGroup(3, {})));
  CHECK(is_invertible_f(catalog_group("5T3")));
  CHECK(!is_invertible_f(catalog_group("8T5")));
  CHECK(!is_invertible_f(catalog_group("rk6-c2xc2")));
}

TEST_CASE("invertibility is independent of the chosen base") {
  for (const char* key : {"5T1", "5T2"}) {
    MatrixGroup g = catalog_group(key);
    bool expect = is_invertible_f(g);
    auto bases = search_coflabby_resolution_base(transposed_group(g), 2);
    int tried = 0;
    for (const auto& b : bases) {
      if (++tried > 3) break;
      DualResolution dr = dual_resolution(g, b);
      CHECK(is_invertible_f(g, dr) == expect);
    }
  }
}

TEST_CASE("invertible implies flabby and coflabby F") {
  for (const char* key : {"5T1", "5T2", "5T3"}) {
    MatrixGroup g = catalog_group(key);
    if (!is_invertible_f(g)) continue;
    FlabbyResolutionResult r = flabby_resolution(g);
    if (r.action_f.rank() == 0) continue;
    CHECK(is_flabby(r.action_f));
    CHECK(is_coflabby(r.action_f));
  }
}

TEST_CASE("flfl restriction over the full W(B3) class list") {
  auto cl = conjugacy_classes_subgroups(catalog_group("wb3"));
  for (const auto& c : cl.classes) CHECK(flfl(c.group).rank() == 0);
}

TEST_CASE("invertibility base independence for C3 and F20") {
  MatrixGroup c3(2, {IntMatrix{{0, 1}, {-1, -1}}});
  for (const auto& b : search_coflabby_resolution_base(transposed_group(c3), 2)) {
    DualResolution dr = dual_resolution(c3, b);
    CHECK(is_invertible_f(c3, dr) == true);
  }
  MatrixGroup f20 = catalog_group("5T3");
  auto bases = search_coflabby_resolution_base(transposed_group(f20), 1);
  int tried = 0;
  for (const auto& b : bases) {
    if (++tried > 2) break;
    DualResolution dr = dual_resolution(f20, b);
    CHECK(is_invertible_f(f20, dr) == true);
  }
}
