#include "glat/catalog.hpp"

#include <map>

namespace glat {

bool is_transitive(const PermGroupSpec& spec) {
  std::vector<bool> reach(spec.degree, false);
  std::vector<int> frontier{0};
  reach[0] = true;
  int seen = 1;
  while (!frontier.empty()) {
    int p = frontier.back();
    frontier.pop_back();
    for (const auto& g : spec.generators) {
      int q = g[p] - 1;
      if (!reach[q]) { reach[q] = true; frontier.push_back(q); ++seen; }
    }
  }
  return seen == spec.degree;
}

MatrixGroup norm1_torus_j(const PermGroupSpec& spec) {
  if (spec.degree < 2) throw DimensionMismatch("degree must be at least 2");
  for (const auto& g : spec.generators) {
    if (int(g.size()) != spec.degree)
      throw ParseError("generators", "image list length must equal the degree");
    std::vector<bool> hit(spec.degree, false);
    for (int v : g) {
      if (v < 1 || v > spec.degree || hit[v - 1])
        throw ParseError("generators", "image list is not a permutation");
      hit[v - 1] = true;
    }
  }
  if (!is_transitive(spec)) throw NotTransitive("permutation group is not transitive");
  const int d = spec.degree;
  std::vector<IntMatrix> gens;
  for (const auto& g : spec.generators) {
    IntMatrix m(d - 1, d - 1);
    for (int i = 0; i < d - 1; ++i) {
      int img = g[i] - 1;
      if (img < d - 1)
        m.at(i, img) = 1;
      else
        for (int j = 0; j < d - 1; ++j) m.at(i, j) = -1;
    }
    gens.push_back(std::move(m));
  }
  return MatrixGroup(d - 1, std::move(gens), spec.name);
}

namespace {

// signed permutation group C2 wr S_n of rank n
MatrixGroup signed_permutation_group(int n, const std::string& name) {
  std::vector<IntMatrix> gens;
  IntMatrix sign = IntMatrix::identity(n);
  sign.at(0, 0) = -1;
  gens.push_back(sign);
  if (n >= 2) {
    IntMatrix swap(n, n);
    swap.at(0, 1) = 1;
    swap.at(1, 0) = 1;
    for (int i = 2; i < n; ++i) swap.at(i, i) = 1;
    gens.push_back(swap);
  }
  if (n >= 3) {
    IntMatrix cyc(n, n);
    for (int i = 0; i < n; ++i) cyc.at(i, (i + 1) % n) = 1;
    gens.push_back(cyc);
  }
  return MatrixGroup(n, std::move(gens), name);
}

// S4 x C2 on the A3 root lattice (basis e_i - e_{i+1}); dual=false gives the
// root lattice, dual=true its dual (weight) lattice.
MatrixGroup a3_type_group(bool dual, const std::string& name) {
  IntMatrix four_cycle{{0, 1, 0}, {0, 0, 1}, {-1, -1, -1}};
  IntMatrix transposition{{-1, 0, 0}, {1, 1, 0}, {0, 0, 1}};
  IntMatrix minus = -IntMatrix::identity(3);
  if (dual) {
    four_cycle = inverse_unimodular(four_cycle).transpose();
    transposition = inverse_unimodular(transposition).transpose();
  }
  return MatrixGroup(3, {four_cycle, transposition, minus}, name);
}

struct CatalogData {
  std::map<std::string, CatalogEntry> entries;
  std::vector<std::string> keys;

  void add(const std::string& key, CatalogEntry e) {
    entries.emplace(key, std::move(e));
    keys.push_back(key);
  }
  void add_spec(const std::string& key, int degree,
                std::vector<std::vector<int>> gens) {
    add(key, PermGroupSpec{key, degree, std::move(gens)});
  }
};

CatalogData build_catalog() {
  CatalogData c;

  // rank-2 maximal groups: square and hexagonal
  c.add("wb2", MatrixGroup(2, {IntMatrix{{-1, 0}, {0, 1}}, IntMatrix{{0, 1}, {1, 0}}},
                           "wb2"));
  c.add("c2xwa2", MatrixGroup(2, {IntMatrix{{0, 1}, {-1, 1}}, IntMatrix{{0, 1}, {1, 0}}},
                              "c2xwa2"));

  // rank-3 maximal groups: signed permutations and the two A3-type lattices
  c.add("wb3", signed_permutation_group(3, "wb3"));
  c.add("c2xwa3-a", a3_type_group(false, "c2xwa3-a"));
  c.add("c2xwa3-b", a3_type_group(true, "c2xwa3-b"));

  c.add("wb4", signed_permutation_group(4, "wb4"));
  c.add("wb5", signed_permutation_group(5, "wb5"));

  // the order-6 and order-12 rank-4 lattices that are flabby and coflabby but
  // not permutation
  IntMatrix x4{{0, 1, 0, 1}, {1, 0, 0, 1}, {0, 0, 0, 1}, {0, 0, -1, -1}};
  IntMatrix y4{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}, {0, 0, -1, 0}};
  c.add("g4-14-2-2", MatrixGroup(4, {x4}, "g4-14-2-2"));
  c.add("g4-14-8-2", MatrixGroup(4, {x4, y4}, "g4-14-8-2"));

  // rank-5 pair whose lattice decomposes as 4+1 and as 3+2
  IntMatrix x5{{0, 1, 0, 1, 0},
               {1, 0, 0, 1, 0},
               {0, 0, 0, 1, 0},
               {0, 0, -1, -1, 0},
               {0, 0, 0, 0, 1}};
  IntMatrix y5{{1, 0, 0, 0, 0},
               {0, 1, 0, 0, 0},
               {0, 0, 0, -1, 0},
               {0, 0, -1, 0, 0},
               {0, 0, 0, 0, 1}};
  c.add("ks5-xy", MatrixGroup(5, {x5, y5}, "ks5-xy"));

  // fixed-field lattices with non-invertible flabby class
  c.add("rk6-c2xc2",
        MatrixGroup(6,
                    {IntMatrix{{1, 0, 0, 0, 0, 0},
                               {1, -1, 0, 0, 0, 0},
                               {1, 0, 0, 0, -1, 1},
                               {0, 0, 0, 1, 0, 0},
                               {1, 0, 0, 1, -1, 0},
                               {0, 0, 1, 1, -1, 0}},
                     IntMatrix{{1, 0, 0, 0, 0, 0},
                               {0, 1, 0, 0, 0, 0},
                               {1, 0, -1, 0, 0, 0},
                               {0, 0, 0, 1, 0, 0},
                               {1, 0, -1, 0, 0, 1},
                               {0, 0, -1, 0, 1, 0}}},
                    "rk6-c2xc2"));
  c.add("rk9-c2xc2",
        MatrixGroup(9,
                    {IntMatrix{{1, 0, 0, 0, 0, 0, 0, 0, 0},
                               {0, 0, 0, 1, -1, 0, 0, 0, 0},
                               {1, 0, -1, 0, 0, 0, 0, 0, 0},
                               {0, 1, 0, 0, -1, 0, 0, 1, 0},
                               {0, 0, 0, 0, -1, 0, 0, 1, 0},
                               {1, 0, -1, 0, 0, 0, 1, 0, 0},
                               {0, 0, -1, 0, 0, 1, 0, 0, 0},
                               {0, 0, 0, 0, 0, 0, 0, 1, 0},
                               {0, 0, 0, 0, 0, 0, 0, 0, 1}},
                     IntMatrix{{1, 0, 0, 0, 0, 0, 0, 0, 0},
                               {1, 0, 0, -1, 1, 0, 0, 0, 0},
                               {0, 0, 0, 0, 0, 1, -1, 0, 0},
                               {1, 0, 0, -1, 0, 0, 0, 1, 0},
                               {0, 1, 0, -1, 0, 0, 0, 1, 0},
                               {0, 0, 1, 0, 0, 0, -1, 0, 1},
                               {0, 0, 0, 0, 0, 0, -1, 0, 1},
                               {0, 0, 0, 0, 0, 0, 0, 1, 0},
                               {0, 0, 0, 0, 0, 0, 0, 0, 1}}},
                    "rk9-c2xc2"));
  c.add("rk9-c2xc2xc2",
        MatrixGroup(9,
                    {IntMatrix{{1, 0, 0, 0, 0, 0, 0, 0, 0},
                               {0, 0, 0, 1, -1, 0, 0, 0, 0},
                               {1, 0, 0, 0, 0, 1, -1, 0, 0},
                               {0, 1, 0, 0, -1, 0, 0, 1, 0},
                               {0, 0, 0, 0, -1, 0, 0, 1, 0},
                               {0, 0, 1, 0, 0, 0, -1, 0, 1},
                               {1, 0, 0, 0, 0, 0, -1, 0, 1},
                               {0, 0, 0, 0, 0, 0, 0, 1, 0},
                               {0, 0, 0, 0, 0, 0, 0, 0, 1}},
                     IntMatrix{{1, 0, 0, 0, 0, 0, 0, 0, 0},
                               {1, 0, 0, -1, 1, 0, 0, 0, 0},
                               {1, 0, 0, 0, 0, 1, -1, 0, 0},
                               {1, 0, 0, -1, 0, 0, 0, 1, 0},
                               {0, 1, 0, -1, 0, 0, 0, 1, 0},
                               {0, 0, 1, 0, 0, 0, -1, 0, 1},
                               {1, 0, 0, 0, 0, 0, -1, 0, 1},
                               {0, 0, 0, 0, 0, 0, 0, 1, 0},
                               {0, 0, 0, 0, 0, 0, 0, 0, 1}},
                     IntMatrix{{1, 0, 0, 0, 0, 0, 0, 0, 0},
                               {0, 1, 0, 0, 0, 0, 0, 0, 0},
                               {1, 0, -1, 0, 0, 0, 0, 0, 0},
                               {0, 0, 0, 1, 0, 0, 0, 0, 0},
                               {0, 0, 0, 0, 1, 0, 0, 0, 0},
                               {0, 0, -1, 0, 0, 0, 1, 0, 0},
                               {1, 0, -1, 0, 0, 1, 0, 0, 0},
                               {0, 0, 0, 0, 0, 0, 0, 1, 0},
                               {0, 0, 0, 0, 0, 0, 0, 0, 1}}},
                    "rk9-c2xc2xc2"));

  // transitive groups used by the norm-one constructions
  c.add_spec("2T1", 2, {{2, 1}});
  c.add_spec("3T1", 3, {{2, 3, 1}});
  c.add_spec("3T2", 3, {{2, 3, 1}, {2, 1, 3}});
  c.add_spec("4T1", 4, {{2, 3, 4, 1}});
  c.add_spec("4T2", 4, {{2, 1, 4, 3}, {3, 4, 1, 2}});
  c.add_spec("4T3", 4, {{2, 3, 4, 1}, {3, 2, 1, 4}});
  c.add_spec("4T4", 4, {{2, 3, 1, 4}, {1, 3, 4, 2}});
  c.add_spec("4T5", 4, {{2, 3, 4, 1}, {2, 1, 3, 4}});
  c.add_spec("5T1", 5, {{2, 3, 4, 5, 1}});
  c.add_spec("5T2", 5, {{2, 3, 4, 5, 1}, {1, 5, 4, 3, 2}});
  c.add_spec("5T3", 5, {{2, 3, 4, 5, 1}, {1, 3, 5, 2, 4}});
  c.add_spec("5T4", 5, {{2, 3, 4, 5, 1}, {1, 2, 4, 5, 3}});
  c.add_spec("5T5", 5, {{2, 3, 4, 5, 1}, {2, 1, 3, 4, 5}});
  c.add_spec("6T1", 6, {{2, 3, 4, 5, 6, 1}});
  c.add_spec("6T2", 6, {{2, 3, 1, 5, 6, 4}, {4, 6, 5, 1, 3, 2}});
  c.add_spec("6T3", 6, {{2, 3, 4, 5, 6, 1}, {1, 6, 5, 4, 3, 2}});
  c.add_spec("6T4", 6, {{4, 1, 5, 2, 6, 3}, {1, 5, 4, 3, 2, 6}});
  c.add_spec("6T5", 6, {{2, 3, 1, 4, 5, 6}, {1, 2, 3, 5, 6, 4}, {4, 5, 6, 1, 2, 3}});
  c.add_spec("6T6", 6,
             {{4, 1, 5, 2, 6, 3}, {1, 5, 4, 3, 2, 6}, {6, 5, 4, 3, 2, 1}});
  c.add_spec("6T7", 6, {{4, 5, 1, 6, 2, 3}, {1, 4, 5, 2, 3, 6}});
  c.add_spec("6T8", 6, {{1, 5, 2, 3, 4, 6}, {4, 6, 5, 1, 3, 2}});
  c.add_spec("6T9", 6,
             {{2, 3, 1, 4, 5, 6}, {1, 2, 3, 5, 6, 4}, {2, 1, 3, 5, 4, 6},
              {4, 5, 6, 1, 2, 3}});
  c.add_spec("6T10", 6, {{2, 3, 1, 4, 5, 6}, {1, 2, 3, 5, 6, 4}, {4, 5, 6, 2, 1, 3}});
  c.add_spec("6T11", 6, {{4, 2, 3, 1, 5, 6}, {2, 3, 1, 5, 6, 4}, {2, 1, 3, 5, 4, 6}});
  c.add_spec("6T12", 6, {{2, 3, 4, 5, 1, 6}, {6, 5, 3, 4, 2, 1}});
  c.add_spec("6T13", 6,
             {{2, 3, 1, 4, 5, 6}, {2, 1, 3, 4, 5, 6}, {1, 2, 3, 5, 6, 4},
              {1, 2, 3, 5, 4, 6}, {4, 5, 6, 1, 2, 3}});
  c.add_spec("6T14", 6, {{2, 3, 4, 5, 1, 6}, {6, 5, 3, 4, 2, 1}, {1, 3, 5, 2, 4, 6}});
  c.add_spec("6T15", 6, {{2, 3, 4, 5, 1, 6}, {1, 3, 4, 5, 6, 2}});
  c.add_spec("6T16", 6, {{2, 3, 4, 5, 6, 1}, {2, 1, 3, 4, 5, 6}});
  c.add_spec("8T5", 8, {{2, 5, 8, 3, 6, 1, 4, 7}, {3, 4, 5, 6, 7, 8, 1, 2}});

  return c;
}

const CatalogData& data() {
  static const CatalogData c = build_catalog();
  return c;
}

}  // namespace

std::vector<std::string> catalog_keys() { return data().keys; }

const CatalogEntry& catalog_get(const std::string& key) {
  auto it = data().entries.find(key);
  if (it == data().entries.end()) throw UnknownKey("unknown catalog key: " + key);
  return it->second;
}

MatrixGroup catalog_group(const std::string& key) {
  const CatalogEntry& e = catalog_get(key);
  if (std::holds_alternative<MatrixGroup>(e)) return std::get<MatrixGroup>(e);
  return norm1_torus_j(std::get<PermGroupSpec>(e));
}

}  // namespace glat
