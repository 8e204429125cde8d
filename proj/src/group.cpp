#include "glat/group.hpp"

#include <algorithm>
#include <cassert>

namespace glat {

Budget& budget() {
  static Budget b;
  return b;
}

struct MatrixGroup::Cache {
  std::vector<IntMatrix> elements;                       // sorted
  std::unordered_map<IntMatrix, std::uint32_t, IntMatrixHash> index;
  bool closed = false;
  CayleyTable table;
  bool have_table = false;
};

MatrixGroup::MatrixGroup(int rank, std::vector<IntMatrix> gens, std::string name)
    : rank_(rank), gens_(std::move(gens)), name_(std::move(name)),
      cache_(std::make_shared<Cache>()) {
  for (const auto& g : gens_) {
    if (g.rows() != rank_ || g.cols() != rank_)
      throw DimensionMismatch("generator shape does not match rank");
    if (!is_unimodular(g))
      throw NonUnimodularGenerator("generator determinant is not +-1");
  }
}

MatrixGroup::Cache& MatrixGroup::cache() const {
  if (!cache_) const_cast<MatrixGroup*>(this)->cache_ = std::make_shared<Cache>();
  return *cache_;
}

const std::vector<IntMatrix>& MatrixGroup::elements() const {
  Cache& c = cache();
  if (c.closed) return c.elements;
  std::vector<IntMatrix> elems;
  std::unordered_map<IntMatrix, std::uint32_t, IntMatrixHash> seen;
  IntMatrix id = IntMatrix::identity(rank_);
  elems.push_back(id);
  seen.emplace(id, 0);
  std::size_t head = 0;
  while (head < elems.size()) {
    IntMatrix cur = elems[head++];
    for (const auto& g : gens_) {
      IntMatrix p = cur * g;
      if (seen.emplace(p, std::uint32_t(elems.size())).second) {
        elems.push_back(std::move(p));
        if (elems.size() > budget().max_elements)
          throw BudgetExceeded("group order exceeds element budget");
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  c.elements = std::move(elems);
  c.index.clear();
  for (std::uint32_t i = 0; i < c.elements.size(); ++i)
    c.index.emplace(c.elements[i], i);
  c.closed = true;
  return c.elements;
}

const CayleyTable& MatrixGroup::table() const {
  Cache& c = cache();
  if (c.have_table) return c.table;
  const auto& el = elements();
  std::uint32_t n = std::uint32_t(el.size());
  CayleyTable t;
  t.n = n;
  t.mult.resize(std::size_t(n) * n);
  t.inv.resize(n);
  t.elem_order.resize(n);
  for (std::uint32_t i = 0; i < n; ++i)
    if (el[i].is_identity()) { t.id = i; break; }
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      IntMatrix p = el[i] * el[j];
      auto it = c.index.find(p);
      assert(it != c.index.end());
      t.mult[std::size_t(i) * n + j] = it->second;
    }
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      if (t.mul(i, j) == t.id) { t.inv[i] = j; break; }
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint32_t o = 1, x = i;
    while (x != t.id) { x = t.mul(x, i); ++o; }
    t.elem_order[i] = o;
  }
  c.table = std::move(t);
  c.have_table = true;
  return c.table;
}

long MatrixGroup::index_of(const IntMatrix& m) const {
  elements();
  const auto& idx = cache().index;
  auto it = idx.find(m);
  return it == idx.end() ? -1 : long(it->second);
}

bool MatrixGroup::same_elements(const MatrixGroup& o) const {
  return rank_ == o.rank_ && elements() == o.elements();
}

bool MatrixGroup::is_subgroup_of(const MatrixGroup& g) const {
  if (rank_ != g.rank()) return false;
  for (const auto& e : elements())
    if (!g.contains(e)) return false;
  return true;
}

std::vector<Int> MatrixGroup::trace_multiset() const {
  std::vector<Int> t;
  for (const auto& e : elements()) t.push_back(e.trace());
  std::sort(t.begin(), t.end());
  return t;
}

MatrixGroup transposed_group(const MatrixGroup& g) {
  std::vector<IntMatrix> gens;
  for (const auto& m : g.gens()) gens.push_back(m.transpose());
  return MatrixGroup(g.rank(), std::move(gens), g.name().empty() ? "" : g.name() + "^t");
}

MatrixGroup dual_lattice(const MatrixGroup& g) {
  std::vector<IntMatrix> gens;
  for (const auto& m : g.gens())
    gens.push_back(inverse_unimodular(m).transpose());
  return MatrixGroup(g.rank(), std::move(gens),
                     g.name().empty() ? "" : g.name() + "^o");
}

MatrixGroup direct_sum_group(const std::vector<MatrixGroup>& l) {
  if (l.empty()) throw MismatchedGeneratorLists("empty group list");
  std::size_t k = l[0].gens().size();
  for (const auto& g : l)
    if (g.gens().size() != k)
      throw MismatchedGeneratorLists("direct sum needs equal generator counts");
  int rank = 0;
  for (const auto& g : l) rank += g.rank();
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<IntMatrix> blocks;
    for (const auto& g : l) blocks.push_back(g.gens()[i]);
    gens.push_back(block_diag(blocks));
  }
  return MatrixGroup(rank, std::move(gens));
}

MatrixGroup direct_product_group(const std::vector<MatrixGroup>& l) {
  int rank = 0;
  for (const auto& g : l) rank += g.rank();
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (const auto& gen : l[i].gens()) {
      std::vector<IntMatrix> blocks;
      for (std::size_t j = 0; j < l.size(); ++j)
        blocks.push_back(j == i ? gen : IntMatrix::identity(l[j].rank()));
      gens.push_back(block_diag(blocks));
    }
  }
  return MatrixGroup(rank, std::move(gens));
}

MatrixGroup partial_group(const MatrixGroup& g, const std::vector<int>& window) {
  std::vector<bool> in(g.rank(), false);
  for (int i : window) in[i] = true;
  for (const auto& gen : g.gens())
    for (int i : window)
      for (int j = 0; j < g.rank(); ++j)
        if (!in[j] && gen.at(i, j) != 0)
          throw NonInvariantBlock("window is not an invariant coordinate block");
  std::vector<IntMatrix> gens;
  int m = int(window.size());
  for (const auto& gen : g.gens()) {
    IntMatrix b(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) b.at(i, j) = gen.at(window[i], window[j]);
    gens.push_back(std::move(b));
  }
  return MatrixGroup(m, std::move(gens));
}

std::vector<std::uint32_t> element_conjugacy_reps(const MatrixGroup& g) {
  const CayleyTable& t = g.table();
  std::vector<bool> seen(t.n, false);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t i = 0; i < t.n; ++i) {
    if (seen[i]) continue;
    reps.push_back(i);
    for (std::uint32_t x = 0; x < t.n; ++x) seen[t.conj(i, x)] = true;
  }
  return reps;
}

std::vector<IntMatrix> coset_representation_idx(const MatrixGroup& g,
                                                const std::vector<std::uint32_t>& h,
                                                CosetOrder order) {
  const CayleyTable& t = g.table();
  std::vector<std::int32_t> coset_of(t.n, -1);
  std::vector<std::uint32_t> coset_min;
  if (order == CosetOrder::subgroup_first) {
    // the subgroup itself comes first, the remaining cosets by least element
    coset_min.push_back(h.front());
    for (std::uint32_t e : h) coset_of[e] = 0;
  }
  for (std::uint32_t x = 0; x < t.n; ++x) {
    if (coset_of[x] >= 0) continue;
    std::int32_t id = std::int32_t(coset_min.size());
    coset_min.push_back(x);
    for (std::uint32_t e : h) coset_of[t.mul(e, x)] = id;
  }
  int nc = int(coset_min.size());
  std::vector<IntMatrix> reps;
  for (const auto& gen : g.gens()) {
    std::uint32_t gi = std::uint32_t(g.index_of(gen));
    IntMatrix p(nc, nc);
    for (int c = 0; c < nc; ++c)
      p.at(c, coset_of[t.mul(coset_min[c], gi)]) = 1;
    reps.push_back(std::move(p));
  }
  return reps;
}

std::vector<IntMatrix> coset_representation(const MatrixGroup& g, const MatrixGroup& h,
                                            CosetOrder order) {
  std::vector<std::uint32_t> hidx;
  for (const auto& e : h.elements()) {
    long i = g.index_of(e);
    if (i < 0) throw NotASubgroup("h is not a subgroup of g");
    hidx.push_back(std::uint32_t(i));
  }
  std::sort(hidx.begin(), hidx.end());
  return coset_representation_idx(g, hidx, order);
}

}  // namespace glat
