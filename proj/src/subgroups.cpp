#include "glat/subgroups.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <unordered_map>

namespace glat {

namespace {

std::uint64_t hash_index_set(const std::vector<std::uint32_t>& v) {
  std::uint64_t h = 0x243f6a8885a308d3ULL ^ (std::uint64_t(v.size()) << 32);
  for (std::uint32_t x : v) h = hash_combine(h, x * 0x9e3779b97f4a7c15ULL + 1);
  return h;
}

// closure of <base ∪ {g}> by right-coset filling; base must be closed and
// closed_gens must generate it
std::vector<std::uint32_t> extend_closure(const CayleyTable& t,
                                          const std::vector<std::uint32_t>& base,
                                          const std::vector<std::uint32_t>& base_gens,
                                          std::uint32_t g) {
  std::vector<bool> in(t.n, false);
  std::vector<std::uint32_t> elems = base;
  for (std::uint32_t x : base) in[x] = true;
  std::vector<std::uint32_t> gens = base_gens;
  gens.push_back(g);
  std::vector<std::uint32_t> reps{t.id};
  for (std::size_t head = 0; head < reps.size(); ++head) {
    std::uint32_t w = reps[head];
    for (std::uint32_t s : gens) {
      std::uint32_t x = t.mul(w, s);
      if (in[x]) continue;
      reps.push_back(x);
      for (std::uint32_t b : base) {
        std::uint32_t y = t.mul(b, x);
        if (!in[y]) { in[y] = true; elems.push_back(y); }
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<std::uint32_t> conjugate_set(const CayleyTable& t,
                                         const std::vector<std::uint32_t>& s,
                                         std::uint32_t g) {
  std::vector<std::uint32_t> r;
  r.reserve(s.size());
  for (std::uint32_t x : s) r.push_back(t.conj(x, g));
  std::sort(r.begin(), r.end());
  return r;
}

}  // namespace

std::vector<std::uint32_t> greedy_generators(const CayleyTable& t,
                                             const std::vector<std::uint32_t>& elems) {
  std::vector<bool> in(t.n, false);
  for (std::uint32_t x : elems) in[x] = true;
  std::vector<bool> have(t.n, false);
  std::vector<std::uint32_t> closed{t.id};
  have[t.id] = true;
  std::vector<std::uint32_t> gens;
  for (std::uint32_t x : elems) {
    if (have[x]) continue;
    gens.push_back(x);
    // close <closed, x>
    std::vector<std::uint32_t> frontier = closed;
    frontier.push_back(x);
    have[x] = true;
    closed.push_back(x);
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      std::uint32_t w = frontier[head];
      for (std::uint32_t s : gens) {
        std::uint32_t y = t.mul(w, s);
        if (!have[y]) {
          have[y] = true;
          closed.push_back(y);
          frontier.push_back(y);
        }
        y = t.mul(s, w);
        if (!have[y]) {
          have[y] = true;
          closed.push_back(y);
          frontier.push_back(y);
        }
      }
    }
    if (closed.size() == elems.size()) break;
  }
  return gens;
}

MatrixGroup subgroup_from_indices(const MatrixGroup& parent,
                                  const std::vector<std::uint32_t>& idx) {
  const auto& el = parent.elements();
  const CayleyTable& t = parent.table();
  std::vector<IntMatrix> gens;
  for (std::uint32_t gi : greedy_generators(t, idx)) gens.push_back(el[gi]);
  if (gens.empty()) gens.push_back(IntMatrix::identity(parent.rank()));
  return MatrixGroup(parent.rank(), std::move(gens));
}

SubgroupClassList conjugacy_classes_subgroups(const MatrixGroup& g) {
  const CayleyTable& t = g.table();
  const std::uint32_t n = t.n;

  struct PendingClass {
    std::vector<std::uint32_t> rep;   // canonical (lex-least) conjugate
    std::vector<std::uint32_t> gens;  // generators of rep
    std::uint64_t class_size = 0;
  };
  std::vector<PendingClass> found;
  std::unordered_map<std::uint64_t, int> instance;  // subgroup hash -> class id

  auto register_class = [&](const std::vector<std::uint32_t>& s,
                            const std::vector<std::uint32_t>& s_gens) {
    // full conjugation orbit; canonical representative = lex-least
    std::vector<std::uint32_t> best = s;
    std::uint32_t best_conj = t.id;
    std::uint64_t count = 0;
    for (std::uint32_t x = 0; x < n; ++x) {
      std::vector<std::uint32_t> c = conjugate_set(t, s, x);
      std::uint64_t h = hash_index_set(c);
      auto [it, fresh] = instance.emplace(h, int(found.size()));
      if (fresh) {
        ++count;
        if (c < best) { best = std::move(c); best_conj = x; }
      }
    }
    PendingClass pc;
    pc.rep = std::move(best);
    pc.class_size = count;
    std::vector<std::uint32_t> cg;
    for (std::uint32_t x : s_gens) cg.push_back(t.conj(x, best_conj));
    pc.gens = std::move(cg);
    found.push_back(std::move(pc));
  };

  // trivial subgroup
  register_class({t.id}, {});

  // process ascending by order; every subgroup arises by extending a class
  // representative of one of its maximal subgroups
  std::map<std::uint64_t, std::vector<int>> queue;
  queue[1].push_back(0);
  while (!queue.empty()) {
    auto it = queue.begin();
    std::vector<int> layer = std::move(it->second);
    queue.erase(it);
    for (int ci : layer) {
      // snapshot: found[ci] fields stay stable (vector growth invalidates refs)
      std::vector<std::uint32_t> rep = found[ci].rep;
      std::vector<std::uint32_t> rep_gens = found[ci].gens;
      std::vector<bool> skip(n, false);
      for (std::uint32_t x : rep) skip[x] = true;
      for (std::uint32_t x = 0; x < n; ++x) {
        if (skip[x]) continue;
        // elements of rep*x*rep generate the same join; mark their cosets
        for (std::uint32_t r : rep) {
          skip[t.mul(r, x)] = true;
          skip[t.mul(x, r)] = true;
        }
        std::vector<std::uint32_t> s = extend_closure(t, rep, rep_gens, x);
        std::uint64_t h = hash_index_set(s);
        if (instance.find(h) != instance.end()) continue;
        std::vector<std::uint32_t> sg = rep_gens;
        sg.push_back(x);
        std::uint64_t ord = s.size();
        register_class(s, sg);
        if (ord < n) queue[ord].push_back(int(found.size()) - 1);
      }
    }
  }

  // canonical ordering: (order, trace multiset, lex-least element list)
  const auto& el = g.elements();
  struct Keyed {
    std::uint64_t order;
    std::vector<Int> traces;
    const PendingClass* pc;
  };
  std::vector<Keyed> keyed;
  for (const auto& pc : found) {
    std::vector<Int> tr;
    tr.reserve(pc.rep.size());
    for (std::uint32_t x : pc.rep) tr.push_back(el[x].trace());
    std::sort(tr.begin(), tr.end());
    keyed.push_back(Keyed{pc.rep.size(), std::move(tr), &pc});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.order != b.order) return a.order < b.order;
    if (a.traces != b.traces) {
      return std::lexicographical_compare(
          a.traces.begin(), a.traces.end(), b.traces.begin(), b.traces.end(),
          [](const Int& x, const Int& y) { return x < y; });
    }
    return a.pc->rep < b.pc->rep;
  });

  SubgroupClassList out;
  out.parent = &g;
  for (const auto& k : keyed) {
    SubgroupClass sc;
    sc.rep_indices = k.pc->rep;
    sc.gen_indices = k.pc->gens;
    sc.subgroup_order = k.order;
    sc.class_size = k.pc->class_size;
    std::vector<IntMatrix> gens;
    for (std::uint32_t gi : sc.gen_indices) gens.push_back(el[gi]);
    if (gens.empty()) gens.push_back(IntMatrix::identity(g.rank()));
    sc.group = MatrixGroup(g.rank(), std::move(gens));
    out.classes.push_back(std::move(sc));
  }
  return out;
}

MatrixGroup derived_subgroup(const MatrixGroup& g) {
  const CayleyTable& t = g.table();
  std::vector<bool> seen(t.n, false);
  std::vector<std::uint32_t> comms;
  for (std::uint32_t x = 0; x < t.n; ++x)
    for (std::uint32_t y = 0; y < t.n; ++y) {
      std::uint32_t c = t.mul(t.mul(t.inv[x], t.inv[y]), t.mul(x, y));
      if (!seen[c]) { seen[c] = true; comms.push_back(c); }
    }
  // close under products
  std::vector<std::uint32_t> elems{t.id};
  std::vector<bool> in(t.n, false);
  in[t.id] = true;
  for (std::uint32_t c : comms)
    if (!in[c]) { in[c] = true; elems.push_back(c); }
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (std::uint32_t c : comms) {
      std::uint32_t y = t.mul(elems[head], c);
      if (!in[y]) { in[y] = true; elems.push_back(y); }
    }
  std::sort(elems.begin(), elems.end());
  return subgroup_from_indices(g, elems);
}

MatrixGroup centre(const MatrixGroup& g) {
  const CayleyTable& t = g.table();
  std::vector<std::uint32_t> z;
  for (std::uint32_t x = 0; x < t.n; ++x) {
    bool central = true;
    for (std::uint32_t y = 0; y < t.n && central; ++y)
      if (t.mul(x, y) != t.mul(y, x)) central = false;
    if (central) z.push_back(x);
  }
  return subgroup_from_indices(g, z);
}

MatrixGroup sylow_subgroup(const MatrixGroup& g, const Int& p) {
  const CayleyTable& t = g.table();
  int target = p_adic_valuation(Int(t.n), p);
  std::vector<std::uint32_t> pset{t.id};
  std::vector<bool> in(t.n, false);
  in[t.id] = true;
  int v = 0;
  unsigned long pl = p.get_ui();
  while (v < target) {
    bool grown = false;
    for (std::uint32_t x = 0; x < t.n && !grown; ++x) {
      if (in[x]) continue;
      std::uint32_t o = t.elem_order[x];
      // p-power order with x^p inside the current subgroup
      bool ppower = true;
      while (o > 1) {
        if (o % pl != 0) { ppower = false; break; }
        o /= std::uint32_t(pl);
      }
      if (!ppower) continue;
      std::uint32_t xp = x;
      for (unsigned long i = 1; i < pl; ++i) xp = t.mul(xp, x);
      if (!in[xp]) continue;
      // x must normalize the current subgroup
      bool normalizes = true;
      for (std::uint32_t e : pset)
        if (!in[t.conj(e, x)]) { normalizes = false; break; }
      if (!normalizes) continue;
      // grow: cosets pset * x^k
      std::vector<std::uint32_t> grownset = pset;
      std::uint32_t xk = x;
      for (unsigned long k = 1; k < pl; ++k) {
        for (std::uint32_t e : pset) {
          std::uint32_t y = t.mul(e, xk);
          in[y] = true;
          grownset.push_back(y);
        }
        xk = t.mul(xk, x);
      }
      pset = std::move(grownset);
      ++v;
      grown = true;
    }
    assert(grown && "Sylow growth must succeed below full p-valuation");
  }
  std::sort(pset.begin(), pset.end());
  return subgroup_from_indices(g, pset);
}

}  // namespace glat
