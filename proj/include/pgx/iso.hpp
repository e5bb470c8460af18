#pragma once

#include <vector>

#include "pgx/group.hpp"

namespace pgx {

// Minimal generating set via the Frattini quotient: grow the closure of
// Phi(G) one generator at a time. Each step multiplies the closure order by
// exactly p, so the result has minimal size.
inline std::vector<int> minimal_generators(const GroupTable& g) {
  if (g.order == 1) return {};
  SubgroupMask k = derived_and_frattini(g).second;
  std::vector<int> gens;
  while (k.order < g.order) {
    int x = 0;
    while (k.test(x)) ++x;
    gens.push_back(x);
    auto seed = k.members();
    for (int s : gens) seed.push_back(s);
    k = subgroup_closure(g, seed);
  }
  return gens;
}

namespace detail {

// Backtracking state for isomorphism search. Elements of A are organized in
// BFS layers over a minimal generating set, so assigning an image to
// generator i extends the partial map to all of <gens[0..i]> and the
// homomorphism property can be verified incrementally.
struct IsoSearch {
  const GroupTable& a;
  const GroupTable& b;
  bool first_only;
  std::vector<int> gens;
  std::vector<int> ord_a, ord_b;
  std::vector<std::pair<int, int>> expr;        // element -> (parent, generator index)
  std::vector<std::vector<int>> new_at;         // elements first reachable at depth i
  std::vector<std::vector<int>> defined_after;  // all reachable elements per depth
  std::vector<int> f;
  std::vector<char> used;
  std::vector<std::vector<int>> found;

  IsoSearch(const GroupTable& a_, const GroupTable& b_, bool fo) : a(a_), b(b_), first_only(fo) {}

  void prepare() {
    gens = minimal_generators(a);
    ord_a = element_orders(a);
    ord_b = element_orders(b);
    expr.assign(a.order, {-1, -1});
    new_at.assign(gens.size(), {});
    defined_after.assign(gens.size() + 1, {});
    std::vector<char> reach(a.order, 0);
    std::vector<int> list = {0};
    reach[0] = 1;
    defined_after[0] = list;
    for (size_t i = 0; i < gens.size(); ++i) {
      std::vector<int> frontier = list;
      size_t head = 0;
      while (head < frontier.size()) {
        int z = frontier[head++];
        for (size_t j = 0; j <= i; ++j) {
          int w = a.mul(z, gens[j]);
          if (!reach[w]) {
            reach[w] = 1;
            expr[w] = {z, int(j)};
            frontier.push_back(w);
            new_at[i].push_back(w);
            list.push_back(w);
          }
        }
      }
      defined_after[i + 1] = list;
    }
  }

  void search(size_t depth) {
    if (depth == gens.size()) {
      found.push_back(f);
      return;
    }
    const int want = ord_a[gens[depth]];
    for (int cand = 0; cand < b.order; ++cand) {
      if (used[cand] || ord_b[cand] != want) continue;
      std::vector<int> touched;
      touched.reserve(new_at[depth].size());
      bool ok = true;
      for (int z : new_at[depth]) {
        auto [parent, j] = expr[z];
        int gen_img = (size_t(j) == depth) ? cand : f[gens[j]];
        int v = b.mul(f[parent], gen_img);
        if (used[v]) {
          ok = false;
          break;
        }
        f[z] = v;
        used[v] = 1;
        touched.push_back(z);
      }
      if (ok) {
        const auto& all = defined_after[depth + 1];
        for (size_t t = 0; t < touched.size() && ok; ++t) {
          int x = touched[t];
          for (int y : all) {
            if (f[a.mul(x, y)] != b.mul(f[x], f[y]) || f[a.mul(y, x)] != b.mul(f[y], f[x])) {
              ok = false;
              break;
            }
          }
        }
      }
      if (ok) search(depth + 1);
      for (int z : touched) {
        used[f[z]] = 0;
        f[z] = -1;
      }
      if (first_only && !found.empty()) return;
    }
  }
};

}  // namespace detail

// All isomorphisms A -> B as element bijections. Empty result means
// non-isomorphic; for A == B the full list has |Aut(A)| entries. Census
// fingerprints prune almost all non-isomorphic pairs before any search
// starts. Intended scale is |A| <= 64.
inline std::vector<std::vector<int>> find_isomorphisms(const GroupTable& a, const GroupTable& b,
                                                       bool first_only = false) {
  if (a.order != b.order || a.prime != b.prime) return {};
  if (a.order == 1) return {{0}};
  GroupProfile pa = group_profile(a), pb = group_profile(b);
  if (pa.is_abelian != pb.is_abelian || pa.order_census != pb.order_census) return {};
  if (minimal_generators(a).size() != minimal_generators(b).size()) return {};
  detail::IsoSearch s(a, b, first_only);
  s.prepare();
  s.f.assign(a.order, -1);
  s.used.assign(b.order, 0);
  s.f[0] = 0;
  s.used[0] = 1;
  s.search(0);
  return s.found;
}

inline bool isomorphic(const GroupTable& a, const GroupTable& b) {
  return !find_isomorphisms(a, b, true).empty();
}

}  // namespace pgx
