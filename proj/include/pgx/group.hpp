#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pgx {

// Tables are exhaustive scans, so the engine refuses anything big enough to
// make a full scan painful.
inline constexpr int kOrderCap = 2048;

// ---------------------------------------------------------------------------
// SubgroupMask: a subgroup as a fixed-width bit vector of element indices.

struct SubgroupMask {
  int width = 0;                    // |G|
  std::vector<std::uint64_t> bits;  // ceil(width/64) words
  int order = 0;                    // popcount, maintained by set()
  bool cyclic = false;              // filled in by the lattice pass
  std::vector<int> generators;      // adjoined-generator hint, possibly empty

  SubgroupMask() = default;
  explicit SubgroupMask(int w) : width(w), bits((w + 63) / 64, 0) {}

  bool test(int i) const { return (bits[i >> 6] >> (i & 63)) & 1; }
  void set(int i) {
    std::uint64_t& w = bits[i >> 6];
    std::uint64_t b = std::uint64_t(1) << (i & 63);
    if (!(w & b)) {
      w |= b;
      ++order;
    }
  }

  bool subset_of(const SubgroupMask& other) const {
    for (size_t i = 0; i < bits.size(); ++i)
      if (bits[i] & ~other.bits[i]) return false;
    return true;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(order);
    for (int i = 0; i < width; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

  friend bool operator==(const SubgroupMask& a, const SubgroupMask& b) {
    return a.bits == b.bits;
  }
  // Deterministic "by bit pattern" order used everywhere a mask list is sorted.
  friend bool operator<(const SubgroupMask& a, const SubgroupMask& b) {
    return a.bits < b.bits;
  }
};

struct MaskBitsHash {
  size_t operator()(const std::vector<std::uint64_t>& w) const {
    size_t h = 1469598103934665603ull;
    for (std::uint64_t x : w) {
      h ^= size_t(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

// ---------------------------------------------------------------------------
// GroupTable: a finite p-group as an explicit multiplication table.
// Element 0 is always the identity.

struct GroupTable {
  int order = 0;
  int prime = 0;
  int exponent_n = 0;  // order == prime^exponent_n
  std::vector<int> table;
  std::vector<int> inverses;
  std::string label;

  int mul(int a, int b) const { return table[size_t(a) * order + b]; }
  int inv(int a) const { return inverses[a]; }
};

// Decomposes a group order as p^n. Throws for 0, 1 is allowed as p^0 only
// when a prime hint is supplied by the caller.
inline std::pair<int, int> prime_power_of(int order) {
  if (order < 2) throw std::invalid_argument("group order must be at least 2");
  int p = 0, n = 0, m = order;
  for (int d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = m;
  while (m % p == 0) {
    m /= p;
    ++n;
  }
  if (m != 1) throw std::invalid_argument("group order " + std::to_string(order) + " is not a prime power");
  return {p, n};
}

inline void validate_group(const GroupTable& g) {
  const int n = g.order;
  if (n <= 0 || n > kOrderCap) throw std::invalid_argument("group order out of range");
  auto [p, e] = prime_power_of(n == 1 ? 2 : n);
  if (n > 1 && (p != g.prime || e != g.exponent_n))
    throw std::invalid_argument("prime/exponent metadata inconsistent with order");
  if (g.table.size() != size_t(n) * n) throw std::invalid_argument("table size mismatch");
  for (size_t i = 0; i < g.table.size(); ++i)
    if (g.table[i] < 0 || g.table[i] >= n) throw std::invalid_argument("table entry out of range");
  for (int x = 0; x < n; ++x)
    if (g.mul(0, x) != x || g.mul(x, 0) != x)
      throw std::invalid_argument("element 0 is not a two-sided identity");
  // Latin square: each row and column is a permutation.
  std::vector<char> seen(n);
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      int v = g.mul(a, b);
      if (seen[v]) throw std::invalid_argument("row is not a permutation");
      seen[v] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      int v = g.mul(b, a);
      if (seen[v]) throw std::invalid_argument("column is not a permutation");
      seen[v] = 1;
    }
  }
  if (g.inverses.size() != size_t(n)) throw std::invalid_argument("inverse map size mismatch");
  for (int x = 0; x < n; ++x) {
    int y = g.inverses[x];
    if (y < 0 || y >= n || g.mul(x, y) != 0 || g.mul(y, x) != 0)
      throw std::invalid_argument("inverse map inconsistent");
  }
  // Associativity: exhaustive up to order 256, sampled above.
  if (n <= 256) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
            throw std::invalid_argument("associativity fails");
  } else {
    std::mt19937 rng(0xC0FFEE);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < 10000; ++i) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
        throw std::invalid_argument("associativity fails (sampled)");
    }
  }
}

// Builds a table from a multiplication callback and validates it.
inline GroupTable make_group(int order, int prime, std::string label,
                             const std::function<int(int, int)>& mul) {
  if (order < 1 || order > kOrderCap)
    throw std::invalid_argument("order cap exceeded: " + std::to_string(order));
  GroupTable g;
  g.order = order;
  g.prime = prime;
  g.exponent_n = order == 1 ? 0 : prime_power_of(order).second;
  g.label = std::move(label);
  g.table.resize(size_t(order) * order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) g.table[size_t(a) * order + b] = mul(a, b);
  g.inverses.assign(order, -1);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      if (g.mul(a, b) == 0 && g.mul(b, a) == 0) {
        g.inverses[a] = b;
        break;
      }
  if (order > 1) validate_group(g);
  return g;
}

// ---------------------------------------------------------------------------
// Element arithmetic.

inline int element_pow(const GroupTable& g, int x, int k) {
  int acc = 0;
  for (int i = 0; i < k; ++i) acc = g.mul(acc, x);
  return acc;
}

inline int element_order(const GroupTable& g, int x) {
  if (x < 0 || x >= g.order) throw std::out_of_range("element index out of range");
  int y = x, k = 1;
  while (y != 0) {
    y = g.mul(y, x);
    ++k;
    if (k > g.order) throw std::logic_error("element order exceeds group order");
  }
  return k;
}

inline std::vector<int> element_orders(const GroupTable& g) {
  std::vector<int> out(g.order);
  for (int x = 0; x < g.order; ++x) out[x] = element_order(g, x);
  return out;
}

// ---------------------------------------------------------------------------
// GroupProfile: exponent, abelian flags and the element-order census.

struct GroupProfile {
  bool is_abelian = false;
  bool is_cyclic = false;
  bool is_elementary_abelian = false;
  int exponent = 1;    // p^exponent_m
  int exponent_m = 0;
  std::map<int, int> order_census;  // element order -> count
};

inline GroupProfile group_profile(const GroupTable& g) {
  GroupProfile pr;
  pr.is_abelian = true;
  for (int a = 0; a < g.order && pr.is_abelian; ++a)
    for (int b = a + 1; b < g.order; ++b)
      if (g.mul(a, b) != g.mul(b, a)) {
        pr.is_abelian = false;
        break;
      }
  for (int x = 0; x < g.order; ++x) {
    int o = element_order(g, x);
    ++pr.order_census[o];
    pr.exponent = std::max(pr.exponent, o);
  }
  pr.exponent_m = 0;
  for (int e = pr.exponent; e > 1; e /= g.prime) ++pr.exponent_m;
  pr.is_cyclic = pr.order_census.count(g.order) > 0;
  pr.is_elementary_abelian = pr.is_abelian && pr.exponent <= g.prime;
  return pr;
}

// ---------------------------------------------------------------------------
// Subgroup machinery.

inline SubgroupMask mask_of(const GroupTable& g, const std::vector<int>& elems) {
  SubgroupMask m(g.order);
  m.set(0);
  for (int x : elems) {
    if (x < 0 || x >= g.order) throw std::out_of_range("element index out of range");
    m.set(x);
  }
  return m;
}

// Worklist closure: multiply until stable. Inverses come for free in a
// finite group.
inline SubgroupMask subgroup_closure(const GroupTable& g, const std::vector<int>& seed) {
  SubgroupMask m(g.order);
  std::vector<int> list;
  m.set(0);
  list.push_back(0);
  for (int x : seed)
    if (!m.test(x)) {
      m.set(x);
      list.push_back(x);
    }
  for (size_t i = 0; i < list.size(); ++i) {
    for (size_t j = 0; j < list.size(); ++j) {
      int a = g.mul(list[i], list[j]);
      if (!m.test(a)) {
        m.set(a);
        list.push_back(a);
      }
      int b = g.mul(list[j], list[i]);
      if (!m.test(b)) {
        m.set(b);
        list.push_back(b);
      }
    }
  }
  return m;
}

inline bool is_subgroup(const GroupTable& g, const SubgroupMask& h) {
  if (!h.test(0)) return false;
  auto mem = h.members();
  for (int a : mem)
    for (int b : mem)
      if (!h.test(g.mul(a, b))) return false;
  return true;
}

inline SubgroupMask center(const GroupTable& g) {
  SubgroupMask m(g.order);
  for (int x = 0; x < g.order; ++x) {
    bool central = true;
    for (int y = 0; y < g.order; ++y)
      if (g.mul(x, y) != g.mul(y, x)) {
        central = false;
        break;
      }
    if (central) m.set(x);
  }
  return m;
}

// Derived subgroup and Frattini subgroup. For p-groups the Frattini subgroup
// equals the closure of all commutators and all p-th powers.
inline std::pair<SubgroupMask, SubgroupMask> derived_and_frattini(const GroupTable& g) {
  std::vector<int> comms;
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y) {
      int c = g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y));
      comms.push_back(c);
    }
  SubgroupMask derived = subgroup_closure(g, comms);
  std::vector<int> frat_seed = comms;
  for (int x = 0; x < g.order; ++x) frat_seed.push_back(element_pow(g, x, g.prime));
  SubgroupMask frattini = subgroup_closure(g, frat_seed);
  return {derived, frattini};
}

inline bool is_normal(const GroupTable& g, const SubgroupMask& h) {
  if (!is_subgroup(g, h)) throw std::invalid_argument("mask is not closed under multiplication");
  auto mem = h.members();
  for (int x = 0; x < g.order; ++x) {
    for (int hh : mem)
      if (!h.test(g.mul(g.mul(x, hh), g.inv(x)))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Quotients and subgroup tables, both with identity-first deterministic
// numbering.

// Quotient G/N. Cosets are numbered by their minimal member index, so the
// identity coset (which contains 0) is element 0.
inline GroupTable quotient_with_map(const GroupTable& g, const SubgroupMask& n,
                                    std::vector<int>* coset_of_out) {
  if (!is_subgroup(g, n)) throw std::invalid_argument("quotient: N is not a subgroup");
  if (!is_normal(g, n)) throw std::invalid_argument("quotient: N is not normal");
  auto nm = n.members();
  std::vector<int> coset_of(g.order, -1);
  std::vector<int> reps;
  for (int x = 0; x < g.order; ++x) {
    if (coset_of[x] >= 0) continue;
    int id = int(reps.size());
    reps.push_back(x);  // x is the minimal member: smaller ones are already marked
    for (int h : nm) coset_of[g.mul(x, h)] = id;
  }
  int q = int(reps.size());
  GroupTable out = make_group(q, g.prime, g.label + "/" + std::to_string(n.order),
                              [&](int a, int b) { return coset_of[g.mul(reps[a], reps[b])]; });
  if (coset_of_out) *coset_of_out = std::move(coset_of);
  return out;
}

inline GroupTable quotient(const GroupTable& g, const SubgroupMask& n) {
  return quotient_with_map(g, n, nullptr);
}

// The subgroup H as a standalone table. Second result maps new indices back
// to element indices of G; identity-first holds because bit 0 is always set.
inline std::pair<GroupTable, std::vector<int>> sub_table(const GroupTable& g,
                                                         const SubgroupMask& h) {
  if (!is_subgroup(g, h)) throw std::invalid_argument("sub_table: mask is not a subgroup");
  std::vector<int> elems = h.members();
  std::vector<int> index_of(g.order, -1);
  for (size_t i = 0; i < elems.size(); ++i) index_of[elems[i]] = int(i);
  GroupTable out = make_group(int(elems.size()), g.prime,
                              g.label + "[" + std::to_string(h.order) + "]",
                              [&](int a, int b) { return index_of[g.mul(elems[a], elems[b])]; });
  return {out, elems};
}

}  // namespace pgx
