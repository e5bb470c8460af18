#pragma once

#include <unordered_set>

#include <json.hpp>

#include "pgx/bigint.hpp"
#include "pgx/group.hpp"

namespace pgx {

struct SubgroupLattice {
  int group_exponent_n = 0;
  int max_exponent = 0;  // layers 0..max_exponent are complete
  std::vector<std::vector<SubgroupMask>> by_exponent;
  std::vector<BigInt> counts_s, counts_c, counts_delta;

  bool complete() const { return max_exponent == group_exponent_n; }

  BigInt total_s() const {
    BigInt t = 0;
    for (const auto& v : counts_s) t += v;
    return t;
  }
  BigInt total_c() const {
    BigInt t = 0;
    for (const auto& v : counts_c) t += v;
    return t;
  }
};

// Full (or layer-truncated) subgroup enumeration.
//
// Layer k+1 is generated from layer k: every subgroup K of order p^{k+1}
// contains a maximal subgroup H of order p^k, H is normal in K, and any
// g in K \ H satisfies g^p in H and <H,g> = K. So extending each H by each
// surviving candidate g, as a union of the p cosets H g^i, reaches every
// subgroup exactly once after global deduplication. Candidates already
// covered by a previously found K over the same H are skipped: they would
// regenerate that same K.
inline SubgroupLattice enumerate_subgroups(const GroupTable& g, int kmax = -1) {
  if (g.order > kOrderCap) throw std::invalid_argument("enumerate_subgroups: order cap exceeded");
  const int n = g.exponent_n;
  const int p = g.prime;
  if (kmax < 0 || kmax > n) kmax = n;

  std::vector<int> orders = element_orders(g);
  std::vector<int> pth(g.order);
  for (int x = 0; x < g.order; ++x) pth[x] = element_pow(g, x, p);

  SubgroupLattice lat;
  lat.group_exponent_n = n;
  lat.max_exponent = kmax;
  lat.by_exponent.resize(kmax + 1);

  SubgroupMask triv(g.order);
  triv.set(0);
  triv.cyclic = true;
  lat.by_exponent[0].push_back(triv);

  for (int k = 0; k < kmax; ++k) {
    std::unordered_set<std::vector<std::uint64_t>, MaskBitsHash> seen;
    std::vector<SubgroupMask> next;
    for (const SubgroupMask& h : lat.by_exponent[k]) {
      const std::vector<int> mem = h.members();
      SubgroupMask covered = h;
      for (int cand = 0; cand < g.order; ++cand) {
        if (covered.test(cand)) continue;
        if (!h.test(pth[cand])) continue;
        bool normalizes = true;
        const int ci = g.inv(cand);
        for (int hh : mem) {
          if (!h.test(g.mul(g.mul(cand, hh), ci))) {
            normalizes = false;
            break;
          }
        }
        if (!normalizes) continue;
        SubgroupMask k_mask = h;
        std::vector<int> fresh;
        fresh.reserve(size_t(p - 1) * mem.size());
        int power = 0;
        for (int e = 1; e < p; ++e) {
          power = g.mul(power, cand);
          for (int hh : mem) {
            int v = g.mul(hh, power);
            k_mask.set(v);
            fresh.push_back(v);
          }
        }
        if (k_mask.order != h.order * p)
          throw std::logic_error("enumerate_subgroups: coset extension has wrong order");
        for (size_t w = 0; w < covered.bits.size(); ++w) covered.bits[w] |= k_mask.bits[w];
        if (seen.insert(k_mask.bits).second) {
          k_mask.cyclic = false;
          for (int v : fresh)
            if (orders[v] == k_mask.order) {
              k_mask.cyclic = true;
              break;
            }
          k_mask.generators = h.generators;
          k_mask.generators.push_back(cand);
          next.push_back(std::move(k_mask));
        }
      }
    }
    std::sort(next.begin(), next.end());
    lat.by_exponent[k + 1] = std::move(next);
  }

  lat.counts_s.resize(kmax + 1);
  lat.counts_c.resize(kmax + 1);
  lat.counts_delta.resize(kmax + 1);
  for (int k = 0; k <= kmax; ++k) {
    BigInt c = 0;
    for (const auto& m : lat.by_exponent[k])
      if (m.cyclic) ++c;
    lat.counts_s[k] = BigInt(lat.by_exponent[k].size());
    lat.counts_c[k] = c;
    lat.counts_delta[k] = lat.counts_s[k] - c;
  }
  if (kmax == n && lat.by_exponent[n].size() != 1)
    throw std::logic_error("enumerate_subgroups: top layer must be the whole group");
  return lat;
}

inline BigInt delta_total(const SubgroupLattice& lat) {
  if (!lat.complete()) throw std::invalid_argument("delta_total: lattice is truncated");
  BigInt t = 0;
  for (const auto& v : lat.counts_delta) t += v;
  return t;
}

// H2/H1 is an elementary abelian section iff every commutator and every
// square of H2 lies in H1 (the commutator condition also gives H1 normal in
// H2). Checked directly on the table; the unit tests cross-check this
// predicate against building the actual quotient.
inline bool is_elementary_section(const GroupTable& g, const std::vector<int>& h2_members,
                                  const SubgroupMask& h1) {
  for (int x : h2_members)
    if (!h1.test(g.mul(x, x))) return false;
  for (int x : h2_members) {
    const int xi = g.inv(x);
    for (int y : h2_members) {
      int c = g.mul(g.mul(xi, g.inv(y)), g.mul(x, y));
      if (!h1.test(c)) return false;
    }
  }
  return true;
}

// Number of sections H1 normal in H2 <= G with |H1| = 2^beta and H2/H1
// elementary abelian of order 2^alpha.
inline BigInt count_sections(const GroupTable& g, const SubgroupLattice& lat, int alpha,
                             int beta) {
  if (g.prime != 2) throw std::invalid_argument("count_sections: defined for p = 2 only");
  if (alpha < 0 || beta < 0 || alpha + beta > lat.max_exponent) return 0;
  BigInt count = 0;
  for (const auto& h2 : lat.by_exponent[alpha + beta]) {
    const auto mem = h2.members();
    for (const auto& h1 : lat.by_exponent[beta]) {
      if (!h1.subset_of(h2)) continue;
      if (is_elementary_section(g, mem, h1)) ++count;
    }
  }
  return count;
}

// All section counts at once: S[alpha][beta].
inline std::vector<std::vector<BigInt>> section_matrix(const GroupTable& g,
                                                       const SubgroupLattice& lat) {
  if (g.prime != 2) throw std::invalid_argument("section_matrix: defined for p = 2 only");
  const int n = lat.max_exponent;
  std::vector<std::vector<BigInt>> s(n + 1, std::vector<BigInt>(n + 1, 0));
  for (int b2 = 0; b2 <= n; ++b2) {
    for (const auto& h2 : lat.by_exponent[b2]) {
      const auto mem = h2.members();
      for (int b1 = 0; b1 <= b2; ++b1) {
        for (const auto& h1 : lat.by_exponent[b1]) {
          if (!h1.subset_of(h2)) continue;
          if (is_elementary_section(g, mem, h1)) ++s[b2 - b1][b1];
        }
      }
    }
  }
  return s;
}

inline std::vector<SubgroupMask> normal_subgroups_of_order(const GroupTable& g,
                                                           const SubgroupLattice& lat, int k) {
  if (k < 0 || k > lat.max_exponent) return {};
  std::vector<SubgroupMask> out;
  for (const auto& h : lat.by_exponent[k])
    if (is_normal(g, h)) out.push_back(h);
  return out;
}

// ---------------------------------------------------------------------------
// JSON export (count vectors as decimal strings to keep arbitrary precision).

inline nlohmann::ordered_json lattice_to_json(const GroupTable& g, const SubgroupLattice& lat) {
  nlohmann::ordered_json j;
  j["group"] = {{"spec", g.label}, {"order", g.order}, {"prime", g.prime},
                {"exponent", g.exponent_n}};
  j["subgroups"] = nlohmann::ordered_json::array();
  int id = 0;
  for (int k = 0; k <= lat.max_exponent; ++k) {
    for (const auto& h : lat.by_exponent[k]) {
      nlohmann::ordered_json rec;
      rec["id"] = id++;
      rec["order"] = h.order;
      rec["cyclic"] = h.cyclic;
      rec["normal"] = is_normal(g, h);
      rec["elements"] = h.members();
      j["subgroups"].push_back(std::move(rec));
    }
  }
  auto strs = [](const std::vector<BigInt>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(dec(x));
    return out;
  };
  j["counts"] = {{"s", strs(lat.counts_s)}, {"c", strs(lat.counts_c)},
                 {"delta", strs(lat.counts_delta)}};
  return j;
}

// Rebuilds a lattice from its JSON export. Trusts the payload only after
// shape checks against the group it is paired with.
inline SubgroupLattice lattice_from_json(const GroupTable& g, const nlohmann::ordered_json& j) {
  if (j.at("group").at("order").get<int>() != g.order ||
      j.at("group").at("prime").get<int>() != g.prime ||
      j.at("group").at("spec").get<std::string>() != g.label)
    throw std::invalid_argument("lattice_from_json: group mismatch");
  SubgroupLattice lat;
  lat.group_exponent_n = g.exponent_n;
  lat.max_exponent = g.exponent_n;
  lat.by_exponent.resize(g.exponent_n + 1);
  for (const auto& rec : j.at("subgroups")) {
    SubgroupMask m(g.order);
    for (int e : rec.at("elements").get<std::vector<int>>()) m.set(e);
    m.cyclic = rec.at("cyclic").get<bool>();
    auto [p, k] = m.order == 1 ? std::pair<int, int>{g.prime, 0} : prime_power_of(m.order);
    if (p != g.prime && m.order != 1)
      throw std::invalid_argument("lattice_from_json: bad subgroup order");
    lat.by_exponent[k].push_back(std::move(m));
  }
  lat.counts_s.resize(g.exponent_n + 1);
  lat.counts_c.resize(g.exponent_n + 1);
  lat.counts_delta.resize(g.exponent_n + 1);
  for (int k = 0; k <= g.exponent_n; ++k) {
    BigInt c = 0;
    for (const auto& m : lat.by_exponent[k])
      if (m.cyclic) ++c;
    lat.counts_s[k] = BigInt(lat.by_exponent[k].size());
    lat.counts_c[k] = c;
    lat.counts_delta[k] = lat.counts_s[k] - c;
  }
  auto sj = j.at("counts").at("s").get<std::vector<std::string>>();
  for (int k = 0; k <= g.exponent_n; ++k)
    if (BigInt(sj.at(k)) != lat.counts_s[k])
      throw std::invalid_argument("lattice_from_json: count vector mismatch");
  return lat;
}

}  // namespace pgx
