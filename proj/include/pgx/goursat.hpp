#pragma once

#include <map>

#include "pgx/construct.hpp"
#include "pgx/iso.hpp"
#include "pgx/lattice.hpp"

namespace pgx {

// One subgroup of A x B in Goursat form: A1 normal in A2 <= A, B1 normal in
// B2 <= B, and an isomorphism phi between the two sections. The realized
// subgroup is {(a,b) in A2 x B2 : phi(a A1) = b B1}, of order
// |A1||B2| = |A2||B1|, indexed as a*|B|+b to match direct_product numbering.
struct QuintupleRecord {
  SubgroupMask a1, a2, b1, b2;
  std::vector<int> phi;  // coset index in A2/A1 -> coset index in B2/B1
  SubgroupMask realized;
};

namespace detail {

// A section H2/H1 prepared for isomorphism matching: the quotient table plus
// the map from parent-group elements to coset indices (-1 outside H2).
struct Section {
  SubgroupMask h1, h2;
  GroupTable quot;
  std::vector<int> coset_of;  // indexed by parent-group element
};

inline std::vector<Section> all_sections(const GroupTable& g, const SubgroupLattice& lat) {
  std::vector<Section> out;
  for (int k2 = 0; k2 <= lat.max_exponent; ++k2) {
    for (const auto& h2 : lat.by_exponent[k2]) {
      auto [sub, elems] = sub_table(g, h2);
      for (int k1 = 0; k1 <= k2; ++k1) {
        for (const auto& h1 : lat.by_exponent[k1]) {
          if (!h1.subset_of(h2)) continue;
          SubgroupMask inner(sub.order);
          for (size_t i = 0; i < elems.size(); ++i)
            if (h1.test(elems[i])) inner.set(int(i));
          if (!is_normal(sub, inner)) continue;  // normality relative to H2
          std::vector<int> inner_cosets;
          Section s;
          s.h1 = h1;
          s.h2 = h2;
          s.quot = quotient_with_map(sub, inner, &inner_cosets);
          s.coset_of.assign(g.order, -1);
          for (size_t i = 0; i < elems.size(); ++i) s.coset_of[elems[i]] = inner_cosets[i];
          out.push_back(std::move(s));
        }
      }
    }
  }
  return out;
}

}  // namespace detail

// Enumerates every subgroup of A x B through Goursat quintuples. The output
// is sorted by realized mask; distinct quintuples always realize distinct
// subgroups.
inline std::vector<QuintupleRecord> goursat_enumerate(const GroupTable& a, const GroupTable& b) {
  if ((long long)a.order * b.order > kOrderCap)
    throw std::invalid_argument("goursat_enumerate: order cap exceeded");
  SubgroupLattice la = enumerate_subgroups(a);
  SubgroupLattice lb = enumerate_subgroups(b);
  std::vector<detail::Section> sa = detail::all_sections(a, la);
  std::vector<detail::Section> sb = detail::all_sections(b, lb);

  std::vector<QuintupleRecord> out;
  std::unordered_set<std::vector<std::uint64_t>, MaskBitsHash> seen;
  for (const auto& secA : sa) {
    for (const auto& secB : sb) {
      if (secA.quot.order != secB.quot.order) continue;
      for (const auto& phi : find_isomorphisms(secA.quot, secB.quot)) {
        QuintupleRecord rec;
        rec.a1 = secA.h1;
        rec.a2 = secA.h2;
        rec.b1 = secB.h1;
        rec.b2 = secB.h2;
        rec.phi = phi;
        rec.realized = SubgroupMask(a.order * b.order);
        for (int x : secA.h2.members()) {
          int target = phi[secA.coset_of[x]];
          for (int y : secB.h2.members())
            if (secB.coset_of[y] == target) rec.realized.set(x * b.order + y);
        }
        if (rec.realized.order != secA.h1.order * secB.h2.order ||
            rec.realized.order != secA.h2.order * secB.h1.order)
          throw std::logic_error("goursat: quintuple order law violated");
        if (!seen.insert(rec.realized.bits).second)
          throw std::logic_error("goursat: duplicate realized subgroup");
        out.push_back(std::move(rec));
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const QuintupleRecord& x, const QuintupleRecord& y) {
              return x.realized < y.realized;
            });
  return out;
}

// ---------------------------------------------------------------------------
// delta_2 of A x C_2^m by formula.
//
// Corrected mode counts the Klein subgroups of A x C_2^m per Goursat case,
// including the A1-choice multiplicity (3 per Klein A2), the isomorphism
// multiplicity (6 when both sections are C2 x C2) and the A1 = A2 case:
//
//   [m,2] + s_1(A) 2^{m-1} [m,1] + delta_2(A) (1 + 3(2^m - 1) + 6 [m,2]).
//
// Displayed mode evaluates the uncorrected case totals
//
//   [m,2] + s_1(A) 2^{m-1} [m,1] + delta_2(A) ((2^m - 1) + [m,2])
//
// as printed in the source derivation; it exists only so the discrepancy can
// be reported, and is not a correct count.

enum class Delta2Mode { Corrected, Displayed };

inline BigInt delta2_product_count(const GroupTable& a, int m, Delta2Mode mode) {
  if (a.prime != 2) throw std::invalid_argument("delta2_product_count: requires p = 2");
  if (m < 0) throw std::invalid_argument("delta2_product_count: m must be >= 0");
  SubgroupLattice la = enumerate_subgroups(a, std::min(2, a.exponent_n));
  BigInt s1 = la.counts_s.size() > 1 ? la.counts_s[1] : 0;
  BigInt d2 = la.counts_delta.size() > 2 ? la.counts_delta[2] : 0;
  BigInt g1 = gauss_binomial(m, 1, 2);
  BigInt g2 = gauss_binomial(m, 2, 2);
  BigInt total = g2;
  if (m >= 1) total += s1 * big_pow(2, m - 1) * g1;
  if (mode == Delta2Mode::Corrected)
    total += d2 * (1 + 3 * (big_pow(2, m) - 1) + 6 * g2);
  else
    total += d2 * ((big_pow(2, m) - 1) + g2);
  return total;
}

// Brute-force delta_2(A x C_2^m): layers 0..2 of the product lattice.
inline BigInt delta2_bruteforce(const GroupTable& a, int m) {
  GroupTable g = a;
  GroupTable c2 = build_cyclic(2, 1);
  for (int i = 0; i < m; ++i) g = direct_product(g, c2);
  SubgroupLattice l = enumerate_subgroups(g, std::min(2, g.exponent_n));
  return l.counts_delta.size() > 2 ? l.counts_delta[2] : 0;
}

}  // namespace pgx
