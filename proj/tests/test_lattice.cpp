#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "pgx/gaussian.hpp"
#include "pgx/lattice.hpp"
#include "pgx/spec_lang.hpp"

using namespace pgx;

namespace {
std::vector<BigInt> s_vector(const std::string& spec) {
  GroupTable g = build_from_spec(spec);
  return enumerate_subgroups(g).counts_s;
}

// Test-only oracle, independent of the layered enumeration: seed with all
// cyclic subgroups, extend every known subgroup by every outside element
// with the generic worklist closure, iterate to a fixpoint.
std::set<std::vector<std::uint64_t>> naive_subgroup_sets(const GroupTable& g) {
  std::set<std::vector<std::uint64_t>> all;
  std::vector<SubgroupMask> work;
  SubgroupMask triv(g.order);
  triv.set(0);
  all.insert(triv.bits);
  work.push_back(triv);
  for (int x = 0; x < g.order; ++x) {
    SubgroupMask c = subgroup_closure(g, {x});
    if (all.insert(c.bits).second) work.push_back(c);
  }
  for (size_t i = 0; i < work.size(); ++i) {
    SubgroupMask h = work[i];
    for (int x = 0; x < g.order; ++x) {
      if (h.test(x)) continue;
      auto seed = h.members();
      seed.push_back(x);
      SubgroupMask k = subgroup_closure(g, seed);
      if (all.insert(k.bits).second) work.push_back(k);
    }
  }
  return all;
}
}  // namespace

TEST_CASE("layered enumeration matches the naive closure fixpoint") {
  for (const char* spec : {"D16", "Q16", "SDP16A", "SDP16B", "Heis(3)", "Mp3(3)", "ESp(2)",
                           "ESm(2)", "Mod32", "C3^3", "D8 x C2^2", "C9 x C3", "D8 * C4"}) {
    GroupTable g = build_from_spec(spec);
    auto naive = naive_subgroup_sets(g);
    SubgroupLattice l = enumerate_subgroups(g);
    size_t fast_count = 0;
    bool all_present = true;
    for (const auto& layer : l.by_exponent)
      for (const auto& m : layer) {
        ++fast_count;
        if (!naive.count(m.bits)) all_present = false;
      }
    INFO(spec);
    CHECK(fast_count == naive.size());
    CHECK(all_present);
  }
}

TEST_CASE("hand-checkable lattices") {
  // C_p has the trivial subgroup and itself
  CHECK(s_vector("C2") == std::vector<BigInt>{1, 1});
  CHECK(s_vector("C5") == std::vector<BigInt>{1, 1});

  // cyclic groups have one subgroup per divisor
  CHECK(s_vector("C9") == std::vector<BigInt>{1, 1, 1});
  CHECK(s_vector("C16") == std::vector<BigInt>{1, 1, 1, 1, 1});

  GroupTable d8 = build_from_spec("D8");
  SubgroupLattice l = enumerate_subgroups(d8);
  CHECK(l.counts_s == std::vector<BigInt>{1, 5, 3, 1});
  CHECK(l.counts_c == std::vector<BigInt>{1, 5, 1, 0});
  CHECK(l.counts_delta == std::vector<BigInt>{0, 0, 2, 1});
  CHECK(delta_total(l) == 3);

  GroupTable e8 = build_from_spec("C2^3");
  SubgroupLattice le = enumerate_subgroups(e8);
  CHECK(le.total_s() == 16);
  CHECK(le.counts_s == std::vector<BigInt>{1, 7, 7, 1});
  CHECK(delta_total(le) == 8);

  CHECK(delta_total(enumerate_subgroups(build_from_spec("Q8"))) == 1);
  CHECK(delta_total(enumerate_subgroups(build_from_spec("C3^3"))) == 14);

  GroupTable heis = build_from_spec("Heis(3)");
  SubgroupLattice lh = enumerate_subgroups(heis);
  CHECK(lh.counts_s == std::vector<BigInt>{1, 13, 4, 1});
  CHECK(delta_total(lh) == 5);

  CHECK(delta_total(enumerate_subgroups(build_from_spec("Ab(2;2,1)"))) ==
        enumerate_subgroups(build_from_spec("Ab(2;2,1)")).counts_delta[1] + 1 + 1);
  // delta_2(C4 x C2) = 1: one Klein subgroup
  CHECK(enumerate_subgroups(build_from_spec("Ab(2;2,1)")).counts_delta[2] == 1);
}

TEST_CASE("two-generator 2-group family lattices") {
  // hand-enumerable from the standard normal forms
  GroupTable q16 = build_from_spec("Q16");
  SubgroupLattice lq = enumerate_subgroups(q16);
  CHECK(lq.counts_s == std::vector<BigInt>{1, 1, 5, 3, 1});  // unique involution
  CHECK(lq.counts_delta == std::vector<BigInt>{0, 0, 0, 2, 1});

  CHECK(enumerate_subgroups(build_from_spec("D16")).counts_s ==
        std::vector<BigInt>{1, 9, 5, 3, 1});
  CHECK(enumerate_subgroups(build_from_spec("SD16")).counts_s ==
        std::vector<BigInt>{1, 5, 5, 3, 1});
  CHECK(enumerate_subgroups(build_from_spec("Mod16")).counts_s ==
        std::vector<BigInt>{1, 3, 3, 3, 1});

  // Mp3(3) and C9 x C3 share every layer count without being isomorphic
  SubgroupLattice lm = enumerate_subgroups(build_from_spec("Mp3(3)"));
  SubgroupLattice lc = enumerate_subgroups(build_from_spec("C9 x C3"));
  CHECK(lm.counts_s == std::vector<BigInt>{1, 4, 4, 1});
  CHECK(lm.counts_s == lc.counts_s);
  CHECK(lm.counts_c == lc.counts_c);
  CHECK(find_isomorphisms(build_from_spec("Mp3(3)"), build_from_spec("C9 x C3")).empty());
}

TEST_CASE("elementary abelian counts match Gaussian binomials") {
  for (int p : {2, 3, 5}) {
    for (int n = 1; n <= (p == 2 ? 5 : (p == 3 ? 4 : 3)); ++n) {
      GroupTable g = build_abelian(p, std::vector<int>(n, 1));
      SubgroupLattice l = enumerate_subgroups(g);
      for (int k = 0; k <= n; ++k) {
        INFO("p=" << p << " n=" << n << " k=" << k);
        CHECK(l.counts_s[k] == gauss_binomial(n, k, p));
      }
    }
  }
}

TEST_CASE("lattice structural invariants") {
  for (const char* spec : {"D16", "Q16", "SD16", "Mod16", "Ab(2;2,2)", "Heis(3)", "Mp3(3)",
                           "SDP16A", "SDP16B", "D8 * C4", "D8 x C2^4"}) {
    GroupTable g = build_from_spec(spec);
    SubgroupLattice l = enumerate_subgroups(g);
    INFO(spec);
    CHECK(l.counts_s[0] == 1);
    CHECK(l.counts_s[g.exponent_n] == 1);
    CHECK(l.counts_c[0] == 1);
    for (int k = 0; k <= g.exponent_n; ++k)
      CHECK(l.counts_delta[k] == l.counts_s[k] - l.counts_c[k]);
    // every mask is closed under multiplication and inverses
    for (const auto& layer : l.by_exponent)
      for (const auto& m : layer) REQUIRE(is_subgroup(g, m));
    // masks sorted and distinct within each layer
    for (const auto& layer : l.by_exponent)
      for (size_t i = 1; i < layer.size(); ++i) REQUIRE(layer[i - 1] < layer[i]);
    // non-cyclic groups have s_m >= 2 for 1 < m < n (Q16 shows m = 1 is
    // genuinely excluded: its unique involution lies in every subgroup)
    if (!group_profile(g).is_cyclic)
      for (int k = 2; k < g.exponent_n; ++k) CHECK(l.counts_s[k] >= 2);
  }
}

TEST_CASE("census identity from cyclic subgroup counts") {
  for (const char* spec : {"D8", "Q16", "Heis(3)", "Mp3(3)", "C4 x C4", "C5^2", "SD32"}) {
    GroupTable g = build_from_spec(spec);
    SubgroupLattice l = enumerate_subgroups(g);
    BigInt total = 1;
    for (int k = 1; k <= g.exponent_n; ++k)
      total += (big_pow(g.prime, k) - big_pow(g.prime, k - 1)) * l.counts_c[k];
    INFO(spec);
    CHECK(total == g.order);
  }
}

TEST_CASE("enumeration determinism") {
  GroupTable g = build_from_spec("SD16 x C2");
  SubgroupLattice a = enumerate_subgroups(g);
  SubgroupLattice b = enumerate_subgroups(g);
  REQUIRE(a.by_exponent.size() == b.by_exponent.size());
  for (size_t k = 0; k < a.by_exponent.size(); ++k) {
    REQUIRE(a.by_exponent[k].size() == b.by_exponent[k].size());
    for (size_t i = 0; i < a.by_exponent[k].size(); ++i)
      REQUIRE(a.by_exponent[k][i] == b.by_exponent[k][i]);
  }
}

TEST_CASE("truncated enumeration matches full enumeration") {
  GroupTable g = build_from_spec("D8 x C2^2");
  SubgroupLattice full = enumerate_subgroups(g);
  SubgroupLattice part = enumerate_subgroups(g, 2);
  CHECK_FALSE(part.complete());
  for (int k = 0; k <= 2; ++k) {
    CHECK(part.counts_s[k] == full.counts_s[k]);
    CHECK(part.counts_c[k] == full.counts_c[k]);
  }
  CHECK_THROWS_AS(delta_total(part), std::invalid_argument);
}

TEST_CASE("normal subgroups by order") {
  GroupTable d8 = build_from_spec("D8");
  SubgroupLattice l = enumerate_subgroups(d8);
  CHECK(normal_subgroups_of_order(d8, l, 0).size() == 1);
  CHECK(normal_subgroups_of_order(d8, l, 1).size() == 1);  // just the center
  CHECK(normal_subgroups_of_order(d8, l, 2).size() == 3);  // index-2 subgroups

  GroupTable e8 = build_from_spec("C2^3");
  CHECK(normal_subgroups_of_order(e8, enumerate_subgroups(e8), 1).size() == 7);
}

TEST_CASE("section counts") {
  GroupTable d8 = build_from_spec("D8");
  SubgroupLattice l = enumerate_subgroups(d8);

  // alpha = 0 collapses to counting subgroups of order 2^beta
  for (int beta = 0; beta <= 3; ++beta)
    CHECK(count_sections(d8, l, 0, beta) == l.counts_s[beta]);

  CHECK(count_sections(d8, l, 2, 0) == 2);  // the two Klein subgroups
  CHECK(count_sections(d8, l, 1, 1) == 7);
  CHECK(count_sections(d8, l, 2, 1) == 1);  // only D8 / center

  CHECK_THROWS_AS(count_sections(build_from_spec("C3^2"),
                                 enumerate_subgroups(build_from_spec("C3^2")), 1, 0),
                  std::invalid_argument);

  // the fast predicate agrees with building the quotient and profiling it
  GroupTable g = build_from_spec("D8 x C2");
  SubgroupLattice lg = enumerate_subgroups(g);
  for (int alpha = 0; alpha <= 4; ++alpha) {
    for (int beta = 0; alpha + beta <= 4; ++beta) {
      BigInt direct = 0;
      for (const auto& h2 : lg.by_exponent[alpha + beta]) {
        auto [sub, elems] = sub_table(g, h2);
        for (const auto& h1 : lg.by_exponent[beta]) {
          if (!h1.subset_of(h2)) continue;
          SubgroupMask inner(sub.order);
          for (size_t i = 0; i < elems.size(); ++i)
            if (h1.test(elems[i])) inner.set(int(i));
          if (!is_normal(sub, inner)) continue;
          if (group_profile(quotient(sub, inner)).is_elementary_abelian) ++direct;
        }
      }
      INFO("alpha=" << alpha << " beta=" << beta);
      CHECK(count_sections(g, lg, alpha, beta) == direct);
    }
  }

  // section matrix agrees with individual queries
  auto s = section_matrix(d8, l);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 3; ++b) CHECK(s[a][b] == count_sections(d8, l, a, b));
}

TEST_CASE("lattice JSON round-trip") {
  GroupTable g = build_from_spec("D8");
  SubgroupLattice l = enumerate_subgroups(g);
  auto j = lattice_to_json(g, l);
  CHECK(j["subgroups"].size() == 10);
  CHECK(j["counts"]["s"] == std::vector<std::string>{"1", "5", "3", "1"});
  SubgroupLattice back = lattice_from_json(g, j);
  CHECK(back.counts_s == l.counts_s);
  CHECK(back.counts_c == l.counts_c);
  for (size_t k = 0; k < l.by_exponent.size(); ++k) {
    REQUIRE(back.by_exponent[k].size() == l.by_exponent[k].size());
    for (size_t i = 0; i < l.by_exponent[k].size(); ++i)
      CHECK(back.by_exponent[k][i] == l.by_exponent[k][i]);
  }

  GroupTable other = build_from_spec("Q8");
  CHECK_THROWS_AS(lattice_from_json(other, j), std::invalid_argument);

  // serialized bytes are deterministic
  CHECK(lattice_to_json(g, l).dump() == lattice_to_json(g, enumerate_subgroups(g)).dump());
}
