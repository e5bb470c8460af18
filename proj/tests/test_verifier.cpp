#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include "pgx/catalog.hpp"
#include "pgx/verify.hpp"

using namespace pgx;

TEST_CASE("catalog entries parse, build and match their tags") {
  LatticeStore store;
  int order16 = 0;
  for (const auto& e : default_catalog()) {
    INFO(e.spec);
    const GroupTable& g = store.group(e.spec);
    REQUIRE(g.order >= 2);
    CHECK(g.label == e.spec);
    const GroupProfile& prof = store.profile(e.spec);
    if (e.has_tag("abelian")) CHECK(prof.is_abelian);
    if (e.has_tag("elementary-abelian")) CHECK(prof.is_elementary_abelian);
    if (e.has_tag("odd-p")) CHECK(g.prime % 2 == 1);
    if (e.has_tag("extraspecial")) CHECK(classify_special(g) == SpecialClass::Extraspecial);
    if (e.has_tag("almost-extraspecial"))
      CHECK(classify_special(g) == SpecialClass::AlmostExtraspecial);
    if (e.has_tag("order-16-complete")) {
      CHECK(g.order == 16);
      ++order16;
    }
  }
  CHECK(order16 == 14);
}

TEST_CASE("check registry") {
  CHECK(check_registry().size() >= 16);
  LatticeStore store;
  for (const auto& c : check_registry()) {
    CHECK_FALSE(c.id.empty());
    CHECK_FALSE(c.description.empty());
  }
  CHECK_THROWS_AS(run_check("nosuch"), std::invalid_argument);
}

TEST_CASE("every registered check passes with default parameters, idempotently") {
  LatticeStore store;
  for (const auto& c : check_registry()) {
    CheckReport rep = run_check(c.id, {}, store);
    INFO(c.id << ": " << (rep.witnesses.empty() ? "" : rep.witnesses.front()));
    CHECK(rep.status == "Pass");
    auto ja = report_to_json(rep);
    auto jb = report_to_json(run_check(c.id, {}, store));
    ja.erase("elapsed_ms");
    jb.erase("elapsed_ms");
    CHECK(ja == jb);
  }
}

TEST_CASE("reports are deterministic and idempotent") {
  LatticeStore store;
  CheckParams params;
  params.max_n = 4;
  CheckReport a = run_check("thm1.1", params, store);
  CheckReport b = run_check("thm1.1", params, store);
  auto ja = report_to_json(a);
  auto jb = report_to_json(b);
  ja.erase("elapsed_ms");
  jb.erase("elapsed_ms");
  CHECK(ja == jb);
}

TEST_CASE("thm1.1 equality rows are exactly the elementary abelian entries") {
  LatticeStore store;
  CheckParams params;
  params.max_n = 4;
  CheckReport rep = run_check("thm1.1", params, store);
  CHECK(rep.status == "Pass");
  for (const auto& row : rep.rows) {
    bool el_ab = store.profile(row.spec).is_elementary_abelian;
    CHECK((row.lhs == row.rhs) == el_ab);
  }
}

TEST_CASE("thm3.4 closed-form row at n = 4") {
  LatticeStore store;
  CheckParams params;
  params.min_n = 4;
  params.max_n = 4;
  CheckReport rep = run_check("thm3.4", params, store);
  CHECK(rep.status == "Pass");
  bool found = false;
  for (const auto& row : rep.rows)
    if (row.spec == "D8 x C2" && row.relation == "eq") {
      CHECK(row.lhs == "13");
      found = true;
    }
  CHECK(found);
}

TEST_CASE("prop3.2 rows coincide with thm3.3 at r = 1") {
  LatticeStore store;
  CheckParams params;
  params.max_n = 5;  // order <= 32
  CheckReport p32 = run_check("prop3.2", params, store);
  CheckReport t33 = run_check("thm3.3", params, store);
  CHECK(p32.status == "Pass");
  CHECK(t33.status == "Pass");
  std::map<std::string, std::pair<std::string, std::string>> r1_rows;
  for (const auto& row : t33.rows)
    if (row.note.rfind("r=1,", 0) == 0) r1_rows[row.spec] = {row.lhs, row.rhs};
  REQUIRE_FALSE(r1_rows.empty());
  for (const auto& row : p32.rows) {
    auto it = r1_rows.find(row.spec);
    REQUIRE(it != r1_rows.end());
    CHECK(it->second.first == row.lhs);
    CHECK(it->second.second == row.rhs);
  }
}

TEST_CASE("prop3.1 holds for odd p and is violated at p = 2 when evaluated") {
  LatticeStore store;
  CheckParams params;
  params.max_n = 4;
  params.experimental_p2 = true;
  CheckReport rep = run_check("prop3.1", params, store);
  CHECK(rep.status == "Pass");  // p = 2 rows are reported, never asserted
  bool saw_violation = false;
  for (const auto& row : rep.rows)
    if (row.note.find("violated (not asserted)") != std::string::npos) saw_violation = true;
  CHECK(saw_violation);  // D8 violates the odd-p bound
}

TEST_CASE("lem2.6 structure check passes") {
  CheckReport rep = run_check("lem2.6");
  CHECK(rep.status == "Pass");
}

TEST_CASE("delta2-formula reports the two canonical discrepancies") {
  LatticeStore store;
  CheckParams params;
  CheckReport rep = run_check("delta2-formula", params, store);
  CHECK(rep.status == "Pass");
  int corrected_rows = 0;
  bool klein = false, d8 = false;
  for (const auto& row : rep.rows) {
    if (row.relation == "eq") ++corrected_rows;
    if (row.relation == "ne" && row.spec.rfind("C2^2", 0) == 0) {
      klein = true;
      CHECK(row.lhs == "4");
      CHECK(row.rhs == "7");
    }
    if (row.relation == "ne" && row.spec.rfind("D8", 0) == 0) {
      d8 = true;
      CHECK(row.lhs == "7");
      CHECK(row.rhs == "13");
    }
  }
  CHECK(corrected_rows >= 10);
  CHECK(klein);
  CHECK(d8);
}

TEST_CASE("lattice cache round-trips through disk") {
  auto dir = std::filesystem::temp_directory_path() / "pgx_cache_test";
  std::filesystem::remove_all(dir);
  {
    LatticeStore store(dir.string());
    CHECK(store.delta("D8") == 3);
  }
  REQUIRE(std::filesystem::exists(dir));
  size_t files = std::distance(std::filesystem::directory_iterator(dir),
                               std::filesystem::directory_iterator{});
  CHECK(files == 1);
  {
    LatticeStore store(dir.string());
    CHECK(store.delta("D8") == 3);  // served from cache
    CHECK(store.lattice("D8").counts_s == std::vector<BigInt>{1, 5, 3, 1});
  }
  std::filesystem::remove_all(dir);
}
