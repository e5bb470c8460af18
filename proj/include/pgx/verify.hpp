#pragma once

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>

#include <json.hpp>

#include "pgx/catalog.hpp"
#include "pgx/goursat.hpp"
#include "pgx/lattice.hpp"

namespace pgx {

inline constexpr const char* kEngineVersion = "pgx-0.1.0";

struct CheckParams {
  std::optional<int> p;
  std::optional<int> min_n;  // not exposed on the CLI; used by the harness
  std::optional<int> max_n;
  bool experimental_p2 = false;
  std::string cache_dir;
};

struct CheckRow {
  std::string spec;      // group spec the quantities are reproducible from
  std::string lhs, rhs;  // decimal strings
  std::string relation;  // expected relation: "eq", "le", "lt", "ne"
  bool ok = false;
  std::string note;
};

struct CheckReport {
  std::string check_id;
  nlohmann::ordered_json parameters;
  std::string domain;  // explicit quantification domain
  std::string status;  // Pass | Fail | Skipped
  std::vector<CheckRow> rows;
  std::vector<std::string> witnesses;
  double elapsed_ms = 0.0;
};

inline nlohmann::ordered_json report_to_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["check_id"] = r.check_id;
  j["parameters"] = r.parameters;
  j["domain"] = r.domain;
  j["status"] = r.status;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    nlohmann::ordered_json x;
    x["spec"] = row.spec;
    x["lhs"] = row.lhs;
    x["rhs"] = row.rhs;
    x["relation"] = row.relation;
    x["ok"] = row.ok;
    x["note"] = row.note;
    j["rows"].push_back(std::move(x));
  }
  j["witnesses"] = r.witnesses;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

// ---------------------------------------------------------------------------
// LatticeStore: builds groups from spec strings and memoizes their lattices,
// optionally backed by an on-disk cache keyed by spec string + engine
// version. The cache is an optimization only; a mismatched or unreadable
// entry is recomputed and rewritten.

class LatticeStore {
 public:
  explicit LatticeStore(std::string cache_dir = "") : cache_dir_(std::move(cache_dir)) {}

  const GroupTable& group(const std::string& spec) {
    auto it = groups_.find(spec);
    if (it == groups_.end()) it = groups_.emplace(spec, build_from_spec(spec)).first;
    return it->second;
  }

  const GroupProfile& profile(const std::string& spec) {
    auto it = profiles_.find(spec);
    if (it == profiles_.end()) it = profiles_.emplace(spec, group_profile(group(spec))).first;
    return it->second;
  }

  const SubgroupLattice& lattice(const std::string& spec) {
    auto it = lattices_.find(spec);
    if (it != lattices_.end()) return it->second;
    const GroupTable& g = group(spec);
    if (!cache_dir_.empty()) {
      auto path = cache_path(spec);
      std::ifstream in(path);
      if (in) {
        try {
          auto j = nlohmann::ordered_json::parse(in);
          return lattices_.emplace(spec, lattice_from_json(g, j)).first->second;
        } catch (const std::exception&) {
          // fall through and recompute
        }
      }
    }
    SubgroupLattice lat = enumerate_subgroups(g);
    if (!cache_dir_.empty()) {
      std::error_code ec;
      std::filesystem::create_directories(cache_dir_, ec);
      auto path = cache_path(spec);
      auto tmp = path;
      tmp += ".tmp";
      {
        std::ofstream out(tmp);
        out << lattice_to_json(g, lat).dump() << "\n";
      }
      std::filesystem::rename(tmp, path, ec);  // atomic publish
    }
    return lattices_.emplace(spec, std::move(lat)).first->second;
  }

  BigInt delta(const std::string& spec) { return delta_total(lattice(spec)); }

 private:
  std::filesystem::path cache_path(const std::string& spec) const {
    std::uint64_t h = 1469598103934665603ull;
    std::string key = std::string(kEngineVersion) + "|" + spec;
    for (unsigned char c : key) {
      h ^= c;
      h *= 1099511628211ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::filesystem::path(cache_dir_) / (std::string(buf) + ".json");
  }

  std::map<std::string, GroupTable> groups_;
  std::map<std::string, GroupProfile> profiles_;
  std::map<std::string, SubgroupLattice> lattices_;
  std::string cache_dir_;
};

// ---------------------------------------------------------------------------
// Shared helpers for the checks.

namespace detail {

inline std::string cp_power_label(const std::string& base, int p, int count) {
  if (count <= 0) return base;
  std::string tail = "C" + std::to_string(p);
  if (count > 1) tail += "^" + std::to_string(count);
  return base + " x " + tail;
}

inline std::string d8_ref_label(int n) { return cp_power_label("D8", 2, n - 3); }
inline std::string heis_ref_label(int p, int n) {
  return cp_power_label("Heis(" + std::to_string(p) + ")", p, n - 3);
}

inline std::vector<const CatalogEntry*> catalog_slice(int p, int min_n, int max_n,
                                                      LatticeStore& store) {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : default_catalog()) {
    const GroupTable& g = store.group(e.spec);
    if (g.prime != p) continue;
    if (g.exponent_n < min_n || g.exponent_n > max_n) continue;
    out.push_back(&e);
  }
  return out;
}

inline std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int next = std::min(rest, maxpart); next >= 1; --next) {
      cur.push_back(next);
      rec(rest - next, next);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

inline std::string abelian_spec(int p, const std::vector<int>& partition) {
  std::string s = "Ab(" + std::to_string(p) + ";";
  for (size_t i = 0; i < partition.size(); ++i)
    s += (i ? "," : "") + std::to_string(partition[i]);
  return s + ")";
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

inline void finish(CheckReport& rep, const Timer& t) {
  rep.elapsed_ms = t.ms();
  for (const auto& row : rep.rows)
    if (!row.ok) rep.witnesses.push_back(row.spec + (row.note.empty() ? "" : " [" + row.note + "]"));
  if (rep.status.empty()) rep.status = rep.witnesses.empty() ? "Pass" : "Fail";
}

// Memoized delta vectors of Q x C_p^r, deduplicated by isomorphism type of Q.
struct QuotientProductMemo {
  struct Entry {
    GroupTable rep;
    GroupProfile prof;
    std::vector<BigInt> delta;
  };
  std::map<int, std::vector<Entry>> by_r;

  const std::vector<BigInt>& get(const GroupTable& q, int r) {
    auto& bucket = by_r[r];
    GroupProfile pq = group_profile(q);
    for (auto& e : bucket) {
      if (e.rep.order != q.order || e.prof.is_abelian != pq.is_abelian ||
          e.prof.order_census != pq.order_census)
        continue;
      if (isomorphic(e.rep, q)) return e.delta;
    }
    GroupTable t = q;
    GroupTable cp = build_cyclic(q.prime, 1);
    for (int i = 0; i < r; ++i) t = direct_product(t, cp);
    SubgroupLattice lat = enumerate_subgroups(t);
    bucket.push_back({q, std::move(pq), lat.counts_delta});
    return bucket.back().delta;
  }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// The checks.

inline CheckReport check_thm11(const CheckParams& params, LatticeStore& store) {
  detail::Timer t;
  CheckReport rep;
  rep.check_id = "thm1.1";
  int max_n = params.max_n.value_or(5);
  std::vector<int> ps = params.p ? std::vector<int>{*params.p} : std::vector<int>{2, 3};
  rep.parameters = {{"p", ps}, {"max_n", max_n}};
  rep.domain = "all catalog groups with the given primes and order p^n, n <= " +
               std::to_string(max_n) + " (catalog-quantified)";
  for (int p : ps) {
    for (const auto* e : detail::catalog_slice(p, 1, max_n, store)) {
      const GroupTable& g = store.group(e->spec);
      BigInt delta = store.delta(e->spec);
      BigInt bound = elementary_abelian_delta_bound(g.exponent_n, p);
      bool el_ab = store.profile(e->spec).is_elementary_abelian;
      CheckRow row;
      row.spec = e->spec;
      row.lhs = dec(delta);
      row.rhs = dec(bound);
      row.relation = el_ab ? "eq" : "lt";
      row.ok = delta <= bound && ((delta == bound) == el_ab);
      row.note = el_ab ? "elementary abelian: equality required" : "strict inequality required";
      rep.rows.push_back(std::move(row));
    }
  }
  detail::finish(rep, t);
  return rep;
}

inline CheckReport check_thm12(const CheckParams& params, LatticeStore& store) {
  detail::Timer t;
  CheckReport rep;
  rep.check_id = "thm1.2";
  int p = params.p.value_or(3);
  int max_n = params.max_n.value_or(5);
  int min_n = params.min_n.value_or(3);
  rep.parameters = {{"p", p}, {"min_n", min_n}, {"max_n", max_n}};
  rep.domain = "non-elementary-abelian catalog groups of order p^n, p = " + std::to_string(p) +
               ", " + std::to_string(min_n) + " <= n <= " + std::to_string(max_n);
  if (p == 2 || !is_prime(p)) {
    rep.status = "Skipped";
    rep.domain += " (stated for odd primes only)";
    detail::finish(rep, t);
    return rep;
  }
  for (int n = min_n; n <= max_n; ++n) {
    std::string ref = detail::heis_ref_label(p, n);
    BigInt dref = store.delta(ref);
    for (const auto* e : detail::catalog_slice(p, n, n, store)) {
      if (store.profile(e->spec).is_elementary_abelian) continue;
      BigInt d = store.delta(e->spec);
      CheckRow row;
      row.spec = e->spec;
      row.lhs = dec(d);
      row.rhs = dec(dref);
      row.relation = "le";
      row.ok = d <= dref;
      row.note = "vs " + ref;
      rep.rows.push_back(std::move(row));
    }
  }
  detail::finish(rep, t);
  return rep;
}

inline CheckReport check_thm13(const CheckParams& params, LatticeStore& store) {
  detail::Timer t;
  CheckReport rep;
  rep.check_id = "thm1.3";
  int max_n = params.max_n.value_or(5);
  int min_n = params.min_n.value_or(3);
  rep.parameters = {{"min_n", min_n}, {"max_n", max_n}};
  rep.domain = "non-elementary-abelian catalog 2-groups of order 2^n, " + std::to_string(min_n) +
               " <= n <= " + std::to_string(max_n) +
               "; complete over all isomorphism types for n <= 4";
  for (int n = min_n; n <= max_n; ++n) {
    std::string ref = detail::d8_ref_label(n);
    BigInt dref = store.delta(ref);
    for (const auto* e : detail::catalog_slice(2, n, n, store)) {
      if (store.profile(e->spec).is_elementary_abelian) continue;
      BigInt d = store.delta(e->spec);
      CheckRow row;
      row.spec = e->spec;
      row.lhs = dec(d);
      row.rhs = dec(dref);
      row.relation = "le";
      row.ok = d <= dref;
      row.note = "vs " + ref;
      rep.rows.push_back(std::move(row));
    }
    if (n == 4) {
      // catalog completeness at order 16: 14 pairwise non-isomorphic types
      std::vector<const CatalogEntry*> sixteen;
      for (const auto& e : default_catalog())
        if (e.has_tag("order-16-complete")) sixteen.push_back(&e);
      bool distinct = true;
      std::string clash;
      for (size_t i = 0; i < sixteen.size() && distinct; ++i)
        for (size_t j = i + 1; j < sixteen.size(); ++j)
          if (isomorphic(store.group(sixteen[i]->spec), store.group(sixteen[j]->spec))) {
            distinct = false;
            clash = sixteen[i]->spec + " ~ " + sixteen[j]->spec;
            break;
          }
      CheckRow row;
      row.spec = "order-16 catalog";
      row.lhs = std::to_string(sixteen.size());
      row.rhs = "14";
      row.relation = "eq";
      row.ok = sixteen.size() == 14 && distinct;
      row.note = distinct ? "pairwise non-isomorphic" : ("isomorphic pair: " + clash);
      rep.rows.push_back(std::move(row));
    }
  }
  detail::finish(rep, t);
  return rep;
}

inline CheckReport check_prop31(const CheckParams& params, LatticeStore& store) {
  detail::Timer t;
  CheckReport rep;
  rep.check_id = "prop3.1";
  int max_n = params.max_n.value_or(5);
  std::vector<int> ps = params.p ? std::vector<int>{*params.p} : std::vector<int>{3, 5};
  rep.parameters = {{"p", ps}, {"max_n", max_n}, {"experimental_p2", params.experimental_p2}};
  rep.domain = "odd-p catalog groups, n <= " + std::to_string(max_n) +
               (params.experimental_p2 ? "; p = 2 evaluated but not asserted" : "");
  auto eval = [&](const CatalogEntry& e, bool assert_bound) {
    const GroupTable& g = store.group(e.spec);
    const GroupProfile& prof = store.profile(e.spec);
    const SubgroupLattice& lat = store.lattice(e.spec);
    int p = g.prime, n = g.exponent_n, m = prof.exponent_m;
    BigInt den = big_pow(p, m) - big_pow(p, m - 1);
    BigInt delta = delta_total(lat);
    BigInt s_total = lat.total_s();
    BigInt s1 = lat.counts_s[1];
    // delta <= (p^{n-m+1} - p^n)/den + s - s_1 - 1, compared exactly after
    // scaling by den (the fraction need not be integral)
    BigInt lhs_scaled = delta * den;
    BigInt rhs_scaled = (big_pow(p, n - m + 1) - big_pow(p, n)) + (s_total - s1 - 1) * den;
    bool holds = lhs_scaled <= rhs_scaled;
    CheckRow row;
    row.spec = e.spec;
    row.lhs = dec(lhs_scaled);
    row.rhs = dec(rhs_scaled);
    row.relation = "le";
    row.ok = assert_bound ? holds : true;
    row.note = std::string("scaled by p^m-p^(m-1); m=") + std::to_string(m) +
               (assert_bound ? "" : holds ? "; holds (not asserted)" : "; violated (not asserted)");
    rep.rows.push_back(std::move(row));
  };
  for (int p : ps) {
    if (p == 2) continue;
    for (const auto* e : detail::catalog_slice(p, 1, max_n, store)) eval(*e, true);
  }
  if (params.experimental_p2)
    for (const auto* e : detail::catalog_slice(2, 1, max_n, store)) eval(*e, false);
  detail::finish(rep, t);
  return rep;
}

// Shared engine for prop3.2 (r = 1) and thm3.3 (all r >= 1).
inline CheckReport check_quotient_monotone(const char* id, bool all_r, const CheckParams& params,
                                           LatticeStore& store) {
  detail::Timer t;
  CheckReport rep;
  rep.check_id = id;
  int max_order = 1 << std::min(params.max_n.value_or(6), 11);
  rep.parameters = {{"max_order", max_order}};
  rep.domain = std::string("all catalog groups of order <= ") + std::to_string(max_order) +
               ", all normal subgroups of order p" + (all_r ? "^r, r >= 1" : "");
  detail::QuotientProductMemo memo;
  for (const auto& e : default_catalog()) {
    const GroupTable& g = store.group(e.spec);
    if (g.order > max_order) continue;
    const int n = g.exponent_n;
    if (n < 1) continue;
    const SubgroupLattice& lat = store.lattice(e.spec);
    for (int r = 1; r <= (all_r ? n : 1); ++r) {
      long long compared = 0, satisfied = 0;
      int normals = 0;
      for (const auto& m : normal_subgroups_of_order(g, lat, r)) {
        ++normals;
        GroupTable q = quotient(g, m);
        const std::vector<BigInt>& dt = memo.get(q, r);
        for (int k = 0; k <= n; ++k) {
          ++compared;
          if (lat.counts_delta[k] <= dt[k]) ++satisfied;
        }
      }
      if (normals == 0) continue;
      CheckRow row;
      row.spec = e.spec;
      row.lhs = std::to_string(compared);
      row.rhs = std::to_string(satisfied);
      row.relation = "eq";
      row.ok = compared == satisfied;
      row.note = "r=" + std::to_string(r) + ", " + std::to_string(normals) + " normal subgroups";
      rep.rows.push_back(std::move(row));
    }
  }
  detail::finish(rep, t);
  return rep;
}

inline CheckReport check_prop32(const CheckParams& params, LatticeStore& store) {
  return check_quotient_monotone("prop3.2", false, params, store);
}
inline CheckReport check_thm33(const CheckParams& params, LatticeStore& store) {
  return check_quotient_monotone("thm3.3", true, params, store);
}

inline CheckReport check_thm34(const CheckParams& params, LatticeStore& store) {
  detail::Timer t;
  CheckReport rep;
  rep.check_id = "thm3.4";
  int max_n = params.max_n.value_or(7);
  int min_n = params.min_n.value_or(3);
  rep.parameters = {{"min_n", min_n}, {"max_n", max_n}};
  rep.domain = "ALL abelian 2-groups of order 2^n (every partition of n), " +
               std::to_string(min_n) + " <= n <= " + std::to_string(max_n);
  for (int n = min_n; n <= max_n; ++n) {
    std::string ref = detail::d8_ref_label(n);
    BigInt dref = store.delta(ref);
    for (const auto& part : detail::partitions_of(n)) {
      if (part.front() == 1) continue;  // elementary abelian is excluded
      std::string spec = detail::abelian_spec(2, part);
      BigInt d = store.delta(spec);
      CheckRow row;
      row.spec = spec;
      row.lhs = dec(d);
      row.rhs = dec(dref);
      row.relation = "le";
      row.ok = d <= dref;
      row.note = "vs " + ref;
      rep.rows.push_back(std::move(row));
    }
    // closed forms for delta_2
    {
      std::string c4spec = detail::cp_power_label("C4", 2, n - 2);
      BigInt lhs = store.lattice(c4spec).counts_delta[2];
      BigInt rhs = gauss_binomial(n - 1, 2, 2);
      CheckRow row;
      row.spec = c4spec;
      row.lhs = dec(lhs);
      row.rhs = dec(rhs);
      row.relation = "eq";
      row.ok = lhs == rhs;
      row.note = "delta_2 closed form [n-1,2]_2";
      rep.rows.push_back(std::move(row));
    }
    {
      BigInt lhs = store.lattice(ref).counts_delta[2];
      BigInt rhs = 2 * gauss_binomial(n - 1, 2, 2) - gauss_binomial(n - 2, 2, 2);
      CheckRow row;
      row.spec = ref;
      row.lhs = dec(lhs);
      row.rhs = dec(rhs);
      row.relation = "eq";
      row.ok = lhs == rhs;
      row.note = "delta_2 closed form 2[n-1,2]_2 - [n-2,2]_2 at n=" + std::to_string(n);
      rep.rows.push_back(std::move(row));
    }
  }
  detail::finish(rep, t);
  return rep;
}

inline CheckReport check_lem23(const CheckParams& params, LatticeStore& store) {
  detail::Timer t;
  CheckReport rep;
  rep.check_id = "lem2.3";
  int max_n = params.max_n.value_or(5);
  std::vector<int> ps = params.p ? std::vector<int>{*params.p} : std::vector<int>{2, 3};
  rep.parameters = {{"p", ps}, {"max_n", max_n}};
  rep.domain = "all catalog groups with the given primes, n <= " + std::to_string(max_n);
  for (int p : ps) {
    for (const auto* e : detail::catalog_slice(p, 1, max_n, store)) {
      const GroupTable& g = store.group(e->spec);
      const SubgroupLattice& lat = store.lattice(e->spec);
      const GroupProfile& prof = store.profile(e->spec);
      int n = g.exponent_n;
      {
        BigInt bound = gauss_binomial(n, 1, p);
        bool exp_p = prof.exponent == p;
        CheckRow row;
        row.spec = e->spec;
        row.lhs = dec(lat.counts_s[1]);
        row.rhs = dec(bound);
        row.relation = exp_p ? "eq" : "lt";
        row.ok = lat.counts_s[1] <= bound && ((lat.counts_s[1] == bound) == exp_p);
        row.note = "k=1, equality iff exp(G) = p";
        rep.rows.push_back(std::move(row));
      }
      for (int k = 2; k < n; ++k) {
        BigInt bound = gauss_binomial(n, k, p);
        bool el_ab = prof.is_elementary_abelian;
        CheckRow row;
        row.spec = e->spec;
        row.lhs = dec(lat.counts_s[k]);
        row.rhs = dec(bound);
        row.relation = el_ab ? "eq" : "lt";
        row.ok = lat.counts_s[k] <= bound && ((lat.counts_s[k] == bound) == el_ab);
        row.note = "k=" + std::to_string(k) + ", equality iff elementary abelian";
        rep.rows.push_back(std::move(row));
      }
    }
  }
  detail::finish(rep, t);
  return rep;
}

inline CheckReport check_lem24(const CheckParams& params, LatticeStore& store) {
  detail::Timer t;
  CheckReport rep;
  rep.check_id = "lem2.4";
  int p = params.p.value_or(3);
  int max_n = params.max_n.value_or(5);
  int min_n = params.min_n.value_or(3);
  rep.parameters = {{"p", p}, {"min_n", min_n}, {"max_n", max_n}};
  rep.domain = "non-elementary-abelian catalog groups of order p^n, p = " + std::to_string(p);
  if (p == 2 || !is_prime(p)) {
    rep.status = "Skipped";
    rep.domain += " (stated for odd primes only)";
    detail::finish(rep, t);
    return rep;
  }
  for (int n = min_n; n <= max_n; ++n) {
    std::string ref = detail::heis_ref_label(p, n);
    const SubgroupLattice& lref = store.lattice(ref);
    for (const auto* e : detail::catalog_slice(p, n, n, store)) {
      if (store.profile(e->spec).is_elementary_abelian) continue;
      const SubgroupLattice& lat = store.lattice(e->spec);
      // strictness in the middle range applies to groups other than the
      // reference group itself
      bool is_ref = e->spec == ref;
      if (!is_ref && store.profile(e->spec).order_census == store.profile(ref).order_census)
        is_ref = isomorphic(store.group(e->spec), store.group(ref));
      bool ok = true;
      for (int k = 0; k <= n && ok; ++k) ok = lat.counts_s[k] <= lref.counts_s[k];
      if (!is_ref)
        for (int k = 2; k <= n - 2 && ok; ++k) ok = lat.counts_s[k] < lref.counts_s[k];
      CheckRow row;
      row.spec = e->spec;
      row.lhs = dec(lat.total_s());
      row.rhs = dec(lref.total_s());
      row.relation = "le";
      row.ok = ok;
      row.note = std::string("levelwise vs ") + ref + (is_ref ? "" : ", strict for 2<=k<=n-2");
      rep.rows.push_back(std::move(row));
    }
  }
  detail::finish(rep, t);
  return rep;
}

inline CheckReport check_lem25(const CheckParams& params, LatticeStore& store) {
  detail::Timer t;
  CheckReport rep;
  rep.check_id = "lem2.5";
  int max_n = params.max_n.value_or(5);
  int min_n = params.min_n.value_or(3);
  rep.parameters = {{"min_n", min_n}, {"max_n", max_n}};
  rep.domain = "non-elementary-abelian catalog 2-groups of order 2^n, " + std::to_string(min_n) +
               " <= n <= " + std::to_string(max_n);
  for (int n = min_n; n <= max_n; ++n) {
    std::string ref = detail::d8_ref_label(n);
    const SubgroupLattice& lref = store.lattice(ref);
    for (const auto* e : detail::catalog_slice(2, n, n, store)) {
      if (store.profile(e->spec).is_elementary_abelian) continue;
      const SubgroupLattice& lat = store.lattice(e->spec);
      bool ok = true;
      int bad_k = -1;
      for (int k = 0; k <= n; ++k)
        if (!(lat.counts_s[k] <= lref.counts_s[k])) {
          ok = false;
          bad_k = k;
          break;
        }
      CheckRow row;
      row.spec = e->spec;
      row.lhs = dec(lat.total_s());
      row.rhs = dec(lref.total_s());
      row.relation = "le";
      row.ok = ok;
      row.note = ok ? "levelwise vs " + ref : "fails at k=" + std::to_string(bad_k);
      rep.rows.push_back(std::move(row));
    }
  }
  detail::finish(rep, t);
  return rep;
}

inline CheckReport check_lem26(const CheckParams& params, LatticeStore& store) {
  detail::Timer t;
  CheckReport rep;
  rep.check_id = "lem2.6";
  int rmax = params.max_n.value_or(2);
  rep.parameters = {{"max_r", rmax}};
  rep.domain = "ESp(r), ESm(r), AES(r) for r <= " + std::to_string(rmax) +
               "; generalized forms E x A and (E * C4) x A";
  auto classify_row = [&](const std::string& spec, SpecialClass want, int want_order) {
    const GroupTable& g = store.group(spec);
    SpecialClass got = classify_special(g);
    CheckRow row;
    row.spec = spec;
    row.lhs = to_string(got);
    row.rhs = to_string(want);
    row.relation = "eq";
    row.ok = got == want && g.order == want_order;
    row.note = "order " + std::to_string(g.order) + ", expected " + std::to_string(want_order);
    rep.rows.push_back(std::move(row));
  };
  for (int r = 1; r <= rmax; ++r) {
    int es_order = 1 << (2 * r + 1);
    classify_row("ESp(" + std::to_string(r) + ")", SpecialClass::Extraspecial, es_order);
    classify_row("ESm(" + std::to_string(r) + ")", SpecialClass::Extraspecial, es_order);
    classify_row("AES(" + std::to_string(r) + ")", SpecialClass::AlmostExtraspecial,
                 es_order * 2);
    CheckRow row;
    row.spec = "ESp(" + std::to_string(r) + ") vs ESm(" + std::to_string(r) + ")";
    size_t isos = find_isomorphisms(store.group("ESp(" + std::to_string(r) + ")"),
                                    store.group("ESm(" + std::to_string(r) + ")"))
                      .size();
    row.lhs = std::to_string(isos);
    row.rhs = "0";
    row.relation = "eq";
    row.ok = isos == 0;
    row.note = "the two extraspecial types are non-isomorphic";
    rep.rows.push_back(std::move(row));
  }
  classify_row("D8 x C2", SpecialClass::GeneralizedExtraspecial, 16);
  classify_row("D8 * C4 x C2", SpecialClass::GeneralizedExtraspecial, 32);
  detail::finish(rep, t);
  return rep;
}

inline CheckReport check_lem27(const CheckParams& params, LatticeStore& store) {
  detail::Timer t;
  CheckReport rep;
  rep.check_id = "lem2.7";
  (void)params;
  rep.parameters = nlohmann::ordered_json::object();
  rep.domain = "(almost) extraspecial catalog groups ESp(2), ESm(2), AES(1), AES(2); all alpha, beta";
  for (const char* spec : {"ESp(2)", "ESm(2)", "AES(1)", "AES(2)"}) {
    const GroupTable& g = store.group(spec);
    int n = g.exponent_n;
    std::string ref = detail::d8_ref_label(n);
    auto sg = section_matrix(g, store.lattice(spec));
    auto sr = section_matrix(store.group(ref), store.lattice(ref));
    for (int alpha = 0; alpha <= n; ++alpha) {
      for (int beta = 0; alpha + beta <= n; ++beta) {
        CheckRow row;
        row.spec = spec;
        row.lhs = dec(sg[alpha][beta]);
        row.rhs = dec(sr[alpha][beta]);
        row.relation = "le";
        row.ok = sg[alpha][beta] <= sr[alpha][beta];
        row.note = "alpha=" + std::to_string(alpha) + " beta=" + std::to_string(beta) + " vs " + ref;
        rep.rows.push_back(std::move(row));
      }
    }
  }
  detail::finish(rep, t);
  return rep;
}

inline CheckReport check_lem28(const CheckParams& params, LatticeStore& store) {
  detail::Timer t;
  CheckReport rep;
  rep.check_id = "lem2.8";
  (void)params;
  rep.parameters = nlohmann::ordered_json::object();
  rep.domain = "(almost) extraspecial catalog groups; delta_2 vs the D8 reference";
  for (const char* spec : {"D8", "Q8", "ESp(2)", "ESm(2)", "AES(1)", "AES(2)"}) {
    const GroupTable& g = store.group(spec);
    int n = g.exponent_n;
    std::string ref = detail::d8_ref_label(n);
    BigInt d2 = store.lattice(spec).counts_delta[2];
    BigInt d2ref = store.lattice(ref).counts_delta[2];
    // the section specialization (alpha, beta) = (2, 0) must reproduce delta_2
    BigInt s20 = count_sections(g, store.lattice(spec), 2, 0);
    CheckRow row;
    row.spec = spec;
    row.lhs = dec(d2);
    row.rhs = dec(d2ref);
    row.relation = "le";
    row.ok = d2 <= d2ref && s20 == d2;
    row.note = "S_{2,0} = " + dec(s20) + ", vs " + ref;
    rep.rows.push_back(std::move(row));
  }
  detail::finish(rep, t);
  return rep;
}

inline CheckReport check_lem29(const CheckParams& params, LatticeStore& store) {
  detail::Timer t;
  CheckReport rep;
  rep.check_id = "lem2.9";
  (void)params;
  rep.parameters = nlohmann::ordered_json::object();
  rep.domain = "catalog pairs (A, B) with |A x B| <= 128";
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"C2", "C2"},      {"C2^2", "C2"},    {"C4", "C2"},   {"C4", "C4"},
      {"D8", "C2^2"},    {"Q8", "C4"},      {"D8", "C4"},   {"Q8", "C2^2"},
      {"C4 x C2", "C4"}, {"Heis(3)", "C3"}, {"C9", "C3"},   {"C3^2", "C3"},
      {"D8", "Q8"},      {"Mod16", "C2^2"}, {"SD16", "C8"},
  };
  for (const auto& [sa, sb] : pairs) {
    const GroupTable& a = store.group(sa);
    const GroupTable& b = store.group(sb);
    auto records = goursat_enumerate(a, b);
    GroupTable prod = direct_product(a, b);
    SubgroupLattice lat = enumerate_subgroups(prod);
    std::unordered_set<std::vector<std::uint64_t>, MaskBitsHash> masks;
    for (const auto& layer : lat.by_exponent)
      for (const auto& m : layer) masks.insert(m.bits);
    bool equal = records.size() == masks.size();
    for (const auto& r : records)
      if (equal && !masks.count(r.realized.bits)) equal = false;
    CheckRow row;
    row.spec = sa + " | " + sb;
    row.lhs = std::to_string(records.size());
    row.rhs = std::to_string(masks.size());
    row.relation = "eq";
    row.ok = equal;
    row.note = "realized subgroup sets compared as sets";
    rep.rows.push_back(std::move(row));
  }
  detail::finish(rep, t);
  return rep;
}

inline CheckReport check_census(const CheckParams& params, LatticeStore& store) {
  detail::Timer t;
  CheckReport rep;
  rep.check_id = "census";
  (void)params;
  rep.parameters = nlohmann::ordered_json::object();
  rep.domain = "every catalog group";
  for (const auto& e : default_catalog()) {
    const GroupTable& g = store.group(e.spec);
    const SubgroupLattice& lat = store.lattice(e.spec);
    BigInt total = 1;
    for (int k = 1; k <= g.exponent_n; ++k)
      total += (big_pow(g.prime, k) - big_pow(g.prime, k - 1)) * lat.counts_c[k];
    CheckRow row;
    row.spec = e.spec;
    row.lhs = dec(BigInt(g.order));
    row.rhs = dec(total);
    row.relation = "eq";
    row.ok = total == g.order;
    row.note = "|G| = 1 + sum (p^k - p^{k-1}) c_k(G)";
    rep.rows.push_back(std::move(row));
  }
  detail::finish(rep, t);
  return rep;
}

inline CheckReport check_delta2_formula(const CheckParams& params, LatticeStore& store) {
  detail::Timer t;
  CheckReport rep;
  rep.check_id = "delta2-formula";
  int max_m = params.max_n.value_or(4);
  rep.parameters = {{"max_m", max_m}};
  rep.domain = "A in {C2^2, C4, D8, Q8, C4 x C2, D8 * C4, ESp(2)}, 0 <= m <= " +
               std::to_string(max_m);
  for (const char* sa : {"C2^2", "C4", "D8", "Q8", "C4 x C2", "D8 * C4", "ESp(2)"}) {
    const GroupTable& a = store.group(sa);
    for (int m = 0; m <= max_m; ++m) {
      if ((long long)a.order << m > 512) continue;
      BigInt formula = delta2_product_count(a, m, Delta2Mode::Corrected);
      BigInt brute = delta2_bruteforce(a, m);
      CheckRow row;
      row.spec = std::string(sa) + " | m=" + std::to_string(m);
      row.lhs = dec(formula);
      row.rhs = dec(brute);
      row.relation = "eq";
      row.ok = formula == brute;
      row.note = "corrected formula vs brute force";
      rep.rows.push_back(std::move(row));
    }
  }
  // discrepancy report: the displayed case totals undercount
  struct Disc {
    const char* spec;
    int m;
    int displayed;
    int truth;
  };
  for (const Disc& d : {Disc{"C2^2", 1, 4, 7}, Disc{"D8", 1, 7, 13}}) {
    BigInt shown = delta2_product_count(store.group(d.spec), d.m, Delta2Mode::Displayed);
    BigInt brute = delta2_bruteforce(store.group(d.spec), d.m);
    CheckRow row;
    row.spec = std::string(d.spec) + " | m=" + std::to_string(d.m) + " | displayed";
    row.lhs = dec(shown);
    row.rhs = dec(brute);
    row.relation = "ne";
    row.ok = shown == d.displayed && brute == d.truth;
    row.note = "displayed total " + dec(shown) + " vs true " + dec(brute) +
               " (expected " + std::to_string(d.displayed) + " vs " + std::to_string(d.truth) + ")";
    rep.rows.push_back(std::move(row));
  }
  detail::finish(rep, t);
  return rep;
}

// ---------------------------------------------------------------------------
// Registry.

struct CheckInfo {
  std::string id;
  std::string description;
  std::string default_params;
  CheckReport (*run)(const CheckParams&, LatticeStore&);
};

inline const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> checks = {
      {"thm1.1", "Theorem 1.1: delta(G) <= sum_{k=2}^n [n,k]_p, equality iff elementary abelian",
       "p in {2,3}, n <= 5", &check_thm11},
      {"thm1.2", "Theorem 1.2: delta(G) <= delta(Heis(p) x C_p^{n-3}) for odd p, G not elementary abelian",
       "p = 3, 3 <= n <= 5", &check_thm12},
      {"thm1.3", "Theorem 1.3: delta(G) <= delta(D8 x C2^{n-3}) for 2-groups, G not elementary abelian; order-16 completeness",
       "3 <= n <= 5", &check_thm13},
      {"prop3.1", "Proposition 3.1: delta(G) <= (p^{n-m+1}-p^n)/(p^m-p^{m-1}) + s(G) - s_1(G) - 1 for odd p",
       "p in {3,5}, n <= 5", &check_prop31},
      {"prop3.2", "Proposition 3.2: delta_k(G) <= delta_k(G/N x C_p) for every normal N of order p",
       "|G| <= 64", &check_prop32},
      {"thm3.3", "Theorem 3.3: delta_k(G) <= delta_k(G/M x C_p^r) for every normal M of order p^r",
       "|G| <= 64", &check_thm33},
      {"thm3.4", "Theorem 3.4: abelian 2-groups, delta(G) <= delta(D8 x C2^{n-3}); delta_2 closed forms",
       "3 <= n <= 7", &check_thm34},
      {"lem2.3", "Lemma 2.3: s_1 <= [n,1]_p (equality iff exp = p); s_k <= [n,k]_p (equality iff elementary abelian)",
       "p in {2,3}, n <= 5", &check_lem23},
      {"lem2.4", "Lemma 2.4: s_k(G) <= s_k(Heis(p) x C_p^{n-3}) for odd p, strict for 2 <= k <= n-2",
       "p = 3, 3 <= n <= 5", &check_lem24},
      {"lem2.5", "Lemma 2.5: s_k(G) <= s_k(D8 x C2^{n-3}) for non-elementary-abelian 2-groups",
       "3 <= n <= 5", &check_lem25},
      {"lem2.6", "Lemma 2.6: structure of extraspecial / almost / generalized extraspecial 2-groups",
       "r <= 2", &check_lem26},
      {"lem2.7", "Lemma 2.7: |S_{a,b}(G)| <= |S_{a,b}(D8 x C2^{n-3})| for (almost) extraspecial G",
       "G in {ESp(2), ESm(2), AES(1), AES(2)}", &check_lem27},
      {"lem2.8", "Lemma 2.8: delta_2(G) <= delta_2(D8 x C2^{n-3}) for (almost) extraspecial G",
       "fixed group list", &check_lem28},
      {"lem2.9", "Lemma 2.9: Goursat quintuple enumeration equals the direct-product lattice",
       "15 catalog pairs", &check_lem29},
      {"census", "element-order census identity |G| = 1 + sum_k (p^k - p^{k-1}) c_k(G)",
       "every catalog group", &check_census},
      {"delta2-formula", "corrected delta_2 product-count formula vs brute force, plus the displayed-total discrepancy",
       "m <= 4", &check_delta2_formula},
  };
  return checks;
}

inline CheckReport run_check(const std::string& id, const CheckParams& params,
                             LatticeStore& store) {
  for (const auto& c : check_registry())
    if (c.id == id) return c.run(params, store);
  throw std::invalid_argument("unknown check: " + id);
}

inline CheckReport run_check(const std::string& id, const CheckParams& params = {}) {
  LatticeStore store(params.cache_dir);
  return run_check(id, params, store);
}

}  // namespace pgx
