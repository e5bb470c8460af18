#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "pgx/gaussian.hpp"
#include "pgx/group.hpp"
#include "pgx/iso.hpp"

namespace pgx {

inline GroupTable build_trivial(int p) {
  GroupTable g;
  g.order = 1;
  g.prime = p;
  g.exponent_n = 0;
  g.table = {0};
  g.inverses = {0};
  g.label = "1";
  return g;
}

// C_{p^k} under addition mod p^k.
inline GroupTable build_cyclic(int p, int k) {
  if (!is_prime(p)) throw std::invalid_argument("build_cyclic: p must be prime");
  if (k < 1) throw std::invalid_argument("build_cyclic: exponent must be >= 1");
  long long order = 1;
  for (int i = 0; i < k; ++i) {
    order *= p;
    if (order > kOrderCap) throw std::invalid_argument("build_cyclic: order cap exceeded");
  }
  int n = int(order);
  return make_group(n, p, "C" + std::to_string(n), [n](int a, int b) { return (a + b) % n; });
}

// Direct product of C_{p^{e_i}} for a non-increasing partition (e_1,...,e_r).
inline GroupTable build_abelian(int p, const std::vector<int>& partition) {
  if (!is_prime(p)) throw std::invalid_argument("build_abelian: p must be prime");
  if (partition.empty()) throw std::invalid_argument("build_abelian: empty partition");
  for (size_t i = 0; i < partition.size(); ++i) {
    if (partition[i] < 1) throw std::invalid_argument("build_abelian: parts must be positive");
    if (i > 0 && partition[i] > partition[i - 1])
      throw std::invalid_argument("build_abelian: partition must be non-increasing");
  }
  std::vector<int> radix(partition.size());
  long long order = 1;
  for (size_t i = 0; i < partition.size(); ++i) {
    long long m = 1;
    for (int j = 0; j < partition[i]; ++j) m *= p;
    radix[i] = int(m);
    order *= m;
    if (order > kOrderCap) throw std::invalid_argument("build_abelian: order cap exceeded");
  }
  std::string label = "Ab(" + std::to_string(p) + ";";
  for (size_t i = 0; i < partition.size(); ++i)
    label += (i ? "," : "") + std::to_string(partition[i]);
  label += ")";
  // mixed-radix componentwise addition, most significant component first
  return make_group(int(order), p, label, [radix](int a, int b) {
    int out = 0;
    std::vector<int> da(radix.size()), db(radix.size());
    for (int i = int(radix.size()) - 1; i >= 0; --i) {
      da[i] = a % radix[i];
      a /= radix[i];
      db[i] = b % radix[i];
      b /= radix[i];
    }
    for (size_t i = 0; i < radix.size(); ++i) out = out * radix[i] + (da[i] + db[i]) % radix[i];
    return out;
  });
}

// ---------------------------------------------------------------------------
// The four two-generator 2-group families, all realized on pairs
// (i mod 2^{k-1}, j mod 2) with (i,j)(i',j') = (i + i'*t^j [+ twist], j + j').

enum class TwoGroupFamily { Dihedral, Quaternion, Semidihedral, Modular };

inline GroupTable build_2group_family(TwoGroupFamily fam, int order) {
  int k = 0;
  for (int m = order; m > 1; m /= 2, ++k)
    if (m % 2 != 0) throw std::invalid_argument("family order must be a power of 2");
  int min_k = (fam == TwoGroupFamily::Semidihedral || fam == TwoGroupFamily::Modular) ? 4 : 3;
  if (k < min_k)
    throw std::invalid_argument("family order too small (need 2^" + std::to_string(min_k) + ")");
  if (order > kOrderCap) throw std::invalid_argument("family order cap exceeded");
  const int half = order / 2;  // i ranges over Z_{2^{k-1}}
  int t;
  std::string name;
  switch (fam) {
    case TwoGroupFamily::Dihedral: t = half - 1; name = "D"; break;
    case TwoGroupFamily::Quaternion: t = half - 1; name = "Q"; break;
    case TwoGroupFamily::Semidihedral: t = half / 2 - 1; name = "SD"; break;
    case TwoGroupFamily::Modular: t = half / 2 + 1; name = "Mod"; break;
  }
  bool quat = fam == TwoGroupFamily::Quaternion;
  return make_group(order, 2, name + std::to_string(order), [half, t, quat](int x, int y) {
    int i = x / 2, j = x % 2;
    int i2 = y / 2, j2 = y % 2;
    long long s = i + (j == 0 ? i2 : (long long)i2 * t);
    if (quat && j == 1 && j2 == 1) s += half / 2;  // b^2 = a^{2^{k-2}}
    int ri = int(((s % half) + half) % half);
    return ri * 2 + ((j + j2) % 2);
  });
}

// ---------------------------------------------------------------------------
// The two non-abelian groups of order p^3 for odd p.

enum class P3Exponent { P, PSquared };

inline GroupTable build_p3_nonabelian(int p, P3Exponent type) {
  if (!is_prime(p) || p == 2)
    throw std::invalid_argument("build_p3_nonabelian: p must be an odd prime");
  long long order = (long long)p * p * p;
  if (order > kOrderCap) throw std::invalid_argument("build_p3_nonabelian: order cap exceeded");
  if (type == P3Exponent::P) {
    // Heisenberg: (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b'), exponent p.
    return make_group(int(order), p, "Heis(" + std::to_string(p) + ")", [p](int x, int y) {
      int a = x / (p * p), b = (x / p) % p, c = x % p;
      int a2 = y / (p * p), b2 = (y / p) % p, c2 = y % p;
      return ((a + a2) % p) * p * p + ((b + b2) % p) * p + (c + c2 + a * b2) % p;
    });
  }
  // (i mod p^2, j mod p) with (i,j)(i',j') = (i + i'(1+p)^j, j+j'), exponent p^2.
  int psq = p * p;
  return make_group(int(order), p, "Mp3(" + std::to_string(p) + ")", [p, psq](int x, int y) {
    int i = x / p, j = x % p;
    int i2 = y / p, j2 = y % p;
    long long t = 1;
    for (int e = 0; e < j; ++e) t = (t * (1 + p)) % psq;
    return int((i + i2 * t) % psq) * p + (j + j2) % p;
  });
}

// ---------------------------------------------------------------------------
// Products.

namespace detail {
inline std::string wrap_for_central(const std::string& label) {
  return label.find(" x ") != std::string::npos ? "(" + label + ")" : label;
}
}  // namespace detail

inline GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  if (a.order > 1 && b.order > 1 && a.prime != b.prime)
    throw std::invalid_argument("direct_product: mixed primes");
  long long order = (long long)a.order * b.order;
  if (order > kOrderCap) throw std::invalid_argument("direct_product: order cap exceeded");
  int nb = b.order;
  int prime = a.order > 1 ? a.prime : b.prime;
  return make_group(int(order), prime, a.label + " x " + b.label, [&a, &b, nb](int x, int y) {
    return a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  });
}

// Amalgamated central product A * B over the canonical order-2 central
// subgroups. Requires each operand's center to be cyclic (otherwise there is
// no canonical choice and E_AMBIGUOUS_CENTER is raised) and p = 2.
inline GroupTable central_product(const GroupTable& a, const GroupTable& b) {
  if (a.prime != b.prime) throw std::invalid_argument("central_product: mixed primes");
  if (a.prime != 2)
    throw std::invalid_argument("central_product: requires p = 2 (no order-2 central subgroup)");
  auto canonical_involution = [](const GroupTable& g) {
    SubgroupMask z = center(g);
    auto zm = z.members();
    int best = -1;
    bool cyclic = false;
    for (int x : zm) {
      int o = element_order(g, x);
      if (o == z.order) cyclic = true;
      if (o == 2 && best < 0) best = x;
    }
    if (!cyclic)
      throw std::invalid_argument("E_AMBIGUOUS_CENTER: center of " + g.label +
                                  " is not cyclic, no canonical amalgamation subgroup");
    if (best < 0) throw std::invalid_argument("central_product: center has no involution");
    return best;
  };
  int za = canonical_involution(a);
  int zb = canonical_involution(b);
  GroupTable d = direct_product(a, b);
  SubgroupMask n(d.order);
  n.set(0);
  n.set(za * b.order + zb);  // (z_a, theta(z_a)^{-1}) with theta(z_a) = z_b an involution
  GroupTable out = quotient(d, n);
  out.label = detail::wrap_for_central(a.label) + " * " + detail::wrap_for_central(b.label);
  return out;
}

// ---------------------------------------------------------------------------
// Semidirect products A x| B from generator data.

struct SemidirectAction {
  std::vector<int> a_generators;               // generators of the acted-on group
  std::vector<int> b_generators;               // generators of the acting group
  std::vector<std::vector<int>> a_gen_images;  // per b generator: images of a_generators
};

namespace detail {

// Extends a generator-image assignment to a full endomorphism map and
// verifies it is an automorphism. Throws when it is not.
inline std::vector<int> extend_automorphism(const GroupTable& g, const std::vector<int>& gens,
                                            const std::vector<int>& images) {
  if (gens.size() != images.size())
    throw std::invalid_argument("semidirect action: generator/image count mismatch");
  std::vector<int> f(g.order, -1);
  f[0] = 0;
  std::vector<int> list = {0};
  for (size_t head = 0; head < list.size(); ++head) {
    int z = list[head];
    for (size_t j = 0; j < gens.size(); ++j) {
      int w = g.mul(z, gens[j]);
      int v = g.mul(f[z], images[j]);
      if (f[w] < 0) {
        f[w] = v;
        list.push_back(w);
      }
    }
  }
  if (list.size() != size_t(g.order))
    throw std::invalid_argument("semidirect action: generators do not generate the group");
  std::vector<char> hit(g.order, 0);
  for (int x = 0; x < g.order; ++x) {
    if (hit[f[x]]) throw std::invalid_argument("semidirect action: image map is not a bijection");
    hit[f[x]] = 1;
  }
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y)
      if (f[g.mul(x, y)] != g.mul(f[x], f[y]))
        throw std::invalid_argument("semidirect action: image map is not a homomorphism");
  return f;
}

}  // namespace detail

inline GroupTable semidirect_product(const GroupTable& a, const GroupTable& b,
                                     const SemidirectAction& action, const std::string& label) {
  if (a.prime != b.prime) throw std::invalid_argument("semidirect_product: mixed primes");
  long long order = (long long)a.order * b.order;
  if (order > kOrderCap) throw std::invalid_argument("semidirect_product: order cap exceeded");
  // one automorphism of A per generator of B
  std::vector<std::vector<int>> gen_auto;
  for (const auto& imgs : action.a_gen_images)
    gen_auto.push_back(detail::extend_automorphism(a, action.a_generators, imgs));
  // extend to phi : B -> Aut(A) along a BFS spanning tree of B
  std::vector<std::vector<int>> phi(b.order);
  std::vector<char> seen(b.order, 0);
  std::vector<int> identity(a.order);
  std::iota(identity.begin(), identity.end(), 0);
  phi[0] = identity;
  seen[0] = 1;
  std::vector<int> list = {0};
  for (size_t head = 0; head < list.size(); ++head) {
    int z = list[head];
    for (size_t j = 0; j < action.b_generators.size(); ++j) {
      int w = b.mul(z, action.b_generators[j]);
      if (!seen[w]) {
        seen[w] = 1;
        std::vector<int> comp(a.order);
        for (int x = 0; x < a.order; ++x) comp[x] = phi[z][gen_auto[j][x]];
        phi[w] = std::move(comp);
        list.push_back(w);
      }
    }
  }
  if (list.size() != size_t(b.order))
    throw std::invalid_argument("semidirect_product: b_generators do not generate B");
  // phi must respect every relation of B: phi[x] . phi[y] == phi[xy]
  for (int x = 0; x < b.order; ++x)
    for (int y = 0; y < b.order; ++y) {
      int xy = b.mul(x, y);
      for (int e = 0; e < a.order; ++e)
        if (phi[x][phi[y][e]] != phi[xy][e])
          throw std::invalid_argument("semidirect_product: action violates the relations of B");
    }
  int nb = b.order;
  return make_group(int(order), a.prime, label, [&a, &b, &phi, nb](int x, int y) {
    int a1 = x / nb, b1 = x % nb;
    int a2 = y / nb, b2 = y % nb;
    return a.mul(a1, phi[b1][a2]) * nb + b.mul(b1, b2);
  });
}

// ---------------------------------------------------------------------------
// Extraspecial and almost extraspecial 2-groups, built by folding central
// products of D8 / Q8 copies.

enum class ExtraspecialKind { Plus, Minus, Almost };

inline GroupTable build_extraspecial(ExtraspecialKind kind, int r) {
  if (r < 1) throw std::invalid_argument("build_extraspecial: r must be >= 1");
  GroupTable d8 = build_2group_family(TwoGroupFamily::Dihedral, 8);
  GroupTable g = (kind == ExtraspecialKind::Minus)
                     ? build_2group_family(TwoGroupFamily::Quaternion, 8)
                     : d8;
  for (int i = 1; i < r; ++i) g = central_product(g, d8);
  std::string name;
  switch (kind) {
    case ExtraspecialKind::Plus: name = "ESp"; break;
    case ExtraspecialKind::Minus: name = "ESm"; break;
    case ExtraspecialKind::Almost: {
      g = central_product(g, build_cyclic(2, 2));
      name = "AES";
      break;
    }
  }
  g.label = name + "(" + std::to_string(r) + ")";
  return g;
}

// ---------------------------------------------------------------------------
// Structure classification for 2-groups (Lemma-2.6 style predicates).

enum class SpecialClass { Extraspecial, AlmostExtraspecial, GeneralizedExtraspecial, None };

inline const char* to_string(SpecialClass c) {
  switch (c) {
    case SpecialClass::Extraspecial: return "Extraspecial";
    case SpecialClass::AlmostExtraspecial: return "AlmostExtraspecial";
    case SpecialClass::GeneralizedExtraspecial: return "GeneralizedExtraspecial";
    default: return "None";
  }
}

inline SpecialClass classify_special(const GroupTable& g) {
  if (g.prime != 2) throw std::invalid_argument("classify_special: defined for 2-groups only");
  SubgroupMask z = center(g);
  auto [derived, frattini] = derived_and_frattini(g);
  if (!(derived == frattini) || derived.order != 2) return SpecialClass::None;
  if (z == derived) return SpecialClass::Extraspecial;
  bool z_cyclic4 = false;
  if (z.order == 4)
    for (int x : z.members())
      if (element_order(g, x) == 4) z_cyclic4 = true;
  if (z_cyclic4) return SpecialClass::AlmostExtraspecial;
  if (derived.subset_of(z)) return SpecialClass::GeneralizedExtraspecial;
  return SpecialClass::None;
}

}  // namespace pgx
