#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "pgx/construct.hpp"

namespace pgx {

// Positioned parse/validation error for the group-spec language.
struct SpecParseError : std::runtime_error {
  size_t offset;
  SpecParseError(size_t off, const std::string& msg)
      : std::runtime_error("at offset " + std::to_string(off) + ": " + msg), offset(off) {}
};

enum class AstKind { Atom, DirectProduct, CentralProduct, SemidirectProduct, Power };

enum class AtomFamily {
  Cyclic,         // C n           (n = p^k)
  Dihedral,       // D n           (n = 2^k, k >= 3)
  Quaternion,     // Q n           (n = 2^k, k >= 3)
  Semidihedral,   // SD n          (n = 2^k, k >= 4)
  Modular,        // Mod n         (n = 2^k, k >= 4)
  Heisenberg,     // Heis(p)       (p odd)
  ModularP3,      // Mp3(p)        (p odd)
  Abelian,        // Ab(p;e1,...)  (non-increasing partition)
  ExtraPlus,      // ESp(r)
  ExtraMinus,     // ESm(r)
  AlmostExtra,    // AES(r)
  Sdp16A,         // C4 x| C4 by inversion
  Sdp16B          // (C4 x C2) x| C2, completing the order-16 catalog
};

struct SpecAst {
  AstKind kind = AstKind::Atom;
  AtomFamily family = AtomFamily::Cyclic;  // Atom only
  std::vector<int> params;                 // Atom only
  int power = 1;                           // Power only
  std::vector<SpecAst> children;
  size_t offset = 0;  // source position, for diagnostics

  friend bool operator==(const SpecAst& a, const SpecAst& b) {
    return a.kind == b.kind && a.family == b.family && a.params == b.params &&
           a.power == b.power && a.children == b.children;
  }
};

namespace detail {

struct Token {
  enum Kind { Name, Int, Caret, Star, Cross, LParen, RParen, Semi, Comma, End } kind;
  std::string text;
  long long value = 0;
  size_t offset = 0;
};

inline std::vector<Token> lex_spec(const std::string& src) {
  static const std::vector<std::string> keywords = {
      "SDP16A", "SDP16B", "Heis", "Mp3", "Mod", "ESp", "ESm", "AES", "Ab", "SD", "C", "D", "Q", "x"};
  std::vector<Token> out;
  size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      long long v = 0;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
        v = v * 10 + (src[j] - '0');
        if (v > 1000000) throw SpecParseError(i, "integer literal too large");
        ++j;
      }
      out.push_back({Token::Int, src.substr(i, j - i), v, i});
      i = j;
      continue;
    }
    switch (c) {
      case '^': out.push_back({Token::Caret, "^", 0, i}); ++i; continue;
      case '*': out.push_back({Token::Star, "*", 0, i}); ++i; continue;
      case '(': out.push_back({Token::LParen, "(", 0, i}); ++i; continue;
      case ')': out.push_back({Token::RParen, ")", 0, i}); ++i; continue;
      case ';': out.push_back({Token::Semi, ";", 0, i}); ++i; continue;
      case ',': out.push_back({Token::Comma, ",", 0, i}); ++i; continue;
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::string* hit = nullptr;
      for (const auto& kw : keywords) {
        if (src.compare(i, kw.size(), kw) == 0) {
          hit = &kw;
          break;  // keywords are ordered longest-first among conflicts
        }
      }
      if (!hit) throw SpecParseError(i, "unknown name");
      if (*hit == "x") {
        out.push_back({Token::Cross, "x", 0, i});
      } else {
        out.push_back({Token::Name, *hit, 0, i});
      }
      i += hit->size();
      continue;
    }
    throw SpecParseError(i, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Token::End, "", 0, src.size()});
  return out;
}

struct SpecParser {
  const std::vector<Token>& toks;
  size_t pos = 0;

  const Token& peek() const { return toks[pos]; }
  Token take() { return toks[pos++]; }

  [[noreturn]] void fail(const std::string& msg) { throw SpecParseError(peek().offset, msg); }

  int expect_int() {
    if (peek().kind != Token::Int) fail("expected an integer");
    return int(take().value);
  }
  void expect(Token::Kind k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    ++pos;
  }

  // spec := product ; product := cfactor { "x" cfactor }
  SpecAst parse_spec() {
    SpecAst first = parse_cfactor();
    if (peek().kind != Token::Cross) return first;
    SpecAst node;
    node.kind = AstKind::DirectProduct;
    node.offset = first.offset;
    node.children.push_back(std::move(first));
    while (peek().kind == Token::Cross) {
      ++pos;
      node.children.push_back(parse_cfactor());
    }
    return node;
  }

  // cfactor := atom { "*" atom }
  SpecAst parse_cfactor() {
    SpecAst first = parse_atom();
    if (peek().kind != Token::Star) return first;
    SpecAst node;
    node.kind = AstKind::CentralProduct;
    node.offset = first.offset;
    node.children.push_back(std::move(first));
    while (peek().kind == Token::Star) {
      ++pos;
      node.children.push_back(parse_atom());
    }
    return node;
  }

  // atom := base [ "^" INT ] | "(" spec ")"
  SpecAst parse_atom() {
    if (peek().kind == Token::LParen) {
      ++pos;
      SpecAst inner = parse_spec();
      expect(Token::RParen, "')'");
      return inner;
    }
    SpecAst base = parse_base();
    if (peek().kind == Token::Caret) {
      size_t caret_off = take().offset;
      int e = expect_int();
      if (e < 1) throw SpecParseError(caret_off, "power must be >= 1");
      SpecAst node;
      node.kind = AstKind::Power;
      node.power = e;
      node.offset = base.offset;
      node.children.push_back(std::move(base));
      return node;
    }
    return base;
  }

  SpecAst parse_base() {
    if (peek().kind != Token::Name) fail("expected a group atom");
    Token name = take();
    SpecAst node;
    node.kind = AstKind::Atom;
    node.offset = name.offset;
    auto int_arg_paren = [&]() {
      expect(Token::LParen, "'('");
      size_t off = peek().offset;
      int v = expect_int();
      expect(Token::RParen, "')'");
      return std::pair<int, size_t>{v, off};
    };
    if (name.text == "C" || name.text == "D" || name.text == "Q" || name.text == "SD" ||
        name.text == "Mod") {
      size_t int_off = peek().offset;
      int order = expect_int();
      if (name.text == "C") {
        node.family = AtomFamily::Cyclic;
        try {
          prime_power_of(order);
        } catch (const std::invalid_argument&) {
          throw SpecParseError(int_off, std::to_string(order) + " is not a prime power");
        }
      } else {
        node.family = name.text == "D"    ? AtomFamily::Dihedral
                      : name.text == "Q"  ? AtomFamily::Quaternion
                      : name.text == "SD" ? AtomFamily::Semidihedral
                                          : AtomFamily::Modular;
        int k = 0;
        for (int m = order; m > 1; m /= 2, ++k)
          if (m % 2 != 0) throw SpecParseError(int_off, name.text + " order must be a power of 2");
        int min_k = (node.family == AtomFamily::Semidihedral ||
                     node.family == AtomFamily::Modular) ? 4 : 3;
        if (k < min_k)
          throw SpecParseError(int_off, name.text + " order must be at least " +
                                            std::to_string(1 << min_k));
      }
      node.params = {order};
    } else if (name.text == "Heis" || name.text == "Mp3") {
      node.family = name.text == "Heis" ? AtomFamily::Heisenberg : AtomFamily::ModularP3;
      auto [p, off] = int_arg_paren();
      if (!is_prime(p) || p == 2)
        throw SpecParseError(off, name.text + " requires an odd prime");
      node.params = {p};
    } else if (name.text == "Ab") {
      node.family = AtomFamily::Abelian;
      expect(Token::LParen, "'('");
      size_t off = peek().offset;
      int p = expect_int();
      if (!is_prime(p)) throw SpecParseError(off, "Ab requires a prime");
      expect(Token::Semi, "';'");
      std::vector<int> params = {p};
      size_t part_off = peek().offset;
      params.push_back(expect_int());
      while (peek().kind == Token::Comma) {
        ++pos;
        params.push_back(expect_int());
      }
      expect(Token::RParen, "')'");
      for (size_t i = 1; i < params.size(); ++i) {
        if (params[i] < 1) throw SpecParseError(part_off, "partition parts must be positive");
        if (i > 1 && params[i] > params[i - 1])
          throw SpecParseError(part_off, "partition must be non-increasing");
      }
      node.params = params;
    } else if (name.text == "ESp" || name.text == "ESm" || name.text == "AES") {
      node.family = name.text == "ESp"   ? AtomFamily::ExtraPlus
                    : name.text == "ESm" ? AtomFamily::ExtraMinus
                                         : AtomFamily::AlmostExtra;
      auto [r, off] = int_arg_paren();
      if (r < 1) throw SpecParseError(off, name.text + " requires r >= 1");
      node.params = {r};
    } else if (name.text == "SDP16A") {
      node.family = AtomFamily::Sdp16A;
    } else if (name.text == "SDP16B") {
      node.family = AtomFamily::Sdp16B;
    } else {
      fail("unknown atom");
    }
    return node;
  }
};

inline int atom_prime(const SpecAst& atom) {
  switch (atom.family) {
    case AtomFamily::Cyclic: return prime_power_of(atom.params[0]).first;
    case AtomFamily::Heisenberg:
    case AtomFamily::ModularP3:
    case AtomFamily::Abelian: return atom.params[0];
    default: return 2;
  }
}

inline void check_single_prime(const SpecAst& node, int& prime) {
  if (node.kind == AstKind::Atom) {
    int p = atom_prime(node);
    if (prime == 0) prime = p;
    if (p != prime)
      throw SpecParseError(node.offset, "mixed primes across the expression (" +
                                            std::to_string(prime) + " vs " + std::to_string(p) + ")");
    return;
  }
  for (const auto& c : node.children) check_single_prime(c, prime);
}

}  // namespace detail

inline SpecAst parse_group_spec(const std::string& text) {
  auto toks = detail::lex_spec(text);
  detail::SpecParser parser{toks};
  SpecAst ast = parser.parse_spec();
  if (parser.peek().kind != detail::Token::End)
    throw SpecParseError(parser.peek().offset, "unexpected trailing input");
  int prime = 0;
  detail::check_single_prime(ast, prime);
  return ast;
}

// Canonical label; parse(ast_label(parse(s))) == parse(s).
inline std::string ast_label(const SpecAst& node) {
  switch (node.kind) {
    case AstKind::Atom:
      switch (node.family) {
        case AtomFamily::Cyclic: return "C" + std::to_string(node.params[0]);
        case AtomFamily::Dihedral: return "D" + std::to_string(node.params[0]);
        case AtomFamily::Quaternion: return "Q" + std::to_string(node.params[0]);
        case AtomFamily::Semidihedral: return "SD" + std::to_string(node.params[0]);
        case AtomFamily::Modular: return "Mod" + std::to_string(node.params[0]);
        case AtomFamily::Heisenberg: return "Heis(" + std::to_string(node.params[0]) + ")";
        case AtomFamily::ModularP3: return "Mp3(" + std::to_string(node.params[0]) + ")";
        case AtomFamily::Abelian: {
          std::string s = "Ab(" + std::to_string(node.params[0]) + ";";
          for (size_t i = 1; i < node.params.size(); ++i)
            s += (i > 1 ? "," : "") + std::to_string(node.params[i]);
          return s + ")";
        }
        case AtomFamily::ExtraPlus: return "ESp(" + std::to_string(node.params[0]) + ")";
        case AtomFamily::ExtraMinus: return "ESm(" + std::to_string(node.params[0]) + ")";
        case AtomFamily::AlmostExtra: return "AES(" + std::to_string(node.params[0]) + ")";
        case AtomFamily::Sdp16A: return "SDP16A";
        case AtomFamily::Sdp16B: return "SDP16B";
      }
      return "?";
    case AstKind::Power:
      return ast_label(node.children[0]) + "^" + std::to_string(node.power);
    case AstKind::CentralProduct: {
      std::string s;
      for (size_t i = 0; i < node.children.size(); ++i) {
        const auto& c = node.children[i];
        bool wrap = c.kind == AstKind::DirectProduct || c.kind == AstKind::CentralProduct;
        s += (i ? " * " : "") + (wrap ? "(" + ast_label(c) + ")" : ast_label(c));
      }
      return s;
    }
    case AstKind::DirectProduct:
    case AstKind::SemidirectProduct: {
      std::string s;
      for (size_t i = 0; i < node.children.size(); ++i) {
        const auto& c = node.children[i];
        bool wrap = c.kind == AstKind::DirectProduct;
        s += (i ? " x " : "") + (wrap ? "(" + ast_label(c) + ")" : ast_label(c));
      }
      return s;
    }
  }
  return "?";
}

namespace detail {

inline GroupTable build_sdp16a() {
  GroupTable c4 = build_cyclic(2, 2);
  SemidirectAction act;
  act.a_generators = {1};
  act.b_generators = {1};
  act.a_gen_images = {{3}};  // inversion
  return semidirect_product(c4, c4, act, "SDP16A");
}

inline GroupTable build_sdp16b() {
  GroupTable a = build_abelian(2, {2, 1});  // (a,b), a of order 4 at index 2, b at index 1
  GroupTable c2 = build_cyclic(2, 1);
  SemidirectAction act;
  act.a_generators = {2, 1};
  act.b_generators = {1};
  act.a_gen_images = {{3, 1}};  // a -> a b, b -> b
  return semidirect_product(a, c2, act, "SDP16B");
}

}  // namespace detail

inline GroupTable build_group(const SpecAst& node) {
  switch (node.kind) {
    case AstKind::Atom: {
      GroupTable g;
      switch (node.family) {
        case AtomFamily::Cyclic: {
          auto [p, k] = prime_power_of(node.params[0]);
          g = build_cyclic(p, k);
          break;
        }
        case AtomFamily::Dihedral:
          g = build_2group_family(TwoGroupFamily::Dihedral, node.params[0]);
          break;
        case AtomFamily::Quaternion:
          g = build_2group_family(TwoGroupFamily::Quaternion, node.params[0]);
          break;
        case AtomFamily::Semidihedral:
          g = build_2group_family(TwoGroupFamily::Semidihedral, node.params[0]);
          break;
        case AtomFamily::Modular:
          g = build_2group_family(TwoGroupFamily::Modular, node.params[0]);
          break;
        case AtomFamily::Heisenberg:
          g = build_p3_nonabelian(node.params[0], P3Exponent::P);
          break;
        case AtomFamily::ModularP3:
          g = build_p3_nonabelian(node.params[0], P3Exponent::PSquared);
          break;
        case AtomFamily::Abelian:
          g = build_abelian(node.params[0],
                            std::vector<int>(node.params.begin() + 1, node.params.end()));
          break;
        case AtomFamily::ExtraPlus:
          g = build_extraspecial(ExtraspecialKind::Plus, node.params[0]);
          break;
        case AtomFamily::ExtraMinus:
          g = build_extraspecial(ExtraspecialKind::Minus, node.params[0]);
          break;
        case AtomFamily::AlmostExtra:
          g = build_extraspecial(ExtraspecialKind::Almost, node.params[0]);
          break;
        case AtomFamily::Sdp16A: g = detail::build_sdp16a(); break;
        case AtomFamily::Sdp16B: g = detail::build_sdp16b(); break;
      }
      g.label = ast_label(node);
      return g;
    }
    case AstKind::Power: {
      GroupTable base = build_group(node.children[0]);
      GroupTable g = base;
      for (int i = 1; i < node.power; ++i) g = direct_product(g, base);
      g.label = ast_label(node);
      return g;
    }
    case AstKind::DirectProduct: {
      GroupTable g = build_group(node.children[0]);
      for (size_t i = 1; i < node.children.size(); ++i)
        g = direct_product(g, build_group(node.children[i]));
      g.label = ast_label(node);
      return g;
    }
    case AstKind::CentralProduct: {
      GroupTable g = build_group(node.children[0]);
      for (size_t i = 1; i < node.children.size(); ++i)
        g = central_product(g, build_group(node.children[i]));
      g.label = ast_label(node);
      return g;
    }
    case AstKind::SemidirectProduct:
      throw std::invalid_argument("semidirect nodes are built via semidirect_product()");
  }
  throw std::logic_error("unreachable");
}

inline GroupTable build_from_spec(const std::string& text) {
  return build_group(parse_group_spec(text));
}

}  // namespace pgx
