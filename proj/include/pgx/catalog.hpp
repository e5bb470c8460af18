#pragma once

#include <string>
#include <vector>

#include "pgx/spec_lang.hpp"

namespace pgx {

// One verification subject: a canonical spec string plus descriptive tags.
// The tag set is validated against computed profiles by the test suite.
struct CatalogEntry {
  std::string spec;
  std::vector<std::string> tags;

  bool has_tag(const std::string& t) const {
    for (const auto& x : tags)
      if (x == t) return true;
    return false;
  }
};

// The constructible catalog. Complete for every abelian isomorphism type up
// to the listed orders, for all 5 types of order 8 and 27, and for all 14
// types of order 16 (verified, not assumed, by the thm1.3 check). Higher
// orders carry a representative non-abelian sample; checks quantify over
// this catalog and say so in their report headers.
inline const std::vector<CatalogEntry>& default_catalog() {
  static const std::vector<CatalogEntry> entries = {
      // p = 2, n = 1..3
      {"C2", {"abelian", "elementary-abelian"}},
      {"C4", {"abelian"}},
      {"C2^2", {"abelian", "elementary-abelian"}},
      {"C8", {"abelian"}},
      {"C4 x C2", {"abelian"}},
      {"C2^3", {"abelian", "elementary-abelian"}},
      {"D8", {"extraspecial", "order-8-complete"}},
      {"Q8", {"extraspecial", "order-8-complete"}},
      // p = 2, n = 4: all 14 isomorphism types
      {"C16", {"abelian", "order-16-complete"}},
      {"C8 x C2", {"abelian", "order-16-complete"}},
      {"C4 x C4", {"abelian", "order-16-complete"}},
      {"C4 x C2^2", {"abelian", "order-16-complete"}},
      {"C2^4", {"abelian", "elementary-abelian", "order-16-complete"}},
      {"D16", {"order-16-complete"}},
      {"SD16", {"order-16-complete"}},
      {"Q16", {"order-16-complete"}},
      {"Mod16", {"order-16-complete"}},
      {"D8 x C2", {"order-16-complete"}},
      {"Q8 x C2", {"order-16-complete"}},
      {"D8 * C4", {"almost-extraspecial", "order-16-complete"}},
      {"SDP16A", {"order-16-complete"}},
      {"SDP16B", {"order-16-complete"}},
      // p = 2, n = 5
      {"C32", {"abelian"}},
      {"C16 x C2", {"abelian"}},
      {"C8 x C4", {"abelian"}},
      {"C8 x C2^2", {"abelian"}},
      {"C4 x C4 x C2", {"abelian"}},
      {"C4 x C2^3", {"abelian"}},
      {"C2^5", {"abelian", "elementary-abelian"}},
      {"D32", {}},
      {"SD32", {}},
      {"Q32", {}},
      {"Mod32", {}},
      {"ESp(2)", {"extraspecial"}},
      {"ESm(2)", {"extraspecial"}},
      {"D16 x C2", {}},
      {"SD16 x C2", {}},
      {"Q16 x C2", {}},
      {"Mod16 x C2", {}},
      {"D8 x C4", {}},
      {"Q8 x C4", {}},
      {"D8 x C2^2", {}},
      {"Q8 x C2^2", {}},
      {"D8 * C4 x C2", {}},
      {"SDP16A x C2", {}},
      {"SDP16B x C2", {}},
      // p = 2, n = 6
      {"C64", {"abelian"}},
      {"C32 x C2", {"abelian"}},
      {"C16 x C4", {"abelian"}},
      {"C16 x C2^2", {"abelian"}},
      {"C8 x C8", {"abelian"}},
      {"C8 x C4 x C2", {"abelian"}},
      {"C8 x C2^3", {"abelian"}},
      {"C4 x C4 x C4", {"abelian"}},
      {"C4 x C4 x C2^2", {"abelian"}},
      {"C4 x C2^4", {"abelian"}},
      {"C2^6", {"abelian", "elementary-abelian"}},
      {"AES(2)", {"almost-extraspecial"}},
      {"ESp(2) x C2", {}},
      {"ESm(2) x C2", {}},
      {"D8 x C2^3", {}},
      {"Q8 x C2^3", {}},
      {"D16 x C2^2", {}},
      {"Mod32 x C2", {}},
      // p = 3
      {"C3", {"abelian", "elementary-abelian", "odd-p"}},
      {"C9", {"abelian", "odd-p"}},
      {"C3^2", {"abelian", "elementary-abelian", "odd-p"}},
      {"C27", {"abelian", "odd-p"}},
      {"C9 x C3", {"abelian", "odd-p"}},
      {"C3^3", {"abelian", "elementary-abelian", "odd-p"}},
      {"Heis(3)", {"odd-p", "order-27-complete"}},
      {"Mp3(3)", {"odd-p", "order-27-complete"}},
      {"C81", {"abelian", "odd-p"}},
      {"C27 x C3", {"abelian", "odd-p"}},
      {"C9 x C9", {"abelian", "odd-p"}},
      {"C9 x C3^2", {"abelian", "odd-p"}},
      {"C3^4", {"abelian", "elementary-abelian", "odd-p"}},
      {"Heis(3) x C3", {"odd-p"}},
      {"Mp3(3) x C3", {"odd-p"}},
      {"C243", {"abelian", "odd-p"}},
      {"C81 x C3", {"abelian", "odd-p"}},
      {"C27 x C9", {"abelian", "odd-p"}},
      {"C27 x C3^2", {"abelian", "odd-p"}},
      {"C9 x C9 x C3", {"abelian", "odd-p"}},
      {"C9 x C3^3", {"abelian", "odd-p"}},
      {"C3^5", {"abelian", "elementary-abelian", "odd-p"}},
      {"Heis(3) x C3^2", {"odd-p"}},
      {"Mp3(3) x C3^2", {"odd-p"}},
      // p = 5
      {"C5", {"abelian", "elementary-abelian", "odd-p"}},
      {"C25", {"abelian", "odd-p"}},
      {"C5^2", {"abelian", "elementary-abelian", "odd-p"}},
      {"C125", {"abelian", "odd-p"}},
      {"C25 x C5", {"abelian", "odd-p"}},
      {"C5^3", {"abelian", "elementary-abelian", "odd-p"}},
      {"Heis(5)", {"odd-p"}},
      {"C5^4", {"abelian", "elementary-abelian", "odd-p"}},
  };
  return entries;
}

}  // namespace pgx
