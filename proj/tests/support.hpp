#pragma once

#include "flopalg/freealg/parse.hpp"
#include "flopalg/ncgb/presentation.hpp"

#include <random>
#include <string>
#include <vector>

namespace testsupport {

using namespace flopalg;

inline freealg::AlphabetPtr xy() { return freealg::make_alphabet({"x", "y"}); }
inline freealg::AlphabetPtr ab() { return freealg::make_alphabet({"a", "b"}, {"b", "a"}); }

inline freealg::NCPoly nc(const std::string& s, const freealg::AlphabetPtr& a) { return freealg::parse_ncpoly(s, a); }

inline ncgb::Presentation presentation(const std::string& name, const freealg::AlphabetPtr& a,
                                       const std::vector<std::string>& rels) {
  std::vector<freealg::NCPoly> ps;
  for (const auto& r : rels) ps.push_back(nc(r, a));
  return ncgb::make_presentation(name, a, std::move(ps));
}

inline ncgb::Presentation lambda_con() { return presentation("lambda_con", xy(), {"x*y + y*x", "x^3 - y^2"}); }
inline ncgb::Presentation gamma_con() { return presentation("gamma_con", ab(), {"a*b + b*a", "-a^2 + b^3 + a*b*a"}); }

inline freealg::Word random_word(std::mt19937& rng, std::size_t letters, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> let(0, static_cast<int>(letters) - 1);
  std::vector<freealg::Letter> w(len(rng));
  for (auto& l : w) l = static_cast<freealg::Letter>(let(rng));
  return freealg::Word(w);
}

inline freealg::NCPoly random_poly(std::mt19937& rng, const freealg::AlphabetPtr& a, std::size_t terms,
                                   std::size_t max_len) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  freealg::NCPoly p(a);
  for (std::size_t k = 0; k < terms; ++k)
    p = p + freealg::NCPoly::monomial(a, random_word(rng, a->size(), max_len), coeff(rng));
  return p;
}

/// All words over `letters` letters of exactly `len` letters.
inline std::vector<freealg::Word> all_words(std::size_t letters, std::size_t len) {
  std::vector<freealg::Word> out{freealg::Word()};
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<freealg::Word> next;
    for (const auto& w : out)
      for (std::size_t l = 0; l < letters; ++l) next.push_back(w * freealg::Word{static_cast<freealg::Letter>(l)});
    out = std::move(next);
  }
  return out;
}

}  // namespace testsupport
