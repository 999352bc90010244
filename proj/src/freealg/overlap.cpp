#include "flopalg/freealg/overlap.hpp"

#include <algorithm>

namespace flopalg::freealg {

std::vector<Ambiguity> overlaps(const Word& w1, const Word& w2) {
  std::vector<Ambiguity> out;
  if (w1.empty() || w2.empty()) return out;
  const std::size_t n1 = w1.degree();
  const std::size_t n2 = w2.degree();
  // Longest shared part first, so the shortest ambiguity word comes first.
  for (std::size_t k = std::min(n1, n2) - 1; k >= 1; --k) {
    if (w1.subword(n1 - k, k) == w2.subword(0, k)) {
      out.push_back({Ambiguity::Kind::Overlap, n1 - k, w1 * w2.subword(k, n2 - k)});
    }
  }
  if (n2 <= n1 && w1 != w2) {
    for (auto pos = w1.find(w2); pos; pos = w1.find(w2, *pos + 1))
      out.push_back({Ambiguity::Kind::Inclusion, *pos, w1});
  }
  return out;
}

}  // namespace flopalg::freealg
