#pragma once

#include "flopalg/freealg/word.hpp"

#include <vector>

namespace flopalg::freealg {

/// Ambiguity between two leading words w1, w2.
///
/// Overlap: a nonempty proper suffix of w1 equals a nonempty proper prefix of
/// w2; `word` = w1 * (rest of w2) and `offset` is where w2 starts in `word`.
/// Inclusion: w2 occurs inside w1 (w2 != w1); `word` = w1 and `offset` is the
/// position of the occurrence.
struct Ambiguity {
  enum class Kind { Overlap, Inclusion };
  Kind kind;
  std::size_t offset;
  Word word;

  bool operator==(const Ambiguity&) const = default;
};

std::vector<Ambiguity> overlaps(const Word& w1, const Word& w2);

}  // namespace flopalg::freealg
