#pragma once

#include "flopalg/freealg/ncpoly.hpp"

#include <string>
#include <vector>

namespace flopalg::ncgb {

using freealg::AlphabetPtr;
using freealg::NCPoly;
using freealg::Word;

/// Finitely presented algebra Q<alphabet>/(relations) with the degree-lex order
/// fixed by the alphabet's precedence.
struct Presentation {
  std::string name;
  AlphabetPtr alphabet;
  std::vector<NCPoly> relations;

  /// Every relation lies in the square of the augmentation ideal.
  bool is_local() const;
};

/// Validates (nonzero relations, shared alphabet) and normalizes relations to
/// monic form.
Presentation make_presentation(std::string name, AlphabetPtr alphabet, std::vector<NCPoly> relations);

}  // namespace flopalg::ncgb
