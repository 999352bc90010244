#include "flopalg/ncgb/presentation.hpp"

#include "flopalg/error.hpp"

namespace flopalg::ncgb {

bool Presentation::is_local() const {
  for (const auto& r : relations)
    if (r.low_degree() < 2) return false;
  return true;
}

Presentation make_presentation(std::string name, AlphabetPtr alphabet, std::vector<NCPoly> relations) {
  if (!alphabet) throw Error("presentation needs an alphabet");
  Presentation pres{std::move(name), std::move(alphabet), {}};
  for (auto& r : relations) {
    if (!freealg::same_alphabet(r.alphabet(), pres.alphabet))
      throw Error("relation over a different alphabet");
    if (r.is_zero()) throw Error("zero relation in presentation '" + pres.name + "'");
    pres.relations.push_back(r.monic());
  }
  return pres;
}

}  // namespace flopalg::ncgb
