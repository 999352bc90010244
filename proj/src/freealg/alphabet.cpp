#include "flopalg/freealg/alphabet.hpp"

#include "flopalg/error.hpp"

#include <algorithm>
#include <set>

namespace flopalg::freealg {

namespace {

void check_names(const std::vector<std::string>& names) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw Error("generator names must be nonempty");
    if (!seen.insert(n).second) throw Error("duplicate generator '" + n + "'");
  }
  if (names.size() > 0xFFFF) throw Error("too many generators");
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> generators) : names_(std::move(generators)) {
  check_names(names_);
  rank_.resize(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i)
    rank_[i] = static_cast<unsigned>(names_.size() - 1 - i);
}

Alphabet::Alphabet(std::vector<std::string> generators, const std::vector<std::string>& precedence)
    : names_(std::move(generators)) {
  check_names(names_);
  if (precedence.size() != names_.size())
    throw Error("precedence must list every generator exactly once");
  rank_.assign(names_.size(), 0);
  std::vector<bool> assigned(names_.size(), false);
  for (std::size_t i = 0; i < precedence.size(); ++i) {
    auto letter = find(precedence[i]);
    if (!letter) throw Error("precedence names unknown generator '" + precedence[i] + "'");
    if (assigned[*letter]) throw Error("precedence repeats generator '" + precedence[i] + "'");
    assigned[*letter] = true;
    rank_[*letter] = static_cast<unsigned>(precedence.size() - 1 - i);
  }
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Letter>(it - names_.begin());
}

std::vector<std::string> Alphabet::precedence() const {
  std::vector<std::string> out(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) out[names_.size() - 1 - rank_[i]] = names_[i];
  return out;
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace flopalg::freealg
