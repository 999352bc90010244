#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace flopalg::freealg {

using Letter = std::uint16_t;

/// Finite ordered set of generator names with a precedence used to break
/// ties in the degree-lexicographic order.
class Alphabet {
 public:
  /// Precedence equals declaration order (first generator is highest).
  explicit Alphabet(std::vector<std::string> generators);
  /// `precedence` lists every generator once, highest first.
  Alphabet(std::vector<std::string> generators, const std::vector<std::string>& precedence);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Letter letter) const { return names_.at(letter); }
  const std::vector<std::string>& generators() const { return names_; }
  std::optional<Letter> find(std::string_view name) const;

  /// Larger rank means higher precedence.
  unsigned rank(Letter letter) const { return rank_.at(letter); }
  /// Generator names ordered from highest to lowest precedence.
  std::vector<std::string> precedence() const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<unsigned> rank_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

inline AlphabetPtr make_alphabet(std::vector<std::string> generators) {
  return std::make_shared<const Alphabet>(std::move(generators));
}

inline AlphabetPtr make_alphabet(std::vector<std::string> generators,
                                 const std::vector<std::string>& precedence) {
  return std::make_shared<const Alphabet>(std::move(generators), precedence);
}

/// True when both pointers denote the same alphabet (by identity or value).
bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

}  // namespace flopalg::freealg
