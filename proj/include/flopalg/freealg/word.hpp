#pragma once

#include "flopalg/freealg/alphabet.hpp"

#include <compare>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace flopalg::freealg {

/// Element of the free monoid: a finite sequence of letters. The empty word is
/// the identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  static Word power(Letter letter, std::size_t exponent) {
    return Word(std::vector<Letter>(exponent, letter));
  }

  std::size_t degree() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const { return letters_; }

  Word operator*(const Word& rhs) const;
  Word subword(std::size_t pos, std::size_t len) const;

  std::optional<std::size_t> find(const Word& factor, std::size_t from = 0) const;
  bool contains(const Word& factor) const { return find(factor).has_value(); }
  bool ends_with(const Word& suffix) const;

  /// Structural comparison (letter indices), used only for container keys.
  /// The monomial order lives in MonomialOrder.
  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// Renders a word as e.g. "y^2*x"; the empty word renders as "1".
std::string to_string(const Word& word, const Alphabet& alphabet);

/// Degree-lexicographic order: shorter words are smaller; equal-length words
/// compare at the first differing letter by precedence.
class MonomialOrder {
 public:
  explicit MonomialOrder(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

  std::strong_ordering compare(const Word& a, const Word& b) const;
  bool less(const Word& a, const Word& b) const { return compare(a, b) < 0; }
  bool greater(const Word& a, const Word& b) const { return compare(a, b) > 0; }

  const AlphabetPtr& alphabet() const { return alphabet_; }

 private:
  AlphabetPtr alphabet_;
};

/// Checked comparison: throws flopalg::Error when a word uses letters outside
/// the order's alphabet.
std::strong_ordering word_compare(const Word& a, const Word& b, const MonomialOrder& order);

}  // namespace flopalg::freealg
