#include "flopalg/freealg/word.hpp"

#include "flopalg/error.hpp"

#include <algorithm>

namespace flopalg::freealg {

Word Word::operator*(const Word& rhs) const {
  std::vector<Letter> out;
  out.reserve(letters_.size() + rhs.letters_.size());
  out.insert(out.end(), letters_.begin(), letters_.end());
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(out));
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                  letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

std::optional<std::size_t> Word::find(const Word& factor, std::size_t from) const {
  if (factor.degree() + from > degree()) return std::nullopt;
  auto it = std::search(letters_.begin() + static_cast<std::ptrdiff_t>(from), letters_.end(),
                        factor.letters_.begin(), factor.letters_.end());
  if (it == letters_.end() && !factor.empty()) return std::nullopt;
  return static_cast<std::size_t>(it - letters_.begin());
}

bool Word::ends_with(const Word& suffix) const {
  return suffix.degree() <= degree() &&
         std::equal(suffix.letters_.rbegin(), suffix.letters_.rend(), letters_.rbegin());
}

std::string to_string(const Word& word, const Alphabet& alphabet) {
  if (word.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < word.degree()) {
    std::size_t j = i;
    while (j < word.degree() && word[j] == word[i]) ++j;
    if (!out.empty()) out += '*';
    out += alphabet.name(word[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::strong_ordering MonomialOrder::compare(const Word& a, const Word& b) const {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = 0; i < a.degree(); ++i) {
    if (a[i] != b[i]) return alphabet_->rank(a[i]) <=> alphabet_->rank(b[i]);
  }
  return std::strong_ordering::equal;
}

std::strong_ordering word_compare(const Word& a, const Word& b, const MonomialOrder& order) {
  const auto n = order.alphabet()->size();
  for (const Word* w : {&a, &b})
    for (Letter l : w->letters())
      if (l >= n) throw Error("word uses a letter outside the order's alphabet");
  return order.compare(a, b);
}

}  // namespace flopalg::freealg
