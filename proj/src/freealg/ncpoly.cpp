#include "flopalg/freealg/ncpoly.hpp"

#include "flopalg/error.hpp"

#include <algorithm>
#include <map>

namespace flopalg::freealg {

namespace {

struct DescendingWords {
  const MonomialOrder* order;
  bool operator()(const Word& a, const Word& b) const { return order->greater(a, b); }
};

using TermMap = std::map<Word, Rational, DescendingWords>;

std::vector<NCTerm> flatten(TermMap&& map) {
  std::vector<NCTerm> out;
  out.reserve(map.size());
  for (auto& [w, c] : map)
    if (c != 0) out.push_back({w, std::move(c)});
  return out;
}

}  // namespace

NCPoly::NCPoly(AlphabetPtr alphabet, std::vector<NCTerm> terms) : alphabet_(std::move(alphabet)) {
  MonomialOrder ord(alphabet_);
  TermMap map(DescendingWords{&ord});
  for (auto& t : terms) {
    for (Letter l : t.word.letters())
      if (l >= alphabet_->size()) throw Error("term uses a letter outside the alphabet");
    map[t.word] += t.coeff;
  }
  terms_ = flatten(std::move(map));
}

NCPoly NCPoly::constant(AlphabetPtr alphabet, const Rational& c) {
  return monomial(std::move(alphabet), Word{}, c);
}

NCPoly NCPoly::monomial(AlphabetPtr alphabet, Word word, const Rational& c) {
  NCPoly p(std::move(alphabet));
  if (c != 0) p.terms_.push_back({std::move(word), c});
  return p;
}

NCPoly NCPoly::generator(AlphabetPtr alphabet, Letter letter) {
  if (letter >= alphabet->size()) throw Error("generator index out of range");
  return monomial(std::move(alphabet), Word{letter});
}

const NCTerm& NCPoly::leading() const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  return terms_.front();
}

std::size_t NCPoly::degree() const { return terms_.empty() ? 0 : terms_.front().word.degree(); }

std::size_t NCPoly::low_degree() const {
  std::size_t d = degree();
  for (const auto& t : terms_) d = std::min(d, t.word.degree());
  return d;
}

bool NCPoly::is_homogeneous() const { return low_degree() == degree(); }

Rational NCPoly::coefficient(const Word& word) const {
  for (const auto& t : terms_)
    if (t.word == word) return t.coeff;
  return 0;
}

NCPoly NCPoly::monic() const {
  if (is_zero()) return *this;
  NCPoly out = *this;
  Rational inv = 1 / leading().coeff;
  for (auto& t : out.terms_) t.coeff *= inv;
  return out;
}

NCPoly NCPoly::tail() const {
  NCPoly out(alphabet_);
  if (!terms_.empty()) out.terms_.assign(terms_.begin() + 1, terms_.end());
  return out;
}

NCPoly NCPoly::sandwich(const Word& left, const Word& right) const {
  NCPoly out(alphabet_);
  out.terms_.reserve(terms_.size());
  // Concatenation with fixed words preserves the order, so the result stays sorted.
  for (const auto& t : terms_) out.terms_.push_back({left * t.word * right, t.coeff});
  return out;
}

NCPoly NCPoly::operator-() const {
  NCPoly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

void NCPoly::check_compatible(const NCPoly& rhs) const {
  if (!same_alphabet(alphabet_, rhs.alphabet_)) throw Error("mismatched alphabets");
}

NCPoly& NCPoly::operator+=(const NCPoly& rhs) {
  check_compatible(rhs);
  MonomialOrder ord(alphabet_);
  std::vector<NCTerm> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && ord.greater(a->word, b->word))) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || ord.greater(b->word, a->word)) {
      out.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (c != 0) out.push_back({std::move(a->word), std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& rhs) { return *this += -rhs; }

NCPoly& NCPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

NCPoly operator*(const NCPoly& lhs, const NCPoly& rhs) {
  lhs.check_compatible(rhs);
  MonomialOrder ord(lhs.alphabet_);
  TermMap map(DescendingWords{&ord});
  for (const auto& s : lhs.terms_)
    for (const auto& t : rhs.terms_) map[s.word * t.word] += s.coeff * t.coeff;
  NCPoly out(lhs.alphabet_);
  out.terms_ = flatten(std::move(map));
  return out;
}

bool NCPoly::operator==(const NCPoly& rhs) const {
  check_compatible(rhs);
  return terms_ == rhs.terms_;
}

std::string NCPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    Rational mag = abs(t.coeff);
    bool negative = t.coeff < 0;
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.word.empty()) {
      out += flopalg::to_string(mag);
    } else {
      if (mag != 1) out += flopalg::to_string(mag) + "*";
      out += freealg::to_string(t.word, *alphabet_);
    }
  }
  return out;
}

NCPoly power(const NCPoly& p, std::size_t exponent) {
  NCPoly result = NCPoly::constant(p.alphabet(), 1);
  for (std::size_t i = 0; i < exponent; ++i) result = result * p;
  return result;
}

}  // namespace flopalg::freealg
