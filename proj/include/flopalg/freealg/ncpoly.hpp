#pragma once

#include "flopalg/freealg/word.hpp"
#include "flopalg/rational.hpp"

#include <string>
#include <vector>

namespace flopalg::freealg {

struct NCTerm {
  Word word;
  Rational coeff;

  bool operator==(const NCTerm&) const = default;
};

/// Element of the free associative algebra Q<alphabet>. Terms are stored
/// sorted descending in the degree-lex order; no zero coefficients are kept.
class NCPoly {
 public:
  explicit NCPoly(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}
  NCPoly(AlphabetPtr alphabet, std::vector<NCTerm> terms);

  static NCPoly constant(AlphabetPtr alphabet, const Rational& c);
  static NCPoly monomial(AlphabetPtr alphabet, Word word, const Rational& c = 1);
  static NCPoly generator(AlphabetPtr alphabet, Letter letter);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  MonomialOrder order() const { return MonomialOrder(alphabet_); }
  const std::vector<NCTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Requires a nonzero polynomial.
  const NCTerm& leading() const;
  const Word& leading_word() const { return leading().word; }
  std::size_t degree() const;
  /// Smallest degree of a word in the support.
  std::size_t low_degree() const;
  bool is_homogeneous() const;
  Rational coefficient(const Word& word) const;

  NCPoly monic() const;
  /// The polynomial without its leading term.
  NCPoly tail() const;
  /// left * this * right
  NCPoly sandwich(const Word& left, const Word& right) const;

  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& rhs);
  NCPoly& operator-=(const NCPoly& rhs);
  NCPoly& operator*=(const Rational& c);
  friend NCPoly operator+(NCPoly lhs, const NCPoly& rhs) { return lhs += rhs; }
  friend NCPoly operator-(NCPoly lhs, const NCPoly& rhs) { return lhs -= rhs; }
  friend NCPoly operator*(NCPoly lhs, const Rational& c) { return lhs *= c; }
  friend NCPoly operator*(const Rational& c, NCPoly rhs) { return rhs *= c; }
  friend NCPoly operator*(const NCPoly& lhs, const NCPoly& rhs);

  /// Equality of term maps; alphabets must match.
  bool operator==(const NCPoly& rhs) const;

  /// Text form accepted by parse_ncpoly, e.g. "-a^2 + b^3 + a*b*a".
  std::string to_string() const;

 private:
  void check_compatible(const NCPoly& rhs) const;

  AlphabetPtr alphabet_;
  std::vector<NCTerm> terms_;
};

inline NCPoly ncpoly_mul(const NCPoly& p, const NCPoly& q) { return p * q; }

NCPoly power(const NCPoly& p, std::size_t exponent);

}  // namespace flopalg::freealg
