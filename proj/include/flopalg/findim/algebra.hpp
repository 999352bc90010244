#pragma once

#include "flopalg/commalg/poly.hpp"
#include "flopalg/linalg.hpp"
#include "flopalg/ncgb/groebner.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace flopalg::findim {

using freealg::NCPoly;
using freealg::Word;
using Vector = std::vector<Rational>;

/// Finite-dimensional quotient algebra given by its normal-word basis and the
/// structure constants of every basis product.
class Algebra {
 public:
  /// Requires a complete basis with a finite normal-word set.
  static Algebra build(const ncgb::GroebnerBasis& gb);
  static Algebra build(const ncgb::Presentation& pres);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<Word>& basis() const { return basis_; }
  const ncgb::GroebnerBasis& groebner_basis() const { return gb_; }
  const freealg::AlphabetPtr& alphabet() const { return gb_.alphabet; }
  /// Every basis relation lies in the square of the augmentation ideal.
  bool local() const { return local_; }

  std::optional<std::size_t> index_of(const Word& w) const;
  /// Coordinates of normal_form(basis[i] * basis[j]).
  const linalg::SparseRow& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  Vector unit() const;
  Vector basis_vector(std::size_t i) const;
  Vector coordinates(const NCPoly& p) const;
  NCPoly element(const Vector& v) const;
  Vector multiply(const Vector& u, const Vector& v) const;

  /// Indices of the length-one basis words (a basis of J/J^2 for local algebras).
  std::vector<std::size_t> degree_one_indices() const;

  std::string basis_name(std::size_t i) const;

 private:
  ncgb::GroebnerBasis gb_;
  std::vector<Word> basis_;
  std::vector<linalg::SparseRow> table_;
  bool local_ = false;
};

/// Element whose coordinates are polynomials in formal parameters.
struct ParamElement {
  std::vector<commalg::Poly> coords;

  std::size_t nparams() const { return coords.empty() ? 0 : coords.front().nvars(); }
  bool is_zero() const;
};

ParamElement constant_element(const Vector& v, std::size_t nparams);
ParamElement add(const ParamElement& u, const ParamElement& v);
ParamElement scale(const ParamElement& u, const Rational& c);
ParamElement multiply(const Algebra& alg, const ParamElement& u, const ParamElement& v);
/// elem^k in coordinates (k >= 1); the caller inspects zero-ness.
ParamElement power(const Algebra& alg, const ParamElement& elem, std::size_t k);
Vector specialize(const ParamElement& elem, std::span<const Rational> values);
ParamElement substitute(const ParamElement& elem, const std::vector<commalg::Poly>& assignment);

/// Image of a noncommutative polynomial when generator g is sent to images[g].
ParamElement evaluate(const Algebra& target, const NCPoly& p, const std::vector<ParamElement>& images);

/// dim J, dim J^2, ... down to 0, with J the span of the non-identity basis
/// words. Throws for non-local algebras.
std::vector<std::size_t> radical_filtration(const Algebra& alg);

/// Appends every commutator [g_i, g_j] (i < j) to the relations.
ncgb::Presentation abelianize(const ncgb::Presentation& pres);

}  // namespace flopalg::findim
