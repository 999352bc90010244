#include "flopalg/findim/algebra.hpp"

#include "flopalg/error.hpp"

#include <algorithm>

namespace flopalg::findim {

Algebra Algebra::build(const ncgb::GroebnerBasis& gb) {
  std::size_t cap = 4;
  for (const auto& g : gb.elements) cap = std::max(cap, 2 * g.degree() + 4);
  auto cert = ncgb::normal_words(gb, cap * 8);
  if (!cert.finite()) throw Error("algebra is not certified finite-dimensional");

  Algebra alg;
  alg.gb_ = gb;
  alg.basis_ = std::move(cert.normal_words);
  alg.local_ = std::all_of(gb.elements.begin(), gb.elements.end(),
                           [](const NCPoly& g) { return g.low_degree() >= 2; });
  const std::size_t n = alg.dim();
  alg.table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      NCPoly prod = NCPoly::monomial(gb.alphabet, alg.basis_[i] * alg.basis_[j]);
      alg.table_[i * n + j] = linalg::to_sparse(alg.coordinates(prod));
    }
  return alg;
}

Algebra Algebra::build(const ncgb::Presentation& pres) {
  auto result = ncgb::dimension(pres);
  if (!result.certificate.finite())
    throw Error("presentation '" + pres.name + "' is not certified finite-dimensional");
  return build(result.basis);
}

std::optional<std::size_t> Algebra::index_of(const Word& w) const {
  // Basis is sorted ascending in the degree-lex order.
  freealg::MonomialOrder ord(gb_.alphabet);
  auto it = std::lower_bound(basis_.begin(), basis_.end(), w,
                             [&](const Word& a, const Word& b) { return ord.less(a, b); });
  if (it == basis_.end() || *it != w) return std::nullopt;
  return static_cast<std::size_t>(it - basis_.begin());
}

Vector Algebra::unit() const { return basis_vector(0); }

Vector Algebra::basis_vector(std::size_t i) const {
  Vector v(dim(), 0);
  v.at(i) = 1;
  return v;
}

Vector Algebra::coordinates(const NCPoly& p) const {
  NCPoly nf = ncgb::normal_form(p, gb_);
  Vector v(dim(), 0);
  for (const auto& t : nf.terms()) {
    auto idx = index_of(t.word);
    if (!idx) throw Error("normal form left the basis; the Groebner basis is not complete");
    v[*idx] = t.coeff;
  }
  return v;
}

NCPoly Algebra::element(const Vector& v) const {
  std::vector<freealg::NCTerm> terms;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) terms.push_back({basis_[i], v[i]});
  return NCPoly(gb_.alphabet, std::move(terms));
}

Vector Algebra::multiply(const Vector& u, const Vector& v) const {
  if (u.size() != dim() || v.size() != dim()) throw Error("vector size does not match the algebra");
  Vector out(dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (v[j] == 0) continue;
      Rational c = u[i] * v[j];
      for (const auto& [k, s] : product(i, j)) out[k] += c * s;
    }
  }
  return out;
}

std::vector<std::size_t> Algebra::degree_one_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (basis_[i].degree() == 1) out.push_back(i);
  return out;
}

std::string Algebra::basis_name(std::size_t i) const { return freealg::to_string(basis_.at(i), *gb_.alphabet); }

bool ParamElement::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const commalg::Poly& p) { return p.is_zero(); });
}

ParamElement constant_element(const Vector& v, std::size_t nparams) {
  ParamElement e;
  for (const auto& c : v) e.coords.push_back(commalg::Poly::constant(nparams, c));
  return e;
}

ParamElement add(const ParamElement& u, const ParamElement& v) {
  if (u.coords.size() != v.coords.size()) throw Error("element sizes differ");
  ParamElement out = u;
  for (std::size_t i = 0; i < v.coords.size(); ++i) out.coords[i] += v.coords[i];
  return out;
}

ParamElement scale(const ParamElement& u, const Rational& c) {
  ParamElement out = u;
  for (auto& p : out.coords) p *= c;
  return out;
}

ParamElement multiply(const Algebra& alg, const ParamElement& u, const ParamElement& v) {
  if (u.coords.size() != alg.dim() || v.coords.size() != alg.dim())
    throw Error("element size does not match the algebra");
  const std::size_t np = std::max(u.nparams(), v.nparams());
  ParamElement out;
  out.coords.assign(alg.dim(), commalg::Poly(np));
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    if (u.coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      if (v.coords[j].is_zero()) continue;
      const auto& row = alg.product(i, j);
      if (row.empty()) continue;
      commalg::Poly uv = u.coords[i] * v.coords[j];
      for (const auto& [k, s] : row) out.coords[k] += uv * s;
    }
  }
  return out;
}

ParamElement power(const Algebra& alg, const ParamElement& elem, std::size_t k) {
  if (k == 0) throw Error("power exponent must be at least 1");
  ParamElement out = elem;
  for (std::size_t i = 1; i < k; ++i) out = multiply(alg, out, elem);
  return out;
}

Vector specialize(const ParamElement& elem, std::span<const Rational> values) {
  Vector out;
  out.reserve(elem.coords.size());
  for (const auto& p : elem.coords) out.push_back(p.evaluate(values));
  return out;
}

ParamElement substitute(const ParamElement& elem, const std::vector<commalg::Poly>& assignment) {
  ParamElement out;
  for (const auto& p : elem.coords) out.coords.push_back(commalg::substitute(p, assignment));
  return out;
}

ParamElement evaluate(const Algebra& target, const NCPoly& p, const std::vector<ParamElement>& images) {
  if (images.size() != p.alphabet()->size()) throw Error("one image per source generator is required");
  std::size_t np = 0;
  for (const auto& im : images) np = std::max(np, im.nparams());
  ParamElement sum = constant_element(Vector(target.dim(), 0), np);
  for (const auto& t : p.terms()) {
    ParamElement prod = constant_element(target.unit(), np);
    for (auto l : t.word.letters()) prod = multiply(target, prod, images[l]);
    sum = add(sum, scale(prod, t.coeff));
  }
  return sum;
}

std::vector<std::size_t> radical_filtration(const Algebra& alg) {
  if (!alg.local()) throw Error("radical filtration is only supported for local algebras");
  std::vector<std::size_t> dims;
  std::vector<Vector> radical;
  for (std::size_t i = 1; i < alg.dim(); ++i) radical.push_back(alg.basis_vector(i));
  std::vector<Vector> current = radical;
  while (!current.empty()) {
    dims.push_back(current.size());
    linalg::EchelonBasis next;
    std::vector<Vector> spanning;
    for (const auto& r : radical)
      for (const auto& c : current) {
        Vector prod = alg.multiply(r, c);
        if (next.insert(linalg::to_sparse(prod))) spanning.push_back(std::move(prod));
      }
    if (spanning.size() >= current.size() && !spanning.empty())
      throw Error("radical powers do not decrease; the algebra is not local");
    current = std::move(spanning);
  }
  dims.push_back(0);
  return dims;
}

ncgb::Presentation abelianize(const ncgb::Presentation& pres) {
  std::vector<NCPoly> rels = pres.relations;
  const auto& alpha = pres.alphabet;
  for (std::size_t i = 0; i < alpha->size(); ++i)
    for (std::size_t j = i + 1; j < alpha->size(); ++j) {
      auto gi = NCPoly::generator(alpha, static_cast<freealg::Letter>(i));
      auto gj = NCPoly::generator(alpha, static_cast<freealg::Letter>(j));
      rels.push_back(gi * gj - gj * gi);
    }
  return ncgb::make_presentation(pres.name + "^ab", alpha, std::move(rels));
}

}  // namespace flopalg::findim
