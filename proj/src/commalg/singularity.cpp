#include "flopalg/commalg/singularity.hpp"

#include "flopalg/error.hpp"

namespace flopalg::commalg {

std::vector<Poly> jacobian(const Poly& f) {
  std::vector<Poly> out;
  for (std::size_t v = 0; v < f.nvars(); ++v) out.push_back(f.derivative(v));
  return out;
}

std::optional<std::size_t> milnor(const Poly& f, Order order) {
  if (f.is_constant()) throw Error("Milnor number of a constant polynomial");
  return vdim(standard_basis(jacobian(f.with_order(order)), order));
}

std::optional<std::size_t> tjurina(const Poly& f, Order order) {
  if (f.is_constant()) throw Error("Tjurina number of a constant polynomial");
  auto gens = jacobian(f.with_order(order));
  gens.push_back(f.with_order(order));
  return vdim(standard_basis(std::move(gens), order));
}

std::string_view smoothness_name(Smoothness s) {
  switch (s) {
    case Smoothness::Smooth: return "smooth";
    case Smoothness::Singular: return "singular";
    case Smoothness::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

SmoothnessVerdict hypersurface_smoothness(const Poly& h, const BuchbergerOptions& options) {
  SmoothnessVerdict out;
  auto gens = jacobian(h.with_order(Order::Dp));
  gens.insert(gens.begin(), h.with_order(Order::Dp));
  out.basis = buchberger(std::move(gens), Order::Dp, options);
  if (!out.basis.finished) {
    out.verdict = Smoothness::Inconclusive;
    out.reason = "pair budget exhausted before a certificate was found";
    return out;
  }
  if (contains_one(out.basis)) {
    out.verdict = Smoothness::Smooth;
    out.reason = "1 lies in the ideal of the relation and its partial derivatives";
    return out;
  }
  out.verdict = Smoothness::Singular;
  out.singular_vdim = vdim(out.basis);
  out.reason = "reduced Groebner basis of the singular-locus ideal is proper";
  return out;
}

}  // namespace flopalg::commalg
