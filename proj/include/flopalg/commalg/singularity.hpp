#pragma once

#include "flopalg/commalg/groebner.hpp"

#include <optional>
#include <string>
#include <vector>

namespace flopalg::commalg {

/// All first partial derivatives of f.
std::vector<Poly> jacobian(const Poly& f);

/// vdim of the Jacobian ideal under `order`; nullopt when not finite.
std::optional<std::size_t> milnor(const Poly& f, Order order);
/// vdim of (f) + Jacobian ideal under `order`; nullopt when not finite.
std::optional<std::size_t> tjurina(const Poly& f, Order order);

enum class Smoothness { Smooth, Singular, Inconclusive };

std::string_view smoothness_name(Smoothness s);

struct SmoothnessVerdict {
  Smoothness verdict = Smoothness::Inconclusive;
  /// Global Groebner basis of (h, dh/dx_1, ..., dh/dx_n).
  StandardBasis basis;
  /// vdim of the singular-locus ideal when the verdict is Singular.
  std::optional<std::size_t> singular_vdim;
  std::string reason;
};

/// Smooth when 1 lies in (h, partials); Singular when the Groebner basis
/// certifies a proper ideal; Inconclusive when the pair budget ran out.
SmoothnessVerdict hypersurface_smoothness(const Poly& h, const BuchbergerOptions& options = {});

}  // namespace flopalg::commalg
