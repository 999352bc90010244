#pragma once

#include "flopalg/commalg/poly.hpp"

#include <optional>
#include <vector>

namespace flopalg::commalg {

/// Groebner basis (global order) or standard basis (local order).
struct StandardBasis {
  std::size_t nvars = 0;
  Order order = Order::Dp;
  std::vector<Poly> elements;
  /// Reduced (global case) or minimal (local case).
  bool reduced = false;
  /// False when a pair budget stopped the computation early.
  bool finished = true;

  bool is_unit() const;
};

struct BuchbergerOptions {
  /// 0 means no limit.
  std::size_t max_pairs = 0;
};

/// Reduced Groebner basis for a global order. A local order dispatches to mora_std.
StandardBasis buchberger(std::vector<Poly> generators, Order order = Order::Dp,
                         const BuchbergerOptions& options = {});

/// Standard basis for the local order ds, via Mora's tangent-cone normal form.
StandardBasis mora_std(std::vector<Poly> generators);

/// Dispatches on `order`.
StandardBasis standard_basis(std::vector<Poly> generators, Order order);

/// Global order: fully reduced remainder. Local order: Mora weak normal form.
Poly normal_form(const Poly& p, const StandardBasis& basis);

/// Mora's normal form of h with respect to `reducers` (local or global orders).
Poly mora_normal_form(const Poly& h, const std::vector<Poly>& reducers);

struct Membership {
  bool member;
  Poly remainder;
};

Membership member(const Poly& p, const StandardBasis& basis);
bool contains_one(const StandardBasis& basis);

/// Number of standard monomials; nullopt when the staircase is unbounded.
std::optional<std::size_t> vdim(const StandardBasis& basis);

/// Minimal generators of the leading-monomial ideal.
std::vector<Monomial> leading_ideal(const StandardBasis& basis);

}  // namespace flopalg::commalg
