#pragma once

#include "flopalg/freealg/ncpoly.hpp"
#include "flopalg/rational.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace flopalg::commalg {

/// Exponent vector of a commutative monomial.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint16_t> exps);

  static Monomial variable(std::size_t nvars, std::size_t var, std::uint16_t exponent = 1);

  std::size_t nvars() const { return exps_.size(); }
  std::uint16_t operator[](std::size_t i) const { return exps_[i]; }
  std::span<const std::uint16_t> exponents() const { return exps_; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial operator*(const Monomial& rhs) const;
  /// Requires rhs to divide *this.
  Monomial operator/(const Monomial& rhs) const;
  Monomial lcm(const Monomial& rhs) const;

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<std::uint16_t> exps_;
  unsigned degree_ = 0;
};

/// dp: degree reverse lexicographic (global, 1 is minimal).
/// ds: negative degree reverse lexicographic (local, 1 is maximal).
enum class Order { Dp, Ds };

std::string_view order_name(Order order);
Order parse_order(std::string_view name);
bool is_global(Order order);

std::strong_ordering compare(const Monomial& a, const Monomial& b, Order order);

struct Term {
  Monomial mono;
  Rational coeff;

  bool operator==(const Term&) const = default;
};

/// Polynomial in `nvars` variables over Q; terms sorted descending in `order`.
class Poly {
 public:
  explicit Poly(std::size_t nvars = 0, Order order = Order::Dp) : nvars_(nvars), order_(order) {}
  Poly(std::size_t nvars, Order order, std::vector<Term> terms);

  static Poly constant(std::size_t nvars, const Rational& c, Order order = Order::Dp);
  static Poly variable(std::size_t nvars, std::size_t var, Order order = Order::Dp);
  static Poly monomial(const Monomial& m, const Rational& c = 1, Order order = Order::Dp);

  std::size_t nvars() const { return nvars_; }
  Order order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  const Term& leading() const;
  const Monomial& leading_monomial() const { return leading().mono; }
  /// Largest total degree of a term (0 for the zero polynomial).
  unsigned total_degree() const;
  /// total_degree - degree(leading monomial); drives Mora's normal form.
  unsigned ecart() const { return total_degree() - leading_monomial().degree(); }
  Rational coefficient(const Monomial& m) const;

  Poly with_order(Order order) const;
  Poly monic() const;
  Poly tail() const;
  /// c * m * this
  Poly mul_term(const Monomial& m, const Rational& c) const;
  Poly derivative(std::size_t var) const;
  Rational evaluate(std::span<const Rational> point) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(Poly lhs, const Rational& c) { return lhs *= c; }
  friend Poly operator*(const Rational& c, Poly rhs) { return rhs *= c; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);

  bool operator==(const Poly& rhs) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void check_compatible(const Poly& rhs) const;

  std::size_t nvars_;
  Order order_;
  std::vector<Term> terms_;
};

Poly power(const Poly& p, std::size_t exponent);

/// Replaces variable i of f by assignment[i]. All assignments share one
/// variable count and order; the result uses them.
Poly substitute(const Poly& f, const std::vector<Poly>& assignment);

/// Commutative image of a noncommutative polynomial (letters become variables).
Poly from_ncpoly(const freealg::NCPoly& p, Order order = Order::Dp);

/// Parses text in the shared polynomial syntax over variables `names`.
Poly parse_poly(std::string_view text, const std::vector<std::string>& names, Order order = Order::Dp,
                std::size_t line = 1, std::size_t column_offset = 0);

}  // namespace flopalg::commalg
