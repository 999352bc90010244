#pragma once

#include "flopalg/commalg/poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace flopalg::matfac {

using commalg::Poly;

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);
  /// Rows must be non-empty and rectangular.
  explicit PolyMatrix(std::vector<std::vector<Poly>> entries);
  static PolyMatrix identity(std::size_t n, std::size_t nvars);
  static PolyMatrix scalar(std::size_t n, const Poly& f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nvars() const { return nvars_; }
  Poly& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Poly& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  PolyMatrix column(std::size_t j) const;

  bool is_zero() const;
  unsigned max_degree() const;

  PolyMatrix& operator+=(const PolyMatrix& rhs);
  PolyMatrix& operator-=(const PolyMatrix& rhs);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const Poly& f, const PolyMatrix& m);
  friend PolyMatrix operator*(const Rational& c, const PolyMatrix& m);
  bool operator==(const PolyMatrix& rhs) const;

  std::vector<std::vector<std::string>> to_strings(const std::vector<std::string>& names) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t nvars_ = 0;
  std::vector<Poly> entries_;
};

struct MatrixFactorization {
  PolyMatrix phi;
  PolyMatrix psi;
  Poly f;
};

struct FactorizationCheck {
  bool ok = false;
  /// phi * psi - f * I and psi * phi - f * I.
  PolyMatrix residual_phi_psi;
  PolyMatrix residual_psi_phi;
};

FactorizationCheck check_matrix_factorization(const MatrixFactorization& mf);

/// M = psi * G + f * H.
struct MembershipWitness {
  PolyMatrix g;
  PolyMatrix h;
};

struct MembershipResult {
  std::optional<MembershipWitness> witness;
  /// Largest degree bound tried.
  unsigned degree_bound = 0;
};

/// Searches G, H with entries of degree <= degree_bound. The witness is
/// re-verified exactly before it is returned.
std::optional<MembershipWitness> column_space_membership(const PolyMatrix& m, const PolyMatrix& psi, const Poly& f,
                                                         unsigned degree_bound);

/// Default policy: bound 1 + max entry degree of M, doubled once on failure.
MembershipResult column_space_membership(const PolyMatrix& m, const PolyMatrix& psi, const Poly& f);

bool verify_membership(const PolyMatrix& m, const PolyMatrix& psi, const Poly& f, const MembershipWitness& w);

struct RelationCheck {
  PolyMatrix value;
  bool exactly_zero = false;
  MembershipResult membership;
  bool passed() const { return exactly_zero || membership.witness.has_value(); }
};

/// Evaluates `expr` (a noncommutative polynomial in the arrow names, words read
/// as matrix products in written order) and tests it against the column space
/// of psi.
RelationCheck check_quiver_relation(const std::string& expr, const std::map<std::string, PolyMatrix>& arrows,
                                    const PolyMatrix& psi, const Poly& f);

PolyMatrix evaluate_arrow_expression(const std::string& expr, const std::map<std::string, PolyMatrix>& arrows,
                                     std::size_t square_size, std::size_t nvars);

}  // namespace flopalg::matfac
