#pragma once

#include "flopalg/rational.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace flopalg::linalg {

/// Sparse row: (column, value) pairs, columns strictly increasing, no zeros.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

SparseRow to_sparse(const std::vector<Rational>& dense);

/// Incrementally built row-echelon basis of a subspace of Q^n.
class EchelonBasis {
 public:
  /// Reduces `row` by the stored pivots; stores it if independent.
  /// Returns true when the row enlarged the span.
  bool insert(const SparseRow& row);
  SparseRow reduce(const SparseRow& row) const;
  bool contains(const SparseRow& row) const { return reduce(row).empty(); }
  std::size_t rank() const { return pivots_.size(); }
  /// Stored rows, each normalized to leading coefficient 1.
  std::vector<SparseRow> rows() const;

 private:
  std::map<std::size_t, SparseRow> pivots_;
};

/// Solves A x = b exactly (A given by sparse rows over `ncols` unknowns).
/// Free variables are set to zero; nullopt when inconsistent.
std::optional<std::vector<Rational>> solve(const std::vector<SparseRow>& rows, const std::vector<Rational>& rhs,
                                           std::size_t ncols);

}  // namespace flopalg::linalg
