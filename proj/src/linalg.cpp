#include "flopalg/linalg.hpp"

#include "flopalg/error.hpp"

namespace flopalg::linalg {

namespace {

using WorkRow = std::map<std::size_t, Rational>;

void reduce_in_place(WorkRow& work, const std::map<std::size_t, SparseRow>& pivots) {
  for (auto it = work.begin(); it != work.end();) {
    auto p = pivots.find(it->first);
    if (p == pivots.end()) {
      ++it;
      continue;
    }
    Rational factor = it->second;
    for (const auto& [col, val] : p->second) {
      Rational& w = work[col];
      w -= factor * val;
    }
    // Leading column of the pivot row cancels exactly; drop zeros at or after it.
    std::size_t col = it->first;
    for (auto jt = work.find(col); jt != work.end();) {
      if (jt->second == 0) {
        jt = work.erase(jt);
      } else {
        ++jt;
      }
    }
    it = work.upper_bound(col);
    // Entries before `col` were already pivot-free, restart from the first entry after it.
  }
}

SparseRow from_work(const WorkRow& work) {
  SparseRow out;
  out.reserve(work.size());
  for (const auto& [c, v] : work)
    if (v != 0) out.emplace_back(c, v);
  return out;
}

}  // namespace

SparseRow to_sparse(const std::vector<Rational>& dense) {
  SparseRow out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) out.emplace_back(i, dense[i]);
  return out;
}

SparseRow EchelonBasis::reduce(const SparseRow& row) const {
  WorkRow work(row.begin(), row.end());
  reduce_in_place(work, pivots_);
  return from_work(work);
}

bool EchelonBasis::insert(const SparseRow& row) {
  SparseRow r = reduce(row);
  if (r.empty()) return false;
  Rational inv = 1 / r.front().second;
  for (auto& [c, v] : r) v *= inv;
  pivots_.emplace(r.front().first, std::move(r));
  return true;
}

std::vector<SparseRow> EchelonBasis::rows() const {
  std::vector<SparseRow> out;
  for (const auto& [c, r] : pivots_) out.push_back(r);
  return out;
}

std::optional<std::vector<Rational>> solve(const std::vector<SparseRow>& rows, const std::vector<Rational>& rhs,
                                           std::size_t ncols) {
  if (rows.size() != rhs.size()) throw Error("solve: row and right-hand-side counts differ");
  EchelonBasis basis;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    SparseRow aug = rows[r];
    if (!aug.empty() && aug.back().first >= ncols) throw Error("solve: column index out of range");
    if (rhs[r] != 0) aug.emplace_back(ncols, rhs[r]);
    SparseRow red = basis.reduce(aug);
    if (red.empty()) continue;
    if (red.front().first == ncols) return std::nullopt;
    basis.insert(red);
  }
  std::vector<Rational> x(ncols, 0);
  auto pivot_rows = basis.rows();
  for (auto it = pivot_rows.rbegin(); it != pivot_rows.rend(); ++it) {
    const auto& row = *it;
    const std::size_t lead = row.front().first;
    Rational value = 0;
    for (std::size_t k = 1; k < row.size(); ++k) {
      const auto& [c, v] = row[k];
      if (c == ncols) {
        value += v;
      } else {
        value -= v * x[c];
      }
    }
    x[lead] = value;
  }
  return x;
}

}  // namespace flopalg::linalg
