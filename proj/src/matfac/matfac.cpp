#include "flopalg/matfac/matfac.hpp"

#include "flopalg/error.hpp"
#include "flopalg/freealg/parse.hpp"
#include "flopalg/linalg.hpp"

#include <algorithm>

namespace flopalg::matfac {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), entries_(rows * cols, Poly(nvars)) {}

PolyMatrix::PolyMatrix(std::vector<std::vector<Poly>> entries) {
  if (entries.empty() || entries.front().empty()) throw Error("matrix must have at least one row and column");
  rows_ = entries.size();
  cols_ = entries.front().size();
  nvars_ = entries.front().front().nvars();
  entries_.reserve(rows_ * cols_);
  for (auto& row : entries) {
    if (row.size() != cols_) throw Error("matrix rows have different lengths");
    for (auto& p : row) {
      if (p.nvars() != nvars_) throw Error("matrix entries use different variable counts");
      entries_.push_back(std::move(p));
    }
  }
}

PolyMatrix PolyMatrix::identity(std::size_t n, std::size_t nvars) {
  return scalar(n, Poly::constant(nvars, 1));
}

PolyMatrix PolyMatrix::scalar(std::size_t n, const Poly& f) {
  PolyMatrix m(n, n, f.nvars());
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f;
  return m;
}

PolyMatrix PolyMatrix::column(std::size_t j) const {
  PolyMatrix c(rows_, 1, nvars_);
  for (std::size_t i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
  return c;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Poly& p) { return p.is_zero(); });
}

unsigned PolyMatrix::max_degree() const {
  unsigned d = 0;
  for (const auto& p : entries_) d = std::max(d, p.total_degree());
  return d;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error("matrix sum: shape mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error("matrix difference: shape mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
  return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_)
    throw Error("matrix product: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " times " +
                std::to_string(b.rows_) + "x" + std::to_string(b.cols_) + " does not compose");
  PolyMatrix out(a.rows_, b.cols_, a.nvars_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Poly& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b.at(k, j).is_zero()) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

PolyMatrix operator*(const Poly& f, const PolyMatrix& m) {
  PolyMatrix out = m;
  for (auto& p : out.entries_) p = f * p;
  return out;
}

PolyMatrix operator*(const Rational& c, const PolyMatrix& m) {
  PolyMatrix out = m;
  for (auto& p : out.entries_) p *= c;
  return out;
}

bool PolyMatrix::operator==(const PolyMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

std::vector<std::vector<std::string>> PolyMatrix::to_strings(const std::vector<std::string>& names) const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back(at(i, j).to_string(names));
  return out;
}

FactorizationCheck check_matrix_factorization(const MatrixFactorization& mf) {
  const std::size_t n = mf.phi.rows();
  if (mf.phi.cols() != n || mf.psi.rows() != n || mf.psi.cols() != n)
    throw Error("matrix factorization needs square matrices of equal size");
  FactorizationCheck out;
  const PolyMatrix fI = PolyMatrix::scalar(n, mf.f);
  out.residual_phi_psi = mf.phi * mf.psi - fI;
  out.residual_psi_phi = mf.psi * mf.phi - fI;
  out.ok = out.residual_phi_psi.is_zero() && out.residual_psi_phi.is_zero();
  return out;
}

namespace {

std::vector<commalg::Monomial> monomials_up_to(std::size_t nvars, unsigned bound) {
  std::vector<commalg::Monomial> out;
  std::vector<std::uint16_t> e(nvars, 0);
  // Odometer over exponent vectors with total degree <= bound.
  for (;;) {
    out.emplace_back(e);
    std::size_t k = 0;
    for (; k < nvars; ++k) {
      unsigned deg = 0;
      for (auto x : e) deg += x;
      if (deg < bound) {
        ++e[k];
        break;
      }
      e[k] = 0;
    }
    if (k == nvars) break;
  }
  return out;
}

}  // namespace

bool verify_membership(const PolyMatrix& m, const PolyMatrix& psi, const Poly& f, const MembershipWitness& w) {
  return psi * w.g + f * w.h == m;
}

std::optional<MembershipWitness> column_space_membership(const PolyMatrix& m, const PolyMatrix& psi, const Poly& f,
                                                         unsigned degree_bound) {
  if (psi.rows() != m.rows()) throw Error("column space membership: M and psi have different row counts");
  const std::size_t nvars = m.nvars();
  const std::size_t n = psi.cols();
  const std::size_t rows = m.rows();
  MembershipWitness w{PolyMatrix(n, m.cols(), nvars), PolyMatrix(rows, m.cols(), nvars)};
  if (m.is_zero()) return w;

  const auto monos = monomials_up_to(nvars, degree_bound);
  const std::size_t nm = monos.size();
  // Unknowns: g_k * monos[a] at k * nm + a, then h_i * monos[a] at (n + i) * nm + a.
  const std::size_t ncols = (n + rows) * nm;

  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::map<std::pair<std::size_t, commalg::Monomial>, std::map<std::size_t, Rational>> eqs;
    auto add = [&](std::size_t i, const Poly& p, std::size_t unknown_base) {
      for (std::size_t a = 0; a < nm; ++a)
        for (const auto& t : p.terms()) eqs[{i, t.mono * monos[a]}][unknown_base + a] += t.coeff;
    };
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t k = 0; k < n; ++k)
        if (!psi.at(i, k).is_zero()) add(i, psi.at(i, k), k * nm);
      add(i, f, (n + i) * nm);
      for (const auto& t : m.at(i, j).terms()) eqs[{i, t.mono}];
    }
    std::vector<linalg::SparseRow> a_rows;
    std::vector<Rational> rhs;
    for (const auto& [key, coeffs] : eqs) {
      linalg::SparseRow row;
      for (const auto& [c, v] : coeffs)
        if (v != 0) row.emplace_back(c, v);
      a_rows.push_back(std::move(row));
      rhs.push_back(m.at(key.first, j).coefficient(key.second));
    }
    auto x = linalg::solve(a_rows, rhs, ncols);
    if (!x) return std::nullopt;
    for (std::size_t u = 0; u < ncols; ++u) {
      if ((*x)[u] == 0) continue;
      const std::size_t entry = u / nm;
      Poly term = Poly::monomial(monos[u % nm], (*x)[u]);
      if (entry < n) {
        w.g.at(entry, j) += term;
      } else {
        w.h.at(entry - n, j) += term;
      }
    }
  }
  if (!verify_membership(m, psi, f, w)) throw Error("internal error: column space witness failed to verify");
  return w;
}

MembershipResult column_space_membership(const PolyMatrix& m, const PolyMatrix& psi, const Poly& f) {
  MembershipResult out;
  out.degree_bound = 1 + m.max_degree();
  out.witness = column_space_membership(m, psi, f, out.degree_bound);
  if (!out.witness) {
    out.degree_bound *= 2;
    out.witness = column_space_membership(m, psi, f, out.degree_bound);
  }
  return out;
}

PolyMatrix evaluate_arrow_expression(const std::string& expr, const std::map<std::string, PolyMatrix>& arrows,
                                     std::size_t square_size, std::size_t nvars) {
  std::vector<std::string> names;
  for (const auto& [name, _] : arrows) names.push_back(name);
  if (names.empty()) throw Error("no arrows given");
  const auto alphabet = freealg::make_alphabet(names);
  const auto p = freealg::parse_ncpoly(expr, alphabet);

  std::optional<PolyMatrix> total;
  for (const auto& t : p.terms()) {
    PolyMatrix value;
    if (t.word.degree() == 0) {
      value = PolyMatrix::identity(square_size, nvars);
    } else {
      value = arrows.at(alphabet->name(t.word[0]));
      for (std::size_t k = 1; k < t.word.degree(); ++k) value = value * arrows.at(alphabet->name(t.word[k]));
    }
    value = t.coeff * value;
    if (!total) {
      total = std::move(value);
    } else {
      if (total->rows() != value.rows() || total->cols() != value.cols())
        throw Error("terms of '" + expr + "' have different shapes");
      *total += value;
    }
  }
  if (!total) return PolyMatrix(square_size, square_size, nvars);
  return *total;
}

RelationCheck check_quiver_relation(const std::string& expr, const std::map<std::string, PolyMatrix>& arrows,
                                    const PolyMatrix& psi, const Poly& f) {
  RelationCheck out;
  out.value = evaluate_arrow_expression(expr, arrows, psi.rows(), f.nvars());
  out.exactly_zero = out.value.is_zero();
  if (out.exactly_zero) {
    out.membership.witness = column_space_membership(out.value, psi, f, 0);
  } else {
    out.membership = column_space_membership(out.value, psi, f);
  }
  return out;
}

}  // namespace flopalg::matfac
