#include "flopalg/commalg/poly.hpp"

#include "flopalg/error.hpp"
#include "flopalg/freealg/parse.hpp"

#include <algorithm>
#include <map>

namespace flopalg::commalg {

Monomial::Monomial(std::vector<std::uint16_t> exps) : exps_(std::move(exps)) {
  for (auto e : exps_) degree_ += e;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t var, std::uint16_t exponent) {
  std::vector<std::uint16_t> e(nvars, 0);
  e.at(var) = exponent;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] && other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += rhs.exps_[i];
  out.degree_ += rhs.degree_;
  return out;
}

Monomial Monomial::operator/(const Monomial& rhs) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= rhs.exps_[i];
  out.degree_ -= rhs.degree_;
  return out;
}

Monomial Monomial::lcm(const Monomial& rhs) const {
  std::vector<std::uint16_t> e(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) e[i] = std::max(exps_[i], rhs.exps_[i]);
  return Monomial(std::move(e));
}

std::string_view order_name(Order order) { return order == Order::Dp ? "dp" : "ds"; }

Order parse_order(std::string_view name) {
  if (name == "dp") return Order::Dp;
  if (name == "ds") return Order::Ds;
  throw Error("unknown monomial order '" + std::string(name) + "' (expected dp or ds)");
}

bool is_global(Order order) { return order == Order::Dp; }

std::strong_ordering compare(const Monomial& a, const Monomial& b, Order order) {
  if (a.degree() != b.degree()) {
    return order == Order::Dp ? a.degree() <=> b.degree() : b.degree() <=> a.degree();
  }
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

namespace {

struct Descending {
  Order order;
  bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b, order) > 0; }
};

using TermMap = std::map<Monomial, Rational, Descending>;

std::vector<Term> flatten(TermMap&& map) {
  std::vector<Term> out;
  out.reserve(map.size());
  for (auto& [m, c] : map)
    if (c != 0) out.push_back({m, std::move(c)});
  return out;
}

}  // namespace

Poly::Poly(std::size_t nvars, Order order, std::vector<Term> terms) : nvars_(nvars), order_(order) {
  TermMap map(Descending{order});
  for (auto& t : terms) {
    if (t.mono.nvars() != nvars) throw Error("monomial has the wrong number of variables");
    map[t.mono] += t.coeff;
  }
  terms_ = flatten(std::move(map));
}

Poly Poly::constant(std::size_t nvars, const Rational& c, Order order) {
  return monomial(Monomial(nvars), c, order);
}

Poly Poly::variable(std::size_t nvars, std::size_t var, Order order) {
  return monomial(Monomial::variable(nvars, var), 1, order);
}

Poly Poly::monomial(const Monomial& m, const Rational& c, Order order) {
  Poly p(m.nvars(), order);
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

const Term& Poly::leading() const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  return terms_.front();
}

unsigned Poly::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Rational Poly::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return 0;
}

Poly Poly::with_order(Order order) const {
  if (order == order_) return *this;
  Poly out(nvars_, order);
  out.terms_ = terms_;
  std::sort(out.terms_.begin(), out.terms_.end(),
            [&](const Term& a, const Term& b) { return compare(a.mono, b.mono, order) > 0; });
  return out;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly out = *this;
  Rational inv = 1 / leading().coeff;
  for (auto& t : out.terms_) t.coeff *= inv;
  return out;
}

Poly Poly::tail() const {
  Poly out(nvars_, order_);
  if (!terms_.empty()) out.terms_.assign(terms_.begin() + 1, terms_.end());
  return out;
}

Poly Poly::mul_term(const Monomial& m, const Rational& c) const {
  Poly out(nvars_, order_);
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.mono * m, t.coeff * c});
  return out;
}

Poly Poly::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono[var] == 0) continue;
    std::vector<std::uint16_t> e(t.mono.exponents().begin(), t.mono.exponents().end());
    Rational c = t.coeff * e[var];
    --e[var];
    out.push_back({Monomial(std::move(e)), std::move(c)});
  }
  return Poly(nvars_, order_, std::move(out));
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw Error("evaluation point has the wrong dimension");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < t.mono[i]; ++k) v *= point[i];
    sum += v;
  }
  return sum;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

void Poly::check_compatible(const Poly& rhs) const {
  if (nvars_ != rhs.nvars_) throw Error("polynomials over different variable counts");
  if (order_ != rhs.order_) throw Error("polynomials under different monomial orders");
}

Poly& Poly::operator+=(const Poly& rhs) {
  check_compatible(rhs);
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end()) {
      out.push_back(std::move(*a++));
      continue;
    }
    if (a == terms_.end()) {
      out.push_back(*b++);
      continue;
    }
    auto c = compare(a->mono, b->mono, order_);
    if (c > 0) {
      out.push_back(std::move(*a++));
    } else if (c < 0) {
      out.push_back(*b++);
    } else {
      Rational s = a->coeff + b->coeff;
      if (s != 0) out.push_back({std::move(a->mono), std::move(s)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) { return *this += -rhs; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  lhs.check_compatible(rhs);
  TermMap map(Descending{lhs.order_});
  for (const auto& s : lhs.terms_)
    for (const auto& t : rhs.terms_) map[s.mono * t.mono] += s.coeff * t.coeff;
  Poly out(lhs.nvars_, lhs.order_);
  out.terms_ = flatten(std::move(map));
  return out;
}

bool Poly::operator==(const Poly& rhs) const {
  if (nvars_ != rhs.nvars_) return false;
  if (order_ != rhs.order_) return terms_ == rhs.with_order(order_).terms_;
  return terms_ == rhs.terms_;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (names.size() != nvars_) throw Error("variable name count does not match polynomial");
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    Rational mag = abs(t.coeff);
    bool negative = t.coeff < 0;
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (t.mono[v] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += names[v];
      if (t.mono[v] > 1) mono += "^" + std::to_string(t.mono[v]);
    }
    if (mono.empty()) {
      out += flopalg::to_string(mag);
    } else {
      if (mag != 1) out += flopalg::to_string(mag) + "*";
      out += mono;
    }
  }
  return out;
}

Poly power(const Poly& p, std::size_t exponent) {
  Poly result = Poly::constant(p.nvars(), 1, p.order());
  for (std::size_t i = 0; i < exponent; ++i) result = result * p;
  return result;
}

Poly substitute(const Poly& f, const std::vector<Poly>& assignment) {
  if (assignment.size() != f.nvars()) throw Error("substitution must assign every variable");
  if (assignment.empty()) return f;
  const std::size_t n = assignment.front().nvars();
  const Order order = assignment.front().order();
  for (const auto& a : assignment)
    if (a.nvars() != n || a.order() != order) throw Error("substitution images disagree on their ring");
  // Cache powers per variable.
  std::vector<std::vector<Poly>> powers(f.nvars());
  Poly result(n, order);
  for (const auto& t : f.terms()) {
    Poly term = Poly::constant(n, t.coeff, order);
    for (std::size_t v = 0; v < f.nvars(); ++v) {
      const unsigned e = t.mono[v];
      if (e == 0) continue;
      auto& cache = powers[v];
      if (cache.empty()) cache.push_back(Poly::constant(n, 1, order));
      while (cache.size() <= e) cache.push_back(cache.back() * assignment[v]);
      term = term * cache[e];
    }
    result += term;
  }
  return result;
}

Poly from_ncpoly(const freealg::NCPoly& p, Order order) {
  const std::size_t n = p.alphabet()->size();
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    std::vector<std::uint16_t> e(n, 0);
    for (auto l : t.word.letters()) ++e[l];
    terms.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Poly(n, order, std::move(terms));
}

Poly parse_poly(std::string_view text, const std::vector<std::string>& names, Order order, std::size_t line,
                std::size_t column_offset) {
  auto alphabet = freealg::make_alphabet(names);
  return from_ncpoly(freealg::parse_ncpoly(text, alphabet, line, column_offset), order);
}

}  // namespace flopalg::commalg
