#include "flopalg/commalg/groebner.hpp"

#include "flopalg/error.hpp"

#include <algorithm>

namespace flopalg::commalg {

namespace {

void check_ring(const std::vector<Poly>& gens, std::size_t& nvars, Order order) {
  for (const auto& g : gens) {
    if (g.nvars() != gens.front().nvars()) throw Error("generators over different variable counts");
  }
  if (!gens.empty()) nvars = gens.front().nvars();
  (void)order;
}

std::vector<Poly> normalize_generators(std::vector<Poly> gens, Order order) {
  std::vector<Poly> out;
  for (auto& g : gens) {
    Poly h = g.with_order(order);
    if (!h.is_zero()) out.push_back(h.monic());
  }
  return out;
}

/// Full reduction (leading and tail) for global orders.
Poly reduce_full(Poly h, const std::vector<const Poly*>& reducers) {
  std::vector<Term> rest;
  while (!h.is_zero()) {
    const Term& lt = h.leading();
    const Poly* hit = nullptr;
    for (const Poly* g : reducers) {
      if (g->leading_monomial().divides(lt.mono)) {
        hit = g;
        break;
      }
    }
    if (hit) {
      h -= hit->mul_term(lt.mono / hit->leading_monomial(), lt.coeff / hit->leading().coeff);
    } else {
      rest.push_back(lt);
      h = h.tail();
    }
  }
  return Poly(h.nvars(), h.order(), std::move(rest));
}

Poly s_poly(const Poly& f, const Poly& g) {
  Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  return f.mul_term(l / f.leading_monomial(), 1 / f.leading().coeff) -
         g.mul_term(l / g.leading_monomial(), 1 / g.leading().coeff);
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

std::vector<Poly> minimalize(std::vector<Poly> polys, Order order) {
  std::sort(polys.begin(), polys.end(), [&](const Poly& a, const Poly& b) {
    return compare(a.leading_monomial(), b.leading_monomial(), order) < 0;
  });
  std::vector<Poly> out;
  for (auto& p : polys) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Poly& q) {
      return q.leading_monomial().divides(p.leading_monomial());
    });
    if (!redundant) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

bool StandardBasis::is_unit() const {
  return std::any_of(elements.begin(), elements.end(),
                     [](const Poly& p) { return !p.is_zero() && p.leading_monomial().is_one(); });
}

StandardBasis buchberger(std::vector<Poly> generators, Order order, const BuchbergerOptions& options) {
  if (!is_global(order)) return mora_std(std::move(generators));
  StandardBasis result;
  result.order = order;
  check_ring(generators, result.nvars, order);
  std::vector<Poly> polys = normalize_generators(std::move(generators), order);

  std::vector<Poly> basis;  // all polys ever added
  std::vector<bool> active;
  std::vector<Pair> pairs;

  auto add = [&](Poly h) {
    const std::size_t k = basis.size();
    const Monomial& lh = h.leading_monomial();
    basis.push_back(std::move(h));
    active.push_back(true);
    // Gebauer-Moeller update.
    std::vector<Pair> fresh;
    for (std::size_t g = 0; g < k; ++g)
      if (active[g]) fresh.push_back({g, k, basis[g].leading_monomial().lcm(lh)});
    // Criteria M and F: drop a pair whose lcm is divisible by another new pair's lcm.
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const auto& p = fresh[a];
      bool keep = basis[p.i].leading_monomial().coprime(lh);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < fresh.size() && keep; ++b)
          if (fresh[b].lcm.divides(p.lcm)) keep = false;
        for (std::size_t b = 0; b < kept.size() && keep; ++b)
          if (kept[b].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }
    std::vector<Pair> next;
    for (auto& p : pairs) {
      bool drop = lh.divides(p.lcm) && basis[p.i].leading_monomial().lcm(lh) != p.lcm &&
                  basis[p.j].leading_monomial().lcm(lh) != p.lcm;
      if (!drop) next.push_back(std::move(p));
    }
    for (auto& p : kept)
      if (!basis[p.i].leading_monomial().coprime(lh)) next.push_back(std::move(p));
    pairs = std::move(next);
    for (std::size_t g = 0; g < k; ++g)
      if (active[g] && lh.divides(basis[g].leading_monomial())) active[g] = false;
  };

  auto reducers = [&]() {
    std::vector<const Poly*> out;
    for (std::size_t g = 0; g < basis.size(); ++g)
      if (active[g]) out.push_back(&basis[g]);
    return out;
  };

  // Smallest generators first gives a better starting basis.
  std::sort(polys.begin(), polys.end(), [&](const Poly& a, const Poly& b) {
    return compare(a.leading_monomial(), b.leading_monomial(), order) < 0;
  });
  for (auto& p : polys) {
    Poly h = reduce_full(p, reducers());
    if (!h.is_zero()) add(h.monic());
  }

  std::size_t processed = 0;
  while (!pairs.empty()) {
    if (options.max_pairs && processed >= options.max_pairs) {
      result.finished = false;
      break;
    }
    // Normal selection strategy: smallest lcm first, ties by insertion.
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      auto c = compare(a.lcm, b.lcm, order);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    Pair p = *best;
    pairs.erase(best);
    ++processed;
    Poly h = reduce_full(s_poly(basis[p.i], basis[p.j]), reducers());
    if (h.is_zero()) continue;
    add(h.monic());
    if (basis.back().leading_monomial().is_one()) {
      pairs.clear();
      break;
    }
  }

  std::vector<Poly> minimal;
  for (std::size_t g = 0; g < basis.size(); ++g)
    if (active[g]) minimal.push_back(basis[g]);
  minimal = minimalize(std::move(minimal), order);
  if (result.finished) {
    // Tail-reduce into the unique reduced basis.
    for (std::size_t a = 0; a < minimal.size(); ++a) {
      std::vector<const Poly*> others;
      for (std::size_t b = 0; b < minimal.size(); ++b)
        if (b != a) others.push_back(&minimal[b]);
      Poly lead = Poly::monomial(minimal[a].leading_monomial(), minimal[a].leading().coeff, order);
      minimal[a] = (lead + reduce_full(minimal[a].tail(), others)).monic();
    }
    result.reduced = true;
  }
  result.elements = std::move(minimal);
  return result;
}

Poly mora_normal_form(const Poly& h0, const std::vector<Poly>& reducers) {
  Poly h = h0;
  std::vector<Poly> t = reducers;
  while (!h.is_zero()) {
    const Monomial& lm = h.leading_monomial();
    const Poly* best = nullptr;
    for (const auto& g : t) {
      if (!g.leading_monomial().divides(lm)) continue;
      if (!best || g.ecart() < best->ecart() ||
          (g.ecart() == best->ecart() &&
           compare(g.leading_monomial(), best->leading_monomial(), h.order()) < 0)) {
        best = &g;
      }
    }
    if (!best) break;
    Poly g = *best;
    if (g.ecart() > h.ecart()) t.push_back(h);
    h -= g.mul_term(lm / g.leading_monomial(), h.leading().coeff / g.leading().coeff);
  }
  return h;
}

StandardBasis mora_std(std::vector<Poly> generators) {
  StandardBasis result;
  result.order = Order::Ds;
  check_ring(generators, result.nvars, Order::Ds);
  std::vector<Poly> s = normalize_generators(std::move(generators), Order::Ds);
  std::vector<Pair> pairs;
  for (std::size_t j = 0; j < s.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.push_back({i, j, s[i].leading_monomial().lcm(s[j].leading_monomial())});
  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    Pair p = *best;
    pairs.erase(best);
    Poly h = mora_normal_form(s_poly(s[p.i], s[p.j]), s);
    if (h.is_zero()) continue;
    h = h.monic();
    const std::size_t k = s.size();
    for (std::size_t i = 0; i < k; ++i) pairs.push_back({i, k, s[i].leading_monomial().lcm(h.leading_monomial())});
    s.push_back(std::move(h));
    if (s.back().leading_monomial().is_one()) break;
  }
  result.elements = minimalize(std::move(s), Order::Ds);
  result.reduced = true;
  return result;
}

StandardBasis standard_basis(std::vector<Poly> generators, Order order) {
  return is_global(order) ? buchberger(std::move(generators), order) : mora_std(std::move(generators));
}

Poly normal_form(const Poly& p, const StandardBasis& basis) {
  Poly h = p.with_order(basis.order);
  if (is_global(basis.order)) {
    std::vector<const Poly*> reducers;
    for (const auto& g : basis.elements) reducers.push_back(&g);
    return reduce_full(std::move(h), reducers);
  }
  return mora_normal_form(h, basis.elements);
}

Membership member(const Poly& p, const StandardBasis& basis) {
  Poly r = normal_form(p, basis);
  return {r.is_zero(), std::move(r)};
}

bool contains_one(const StandardBasis& basis) {
  if (basis.nvars == 0 && basis.elements.empty()) return false;
  return member(Poly::constant(basis.nvars, 1, basis.order), basis).member;
}

std::vector<Monomial> leading_ideal(const StandardBasis& basis) {
  std::vector<Monomial> leads;
  for (const auto& g : basis.elements) leads.push_back(g.leading_monomial());
  std::vector<Monomial> out;
  for (std::size_t a = 0; a < leads.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < leads.size() && !redundant; ++b)
      if (b != a && leads[b].divides(leads[a]) && (leads[b] != leads[a] || b < a)) redundant = true;
    if (!redundant) out.push_back(leads[a]);
  }
  return out;
}

std::optional<std::size_t> vdim(const StandardBasis& basis) {
  const auto leads = leading_ideal(basis);
  const std::size_t n = basis.nvars;
  for (const auto& m : leads)
    if (m.is_one()) return 0;
  std::vector<unsigned> bound(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (const auto& m : leads)
      if (m.degree() == m[v] && m[v] > 0) bound[v] = bound[v] ? std::min<unsigned>(bound[v], m[v]) : m[v];
    if (bound[v] == 0) return std::nullopt;
  }
  // Enumerate the box below the pure powers and count monomials outside the ideal.
  std::size_t count = 0;
  std::vector<std::uint16_t> e(n, 0);
  for (;;) {
    Monomial m(e);
    if (std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); })) ++count;
    std::size_t v = 0;
    while (v < n && ++e[v] == bound[v]) e[v++] = 0;
    if (v == n) break;
  }
  return count;
}

}  // namespace flopalg::commalg
