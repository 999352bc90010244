#include "flopalg/isotest/isotest.hpp"

#include "flopalg/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace flopalg::isotest {

namespace {

std::string parameter_prefix(std::size_t generator) {
  static const char* const kPrefixes[] = {"l", "m", "n", "p", "q", "r", "s", "w"};
  if (generator < std::size(kPrefixes)) return kPrefixes[generator];
  return "g" + std::to_string(generator + 1) + "_";
}

std::vector<std::size_t> variables_of(const commalg::Monomial& m) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < m.nvars(); ++v)
    if (m[v]) out.push_back(v);
  return out;
}

std::vector<Poly> zero_assignment(std::size_t nvars, const std::vector<bool>& zero) {
  std::vector<Poly> out;
  for (std::size_t v = 0; v < nvars; ++v)
    out.push_back(zero[v] ? Poly(nvars) : Poly::variable(nvars, v));
  return out;
}

Poly determinant(std::vector<std::vector<Poly>> m, std::size_t nvars) {
  const std::size_t n = m.size();
  if (n == 0) return Poly::constant(nvars, 1);
  // Laplace expansion along the first row; matrices here are tiny.
  if (n == 1) return m[0][0];
  Poly det(nvars);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    Poly term = m[0][c] * determinant(std::move(minor), nvars);
    det += (c % 2 == 0) ? term : -term;
  }
  return det;
}

/// Invertible variables implied by t * det - 1 when det is a single term.
std::set<std::size_t> invertible_from(const Poly& det) {
  std::set<std::size_t> out;
  if (det.size() != 1) return out;
  for (auto v : variables_of(det.leading_monomial())) out.insert(v);
  return out;
}

Poly rabinowitsch(const Poly& det, std::size_t t_var) {
  const std::size_t n = det.nvars();
  return Poly::variable(n, t_var) * det - Poly::constant(n, 1);
}

std::string presentation_label(const ncgb::Presentation& p) { return p.name.empty() ? "?" : p.name; }

std::size_t loewy_length(const findim::Algebra& alg) { return findim::radical_filtration(alg).size(); }

struct Certified {
  ncgb::Presentation pres;
  findim::Algebra alg;
};

Certified certify(const ncgb::Presentation& pres) {
  auto result = ncgb::dimension(pres);
  if (!result.certificate.finite())
    throw Error("'" + presentation_label(pres) + "' is not certified finite-dimensional");
  auto alg = findim::Algebra::build(result.basis);
  if (!alg.local() || !pres.is_local()) throw Error("'" + presentation_label(pres) + "' is not local");
  return {pres, std::move(alg)};
}

std::optional<InvariantMismatch> compare_invariants(const Certified& a, const Certified& b) {
  auto str = [](const auto& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "]";
  };
  if (a.alg.dim() != b.alg.dim())
    return InvariantMismatch{"dimension", std::to_string(a.alg.dim()), std::to_string(b.alg.dim())};
  auto da = a.alg.degree_one_indices().size();
  auto db = b.alg.degree_one_indices().size();
  if (da != db) return InvariantMismatch{"dim J/J^2", std::to_string(da), std::to_string(db)};
  auto fa = findim::radical_filtration(a.alg);
  auto fb = findim::radical_filtration(b.alg);
  if (fa != fb) return InvariantMismatch{"radical filtration", str(fa), str(fb)};
  auto aa = ncgb::dimension(findim::abelianize(a.pres)).certificate.dimension;
  auto ab = ncgb::dimension(findim::abelianize(b.pres)).certificate.dimension;
  if (aa && ab && *aa != *ab)
    return InvariantMismatch{"abelianization dimension", std::to_string(*aa), std::to_string(*ab)};
  return std::nullopt;
}

}  // namespace

std::size_t GenericMap::parameter(std::size_t generator, std::size_t basis_index) const {
  if (basis_index == 0 || basis_index >= target.dim()) throw Error("parameter index outside the radical");
  return generator * (target.dim() - 1) + basis_index - 1;
}

GenericMap generic_map(const ncgb::Presentation& source, const findim::Algebra& target) {
  if (!target.local()) throw Error("generic map needs a local target algebra");
  if (!source.is_local()) throw Error("generic map needs source relations in the square of the augmentation ideal");
  GenericMap gm{source, target, {}, {}};
  const std::size_t gens = source.alphabet->size();
  const std::size_t rad = target.dim() - 1;
  for (std::size_t g = 0; g < gens; ++g)
    for (std::size_t i = 1; i <= rad; ++i) gm.variables.push_back(parameter_prefix(g) + std::to_string(i));
  gm.variables.push_back("t");
  const std::size_t nvars = gm.variables.size();
  for (std::size_t g = 0; g < gens; ++g) {
    findim::ParamElement e;
    e.coords.push_back(Poly(nvars));
    for (std::size_t i = 1; i <= rad; ++i) e.coords.push_back(Poly::variable(nvars, g * rad + i - 1));
    gm.images.push_back(std::move(e));
  }
  return gm;
}

std::vector<Poly> image_constraints(const GenericMap& gm, const freealg::NCPoly& identity) {
  if (!freealg::same_alphabet(identity.alphabet(), gm.source.alphabet))
    throw Error("identity is not over the source generators");
  auto image = findim::evaluate(gm.target, identity, gm.images);
  std::vector<Poly> out;
  for (auto& c : image.coords)
    if (!c.is_zero()) out.push_back(std::move(c));
  return out;
}

ConstraintIdeal constraint_ideal(const GenericMap& gm) {
  ConstraintIdeal ideal{gm.variables, {}};
  for (const auto& r : gm.source.relations)
    for (auto& c : image_constraints(gm, r)) ideal.generators.push_back(std::move(c));
  return ideal;
}

Poly linear_part_determinant(const GenericMap& gm) {
  const auto cols = gm.target.degree_one_indices();
  if (cols.size() != gm.images.size())
    throw Error("linear-part matrix is not square: " + std::to_string(gm.images.size()) + " generators, " +
                std::to_string(cols.size()) + " length-one basis words");
  std::vector<std::vector<Poly>> m;
  for (const auto& im : gm.images) {
    std::vector<Poly> row;
    for (auto c : cols) row.push_back(im.coords[c]);
    m.push_back(std::move(row));
  }
  return determinant(std::move(m), gm.variables.size());
}

StagedResult staged_pipeline(const GenericMap& gm) {
  const std::size_t nvars = gm.variables.size();
  StagedResult result;
  result.determinant = linear_part_determinant(gm);

  // Identities to impose, in order: nilpotency of generators, then relations.
  std::vector<std::pair<freealg::NCPoly, std::string>> identities;
  const auto source_alg = findim::Algebra::build(gm.source);
  const std::size_t loewy = loewy_length(gm.target);
  for (std::size_t g = 0; g < gm.source.alphabet->size(); ++g) {
    auto gen = freealg::NCPoly::generator(gm.source.alphabet, static_cast<freealg::Letter>(g));
    findim::Vector v = source_alg.coordinates(gen);
    findim::Vector p = v;
    for (std::size_t k = 2; k <= source_alg.dim() + 1; ++k) {
      p = source_alg.multiply(p, v);
      if (std::all_of(p.begin(), p.end(), [](const Rational& c) { return c == 0; })) {
        if (k < loewy) identities.emplace_back(freealg::power(gen, k), "derived");
        break;
      }
    }
  }
  for (const auto& r : gm.source.relations) identities.emplace_back(r, "relation");

  std::vector<bool> zero(nvars, false);
  std::vector<Poly> accumulated;
  auto substituted = [&](const Poly& p) { return commalg::substitute(p, zero_assignment(nvars, zero)); };

  for (const auto& [identity, origin] : identities) {
    Stage stage;
    stage.identity = identity.to_string();
    stage.origin = origin;
    stage.raw_constraints = image_constraints(gm, identity);
    for (const auto& c : stage.raw_constraints) {
      Poly s = substituted(c);
      if (!s.is_zero()) stage.constraints.push_back(std::move(s));
    }
    accumulated.insert(accumulated.end(), stage.constraints.begin(), stage.constraints.end());

    bool changed = true;
    while (changed && !result.contradiction) {
      changed = false;
      Poly det = substituted(result.determinant);
      if (det.is_zero()) {
        result.contradiction = true;
        result.contradiction_evidence = det;
        break;
      }
      const auto inv = invertible_from(det);
      for (const auto& c : accumulated) {
        Poly p = substituted(c);
        if (p.is_zero()) continue;
        if (p.size() != 1) continue;
        std::vector<std::size_t> free_vars;
        for (auto v : variables_of(p.leading_monomial()))
          if (!inv.contains(v)) free_vars.push_back(v);
        if (free_vars.empty()) {
          result.contradiction = true;
          result.contradiction_evidence = p;
          break;
        }
        if (free_vars.size() == 1) {
          zero[free_vars.front()] = true;
          stage.deductions.push_back({free_vars.front(), p});
          changed = true;
          break;
        }
      }
    }
    result.stages.push_back(std::move(stage));
    if (result.contradiction) break;
  }

  for (std::size_t v = 0; v < nvars; ++v)
    if (zero[v]) result.zero_variables.push_back(v);
  std::set<std::string> seen;
  for (const auto& c : accumulated) {
    Poly p = substituted(c);
    if (p.is_zero()) continue;
    if (seen.insert(p.monic().to_string(gm.variables)).second) result.residual_constraints.push_back(std::move(p));
  }
  return result;
}

namespace {

UnitCertificate build_certificate(const GenericMap& gm, const StagedResult& staged, std::string direction) {
  const std::size_t nvars = gm.variables.size();
  UnitCertificate cert;
  cert.direction = std::move(direction);
  cert.variables = gm.variables;
  cert.determinant = staged.determinant;
  for (const auto& s : staged.stages) {
    cert.original_constraints.insert(cert.original_constraints.end(), s.raw_constraints.begin(),
                                     s.raw_constraints.end());
    cert.deductions.insert(cert.deductions.end(), s.deductions.begin(), s.deductions.end());
  }
  std::vector<bool> zero(nvars, false);
  for (auto v : staged.zero_variables) zero[v] = true;
  cert.generators = staged.residual_constraints;
  for (auto v : staged.zero_variables) cert.generators.push_back(Poly::variable(nvars, v));
  Poly det = commalg::substitute(staged.determinant, zero_assignment(nvars, zero));
  cert.generators.push_back(rabinowitsch(det, nvars - 1));
  cert.basis = commalg::buchberger(cert.generators);
  return cert;
}

}  // namespace

bool UnitCertificate::verify() const {
  const std::size_t nvars = variables.size();
  if (nvars == 0) return false;
  std::vector<bool> zero(nvars, false);
  auto substituted = [&](const Poly& p) { return commalg::substitute(p, zero_assignment(nvars, zero)); };
  auto derived_from_constraints = [&](const Poly& p) {
    return std::any_of(original_constraints.begin(), original_constraints.end(),
                       [&](const Poly& c) { return substituted(c) == p; });
  };
  for (const auto& d : deductions) {
    if (d.variable >= nvars || zero[d.variable]) return false;
    Poly det = substituted(determinant);
    if (d.evidence.size() != 1 || !derived_from_constraints(d.evidence)) return false;
    const auto inv = invertible_from(det);
    std::vector<std::size_t> free_vars;
    for (auto v : variables_of(d.evidence.leading_monomial()))
      if (!inv.contains(v)) free_vars.push_back(v);
    if (free_vars != std::vector<std::size_t>{d.variable}) return false;
    zero[d.variable] = true;
  }
  const Poly rab = rabinowitsch(substituted(determinant), nvars - 1);
  for (const auto& g : generators) {
    bool accounted = g == rab || derived_from_constraints(g);
    if (!accounted && g.size() == 1 && g.leading().coeff == 1 && g.leading_monomial().degree() == 1) {
      auto vars = variables_of(g.leading_monomial());
      accounted = zero[vars.front()];
    }
    if (!accounted) return false;
  }
  if (!commalg::contains_one(commalg::buchberger(generators))) return false;
  return basis.nvars == nvars && commalg::contains_one(basis);
}

bool verify_witness(const ncgb::Presentation& source, const findim::Algebra& target,
                    const std::vector<findim::Vector>& images) {
  if (images.size() != source.alphabet->size()) return false;
  std::vector<findim::ParamElement> elems;
  for (const auto& v : images) {
    if (v.size() != target.dim()) return false;
    elems.push_back(findim::constant_element(v, 0));
  }
  for (const auto& r : source.relations)
    if (!findim::evaluate(target, r, elems).is_zero()) return false;
  const auto cols = target.degree_one_indices();
  if (cols.size() != images.size()) return false;
  std::vector<std::vector<Poly>> m;
  for (const auto& v : images) {
    std::vector<Poly> row;
    for (auto c : cols) row.push_back(Poly::constant(0, v[c]));
    m.push_back(std::move(row));
  }
  return !determinant(std::move(m), 0).is_zero();
}

std::string_view verdict_name(const IsoVerdict& v) {
  if (std::holds_alternative<NotIsomorphic>(v)) return "not_isomorphic";
  if (std::holds_alternative<Isomorphic>(v)) return "isomorphic";
  return "inconclusive";
}

AutomaticResult automatic_unit_test(const GenericMap& gm, const commalg::BuchbergerOptions& options) {
  AutomaticResult out;
  out.ideal = constraint_ideal(gm);
  out.ideal.generators.push_back(rabinowitsch(linear_part_determinant(gm), gm.rabinowitsch_variable()));
  out.basis = commalg::buchberger(out.ideal.generators, commalg::Order::Dp, options);
  out.finished = out.basis.finished;
  out.unit = out.finished && commalg::contains_one(out.basis);
  return out;
}

std::optional<Witness> search_witness(const GenericMap& gm, const std::vector<Poly>& constraints,
                                      const std::vector<std::size_t>& zero_parameters, std::size_t budget) {
  const std::size_t nvars = gm.variables.size();
  const Poly det = linear_part_determinant(gm);
  std::vector<std::size_t> positions;
  for (std::size_t v = 0; v < gm.parameter_count(); ++v)
    if (std::find(zero_parameters.begin(), zero_parameters.end(), v) == zero_parameters.end())
      positions.push_back(v);
  const std::vector<Rational> values = {Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(1, 2),
                                        Rational(-1, 2)};
  std::size_t tried = 0;
  std::vector<Rational> point(nvars, 0);

  auto try_point = [&]() -> std::optional<Witness> {
    ++tried;
    if (det.evaluate(point) == 0) return std::nullopt;
    for (const auto& c : constraints)
      if (c.evaluate(point) != 0) return std::nullopt;
    std::vector<findim::Vector> images;
    for (const auto& im : gm.images) images.push_back(findim::specialize(im, point));
    if (!verify_witness(gm.source, gm.target, images)) return std::nullopt;
    Witness w;
    w.images = images;
    for (std::size_t g = 0; g < images.size(); ++g)
      w.image_text.push_back(gm.source.alphabet->name(static_cast<freealg::Letter>(g)) + " -> " +
                             gm.target.element(images[g]).to_string());
    return w;
  };

  const std::size_t n = positions.size();
  for (std::size_t support = 1; support <= n && tried < budget; ++support) {
    std::vector<std::size_t> combo(support);
    std::iota(combo.begin(), combo.end(), 0);
    for (;;) {
      std::vector<std::size_t> choice(support, 0);
      for (;;) {
        for (std::size_t k = 0; k < support; ++k) point[positions[combo[k]]] = values[choice[k]];
        if (auto w = try_point()) return w;
        if (tried >= budget) return std::nullopt;
        std::size_t k = support;
        while (k > 0 && ++choice[k - 1] == values.size()) choice[--k] = 0;
        if (k == 0) break;
      }
      for (auto c : combo) point[positions[c]] = 0;
      // Next combination in lexicographic order.
      std::size_t i = support;
      while (i > 0 && combo[i - 1] == n - support + i - 1) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (std::size_t j = i; j < support; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  return std::nullopt;
}

IsoVerdict decide_iso(const ncgb::Presentation& a, const ncgb::Presentation& b, const IsoOptions& options) {
  const Certified ca = certify(a);
  const Certified cb = certify(b);
  if (auto mismatch = compare_invariants(ca, cb)) return NotIsomorphic{*mismatch};

  struct Direction {
    const Certified* src;
    const Certified* tgt;
  };
  const Direction directions[] = {{&ca, &cb}, {&cb, &ca}};
  auto label = [](const Direction& d) {
    return presentation_label(d.src->pres) + " -> " + presentation_label(d.tgt->pres);
  };

  std::optional<StagedResult> forward;
  for (const auto& d : directions) {
    GenericMap gm = generic_map(d.src->pres, d.tgt->alg);
    StagedResult staged = staged_pipeline(gm);
    if (staged.contradiction) {
      UnitCertificate cert = build_certificate(gm, staged, label(d));
      if (!cert.verify()) throw Error("internal error: staged certificate failed to verify");
      return NotIsomorphic{std::move(cert)};
    }
    if (!forward) forward = std::move(staged);
  }

  // No staged contradiction: test the full ideal of the forward direction.
  const Direction& d = directions[0];
  GenericMap gm = generic_map(d.src->pres, d.tgt->alg);
  StagedResult& staged = *forward;
  UnitCertificate cert = build_certificate(gm, staged, label(d));
  std::vector<Poly> full = staged.residual_constraints;
  for (const auto& c : constraint_ideal(gm).generators) full.push_back(c);
  cert.generators.insert(cert.generators.end(), full.begin(), full.end());
  cert.basis = commalg::buchberger(cert.generators, commalg::Order::Dp, options.buchberger);
  if (cert.basis.finished && commalg::contains_one(cert.basis)) {
    if (!cert.verify()) throw Error("internal error: unit-ideal certificate failed to verify");
    return NotIsomorphic{std::move(cert)};
  }

  std::vector<Poly> constraints = constraint_ideal(gm).generators;
  if (auto w = search_witness(gm, constraints, staged.zero_variables, options.witness_budget)) {
    w->direction = label(d);
    return Isomorphic{std::move(*w)};
  }
  return Inconclusive{cert.basis.finished ? "constraint ideal is proper and no witness with coordinates in "
                                            "{0, +-1, +-2, +-1/2} was found"
                                          : "Groebner pair budget exhausted and no witness was found"};
}

}  // namespace flopalg::isotest
