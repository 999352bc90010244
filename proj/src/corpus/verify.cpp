#include "flopalg/corpus/verify.hpp"

#include "flopalg/commalg/groebner.hpp"
#include "flopalg/commalg/singularity.hpp"
#include "flopalg/error.hpp"
#include "flopalg/findim/algebra.hpp"
#include "flopalg/freealg/parse.hpp"
#include "flopalg/gvinv/gvinv.hpp"
#include "flopalg/io/files.hpp"
#include "flopalg/isotest/isotest.hpp"
#include "flopalg/ncgb/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <random>
#include <set>
#include <sstream>

namespace flopalg::corpus {

namespace {

using commalg::Order;
using commalg::Poly;
namespace fs = std::filesystem;

class Checker {
 public:
  explicit Checker(CriterionResult& r) : r_(r) {}
  bool check(bool ok, const std::string& what) {
    r_.details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    if (!ok) failed_ = true;
    return ok;
  }
  bool failed() const { return failed_; }

 private:
  CriterionResult& r_;
  bool failed_ = false;
};

std::string join(const std::vector<std::string>& v, const std::string& sep = ", ") {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : sep) + s;
  return out;
}

template <class T>
std::string str(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string("none");
}

ncgb::DimensionResult certified(const ncgb::Presentation& p) { return ncgb::dimension(p); }

std::optional<std::size_t> nc_dim(const ncgb::Presentation& p) {
  auto r = certified(p);
  if (!r.certificate.finite()) return std::nullopt;
  return r.certificate.dimension;
}

std::set<std::string> monic_strings(const std::vector<Poly>& ps, const std::vector<std::string>& names) {
  std::set<std::string> out;
  for (const auto& p : ps)
    if (!p.is_zero()) out.insert(p.monic().to_string(names));
  return out;
}

void criterion1(const fs::path& dir, Checker& c) {
  auto lam = io::load_algebra(dir / "lambda_con.alg");
  auto r = certified(lam);
  c.check(r.basis.complete(), "Groebner basis of lambda_con is complete");
  c.check(r.certificate.finite() && r.certificate.dimension == 9u,
          "dim lambda_con = " + str(r.certificate.dimension) + " (expected 9)");
  std::vector<std::string> got;
  for (const auto& w : r.certificate.normal_words) got.push_back(freealg::to_string(w, *lam.alphabet));
  const std::set<std::string> expected = {"1", "y", "x", "y^2", "y*x", "x^2", "y^2*x", "y*x^2", "y^2*x^2"};
  c.check(std::set<std::string>(got.begin(), got.end()) == expected && got.size() == expected.size(),
          "normal words {" + join(got) + "}");
}

void criterion2(const fs::path& dir, Checker& c) {
  auto gam = io::load_algebra(dir / "gamma_con.alg");
  auto r = certified(gam);
  c.check(r.basis.complete(), "Groebner basis of gamma_con is complete");
  c.check(r.certificate.dimension == 9u, "dim gamma_con = " + str(r.certificate.dimension) + " (expected 9)");
}

void criterion3(const fs::path& dir, Checker& c) {
  auto gam = io::load_algebra(dir / "gamma_con.alg");
  auto alg = findim::Algebra::build(gam);
  auto pw = [&](const std::string& g, std::size_t k) {
    auto v = alg.coordinates(freealg::NCPoly::generator(gam.alphabet, *gam.alphabet->find(g)));
    findim::Vector out = v;
    for (std::size_t i = 1; i < k; ++i) out = alg.multiply(out, v);
    return out;
  };
  auto is_zero = [](const findim::Vector& v) { return std::all_of(v.begin(), v.end(), [](auto& x) { return x == 0; }); };
  c.check(is_zero(pw("a", 3)), "a^3 = 0 in gamma_con");
  c.check(!is_zero(pw("a", 2)), "a^2 != 0 in gamma_con");
  c.check(is_zero(pw("b", 6)), "b^6 = 0 in gamma_con");
  c.check(!is_zero(pw("b", 5)), "b^5 != 0 in gamma_con");
}

void criterion4(const fs::path& dir, Checker& c) {
  auto lam = io::load_algebra(dir / "lambda_con.alg");
  auto gam = io::load_algebra(dir / "gamma_con.alg");
  c.check(nc_dim(findim::abelianize(lam)) == 5u, "dim abelianize(lambda_con) = " + str(nc_dim(findim::abelianize(lam))));
  c.check(nc_dim(findim::abelianize(gam)) == 5u, "dim abelianize(gamma_con) = " + str(nc_dim(findim::abelianize(gam))));
  auto lab = io::load_algebra(dir / "lambda_con_ab.alg");
  auto gab = io::load_algebra(dir / "gamma_con_ab.alg");
  c.check(nc_dim(lab) == 5u, "dim lambda_con_ab file = " + str(nc_dim(lab)));
  c.check(nc_dim(gab) == 5u, "dim gamma_con_ab file = " + str(nc_dim(gab)));
  // Independent commutative kernel on the commuted relations.
  for (const auto* p : {&lam, &gam}) {
    std::vector<Poly> gens;
    for (const auto& r : p->relations) gens.push_back(commalg::from_ncpoly(r));
    auto vd = commalg::vdim(commalg::buchberger(gens));
    std::vector<std::string> names;
    for (std::size_t k = 0; k < p->alphabet->size(); ++k) names.push_back(p->alphabet->name(static_cast<freealg::Letter>(k)));
    std::vector<std::string> shown;
    for (const auto& g : gens) shown.push_back(g.to_string(names));
    c.check(vd == 5u, "vdim (" + join(shown) + ") = " + str(vd));
  }
}

void criterion5(const fs::path& dir, Checker& c) {
  for (const char* file : {"lambda_con.alg", "gamma_con.alg"}) {
    auto rep = gvinv::gv_from_presentation(io::load_algebra(dir / file), 2);
    bool ok = rep.tuples.size() == 1 && rep.tuples[0].n == std::vector<std::size_t>{5, 1};
    std::string shown;
    for (const auto& t : rep.tuples) {
      std::vector<std::string> parts;
      for (auto n : t.n) parts.push_back(std::to_string(n));
      shown += "(" + join(parts) + ")";
    }
    c.check(ok, std::string(file) + ": dim " + std::to_string(rep.dim) + ", dim_ab " + std::to_string(rep.dim_ab) +
                    ", GV " + shown);
  }
  c.check(gvinv::toda_tuples(9, 5, 2).size() == 1, "toda_tuples(9, 5, 2) has exactly one solution");
}

void criterion6(const fs::path& dir, Checker& c) {
  auto lam = io::load_algebra(dir / "lambda_con.alg");
  auto gam = io::load_algebra(dir / "gamma_con.alg");
  for (auto [a, b] : {std::pair{&lam, &gam}, std::pair{&gam, &lam}}) {
    auto v = isotest::decide_iso(*a, *b, {});
    const auto* n = std::get_if<isotest::NotIsomorphic>(&v);
    const auto* cert = n ? std::get_if<isotest::UnitCertificate>(&n->certificate) : nullptr;
    c.check(cert != nullptr, "decide_iso(" + a->name + ", " + b->name + ") = " + std::string(isotest::verdict_name(v)) +
                                 (cert ? " via unit-ideal certificate" : ""));
    if (cert) c.check(cert->verify(), "certificate " + cert->direction + " re-verifies");
  }

  auto target = findim::Algebra::build(lam);
  auto gm = isotest::generic_map(gam, target);
  auto staged = isotest::staged_pipeline(gm);
  const auto& names = gm.variables;
  auto expect = [&](std::initializer_list<const char*> polys) {
    std::vector<Poly> ps;
    for (const char* p : polys) ps.push_back(commalg::parse_poly(p, names));
    return monic_strings(ps, names);
  };
  const std::vector<std::set<std::string>> expected = {
      expect({"l2^3", "l1^2*l2 + 3*l2^2*l5", "l1*l2^2", "l1^2*l5 + l2^2*l3 + l2*l5^2"}),
      expect({"l1*m1", "l3*m2", "l1*m5", "l1*m7 + l3*m5 - l4*m4 + l6*m2 + l7*m1"}),
      expect({"-l1^2 + m2^3", "-l1^2*m2", "-2*l1*l7 + l4^2 + 3*m2^2*m3"}),
  };
  c.check(staged.stages.size() >= expected.size(), "staged pipeline ran " + std::to_string(staged.stages.size()) + " stages");
  for (std::size_t k = 0; k < expected.size() && k < staged.stages.size(); ++k) {
    auto got = monic_strings(staged.stages[k].constraints, names);
    std::vector<std::string> shown(got.begin(), got.end());
    c.check(got == expected[k], "stage " + std::to_string(k + 1) + " (" + staged.stages[k].identity + "): {" +
                                    join(shown) + "}");
  }
  c.check(staged.contradiction, "staged pipeline ends in a contradiction");
  auto automatic = isotest::automatic_unit_test(gm, {});
  c.check(automatic.finished && automatic.unit, "automatic route (full ideal + t*det - 1) gives the unit ideal");
}

void criterion7(const fs::path& dir, Checker& c) {
  auto lab = io::load_algebra(dir / "lambda_con_ab.alg");
  auto gab = io::load_algebra(dir / "gamma_con_ab.alg");
  auto v = isotest::decide_iso(lab, gab, {});
  const auto* iso = std::get_if<isotest::Isomorphic>(&v);
  c.check(iso != nullptr, "decide_iso(lambda_con_ab, gamma_con_ab) = " + std::string(isotest::verdict_name(v)) +
                              (iso ? " with witness " + join(iso->witness.image_text) : ""));
  if (iso) c.check(isotest::verify_witness(lab, findim::Algebra::build(gab), iso->witness.images), "witness re-verifies");

  auto target = findim::Algebra::build(gab);
  auto gen = [&](const char* g) {
    return target.coordinates(freealg::NCPoly::generator(gab.alphabet, *gab.alphabet->find(g)));
  };
  findim::Vector minus_b = gen("b");
  for (auto& x : minus_b) x = -x;
  c.check(isotest::verify_witness(lab, target, {gen("a"), minus_b}), "candidate x -> a, y -> -b verifies");

  // Abelianizations computed from the noncommutative presentations.
  auto la = findim::abelianize(io::load_algebra(dir / "lambda_con.alg"));
  auto ga = findim::abelianize(io::load_algebra(dir / "gamma_con.alg"));
  auto v2 = isotest::decide_iso(la, ga, {});
  const auto* iso2 = std::get_if<isotest::Isomorphic>(&v2);
  c.check(iso2 != nullptr, "decide_iso(" + la.name + ", " + ga.name + ") = " + std::string(isotest::verdict_name(v2)) +
                               (iso2 ? " with witness " + join(iso2->witness.image_text) : ""));
}

void criterion8(const fs::path& dir, Checker& c) {
  auto fr = io::load_poly_file(dir / "f_R.poly").poly;
  auto fl = io::load_poly_file(dir / "f_L.poly").poly;
  struct Expect {
    const char* name;
    const Poly* f;
    Order order;
    std::size_t mu, tau;
  };
  for (const auto& e : {Expect{"f_R", &fr, Order::Dp, 12, 10}, Expect{"f_R", &fr, Order::Ds, 11, 10},
                        Expect{"f_L", &fl, Order::Dp, 11, 11}, Expect{"f_L", &fl, Order::Ds, 11, 11}}) {
    auto mu = commalg::milnor(*e.f, e.order);
    auto tau = commalg::tjurina(*e.f, e.order);
    c.check(mu == e.mu && tau == e.tau, std::string(e.name) + " " + std::string(commalg::order_name(e.order)) +
                                            ": mu " + str(mu) + ", tau " + str(tau) + " (expected " +
                                            std::to_string(e.mu) + ", " + std::to_string(e.tau) + ")");
  }
}

void criterion9(const fs::path& dir, Checker& c) {
  auto m = io::load_matrix_file(dir / "prop42_matrices.json");
  auto fac = matfac::check_matrix_factorization({m.phi, m.psi, m.f});
  c.check(fac.ok, "phi * psi = psi * phi = f * I");
  auto ab = matfac::check_quiver_relation("a*b + b*a", m.arrows, m.psi, m.f);
  c.check(ab.exactly_zero, "a*b + b*a = 0 exactly");
  auto rel = matfac::check_quiver_relation("-a^2 + b^3 + a*b*a - b*d*c - d*c*b", m.arrows, m.psi, m.f);
  if (m.relation_display) c.check(rel.value == *m.relation_display, "-a^2 + b^3 + aba - bdc - dcb equals the displayed matrix");
  c.check(rel.membership.witness.has_value() &&
              matfac::verify_membership(rel.value, m.psi, m.f, *rel.membership.witness),
          "relation matrix lies in the column space of psi (degree bound " +
              std::to_string(rel.membership.degree_bound) + ", witness re-verified)");
}

void criterion10(const fs::path& dir, Checker& c) {
  for (const char* file : {"chart_u1.chart", "chart_u2.chart"}) {
    auto ch = io::load_chart_file(dir / file);
    auto smooth = commalg::hypersurface_smoothness(ch.relation);
    c.check(smooth.verdict == commalg::Smoothness::Smooth,
            ch.name + ": 1 in (relation, partials): " + std::string(commalg::smoothness_name(smooth.verdict)));
    auto pulled = commalg::substitute(ch.base_poly, ch.map);
    auto mem = commalg::member(pulled, commalg::buchberger({ch.relation}));
    c.check(mem.member, ch.name + ": pulled-back base polynomial reduces to 0 modulo the chart relation");
    if (!ch.fibre_zero.empty() && ch.fibre_expect) {
      std::vector<Poly> assign;
      for (std::size_t k = 0; k < ch.vars.size(); ++k) {
        bool zero = std::find(ch.fibre_zero.begin(), ch.fibre_zero.end(), k) != ch.fibre_zero.end();
        assign.push_back(zero ? Poly(ch.vars.size()) : Poly::variable(ch.vars.size(), k));
      }
      auto fibre = commalg::substitute(ch.relation, assign);
      c.check(fibre == *ch.fibre_expect,
              ch.name + ": relation over the origin is " + fibre.to_string(ch.vars) + " (expected " +
                  ch.fibre_expect->to_string(ch.vars) + ")");
    }
  }
}

bool associative(const findim::Algebra& alg) {
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto ij = alg.multiply(alg.basis_vector(i), alg.basis_vector(j));
      for (std::size_t k = 0; k < n; ++k)
        if (alg.multiply(ij, alg.basis_vector(k)) != alg.multiply(alg.basis_vector(i), alg.multiply(alg.basis_vector(j), alg.basis_vector(k))))
          return false;
    }
  return true;
}

bool specialization_commutes(const findim::Algebra& alg, std::size_t trials, std::mt19937& rng) {
  const std::size_t n = alg.dim();
  findim::ParamElement u, v;
  for (std::size_t i = 0; i < n; ++i) {
    u.coords.push_back(Poly::variable(2 * n, i));
    v.coords.push_back(Poly::variable(2 * n, n + i));
  }
  const auto uv = findim::multiply(alg, u, v);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<Rational> point;
    for (std::size_t k = 0; k < 2 * n; ++k) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      point.push_back(q);
    }
    auto su = findim::specialize(u, point);
    auto sv = findim::specialize(v, point);
    if (findim::specialize(uv, point) != alg.multiply(su, sv)) return false;
  }
  return true;
}

void criterion11(const fs::path& dir, Checker& c) {
  std::vector<ncgb::Presentation> algebras;
  for (const char* f : {"lambda_con.alg", "gamma_con.alg", "lambda_con_ab.alg", "gamma_con_ab.alg"})
    algebras.push_back(io::load_algebra(dir / f));
  algebras.push_back(findim::abelianize(algebras[0]));
  algebras.push_back(findim::abelianize(algebras[1]));
  auto lam = algebras[0];
  const auto yx = freealg::make_alphabet({"x", "y"}, {"y", "x"});
  std::vector<freealg::NCPoly> rels;
  for (const auto& r : lam.relations) rels.push_back(freealg::parse_ncpoly(r.to_string(), yx));
  auto swapped = ncgb::make_presentation(lam.name + " (y > x)", yx, std::move(rels));
  algebras.push_back(swapped);

  std::mt19937 rng(20240917);
  for (const auto& p : algebras) {
    auto r = certified(p);
    if (!c.check(r.basis.complete(), p.name + ": basis complete")) continue;
    c.check(ncgb::unresolved_ambiguities(r.basis).empty(), p.name + ": every ambiguity resolves");
    auto alg = findim::Algebra::build(r.basis);
    if (alg.dim() <= 16) c.check(associative(alg), p.name + ": structure constants associative (exhaustive)");
    c.check(specialization_commutes(alg, 100, rng), p.name + ": specialization commutes with multiplication (100 points)");
  }
  c.check(nc_dim(swapped) == 9u, "dim lambda_con under y > x = " + str(nc_dim(swapped)));

  for (const char* f : {"f_R.poly", "f_L.poly"}) {
    auto pf = io::load_poly_file(dir / f);
    auto dp = commalg::milnor(pf.poly, Order::Dp);
    auto ds = commalg::milnor(pf.poly, Order::Ds);
    c.check(dp && ds && *dp >= *ds, pf.name + ": mu(dp) = " + str(dp) + " >= mu(ds) = " + str(ds));
  }
}

const char* const titles[] = {
    "",
    "dim lambda_con = 9 with certified normal-word basis",
    "dim gamma_con = 9",
    "a^3 = 0 and b^6 = 0 in gamma_con",
    "abelianizations are 5-dimensional",
    "GV tuples (5, 1) for both algebras",
    "lambda_con and gamma_con are not isomorphic",
    "abelianizations are isomorphic",
    "Milnor and Tjurina numbers",
    "matrix factorization and quiver relations",
    "chart smoothness and base maps",
    "property suites",
};

}  // namespace

CriterionResult verify_criterion(const fs::path& dir, int id) {
  if (id < 1 || id > criterion_count) throw Error("no criterion " + std::to_string(id));
  CriterionResult r;
  r.id = id;
  r.title = titles[id];
  Checker c(r);
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: criterion1(dir, c); break;
      case 2: criterion2(dir, c); break;
      case 3: criterion3(dir, c); break;
      case 4: criterion4(dir, c); break;
      case 5: criterion5(dir, c); break;
      case 6: criterion6(dir, c); break;
      case 7: criterion7(dir, c); break;
      case 8: criterion8(dir, c); break;
      case 9: criterion9(dir, c); break;
      case 10: criterion10(dir, c); break;
      case 11: criterion11(dir, c); break;
    }
  } catch (const std::exception& e) {
    c.check(false, std::string("error: ") + e.what());
  }
  r.passed = !c.failed() && !r.details.empty();
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> verify_corpus(const fs::path& dir) {
  std::vector<std::future<CriterionResult>> jobs;
  for (int id = 1; id <= criterion_count; ++id)
    jobs.push_back(std::async(std::launch::async, [dir, id] { return verify_criterion(dir, id); }));
  std::vector<CriterionResult> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace flopalg::corpus
