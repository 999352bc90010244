#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flopalg/error.hpp"
#include "flopalg/findim/algebra.hpp"
#include "flopalg/ncgb/groebner.hpp"
#include "support.hpp"

using namespace flopalg;
using namespace flopalg::findim;
using commalg::Poly;
using testsupport::nc;

namespace {

// Oracle: dense rank by fraction-exact Gaussian elimination.
std::size_t dense_rank(std::vector<Vector> rows) {
  std::size_t rank = 0;
  const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = 0; k < ncols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Oracle: dim J^k from spanning sets of products of k radical basis vectors.
std::vector<std::size_t> brute_filtration(const Algebra& alg) {
  std::vector<Vector> layer;
  for (std::size_t i = 1; i < alg.dim(); ++i) layer.push_back(alg.basis_vector(i));
  std::vector<std::size_t> out;
  for (;;) {
    std::size_t r = dense_rank(layer);
    out.push_back(r);
    if (r == 0) break;
    std::vector<Vector> next;
    for (const auto& v : layer)
      for (std::size_t i = 1; i < alg.dim(); ++i) next.push_back(alg.multiply(v, alg.basis_vector(i)));
    layer = std::move(next);
  }
  return out;
}

ParamElement generic(const Algebra& alg, std::size_t nparams, std::size_t first) {
  ParamElement e;
  e.coords.push_back(Poly(nparams));
  for (std::size_t i = 1; i < alg.dim(); ++i) e.coords.push_back(Poly::variable(nparams, first + i - 1));
  return e;
}

std::vector<std::string> lm_names() {
  std::vector<std::string> n;
  for (int i = 1; i <= 8; ++i) n.push_back("l" + std::to_string(i));
  for (int i = 1; i <= 8; ++i) n.push_back("m" + std::to_string(i));
  return n;
}

}  // namespace

TEST_CASE("structure constants match the normal-form oracle") {
  for (const auto& pres : {testsupport::lambda_con(), testsupport::gamma_con()}) {
    auto alg = Algebra::build(pres);
    REQUIRE(alg.dim() == 9);
    CHECK(alg.basis()[0].empty());
    for (std::size_t i = 0; i < alg.dim(); ++i)
      for (std::size_t j = 0; j < alg.dim(); ++j) {
        auto p = freealg::NCPoly::monomial(pres.alphabet, alg.basis()[i] * alg.basis()[j]);
        CHECK(alg.multiply(alg.basis_vector(i), alg.basis_vector(j)) ==
              alg.coordinates(ncgb::normal_form(p, alg.groebner_basis())));
      }
  }
  auto lam = Algebra::build(testsupport::lambda_con());
  const auto& a = lam.alphabet();
  CHECK(lam.multiply(lam.coordinates(nc("x", a)), lam.coordinates(nc("y", a))) == lam.coordinates(nc("-y*x", a)));
  auto gam = Algebra::build(testsupport::gamma_con());
  const auto& b = gam.alphabet();
  auto bv = gam.coordinates(nc("b", b));
  CHECK(gam.multiply(gam.multiply(bv, bv), bv) == gam.coordinates(nc("a^2 + a^2*b", b)));
}

TEST_CASE("x^2 = 0 gives a 2x2 table") {
  auto pres = testsupport::presentation("dual", freealg::make_alphabet({"x"}), {"x^2"});
  auto alg = Algebra::build(pres);
  CHECK(alg.dim() == 2);
  CHECK(alg.multiply(alg.basis_vector(1), alg.basis_vector(1)) == Vector{0, 0});
  CHECK(radical_filtration(alg) == std::vector<std::size_t>{1, 0});
}

TEST_CASE("identity and associativity") {
  for (const auto& pres : {testsupport::lambda_con(), testsupport::gamma_con()}) {
    auto alg = Algebra::build(pres);
    const auto n = alg.dim();
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(alg.multiply(alg.unit(), alg.basis_vector(i)) == alg.basis_vector(i));
      CHECK(alg.multiply(alg.basis_vector(i), alg.unit()) == alg.basis_vector(i));
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          auto e = [&](std::size_t t) { return alg.basis_vector(t); };
          CHECK(alg.multiply(alg.multiply(e(i), e(j)), e(k)) == alg.multiply(e(i), alg.multiply(e(j), e(k))));
        }
    }
  }
}

TEST_CASE("nilpotency in gamma_con") {
  auto alg = Algebra::build(testsupport::gamma_con());
  const auto& b = alg.alphabet();
  auto a = constant_element(alg.coordinates(nc("a", b)), 0);
  auto bb = constant_element(alg.coordinates(nc("b", b)), 0);
  CHECK(power(alg, a, 3).is_zero());
  CHECK_FALSE(power(alg, a, 2).is_zero());
  CHECK(power(alg, bb, 6).is_zero());
  CHECK_FALSE(power(alg, bb, 5).is_zero());
}

TEST_CASE("generic cube in lambda_con matches the displayed coefficients") {
  auto alg = Algebra::build(testsupport::lambda_con());
  auto names = lm_names();
  auto a = generic(alg, 16, 0);
  auto cube = power(alg, a, 3);
  std::map<std::string, std::string> got;
  for (std::size_t i = 0; i < alg.dim(); ++i)
    if (!cube.coords[i].is_zero()) got[alg.basis_name(i)] = cube.coords[i].to_string(names);
  auto p = [&](const char* s) { return commalg::parse_poly(s, names).to_string(names); };
  CHECK(got == std::map<std::string, std::string>{{"y^2", p("l2^3")},
                                                  {"y^2*x", p("l1^2*l2 + 3*l2^2*l5")},
                                                  {"y*x^2", p("l1*l2^2")},
                                                  {"y^2*x^2", p("3*l1^2*l5 + 3*l2^2*l3 + 3*l2*l5^2")}});
}

TEST_CASE("anticommutator with l2 = l5 = 0 has y^2 coefficient 2 l1 m1") {
  auto alg = Algebra::build(testsupport::lambda_con());
  auto names = lm_names();
  auto a = generic(alg, 16, 0);
  a.coords[2] = Poly(16);  // l2 on x
  a.coords[5] = Poly(16);  // l5 on x^2
  REQUIRE(alg.basis_name(2) == "x");
  REQUIRE(alg.basis_name(5) == "x^2");
  auto b = generic(alg, 16, 8);
  auto s = add(multiply(alg, a, b), multiply(alg, b, a));
  CHECK(s.coords[*alg.index_of(alg.basis()[3])] == commalg::parse_poly("2*l1*m1", names));
  CHECK(alg.basis_name(3) == "y^2");
  // Identity times anything.
  auto one = constant_element(alg.unit(), 16);
  CHECK(multiply(alg, one, b).coords == b.coords);
}

TEST_CASE("specialization commutes with multiplication") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  for (const auto& pres : {testsupport::lambda_con(), testsupport::gamma_con()}) {
    auto alg = Algebra::build(pres);
    auto u = generic(alg, 16, 0), v = generic(alg, 16, 8);
    auto uv = multiply(alg, u, v);
    for (int t = 0; t < 100; ++t) {
      std::vector<Rational> pt;
      for (int k = 0; k < 16; ++k) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        pt.push_back(q);
      }
      CHECK(specialize(uv, pt) == alg.multiply(specialize(u, pt), specialize(v, pt)));
    }
  }
}

TEST_CASE("radical filtration agrees with the brute-force span oracle") {
  auto lam = Algebra::build(testsupport::lambda_con());
  auto gam = Algebra::build(testsupport::gamma_con());
  CHECK(radical_filtration(lam) == brute_filtration(lam));
  CHECK(radical_filtration(gam) == brute_filtration(gam));
  CHECK(radical_filtration(lam) == std::vector<std::size_t>{8, 6, 4, 2, 1, 0});
  CHECK(radical_filtration(lam) == radical_filtration(gam));
  auto nonlocal = Algebra::build(testsupport::presentation("idem", freealg::make_alphabet({"e"}), {"e^2 - e"}));
  CHECK_FALSE(nonlocal.local());
  CHECK_THROWS_AS(radical_filtration(nonlocal), Error);
}

TEST_CASE("abelianization dimensions and staircase oracle") {
  auto lam_ab = abelianize(testsupport::lambda_con());
  auto gam_ab = abelianize(testsupport::gamma_con());
  CHECK(lam_ab.name == "lambda_con^ab");
  CHECK(lam_ab.relations.size() == 3);
  auto dl = ncgb::dimension(lam_ab).certificate.dimension;
  auto dg = ncgb::dimension(gam_ab).certificate.dimension;
  CHECK(dl == 5u);
  CHECK(dg == 5u);
  CHECK(*dl <= 9);

  // Staircase of C[x,y]/(xy, x^3 - y^2) by brute force on exponent pairs of
  // total degree <= 6: the quotient is spanned by {1, x, y, x^2, y^2}.
  std::vector<std::pair<int, int>> monos;
  for (int d = 0; d <= 6; ++d)
    for (int i = 0; i <= d; ++i) monos.push_back({i, d - i});
  auto idx = [&](int i, int j) {
    return static_cast<std::size_t>(std::find(monos.begin(), monos.end(), std::pair{i, j}) - monos.begin());
  };
  std::vector<Vector> ideal;
  for (auto [i, j] : monos) {
    if (i + j + 2 <= 6) {
      Vector v(monos.size(), 0);
      v[idx(i + 1, j + 1)] = 1;
      ideal.push_back(v);
    }
    if (i + j + 3 <= 6) {
      Vector v(monos.size(), 0);
      v[idx(i + 3, j)] = 1;
      v[idx(i, j + 2)] = -1;
      ideal.push_back(v);
    }
  }
  const std::size_t r = dense_rank(ideal);
  auto with = ideal;
  for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {0, 2}}) {
    Vector v(monos.size(), 0);
    v[idx(i, j)] = 1;
    with.push_back(v);
  }
  CHECK(dense_rank(with) == r + 5);
  for (int d = 0; d <= 4; ++d)
    for (int i = 0; i <= d; ++i) {
      Vector v(monos.size(), 0);
      v[idx(i, d - i)] = 1;
      auto more = with;
      more.push_back(v);
      CHECK(dense_rank(more) == r + 5);
    }

  // Commutative input keeps its dimension.
  auto comm = testsupport::presentation("c", testsupport::xy(), {"x*y - y*x", "x^2", "y^3"});
  CHECK(ncgb::dimension(abelianize(comm)).certificate.dimension == ncgb::dimension(comm).certificate.dimension);
}

TEST_CASE("build rejects uncertified algebras") {
  auto poly_ring = testsupport::presentation("comm", testsupport::xy(), {"x*y - y*x"});
  CHECK_THROWS_AS(Algebra::build(poly_ring), Error);
}

TEST_CASE("evaluate and substitute") {
  auto alg = Algebra::build(testsupport::gamma_con());
  const auto& b = alg.alphabet();
  std::vector<ParamElement> images = {constant_element(alg.coordinates(nc("a", b)), 0),
                                      constant_element(alg.coordinates(nc("b", b)), 0)};
  for (const auto& r : testsupport::gamma_con().relations) CHECK(evaluate(alg, r, images).is_zero());
  auto e = generic(alg, 8, 0);
  std::vector<Poly> zero(8, Poly(8));
  CHECK(substitute(e, zero).is_zero());
}
