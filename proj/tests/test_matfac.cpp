#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flopalg/commalg/groebner.hpp"
#include "flopalg/error.hpp"
#include "flopalg/io/files.hpp"
#include "flopalg/matfac/matfac.hpp"

#include <random>

using namespace flopalg;
using namespace flopalg::matfac;

namespace {

io::MatrixFile corpus() { return io::load_matrix_file(std::string(FLOPALG_CORPUS_DIR) + "/prop42_matrices.json"); }

const char* rel = "-a^2 + b^3 + a*b*a - b*d*c - d*c*b";

}  // namespace

TEST_CASE("the corpus factorization holds exactly") {
  auto m = corpus();
  auto c = check_matrix_factorization({m.phi, m.psi, m.f});
  CHECK(c.ok);
  CHECK(c.residual_phi_psi.is_zero());
  CHECK(c.residual_psi_phi.is_zero());
}

TEST_CASE("1x1 factorization") {
  std::vector<std::string> v = {"x", "y"};
  auto f = commalg::parse_poly("x^2 + y^3", v);
  PolyMatrix phi({{f}}), psi({{commalg::Poly::constant(2, 1)}});
  CHECK(check_matrix_factorization({phi, psi, f}).ok);
}

TEST_CASE("a sign flip is caught with a nonzero residual") {
  auto m = corpus();
  auto phi = m.phi;
  phi.at(1, 2) = -phi.at(1, 2);
  auto c = check_matrix_factorization({phi, m.psi, m.f});
  CHECK_FALSE(c.ok);
  CHECK_FALSE(c.residual_phi_psi.is_zero());
  CHECK_THROWS_AS(check_matrix_factorization({PolyMatrix(3, 3, 4), m.psi, m.f}), Error);
}

TEST_CASE("quiver relations") {
  auto m = corpus();
  auto ab = check_quiver_relation("a*b + b*a", m.arrows, m.psi, m.f);
  CHECK(ab.exactly_zero);
  CHECK(ab.passed());

  auto r = check_quiver_relation(rel, m.arrows, m.psi, m.f);
  REQUIRE(m.relation_display.has_value());
  CHECK(r.value == *m.relation_display);
  CHECK_FALSE(r.exactly_zero);
  REQUIRE(r.membership.witness.has_value());
  CHECK(verify_membership(r.value, m.psi, m.f, *r.membership.witness));

  // Oracle: M = psi * G forces phi * M = f * G, so every entry of phi * M is
  // divisible by f.
  auto pm = m.phi * r.value;
  auto gb = commalg::buchberger({m.f});
  for (std::size_t i = 0; i < pm.rows(); ++i)
    for (std::size_t j = 0; j < pm.cols(); ++j) CHECK(commalg::member(pm.at(i, j), gb).member);

  CHECK(check_quiver_relation("0", m.arrows, m.psi, m.f).passed());
  CHECK_THROWS_AS(check_quiver_relation("c*c", m.arrows, m.psi, m.f), Error);
  CHECK_THROWS_AS(check_quiver_relation("a + c", m.arrows, m.psi, m.f), Error);
}

TEST_CASE("column space membership edge cases") {
  auto m = corpus();
  auto zero = PolyMatrix(4, 4, 4);
  auto w = column_space_membership(zero, m.psi, m.f, 0);
  REQUIRE(w.has_value());
  CHECK(w->g.is_zero());
  CHECK(w->h.is_zero());

  auto id = PolyMatrix::identity(4, 4);
  for (unsigned bound : {0u, 1u, 3u}) CHECK_FALSE(column_space_membership(id, m.psi, m.f, bound).has_value());
  auto res = column_space_membership(id, m.psi, m.f);
  CHECK_FALSE(res.witness.has_value());
  CHECK(res.degree_bound == 2);

  // psi itself: G = I.
  auto self = column_space_membership(m.psi, m.psi, m.f);
  REQUIRE(self.witness.has_value());
  CHECK(verify_membership(m.psi, m.psi, m.f, *self.witness));
}

TEST_CASE("relation evaluation is linear in the expression") {
  auto m = corpus();
  const std::vector<std::string> terms = {"- a^2", "+ b^3", "+ a*b*a", "- b*d*c", "- d*c*b", "+ a*b", "+ b*a", "+ 2*d*c"};
  std::mt19937 rng(37);
  for (int t = 0; t < 20; ++t) {
    std::string left = "0", right = "0", both = "0";
    for (const auto& term : terms) {
      std::string& side = (rng() & 1) ? left : right;
      side += " " + term;
      both += " " + term;
    }
    auto vl = evaluate_arrow_expression(left, m.arrows, 4, 4);
    auto vr = evaluate_arrow_expression(right, m.arrows, 4, 4);
    CHECK(vl + vr == evaluate_arrow_expression(both, m.arrows, 4, 4));
  }
}
