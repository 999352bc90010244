#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flopalg/commalg/groebner.hpp"
#include "flopalg/error.hpp"
#include "flopalg/isotest/isotest.hpp"
#include "support.hpp"

#include <set>

using namespace flopalg;
using namespace flopalg::isotest;
using testsupport::nc;

namespace {

std::set<std::string> normalized(const std::vector<Poly>& ps, const std::vector<std::string>& names) {
  std::set<std::string> out;
  for (const auto& p : ps)
    if (!p.is_zero()) out.insert(p.monic().to_string(names));
  return out;
}

std::set<std::string> expected(std::initializer_list<const char*> ps, const std::vector<std::string>& names) {
  std::vector<Poly> v;
  for (const char* p : ps) v.push_back(commalg::parse_poly(p, names));
  return normalized(v, names);
}

ncgb::Presentation lambda_ab_display() {
  return testsupport::presentation("lambda_ab", testsupport::xy(), {"x*y", "y*x", "x^2 + y^3"});
}
ncgb::Presentation gamma_ab_display() {
  return testsupport::presentation("gamma_ab", testsupport::ab(), {"a*b", "b*a", "-a^2 + b^3"});
}

}  // namespace

TEST_CASE("generic maps") {
  auto lam = findim::Algebra::build(testsupport::lambda_con());
  auto gm = generic_map(testsupport::gamma_con(), lam);
  CHECK(gm.parameter_count() == 16);
  CHECK(gm.variables.front() == "l1");
  CHECK(gm.variables[8] == "m1");
  CHECK(gm.variables.back() == "t");
  for (const auto& im : gm.images) CHECK(im.coords[0].is_zero());
  CHECK(gm.images[0].coords[1] == Poly::variable(17, gm.parameter(0, 1)));

  auto dual = findim::Algebra::build(testsupport::presentation("d", freealg::make_alphabet({"t"}), {"t^2"}));
  auto one = generic_map(testsupport::presentation("s", freealg::make_alphabet({"z"}), {"z^2"}), dual);
  CHECK(one.parameter_count() == 1);

  auto gab = findim::Algebra::build(findim::abelianize(testsupport::gamma_con()));
  CHECK(generic_map(findim::abelianize(testsupport::lambda_con()), gab).parameter_count() == 8);

  auto nonlocal = findim::Algebra::build(testsupport::presentation("e", freealg::make_alphabet({"e"}), {"e^2 - e"}));
  CHECK_THROWS_AS(generic_map(testsupport::gamma_con(), nonlocal), Error);
}

TEST_CASE("staged pipeline reproduces the three constraint sets") {
  auto lam = findim::Algebra::build(testsupport::lambda_con());
  auto gm = generic_map(testsupport::gamma_con(), lam);
  const auto& v = gm.variables;

  auto cube = image_constraints(gm, nc("a^3", gm.source.alphabet));
  CHECK(normalized(cube, v) ==
        expected({"l2^3", "l1^2*l2 + 3*l2^2*l5", "l1*l2^2", "3*(l1^2*l5 + l2^2*l3 + l2*l5^2)"}, v));

  auto staged = staged_pipeline(gm);
  REQUIRE(staged.stages.size() == 3);
  CHECK(staged.stages[0].identity == "a^3");
  CHECK(normalized(staged.stages[0].constraints, v) ==
        expected({"l2^3", "l1^2*l2 + 3*l2^2*l5", "l1*l2^2", "l1^2*l5 + l2^2*l3 + l2*l5^2"}, v));
  std::set<std::string> stage1_zero;
  for (const auto& d : staged.stages[0].deductions) stage1_zero.insert(v[d.variable]);
  CHECK(stage1_zero == std::set<std::string>{"l2", "l5"});

  // Exact coefficients, including the factor 2.
  std::set<std::string> stage2;
  for (const auto& p : staged.stages[1].constraints) stage2.insert(p.to_string(v));
  std::set<std::string> want2;
  for (const char* p : {"2*l1*m1", "2*l3*m2", "2*l1*m5", "2*(l1*m7 + l3*m5 - l4*m4 + l6*m2 + l7*m1)"})
    want2.insert(commalg::parse_poly(p, v).to_string(v));
  CHECK(stage2 == want2);

  CHECK(normalized(staged.stages[2].constraints, v) ==
        expected({"-l1^2 + m2^3", "-l1^2*m2", "-2*l1*l7 + l4^2 + 3*m2^2*m3"}, v));
  CHECK(staged.contradiction);
}

TEST_CASE("staged and automatic routes agree") {
  auto lam = findim::Algebra::build(testsupport::lambda_con());
  auto gam = findim::Algebra::build(testsupport::gamma_con());
  std::vector<GenericMap> maps = {generic_map(testsupport::gamma_con(), lam),
                                  generic_map(testsupport::lambda_con(), gam)};
  for (const auto& gm : maps) {
    auto staged = staged_pipeline(gm);
    auto automatic = automatic_unit_test(gm);
    CHECK(automatic.finished);
    CHECK(staged.contradiction == automatic.unit);
  }
}

TEST_CASE("lambda_con and gamma_con are not isomorphic, in both directions") {
  for (auto [a, b] : {std::pair{testsupport::lambda_con(), testsupport::gamma_con()},
                      std::pair{testsupport::gamma_con(), testsupport::lambda_con()}}) {
    auto v = decide_iso(a, b);
    CHECK(verdict_name(v) == "not_isomorphic");
    auto& cert = std::get<UnitCertificate>(std::get<NotIsomorphic>(v).certificate);
    CHECK(cert.verify());
    CHECK(commalg::contains_one(cert.basis));
    // Re-check from scratch: 1 reduces to 0 against a fresh basis of the generators.
    CHECK(commalg::member(Poly::constant(cert.variables.size(), 1), commalg::buchberger(cert.generators)).member);
  }
}

TEST_CASE("tampered certificates fail verification") {
  auto v = decide_iso(testsupport::gamma_con(), testsupport::lambda_con());
  auto cert = std::get<UnitCertificate>(std::get<NotIsomorphic>(v).certificate);
  REQUIRE(cert.verify());

  auto extra = cert;
  extra.generators.push_back(Poly::variable(cert.variables.size(), 3));  // l4 = 0 was never deduced
  CHECK_FALSE(extra.verify());

  auto forged = cert;
  forged.deductions.front().evidence = Poly::variable(cert.variables.size(), 0) * Rational(5);
  CHECK_FALSE(forged.verify());

  auto weak = cert;
  weak.generators.erase(weak.generators.begin(), weak.generators.end() - 1);  // only t*det - 1 left
  CHECK_FALSE(weak.verify());
}

TEST_CASE("identity witness for lambda_con with itself") {
  auto v = decide_iso(testsupport::lambda_con(), testsupport::lambda_con());
  REQUIRE(verdict_name(v) == "isomorphic");
  const auto& w = std::get<Isomorphic>(v).witness;
  auto alg = findim::Algebra::build(testsupport::lambda_con());
  CHECK(w.images[0] == alg.coordinates(nc("x", alg.alphabet())));
  CHECK(w.images[1] == alg.coordinates(nc("y", alg.alphabet())));
  CHECK(verify_witness(testsupport::lambda_con(), alg, w.images));
}

TEST_CASE("abelianizations are isomorphic") {
  auto v = decide_iso(lambda_ab_display(), gamma_ab_display());
  REQUIRE(verdict_name(v) == "isomorphic");
  auto target = findim::Algebra::build(gamma_ab_display());
  CHECK(verify_witness(lambda_ab_display(), target, std::get<Isomorphic>(v).witness.images));

  const auto& a = target.alphabet();
  std::vector<findim::Vector> candidate = {target.coordinates(nc("a", a)), target.coordinates(nc("-b", a))};
  CHECK(verify_witness(lambda_ab_display(), target, candidate));

  // Oracle by commutative ideal membership: x -> a, y -> -b sends xy and
  // x^2 + y^3 into (ab, -a^2 + b^3).
  std::vector<std::string> names = {"a", "b"};
  auto gb = commalg::buchberger({commalg::parse_poly("a*b", names), commalg::parse_poly("-a^2 + b^3", names)});
  for (const char* img : {"a*(-b)", "a^2 + (-b)^3"}) CHECK(commalg::member(commalg::parse_poly(img, names), gb).member);
  // The same candidate fails for the abelianization of (xy + yx, x^3 - y^2):
  // x^3 - y^2 goes to a^3 - b^2, and b^2 survives.
  CHECK_FALSE(commalg::member(commalg::parse_poly("a^3 - (-b)^2", names), gb).member);
  CHECK(commalg::member(commalg::parse_poly("b^3 - a^2", names), gb).member);

  auto computed = decide_iso(findim::abelianize(testsupport::lambda_con()), findim::abelianize(testsupport::gamma_con()));
  CHECK(verdict_name(computed) == "isomorphic");
}

TEST_CASE("witness verification rejects bad maps") {
  auto target = findim::Algebra::build(testsupport::lambda_con());
  const auto& a = target.alphabet();
  // Not generating: both images in J^2.
  CHECK_FALSE(verify_witness(testsupport::lambda_con(), target,
                             {target.coordinates(nc("y^2", a)), target.coordinates(nc("x^2", a))}));
  // Relations fail: swap x and y.
  CHECK_FALSE(verify_witness(testsupport::lambda_con(), target,
                             {target.coordinates(nc("y", a)), target.coordinates(nc("x", a))}));
  CHECK_FALSE(verify_witness(testsupport::lambda_con(), target, {target.coordinates(nc("x", a))}));
}

TEST_CASE("invariant mismatch and budget exhaustion") {
  auto small = testsupport::presentation("small", testsupport::xy(), {"x*y + y*x", "x^2", "y^2"});
  auto v = decide_iso(testsupport::lambda_con(), small);
  REQUIRE(verdict_name(v) == "not_isomorphic");
  auto mismatch = std::get<InvariantMismatch>(std::get<NotIsomorphic>(v).certificate);
  CHECK(mismatch.invariant == "dimension");

  IsoOptions none;
  none.witness_budget = 0;
  CHECK(verdict_name(decide_iso(testsupport::lambda_con(), testsupport::lambda_con(), none)) == "inconclusive");
}

TEST_CASE("uncertified inputs are rejected") {
  auto poly_ring = testsupport::presentation("comm", testsupport::xy(), {"x*y - y*x"});
  CHECK_THROWS_AS(decide_iso(poly_ring, testsupport::lambda_con()), Error);
  auto nonlocal = testsupport::presentation("e", freealg::make_alphabet({"e"}), {"e^2 - e"});
  CHECK_THROWS_AS(decide_iso(nonlocal, nonlocal), Error);
}
