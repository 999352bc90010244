#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flopalg/error.hpp"
#include "flopalg/linalg.hpp"
#include "flopalg/ncgb/groebner.hpp"
#include "support.hpp"

#include <map>
#include <set>

using namespace flopalg;
using namespace flopalg::ncgb;
using testsupport::nc;

namespace {

std::set<std::string> basis_strings(const GroebnerBasis& gb) {
  std::set<std::string> out;
  for (const auto& g : gb.elements) out.insert(g.to_string());
  return out;
}

std::vector<std::string> word_strings(const DimensionCertificate& c, const freealg::Alphabet& a) {
  std::vector<std::string> out;
  for (const auto& w : c.normal_words) out.push_back(freealg::to_string(w, a));
  return out;
}

// Oracle: the span of all u * r * v of degree <= max_deg, as an echelon basis
// over the coordinates "words of degree <= max_deg".
struct TruncatedIdeal {
  std::map<freealg::Word, std::size_t> index;
  linalg::EchelonBasis span;

  TruncatedIdeal(const Presentation& pres, std::size_t max_deg) {
    std::vector<freealg::Word> words;
    for (std::size_t d = 0; d <= max_deg; ++d)
      for (const auto& w : testsupport::all_words(pres.alphabet->size(), d)) {
        index.emplace(w, words.size());
        words.push_back(w);
      }
    for (const auto& r : pres.relations)
      for (const auto& u : words)
        for (const auto& v : words) {
          if (u.degree() + r.degree() + v.degree() > max_deg) continue;
          span.insert(row(r.sandwich(u, v)));
        }
  }

  linalg::SparseRow row(const freealg::NCPoly& p) const {
    std::vector<Rational> dense(index.size(), 0);
    for (const auto& t : p.terms()) dense[index.at(t.word)] = t.coeff;
    return linalg::to_sparse(dense);
  }
};

}  // namespace

TEST_CASE("lambda_con completes to {xy + yx, x^3 - y^2, y^3}") {
  auto pres = testsupport::lambda_con();
  auto gb = complete(pres, 12);
  CHECK(gb.complete());
  CHECK(basis_strings(gb) == std::set<std::string>{"x*y + y*x", "x^3 - y^2", "y^3"});
}

TEST_CASE("y^3 lies in the ideal of lambda_con: brute-force linear algebra in degree <= 6") {
  auto pres = testsupport::lambda_con();
  TruncatedIdeal ideal(pres, 6);
  CHECK(ideal.span.contains(ideal.row(nc("y^3", pres.alphabet))));
  CHECK_FALSE(ideal.span.contains(ideal.row(nc("y^2", pres.alphabet))));
  CHECK_FALSE(ideal.span.contains(ideal.row(nc("y^2*x^2", pres.alphabet))));
}

TEST_CASE("lambda_con quotient has dimension 9: brute force in degree <= 8") {
  auto pres = testsupport::lambda_con();
  TruncatedIdeal ideal(pres, 8);
  // The nine normal words stay independent modulo the truncated ideal...
  linalg::EchelonBasis quotient = ideal.span;
  for (const char* w : {"1", "y", "x", "y^2", "y*x", "x^2", "y^2*x", "y*x^2", "y^2*x^2"})
    CHECK(quotient.insert(ideal.row(nc(w, pres.alphabet))));
  // ...and together with it span every word of degree <= 5.
  for (std::size_t d = 0; d <= 5; ++d)
    for (const auto& w : testsupport::all_words(2, d))
      CHECK(quotient.contains(ideal.row(freealg::NCPoly::monomial(pres.alphabet, w))));
}

TEST_CASE("trivial presentations") {
  auto one = freealg::make_alphabet({"x"});
  auto pres = testsupport::presentation("x2", one, {"x^2"});
  auto r = dimension(pres);
  CHECK(basis_strings(r.basis) == std::set<std::string>{"x^2"});
  CHECK(r.certificate.dimension == 2u);
  CHECK(word_strings(r.certificate, *one) == std::vector<std::string>{"1", "x"});
  CHECK(r.certificate.witness_degree == 2u);
}

TEST_CASE("{xy - yx, x^2, y^2} has normal words {1, x, y, yx}: brute-force oracle") {
  auto a = testsupport::xy();
  auto pres = testsupport::presentation("ext", a, {"x*y - y*x", "x^2", "y^2"});
  auto r = dimension(pres);
  REQUIRE(r.certificate.finite());
  auto got = word_strings(r.certificate, *a);
  CHECK(std::set<std::string>(got.begin(), got.end()) == std::set<std::string>{"1", "x", "y", "y*x"});
  // Oracle: words of degree <= 3 avoiding the factors xy, xx, yy.
  std::set<std::string> oracle;
  for (std::size_t d = 0; d <= 3; ++d)
    for (const auto& w : testsupport::all_words(2, d)) {
      std::string s;
      for (auto l : w.letters()) s += a->name(l);
      if (s.find("xy") == std::string::npos && s.find("xx") == std::string::npos && s.find("yy") == std::string::npos)
        oracle.insert(freealg::to_string(w, *a));
    }
  CHECK(oracle == std::set<std::string>(got.begin(), got.end()));
}

TEST_CASE("lambda_con dimension certificate") {
  auto pres = testsupport::lambda_con();
  auto r = dimension(pres);
  REQUIRE(r.certificate.finite());
  CHECK(*r.certificate.dimension == 9);
  CHECK(*r.certificate.witness_degree == 5);
  CHECK(word_strings(r.certificate, *pres.alphabet) ==
        std::vector<std::string>{"1", "y", "x", "y^2", "y*x", "x^2", "y^2*x", "y*x^2", "y^2*x^2"});
  for (const auto& w : r.certificate.normal_words) CHECK(is_normal(w, r.basis));
  // Factor closure: a word of the witness degree is never normal.
  for (const auto& w : testsupport::all_words(2, *r.certificate.witness_degree)) CHECK_FALSE(is_normal(w, r.basis));
}

TEST_CASE("gamma_con is nine-dimensional") {
  auto pres = testsupport::gamma_con();
  auto r = dimension(pres);
  CHECK(r.basis.complete());
  CHECK(r.certificate.dimension == 9u);
  CHECK(basis_strings(r.basis) == std::set<std::string>{"b*a + a*b", "b^3 - a^2*b - a^2", "a^3"});
}

TEST_CASE("dimension of lambda_con does not depend on precedence") {
  auto yx = freealg::make_alphabet({"x", "y"}, {"y", "x"});
  auto pres = testsupport::presentation("lambda_yx", yx, {"x*y + y*x", "x^3 - y^2"});
  auto r = dimension(pres);
  CHECK(r.certificate.dimension == 9u);
  CHECK(basis_strings(r.basis) != basis_strings(dimension(testsupport::lambda_con()).basis));
}

TEST_CASE("normal forms") {
  auto lam = testsupport::lambda_con();
  auto gl = complete(lam, 12);
  CHECK(normal_form(nc("x*y", lam.alphabet), gl) == nc("-y*x", lam.alphabet));
  CHECK(normal_form(nc("x^3", lam.alphabet), gl) == nc("y^2", lam.alphabet));
  auto gam = testsupport::gamma_con();
  auto gg = complete(gam, 12);
  CHECK(normal_form(nc("a^3", gam.alphabet), gg).is_zero());
  CHECK(normal_form(nc("b^6", gam.alphabet), gg).is_zero());
  CHECK(normal_form(nc("b^3", gam.alphabet), gg) == nc("a^2 + a^2*b", gam.alphabet));
  for (const auto* p : {&lam, &gam}) {
    auto gb = complete(*p, 12);
    for (const auto& r : p->relations) CHECK(normal_form(r, gb).is_zero());
  }
}

TEST_CASE("normal form is idempotent and multiplicative on random input") {
  std::mt19937 rng(19);
  for (const auto& pres : {testsupport::lambda_con(), testsupport::gamma_con()}) {
    auto gb = complete(pres, 12);
    for (int t = 0; t < 100; ++t) {
      auto p = testsupport::random_poly(rng, pres.alphabet, 4, 5);
      auto q = testsupport::random_poly(rng, pres.alphabet, 4, 5);
      auto np = normal_form(p, gb), nq = normal_form(q, gb);
      CHECK(normal_form(np, gb) == np);
      for (const auto& t2 : np.terms()) CHECK(is_normal(t2.word, gb));
      CHECK(normal_form(p * q, gb) == normal_form(np * nq, gb));
      CHECK(normal_form(p + q, gb) == np + nq);
    }
  }
}

TEST_CASE("Diamond-Lemma check") {
  for (const auto& pres : {testsupport::lambda_con(), testsupport::gamma_con()}) {
    auto gb = complete(pres, 12);
    CHECK(unresolved_ambiguities(gb).empty());
  }
  // The raw relations of lambda_con are not confluent: x^3 y resolves two ways.
  auto pres = testsupport::lambda_con();
  GroebnerBasis raw{pres.alphabet, {pres.relations[0], pres.relations[1]}, Status::Complete, 0};
  std::sort(raw.elements.begin(), raw.elements.end(), [&](const auto& p, const auto& q) {
    return freealg::MonomialOrder(pres.alphabet).less(p.leading_word(), q.leading_word());
  });
  auto bad = unresolved_ambiguities(raw);
  REQUIRE_FALSE(bad.empty());
  bool saw_y3 = false;
  for (const auto& b : bad) saw_y3 = saw_y3 || b.residue.monic() == nc("y^3", pres.alphabet);
  CHECK(saw_y3);
}

TEST_CASE("completion is deterministic") {
  auto a = complete(testsupport::gamma_con(), 12);
  auto b = complete(testsupport::gamma_con(), 12);
  CHECK(a.elements == b.elements);
}

TEST_CASE("infinite or non-terminating inputs are reported, never guessed") {
  auto a = testsupport::xy();
  auto poly_ring = testsupport::presentation("comm", a, {"x*y - y*x"});
  auto r = dimension(poly_ring);
  CHECK_FALSE(r.certificate.finite());
  CHECK_FALSE(r.certificate.dimension.has_value());
  CHECK_FALSE(r.certificate.diagnostics.empty());

  auto braid = testsupport::presentation("braid", a, {"x*y*x - y*x*y"});
  auto gb = complete(braid, 6);
  CHECK(gb.status == Status::Truncated);
  CHECK(gb.truncated_at == 6);
  CHECK_FALSE(dimension(braid, 6).certificate.finite());
}

TEST_CASE("presentation validation") {
  auto a = testsupport::xy();
  CHECK_THROWS_AS(make_presentation("z", a, {freealg::NCPoly(a)}), Error);
  CHECK_THROWS_AS(make_presentation("m", a, {nc("a", testsupport::ab())}), Error);
  auto p = testsupport::presentation("p", a, {"2*x^2 - 4*y"});
  CHECK(p.relations[0] == nc("x^2 - 2*y", a));
  CHECK_FALSE(p.is_local());
  CHECK(testsupport::lambda_con().is_local());
  CHECK(default_degree_cap(testsupport::lambda_con()) == 10);
}

TEST_CASE("quotient by (xy + yx, x^4 + x^3 - y^2) is reported as certified") {
  auto pres = testsupport::presentation("rem", testsupport::xy(), {"x*y + y*x", "x^4 + x^3 - y^2"});
  auto r = dimension(pres);
  // Only self-consistency is asserted: the uncompleted quotient is not
  // claimed to match the completed algebra.
  if (r.certificate.finite()) {
    CHECK(r.basis.complete());
    CHECK(unresolved_ambiguities(r.basis).empty());
    MESSAGE("dim of free quotient by (xy + yx, x^4 + x^3 - y^2): " << *r.certificate.dimension);
  } else {
    CHECK_FALSE(r.certificate.diagnostics.empty());
  }
}
