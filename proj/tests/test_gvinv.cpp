#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flopalg/error.hpp"
#include "flopalg/gvinv/gvinv.hpp"
#include "support.hpp"

#include <algorithm>
#include <set>

using namespace flopalg;
using namespace flopalg::gvinv;

namespace {

// Oracle: exhaustive search over n_j in [1, dim] for j = 2..length.
std::set<std::vector<std::size_t>> brute(std::size_t dim, std::size_t dim_ab, std::size_t length) {
  std::set<std::vector<std::size_t>> out;
  std::vector<std::size_t> n(length, 1);
  n[0] = dim_ab;
  if (length == 1) {
    if (dim == dim_ab) out.insert(n);
    return out;
  }
  for (;;) {
    std::size_t total = dim_ab;
    for (std::size_t j = 2; j <= length; ++j) total += j * j * n[j - 1];
    if (total == dim) out.insert(n);
    std::size_t k = 1;
    while (k < length && ++n[k] > dim) n[k++] = 1;
    if (k == length) break;
  }
  return out;
}

}  // namespace

TEST_CASE("toda_tuples examples") {
  auto t = toda_tuples(9, 5, 2);
  REQUIRE(t.size() == 1);
  CHECK(t[0].n == std::vector<std::size_t>{5, 1});
  for (std::size_t d : {1u, 4u, 9u}) {
    auto one = toda_tuples(d, d, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].n == std::vector<std::size_t>{d});
  }
  CHECK(toda_tuples(9, 4, 2).empty());
  CHECK(toda_tuples(4, 5, 2).empty());
  CHECK_THROWS_AS(toda_tuples(9, 5, 0), Error);
}

TEST_CASE("toda_tuples agrees with exhaustive enumeration") {
  for (std::size_t dim = 0; dim <= 40; ++dim)
    for (std::size_t ab = 0; ab <= dim; ab += 3)
      for (std::size_t len = 1; len <= 4; ++len) {
        std::set<std::vector<std::size_t>> got;
        for (const auto& t : toda_tuples(dim, ab, len)) {
          CHECK(satisfies_toda(t, dim, ab));
          got.insert(t.n);
        }
        CHECK(got == brute(dim, ab, len));
      }
}

TEST_CASE("uniqueness for dim 9 and length 2") {
  for (std::size_t ab = 4; ab <= 9; ++ab) CHECK(toda_tuples(9, ab, 2).size() <= 1);
  auto t = toda_tuples(5 + 4 * 3 + 9 * 2 + 16, 5, 4);
  CHECK(std::find_if(t.begin(), t.end(), [](const GVTuple& g) {
          return g.n == std::vector<std::size_t>{5, 3, 2, 1};
        }) != t.end());
}

TEST_CASE("GV tuples from presentations") {
  for (const auto& pres : {testsupport::lambda_con(), testsupport::gamma_con()}) {
    auto r = gv_from_presentation(pres, 2);
    CHECK(r.dim == 9);
    CHECK(r.dim_ab == 5);
    REQUIRE(r.tuples.size() == 1);
    CHECK(r.tuples[0].n == std::vector<std::size_t>{5, 1});
    CHECK_FALSE(r.ambiguous());
  }
  auto comm = testsupport::presentation("c", testsupport::xy(), {"x*y - y*x", "x^2", "y^3"});
  auto r = gv_from_presentation(comm, 1);
  CHECK(r.dim == 6);
  CHECK(r.dim_ab == r.dim);
  REQUIRE(r.tuples.size() == 1);
  CHECK(r.tuples[0].n == std::vector<std::size_t>{6});

  auto poly_ring = testsupport::presentation("p", testsupport::xy(), {"x*y - y*x"});
  CHECK_THROWS_AS(gv_from_presentation(poly_ring, 2), Error);
}

TEST_CASE("ambiguity is flagged") {
  // e.g. 1 + 4*10 + 9*1 = 1 + 4*1 + 9*5
  std::size_t dim = 0;
  for (std::size_t d = 20; d < 200 && dim == 0; ++d)
    if (toda_tuples(d, 1, 3).size() > 1) dim = d;
  REQUIRE(dim != 0);
  GVReport r;
  r.tuples = toda_tuples(dim, 1, 3);
  CHECK(r.ambiguous());
}
