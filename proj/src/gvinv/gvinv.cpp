#include "flopalg/gvinv/gvinv.hpp"

#include "flopalg/error.hpp"
#include "flopalg/findim/algebra.hpp"
#include "flopalg/ncgb/groebner.hpp"

namespace flopalg::gvinv {

bool satisfies_toda(const GVTuple& t, std::size_t dim_acon, std::size_t dim_ab) {
  if (t.n.empty() || t.n[0] != dim_ab) return false;
  std::size_t total = t.n[0];
  for (std::size_t j = 2; j <= t.n.size(); ++j) {
    if (t.n[j - 1] == 0) return false;
    total += j * j * t.n[j - 1];
  }
  return total == dim_acon;
}

namespace {

void extend(std::size_t j, std::size_t length, std::size_t remaining, GVTuple& current, std::vector<GVTuple>& out) {
  if (j > length) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  // Every later index needs at least one copy of its square.
  std::size_t reserve = 0;
  for (std::size_t k = j + 1; k <= length; ++k) reserve += k * k;
  const std::size_t sq = j * j;
  for (std::size_t nj = 1; nj * sq + reserve <= remaining; ++nj) {
    current.n.push_back(nj);
    extend(j + 1, length, remaining - nj * sq, current, out);
    current.n.pop_back();
  }
}

}  // namespace

std::vector<GVTuple> toda_tuples(std::size_t dim_acon, std::size_t dim_ab, std::size_t length) {
  if (length == 0) throw Error("length must be at least 1");
  std::vector<GVTuple> out;
  if (dim_ab > dim_acon) return out;
  GVTuple current{{dim_ab}};
  extend(2, length, dim_acon - dim_ab, current, out);
  return out;
}

GVReport gv_from_presentation(const ncgb::Presentation& pres, std::size_t length) {
  auto certified_dim = [](const ncgb::Presentation& p) {
    auto r = ncgb::dimension(p);
    if (!r.certificate.finite()) {
      std::string why;
      for (const auto& d : r.certificate.diagnostics) why += (why.empty() ? "" : "; ") + d;
      throw Error("dimension of '" + p.name + "' is not certified: " + why);
    }
    return *r.certificate.dimension;
  };
  if (!pres.is_local()) throw Error("'" + pres.name + "' is not local");
  GVReport out;
  out.length = length;
  out.dim = certified_dim(pres);
  out.dim_ab = certified_dim(findim::abelianize(pres));
  out.tuples = toda_tuples(out.dim, out.dim_ab, length);
  for (const auto& t : out.tuples)
    if (!satisfies_toda(t, out.dim, out.dim_ab)) throw Error("internal error: tuple fails the dimension identity");
  return out;
}

}  // namespace flopalg::gvinv
