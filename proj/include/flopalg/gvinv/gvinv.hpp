#pragma once

#include "flopalg/ncgb/presentation.hpp"

#include <cstddef>
#include <vector>

namespace flopalg::gvinv {

/// (n_1, ..., n_l) with dim = n_1 + sum_{j>=2} j^2 n_j.
struct GVTuple {
  std::vector<std::size_t> n;
  std::size_t length() const { return n.size(); }
  bool operator==(const GVTuple&) const = default;
};

bool satisfies_toda(const GVTuple& t, std::size_t dim_acon, std::size_t dim_ab);

/// All tuples with n_1 = dim_ab and n_j >= 1 for j >= 2.
std::vector<GVTuple> toda_tuples(std::size_t dim_acon, std::size_t dim_ab, std::size_t length);

struct GVReport {
  std::size_t dim = 0;
  std::size_t dim_ab = 0;
  std::size_t length = 0;
  std::vector<GVTuple> tuples;
  bool ambiguous() const { return tuples.size() > 1; }
};

/// Throws if either dimension is not certified.
GVReport gv_from_presentation(const ncgb::Presentation& pres, std::size_t length);

}  // namespace flopalg::gvinv
