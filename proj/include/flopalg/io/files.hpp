#pragma once

#include "flopalg/commalg/poly.hpp"
#include "flopalg/matfac/matfac.hpp"
#include "flopalg/ncgb/presentation.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace flopalg::io {

std::string read_file(const std::filesystem::path& path);

/// Algebra file, one keyword per line, '#' starts a comment:
///
///   name lambda_con
///   generators x y
///   order x > y          (optional; default is declaration order)
///   relation x*y + y*x
///   local                (optional; asserts every relation lies in J^2)
ncgb::Presentation parse_algebra(const std::string& text);
ncgb::Presentation load_algebra(const std::filesystem::path& path);

/// Polynomial file: `name`, `vars u v x y`, `poly <expr>`.
struct PolyFile {
  std::string name;
  std::vector<std::string> vars;
  commalg::Poly poly;
};
PolyFile parse_poly_file(const std::string& text);
PolyFile load_poly_file(const std::filesystem::path& path);

/// Affine chart of a hypersurface cover:
///
///   name U1
///   vars x3 x4 y1 y2
///   relation <expr in vars>
///   base_vars u v x y
///   base_poly <expr in base_vars>
///   map u = <expr in vars>      (one per base variable)
///   fibre x3 x4                 (optional; variables set to 0 over the origin)
///   fibre_expect y2^2           (optional; expected relation on the fibre)
struct ChartFile {
  std::string name;
  std::vector<std::string> vars;
  commalg::Poly relation;
  std::vector<std::string> base_vars;
  commalg::Poly base_poly;
  /// Indexed like base_vars; polynomials in vars.
  std::vector<commalg::Poly> map;
  std::vector<std::size_t> fibre_zero;
  std::optional<commalg::Poly> fibre_expect;
};
ChartFile parse_chart_file(const std::string& text);
ChartFile load_chart_file(const std::filesystem::path& path);

/// {"vars": [...], "f": "...", "phi": [[...]], "psi": [[...]], "arrows": {"a": [[...]], ...}}
struct MatrixFile {
  std::vector<std::string> vars;
  commalg::Poly f;
  matfac::PolyMatrix phi;
  matfac::PolyMatrix psi;
  std::map<std::string, matfac::PolyMatrix> arrows;
  /// Optional expected value of a relation expression ("relation_display").
  std::optional<matfac::PolyMatrix> relation_display;
};
MatrixFile parse_matrix_file(const std::string& text);
MatrixFile load_matrix_file(const std::filesystem::path& path);

}  // namespace flopalg::io
