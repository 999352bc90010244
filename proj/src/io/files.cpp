#include "flopalg/io/files.hpp"

#include "flopalg/error.hpp"
#include "flopalg/freealg/parse.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace flopalg::io {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

struct Line {
  std::size_t number;
  std::string keyword;
  std::string rest;
  std::size_t rest_column;  // 0-based offset of `rest` in the raw line
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::size_t k = 0;
    while (k < raw.size() && is_space(raw[k])) ++k;
    if (k == raw.size()) continue;
    std::size_t e = k;
    while (e < raw.size() && !is_space(raw[e])) ++e;
    Line line{number, raw.substr(k, e - k), "", e};
    while (line.rest_column < raw.size() && is_space(raw[line.rest_column])) ++line.rest_column;
    std::size_t end = raw.size();
    while (end > line.rest_column && is_space(raw[end - 1])) --end;
    line.rest = raw.substr(std::min(line.rest_column, end), end - std::min(line.rest_column, end));
    out.push_back(std::move(line));
  }
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

[[noreturn]] void fail(const Line& line, const std::string& msg) { throw ParseError(msg, line.number, 1); }

void check_names(const Line& line, const std::vector<std::string>& names) {
  if (names.empty()) fail(line, "'" + line.keyword + "' needs at least one name");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!std::isalpha(static_cast<unsigned char>(n[0])) ||
        !std::all_of(n.begin(), n.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }))
      fail(line, "invalid name '" + n + "'");
    if (!seen.insert(n).second) fail(line, "duplicate name '" + n + "'");
  }
}

void need_unique(const Line& line, bool already) {
  if (already) fail(line, "duplicate '" + line.keyword + "' line");
}

commalg::Poly poly_at(const Line& line, const std::vector<std::string>& names) {
  if (line.rest.empty()) fail(line, "'" + line.keyword + "' needs an expression");
  return commalg::parse_poly(line.rest, names, commalg::Order::Dp, line.number, line.rest_column);
}

}  // namespace

ncgb::Presentation parse_algebra(const std::string& text) {
  std::string name;
  std::optional<std::vector<std::string>> generators;
  std::optional<std::vector<std::string>> order;
  std::optional<Line> order_line;
  std::vector<Line> relation_lines;
  std::optional<Line> local_line;
  for (const auto& line : split_lines(text)) {
    if (line.keyword == "name") {
      need_unique(line, !name.empty());
      if (line.rest.empty()) fail(line, "'name' needs a value");
      name = line.rest;
    } else if (line.keyword == "generators") {
      need_unique(line, generators.has_value());
      generators = words(line.rest);
      check_names(line, *generators);
    } else if (line.keyword == "order") {
      need_unique(line, order.has_value());
      auto w = words(line.rest);
      std::vector<std::string> names;
      for (std::size_t k = 0; k < w.size(); ++k) {
        if (k % 2 == 1) {
          if (w[k] != ">") fail(line, "expected '>' in order, got '" + w[k] + "'");
        } else {
          names.push_back(w[k]);
        }
      }
      if (w.empty() || w.size() % 2 == 0) fail(line, "order must read 'g1 > g2 > ...'");
      order = names;
      order_line = line;
    } else if (line.keyword == "relation") {
      relation_lines.push_back(line);
    } else if (line.keyword == "local") {
      if (!line.rest.empty()) fail(line, "'local' takes no arguments");
      local_line = line;
    } else {
      fail(line, "unknown keyword '" + line.keyword + "'");
    }
  }
  if (!generators) throw ParseError("missing 'generators' line", 1, 1);
  freealg::AlphabetPtr alphabet;
  if (order) {
    std::vector<std::string> a = *order, b = *generators;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) fail(*order_line, "'order' must list every generator exactly once");
    alphabet = freealg::make_alphabet(*generators, *order);
  } else {
    alphabet = freealg::make_alphabet(*generators);
  }
  std::vector<freealg::NCPoly> relations;
  for (const auto& line : relation_lines) {
    if (line.rest.empty()) fail(line, "'relation' needs an expression");
    auto p = freealg::parse_ncpoly(line.rest, alphabet, line.number, line.rest_column);
    if (p.is_zero()) fail(line, "relation is zero");
    relations.push_back(std::move(p));
  }
  auto pres = ncgb::make_presentation(name, alphabet, std::move(relations));
  if (local_line && !pres.is_local()) fail(*local_line, "declared local but a relation has a term of degree < 2");
  return pres;
}

ncgb::Presentation load_algebra(const std::filesystem::path& path) { return parse_algebra(read_file(path)); }

PolyFile parse_poly_file(const std::string& text) {
  PolyFile out;
  std::optional<Line> poly_line;
  bool have_vars = false;
  for (const auto& line : split_lines(text)) {
    if (line.keyword == "name") {
      need_unique(line, !out.name.empty());
      out.name = line.rest;
    } else if (line.keyword == "vars") {
      need_unique(line, have_vars);
      out.vars = words(line.rest);
      check_names(line, out.vars);
      have_vars = true;
    } else if (line.keyword == "poly") {
      need_unique(line, poly_line.has_value());
      poly_line = line;
    } else {
      fail(line, "unknown keyword '" + line.keyword + "'");
    }
  }
  if (!have_vars) throw ParseError("missing 'vars' line", 1, 1);
  if (!poly_line) throw ParseError("missing 'poly' line", 1, 1);
  out.poly = poly_at(*poly_line, out.vars);
  return out;
}

PolyFile load_poly_file(const std::filesystem::path& path) { return parse_poly_file(read_file(path)); }

ChartFile parse_chart_file(const std::string& text) {
  ChartFile out;
  std::optional<Line> relation, base_poly, fibre, fibre_expect;
  std::vector<Line> maps;
  bool have_vars = false, have_base = false;
  for (const auto& line : split_lines(text)) {
    if (line.keyword == "name") {
      need_unique(line, !out.name.empty());
      out.name = line.rest;
    } else if (line.keyword == "vars") {
      need_unique(line, have_vars);
      out.vars = words(line.rest);
      check_names(line, out.vars);
      have_vars = true;
    } else if (line.keyword == "base_vars") {
      need_unique(line, have_base);
      out.base_vars = words(line.rest);
      check_names(line, out.base_vars);
      have_base = true;
    } else if (line.keyword == "relation") {
      need_unique(line, relation.has_value());
      relation = line;
    } else if (line.keyword == "base_poly") {
      need_unique(line, base_poly.has_value());
      base_poly = line;
    } else if (line.keyword == "map") {
      maps.push_back(line);
    } else if (line.keyword == "fibre") {
      need_unique(line, fibre.has_value());
      fibre = line;
    } else if (line.keyword == "fibre_expect") {
      need_unique(line, fibre_expect.has_value());
      fibre_expect = line;
    } else {
      fail(line, "unknown keyword '" + line.keyword + "'");
    }
  }
  if (!have_vars || !have_base || !relation || !base_poly)
    throw ParseError("chart needs 'vars', 'relation', 'base_vars' and 'base_poly' lines", 1, 1);
  out.relation = poly_at(*relation, out.vars);
  out.base_poly = poly_at(*base_poly, out.base_vars);
  std::vector<std::optional<commalg::Poly>> images(out.base_vars.size());
  for (const auto& line : maps) {
    const auto eq = line.rest.find('=');
    if (eq == std::string::npos) fail(line, "map line must read 'map <base var> = <expr>'");
    auto lhs = words(line.rest.substr(0, eq));
    if (lhs.size() != 1) fail(line, "map line must name one base variable");
    auto it = std::find(out.base_vars.begin(), out.base_vars.end(), lhs[0]);
    if (it == out.base_vars.end()) fail(line, "'" + lhs[0] + "' is not a base variable");
    auto& slot = images[static_cast<std::size_t>(it - out.base_vars.begin())];
    if (slot) fail(line, "duplicate map for '" + lhs[0] + "'");
    slot = commalg::parse_poly(line.rest.substr(eq + 1), out.vars, commalg::Order::Dp, line.number,
                               line.rest_column + eq + 1);
  }
  for (std::size_t k = 0; k < images.size(); ++k) {
    if (!images[k]) throw ParseError("no map given for base variable '" + out.base_vars[k] + "'", 1, 1);
    out.map.push_back(*images[k]);
  }
  if (fibre) {
    for (const auto& v : words(fibre->rest)) {
      auto it = std::find(out.vars.begin(), out.vars.end(), v);
      if (it == out.vars.end()) fail(*fibre, "'" + v + "' is not a chart variable");
      out.fibre_zero.push_back(static_cast<std::size_t>(it - out.vars.begin()));
    }
  }
  if (fibre_expect) out.fibre_expect = poly_at(*fibre_expect, out.vars);
  return out;
}

ChartFile load_chart_file(const std::filesystem::path& path) { return parse_chart_file(read_file(path)); }

namespace {

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

matfac::PolyMatrix matrix_from_json(const nlohmann::json& j, const std::vector<std::string>& vars,
                                    const std::string& what) {
  if (!j.is_array() || j.empty()) throw Error("'" + what + "' must be a non-empty array of rows");
  std::vector<std::vector<commalg::Poly>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw Error("'" + what + "' rows must be arrays");
    std::vector<commalg::Poly> r;
    for (const auto& e : row) {
      if (e.is_number_integer()) {
        r.push_back(commalg::Poly::constant(vars.size(), Rational(e.get<long>())));
      } else if (e.is_string()) {
        try {
          r.push_back(commalg::parse_poly(e.get<std::string>(), vars));
        } catch (const ParseError& err) {
          throw ParseError("in '" + what + "' entry \"" + e.get<std::string>() + "\": " + err.what(), err.line(),
                           err.column());
        }
      } else {
        throw Error("'" + what + "' entries must be strings or integers");
      }
    }
    rows.push_back(std::move(r));
  }
  try {
    return matfac::PolyMatrix(std::move(rows));
  } catch (const Error& err) {
    throw Error("'" + what + "': " + err.what());
  }
}

}  // namespace

MatrixFile parse_matrix_file(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("invalid JSON", line, col);
  }
  if (!j.is_object()) throw Error("matrix file must be a JSON object");
  for (const char* key : {"vars", "f", "phi", "psi"})
    if (!j.contains(key)) throw Error(std::string("matrix file is missing \"") + key + "\"");
  MatrixFile out;
  for (const auto& v : j.at("vars")) out.vars.push_back(v.get<std::string>());
  try {
    out.f = commalg::parse_poly(j.at("f").get<std::string>(), out.vars);
  } catch (const ParseError& err) {
    throw ParseError(std::string("in 'f': ") + err.what(), err.line(), err.column());
  }
  out.phi = matrix_from_json(j.at("phi"), out.vars, "phi");
  out.psi = matrix_from_json(j.at("psi"), out.vars, "psi");
  if (j.contains("arrows"))
    for (const auto& [name, m] : j.at("arrows").items())
      out.arrows.emplace(name, matrix_from_json(m, out.vars, "arrows." + name));
  if (j.contains("relation_display"))
    out.relation_display = matrix_from_json(j.at("relation_display"), out.vars, "relation_display");
  return out;
}

MatrixFile load_matrix_file(const std::filesystem::path& path) { return parse_matrix_file(read_file(path)); }

}  // namespace flopalg::io
