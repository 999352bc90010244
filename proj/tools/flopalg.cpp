#include "flopalg/commalg/groebner.hpp"
#include "flopalg/commalg/singularity.hpp"
#include "flopalg/corpus/verify.hpp"
#include "flopalg/error.hpp"
#include "flopalg/findim/algebra.hpp"
#include "flopalg/freealg/parse.hpp"
#include "flopalg/gvinv/gvinv.hpp"
#include "flopalg/io/files.hpp"
#include "flopalg/isotest/isotest.hpp"
#include "flopalg/matfac/matfac.hpp"
#include "flopalg/ncgb/groebner.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

using namespace flopalg;
using json = nlohmann::ordered_json;

namespace {

enum Exit { Ok = 0, Mismatch = 1, Parse = 2, Inconclusive = 3 };

struct Report {
  std::string command;
  std::vector<std::string> inputs;  // file paths and inline expressions, hashed in order
  json result = json::object();
  json certificate = nullptr;
  std::string text;  // human-readable summary
  int exit_code = Ok;
};

std::string fnv1a(const std::vector<std::string>& parts) {
  std::uint64_t h = 14695981039346656037ull;
  for (const auto& p : parts) {
    for (unsigned char c : p) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= 0xff;  // separator
    h *= 1099511628211ull;
  }
  std::ostringstream ss;
  ss << std::hex;
  ss.width(16);
  ss.fill('0');
  ss << h;
  return ss.str();
}

std::vector<std::string> generator_names(const freealg::Alphabet& a) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < a.size(); ++k) out.push_back(a.name(static_cast<freealg::Letter>(k)));
  return out;
}

std::optional<std::size_t> degree_cap_from_env() {
  const char* env = std::getenv("FLOPALG_DEGREE_CAP");
  if (!env || !*env) return std::nullopt;
  char* end = nullptr;
  unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v == 0) throw Error("FLOPALG_DEGREE_CAP must be a positive integer");
  return static_cast<std::size_t>(v);
}

json dimension_json(const ncgb::DimensionResult& r, const freealg::Alphabet& a, bool with_words) {
  const auto& cert = r.certificate;
  json j;
  j["status"] = cert.finite() ? "finite" : "infinite_or_unknown";
  j["dimension"] = cert.dimension ? json(*cert.dimension) : json(nullptr);
  j["groebner_complete"] = r.basis.complete();
  json gb = json::array();
  for (const auto& g : r.basis.elements) gb.push_back(g.to_string());
  j["groebner_basis"] = gb;
  j["witness_degree"] = cert.witness_degree ? json(*cert.witness_degree) : json(nullptr);
  j["degree_cap"] = cert.degree_cap;
  if (with_words) {
    json words = json::array();
    for (const auto& w : cert.normal_words) words.push_back(freealg::to_string(w, a));
    j["normal_words"] = words;
  }
  j["diagnostics"] = cert.diagnostics;
  return j;
}

Report nc_command(const std::string& sub, const std::string& file, const std::string& poly) {
  Report rep;
  rep.command = "nc " + sub;
  rep.inputs = {io::read_file(file)};
  auto pres = io::parse_algebra(rep.inputs[0]);
  if (sub == "abelianize") {
    auto ab = findim::abelianize(pres);
    json rels = json::array();
    for (const auto& r : ab.relations) rels.push_back(r.to_string());
    auto r = ncgb::dimension(ab, degree_cap_from_env());
    rep.result = {{"name", ab.name}, {"generators", generator_names(*ab.alphabet)}, {"relations", rels}};
    rep.certificate = dimension_json(r, *ab.alphabet, true);
    rep.text = ab.name + ": relations " + rels.dump() + "\n";
    if (r.certificate.finite()) {
      rep.text += "dim " + std::to_string(*r.certificate.dimension) + "\n";
    } else {
      rep.text += "dimension not certified\n";
      rep.exit_code = Inconclusive;
    }
    return rep;
  }
  auto r = ncgb::dimension(pres, degree_cap_from_env());
  rep.certificate = dimension_json(r, *pres.alphabet, sub != "nf");
  if (!r.certificate.finite() && sub != "nf") {
    rep.result = {{"dimension", nullptr}};
    rep.text = "dimension not certified";
    for (const auto& d : r.certificate.diagnostics) rep.text += "\n  " + d;
    rep.text += "\n";
    rep.exit_code = Inconclusive;
    return rep;
  }
  if (sub == "dim") {
    rep.result = {{"dimension", *r.certificate.dimension}};
    rep.text = std::to_string(*r.certificate.dimension) + "\n";
  } else if (sub == "basis") {
    std::vector<std::string> words;
    for (const auto& w : r.certificate.normal_words) words.push_back(freealg::to_string(w, *pres.alphabet));
    rep.result = {{"dimension", words.size()}, {"basis", words}};
    for (const auto& w : words) rep.text += w + "\n";
  } else {
    rep.inputs.push_back(poly);
    auto p = freealg::parse_ncpoly(poly, pres.alphabet);
    auto nf = ncgb::normal_form(p, r.basis);
    rep.result = {{"input", p.to_string()}, {"normal_form", nf.to_string()}, {"complete", r.basis.complete()}};
    rep.text = nf.to_string() + "\n";
    if (!r.basis.complete()) rep.exit_code = Inconclusive;
  }
  return rep;
}

json certificate_json(const isotest::UnitCertificate& c) {
  json deductions = json::array();
  for (const auto& d : c.deductions)
    deductions.push_back({{"variable", c.variables[d.variable]}, {"evidence", d.evidence.to_string(c.variables)}});
  json gens = json::array();
  for (const auto& g : c.generators) gens.push_back(g.to_string(c.variables));
  json basis = json::array();
  for (const auto& g : c.basis.elements) basis.push_back(g.to_string(c.variables));
  return {{"kind", "unit_ideal"}, {"direction", c.direction}, {"variables", c.variables},
          {"deductions", deductions}, {"generators", gens}, {"groebner_basis", basis}, {"verified", c.verify()}};
}

Report isotest_command(const std::string& a, const std::string& b) {
  Report rep;
  rep.command = "isotest";
  rep.inputs = {io::read_file(a), io::read_file(b)};
  auto pa = io::parse_algebra(rep.inputs[0]);
  auto pb = io::parse_algebra(rep.inputs[1]);
  auto verdict = isotest::decide_iso(pa, pb, {});
  rep.result = {{"verdict", isotest::verdict_name(verdict)}};
  rep.text = std::string(isotest::verdict_name(verdict)) + "\n";
  if (const auto* n = std::get_if<isotest::NotIsomorphic>(&verdict)) {
    if (const auto* c = std::get_if<isotest::UnitCertificate>(&n->certificate)) {
      rep.certificate = certificate_json(*c);
      rep.text += "certificate: 1 lies in the constraint ideal of " + c->direction + "\n";
      for (const auto& d : c->deductions)
        rep.text += "  " + c->variables[d.variable] + " = 0 from " + d.evidence.to_string(c->variables) + "\n";
    } else {
      const auto& m = std::get<isotest::InvariantMismatch>(n->certificate);
      rep.certificate = {{"kind", "invariant_mismatch"}, {"invariant", m.invariant}, {"first", m.first}, {"second", m.second}};
      rep.text += m.invariant + ": " + m.first + " vs " + m.second + "\n";
    }
  } else if (const auto* iso = std::get_if<isotest::Isomorphic>(&verdict)) {
    rep.certificate = {{"kind", "witness"}, {"direction", iso->witness.direction}, {"images", iso->witness.image_text}};
    for (const auto& s : iso->witness.image_text) rep.text += "  " + s + "\n";
  } else {
    const auto& inc = std::get<isotest::Inconclusive>(verdict);
    rep.result["reason"] = inc.reason;
    rep.text += inc.reason + "\n";
    rep.exit_code = Inconclusive;
  }
  return rep;
}

Report gv_command(const std::string& file, std::size_t length) {
  Report rep;
  rep.command = "gv";
  rep.inputs = {io::read_file(file), std::to_string(length)};
  auto g = gvinv::gv_from_presentation(io::parse_algebra(rep.inputs[0]), length);
  json tuples = json::array();
  for (const auto& t : g.tuples) tuples.push_back(t.n);
  rep.result = {{"dim", g.dim}, {"dim_ab", g.dim_ab}, {"length", g.length}, {"tuples", tuples}, {"ambiguous", g.ambiguous()}};
  rep.text = "dim " + std::to_string(g.dim) + ", dim_ab " + std::to_string(g.dim_ab) + "\n";
  if (g.tuples.empty()) rep.text += "no GV tuple of length " + std::to_string(length) + "\n";
  for (const auto& t : g.tuples) {
    std::string s;
    for (auto n : t.n) s += (s.empty() ? "" : ",") + std::to_string(n);
    rep.text += "(" + s + ")\n";
  }
  if (g.ambiguous()) rep.text += "ambiguous: several tuples satisfy the dimension identity\n";
  return rep;
}

Report comm_command(const std::string& sub, const std::string& file, const std::string& order_name,
                    const std::vector<std::string>& ideal, const std::string& poly) {
  Report rep;
  rep.command = "comm " + sub;
  if (file.empty()) throw Error("no input file given");
  rep.inputs = {io::read_file(file), order_name};
  const auto order = commalg::parse_order(order_name);
  if (sub == "subst") {
    auto ch = io::parse_chart_file(rep.inputs[0]);
    auto pulled = commalg::substitute(ch.base_poly, ch.map);
    auto gb = commalg::buchberger({ch.relation});
    auto m = commalg::member(pulled, gb);
    rep.result = {{"chart", ch.name}, {"pullback", pulled.to_string(ch.vars)},
                  {"remainder", m.remainder.to_string(ch.vars)}, {"in_ideal", m.member}};
    rep.text = "pullback: " + pulled.to_string(ch.vars) + "\nremainder mod relation: " + m.remainder.to_string(ch.vars) + "\n";
    return rep;
  }
  io::PolyFile pf;
  if (sub == "smooth" && std::filesystem::path(file).extension() == ".chart") {
    auto ch = io::parse_chart_file(rep.inputs[0]);
    pf = {ch.name, ch.vars, ch.relation};
  } else {
    pf = io::parse_poly_file(rep.inputs[0]);
  }
  if (sub == "milnor" || sub == "tjurina") {
    auto v = sub == "milnor" ? commalg::milnor(pf.poly, order) : commalg::tjurina(pf.poly, order);
    rep.result = {{"poly", pf.name}, {"order", order_name}, {sub, v ? json(*v) : json(nullptr)}};
    rep.text = v ? std::to_string(*v) + "\n" : std::string("not finite\n");
    if (!v) rep.exit_code = Inconclusive;
  } else if (sub == "smooth") {
    auto s = commalg::hypersurface_smoothness(pf.poly);
    rep.result = {{"poly", pf.name}, {"verdict", commalg::smoothness_name(s.verdict)}, {"reason", s.reason}};
    json basis = json::array();
    for (const auto& g : s.basis.elements) basis.push_back(g.to_string(pf.vars));
    rep.certificate = {{"groebner_basis", basis},
                       {"singular_vdim", s.singular_vdim ? json(*s.singular_vdim) : json(nullptr)}};
    rep.text = std::string(commalg::smoothness_name(s.verdict)) + (s.reason.empty() ? "" : ": " + s.reason) + "\n";
    if (s.verdict == commalg::Smoothness::Inconclusive) rep.exit_code = Inconclusive;
  } else {
    // member: is the file's polynomial in the ideal generated by --ideal?
    std::vector<commalg::Poly> gens;
    for (const auto& g : ideal) {
      rep.inputs.push_back(g);
      gens.push_back(commalg::parse_poly(g, pf.vars, order));
    }
    if (!poly.empty()) rep.inputs.push_back(poly);
    auto target = poly.empty() ? pf.poly.with_order(order) : commalg::parse_poly(poly, pf.vars, order);
    if (gens.empty()) {
      // Default ideal: the Jacobian ideal of the file's polynomial.
      for (const auto& g : commalg::jacobian(pf.poly)) gens.push_back(g.with_order(order));
    }
    auto sb = commalg::standard_basis(gens, order);
    auto m = commalg::member(target, sb);
    json basis = json::array();
    for (const auto& g : sb.elements) basis.push_back(g.to_string(pf.vars));
    rep.result = {{"poly", target.to_string(pf.vars)}, {"order", order_name}, {"member", m.member},
                  {"remainder", m.remainder.to_string(pf.vars)}};
    rep.certificate = {{"standard_basis", basis}};
    rep.text = std::string(m.member ? "member" : "not a member") + " (remainder " + m.remainder.to_string(pf.vars) + ")\n";
  }
  return rep;
}

json matrix_json(const matfac::PolyMatrix& m, const std::vector<std::string>& vars) { return m.to_strings(vars); }

Report matfac_command(const std::string& sub, const std::string& file, const std::string& expr) {
  Report rep;
  rep.command = "matfac " + sub;
  rep.inputs = {io::read_file(file)};
  auto mf = io::parse_matrix_file(rep.inputs[0]);
  if (sub == "check") {
    auto c = matfac::check_matrix_factorization({mf.phi, mf.psi, mf.f});
    rep.result = {{"ok", c.ok}};
    if (!c.ok)
      rep.certificate = {{"residual_phi_psi", matrix_json(c.residual_phi_psi, mf.vars)},
                         {"residual_psi_phi", matrix_json(c.residual_psi_phi, mf.vars)}};
    rep.text = c.ok ? "phi*psi = psi*phi = f*I\n" : "not a matrix factorization\n";
    if (!c.ok) rep.exit_code = Mismatch;
    return rep;
  }
  rep.inputs.push_back(expr);
  auto r = matfac::check_quiver_relation(expr, mf.arrows, mf.psi, mf.f);
  rep.result = {{"expr", expr}, {"value", matrix_json(r.value, mf.vars)}, {"exactly_zero", r.exactly_zero},
                {"in_column_space", r.passed()}, {"degree_bound", r.membership.degree_bound}};
  if (r.membership.witness)
    rep.certificate = {{"G", matrix_json(r.membership.witness->g, mf.vars)},
                       {"H", matrix_json(r.membership.witness->h, mf.vars)}};
  if (r.exactly_zero) {
    rep.text = "zero\n";
  } else if (r.passed()) {
    rep.text = "in the column space of psi (M = psi*G + f*H)\n";
  } else {
    rep.text = "no witness with entries of degree <= " + std::to_string(r.membership.degree_bound) + "\n";
    rep.exit_code = Inconclusive;
  }
  return rep;
}

Report corpus_command(const std::string& dir) {
  Report rep;
  rep.command = "corpus verify";
  for (const char* f : {"lambda_con.alg", "gamma_con.alg", "lambda_con_ab.alg", "gamma_con_ab.alg", "f_R.poly",
                        "f_L.poly", "chart_u1.chart", "chart_u2.chart", "prop42_matrices.json"})
    rep.inputs.push_back(io::read_file(std::filesystem::path(dir) / f));
  auto results = corpus::verify_corpus(dir);
  json criteria = json::array();
  bool all = true;
  for (const auto& r : results) {
    criteria.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"details", r.details}});
    rep.text += std::string(r.passed ? "PASS" : "FAIL") + " " + std::to_string(r.id) + " " + r.title + "\n";
    for (const auto& d : r.details) rep.text += "       " + d + "\n";
    all = all && r.passed;
  }
  rep.result = {{"passed", all}, {"criteria", criteria}};
  if (!all) rep.exit_code = Mismatch;
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noncommutative and commutative algebra toolkit for contraction algebras"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit a JSON report");

  std::string file, file2, poly, expr, order = "dp", dir = "corpus";
  std::size_t length = 2;
  std::vector<std::string> ideal;
  std::function<Report()> action;

  auto* nc = app.add_subcommand("nc", "Noncommutative presentations");
  nc->require_subcommand(1);
  const std::map<std::string, std::string> nc_help = {{"dim", "Certified dimension"},
                                                      {"basis", "Normal-word basis"},
                                                      {"nf", "Normal form of an element"},
                                                      {"abelianize", "Dimension of the abelianization"}};
  for (const auto& [sub, help] : nc_help) {
    auto* s = nc->add_subcommand(sub, help);
    s->add_option("file", file, "Algebra file")->required();
    if (sub == "nf") s->add_option("--poly", poly, "Element to reduce")->required();
    s->callback([&, name = sub] { action = [&, name] { return nc_command(name, file, poly); }; });
  }

  auto* iso = app.add_subcommand("isotest", "Decide isomorphism of two local algebras");
  iso->add_option("a", file, "First algebra file")->required();
  iso->add_option("b", file2, "Second algebra file")->required();
  iso->callback([&] { action = [&] { return isotest_command(file, file2); }; });

  auto* gv = app.add_subcommand("gv", "GV tuples from dimensions");
  gv->add_option("file", file, "Algebra file")->required();
  gv->add_option("--length", length, "Curve length")->check(CLI::PositiveNumber);
  gv->callback([&] { action = [&] { return gv_command(file, length); }; });

  auto* comm = app.add_subcommand("comm", "Commutative computations");
  comm->require_subcommand(1);
  const std::map<std::string, std::string> comm_help = {
      {"milnor", "Milnor number at the origin"},
      {"tjurina", "Tjurina number at the origin"},
      {"smooth", "Smoothness of a hypersurface or chart"},
      {"member", "Ideal membership"},
      {"subst", "Pull the base polynomial back along a chart map"}};
  for (const auto& [sub, help] : comm_help) {
    auto* s = comm->add_subcommand(sub, help);
    const bool chart = sub == "subst" || sub == "smooth";
    auto* pos = s->add_option("file", file, chart ? "Chart or polynomial file" : "Polynomial file");
    auto* named = s->add_option("--poly", file, "Polynomial file");
    if (chart) named = s->add_option("--chart", file, "Chart file")->excludes(named);
    pos->excludes(named);
    s->add_option("--order", order, "dp (global) or ds (local)")->check(CLI::IsMember({"dp", "ds"}));
    if (sub == "member") {
      s->add_option("--ideal", ideal, "Ideal generator (repeatable; default: Jacobian ideal)");
      s->add_option("--element", poly, "Polynomial to test (default: the file's polynomial)");
    }
    s->callback([&, name = sub] { action = [&, name] { return comm_command(name, file, order, ideal, poly); }; });
  }

  auto* mf = app.add_subcommand("matfac", "Matrix factorizations and quiver relations");
  mf->require_subcommand(1);
  auto* check = mf->add_subcommand("check", "Check phi * psi = f * I = psi * phi");
  check->add_option("file", file, "Matrix JSON file")->required();
  check->callback([&] { action = [&] { return matfac_command("check", file, ""); }; });
  auto* rel = mf->add_subcommand("relation", "Evaluate a quiver relation and test membership");
  rel->add_option("file", file, "Matrix JSON file")->required();
  rel->add_option("--expr", expr, "Expression in the arrows")->required();
  rel->callback([&] { action = [&] { return matfac_command("relation", file, expr); }; });

  auto* corpus = app.add_subcommand("corpus", "Regression corpus");
  corpus->require_subcommand(1);
  auto* verify = corpus->add_subcommand("verify", "Run every regression criterion");
  verify->add_option("--dir", dir, "Corpus directory");
  verify->callback([&] { action = [&] { return corpus_command(dir); }; });

  CLI11_PARSE(app, argc, argv);

  const auto start = std::chrono::steady_clock::now();
  Report rep;
  try {
    rep = action();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    if (as_json)
      std::cout << json{{"error", "parse"}, {"line", e.line()}, {"column", e.column()}, {"message", e.what()}}.dump(2)
                << "\n";
    return Parse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (as_json) std::cout << json{{"error", "failure"}, {"message", e.what()}}.dump(2) << "\n";
    return Mismatch;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (as_json) {
    json out;
    out["command"] = rep.command;
    out["inputs_digest"] = fnv1a(rep.inputs);
    out["result"] = rep.result;
    out["certificate"] = rep.certificate;
    out["timing_ms"] = ms;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << rep.text;
  }
  return rep.exit_code;
}
