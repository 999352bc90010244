#pragma once

#include "flopalg/commalg/groebner.hpp"
#include "flopalg/findim/algebra.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace flopalg::isotest {

using commalg::Poly;

/// Generator images with fresh parameters: images[g] = sum_i p_{g,i} * basis[i]
/// over the target's radical basis (i >= 1). The parameter ring carries one
/// extra trailing variable `t` reserved for the surjectivity condition.
struct GenericMap {
  ncgb::Presentation source;
  findim::Algebra target;
  /// Parameter names followed by "t".
  std::vector<std::string> variables;
  std::vector<findim::ParamElement> images;

  std::size_t parameter_count() const { return variables.size() - 1; }
  std::size_t rabinowitsch_variable() const { return variables.size() - 1; }
  /// Parameter index of the coefficient of target basis word `basis_index` in the image of `generator`.
  std::size_t parameter(std::size_t generator, std::size_t basis_index) const;
};

/// Throws when the target is not local or the source has relations outside
/// the square of the augmentation ideal.
GenericMap generic_map(const ncgb::Presentation& source, const findim::Algebra& target);

/// Nonzero coordinates of the image of `identity` (a polynomial in the source generators).
std::vector<Poly> image_constraints(const GenericMap& gm, const freealg::NCPoly& identity);

struct ConstraintIdeal {
  std::vector<std::string> variables;
  std::vector<Poly> generators;
};

/// Every coordinate of the image of every source relation.
ConstraintIdeal constraint_ideal(const GenericMap& gm);

/// Determinant of the matrix of coefficients of the generator images on the
/// target's length-one basis words (linear parts modulo J^2).
Poly linear_part_determinant(const GenericMap& gm);

/// Variable v set to zero, justified by `evidence` = c * v^k * m where every
/// variable of m is invertible (a factor of the monomial determinant).
struct Deduction {
  std::size_t variable;
  Poly evidence;
};

struct Stage {
  /// Human-readable identity, e.g. "a^3" or "b*a + a*b".
  std::string identity;
  /// "derived" for generator nilpotency identities, "relation" otherwise.
  std::string origin;
  /// Coordinates of the image after substituting the zeros known when the stage starts.
  std::vector<Poly> constraints;
  /// Coordinates of the image with no substitution.
  std::vector<Poly> raw_constraints;
  std::vector<Deduction> deductions;
};

struct StagedResult {
  std::vector<Stage> stages;
  std::vector<std::size_t> zero_variables;
  /// Accumulated constraints with all known zeros substituted.
  std::vector<Poly> residual_constraints;
  Poly determinant;
  bool contradiction = false;
  std::optional<Poly> contradiction_evidence;
};

/// Replays the staged argument: nilpotency identities g^k = 0 of the source
/// generators (when k is below the target's Loewy length), then each source
/// relation, deducing vanishing parameters from monomial constraints.
StagedResult staged_pipeline(const GenericMap& gm);

/// Commutative certificate that no surjective generator map exists.
struct UnitCertificate {
  std::string direction;
  std::vector<std::string> variables;
  /// Image coordinates of the imposed identities, before any substitution.
  std::vector<Poly> original_constraints;
  /// Linear-part determinant before any substitution.
  Poly determinant;
  std::vector<Deduction> deductions;
  /// Ideal shown to be the unit ideal: residual constraints, the deduced
  /// variables and t * det - 1.
  std::vector<Poly> generators;
  commalg::StandardBasis basis;

  /// Replays every deduction against the original constraints, checks that
  /// each generator is accounted for, recomputes the basis and checks that 1
  /// reduces to 0 against the stored basis.
  bool verify() const;
};

struct Witness {
  std::string direction;
  /// Rational coordinates of each source generator's image in the target basis.
  std::vector<findim::Vector> images;
  std::vector<std::string> image_text;
};

/// Relations map to zero and the linear-part matrix is invertible.
bool verify_witness(const ncgb::Presentation& source, const findim::Algebra& target,
                    const std::vector<findim::Vector>& images);

struct InvariantMismatch {
  std::string invariant;
  std::string first;
  std::string second;
};

struct NotIsomorphic {
  std::variant<UnitCertificate, InvariantMismatch> certificate;
};
struct Isomorphic {
  Witness witness;
};
struct Inconclusive {
  std::string reason;
};

using IsoVerdict = std::variant<NotIsomorphic, Isomorphic, Inconclusive>;

std::string_view verdict_name(const IsoVerdict& v);

/// Result of the Rabinowitsch route without staging.
struct AutomaticResult {
  bool unit = false;
  bool finished = true;
  ConstraintIdeal ideal;
  commalg::StandardBasis basis;
};

AutomaticResult automatic_unit_test(const GenericMap& gm, const commalg::BuchbergerOptions& options = {});

struct IsoOptions {
  commalg::BuchbergerOptions buchberger{.max_pairs = 20000};
  std::size_t witness_budget = 2000000;
};

/// Isomorphism decision for finite-dimensional local algebras. Throws
/// flopalg::Error when either input is not certified finite-dimensional and local.
IsoVerdict decide_iso(const ncgb::Presentation& a, const ncgb::Presentation& b, const IsoOptions& options = {});

/// Bounded search for a rational witness with coordinates in {0, +-1, +-2, +-1/2},
/// sparsest candidates first. Parameters listed in `zero_parameters` stay zero.
std::optional<Witness> search_witness(const GenericMap& gm, const std::vector<Poly>& constraints,
                                      const std::vector<std::size_t>& zero_parameters, std::size_t budget);

}  // namespace flopalg::isotest
