#pragma once

#include "flopalg/freealg/overlap.hpp"
#include "flopalg/ncgb/presentation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace flopalg::ncgb {

enum class Status { Complete, Truncated };

/// Inter-reduced, monic two-sided Groebner basis.
struct GroebnerBasis {
  AlphabetPtr alphabet;
  std::vector<NCPoly> elements;  // sorted ascending by leading word
  Status status = Status::Complete;
  /// Degree cap that stopped the completion when status is Truncated.
  std::size_t truncated_at = 0;

  bool complete() const { return status == Status::Complete; }
  std::vector<Word> leading_words() const;
};

/// Completes `pres` by resolving overlap and inclusion ambiguities in order of
/// (ambiguity degree, ambiguity word). Ambiguities above `degree_cap` are left
/// pending and the result is flagged Truncated.
GroebnerBasis complete(const Presentation& pres, std::size_t degree_cap);

/// Fully reduced representative of p modulo the basis.
NCPoly normal_form(const NCPoly& p, const GroebnerBasis& gb);

/// True when no leading word of the basis is a factor of `word`.
bool is_normal(const Word& word, const GroebnerBasis& gb);

struct AmbiguityCheck {
  std::size_t first;   // index into gb.elements
  std::size_t second;  // index into gb.elements
  freealg::Ambiguity ambiguity;
  NCPoly residue;  // normal form of the S-polynomial
};

/// S-polynomial attached to one ambiguity between elements `i` and `j`.
NCPoly s_polynomial(const GroebnerBasis& gb, std::size_t i, std::size_t j,
                    const freealg::Ambiguity& amb);

/// Exhaustive Diamond-Lemma check: every ambiguity whose S-polynomial does not
/// reduce to zero. Empty iff the basis is confluent.
std::vector<AmbiguityCheck> unresolved_ambiguities(const GroebnerBasis& gb);

enum class DimensionStatus { Finite, InfiniteOrUnknown };

struct DimensionCertificate {
  DimensionStatus status = DimensionStatus::InfiniteOrUnknown;
  std::optional<std::size_t> dimension;
  /// Normal words in ascending degree-lex order.
  std::vector<Word> normal_words;
  /// First degree with no normal words.
  std::optional<std::size_t> witness_degree;
  std::size_t degree_cap = 0;
  std::vector<std::string> diagnostics;

  bool finite() const { return status == DimensionStatus::Finite; }
};

/// Enumerates normal words by increasing degree up to `cap`, stopping at the
/// first empty degree. A Truncated basis yields InfiniteOrUnknown.
DimensionCertificate normal_words(const GroebnerBasis& gb, std::size_t cap);

/// Initial degree cap: 2 * (max relation degree) + 4.
std::size_t default_degree_cap(const Presentation& pres);

struct DimensionResult {
  GroebnerBasis basis;
  DimensionCertificate certificate;
};

/// complete + normal_words, doubling the cap up to four attempts in total
/// starting from `initial_cap` (default_degree_cap when absent).
DimensionResult dimension(const Presentation& pres, std::optional<std::size_t> initial_cap = std::nullopt);

}  // namespace flopalg::ncgb
