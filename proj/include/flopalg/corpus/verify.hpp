#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace flopalg::corpus {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  /// One line per individual check, prefixed "ok" or "FAIL".
  std::vector<std::string> details;
  double elapsed_ms = 0;
};

/// Runs every regression criterion against the files in `dir`. Results are in
/// criterion order; independent criteria run concurrently.
std::vector<CriterionResult> verify_corpus(const std::filesystem::path& dir);

/// Runs a single criterion (1..11).
CriterionResult verify_criterion(const std::filesystem::path& dir, int id);

constexpr int criterion_count = 11;

}  // namespace flopalg::corpus
