#ifndef NLIE_SUITE_HPP
#define NLIE_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "nlie/catalog.hpp"

namespace nlie {

/// One concrete catalog member.
struct CatalogSample {
  std::string label;  // e.g. "T43-c1 m=7 t=2 over Q"
  std::string id;
  CatalogParams params;
};

/// Every valid parameter combination with dimension in [min_dim, max_dim],
/// alpha in `alphas` (where the family takes one and it is nonzero in the
/// field) and every admissible t. The (n+1)-dim families use arity dim-1.
std::vector<CatalogSample> catalog_samples(int min_dim, int max_dim, Field f,
                                           const std::vector<std::string>& alphas = {"1", "2"},
                                           bool include_action_family = true);

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::vector<std::string> details;
  double seconds = 0;
};

struct SuiteOptions {
  unsigned threads = 1;
  std::uint64_t seed = 20240601;
};

constexpr int kCriteriaCount = 9;

/// Runs criterion `id` (1-based) of the regression suite.
CriterionResult run_criterion(int id, const SuiteOptions& options = {});
std::vector<CriterionResult> run_suite(const SuiteOptions& options = {});

}  // namespace nlie

#endif
