#ifndef NLIE_ABELIAN_SEARCH_HPP
#define NLIE_ABELIAN_SEARCH_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "nlie/algebra.hpp"

namespace nlie {

/// Number of k-dimensional subspaces of F_p^m.
mpz_class gaussian_binomial(int m, int k, std::uint32_t p);

/// Streams every k-dimensional subspace of F_p^m exactly once, ordered by
/// pivot profile (lexicographic) and then by the free RREF entries.
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(int m, int k, std::uint32_t p);
  ~SubspaceEnumerator();
  SubspaceEnumerator(SubspaceEnumerator&&) noexcept;
  SubspaceEnumerator& operator=(SubspaceEnumerator&&) noexcept;

  /// Writes the next subspace into `out`; false once exhausted.
  bool next(Subspace& out);

 private:
  struct State;
  std::unique_ptr<State> state_;
};

struct SearchOptions {
  std::uint64_t budget = 10'000'000;  // subspaces tested, counted serially
  unsigned threads = 1;
};

enum class SearchMode { exact_fp, lower_bound_q };

struct AlphaBetaResult {
  SearchMode mode = SearchMode::exact_fp;
  std::uint32_t p = 0;  // exact_fp only
  /// Exact values when `tight()`, otherwise certified lower bounds.
  std::size_t alpha = 0;
  std::size_t beta = 0;
  std::size_t alpha_upper = 0;
  std::size_t beta_upper = 0;
  std::optional<Subspace> alpha_witness;  // absent when alpha == 0
  std::optional<Subspace> beta_witness;   // absent when beta == 0
  std::uint64_t subspaces_scanned = 0;
  /// exact_fp: false when the budget ran out before both values were pinned.
  bool complete = true;

  bool tight() const { return alpha == alpha_upper && beta == beta_upper; }
};

/// Exhaustive alpha/beta over F_p: scans dimensions downward from m (alpha)
/// and from alpha (beta); the witness is the first hit in canonical order.
AlphaBetaResult alpha_beta_exact_fp(const NLieAlgebra& l, const SearchOptions& options = {});

/// Greedy lower bounds valid over any field, plus the universal upper bounds.
AlphaBetaResult abelian_bounds_q(const NLieAlgebra& l);

/// Entry-wise reduction; throws invalid_argument if p divides a denominator.
NLieAlgebra reduce_mod_p(const NLieAlgebra& l, std::uint32_t p);
/// True when every constant has a denominator prime to p.
bool reducible_mod_p(const NLieAlgebra& l, std::uint32_t p);

enum class SubspacePredicate {
  abelian_subalgebra,
  abelian_ideal,
  hypo_abelian_ideal,
  ideal,
};

struct SubspaceSearch {
  std::optional<Subspace> witness;
  std::uint64_t scanned = 0;
  bool complete = true;
};

/// First k-dimensional subspace over F_p, in canonical order, that
/// satisfies `pred`. The algebra must be over F_p.
SubspaceSearch find_subspace(const NLieAlgebra& l, int k, SubspacePredicate pred,
                             const SearchOptions& options = {});

// ---------------------------------------------------------------------------
// Claim verification

struct Claims {
  std::optional<std::size_t> dim_derived;
  std::optional<std::size_t> dim_center;
  std::optional<std::size_t> alpha;
  std::optional<std::size_t> beta;
  std::optional<bool> nilpotent;
  std::optional<bool> solvable2;
  std::optional<bool> solvable3;
};

enum class ClaimStatus { pass, fail, unverifiable };

struct ClaimCheck {
  std::string name;
  std::string expected;
  std::string observed;
  std::string method;
  ClaimStatus status = ClaimStatus::unverifiable;
};

struct ClaimsReport {
  std::vector<ClaimCheck> checks;
  bool all_pass() const;
};

struct VerifyOptions {
  /// Primes for exhaustive alpha/beta when the algebra is over Q; at least
  /// two must be usable and all must agree.
  std::vector<std::uint32_t> primes{2, 3, 5};
  SearchOptions search;
};

ClaimsReport verify_claims(const NLieAlgebra& l, const Claims& claims,
                           const VerifyOptions& options = {});

std::string to_string(ClaimStatus s);

}  // namespace nlie

#endif
