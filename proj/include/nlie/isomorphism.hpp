#ifndef NLIE_ISOMORPHISM_HPP
#define NLIE_ISOMORPHISM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nlie/algebra.hpp"

namespace nlie {

/// Basis-invariant summary. Equal fingerprints are necessary for
/// isomorphism, never sufficient.
struct Fingerprint {
  int arity = 0;
  int dim = 0;
  std::string field;
  std::size_t dim_derived = 0;
  std::size_t dim_center = 0;
  std::size_t dim_derived_center = 0;  // dim (L^1 ∩ Z)
  std::size_t dim_center2 = 0;         // second term of the upper central series
  std::vector<std::size_t> derived2;   // 2-derived series dims
  std::vector<std::size_t> derived3;   // 3-derived series dims, arity >= 3 only
  std::vector<std::size_t> lower_central;
  bool nilpotent = false;
  bool solvable2 = false;
  bool solvable3 = false;
  /// Exhaustive values, F_p inputs only, absent when over budget.
  std::optional<std::size_t> alpha;
  std::optional<std::size_t> beta;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

/// `ab_budget` caps the alpha/beta enumeration for F_p inputs (0 skips it).
Fingerprint fingerprint(const NLieAlgebra& l, std::uint64_t ab_budget = 200'000);

/// First field at which two fingerprints differ, or empty when equal.
std::string fingerprint_difference(const Fingerprint& a, const Fingerprint& b);

/// Structure constants in the basis given by the columns of `p`.
NLieAlgebra change_basis(const NLieAlgebra& l, const Matrix& p);

/// Seeded invertible matrix: entries in -2..2 over Q, uniform over F_p.
Matrix random_invertible(Field f, int m, std::uint64_t seed);
NLieAlgebra random_basis_change(const NLieAlgebra& l, std::uint64_t seed);

enum class IsoVerdict { yes, no, unknown };
std::string to_string(IsoVerdict v);

struct IsoOptions {
  std::uint64_t budget = 200'000;  // candidate images tested
  /// Reduce both algebras mod p first (Q inputs). A "no" there is only
  /// evidence for the Q question.
  std::optional<std::uint32_t> p;
};

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::unknown;
  /// Columns are the images of the second algebra's basis in the first:
  /// change_basis(first, witness) == second.
  std::optional<Matrix> witness;
  std::string reason;
  std::uint64_t nodes = 0;
  Field field;           // field the search ran over
  bool exhaustive = false;  // the search space was covered completely
};

/// Fingerprint comparison, then backtracking over images of a basis adapted
/// to characteristic subspaces. Over F_p the search is complete within
/// budget; over Q candidate coordinates are restricted to -2..2, so
/// the answer is yes or unknown unless the fingerprints differ.
IsoResult are_isomorphic(const NLieAlgebra& a, const NLieAlgebra& b, const IsoOptions& options = {});

}  // namespace nlie

#endif
