#ifndef NLIE_CATALOG_HPP
#define NLIE_CATALOG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nlie/abelian_search.hpp"
#include "nlie/algebra.hpp"

namespace nlie {

// ---------------------------------------------------------------------------
// Constructions

/// [x, y]_0 = [x, y, w] on the same space. Throws fi_violation if the result
/// is not a Lie algebra (cannot happen for a valid 3-Lie algebra).
LieAlgebra associated_lie(const NLieAlgebra& l, const Vector& w);

/// Checks the Jacobi identity; throws fi_violation when it fails.
LieAlgebra validated_lie(NLieAlgebra l);

/// Adjoins w as a new last basis vector: [x, y, z] = 0, [x, y, w] = [x, y]_0.
NLieAlgebra trivial_extension(const LieAlgebra& j0);

/// Block sum with zero cross brackets; basis of `a` first.
NLieAlgebra direct_sum(const NLieAlgebra& a, const NLieAlgebra& b);

/// Mixed bracket [e_i, e_j, f_k] of A_4 acting on tau (all indices 1-based,
/// 1 <= i < j <= 4, 1 <= k <= dim tau); value lies in tau.
struct ActionEntry {
  int i = 0;
  int j = 0;
  int k = 0;
  Vector value;
};

/// A_4 on e_1..e_4 plus tau on e_5..e_m with the given mixed brackets and
/// every bracket with two or more tau arguments zero. Throws fi_violation
/// when the action does not give a 3-Lie algebra.
NLieAlgebra semidirect_a4(Field f, int m, const std::vector<ActionEntry>& action);

// ---------------------------------------------------------------------------
// Catalog

struct CatalogParams {
  std::optional<int> dim;  // m
  int n = 3;               // arity of the (n+1)-dim tables and A(n)
  int r = 0;               // d_r
  int t = 0;               // pair count, 0 = maximal
  std::string alpha = "1"; // c_2 and b^6 parameter, parsed over `field`
  Field field = Field::rationals();
  std::vector<ActionEntry> action;  // T44-3
};

struct CatalogFamily {
  std::string id;
  std::string summary;
  int min_dim;        // for families with a free dimension; else the fixed dimension
  bool free_dim;
  bool takes_alpha;
  bool takes_t;
};

const std::vector<CatalogFamily>& catalog_families();

/// The multiplication table exactly as specified, without the identity check.
NLieAlgebra catalog_table(const std::string& id, const CatalogParams& params);
/// catalog_table followed by the fundamental-identity check.
NLieAlgebra catalog_build(const std::string& id, const CatalogParams& params);

/// Lie algebras used as inputs to the constructions: abelian, affine,
/// heisenberg, so3-core, upper, strictly-upper. `size` is the dimension for
/// abelian, k for heisenberg (dim 2k+1) and the matrix size for the
/// triangular families.
LieAlgebra lie_catalog_build(const std::string& id, int size, Field f = Field::rationals());
std::vector<std::string> lie_catalog_ids();

/// Structure constants of the matrix Lie algebra spanned by `basis` under
/// the commutator; throws invalid_argument if the span is not closed.
LieAlgebra matrix_lie_algebra(Field f, const std::vector<Matrix>& basis);

// ---------------------------------------------------------------------------
// Trichotomy for 3-Lie algebras

enum class Trichotomy { three_solvable, simple_a4, a4_semidirect, unknown };
std::string to_string(Trichotomy t);

struct TrichotomyOptions {
  /// Prime used for subspace searches when the algebra is over Q.
  std::uint32_t p = 3;
  SearchOptions search;
};

struct TrichotomyVerdict {
  Trichotomy verdict = Trichotomy::unknown;
  std::vector<std::size_t> series_dims;  // 3-derived series
  std::optional<Subspace> tau;
  std::optional<Subspace> s;
  std::uint32_t p = 0;  // prime the searches ran over
  std::string evidence;
};

TrichotomyVerdict classify_trichotomy(const NLieAlgebra& l, const TrichotomyOptions& options = {});

}  // namespace nlie

#endif
