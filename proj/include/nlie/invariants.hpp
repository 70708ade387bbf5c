#ifndef NLIE_INVARIANTS_HPP
#define NLIE_INVARIANTS_HPP

#include <map>
#include <optional>
#include <vector>

#include "nlie/algebra.hpp"

namespace nlie {

enum class SeriesKind { s_derived, lower_central };

struct SeriesReport {
  SeriesKind kind = SeriesKind::s_derived;
  int s = 0;  // only for s_derived
  /// terms[0] is the input ideal. When the series stabilizes, the repeated
  /// term is included once so the stall is visible.
  std::vector<Subspace> terms;
  bool stabilized = false;
  bool terminated_at_zero = false;
  /// Stopped early by the caller's step limit.
  bool truncated = false;

  std::vector<std::size_t> dims() const;
};

struct SubspaceClass {
  bool is_subalgebra = false;
  bool is_ideal = false;
  bool is_abelian_subalgebra = false;
  bool is_abelian_ideal = false;
  bool is_hypo_abelian_ideal = false;
};

Subspace derived_algebra(const NLieAlgebra& l);
Subspace center(const NLieAlgebra& l);

/// I^(0,s) = I, I^(k+1,s) = [I^(k,s) (s times), L, ..., L]. Throws
/// not_an_ideal when I is not an ideal. max_steps < 0 means unlimited.
SeriesReport s_derived_series(const NLieAlgebra& l, const Subspace& ideal, int s,
                              int max_steps = -1);
/// I^0 = I, I^k = [I^(k-1), I, L, ..., L].
SeriesReport lower_central_series(const NLieAlgebra& l, const Subspace& ideal,
                                  int max_steps = -1);

bool is_subalgebra(const NLieAlgebra& l, const Subspace& s);
bool is_ideal(const NLieAlgebra& l, const Subspace& s);
SubspaceClass classify_subspace(const NLieAlgebra& l, const Subspace& s);

bool is_s_solvable(const NLieAlgebra& l, int s);
bool is_nilpotent(const NLieAlgebra& l);
bool is_2step_s_solvable(const NLieAlgebra& l, int s);

struct InvariantReport {
  int arity = 0;
  int dim = 0;
  std::size_t dim_derived = 0;
  std::size_t dim_center = 0;
  /// s -> dimension sequence of the s-derived series of L, s = 2..arity.
  std::map<int, std::vector<std::size_t>> derived_dims;
  std::vector<std::size_t> lower_central_dims;
  bool nilpotent = false;
  std::map<int, bool> solvable;  // s -> s-solvable
  std::map<int, bool> two_step;  // s -> 2-step s-solvable
};

InvariantReport invariant_report(const NLieAlgebra& l);

}  // namespace nlie

#endif
