#ifndef NLIE_ALGEBRA_HPP
#define NLIE_ALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nlie/linalg.hpp"

namespace nlie {

/// Strictly increasing 0-based basis indices.
using IndexTuple = std::vector<int>;

/// Sorts `idx` in place and returns the sign of the sorting permutation,
/// or 0 if an index repeats.
int sort_with_sign(std::span<int> idx);

/// Number of strictly increasing k-tuples from 0..m-1, i.e. C(m, k).
std::size_t binomial(std::size_t m, std::size_t k);
/// All strictly increasing k-tuples from 0..m-1 in lexicographic order.
std::vector<IndexTuple> increasing_tuples(int m, int k);

/// Structure constants of an n-ary totally antisymmetric bracket. Only
/// strictly increasing tuples are stored; any other ordering is recovered
/// from the sign of its sorting permutation.
class StructureConstants {
 public:
  struct Entry {
    IndexTuple on;
    Vector value;
  };

  StructureConstants() = default;
  StructureConstants(Field f, int arity, int dim);

  Field field() const { return field_; }
  int arity() const { return arity_; }
  int dim() const { return dim_; }

  /// Sets [e_on] for a strictly increasing tuple; a zero value erases it.
  void set(const IndexTuple& on, Vector value);
  /// Sets [e_idx] for any ordering of distinct indices; the stored entry
  /// gets the appropriate sign.
  void set_bracket(IndexTuple idx, const Vector& value);
  /// nullptr when the tuple is absent (zero).
  const Vector* find(const IndexTuple& on) const;
  /// Nonzero entries in lexicographic order of their tuples.
  const std::vector<Entry>& entries() const { return entries_; }

  friend bool operator==(const StructureConstants& a, const StructureConstants& b);

 private:
  std::size_t rank_of(const IndexTuple& on) const;
  void validate_tuple(const IndexTuple& on) const;

  Field field_;
  int arity_ = 0;
  int dim_ = 0;
  std::vector<Entry> entries_;
  std::vector<int> slot_;  // combinatorial rank -> index into entries_, or -1
};

/// An n-Lie (Filippov) algebra given by structure constants.
class NLieAlgebra {
 public:
  NLieAlgebra() = default;
  NLieAlgebra(Field f, int arity, int dim);
  explicit NLieAlgebra(StructureConstants constants);

  const StructureConstants& constants() const { return constants_; }
  Field field() const { return constants_.field(); }
  int arity() const { return constants_.arity(); }
  int dim() const { return constants_.dim(); }
  bool fi_checked() const { return fi_checked_; }
  /// Set only after check_fundamental_identity succeeded on this table.
  void mark_fi_checked() { fi_checked_ = true; }

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  /// Takes 1-based indices, as written in tables.
  void set(std::initializer_list<int> one_based, const Vector& value);
  void set_entry(const IndexTuple& on, Vector value);

  bool is_abelian() const { return constants_.entries().empty(); }

  /// [e_i1, ..., e_in] for arbitrary (0-based) indices.
  Vector basis_bracket(std::span<const int> idx) const;
  /// Multilinear bracket of `arity()` vectors.
  Vector bracket(std::span<const Vector> args) const;

  Vector zero() const { return zero_vector(field(), dim()); }
  Vector unit(int i) const { return unit_vector(field(), dim(), i); }

  /// Equal structure constants; labels and the FI flag are ignored.
  friend bool operator==(const NLieAlgebra& a, const NLieAlgebra& b) {
    return a.constants_ == b.constants_;
  }

 private:
  StructureConstants constants_;
  std::vector<std::string> labels_;
  bool fi_checked_ = false;
};

/// A 2-ary NLieAlgebra.
class LieAlgebra {
 public:
  explicit LieAlgebra(NLieAlgebra algebra);
  const NLieAlgebra& algebra() const { return algebra_; }
  int dim() const { return algebra_.dim(); }
  Field field() const { return algebra_.field(); }

 private:
  NLieAlgebra algebra_;
};

struct FiViolation {
  IndexTuple x;  // n indices
  IndexTuple y;  // n-1 indices
  Vector residual;  // lhs - rhs
};

struct FiReport {
  bool holds = true;
  std::size_t instances_checked = 0;
  std::vector<FiViolation> violations;  // sorted by (x, y)
};

/// Checks [[x_1..x_n], y_2..y_n] = sum_i [x_1, .., [x_i, y_2..y_n], .., x_n]
/// over all increasing basis tuples x and y, which suffices by multilinearity.
FiReport check_fundamental_identity(const NLieAlgebra& l, unsigned threads = 1);

/// Span of [s_1, ..., s_n] over basis vectors s_i of S_i.
Subspace bracket_subspaces(const NLieAlgebra& l, std::span<const Subspace> args);

/// Runs the identity check and throws fi_violation (naming the first
/// violating tuple) when it fails; otherwise returns the algebra flagged.
NLieAlgebra validated(NLieAlgebra l);

std::string tuple_to_string(const IndexTuple& t);  // 1-based, "[1,2,3]"

}  // namespace nlie

#endif
