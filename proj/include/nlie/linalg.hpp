#ifndef NLIE_LINALG_HPP
#define NLIE_LINALG_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "nlie/scalar.hpp"

namespace nlie {

using Vector = std::vector<Scalar>;

Vector zero_vector(Field f, std::size_t m);
Vector unit_vector(Field f, std::size_t m, std::size_t i);
bool is_zero(std::span<const Scalar> v);
/// y += a * x
void axpy(Vector& y, const Scalar& a, std::span<const Scalar> x);
Vector scaled(const Scalar& a, std::span<const Scalar> x);

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(Field f, std::size_t n);
  /// Every row must have length `cols` and lie over `f`.
  static Matrix from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::span<const Scalar> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<Scalar> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;
  Vector column(std::size_t c) const;

  Matrix transpose() const;
  Vector apply(std::span<const Scalar> v) const;
  Matrix operator*(const Matrix& rhs) const;
  /// Throws invalid_argument when singular.
  Matrix inverse() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

/// Reduced row echelon form with zero rows dropped.
Matrix rref(const Matrix& m);
Matrix rref(const Matrix& m, std::vector<std::size_t>& pivots);
std::size_t rank(const Matrix& m);

/// A subspace of F^m held by its canonical RREF basis, so equality of
/// subspaces is equality of representations.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(Field f, std::size_t ambient);
  static Subspace full(Field f, std::size_t ambient);
  static Subspace span(Field f, std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace row_space(const Matrix& m);

  Field field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  const Matrix& basis() const { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }
  std::vector<Vector> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& w) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : M v = 0}
Subspace kernel(const Matrix& m);
Subspace subspace_sum(const Subspace& u, const Subspace& w);
Subspace subspace_intersect(const Subspace& u, const Subspace& w);
/// Annihilator under the standard pairing: {v : <u, v> = 0 for all u in U}.
Subspace annihilator(const Subspace& u);

}  // namespace nlie

#endif
