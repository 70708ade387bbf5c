#include "nlie/linalg.hpp"

#include <string>
#include <utility>

namespace nlie {

Vector zero_vector(Field f, std::size_t m) { return Vector(m, Scalar::zero(f)); }

Vector unit_vector(Field f, std::size_t m, std::size_t i) {
  Vector v = zero_vector(f, m);
  v.at(i) = Scalar::one(f);
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

void axpy(Vector& y, const Scalar& a, std::span<const Scalar> x) {
  require(y.size() == x.size(), ErrorCode::dimension_mismatch, "axpy length mismatch");
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

Vector scaled(const Scalar& a, std::span<const Scalar> x) {
  Vector out(x.begin(), x.end());
  for (auto& v : out) v *= a;
  return out;
}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == cols, ErrorCode::dimension_mismatch,
            "row " + std::to_string(r) + " has length " +
                std::to_string(rows[r].size()) + ", expected " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) {
      require(rows[r][c].field() == f, ErrorCode::field_mismatch,
              "entry over " + rows[r][c].field().to_string() + " in a matrix over " +
                  f.to_string());
      m.at(r, c) = rows[r][c];
    }
  }
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return Vector(s.begin(), s.end());
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
  require(v.size() == cols_, ErrorCode::dimension_mismatch, "matrix-vector size mismatch");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r)
      if (!at(r, c).is_zero()) out[r] += at(r, c) * v[c];
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  require(cols_ == rhs.rows_, ErrorCode::dimension_mismatch, "matrix product size mismatch");
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c)
        if (!rhs.at(k, c).is_zero()) out.at(r, c) += at(r, k) * rhs.at(k, c);
    }
  return out;
}

Matrix Matrix::inverse() const {
  require(rows_ == cols_, ErrorCode::dimension_mismatch, "inverse of a non-square matrix");
  std::size_t n = rows_;
  Matrix aug(field_, n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, n + r) = Scalar::one(field_);
  }
  std::vector<std::size_t> pivots;
  Matrix red = rref(aug, pivots);
  require(red.rows() == n && (n == 0 || pivots[n - 1] == n - 1),
          ErrorCode::invalid_argument, "matrix is singular");
  Matrix inv(field_, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = red.at(r, n + c);
  return inv;
}

Matrix rref(const Matrix& m, std::vector<std::size_t>& pivots) {
  Matrix a = m;
  pivots.clear();
  std::size_t rows = a.rows(), cols = a.cols(), lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t pivot = lead;
    while (pivot < rows && a.at(pivot, c).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != lead)
      for (std::size_t k = 0; k < cols; ++k) std::swap(a.at(pivot, k), a.at(lead, k));
    Scalar inv = a.at(lead, c).inverse();
    for (std::size_t k = c; k < cols; ++k) a.at(lead, k) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || a.at(r, c).is_zero()) continue;
      Scalar factor = a.at(r, c);
      for (std::size_t k = c; k < cols; ++k)
        if (!a.at(lead, k).is_zero()) a.at(r, k) -= factor * a.at(lead, k);
    }
    pivots.push_back(c);
    ++lead;
  }
  Matrix out(a.field(), lead, cols);
  for (std::size_t r = 0; r < lead; ++r)
    for (std::size_t k = 0; k < cols; ++k) out.at(r, k) = std::move(a.at(r, k));
  return out;
}

Matrix rref(const Matrix& m) {
  std::vector<std::size_t> pivots;
  return rref(m, pivots);
}

std::size_t rank(const Matrix& m) { return rref(m).rows(); }

Subspace Subspace::zero(Field f, std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(f, 0, ambient);
  return s;
}

Subspace Subspace::full(Field f, std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix::identity(f, ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::row_space(const Matrix& m) {
  Subspace s;
  s.ambient_ = m.cols();
  s.basis_ = rref(m, s.pivots_);
  return s;
}

Subspace Subspace::span(Field f, std::size_t ambient, const std::vector<Vector>& vectors) {
  return row_space(Matrix::from_rows(f, ambient, vectors));
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_vector(r));
  return out;
}

bool Subspace::contains(std::span<const Scalar> v) const {
  require(v.size() == ambient_, ErrorCode::dimension_mismatch,
          "vector of length " + std::to_string(v.size()) + " tested against ambient " +
              std::to_string(ambient_));
  // Eliminate against the pivots; what is left must vanish.
  Vector rest(v.begin(), v.end());
  for (std::size_t r = 0; r < dim(); ++r) {
    Scalar coeff = rest[pivots_[r]];
    if (coeff.is_zero()) continue;
    axpy(rest, -coeff, basis_.row(r));
  }
  return nlie::is_zero(rest);
}

bool Subspace::contains(const Subspace& w) const {
  require(w.ambient_ == ambient_, ErrorCode::dimension_mismatch, "ambient mismatch");
  if (w.dim() > dim()) return false;
  for (std::size_t r = 0; r < w.dim(); ++r)
    if (!contains(w.basis_.row(r))) return false;
  return true;
}

Subspace kernel(const Matrix& m) {
  std::vector<std::size_t> pivots;
  Matrix red = rref(m, pivots);
  std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> gens;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.field(), cols);
    v[free] = Scalar::one(m.field());
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red.at(r, free);
    gens.push_back(std::move(v));
  }
  return Subspace::span(m.field(), cols, gens);
}

namespace {

void check_compatible(const Subspace& u, const Subspace& w) {
  require(u.ambient_dim() == w.ambient_dim(), ErrorCode::dimension_mismatch,
          "subspaces live in F^" + std::to_string(u.ambient_dim()) + " and F^" +
              std::to_string(w.ambient_dim()));
  require(u.field() == w.field(), ErrorCode::field_mismatch,
          "subspaces over " + u.field().to_string() + " and " + w.field().to_string());
}

}  // namespace

Subspace subspace_sum(const Subspace& u, const Subspace& w) {
  check_compatible(u, w);
  auto rows = u.basis_vectors();
  for (auto& v : w.basis_vectors()) rows.push_back(std::move(v));
  return Subspace::span(u.field(), u.ambient_dim(), rows);
}

Subspace annihilator(const Subspace& u) { return kernel(u.basis()); }

Subspace subspace_intersect(const Subspace& u, const Subspace& w) {
  check_compatible(u, w);
  // U ∩ W = ann(ann U + ann W)
  return annihilator(subspace_sum(annihilator(u), annihilator(w)));
}

}  // namespace nlie
