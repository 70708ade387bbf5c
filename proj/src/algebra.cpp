#include "nlie/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "parallel.hpp"

namespace nlie {

int sort_with_sign(std::span<int> idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i - 1] == idx[i]) return 0;
  return sign;
}

std::size_t binomial(std::size_t m, std::size_t k) {
  if (k > m) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (m - k + i) / i;
  return r;
}

std::vector<IndexTuple> increasing_tuples(int m, int k) {
  std::vector<IndexTuple> out;
  if (k < 0 || k > m) return out;
  IndexTuple t(k);
  for (int i = 0; i < k; ++i) t[i] = i;
  for (;;) {
    out.push_back(t);
    int i = k - 1;
    while (i >= 0 && t[i] == m - k + i) --i;
    if (i < 0) break;
    ++t[i];
    for (int j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

std::string tuple_to_string(const IndexTuple& t) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i] + 1;
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------

StructureConstants::StructureConstants(Field f, int arity, int dim)
    : field_(f), arity_(arity), dim_(dim) {
  require(arity >= 2, ErrorCode::invalid_argument, "arity must be at least 2");
  require(dim >= 1, ErrorCode::invalid_argument, "dimension must be at least 1");
  slot_.assign(binomial(dim, arity), -1);
}

std::size_t StructureConstants::rank_of(const IndexTuple& on) const {
  std::size_t r = 0;
  for (std::size_t j = 0; j < on.size(); ++j) r += binomial(on[j], j + 1);
  return r;
}

void StructureConstants::validate_tuple(const IndexTuple& on) const {
  require(static_cast<int>(on.size()) == arity_, ErrorCode::invalid_argument,
          "tuple " + tuple_to_string(on) + " does not have " + std::to_string(arity_) +
              " entries");
  for (std::size_t i = 0; i < on.size(); ++i) {
    require(on[i] >= 0 && on[i] < dim_, ErrorCode::invalid_argument,
            "index out of range in " + tuple_to_string(on));
    require(i == 0 || on[i - 1] < on[i], ErrorCode::invalid_argument,
            "tuple " + tuple_to_string(on) + " is not strictly increasing");
  }
}

void StructureConstants::set(const IndexTuple& on, Vector value) {
  validate_tuple(on);
  require(static_cast<int>(value.size()) == dim_, ErrorCode::dimension_mismatch,
          "bracket value has length " + std::to_string(value.size()));
  for (const auto& x : value)
    require(x.field() == field_, ErrorCode::field_mismatch,
            "bracket value over " + x.field().to_string());
  std::size_t r = rank_of(on);
  int s = slot_[r];
  bool zero = is_zero(value);
  if (s >= 0) {
    if (!zero) {
      entries_[s].value = std::move(value);
      return;
    }
    entries_.erase(entries_.begin() + s);
  } else {
    if (zero) return;
    auto pos = std::lower_bound(entries_.begin(), entries_.end(), on,
                                [](const Entry& e, const IndexTuple& t) { return e.on < t; });
    entries_.insert(pos, Entry{on, std::move(value)});
  }
  std::fill(slot_.begin(), slot_.end(), -1);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    slot_[rank_of(entries_[i].on)] = static_cast<int>(i);
}

void StructureConstants::set_bracket(IndexTuple idx, const Vector& value) {
  int sign = sort_with_sign(idx);
  require(sign != 0, ErrorCode::invalid_argument,
          "bracket with a repeated index " + tuple_to_string(idx));
  set(idx, sign > 0 ? value : scaled(Scalar::from_int(field_, -1), value));
}

const Vector* StructureConstants::find(const IndexTuple& on) const {
  int s = slot_[rank_of(on)];
  return s < 0 ? nullptr : &entries_[s].value;
}

bool operator==(const StructureConstants& a, const StructureConstants& b) {
  if (a.field_ != b.field_ || a.arity_ != b.arity_ || a.dim_ != b.dim_) return false;
  if (a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i)
    if (a.entries_[i].on != b.entries_[i].on || a.entries_[i].value != b.entries_[i].value)
      return false;
  return true;
}

// ---------------------------------------------------------------------------

NLieAlgebra::NLieAlgebra(Field f, int arity, int dim) : constants_(f, arity, dim) {}

NLieAlgebra::NLieAlgebra(StructureConstants constants) : constants_(std::move(constants)) {}

void NLieAlgebra::set_labels(std::vector<std::string> labels) {
  require(labels.empty() || static_cast<int>(labels.size()) == dim(),
          ErrorCode::invalid_argument, "expected " + std::to_string(dim()) + " labels");
  labels_ = std::move(labels);
}

void NLieAlgebra::set(std::initializer_list<int> one_based, const Vector& value) {
  IndexTuple idx;
  for (int i : one_based) idx.push_back(i - 1);
  constants_.set_bracket(std::move(idx), value);
  fi_checked_ = false;
}

void NLieAlgebra::set_entry(const IndexTuple& on, Vector value) {
  constants_.set(on, std::move(value));
  fi_checked_ = false;
}

Vector NLieAlgebra::basis_bracket(std::span<const int> idx) const {
  require(static_cast<int>(idx.size()) == arity(), ErrorCode::dimension_mismatch,
          "bracket takes " + std::to_string(arity()) + " arguments");
  IndexTuple sorted(idx.begin(), idx.end());
  for (int i : sorted)
    require(i >= 0 && i < dim(), ErrorCode::dimension_mismatch, "basis index out of range");
  int sign = sort_with_sign(sorted);
  if (sign == 0) return zero();
  const Vector* v = constants_.find(sorted);
  if (!v) return zero();
  return sign > 0 ? *v : scaled(Scalar::from_int(field(), -1), *v);
}

namespace {

// det of the k x k matrix rows[a][cols[b]] by elimination
Scalar minor_det(std::span<const Vector> rows, const IndexTuple& cols, Field f) {
  std::size_t k = cols.size();
  std::vector<Scalar> a;
  a.reserve(k * k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) a.push_back(rows[r][cols[c]]);
  Scalar det = Scalar::one(f);
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (p < k && a[p * k + c].is_zero()) ++p;
    if (p == k) return Scalar::zero(f);
    if (p != c) {
      for (std::size_t j = 0; j < k; ++j) std::swap(a[p * k + j], a[c * k + j]);
      det = -det;
    }
    det *= a[c * k + c];
    Scalar inv = a[c * k + c].inverse();
    for (std::size_t r = c + 1; r < k; ++r) {
      if (a[r * k + c].is_zero()) continue;
      Scalar factor = a[r * k + c] * inv;
      for (std::size_t j = c; j < k; ++j) a[r * k + j] -= factor * a[c * k + j];
    }
  }
  return det;
}

}  // namespace

Vector NLieAlgebra::bracket(std::span<const Vector> args) const {
  require(static_cast<int>(args.size()) == arity(), ErrorCode::dimension_mismatch,
          "bracket takes " + std::to_string(arity()) + " arguments, got " +
              std::to_string(args.size()));
  for (const auto& a : args) {
    require(static_cast<int>(a.size()) == dim(), ErrorCode::dimension_mismatch,
            "argument of length " + std::to_string(a.size()) + " in dimension " +
                std::to_string(dim()));
    for (const auto& x : a)
      require(x.field() == field(), ErrorCode::field_mismatch,
              "argument over " + x.field().to_string() + ", algebra over " +
                  field().to_string());
  }
  // Expanding every argument in the basis, the antisymmetric sum over each
  // increasing tuple I collapses to det(args restricted to I) * [e_I].
  Vector out = zero();
  for (const auto& e : constants_.entries()) {
    bool skip = false;
    for (const auto& a : args) {
      bool any = false;
      for (int c : e.on) any = any || !a[c].is_zero();
      if (!any) {
        skip = true;
        break;
      }
    }
    if (skip) continue;
    Scalar d = minor_det(args, e.on, field());
    if (!d.is_zero()) axpy(out, d, e.value);
  }
  return out;
}

LieAlgebra::LieAlgebra(NLieAlgebra algebra) : algebra_(std::move(algebra)) {
  require(algebra_.arity() == 2, ErrorCode::invalid_argument,
          "a Lie algebra needs arity 2, got " + std::to_string(algebra_.arity()));
}

// ---------------------------------------------------------------------------

namespace {

// [v, e_y...] with v expanded in the basis
Vector bracket_vector_first(const NLieAlgebra& l, std::span<const Scalar> v,
                            const IndexTuple& y) {
  Vector out = l.zero();
  IndexTuple idx(y.size() + 1);
  for (int t = 0; t < l.dim(); ++t) {
    if (v[t].is_zero()) continue;
    idx[0] = t;
    std::copy(y.begin(), y.end(), idx.begin() + 1);
    axpy(out, v[t], l.basis_bracket(idx));
  }
  return out;
}

}  // namespace

FiReport check_fundamental_identity(const NLieAlgebra& l, unsigned threads) {
  int n = l.arity();
  auto xs = increasing_tuples(l.dim(), n);
  auto ys = increasing_tuples(l.dim(), n - 1);
  std::vector<std::vector<FiViolation>> found(xs.size());

  detail::parallel_for(xs.size(), threads, [&](std::size_t xi) {
    const IndexTuple& x = xs[xi];
    Vector bx = l.basis_bracket(x);
    for (const auto& y : ys) {
      Vector lhs = bracket_vector_first(l, bx, y);
      Vector rhs = l.zero();
      for (int i = 0; i < n; ++i) {
        IndexTuple inner(n);
        inner[0] = x[i];
        std::copy(y.begin(), y.end(), inner.begin() + 1);
        Vector d = l.basis_bracket(inner);
        // [x_1, .., d, .., x_n] expanded over the coordinates of d
        IndexTuple outer = x;
        for (int t = 0; t < l.dim(); ++t) {
          if (d[t].is_zero()) continue;
          outer[i] = t;
          axpy(rhs, d[t], l.basis_bracket(outer));
        }
      }
      for (int t = 0; t < l.dim(); ++t) lhs[t] -= rhs[t];
      if (!is_zero(lhs)) found[xi].push_back(FiViolation{x, y, std::move(lhs)});
    }
  });

  FiReport report;
  report.instances_checked = xs.size() * ys.size();
  for (auto& f : found)
    for (auto& v : f) report.violations.push_back(std::move(v));
  report.holds = report.violations.empty();
  return report;
}

NLieAlgebra validated(NLieAlgebra l) {
  auto report = check_fundamental_identity(l);
  if (!report.holds) {
    const auto& v = report.violations.front();
    throw Error(ErrorCode::fi_violation,
                "fundamental identity fails at x=" + tuple_to_string(v.x) +
                    ", y=" + tuple_to_string(v.y) + " (" +
                    std::to_string(report.violations.size()) + " violating tuples)");
  }
  l.mark_fi_checked();
  return l;
}

Subspace bracket_subspaces(const NLieAlgebra& l, std::span<const Subspace> args) {
  require(static_cast<int>(args.size()) == l.arity(), ErrorCode::dimension_mismatch,
          "bracket_subspaces takes " + std::to_string(l.arity()) + " subspaces");
  for (const auto& s : args) {
    require(static_cast<int>(s.ambient_dim()) == l.dim(), ErrorCode::dimension_mismatch,
            "subspace ambient " + std::to_string(s.ambient_dim()) + " vs algebra dim " +
                std::to_string(l.dim()));
    require(s.field() == l.field(), ErrorCode::field_mismatch, "subspace field mismatch");
    if (s.is_zero()) return Subspace::zero(l.field(), l.dim());
  }
  // The bracket is alternating, so arguments drawn from the same subspace
  // only need increasing tuples of its basis vectors.
  struct Group {
    std::vector<Vector> basis;
    std::vector<IndexTuple> tuples;
  };
  std::vector<Group> groups;
  std::vector<bool> used(args.size(), false);
  for (std::size_t a = 0; a < args.size(); ++a) {
    if (used[a]) continue;
    int count = 0;
    for (std::size_t b = a; b < args.size(); ++b)
      if (!used[b] && args[b] == args[a]) {
        used[b] = true;
        ++count;
      }
    Group g{args[a].basis_vectors(), increasing_tuples(static_cast<int>(args[a].dim()), count)};
    if (g.tuples.empty()) return Subspace::zero(l.field(), l.dim());
    groups.push_back(std::move(g));
  }
  std::vector<Vector> gens;
  std::vector<std::size_t> pick(groups.size(), 0);
  std::vector<Vector> chosen;
  for (;;) {
    chosen.clear();
    for (std::size_t g = 0; g < groups.size(); ++g)
      for (int i : groups[g].tuples[pick[g]]) chosen.push_back(groups[g].basis[i]);
    Vector v = l.bracket(chosen);
    if (!is_zero(v)) gens.push_back(std::move(v));
    std::size_t g = 0;
    while (g < groups.size() && ++pick[g] == groups[g].tuples.size()) pick[g++] = 0;
    if (g == groups.size()) break;
  }
  return Subspace::span(l.field(), l.dim(), gens);
}

}  // namespace nlie
