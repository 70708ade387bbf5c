#include "nlie/invariants.hpp"

#include <string>

namespace nlie {

std::vector<std::size_t> SeriesReport::dims() const {
  std::vector<std::size_t> out;
  for (const auto& t : terms) out.push_back(t.dim());
  return out;
}

namespace {

void check_ambient(const NLieAlgebra& l, const Subspace& s) {
  require(static_cast<int>(s.ambient_dim()) == l.dim(), ErrorCode::dimension_mismatch,
          "subspace of F^" + std::to_string(s.ambient_dim()) + " in an algebra of dim " +
              std::to_string(l.dim()));
  require(s.field() == l.field(), ErrorCode::field_mismatch,
          "subspace over " + s.field().to_string() + ", algebra over " + l.field().to_string());
}

// [v, e_J] for increasing (n-1)-tuples J, expanded over the coordinates of v
Vector bracket_with_basis(const NLieAlgebra& l, std::span<const Scalar> v, const IndexTuple& j) {
  Vector out = l.zero();
  IndexTuple idx(j.size() + 1);
  std::copy(j.begin(), j.end(), idx.begin() + 1);
  for (int t = 0; t < l.dim(); ++t) {
    if (v[t].is_zero()) continue;
    idx[0] = t;
    axpy(out, v[t], l.basis_bracket(idx));
  }
  return out;
}

SeriesReport run_series(const NLieAlgebra& l, const Subspace& start, int max_steps,
                        SeriesKind kind, int s) {
  require(is_ideal(l, start), ErrorCode::not_an_ideal,
          "series start is not an ideal of the algebra");
  SeriesReport report;
  report.kind = kind;
  report.s = s;
  report.terms.push_back(start);
  Subspace full = Subspace::full(l.field(), l.dim());
  for (int step = 0;; ++step) {
    const Subspace& cur = report.terms.back();
    if (cur.is_zero()) {
      report.terminated_at_zero = true;
      break;
    }
    if (max_steps >= 0 && step >= max_steps) {
      report.truncated = true;
      break;
    }
    std::vector<Subspace> args;
    if (kind == SeriesKind::s_derived) {
      args.assign(s, cur);
      args.resize(l.arity(), full);
    } else {
      args = {cur, start};
      args.resize(l.arity(), full);
    }
    Subspace next = bracket_subspaces(l, args);
    bool same = next == cur;
    report.terms.push_back(std::move(next));
    if (same) {
      report.stabilized = true;
      break;
    }
  }
  return report;
}

}  // namespace

Subspace derived_algebra(const NLieAlgebra& l) {
  std::vector<Vector> gens;
  for (const auto& e : l.constants().entries()) gens.push_back(e.value);
  return Subspace::span(l.field(), l.dim(), gens);
}

Subspace center(const NLieAlgebra& l) {
  // Rows indexed by (J, t): coefficient of e_t in [e_i, e_J] as a function of i.
  auto js = increasing_tuples(l.dim(), l.arity() - 1);
  Matrix m(l.field(), js.size() * l.dim(), l.dim());
  IndexTuple idx(l.arity());
  for (std::size_t a = 0; a < js.size(); ++a) {
    std::copy(js[a].begin(), js[a].end(), idx.begin() + 1);
    for (int i = 0; i < l.dim(); ++i) {
      idx[0] = i;
      Vector v = l.basis_bracket(idx);
      for (int t = 0; t < l.dim(); ++t) m.at(a * l.dim() + t, i) = v[t];
    }
  }
  return kernel(m);
}

SeriesReport s_derived_series(const NLieAlgebra& l, const Subspace& ideal, int s,
                              int max_steps) {
  check_ambient(l, ideal);
  require(s >= 2 && s <= l.arity(), ErrorCode::invalid_argument,
          "s must lie in 2.." + std::to_string(l.arity()) + ", got " + std::to_string(s));
  return run_series(l, ideal, max_steps, SeriesKind::s_derived, s);
}

SeriesReport lower_central_series(const NLieAlgebra& l, const Subspace& ideal, int max_steps) {
  check_ambient(l, ideal);
  return run_series(l, ideal, max_steps, SeriesKind::lower_central, 0);
}

bool is_subalgebra(const NLieAlgebra& l, const Subspace& s) {
  check_ambient(l, s);
  std::vector<Subspace> args(l.arity(), s);
  return s.contains(bracket_subspaces(l, args));
}

bool is_ideal(const NLieAlgebra& l, const Subspace& s) {
  check_ambient(l, s);
  auto js = increasing_tuples(l.dim(), l.arity() - 1);
  for (std::size_t r = 0; r < s.dim(); ++r)
    for (const auto& j : js)
      if (!s.contains(bracket_with_basis(l, s.basis().row(r), j))) return false;
  return true;
}

SubspaceClass classify_subspace(const NLieAlgebra& l, const Subspace& s) {
  check_ambient(l, s);
  SubspaceClass c;
  Subspace full = Subspace::full(l.field(), l.dim());
  std::vector<Subspace> all_s(l.arity(), s);
  Subspace closed = bracket_subspaces(l, all_s);
  c.is_subalgebra = s.contains(closed);
  c.is_abelian_subalgebra = closed.is_zero();
  c.is_ideal = is_ideal(l, s);
  std::vector<Subspace> two_s(l.arity(), full);
  two_s[0] = s;
  two_s[1] = s;
  bool ssl_zero = bracket_subspaces(l, two_s).is_zero();
  c.is_abelian_ideal = c.is_ideal && ssl_zero;
  c.is_hypo_abelian_ideal = c.is_ideal && c.is_abelian_subalgebra && !ssl_zero;
  return c;
}

bool is_s_solvable(const NLieAlgebra& l, int s) {
  return s_derived_series(l, Subspace::full(l.field(), l.dim()), s).terminated_at_zero;
}

bool is_nilpotent(const NLieAlgebra& l) {
  return lower_central_series(l, Subspace::full(l.field(), l.dim())).terminated_at_zero;
}

bool is_2step_s_solvable(const NLieAlgebra& l, int s) {
  auto r = s_derived_series(l, Subspace::full(l.field(), l.dim()), s, 2);
  return r.terms.back().is_zero();
}

InvariantReport invariant_report(const NLieAlgebra& l) {
  InvariantReport r;
  r.arity = l.arity();
  r.dim = l.dim();
  r.dim_derived = derived_algebra(l).dim();
  r.dim_center = center(l).dim();
  Subspace full = Subspace::full(l.field(), l.dim());
  for (int s = 2; s <= l.arity(); ++s) {
    auto series = s_derived_series(l, full, s);
    r.derived_dims[s] = series.dims();
    r.solvable[s] = series.terminated_at_zero;
    r.two_step[s] = series.terms.size() <= 3 && series.terminated_at_zero;
  }
  auto lc = lower_central_series(l, full);
  r.lower_central_dims = lc.dims();
  r.nilpotent = lc.terminated_at_zero;
  return r;
}

}  // namespace nlie
