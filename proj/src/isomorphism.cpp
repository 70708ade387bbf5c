#include "nlie/isomorphism.hpp"

#include <random>
#include <sstream>

#include "nlie/abelian_search.hpp"
#include "nlie/invariants.hpp"

namespace nlie {

namespace {

// {x : [x, L, ..., L] ⊆ Z}
Subspace second_center(const NLieAlgebra& l, const Subspace& z) {
  auto js = increasing_tuples(l.dim(), l.arity() - 1);
  Subspace ann = annihilator(z);  // rows: functionals vanishing on Z
  Matrix m(l.field(), js.size() * ann.dim(), l.dim());
  IndexTuple idx(l.arity());
  for (std::size_t a = 0; a < js.size(); ++a) {
    std::copy(js[a].begin(), js[a].end(), idx.begin() + 1);
    for (int i = 0; i < l.dim(); ++i) {
      idx[0] = i;
      Vector v = l.basis_bracket(idx);
      for (std::size_t f = 0; f < ann.dim(); ++f) {
        Scalar s = Scalar::zero(l.field());
        for (int t = 0; t < l.dim(); ++t) s = s + ann.basis().at(f, t) * v[t];
        m.at(a * ann.dim() + f, i) = s;
      }
    }
  }
  return kernel(m);
}

struct CharSubspace {
  std::string name;
  Subspace space;
};

// Subspaces every isomorphism maps onto their counterparts.
std::vector<CharSubspace> characteristic_subspaces(const NLieAlgebra& l) {
  Subspace full = Subspace::full(l.field(), l.dim());
  Subspace d = derived_algebra(l);
  Subspace z = center(l);
  std::vector<CharSubspace> out{{"L^1", d},
                                {"Z", z},
                                {"L^1 ∩ Z", subspace_intersect(d, z)},
                                {"L^1 + Z", subspace_sum(d, z)},
                                {"Z_2", second_center(l, z)}};
  auto add_series = [&](const std::string& name, const SeriesReport& r) {
    for (std::size_t k = 2; k < r.terms.size(); ++k)
      out.push_back({name + "[" + std::to_string(k) + "]", r.terms[k]});
  };
  add_series("lower", lower_central_series(l, full));
  add_series("derived2", s_derived_series(l, full, 2));
  if (l.arity() >= 3) add_series("derived3", s_derived_series(l, full, 3));
  out.push_back({"L", full});
  return out;
}

std::string dims_text(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "]";
  return os.str();
}

}  // namespace

Fingerprint fingerprint(const NLieAlgebra& l, std::uint64_t ab_budget) {
  Fingerprint f;
  f.arity = l.arity();
  f.dim = l.dim();
  f.field = l.field().to_string();
  Subspace full = Subspace::full(l.field(), l.dim());
  Subspace d = derived_algebra(l);
  Subspace z = center(l);
  f.dim_derived = d.dim();
  f.dim_center = z.dim();
  f.dim_derived_center = subspace_intersect(d, z).dim();
  f.dim_center2 = second_center(l, z).dim();
  auto s2 = s_derived_series(l, full, 2);
  f.derived2 = s2.dims();
  f.solvable2 = s2.terminated_at_zero;
  if (l.arity() >= 3) {
    auto s3 = s_derived_series(l, full, 3);
    f.derived3 = s3.dims();
    f.solvable3 = s3.terminated_at_zero;
  } else {
    f.solvable3 = f.solvable2;
  }
  auto lc = lower_central_series(l, full);
  f.lower_central = lc.dims();
  f.nilpotent = lc.terminated_at_zero;
  if (!l.field().is_rational() && ab_budget > 0) {
    auto ab = alpha_beta_exact_fp(l, {ab_budget, 1});
    if (ab.complete) {
      f.alpha = ab.alpha;
      f.beta = ab.beta;
    }
  }
  return f;
}

std::string fingerprint_difference(const Fingerprint& a, const Fingerprint& b) {
  auto num = [](std::size_t x) { return std::to_string(x); };
  auto opt = [](const std::optional<std::size_t>& x) {
    return x ? std::to_string(*x) : std::string("n/a");
  };
  auto flag = [](bool x) { return std::string(x ? "true" : "false"); };
  std::vector<std::tuple<std::string, std::string, std::string>> fields = {
      {"arity", num(a.arity), num(b.arity)},
      {"dim", num(a.dim), num(b.dim)},
      {"field", a.field, b.field},
      {"dim L^1", num(a.dim_derived), num(b.dim_derived)},
      {"dim Z", num(a.dim_center), num(b.dim_center)},
      {"dim (L^1 ∩ Z)", num(a.dim_derived_center), num(b.dim_derived_center)},
      {"dim Z_2", num(a.dim_center2), num(b.dim_center2)},
      {"2-derived dims", dims_text(a.derived2), dims_text(b.derived2)},
      {"3-derived dims", dims_text(a.derived3), dims_text(b.derived3)},
      {"lower central dims", dims_text(a.lower_central), dims_text(b.lower_central)},
      {"nilpotent", flag(a.nilpotent), flag(b.nilpotent)},
      {"2-solvable", flag(a.solvable2), flag(b.solvable2)},
      {"3-solvable", flag(a.solvable3), flag(b.solvable3)},
      {"alpha", opt(a.alpha), opt(b.alpha)},
      {"beta", opt(a.beta), opt(b.beta)},
  };
  for (const auto& [name, x, y] : fields)
    if (x != y) return name + ": " + x + " vs " + y;
  return {};
}

NLieAlgebra change_basis(const NLieAlgebra& l, const Matrix& p) {
  require(p.rows() == static_cast<std::size_t>(l.dim()) && p.cols() == p.rows(),
          ErrorCode::dimension_mismatch, "change of basis must be a square matrix of size dim");
  require(p.field() == l.field(), ErrorCode::field_mismatch, "change of basis over another field");
  Matrix inv = p.inverse();
  std::vector<Vector> cols;
  for (int j = 0; j < l.dim(); ++j) cols.push_back(p.column(j));
  NLieAlgebra out(l.field(), l.arity(), l.dim());
  std::vector<Vector> args(l.arity());
  for (const auto& t : increasing_tuples(l.dim(), l.arity())) {
    for (int a = 0; a < l.arity(); ++a) args[a] = cols[t[a]];
    Vector v = l.bracket(args);
    if (is_zero(v)) continue;
    out.set_entry(t, inv.apply(v));
  }
  if (l.fi_checked()) out.mark_fi_checked();  // the identity is basis-free
  return out;
}

Matrix random_invertible(Field f, int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (;;) {
    Matrix p(f, m, m);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) {
        long v = f.is_rational() ? static_cast<long>(rng() % 5) - 2
                                 : static_cast<long>(rng() % f.modulus());
        p.at(r, c) = Scalar::from_int(f, v);
      }
    if (rank(p) == static_cast<std::size_t>(m)) return p;
  }
}

NLieAlgebra random_basis_change(const NLieAlgebra& l, std::uint64_t seed) {
  return change_basis(l, random_invertible(l.field(), l.dim(), seed));
}

std::string to_string(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::yes:
      return "yes";
    case IsoVerdict::no:
      return "no";
    case IsoVerdict::unknown:
      return "unknown";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------

namespace {

// Rank of v -> ([v, e_J])_J, an automorphism invariant of v.
std::size_t ad_rank(const NLieAlgebra& l, const Vector& v) {
  auto js = increasing_tuples(l.dim(), l.arity() - 1);
  std::vector<Vector> rows;
  std::vector<Vector> args(l.arity());
  args[0] = v;
  for (const auto& j : js) {
    for (std::size_t q = 0; q < j.size(); ++q) args[q + 1] = l.unit(j[q]);
    rows.push_back(l.bracket(args));
  }
  return Subspace::span(l.field(), l.dim(), rows).dim();
}

class Search {
 public:
  Search(const NLieAlgebra& a, const NLieAlgebra& b, std::uint64_t budget)
      : a_(a), b_(b), budget_(budget), f_(a.field()), m_(a.dim()), n_(a.arity()) {}

  IsoResult run() {
    IsoResult r;
    r.field = f_;
    auto ca = characteristic_subspaces(a_);
    auto cb = characteristic_subspaces(b_);
    if (ca.size() != cb.size()) {
      r.verdict = IsoVerdict::no;
      r.reason = "characteristic series of different lengths";
      r.exhaustive = true;
      return r;
    }
    for (std::size_t i = 0; i < ca.size(); ++i) {
      if (ca[i].space.dim() != cb[i].space.dim()) {
        r.verdict = IsoVerdict::no;
        r.reason = "dim " + ca[i].name + ": " + std::to_string(ca[i].space.dim()) + " vs " +
                   std::to_string(cb[i].space.dim());
        r.exhaustive = true;
        return r;
      }
      for (std::size_t j = 0; j < i; ++j) {
        bool ea = ca[i].space == ca[j].space;
        bool eb = cb[i].space == cb[j].space;
        if (ea != eb) {
          r.verdict = IsoVerdict::no;
          r.reason = ca[i].name + " = " + ca[j].name + " holds in only one algebra";
          r.exhaustive = true;
          return r;
        }
      }
    }
    build_adapted_basis(ca, cb);
    std::vector<Vector> images;
    bool found = extend(images);
    r.nodes = nodes_;
    if (found) {
      // P maps the second algebra's standard basis: P = V * B^{-1}.
      Matrix v(f_, m_, m_);
      for (int c = 0; c < m_; ++c)
        for (int t = 0; t < m_; ++t) v.at(t, c) = solution_[c][t];
      Matrix p = v * basis_.inverse();
      require(change_basis(a_, p) == b_, ErrorCode::invalid_argument,
              "internal error: isomorphism witness failed verification");
      r.verdict = IsoVerdict::yes;
      r.witness = p;
      r.reason = "witness verified by change of basis";
      r.exhaustive = true;
      return r;
    }
    r.exhaustive = !exhausted_ && !f_.is_rational();
    if (exhausted_) {
      r.reason = "search budget exhausted";
    } else if (f_.is_rational()) {
      r.reason = "no map with coordinates in {-2,...,2} on the adapted basis";
    } else {
      r.verdict = IsoVerdict::no;
      r.reason = "exhaustive search over " + f_.to_string() + " found no isomorphism";
    }
    return r;
  }

 private:
  struct Slot {
    Vector b;             // adapted basis vector of the second algebra
    Subspace target;      // where its image must lie in the first algebra
    std::size_t ad_rank;  // required ad-rank of the image
  };

  void build_adapted_basis(const std::vector<CharSubspace>& ca,
                           const std::vector<CharSubspace>& cb) {
    // Vectors inside L^1 come first (brackets land there), central vectors
    // outside L^1 come last (they satisfy every constraint trivially).
    const Subspace& db = cb[0].space;
    const Subspace& dzb = cb[3].space;  // L^1 + Z
    std::vector<std::size_t> order(cb.size());
    for (std::size_t i = 0; i < cb.size(); ++i) order[i] = i;
    auto phase = [&](std::size_t i) {
      if (db.contains(cb[i].space)) return 0;
      if (dzb.contains(cb[i].space)) return 2;
      return 1;
    };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      if (phase(x) != phase(y)) return phase(x) < phase(y);
      return cb[x].space.dim() < cb[y].space.dim();
    });
    // Phase 1 subspaces are extended only modulo L^1 + Z, so that the rest
    // of Z is filled in last.
    std::vector<Vector> chosen;
    auto extend_from = [&](std::size_t i, const Subspace* modulo) {
      for (const auto& v : cb[i].space.basis_vectors()) {
        std::vector<Vector> with = chosen;
        if (modulo)
          for (const auto& w : modulo->basis_vectors()) with.push_back(w);
        if (Subspace::span(f_, m_, with).contains(v)) continue;
        chosen.push_back(v);
        slots_.push_back({v, ca[i].space, ad_rank(b_, v)});
      }
    };
    for (std::size_t i : order) extend_from(i, phase(i) == 1 ? &dzb : nullptr);
    basis_ = Matrix(f_, m_, m_);
    for (int c = 0; c < m_; ++c)
      for (int t = 0; t < m_; ++t) basis_.at(t, c) = slots_[c].b[t];
    // Constants of the second algebra in the adapted basis, and for each
    // level the tuples whose check becomes possible there.
    adapted_ = change_basis(b_, basis_);
    checks_.assign(m_, {});
    for (const auto& t : increasing_tuples(m_, n_)) {
      const Vector* c = adapted_.constants().find(t);
      int level = t.back();
      if (c)
        for (int s = 0; s < m_; ++s)
          if (!(*c)[s].is_zero()) level = std::max(level, s);
      checks_[level].push_back(t);
    }
    candidates_.assign(m_, {});
    cached_.assign(m_, false);
    truncated_.assign(m_, false);
    forcing_.assign(m_, {});
    for (int k = 1; k < m_; ++k)
      for (const auto& t : increasing_tuples(k, n_)) {
        const Vector* c = adapted_.constants().find(t);
        if (!c || (*c)[k].is_zero()) continue;
        bool later = false;
        for (int s = k + 1; s < m_; ++s) later = later || !(*c)[s].is_zero();
        if (!later) {
          forcing_[k] = t;
          break;
        }
      }
  }

  bool consistent(const std::vector<Vector>& images) const {
    int k = static_cast<int>(images.size()) - 1;
    std::vector<Vector> args(n_);
    for (const auto& t : checks_[k]) {
      for (int a = 0; a < n_; ++a) args[a] = images[t[a]];
      Vector lhs = a_.bracket(args);
      Vector rhs = a_.zero();
      if (const Vector* c = adapted_.constants().find(t))
        for (int s = 0; s < m_; ++s)
          if (!(*c)[s].is_zero()) axpy(rhs, (*c)[s], images[s]);
      if (lhs != rhs) return false;
    }
    return true;
  }

  // Coefficient vectors over the target basis, in a fixed order.
  bool next_coeffs(std::vector<int>& c) const {
    int top = f_.is_rational() ? 5 : static_cast<int>(f_.modulus());
    for (std::size_t i = c.size(); i-- > 0;) {
      if (++c[i] < top) return true;
      c[i] = 0;
    }
    return false;
  }

  Scalar coeff(int c) const {
    // Q: 0, 1, -1, 2, -2
    static constexpr int q[] = {0, 1, -1, 2, -2};
    if (f_.is_rational()) return Scalar::from_int(f_, q[c]);
    return Scalar::from_int(f_, c);
  }

  bool extend(std::vector<Vector>& images) {
    std::size_t k = images.size();
    if (k == static_cast<std::size_t>(m_)) {
      solution_ = images;
      return true;
    }
    const Slot& slot = slots_[k];
    Subspace span = Subspace::span(f_, m_, images);
    if (const IndexTuple& j = forcing_[k]; !j.empty()) {
      // [b_J] involves b_k with earlier vectors only, so the image of b_k
      // is determined by the images already chosen.
      if (nodes_ >= budget_) {
        exhausted_ = true;
        return false;
      }
      ++nodes_;
      const Vector& c = *adapted_.constants().find(j);
      std::vector<Vector> args(n_);
      for (int a = 0; a < n_; ++a) args[a] = images[j[a]];
      Vector v = a_.bracket(args);
      for (std::size_t t = 0; t < k; ++t)
        if (!c[t].is_zero()) axpy(v, Scalar::zero(f_) - c[t], images[t]);
      v = scaled(c[k].inverse(), v);
      if (span.contains(v) || !slot.target.contains(v) || ad_rank(a_, v) != slot.ad_rank)
        return false;
      images.push_back(std::move(v));
      if (consistent(images) && extend(images)) return true;
      images.pop_back();
      return false;
    }
    const auto& cands = candidates(k);
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (nodes_ >= budget_) {
        exhausted_ = true;
        return false;
      }
      ++nodes_;
      if (span.contains(cands[i])) continue;
      images.push_back(cands[i]);
      if (consistent(images) && extend(images)) return true;
      images.pop_back();
      if (exhausted_) return false;
    }
    if (truncated_[k]) exhausted_ = true;
    return false;
  }

  // Nonzero vectors of the slot's target with the right ad-rank, in a fixed
  // order, computed once per slot.
  const std::vector<Vector>& candidates(std::size_t k) {
    if (cached_[k]) return candidates_[k];
    cached_[k] = true;
    const Slot& slot = slots_[k];
    auto basis = slot.target.basis_vectors();
    std::vector<int> c(basis.size(), 0);
    std::uint64_t made = 0;
    while (next_coeffs(c)) {
      if (++made > budget_) {
        truncated_[k] = true;
        break;
      }
      Vector v = a_.zero();
      for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i]) axpy(v, coeff(c[i]), basis[i]);
      if (ad_rank(a_, v) == slot.ad_rank) candidates_[k].push_back(std::move(v));
    }
    return candidates_[k];
  }

  const NLieAlgebra& a_;
  const NLieAlgebra& b_;
  std::uint64_t budget_;
  Field f_;
  int m_;
  int n_;
  std::vector<Slot> slots_;
  Matrix basis_;
  NLieAlgebra adapted_;
  std::vector<std::vector<IndexTuple>> checks_;
  std::vector<IndexTuple> forcing_;  // per level; empty when the image is free
  std::vector<std::vector<Vector>> candidates_;
  std::vector<bool> cached_;
  std::vector<bool> truncated_;
  std::vector<Vector> solution_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

IsoResult are_isomorphic(const NLieAlgebra& a0, const NLieAlgebra& b0, const IsoOptions& options) {
  require(a0.arity() == b0.arity() && a0.dim() == b0.dim(), ErrorCode::dimension_mismatch,
          "isomorphism test needs equal arity and dimension");
  require(a0.field() == b0.field(), ErrorCode::field_mismatch,
          "isomorphism test needs algebras over the same field");
  NLieAlgebra a = a0;
  NLieAlgebra b = b0;
  if (options.p && a.field().is_rational()) {
    a = reduce_mod_p(a0, *options.p);
    b = reduce_mod_p(b0, *options.p);
  }
  IsoResult r;
  r.field = a.field();
  auto fa = fingerprint(a);
  auto fb = fingerprint(b);
  if (fa != fb) {
    r.verdict = IsoVerdict::no;
    r.reason = "fingerprints differ: " + fingerprint_difference(fa, fb);
    r.exhaustive = true;
  } else {
    r = Search(a, b, options.budget).run();
    if (a.field().is_rational() && r.verdict == IsoVerdict::unknown) {
      // The coordinate box is not symmetric in the two algebras; retry with
      // the roles swapped and invert the witness.
      IsoResult back = Search(b, a, options.budget).run();
      r.nodes += back.nodes;
      if (back.verdict == IsoVerdict::yes) {
        Matrix p = back.witness->inverse();
        require(change_basis(a, p) == b, ErrorCode::invalid_argument,
                "internal error: inverted isomorphism witness failed verification");
        r.verdict = IsoVerdict::yes;
        r.witness = p;
        r.reason = back.reason;
      }
    }
  }
  if (options.p && a0.field().is_rational()) {
    if (r.verdict == IsoVerdict::no)
      r.reason += " (over " + a.field().to_string() + "; evidence only for Q)";
    if (r.verdict == IsoVerdict::yes) {
      // An F_p witness says nothing exact about Q.
      r.verdict = IsoVerdict::unknown;
      r.reason = "isomorphic over " + a.field().to_string() + " (witness is mod p only)";
    }
  }
  return r;
}

}  // namespace nlie
