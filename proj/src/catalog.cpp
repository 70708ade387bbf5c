#include "nlie/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "fp_kernel.hpp"
#include "nlie/invariants.hpp"

namespace nlie {

namespace {

void check_ambient(const NLieAlgebra& l, const Vector& w) {
  require(w.size() == static_cast<std::size_t>(l.dim()), ErrorCode::dimension_mismatch,
          "vector of length " + std::to_string(w.size()) + " in an algebra of dim " +
              std::to_string(l.dim()));
  for (const auto& x : w)
    require(x.field() == l.field(), ErrorCode::field_mismatch,
            "vector entry over " + x.field().to_string() + ", algebra over " +
                l.field().to_string());
}

}  // namespace

LieAlgebra validated_lie(NLieAlgebra l) {
  require(l.arity() == 2, ErrorCode::invalid_argument,
          "a Lie algebra needs arity 2, got " + std::to_string(l.arity()));
  auto report = check_fundamental_identity(l);
  if (!report.holds) {
    const auto& v = report.violations.front();
    throw Error(ErrorCode::fi_violation, "Jacobi identity fails at x=" + tuple_to_string(v.x) +
                                             ", y=" + tuple_to_string(v.y));
  }
  l.mark_fi_checked();
  return LieAlgebra(std::move(l));
}

LieAlgebra associated_lie(const NLieAlgebra& l, const Vector& w) {
  require(l.arity() == 3, ErrorCode::invalid_argument,
          "the associated Lie algebra needs arity 3, got " + std::to_string(l.arity()));
  check_ambient(l, w);
  NLieAlgebra out(l.field(), 2, l.dim());
  out.set_labels(l.labels());
  std::vector<Vector> args(3);
  args[2] = w;
  for (const auto& t : increasing_tuples(l.dim(), 2)) {
    args[0] = l.unit(t[0]);
    args[1] = l.unit(t[1]);
    out.set_entry(t, l.bracket(args));
  }
  return validated_lie(std::move(out));
}

NLieAlgebra trivial_extension(const LieAlgebra& j0) {
  const NLieAlgebra& j = j0.algebra();
  if (!j.fi_checked()) validated_lie(j);
  int m = j.dim() + 1;
  NLieAlgebra out(j.field(), 3, m);
  for (const auto& e : j.constants().entries()) {
    Vector v = e.value;
    v.push_back(Scalar::zero(j.field()));
    out.set_entry({e.on[0], e.on[1], m - 1}, std::move(v));
  }
  if (!j.labels().empty()) {
    auto labels = j.labels();
    labels.push_back("w");
    out.set_labels(std::move(labels));
  }
  return validated(std::move(out));
}

NLieAlgebra direct_sum(const NLieAlgebra& a, const NLieAlgebra& b) {
  require(a.arity() == b.arity(), ErrorCode::invalid_argument,
          "direct sum needs equal arities, got " + std::to_string(a.arity()) + " and " +
              std::to_string(b.arity()));
  require(a.field() == b.field(), ErrorCode::field_mismatch,
          "direct sum of algebras over " + a.field().to_string() + " and " +
              b.field().to_string());
  int m = a.dim() + b.dim();
  NLieAlgebra out(a.field(), a.arity(), m);
  Scalar zero = Scalar::zero(a.field());
  for (const auto& e : a.constants().entries()) {
    Vector v = e.value;
    v.resize(m, zero);
    out.set_entry(e.on, std::move(v));
  }
  for (const auto& e : b.constants().entries()) {
    IndexTuple on = e.on;
    for (int& i : on) i += a.dim();
    Vector v(a.dim(), zero);
    v.insert(v.end(), e.value.begin(), e.value.end());
    out.set_entry(on, std::move(v));
  }
  if (a.fi_checked() && b.fi_checked()) out.mark_fi_checked();
  return out;
}

namespace {

NLieAlgebra simple_table(Field f, int n) {
  // [e_1, .., ^e_i, .., e_{n+1}] = e_i
  NLieAlgebra l(f, n, n + 1);
  for (int i = 0; i <= n; ++i) {
    IndexTuple on;
    for (int j = 0; j <= n; ++j)
      if (j != i) on.push_back(j);
    l.set_entry(on, l.unit(i));
  }
  return l;
}

}  // namespace

NLieAlgebra semidirect_a4(Field f, int m, const std::vector<ActionEntry>& action) {
  require(m >= 4, ErrorCode::invalid_argument, "need m >= 4, got " + std::to_string(m));
  NLieAlgebra a4 = simple_table(f, 3);
  NLieAlgebra out(f, 3, m);
  Scalar zero = Scalar::zero(f);
  for (const auto& e : a4.constants().entries()) {
    Vector v = e.value;
    v.resize(m, zero);
    out.set_entry(e.on, std::move(v));
  }
  std::map<IndexTuple, bool> seen;
  for (const auto& a : action) {
    require(1 <= a.i && a.i < a.j && a.j <= 4, ErrorCode::invalid_argument,
            "action pair must satisfy 1 <= i < j <= 4, got (" + std::to_string(a.i) + "," +
                std::to_string(a.j) + ")");
    require(1 <= a.k && a.k <= m - 4, ErrorCode::invalid_argument,
            "action index k=" + std::to_string(a.k) + " outside 1.." + std::to_string(m - 4));
    require(a.value.size() == static_cast<std::size_t>(m - 4), ErrorCode::dimension_mismatch,
            "action value must have " + std::to_string(m - 4) + " entries");
    IndexTuple on{a.i - 1, a.j - 1, a.k + 3};
    require(!seen[on], ErrorCode::invalid_argument,
            "duplicate action entry " + tuple_to_string(on));
    seen[on] = true;
    Vector v(4, zero);
    for (const auto& x : a.value) {
      require(x.field() == f, ErrorCode::field_mismatch, "action value over the wrong field");
      v.push_back(x);
    }
    out.set_entry(on, std::move(v));
  }
  return validated(std::move(out));
}

// ---------------------------------------------------------------------------

const std::vector<CatalogFamily>& catalog_families() {
  static const std::vector<CatalogFamily> families = {
      {"L21-b1", "(n+1)-dim: [e2..e(n+1)] = e1", 4, false, false, false},
      {"L21-b2", "(n+1)-dim: [e1..en] = e1", 4, false, false, false},
      {"L21-c1", "(n+1)-dim: [e2..e(n+1)] = e1, [e1,e3..e(n+1)] = e2", 4, false, false, false},
      {"L21-c2", "(n+1)-dim: [e2..e(n+1)] = a e1 + e2, [e1,e3..e(n+1)] = e2, a != 0", 4, false,
       true, false},
      {"L21-c3", "(n+1)-dim: [e1,e3..e(n+1)] = e1, [e2..e(n+1)] = e2", 4, false, false, false},
      {"L21-d", "(n+1)-dim: [e1..^ei..e(n+1)] = ei for i <= r, 3 <= r <= n+1", 4, false, false,
       false},
      {"A", "simple (n+1)-dim n-Lie algebra: [e1..^ei..e(n+1)] = ei", 4, false, false, false},
      {"T34-a1", "[x2,x(m-1),xm] = x1", 4, true, false, false},
      {"T34-a2", "[x1,x(m-1),xm] = x1", 4, true, false, false},
      {"T35-b1", "[x3,x(m-1),xm] = x2, [x4,x(m-1),xm] = x1", 6, true, false, false},
      {"T35-b2", "[x2,x(m-1),xm] = x2, [x3,x(m-1),xm] = x1", 5, true, false, false},
      {"T35-b3", "[x2,x(m-1),xm] = x1, [x3,x(m-1),xm] = x2", 5, true, false, false},
      {"T35-b4", "[x1,x(m-1),xm] = x1, [x2,x(m-1),xm] = x2", 4, true, false, false},
      {"T35-b5", "[x1,x(m-1),xm] = x2, [x2,x(m-1),xm] = x1", 4, true, false, false},
      {"T35-b6", "[x2,x(m-1),xm] = a x1 + x2, [x1,x(m-1),xm] = x2, a != 0", 4, true, true,
       false},
      {"T43-c1", "[x(2i-1),x(2i),xm] = xm for i = 1..t, 2 <= 2t <= m-1", 5, true, false, true},
      {"T43-c2", "[x1,x2,xm] = x1", 3, true, false, false},
      {"T43-c3", "[x(2i),x(2i+1),xm] = x1 for i = 1..t, 3 <= 2t+1 <= m-1", 4, true, false,
       true},
      {"EX31", "A_4", 4, false, false, false},
      {"EX32-1", "[x1,x3,x4] = x2, [x2,x3,x4] = x1, [x1,x2,x4] = x3", 4, false, false, false},
      {"EX32-2", "[x1,x3,x4] = x1, [x2,x3,x4] = x2", 4, false, false, false},
      {"EX33", "[x1,x2,x3] = x4", 4, false, false, false},
      {"EX41", "[x1,x2,x5] = x5, [x3,x4,x5] = x5", 5, false, false, false},
      {"EX42", "[x1,x2,xi] = x(i-1) for 4 <= i <= m", 4, true, false, false},
      {"T44-3", "A_4 plus an (m-4)-dim ideal tau with user-supplied [ei,ej,fk] in tau", 4, true,
       false, false},
  };
  return families;
}

namespace {

// Canonicalizes "L21-d4" -> ("L21-d", r = 4) and "A3" / "A(3)" -> ("A", n = 3).
std::string normalize_id(const std::string& id, CatalogParams& p) {
  auto digits_after = [&](std::size_t from) -> std::optional<int> {
    std::string rest = id.substr(from);
    if (!rest.empty() && rest.front() == '(' && rest.back() == ')')
      rest = rest.substr(1, rest.size() - 2);
    if (rest.empty() || rest.size() > 4 ||
        !std::all_of(rest.begin(), rest.end(), [](unsigned char c) { return std::isdigit(c); }))
      return std::nullopt;
    return std::stoi(rest);
  };
  if (id.rfind("L21-d", 0) == 0 && id.size() > 5) {
    if (auto r = digits_after(5)) {
      p.r = *r;
      return "L21-d";
    }
  }
  if (id.size() > 1 && id[0] == 'A') {
    if (auto n = digits_after(1)) {
      p.n = *n;
      return "A";
    }
  }
  return id;
}

const CatalogFamily& family(const std::string& id) {
  for (const auto& f : catalog_families())
    if (f.id == id) return f;
  throw Error(ErrorCode::invalid_argument, "unknown catalog id '" + id + "'");
}

Vector combo(const NLieAlgebra& l, std::initializer_list<std::pair<Scalar, int>> terms) {
  Vector v = l.zero();
  for (const auto& [c, i] : terms) v[i - 1] = v[i - 1] + c;
  return v;
}

}  // namespace

NLieAlgebra catalog_table(const std::string& raw_id, const CatalogParams& params) {
  CatalogParams p = params;
  std::string id = normalize_id(raw_id, p);
  const CatalogFamily& fam = family(id);
  Field f = p.field;
  Scalar one = Scalar::one(f);

  std::optional<Scalar> alpha;
  if (fam.takes_alpha) {
    alpha = Scalar::parse(p.alpha, f);
    require(!alpha->is_zero(), ErrorCode::invalid_argument,
            id + " needs a nonzero parameter alpha, got '" + p.alpha + "'");
  }

  auto table_arity = [&]() {
    require(p.n >= 3, ErrorCode::invalid_argument,
            id + " is defined for arity n >= 3, got " + std::to_string(p.n));
    require(p.n <= 12, ErrorCode::invalid_argument, "arity above 12 is not supported");
    require(!p.dim || *p.dim == p.n + 1, ErrorCode::invalid_argument,
            id + " has dimension n+1 = " + std::to_string(p.n + 1) + ", got " +
                std::to_string(*p.dim));
    return p.n;
  };
  auto free_dim = [&]() {
    int m = p.dim.value_or(fam.min_dim);
    require(m >= fam.min_dim, ErrorCode::invalid_argument,
            id + " needs m >= " + std::to_string(fam.min_dim) + ", got " + std::to_string(m));
    require(m <= 64, ErrorCode::invalid_argument, "catalog dimensions above 64 are not supported");
    return m;
  };
  auto fixed_dim = [&](int m) {
    require(!p.dim || *p.dim == m, ErrorCode::invalid_argument,
            id + " has dimension " + std::to_string(m) + ", got " + std::to_string(*p.dim));
    return m;
  };
  auto all_but = [](int n1, std::initializer_list<int> skip) {
    IndexTuple t;
    for (int i = 1; i <= n1; ++i)
      if (std::find(skip.begin(), skip.end(), i) == skip.end()) t.push_back(i);
    return t;
  };
  auto add = [](NLieAlgebra& l, IndexTuple one_based, const Vector& v) {
    for (int& i : one_based) --i;
    l.set_entry(one_based, v);
  };

  if (id.rfind("L21-", 0) == 0 || id == "A") {
    int n = table_arity();
    NLieAlgebra l(f, n, n + 1);
    auto e = [&](int i) { return l.unit(i - 1); };
    if (id == "L21-b1") {
      add(l, all_but(n + 1, {1}), e(1));
    } else if (id == "L21-b2") {
      add(l, all_but(n + 1, {n + 1}), e(1));
    } else if (id == "L21-c1") {
      add(l, all_but(n + 1, {1}), e(1));
      add(l, all_but(n + 1, {2}), e(2));
    } else if (id == "L21-c2") {
      add(l, all_but(n + 1, {1}), combo(l, {{*alpha, 1}, {one, 2}}));
      add(l, all_but(n + 1, {2}), e(2));
    } else if (id == "L21-c3") {
      add(l, all_but(n + 1, {2}), e(1));
      add(l, all_but(n + 1, {1}), e(2));
    } else {
      int r = id == "A" ? n + 1 : p.r;
      require(3 <= r && r <= n + 1, ErrorCode::invalid_argument,
              "d_r needs 3 <= r <= n+1 = " + std::to_string(n + 1) + ", got r=" +
                  std::to_string(r));
      for (int i = 1; i <= r; ++i) add(l, all_but(n + 1, {i}), e(i));
    }
    return l;
  }

  if (id.rfind("T34-", 0) == 0 || id.rfind("T35-", 0) == 0) {
    int m = free_dim();
    NLieAlgebra l(f, 3, m);
    auto e = [&](int i) { return l.unit(i - 1); };
    auto put = [&](int i, const Vector& v) { add(l, {i, m - 1, m}, v); };
    if (id == "T34-a1") put(2, e(1));
    if (id == "T34-a2") put(1, e(1));
    if (id == "T35-b1") put(3, e(2)), put(4, e(1));
    if (id == "T35-b2") put(2, e(2)), put(3, e(1));
    if (id == "T35-b3") put(2, e(1)), put(3, e(2));
    if (id == "T35-b4") put(1, e(1)), put(2, e(2));
    if (id == "T35-b5") put(1, e(2)), put(2, e(1));
    if (id == "T35-b6") put(2, combo(l, {{*alpha, 1}, {one, 2}})), put(1, e(2));
    return l;
  }

  if (id == "T43-c1" || id == "T43-c3") {
    int m = free_dim();
    bool c1 = id == "T43-c1";
    // c1: x_{2i-1}, x_{2i} with 2t <= m-1; c3: x_{2i}, x_{2i+1} with 2t+1 <= m-1
    int t_max = c1 ? (m - 1) / 2 : (m - 2) / 2;
    int t = p.t == 0 ? t_max : p.t;
    require(1 <= t && t <= t_max, ErrorCode::invalid_argument,
            id + " at m=" + std::to_string(m) + " needs 1 <= t <= " + std::to_string(t_max) +
                ", got t=" + std::to_string(t));
    NLieAlgebra l(f, 3, m);
    for (int i = 1; i <= t; ++i) {
      if (c1)
        add(l, {2 * i - 1, 2 * i, m}, l.unit(m - 1));
      else
        add(l, {2 * i, 2 * i + 1, m}, l.unit(0));
    }
    return l;
  }

  if (id == "T43-c2") {
    int m = free_dim();
    NLieAlgebra l(f, 3, m);
    add(l, {1, 2, m}, l.unit(0));
    return l;
  }

  if (id == "EX31") {
    fixed_dim(4);
    return simple_table(f, 3);
  }
  if (id == "EX32-1" || id == "EX32-2" || id == "EX33") {
    NLieAlgebra l(f, 3, fixed_dim(4));
    auto e = [&](int i) { return l.unit(i - 1); };
    if (id == "EX32-1") {
      add(l, {1, 3, 4}, e(2));
      add(l, {2, 3, 4}, e(1));
      add(l, {1, 2, 4}, e(3));
    } else if (id == "EX32-2") {
      add(l, {1, 3, 4}, e(1));
      add(l, {2, 3, 4}, e(2));
    } else {
      add(l, {1, 2, 3}, e(4));
    }
    return l;
  }
  if (id == "EX41") {
    NLieAlgebra l(f, 3, fixed_dim(5));
    add(l, {1, 2, 5}, l.unit(4));
    add(l, {3, 4, 5}, l.unit(4));
    return l;
  }
  if (id == "EX42") {
    int m = free_dim();
    NLieAlgebra l(f, 3, m);
    for (int i = 4; i <= m; ++i) add(l, {1, 2, i}, l.unit(i - 2));
    return l;
  }
  // T44-3
  int m = free_dim();
  NLieAlgebra a4 = simple_table(f, 3);
  NLieAlgebra l(f, 3, m);
  Scalar zero = Scalar::zero(f);
  for (const auto& e : a4.constants().entries()) {
    Vector v = e.value;
    v.resize(m, zero);
    l.set_entry(e.on, std::move(v));
  }
  for (const auto& a : p.action) {
    require(1 <= a.i && a.i < a.j && a.j <= 4 && 1 <= a.k && a.k <= m - 4 &&
                a.value.size() == static_cast<std::size_t>(m - 4),
            ErrorCode::invalid_argument, "malformed action entry");
    Vector v(4, zero);
    v.insert(v.end(), a.value.begin(), a.value.end());
    l.set_entry({a.i - 1, a.j - 1, a.k + 3}, std::move(v));
  }
  return l;
}

NLieAlgebra catalog_build(const std::string& id, const CatalogParams& params) {
  CatalogParams p = params;
  if (normalize_id(id, p) == "T44-3") return semidirect_a4(p.field, p.dim.value_or(4), p.action);
  return validated(catalog_table(id, params));
}

// ---------------------------------------------------------------------------

LieAlgebra matrix_lie_algebra(Field f, const std::vector<Matrix>& basis) {
  require(!basis.empty(), ErrorCode::invalid_argument, "empty matrix basis");
  std::size_t n = basis[0].rows();
  std::size_t d = basis.size();
  // Coordinates are solved against the flattened basis matrices.
  Matrix flat(f, n * n, d);
  for (std::size_t b = 0; b < d; ++b) {
    require(basis[b].rows() == n && basis[b].cols() == n && basis[b].field() == f,
            ErrorCode::invalid_argument, "matrix basis must be square of one size and field");
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) flat.at(r * n + c, b) = basis[b].at(r, c);
  }
  require(rank(flat) == d, ErrorCode::invalid_argument, "matrix basis is linearly dependent");
  NLieAlgebra l(f, 2, static_cast<int>(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      Matrix ab = basis[a] * basis[b];
      Matrix ba = basis[b] * basis[a];
      // Augmented system [flat | commutator]; consistent iff closed.
      Matrix aug(f, n * n, d + 1);
      for (std::size_t r = 0; r < n * n; ++r) {
        for (std::size_t c = 0; c < d; ++c) aug.at(r, c) = flat.at(r, c);
        aug.at(r, d) = ab.at(r / n, r % n) - ba.at(r / n, r % n);
      }
      std::vector<std::size_t> piv;
      Matrix red = rref(aug, piv);
      require(std::find(piv.begin(), piv.end(), d) == piv.end(), ErrorCode::invalid_argument,
              "matrix span is not closed under the commutator");
      Vector coords(d, Scalar::zero(f));
      for (std::size_t r = 0; r < piv.size(); ++r) coords[piv[r]] = red.at(r, d);
      l.set_entry({static_cast<int>(a), static_cast<int>(b)}, std::move(coords));
    }
  return validated_lie(std::move(l));
}

std::vector<std::string> lie_catalog_ids() {
  return {"abelian", "affine", "heisenberg", "so3-core", "upper", "strictly-upper"};
}

LieAlgebra lie_catalog_build(const std::string& id, int size, Field f) {
  Scalar one = Scalar::one(f);
  if (id == "abelian") {
    require(size >= 1, ErrorCode::invalid_argument, "abelian needs dim >= 1");
    return validated_lie(NLieAlgebra(f, 2, size));
  }
  if (id == "affine") {
    NLieAlgebra l(f, 2, 2);
    l.set_entry({0, 1}, l.unit(1));
    return validated_lie(std::move(l));
  }
  if (id == "heisenberg") {
    require(size >= 1, ErrorCode::invalid_argument, "heisenberg needs k >= 1 (dim 2k+1)");
    NLieAlgebra l(f, 2, 2 * size + 1);
    for (int i = 0; i < size; ++i) l.set_entry({i, size + i}, l.unit(2 * size));
    return validated_lie(std::move(l));
  }
  if (id == "so3-core") {
    // [y1,y3] = y2, [y2,y3] = y1, [y1,y2] = y3
    NLieAlgebra l(f, 2, 3);
    l.set_entry({0, 2}, l.unit(1));
    l.set_entry({1, 2}, l.unit(0));
    l.set_entry({0, 1}, l.unit(2));
    return validated_lie(std::move(l));
  }
  if (id == "upper" || id == "strictly-upper") {
    require(size >= 1 && size <= 8, ErrorCode::invalid_argument,
            id + " needs 1 <= k <= 8, got " + std::to_string(size));
    bool strict = id == "strictly-upper";
    require(!strict || size >= 2, ErrorCode::invalid_argument, "strictly-upper needs k >= 2");
    std::vector<Matrix> basis;
    for (int i = 0; i < size; ++i)
      for (int j = strict ? i + 1 : i; j < size; ++j) {
        Matrix e(f, size, size);
        e.at(i, j) = one;
        basis.push_back(std::move(e));
      }
    return matrix_lie_algebra(f, basis);
  }
  throw Error(ErrorCode::invalid_argument, "unknown Lie catalog id '" + id + "'");
}

// ---------------------------------------------------------------------------

std::string to_string(Trichotomy t) {
  switch (t) {
    case Trichotomy::three_solvable:
      return "3-solvable";
    case Trichotomy::simple_a4:
      return "simple-A4";
    case Trichotomy::a4_semidirect:
      return "A4-semidirect";
    case Trichotomy::unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

// Symmetric representative of a residue, as a rational.
Subspace lift(const Subspace& s, Field q) {
  std::uint32_t p = s.field().modulus();
  std::vector<Vector> rows;
  for (const auto& row : s.basis_vectors()) {
    Vector v;
    for (const auto& x : row) {
      long r = x.residue();
      if (r > static_cast<long>(p / 2)) r -= p;
      v.push_back(Scalar::from_int(q, r));
    }
    rows.push_back(std::move(v));
  }
  return Subspace::span(q, s.ambient_dim(), rows);
}

bool perfect_subalgebra(const NLieAlgebra& l, const Subspace& s) {
  std::vector<Subspace> args(3, s);
  return bracket_subspaces(l, args) == s;
}

}  // namespace

TrichotomyVerdict classify_trichotomy(const NLieAlgebra& l, const TrichotomyOptions& options) {
  require(l.arity() == 3, ErrorCode::invalid_argument,
          "the trichotomy applies to 3-Lie algebras, got arity " + std::to_string(l.arity()));
  TrichotomyVerdict v;
  Subspace full = Subspace::full(l.field(), l.dim());
  auto series = s_derived_series(l, full, 3);
  v.series_dims = series.dims();
  if (series.terminated_at_zero) {
    v.verdict = Trichotomy::three_solvable;
    v.evidence = "3-derived series reaches zero";
    return v;
  }

  bool over_q = l.field().is_rational();
  std::uint32_t p = over_q ? options.p : l.field().modulus();
  v.p = p;
  if (over_q && !reducible_mod_p(l, p)) {
    v.evidence = "constants are not " + std::to_string(p) + "-integral; choose another prime";
    return v;
  }
  NLieAlgebra lp = over_q ? reduce_mod_p(l, p) : l;
  const int m = l.dim();
  std::uint64_t budget = options.search.budget;
  auto spend = [&](std::uint64_t n) { budget -= std::min(budget, n); };

  if (m == 4) {
    if (derived_algebra(l).dim() != 4) {
      v.evidence = "dim 4, not 3-solvable, but the derived algebra is proper";
      return v;
    }
    for (int k = 1; k <= 3; ++k) {
      auto s = find_subspace(lp, k, SubspacePredicate::ideal, {budget, options.search.threads});
      spend(s.scanned);
      if (!s.complete) {
        v.evidence = "budget exhausted while searching for ideals";
        return v;
      }
      if (s.witness) {
        v.evidence = "dim 4 with a proper ideal of dim " + std::to_string(k) + " over F_" +
                     std::to_string(p);
        return v;
      }
    }
    v.verdict = Trichotomy::simple_a4;
    v.evidence = "dim 4, derived algebra is everything, no proper nonzero ideal over F_" +
                 std::to_string(p);
    return v;
  }
  if (m < 4) {
    v.evidence = "not 3-solvable and dim < 4";
    return v;
  }

  // tau: (m-4)-dim ideal with [tau, tau, tau] = 0; S: complementary perfect
  // 4-dim subalgebra. Both are the first hits over F_p in canonical order
  // and are then verified over the input field.
  detail::FpAlgebra fp(lp);
  auto tau_scan = detail::scan_level(m, m - 4, p, budget, options.search.threads,
                                     [&](const detail::FpBasis& b) {
                                       return fp.abelian_subalgebra(b) && fp.ideal(b);
                                     });
  spend(tau_scan.scanned);
  if (!tau_scan.found) {
    v.evidence = tau_scan.complete ? "no (m-4)-dim ideal with [tau,tau,tau] = 0 over F_" +
                                         std::to_string(p)
                                   : "budget exhausted while searching for tau";
    return v;
  }
  auto s_scan = detail::scan_level(m, 4, p, budget, options.search.threads,
                                   [&](const detail::FpBasis& b) {
                                     return fp.independent(b, tau_scan.witness) &&
                                            fp.perfect_subalgebra(b);
                                   });
  if (!s_scan.found) {
    v.evidence = s_scan.complete ? "tau found but no complementary perfect 4-dim subalgebra"
                                 : "budget exhausted while searching for the A_4 block";
    return v;
  }
  Subspace tau_p = detail::from_fp_basis(tau_scan.witness, lp.field());
  Subspace s_p = detail::from_fp_basis(s_scan.witness, lp.field());
  Subspace tau = over_q ? lift(tau_p, l.field()) : tau_p;
  Subspace s = over_q ? lift(s_p, l.field()) : s_p;
  auto c = classify_subspace(l, tau);
  if (!(c.is_ideal && c.is_abelian_subalgebra) || !perfect_subalgebra(l, s) ||
      !subspace_intersect(s, tau).is_zero()) {
    v.evidence = "the decomposition found over F_" + std::to_string(p) +
                 " does not lift to the input field";
    return v;
  }
  v.verdict = Trichotomy::a4_semidirect;
  v.tau = tau;
  v.s = s;
  v.evidence = "tau of dim " + std::to_string(tau.dim()) + " is " +
               (c.is_abelian_ideal ? "an abelian ideal" : "a hypo-abelian ideal") +
               "; S is a complementary 4-dim subalgebra with [S,S,S] = S";
  return v;
}

}  // namespace nlie
