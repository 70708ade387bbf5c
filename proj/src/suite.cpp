#include "nlie/suite.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "nlie/abelian_search.hpp"
#include "nlie/invariants.hpp"
#include "nlie/isomorphism.hpp"

namespace nlie {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string field_label(Field f) { return f.is_rational() ? "Q" : f.to_string(); }

std::string rows_text(const Subspace& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.dim(); ++i) {
    out += i ? ",[" : "[";
    auto v = s.basis_vector(i);
    for (std::size_t j = 0; j < v.size(); ++j) out += (j ? "," : "") + v[j].to_string();
    out += "]";
  }
  return out + "]";
}

bool is_table_family(const std::string& id) { return id.rfind("L21-", 0) == 0 || id == "A"; }

// Adjoint action of A_4 on a 4-dim tau: [e_i, e_j, f_k] = f_{[e_i, e_j, e_k]}.
std::vector<ActionEntry> adjoint_action(Field f) {
  CatalogParams p;
  p.field = f;
  NLieAlgebra a4 = catalog_build("EX31", p);
  std::vector<ActionEntry> out;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        if (k == i || k == j) continue;
        int idx[3] = {i, j, k};
        Vector v = a4.basis_bracket(idx);
        if (!is_zero(v)) out.push_back({i + 1, j + 1, k + 1, v});
      }
  return out;
}

struct Check {
  CriterionResult& r;
  void operator()(bool ok, const std::string& what) {
    if (!ok) {
      r.passed = false;
      r.details.push_back("FAIL " + what);
    }
  }
  void note(const std::string& what) { r.details.push_back(what); }
};

SearchOptions search_options(const SuiteOptions& o, std::uint64_t budget = 50'000'000) {
  SearchOptions s;
  s.threads = o.threads;
  s.budget = budget;
  return s;
}

// ---------------------------------------------------------------------------

CriterionResult fi_validity(const SuiteOptions& o) {
  CriterionResult r{1, "fundamental identity across the catalog", true, {}, 0};
  Check check{r};
  std::size_t total = 0;
  std::map<std::string, std::pair<std::size_t, std::string>> failing;  // id -> (count, first)
  for (Field f : {Field::rationals(), Field::prime(2), Field::prime(5)}) {
    for (const auto& s : catalog_samples(4, 8, f)) {
      ++total;
      NLieAlgebra l = catalog_table(s.id, s.params);
      FiReport rep = check_fundamental_identity(l, o.threads);
      if (rep.holds) continue;
      auto& slot = failing[s.id];
      if (slot.first++ == 0) {
        const auto& v = rep.violations.front();
        slot.second = s.label + " at x=" + tuple_to_string(v.x) + " y=" + tuple_to_string(v.y);
      }
    }
  }
  for (const auto& [id, info] : failing)
    check(false, id + ": " + std::to_string(info.first) + " samples violate the identity, first " +
                     info.second);
  check.note(std::to_string(total) + " samples over Q, F_2, F_5; " +
             std::to_string(failing.size()) + " families with violations");

  // Sign flip of one A_4 constant must be caught. Flipping one of A_4's four
  // constants is a diagonal rescaling over C, so the identity may survive; a
  // non-diagonal perturbation is checked alongside to show the checker bites.
  CatalogParams p;
  NLieAlgebra a4 = catalog_table("EX31", p);
  IndexTuple on{0, 1, 2};
  Vector v = *a4.constants().find(on);
  NLieAlgebra flipped = a4, skewed = a4;
  for (auto& x : v) x = -x;
  flipped.set_entry(on, v);
  FiReport rep = check_fundamental_identity(flipped);
  check(!rep.holds && !rep.violations.empty(),
        "sign-flipped A_4 [e1,e2,e3] is still a 3-Lie algebra: " +
            std::to_string(rep.instances_checked) + " identity instances hold");
  if (!rep.violations.empty())
    check.note("sign-flipped A_4: " + std::to_string(rep.violations.size()) +
               " violations, first x=" + tuple_to_string(rep.violations.front().x) +
               " y=" + tuple_to_string(rep.violations.front().y));
  v = *a4.constants().find(on);
  v[0] += Scalar::one(v[0].field());
  skewed.set_entry(on, v);
  FiReport skew = check_fundamental_identity(skewed);
  check(!skew.holds, "A_4 with [e1,e2,e3] += e1 passes the identity");
  if (!skew.violations.empty())
    check.note("A_4 with [e1,e2,e3] += e1: " + std::to_string(skew.violations.size()) +
               " violations, first x=" + tuple_to_string(skew.violations.front().x) +
               " y=" + tuple_to_string(skew.violations.front().y));
  return r;
}

CriterionResult alpha_beta_values(const SuiteOptions& o) {
  CriterionResult r{2, "alpha/beta by exhaustive F_p enumeration", true, {}, 0};
  Check check{r};
  struct Case {
    std::string id;
    int m;
    std::size_t alpha, beta;
  };
  const std::vector<Case> cases{{"EX31", 4, 2, 0}, {"EX32-1", 4, 3, 0}, {"EX32-2", 4, 3, 2},
                                {"EX33", 4, 3, 2}, {"EX41", 5, 4, 1},   {"EX42", 6, 5, 4}};
  for (const auto& c : cases) {
    auto t0 = Clock::now();
    std::string seen;
    for (std::uint32_t p : {2u, 3u}) {
      CatalogParams cp;
      cp.dim = c.m;
      cp.field = Field::prime(p);
      // EX41's table is used as given: it does not satisfy the identity.
      NLieAlgebra l = c.id == "EX41" ? catalog_table(c.id, cp) : catalog_build(c.id, cp);
      auto res = alpha_beta_exact_fp(l, search_options(o));
      std::string got = "(" + std::to_string(res.alpha) + "," + std::to_string(res.beta) + ")";
      seen += " F_" + std::to_string(p) + "=" + got;
      check(res.complete && res.alpha == c.alpha && res.beta == c.beta,
            c.id + " over F_" + std::to_string(p) + ": got " + got + ", expected (" +
                std::to_string(c.alpha) + "," + std::to_string(c.beta) + ")");
    }
    double secs = seconds_since(t0);
    check(secs <= 60, c.id + " took " + std::to_string(secs) + " s");
    check.note(c.id + " m=" + std::to_string(c.m) + ":" + seen);
  }
  return r;
}

CriterionResult beta_bound(const SuiteOptions& o) {
  CriterionResult r{3, "beta <= dim - 2 and no codim-1 abelian ideal", true, {}, 0};
  Check check{r};
  std::size_t tested = 0;
  for (const auto& s : catalog_samples(4, 6, Field::prime(2), {"1"})) {
    NLieAlgebra l = catalog_table(s.id, s.params);
    if (!check_fundamental_identity(l, o.threads).holds) {
      check.note("skipped " + s.label + ": not an n-Lie algebra");
      continue;
    }
    if (l.is_abelian()) continue;
    ++tested;
    int m = l.dim();
    auto res = alpha_beta_exact_fp(l, search_options(o));
    check(res.complete && res.beta <= static_cast<std::size_t>(m - 2),
          s.label + ": beta=" + std::to_string(res.beta));
    auto codim1 = find_subspace(l, m - 1, SubspacePredicate::abelian_ideal, search_options(o));
    check(codim1.complete && !codim1.witness, s.label + ": codim-1 abelian ideal found");
  }
  check.note(std::to_string(tested) + " non-abelian algebras over F_2");
  return r;
}

CriterionResult two_step_families(const SuiteOptions& o) {
  CriterionResult r{4, "2-step 2-solvable families and their distinctness", true, {}, 0};
  Check check{r};
  const std::vector<std::string> ids{"T34-a1", "T34-a2", "T35-b1", "T35-b2",
                                     "T35-b3", "T35-b4", "T35-b5", "T35-b6"};
  std::map<std::string, int> min_dim;
  for (const auto& f : catalog_families()) min_dim[f.id] = f.min_dim;

  auto separate = [&](const std::string& a, const std::string& b, int m) {
    CatalogParams q;
    q.dim = m;
    auto fa = fingerprint(catalog_build(a, q));
    auto fb = fingerprint(catalog_build(b, q));
    std::string diff = fingerprint_difference(fa, fb);
    if (!diff.empty()) return "fingerprint over Q (" + diff + ")";
    q.field = Field::prime(2);
    NLieAlgebra la = catalog_build(a, q), lb = catalog_build(b, q);
    diff = fingerprint_difference(fingerprint(la), fingerprint(lb));
    if (!diff.empty()) return "fingerprint over F_2 (" + diff + ")";
    IsoOptions io;
    io.budget = 5'000'000;
    auto res = are_isomorphic(la, lb, io);
    if (res.verdict == IsoVerdict::no && res.exhaustive)
      return "exhaustive search over F_2, " + std::to_string(res.nodes) + " nodes";
    return std::string{};
  };

  for (int m : {5, 6, 7}) {
    std::vector<std::string> present;
    for (const auto& id : ids) {
      if (m < min_dim[id]) {
        check.note(id + " is undefined at m=" + std::to_string(m));
        continue;
      }
      present.push_back(id);
      CatalogParams q;
      q.dim = m;
      NLieAlgebra l = catalog_build(id, q);
      bool a_case = id.rfind("T34-", 0) == 0;
      std::size_t want_d = a_case ? 1 : 2, want_z = m - (a_case ? 3 : 4);
      std::string tag = id + " m=" + std::to_string(m);
      Subspace d = derived_algebra(l), z = center(l);
      check(d.dim() == want_d, tag + ": dim L^1=" + std::to_string(d.dim()));
      check(z.dim() == want_z, tag + ": dim Z=" + std::to_string(z.dim()));
      std::vector<Vector> head;
      for (int i = 0; i < m - 2; ++i) head.push_back(l.unit(i));
      Subspace ideal = Subspace::span(l.field(), m, head);
      check(classify_subspace(l, ideal).is_abelian_ideal, tag + ": span{x1..x(m-2)} not an abelian ideal");
      check(ideal.contains(d), tag + ": L^1 not inside span{x1..x(m-2)}");
      check(is_2step_s_solvable(l, 2), tag + ": not 2-step 2-solvable");
    }
    for (std::size_t i = 0; i < present.size(); ++i)
      for (std::size_t j = i + 1; j < present.size(); ++j) {
        std::string how = separate(present[i], present[j], m);
        check(!how.empty(), present[i] + " vs " + present[j] + " m=" + std::to_string(m) +
                                ": not separated");
        if (!how.empty() && how.rfind("fingerprint over Q", 0) != 0)
          check.note(present[i] + " vs " + present[j] + " m=" + std::to_string(m) + ": " + how);
      }
    CatalogParams q;
    q.dim = m;
    bool b2 = is_nilpotent(catalog_build("T35-b2", q));
    bool b3 = is_nilpotent(catalog_build("T35-b3", q));
    check(!b2 && b3, "T35-b2/b3 m=" + std::to_string(m) + " not split by nilpotency");
  }

  // The 4-dim cores: exhaustive search over F_2.
  const std::vector<std::string> cores{"T35-b4", "T35-b5", "T35-b6"};
  CatalogParams q;
  q.dim = 4;
  q.field = Field::prime(2);
  for (std::size_t i = 0; i < cores.size(); ++i)
    for (std::size_t j = i + 1; j < cores.size(); ++j) {
      IsoOptions io;
      io.budget = 5'000'000;
      auto res = are_isomorphic(catalog_build(cores[i], q), catalog_build(cores[j], q), io);
      check(res.verdict == IsoVerdict::no && res.exhaustive,
            cores[i] + " vs " + cores[j] + " m=4 over F_2: " + to_string(res.verdict));
      check.note(cores[i] + " vs " + cores[j] + " m=4 over F_2: " + to_string(res.verdict) +
                 " (" + res.reason + ")");
    }
  (void)o;
  return r;
}

Subspace lift_to_q(const Subspace& s) {
  std::vector<Vector> rows;
  for (const auto& v : s.basis_vectors()) {
    Vector w;
    for (const auto& x : v) {
      long c = x.residue();
      long p = x.field().modulus();
      if (c > static_cast<long>(p / 2)) c -= p;
      w.push_back(Scalar::from_int(Field::rationals(), c));
    }
    rows.push_back(std::move(w));
  }
  return Subspace::span(Field::rationals(), s.ambient_dim(), rows);
}

CriterionResult hypo_abelian(const SuiteOptions& o) {
  CriterionResult r{5, "codim-1 hypo-abelian ideal in nilpotent algebras with alpha = m-1", true,
                    {}, 0};
  Check check{r};
  for (auto [id, m] : std::vector<std::pair<std::string, int>>{{"EX33", 4}, {"EX42", 5}, {"EX42", 6}}) {
    std::string tag = id + " m=" + std::to_string(m);
    CatalogParams q;
    q.dim = m;
    NLieAlgebra lq = catalog_build(id, q);
    check(is_nilpotent(lq), tag + ": not nilpotent");
    q.field = Field::prime(2);
    NLieAlgebra l2 = catalog_build(id, q);
    auto ab = alpha_beta_exact_fp(l2, search_options(o));
    check(ab.complete && ab.alpha == static_cast<std::size_t>(m - 1),
          tag + ": alpha=" + std::to_string(ab.alpha));
    auto found = find_subspace(l2, m - 1, SubspacePredicate::hypo_abelian_ideal, search_options(o));
    check(found.witness.has_value(), tag + ": no codim-1 hypo-abelian ideal over F_2");
    if (!found.witness) continue;
    Subspace lifted = lift_to_q(*found.witness);
    bool over_q = classify_subspace(lq, lifted).is_hypo_abelian_ideal;
    check(over_q, tag + ": lifted witness is not hypo-abelian over Q");
    check.note(tag + ": " + rows_text(*found.witness) + " after " +
               std::to_string(found.scanned) + " subspaces");
  }
  return r;
}

LieAlgebra lie_sum(const LieAlgebra& a, const LieAlgebra& b) {
  return validated_lie(direct_sum(a.algebra(), b.algebra()));
}

CriterionResult trivial_extensions(const SuiteOptions& o) {
  CriterionResult r{6, "trivial extensions of Lie algebras", true, {}, 0};
  Check check{r};
  for (Field f : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
    std::vector<std::pair<std::string, LieAlgebra>> inputs{
        {"affine", lie_catalog_build("affine", 2, f)},
        {"heisenberg(1)", lie_catalog_build("heisenberg", 1, f)},
        {"affine+abelian(1)", lie_sum(lie_catalog_build("affine", 2, f), lie_catalog_build("abelian", 1, f))},
        {"heisenberg(1)+abelian(1)",
         lie_sum(lie_catalog_build("heisenberg", 1, f), lie_catalog_build("abelian", 1, f))}};
    for (const auto& [name, j0] : inputs) {
      std::string tag = name + " over " + field_label(f);
      NLieAlgebra l = trivial_extension(j0);
      check(check_fundamental_identity(l).holds, tag + ": identity fails");
      auto series = s_derived_series(l, Subspace::full(f, l.dim()), 2, 2);
      check(series.terms.size() < 3 || series.terms[2].is_zero(), tag + ": L^(2,2) != 0");
      if (f.is_rational()) continue;
      auto ab = alpha_beta_exact_fp(l, search_options(o));
      check(ab.complete && ab.beta == static_cast<std::size_t>(l.dim() - 2),
            tag + ": beta=" + std::to_string(ab.beta));
    }
  }
  std::size_t embedded = 0;
  for (const auto& id : lie_catalog_ids()) {
    if (id == "abelian") continue;
    std::vector<int> sizes = id == "heisenberg" ? std::vector<int>{1, 2}
                             : id == "upper" || id == "strictly-upper" ? std::vector<int>{2, 3}
                                                                      : std::vector<int>{0};
    for (int size : sizes) {
      LieAlgebra j0 = lie_catalog_build(id, size);
      if (j0.algebra().is_abelian()) continue;
      ++embedded;
      NLieAlgebra l = trivial_extension(j0);
      std::vector<Vector> rows;
      for (int i = 0; i < j0.dim(); ++i) rows.push_back(l.unit(i));
      Subspace s = Subspace::span(l.field(), l.dim(), rows);
      check(classify_subspace(l, s).is_hypo_abelian_ideal,
            id + "(" + std::to_string(size) + "): embedded copy not hypo-abelian");
    }
  }
  check.note(std::to_string(embedded) + " non-abelian inputs embedded as codim-1 hypo-abelian ideals");
  return r;
}

CriterionResult associated_lie_checks(const SuiteOptions& o) {
  CriterionResult r{7, "associated Lie algebras", true, {}, 0};
  Check check{r};
  std::size_t tested = 0, skipped = 0;
  for (const auto& s : catalog_samples(4, 6, Field::rationals())) {
    NLieAlgebra l = catalog_table(s.id, s.params);
    if (l.arity() != 3) continue;
    if (!check_fundamental_identity(l, o.threads).holds) {
      ++skipped;
      continue;
    }
    for (int w = 0; w < l.dim(); ++w) {
      ++tested;
      try {
        associated_lie(l, l.unit(w));
      } catch (const Error& e) {
        check(false, s.label + " w=x" + std::to_string(w + 1) + ": " + e.what());
      }
    }
  }
  check.note(std::to_string(tested) + " (algebra, w) pairs pass Jacobi; " +
             std::to_string(skipped) + " tables skipped as not 3-Lie");

  CatalogParams q;
  NLieAlgebra ex32 = catalog_build("EX32-1", q);
  LieAlgebra l0 = associated_lie(ex32, ex32.unit(3));
  Subspace z = center(l0.algebra()), d = derived_algebra(l0.algebra());
  check(z.dim() == 1, "EX32-1 w=x4: dim Z(L_0)=" + std::to_string(z.dim()));
  check(d.dim() == 3, "EX32-1 w=x4: dim L_0^1=" + std::to_string(d.dim()));
  check(subspace_intersect(z, d).is_zero(), "EX32-1 w=x4: derived algebra meets the center");
  check.note("EX32-1 w=x4: dim Z=" + std::to_string(z.dim()) + ", dim L_0^1=" +
             std::to_string(d.dim()));

  q.dim = 6;
  q.field = Field::prime(2);
  NLieAlgebra ex42 = catalog_build("EX42", q);
  LieAlgebra l42 = associated_lie(ex42, ex42.unit(0));
  auto ab = alpha_beta_exact_fp(l42.algebra(), search_options(o));
  check(ab.complete && ab.alpha == 5 && ab.beta == 5,
        "EX42 m=6 w=x1: (alpha,beta)=(" + std::to_string(ab.alpha) + "," +
            std::to_string(ab.beta) + ")");
  return r;
}

// Structure constants of L restricted to a subalgebra S, in S's RREF basis.
NLieAlgebra restrict_to(const NLieAlgebra& l, const Subspace& s) {
  int k = static_cast<int>(s.dim());
  NLieAlgebra out(l.field(), l.arity(), k);
  auto basis = s.basis_vectors();
  for (const auto& t : increasing_tuples(k, l.arity())) {
    std::vector<Vector> args;
    for (int i : t) args.push_back(basis[i]);
    Vector v = l.bracket(args);
    Vector coords;
    for (auto piv : s.pivots()) coords.push_back(v[piv]);
    out.set_entry(t, std::move(coords));
  }
  return out;
}

CriterionResult trichotomy(const SuiteOptions& o) {
  CriterionResult r{8, "3-Lie trichotomy", true, {}, 0};
  Check check{r};
  TrichotomyOptions to;
  to.search = search_options(o);
  CatalogParams q;
  auto ex33 = classify_trichotomy(catalog_build("EX33", q), to);
  check(ex33.verdict == Trichotomy::three_solvable, "EX33: " + to_string(ex33.verdict));
  auto a4 = classify_trichotomy(catalog_build("EX31", q), to);
  check(a4.verdict == Trichotomy::simple_a4, "A_4: " + to_string(a4.verdict));

  NLieAlgebra sum = direct_sum(catalog_build("EX31", q), validated(NLieAlgebra(Field::rationals(), 3, 2)));
  auto v = classify_trichotomy(sum, to);
  check(v.verdict == Trichotomy::a4_semidirect, "A_4+F^2: " + to_string(v.verdict));
  if (v.tau && v.s) {
    const Subspace& tau = *v.tau;
    const Subspace& s = *v.s;
    check(tau.dim() == 2, "A_4+F^2: dim tau=" + std::to_string(tau.dim()));
    check(classify_subspace(sum, tau).is_abelian_ideal, "A_4+F^2: tau is not an abelian ideal");
    check(is_subalgebra(sum, s), "A_4+F^2: S is not a subalgebra");
    check(subspace_intersect(s, tau).is_zero() && subspace_sum(s, tau).is_full(),
          "A_4+F^2: S is not a complement of tau");
    auto block = classify_trichotomy(validated(restrict_to(sum, s)), to);
    check(block.verdict == Trichotomy::simple_a4, "A_4+F^2: S is " + to_string(block.verdict));
    check.note("A_4+F^2: tau=" + rows_text(tau) + " S=" + rows_text(s));
  } else {
    check(false, "A_4+F^2: missing tau or S");
  }

  auto t0 = Clock::now();
  CatalogParams f2;
  f2.field = Field::prime(2);
  NLieAlgebra a4a4 = direct_sum(catalog_build("EX31", f2), catalog_build("EX31", f2));
  auto ab = alpha_beta_exact_fp(a4a4, search_options(o));
  double secs = seconds_since(t0);
  check(ab.complete && ab.beta == 0, "A_4+A_4 over F_2: beta=" + std::to_string(ab.beta));
  check(secs <= 180, "A_4+A_4 took " + std::to_string(secs) + " s");
  check.note("A_4+A_4 over F_2: alpha=" + std::to_string(ab.alpha) + " beta=" +
             std::to_string(ab.beta) + " in " + std::to_string(ab.subspaces_scanned) + " subspaces");
  return r;
}

Vector random_vector(std::mt19937_64& rng, Field f, int m) {
  std::uniform_int_distribution<int> d(-3, 3);
  Vector v;
  for (int i = 0; i < m; ++i) v.push_back(Scalar::from_int(f, d(rng)));
  return v;
}

CriterionResult properties(const SuiteOptions& o) {
  CriterionResult r{9, "property suites", true, {}, 0};
  Check check{r};

  std::vector<NLieAlgebra> pool;
  std::vector<std::string> names;
  for (Field f : {Field::rationals(), Field::prime(3)})
    for (const auto& s : catalog_samples(4, 6, f)) {
      NLieAlgebra l = catalog_table(s.id, s.params);
      if (!check_fundamental_identity(l).holds) continue;
      pool.push_back(std::move(l));
      names.push_back(s.label);
    }

  // Antisymmetry and multilinearity on random arguments.
  std::mt19937_64 rng(o.seed);
  std::size_t bad = 0;
  for (int c = 0; c < 1000; ++c) {
    std::size_t pick = rng() % pool.size();
    const NLieAlgebra& l = pool[pick];
    int n = l.arity(), m = l.dim();
    std::vector<Vector> args;
    for (int i = 0; i < n; ++i) args.push_back(random_vector(rng, l.field(), m));
    Vector base = l.bracket(args);
    int i = static_cast<int>(rng() % n);
    int j = (i + 1 + static_cast<int>(rng() % (n - 1))) % n;
    auto swapped = args;
    std::swap(swapped[i], swapped[j]);
    Vector neg = l.bracket(swapped);
    for (auto& x : neg) x = -x;
    bool ok = neg == base;
    Vector u = random_vector(rng, l.field(), m);
    Scalar a = Scalar::from_int(l.field(), static_cast<long>(rng() % 7) - 3);
    auto mixed = args, only_u = args;
    for (int k = 0; k < m; ++k) mixed[i][k] = a * args[i][k] + u[k];
    only_u[i] = u;
    Vector lhs = l.bracket(mixed);
    Vector rhs = scaled(a, base);
    axpy(rhs, Scalar::one(l.field()), l.bracket(only_u));
    ok = ok && lhs == rhs;
    if (!ok && bad++ < 5) check(false, "bracket law fails on " + names[pick]);
  }
  check(bad == 0, std::to_string(bad) + " of 1000 random bracket cases failed");

  // Fingerprints under basis change.
  std::size_t changes = 0;
  for (std::size_t k = 0; k < pool.size(); ++k) {
    // alpha/beta enter only for small F_p cases to keep the run short.
    std::uint64_t ab = !pool[k].field().is_rational() && pool[k].dim() <= 5 ? 200'000 : 0;
    Fingerprint ref = fingerprint(pool[k], ab);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      ++changes;
      Fingerprint got = fingerprint(random_basis_change(pool[k], o.seed + seed), ab);
      if (got != ref)
        check(false, names[k] + " seed " + std::to_string(o.seed + seed) + ": " +
                         fingerprint_difference(ref, got));
    }
  }
  check.note(std::to_string(changes) + " basis changes over " + std::to_string(pool.size()) +
             " catalog algebras");

  // Subspace enumeration against the Gaussian binomial.
  std::size_t counted = 0;
  for (std::uint32_t p : {2u, 3u})
    for (int m = 1; m <= 6; ++m)
      for (int k = 0; k <= m; ++k) {
        SubspaceEnumerator en(m, k, p);
        Subspace s;
        std::set<std::string> seen;
        std::size_t count = 0;
        bool well_formed = true;
        while (en.next(s)) {
          ++count;
          well_formed = well_formed && s.dim() == static_cast<std::size_t>(k) &&
                        Subspace::row_space(s.basis()) == s;
          seen.insert(rows_text(s));
        }
        counted += count;
        std::string tag = "F_" + std::to_string(p) + "^" + std::to_string(m) + " k=" + std::to_string(k);
        check(mpz_class(count) == gaussian_binomial(m, k, p),
              tag + ": " + std::to_string(count) + " subspaces, expected " +
                  gaussian_binomial(m, k, p).get_str());
        check(seen.size() == count, tag + ": duplicates");
        check(well_formed, tag + ": malformed subspace");
      }
  check.note(std::to_string(counted) + " subspaces enumerated");
  return r;
}

}  // namespace

std::vector<CatalogSample> catalog_samples(int min_dim, int max_dim, Field f,
                                           const std::vector<std::string>& alphas,
                                           bool include_action_family) {
  std::vector<CatalogSample> out;
  auto add = [&](const std::string& id, CatalogParams p, const std::string& extra) {
    p.field = f;
    std::string label = id + " m=" + std::to_string(*p.dim) + extra + " over " + field_label(f);
    out.push_back({label, id, std::move(p)});
  };
  for (const auto& fam : catalog_families()) {
    std::vector<std::string> alpha_values{"1"};
    if (fam.takes_alpha) {
      alpha_values.clear();
      std::set<std::string> residues;
      for (const auto& a : alphas) {
        Scalar s = Scalar::parse(a, f);
        if (!s.is_zero() && residues.insert(s.to_string()).second) alpha_values.push_back(a);
      }
    }
    int lo = std::max(min_dim, fam.min_dim);
    int hi = fam.free_dim || is_table_family(fam.id) ? max_dim : std::min(max_dim, fam.min_dim);
    if (!fam.free_dim && !is_table_family(fam.id) && fam.min_dim < min_dim) continue;
    for (int m = lo; m <= hi; ++m) {
      for (const auto& a : alpha_values) {
        std::string a_text = fam.takes_alpha ? " alpha=" + a : "";
        CatalogParams p;
        p.dim = m;
        p.alpha = a;
        if (is_table_family(fam.id)) {
          int n = m - 1;
          if (n > 12) continue;
          p.n = n;
          if (fam.id == "L21-d") {
            for (int rr = 3; rr <= n + 1; ++rr) {
              p.r = rr;
              add(fam.id, p, " r=" + std::to_string(rr) + a_text);
            }
          } else {
            add(fam.id, p, a_text);
          }
          continue;
        }
        if (fam.takes_t) {
          int t_max = fam.id == "T43-c1" ? (m - 1) / 2 : (m - 2) / 2;
          for (int t = 1; t <= t_max; ++t) {
            p.t = t;
            add(fam.id, p, " t=" + std::to_string(t) + a_text);
          }
          continue;
        }
        add(fam.id, p, a_text);
        if (fam.id == "T44-3" && include_action_family && m == 8) {
          p.action = adjoint_action(f);
          add(fam.id, p, " adjoint action");
        }
      }
    }
  }
  return out;
}

CriterionResult run_criterion(int id, const SuiteOptions& options) {
  static const std::vector<std::function<CriterionResult(const SuiteOptions&)>> table{
      fi_validity, alpha_beta_values,      beta_bound, two_step_families, hypo_abelian,
      trivial_extensions, associated_lie_checks, trichotomy, properties};
  require(id >= 1 && id <= kCriteriaCount, ErrorCode::invalid_argument,
          "criterion must be in 1.." + std::to_string(kCriteriaCount));
  auto t0 = Clock::now();
  CriterionResult r;
  try {
    r = table[id - 1](options);
  } catch (const std::exception& e) {
    r.id = id;
    r.passed = false;
    r.details.push_back(std::string("FAIL unexpected error: ") + e.what());
  }
  r.seconds = seconds_since(t0);
  return r;
}

std::vector<CriterionResult> run_suite(const SuiteOptions& options) {
  std::vector<CriterionResult> out;
  for (int i = 1; i <= kCriteriaCount; ++i) out.push_back(run_criterion(i, options));
  return out;
}

}  // namespace nlie
