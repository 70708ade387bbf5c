#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "helpers.hpp"
#include "nlie/abelian_search.hpp"
#include "nlie/invariants.hpp"
#include "nlie/isomorphism.hpp"
#include "nlie/suite.hpp"

using namespace nlie;
using namespace nlie::test;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::unsupported;
}

}  // namespace

TEST(Catalog, Tables) {
  NLieAlgebra a2 = build("T34-a2", 5);
  ASSERT_EQ(a2.constants().entries().size(), 1u);
  EXPECT_EQ(a2.constants().entries()[0].on, (IndexTuple{0, 3, 4}));
  EXPECT_EQ(a2.constants().entries()[0].value, a2.unit(0));

  NLieAlgebra b6 = build("T35-b6", 6, Q, "2");
  EXPECT_EQ(*b6.constants().find({1, 4, 5}), vec(Q, {2, 1, 0, 0, 0, 0}));
  EXPECT_EQ(*b6.constants().find({0, 4, 5}), vec(Q, {0, 1, 0, 0, 0, 0}));
  EXPECT_EQ(b6.constants().entries().size(), 2u);

  CatalogParams p;
  p.n = 3;
  EXPECT_EQ(catalog_build("A", p), build("EX31"));
  EXPECT_EQ(catalog_build("A3", {}), build("EX31"));
}

TEST(Catalog, ParameterErrors) {
  EXPECT_EQ(code_of([] { build("T35-b6", 6, Q, "0"); }), ErrorCode::invalid_argument);
  EXPECT_EQ(code_of([] { build("T35-b6", 6, Field::prime(2), "2"); }), ErrorCode::invalid_argument);
  EXPECT_EQ(code_of([] { build("T35-b1", 5); }), ErrorCode::invalid_argument);
  EXPECT_EQ(code_of([] { build("no-such-family"); }), ErrorCode::invalid_argument);
  EXPECT_EQ(code_of([] { build("EX41"); }), ErrorCode::fi_violation);
  CatalogParams p;
  p.dim = 7;
  p.t = 4;
  EXPECT_EQ(code_of([&] { catalog_table("T43-c1", p); }), ErrorCode::invalid_argument);
}

TEST(Catalog, PairCountFamilies) {
  CatalogParams p;
  p.dim = 7;
  p.t = 1;
  EXPECT_TRUE(check_fundamental_identity(catalog_table("T43-c1", p)).holds);
  p.t = 2;
  EXPECT_FALSE(check_fundamental_identity(catalog_table("T43-c1", p)).holds);
  for (int t = 1; t <= 2; ++t) {
    p.t = t;
    EXPECT_TRUE(check_fundamental_identity(catalog_table("T43-c3", p)).holds) << t;
  }
}

TEST(Catalog, SamplesCoverEveryFamily) {
  auto samples = catalog_samples(4, 6, Q);
  std::set<std::string> ids;
  for (const auto& s : samples) ids.insert(s.id);
  for (const auto& f : catalog_families()) EXPECT_TRUE(ids.count(f.id)) << f.id;
}

TEST(Constructions, AssociatedLie) {
  LieAlgebra l0 = associated_lie(build("EX32-1"), vec(Q, {0, 0, 0, 1}));
  const NLieAlgebra& a = l0.algebra();
  EXPECT_EQ(*a.constants().find({0, 2}), a.unit(1));
  EXPECT_EQ(*a.constants().find({1, 2}), a.unit(0));
  EXPECT_EQ(*a.constants().find({0, 1}), a.unit(2));

  NLieAlgebra ex33 = build("EX33");
  EXPECT_TRUE(associated_lie(ex33, ex33.unit(3)).algebra().is_abelian());

  NLieAlgebra ex42 = build("EX42", 6);
  LieAlgebra l42 = associated_lie(ex42, ex42.unit(0));
  for (int j = 4; j <= 6; ++j)
    EXPECT_EQ(*l42.algebra().constants().find({1, j - 1}), ex42.unit(j - 2));

  EXPECT_THROW(associated_lie(build("L21-b1", 5), vec(Q, {1, 0, 0, 0, 0})), Error);
}

TEST(Constructions, TrivialExtension) {
  NLieAlgebra h = trivial_extension(lie_catalog_build("heisenberg", 1));
  EXPECT_EQ(*h.constants().find({0, 1, 3}), h.unit(2));
  EXPECT_EQ(are_isomorphic(h, build("EX33")).verdict, IsoVerdict::yes);
  EXPECT_TRUE(trivial_extension(lie_catalog_build("abelian", 3)).is_abelian());
  EXPECT_EQ(trivial_extension(lie_catalog_build("so3-core", 0)), build("EX32-1"));
}

TEST(Constructions, DirectSum) {
  NLieAlgebra l = build("EX33");
  NLieAlgebra s = direct_sum(l, validated(NLieAlgebra(Q, 3, 2)));
  EXPECT_EQ(derived_algebra(s).dim(), derived_algebra(l).dim());
  EXPECT_TRUE(check_fundamental_identity(s).holds);
  EXPECT_THROW(direct_sum(l, NLieAlgebra(Q, 2, 2)), Error);
}

TEST(Constructions, A4PlusA4HasNoAbelianIdeal) {
  Field f2 = Field::prime(2);
  NLieAlgebra a4 = build("EX31", std::nullopt, f2);
  auto r = alpha_beta_exact_fp(direct_sum(a4, a4));
  EXPECT_EQ(r.beta, 0u);
}

TEST(Semidirect, ZeroActionIsDirect) {
  NLieAlgebra l = semidirect_a4(Q, 6, {});
  EXPECT_EQ(l, direct_sum(build("EX31"), NLieAlgebra(Q, 3, 2)));
  EXPECT_TRUE(classify_subspace(l, coords(Q, 6, {5, 6})).is_abelian_ideal);
  EXPECT_TRUE(classify_subspace(l, coords(Q, 6, {1, 2, 3, 4})).is_ideal);
}

TEST(Semidirect, BadActionIsRejected) {
  ActionEntry e{1, 2, 1, vec(Q, {1})};
  EXPECT_EQ(code_of([&] { semidirect_a4(Q, 5, {e}); }), ErrorCode::fi_violation);
}

TEST(Semidirect, AdjointActionIsValid) {
  auto samples = catalog_samples(8, 8, Q);
  bool found = false;
  for (const auto& s : samples)
    if (s.id == "T44-3" && !s.params.action.empty()) {
      found = true;
      NLieAlgebra l = catalog_build(s.id, s.params);
      EXPECT_TRUE(classify_subspace(l, coords(Q, 8, {5, 6, 7, 8})).is_abelian_ideal);
    }
  EXPECT_TRUE(found);
}

TEST(Trichotomy, Verdicts) {
  EXPECT_EQ(classify_trichotomy(build("EX33")).verdict, Trichotomy::three_solvable);
  EXPECT_EQ(classify_trichotomy(build("EX31")).verdict, Trichotomy::simple_a4);
  auto v = classify_trichotomy(semidirect_a4(Q, 6, {}));
  EXPECT_EQ(v.verdict, Trichotomy::a4_semidirect);
  ASSERT_TRUE(v.tau);
  EXPECT_EQ(v.tau->dim(), 2u);
  EXPECT_EQ(to_string(v.verdict), "A4-semidirect");
}

TEST(Trichotomy, OverFiniteField) {
  Field f5 = Field::prime(5);
  auto v = classify_trichotomy(semidirect_a4(f5, 5, {}));
  EXPECT_EQ(v.verdict, Trichotomy::a4_semidirect);
  EXPECT_EQ(v.p, 5u);
}

TEST(LieCatalog, Members) {
  LieAlgebra h = lie_catalog_build("heisenberg", 1);
  EXPECT_EQ(*h.algebra().constants().find({0, 1}), h.algebra().unit(2));
  EXPECT_EQ(h.algebra().constants().entries().size(), 1u);

  LieAlgebra n3 = lie_catalog_build("strictly-upper", 3);
  EXPECT_EQ(n3.dim(), 3);
  EXPECT_TRUE(is_nilpotent(n3.algebra()));

  LieAlgebra u2 = lie_catalog_build("upper", 2);
  EXPECT_EQ(u2.dim(), 3);

  LieAlgebra aff = lie_catalog_build("affine", 2, Field::prime(3));
  EXPECT_TRUE(is_2step_s_solvable(aff.algebra(), 2));
  EXPECT_EQ(alpha_beta_exact_fp(aff.algebra()).beta, 1u);
}
