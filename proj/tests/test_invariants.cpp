#include <gtest/gtest.h>

#include "helpers.hpp"
#include "nlie/invariants.hpp"

using namespace nlie;
using namespace nlie::test;

TEST(Derived, Dimensions) {
  EXPECT_TRUE(derived_algebra(NLieAlgebra(Q, 3, 5)).is_zero());
  EXPECT_EQ(derived_algebra(build("T34-a1", 6)), coords(Q, 6, {1}));
  EXPECT_EQ(derived_algebra(build("T35-b4", 6)), coords(Q, 6, {1, 2}));
  EXPECT_EQ(derived_algebra(table("EX41")).dim(), 1u);
}

TEST(Series, TwoDerivedOfT34a1) {
  NLieAlgebra l = build("T34-a1", 5);
  auto r = s_derived_series(l, Subspace::full(Q, 5), 2);
  EXPECT_EQ(r.dims(), (std::vector<std::size_t>{5, 1, 0}));
  EXPECT_TRUE(r.terminated_at_zero);
}

TEST(Series, A4Stabilizes) {
  auto r = s_derived_series(build("EX31"), Subspace::full(Q, 4), 3);
  EXPECT_EQ(r.dims(), (std::vector<std::size_t>{4, 4}));
  EXPECT_TRUE(r.stabilized);
  EXPECT_FALSE(r.terminated_at_zero);
}

TEST(Series, AbelianDiesInOneStep) {
  auto r = s_derived_series(NLieAlgebra(Q, 3, 3), Subspace::full(Q, 3), 2);
  EXPECT_EQ(r.dims(), (std::vector<std::size_t>{3, 0}));
}

TEST(Series, StepLimitTruncates) {
  auto r = s_derived_series(build("T34-a1", 5), Subspace::full(Q, 5), 2, 1);
  EXPECT_EQ(r.dims(), (std::vector<std::size_t>{5, 1}));
  EXPECT_TRUE(r.truncated);
}

TEST(Series, RejectsNonIdeal) {
  NLieAlgebra a4 = build("EX31");
  EXPECT_THROW(s_derived_series(a4, coords(Q, 4, {1}), 2), Error);
}

TEST(Nilpotency, Examples) {
  EXPECT_TRUE(is_nilpotent(build("EX33")));
  EXPECT_FALSE(is_nilpotent(build("T35-b2", 6)));
  EXPECT_TRUE(is_nilpotent(build("T35-b3", 6)));
  EXPECT_FALSE(is_nilpotent(build("EX31")));
  auto r = lower_central_series(build("EX31"), Subspace::full(Q, 4));
  EXPECT_EQ(r.dims(), (std::vector<std::size_t>{4, 4}));
}

TEST(Center, Dimensions) {
  EXPECT_EQ(center(build("T34-a1", 6)).dim(), 3u);
  EXPECT_EQ(center(build("T35-b5", 6)).dim(), 2u);
  EXPECT_TRUE(center(table("EX41")).is_zero());
  EXPECT_EQ(center(build("EX33")), coords(Q, 4, {4}));
}

TEST(Center, VectorsAreCentral) {
  NLieAlgebra l = build("EX42", 6);
  Subspace z = center(l);
  EXPECT_EQ(z.dim(), 1u);
  for (const auto& v : z.basis_vectors())
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        std::vector<Vector> args{v, l.unit(i), l.unit(j)};
        EXPECT_TRUE(is_zero(l.bracket(args)));
      }
}

TEST(Classify, Examples) {
  SubspaceClass c = classify_subspace(build("EX32-1"), coords(Q, 4, {1, 2, 3}));
  EXPECT_TRUE(c.is_hypo_abelian_ideal);
  EXPECT_TRUE(c.is_ideal);
  EXPECT_FALSE(c.is_abelian_ideal);

  c = classify_subspace(build("EX33"), coords(Q, 4, {1, 4}));
  EXPECT_TRUE(c.is_abelian_ideal);

  for (const char* id : {"EX31", "EX32-2", "EX33"}) {
    NLieAlgebra l = build(id);
    EXPECT_TRUE(classify_subspace(l, center(l)).is_abelian_ideal) << id;
  }

  c = classify_subspace(build("EX31"), coords(Q, 4, {1, 2}));
  EXPECT_TRUE(c.is_subalgebra);
  EXPECT_TRUE(c.is_abelian_subalgebra);
  EXPECT_FALSE(c.is_ideal);
}

TEST(Solvability, Examples) {
  EXPECT_TRUE(is_2step_s_solvable(build("T35-b1", 6), 2));
  EXPECT_FALSE(is_s_solvable(build("EX31"), 3));
  NLieAlgebra ab(Q, 3, 4);
  EXPECT_TRUE(is_s_solvable(ab, 2));
  EXPECT_TRUE(is_s_solvable(ab, 3));
}

TEST(Report, Summaries) {
  InvariantReport r = invariant_report(table("EX41"));
  EXPECT_EQ(r.dim_derived, 1u);

  r = invariant_report(build("EX42", 6));
  EXPECT_TRUE(r.nilpotent);
  EXPECT_EQ(r.dim_center, 1u);

  r = invariant_report(NLieAlgebra(Q, 3, 5));
  EXPECT_EQ(r.dim_derived, 0u);
  EXPECT_EQ(r.dim_center, 5u);
  EXPECT_EQ(r.derived_dims.at(2), (std::vector<std::size_t>{5, 0}));
  EXPECT_EQ(r.derived_dims.at(3), (std::vector<std::size_t>{5, 0}));
  EXPECT_EQ(r.lower_central_dims, (std::vector<std::size_t>{5, 0}));
}
