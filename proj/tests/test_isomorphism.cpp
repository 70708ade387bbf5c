#include <gtest/gtest.h>

#include "helpers.hpp"
#include "nlie/isomorphism.hpp"

using namespace nlie;
using namespace nlie::test;

TEST(Fingerprint, SeparatesTheA1A2Cases) {
  auto a = fingerprint(build("T34-a1", 5)), b = fingerprint(build("T34-a2", 5));
  EXPECT_NE(a, b);
  EXPECT_FALSE(fingerprint_difference(a, b).empty());
}

TEST(Fingerprint, NilpotencySeparatesB2B3) {
  auto a = fingerprint(build("T35-b2", 6)), b = fingerprint(build("T35-b3", 6));
  EXPECT_FALSE(a.nilpotent);
  EXPECT_TRUE(b.nilpotent);
}

TEST(Fingerprint, AlphaBetaOnlyOverFp) {
  EXPECT_FALSE(fingerprint(build("EX33")).alpha);
  auto f = fingerprint(build("EX33", std::nullopt, Field::prime(3)));
  ASSERT_TRUE(f.alpha && f.beta);
  EXPECT_EQ(*f.alpha, 3u);
  EXPECT_EQ(*f.beta, 2u);
}

TEST(BasisChange, IdentityKeepsTheTable) {
  NLieAlgebra l = build("EX42", 5);
  EXPECT_EQ(change_basis(l, Matrix::identity(Q, 5)), l);
}

TEST(BasisChange, InvariantsSurvive) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    NLieAlgebra ex33 = build("EX33");
    EXPECT_EQ(fingerprint(random_basis_change(ex33, seed)), fingerprint(ex33));
    EXPECT_TRUE(check_fundamental_identity(random_basis_change(build("EX31"), seed)).holds);
  }
}

TEST(BasisChange, SeedIsDeterministic) {
  NLieAlgebra l = build("T35-b1", 6);
  EXPECT_EQ(random_basis_change(l, 42), random_basis_change(l, 42));
}

TEST(Iso, CoresOverF2AreDistinct) {
  Field f2 = Field::prime(2);
  auto r = are_isomorphic(build("T35-b4", 4, f2), build("T35-b5", 4, f2));
  EXPECT_EQ(r.verdict, IsoVerdict::no);
  EXPECT_TRUE(r.exhaustive);
}

TEST(Iso, FingerprintMismatchSaysNo) {
  auto r = are_isomorphic(build("T34-a1", 5), build("T34-a2", 5));
  EXPECT_EQ(r.verdict, IsoVerdict::no);
  EXPECT_EQ(r.nodes, 0u);
}

TEST(Iso, RandomChangeGivesVerifiedWitness) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    NLieAlgebra a = build("EX31", std::nullopt, Field::prime(p));
    NLieAlgebra b = random_basis_change(a, 7);
    auto r = are_isomorphic(a, b);
    ASSERT_EQ(r.verdict, IsoVerdict::yes) << p;
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(change_basis(a, *r.witness), b);
  }
  // Over Q the search is a semidecision: never "no", and any "yes" is verified.
  for (const char* id : {"EX32-2", "EX33", "EX31"})
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      NLieAlgebra a = build(id);
      NLieAlgebra b = random_basis_change(a, seed);
      auto r = are_isomorphic(a, b);
      EXPECT_NE(r.verdict, IsoVerdict::no) << id;
      if (r.verdict == IsoVerdict::yes) EXPECT_EQ(change_basis(a, *r.witness), b);
    }
  NLieAlgebra a = build("EX32-2");
  EXPECT_EQ(are_isomorphic(a, random_basis_change(a, 5)).verdict, IsoVerdict::yes);
}

TEST(Iso, ReflexiveAndSymmetric) {
  Field f3 = Field::prime(3);
  const char* ids[] = {"T35-b4", "T35-b5", "T35-b6"};
  for (const char* x : ids) {
    EXPECT_EQ(are_isomorphic(build(x, 5, f3), build(x, 5, f3)).verdict, IsoVerdict::yes) << x;
    for (const char* y : ids) {
      auto xy = are_isomorphic(build(x, 5, f3), build(y, 5, f3)).verdict;
      auto yx = are_isomorphic(build(y, 5, f3), build(x, 5, f3)).verdict;
      EXPECT_EQ(xy, yx) << x << " " << y;
    }
  }
}

TEST(Iso, ModPOnRationalInputs) {
  IsoOptions o;
  o.p = 2;
  NLieAlgebra a = build("EX33");
  auto r = are_isomorphic(a, random_basis_change(a, 11), o);
  EXPECT_NE(r.verdict, IsoVerdict::no);
  auto n = are_isomorphic(build("T35-b4", 4), build("T35-b5", 4), o);
  EXPECT_NE(n.verdict, IsoVerdict::yes);
}

TEST(Iso, MismatchedShapes) {
  EXPECT_THROW(are_isomorphic(build("EX33"), build("EX42", 5)), Error);
  EXPECT_THROW(are_isomorphic(build("EX33"), build("EX33", std::nullopt, Field::prime(3))), Error);
}
