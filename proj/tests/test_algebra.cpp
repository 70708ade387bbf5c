#include <gtest/gtest.h>

#include "helpers.hpp"
#include "nlie/format.hpp"

using namespace nlie;
using namespace nlie::test;

namespace {

const char* kEx33 = R"({"format": "nlie-v1", "arity": 3, "dim": 4, "field": "Q",
  "brackets": [{"on": [1,2,3], "val": {"4": "1"}}]})";

}  // namespace

TEST(Constants, SignFollowsPermutationParity) {
  NLieAlgebra l(Q, 3, 4);
  l.set({1, 2, 3}, l.unit(3));
  int odd[3] = {1, 0, 2}, even[3] = {1, 2, 0}, repeated[3] = {0, 0, 2};
  EXPECT_EQ(l.basis_bracket(odd), vec(Q, {0, 0, 0, -1}));
  EXPECT_EQ(l.basis_bracket(even), vec(Q, {0, 0, 0, 1}));
  EXPECT_TRUE(is_zero(l.basis_bracket(repeated)));
}

TEST(Constants, SetBracketStoresSortedSign) {
  StructureConstants c(Q, 3, 4);
  c.set_bracket({2, 0, 1}, vec(Q, {0, 0, 0, 5}));  // even permutation of (0,1,2)
  ASSERT_NE(c.find({0, 1, 2}), nullptr);
  EXPECT_EQ(*c.find({0, 1, 2}), vec(Q, {0, 0, 0, 5}));
  c.set_bracket({1, 0, 2}, vec(Q, {0, 0, 0, 5}));
  EXPECT_EQ(*c.find({0, 1, 2}), vec(Q, {0, 0, 0, -5}));
}

TEST(Bracket, Ex33Values) {
  NLieAlgebra l = build("EX33");
  std::vector<Vector> args{l.unit(0), l.unit(1), l.unit(2)};
  EXPECT_EQ(l.bracket(args), l.unit(3));
  args[0] = vec(Q, {1, 1, 0, 0});
  EXPECT_EQ(l.bracket(args), l.unit(3));
  args[1] = args[0];
  EXPECT_TRUE(is_zero(l.bracket(args)));
}

TEST(Bracket, ScalesMultilinearly) {
  NLieAlgebra l = build("EX31");
  std::vector<Vector> args{vec(Q, {1, 2, 0, 0}), vec(Q, {0, 1, -1, 0}), vec(Q, {3, 0, 0, 1})};
  Vector base = l.bracket(args);
  args[1] = scaled(Scalar::from_int(Q, -2), args[1]);
  EXPECT_EQ(l.bracket(args), scaled(Scalar::from_int(Q, -2), base));
}

TEST(BracketSubspaces, DerivedAlgebras) {
  NLieAlgebra ex33 = build("EX33");
  Subspace full = Subspace::full(Q, 4);
  std::vector<Subspace> three(3, full);
  EXPECT_EQ(bracket_subspaces(ex33, three), coords(Q, 4, {4}));
  EXPECT_TRUE(bracket_subspaces(build("EX31"), three).is_full());
  three[1] = Subspace::zero(Q, 4);
  EXPECT_TRUE(bracket_subspaces(ex33, three).is_zero());
}

TEST(FundamentalIdentity, A4Holds) {
  FiReport r = check_fundamental_identity(table("EX31"));
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.instances_checked, 24u);
}

TEST(FundamentalIdentity, SingleSignFlipOfA4IsStillValid) {
  // Negating one constant of A_4 is a diagonal rescaling over C.
  NLieAlgebra a4 = table("EX31");
  Vector v = *a4.constants().find({0, 1, 2});
  for (auto& x : v) x = -x;
  a4.set_entry({0, 1, 2}, v);
  EXPECT_TRUE(check_fundamental_identity(a4).holds);
}

TEST(FundamentalIdentity, PerturbedA4IsCaught) {
  NLieAlgebra a4 = table("EX31");
  Vector v = *a4.constants().find({0, 1, 2});
  v[0] += Scalar::one(Q);
  a4.set_entry({0, 1, 2}, v);
  FiReport r = check_fundamental_identity(a4);
  EXPECT_FALSE(r.holds);
  ASSERT_FALSE(r.violations.empty());
  EXPECT_FALSE(is_zero(r.violations.front().residual));
}

TEST(FundamentalIdentity, Ex41TableViolates) {
  FiReport r = check_fundamental_identity(table("EX41"));
  EXPECT_FALSE(r.holds);
  ASSERT_EQ(r.violations.size(), 4u);
  EXPECT_EQ(tuple_to_string(r.violations[0].x), "[1,2,3]");
  EXPECT_EQ(tuple_to_string(r.violations[0].y), "[4,5]");
  EXPECT_EQ(r.violations[0].residual, vec(Q, {0, 0, 0, 0, -1}));
  EXPECT_THROW(validated(table("EX41")), Error);
}

TEST(FundamentalIdentity, ParallelMatchesSerial) {
  NLieAlgebra l = table("EX41");
  FiReport a = check_fundamental_identity(l, 1), b = check_fundamental_identity(l, 4);
  EXPECT_EQ(a.holds, b.holds);
  EXPECT_EQ(a.instances_checked, b.instances_checked);
  ASSERT_EQ(a.violations.size(), b.violations.size());
  for (std::size_t i = 0; i < a.violations.size(); ++i) {
    EXPECT_EQ(a.violations[i].x, b.violations[i].x);
    EXPECT_EQ(a.violations[i].y, b.violations[i].y);
  }
}

TEST(Format, ParsesEx33) {
  NLieAlgebra l = parse_algebra(kEx33);
  EXPECT_EQ(l.arity(), 3);
  EXPECT_EQ(l.dim(), 4);
  EXPECT_EQ(l.constants().entries().size(), 1u);
  EXPECT_EQ(l, build("EX33"));
}

TEST(Format, RoundTrip) {
  for (const char* id : {"EX31", "EX32-1", "EX33"}) {
    NLieAlgebra l = build(id, std::nullopt, Field::prime(5));
    EXPECT_EQ(parse_algebra(serialize_algebra(l)), l);
  }
  NLieAlgebra b6 = build("T35-b6", 6, Q, "-3/2");
  std::string text = serialize_algebra(b6);
  EXPECT_EQ(serialize_algebra(parse_algebra(text)), text);
}

TEST(Format, EmptyBracketListIsAbelian) {
  NLieAlgebra l = parse_algebra(R"({"format":"nlie-v1","arity":3,"dim":5,"field":"Q","brackets":[]})");
  EXPECT_TRUE(l.is_abelian());
  EXPECT_EQ(l.dim(), 5);
}

TEST(Format, Rejections) {
  auto bad = [](const std::string& text) {
    try {
      parse_algebra(text);
    } catch (const Error& e) {
      return e.code() == ErrorCode::parse;
    }
    return false;
  };
  EXPECT_TRUE(bad(R"({"format":"nlie-v1","arity":3,"dim":4,"field":"Q",
    "brackets":[{"on":[2,1,3],"val":{"4":"1"}}]})"));
  EXPECT_TRUE(bad(R"({"format":"nlie-v1","arity":3,"dim":4,"field":"Q",
    "brackets":[{"on":[1,2,3],"val":{"4":"1"}},{"on":[1,2,3],"val":{"4":"2"}}]})"));
  EXPECT_TRUE(bad(R"({"format":"nlie-v1","arity":3,"dim":4,"field":"Q",
    "brackets":[{"on":[1,2,5],"val":{"4":"1"}}]})"));
  EXPECT_TRUE(bad(R"({"format":"nlie-v2","arity":3,"dim":4,"field":"Q","brackets":[]})"));
  EXPECT_TRUE(bad(R"({"format":"nlie-v1","arity":3,"dim":4,"field":{"p":4},"brackets":[]})"));
  EXPECT_TRUE(bad("not json"));
}

TEST(Format, SubspaceSidecar) {
  Subspace s = parse_subspace(R"({"format":"nlie-subspace-v1","dim":4,"rows":[["2","0","0","2"],["1","0","0","1"]]})", Q);
  EXPECT_EQ(s, span_of(Q, 4, {{1, 0, 0, 1}}));
  EXPECT_EQ(parse_subspace(serialize_subspace(s), Q), s);
  EXPECT_EQ(parse_vector("1, -1/2,0", Q, 3), (Vector{Scalar::one(Q), Scalar::parse("-1/2", Q), Scalar::zero(Q)}));
  EXPECT_THROW(parse_vector("1,2", Q, 3), Error);
}
