#include <gtest/gtest.h>

#include <set>

#include "helpers.hpp"
#include "nlie/abelian_search.hpp"
#include "nlie/format.hpp"
#include "nlie/invariants.hpp"

using namespace nlie;
using namespace nlie::test;

namespace {

const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);
const Field F5 = Field::prime(5);

std::size_t count(int m, int k, std::uint32_t p) {
  SubspaceEnumerator e(m, k, p);
  Subspace s;
  std::size_t n = 0;
  while (e.next(s)) ++n;
  return n;
}

}  // namespace

TEST(Enumerator, Counts) {
  EXPECT_EQ(count(5, 0, 3), 1u);
  EXPECT_EQ(count(5, 5, 3), 1u);
  EXPECT_EQ(count(4, 2, 2), 35u);
  EXPECT_EQ(gaussian_binomial(4, 2, 2), 35);
  EXPECT_EQ(gaussian_binomial(6, 3, 3), 33880);
}

TEST(Enumerator, DistinctAndOrdered) {
  SubspaceEnumerator e(4, 2, 3);
  Subspace s;
  std::set<std::string> seen;
  std::vector<std::size_t> last_pivots;
  while (e.next(s)) {
    EXPECT_TRUE(seen.insert(serialize_subspace(s)).second);
    EXPECT_GE(s.pivots(), last_pivots);  // profiles come in lexicographic order
    last_pivots = s.pivots();
  }
  EXPECT_EQ(seen.size(), 130u);
}

TEST(AlphaBeta, KnownValues) {
  auto r = alpha_beta_exact_fp(build("EX31", std::nullopt, F5));
  EXPECT_EQ(r.alpha, 2u);
  EXPECT_EQ(r.beta, 0u);
  EXPECT_TRUE(r.complete);
  EXPECT_FALSE(r.beta_witness);

  r = alpha_beta_exact_fp(build("EX33", std::nullopt, F3));
  EXPECT_EQ(r.alpha, 3u);
  EXPECT_EQ(r.beta, 2u);

  r = alpha_beta_exact_fp(table("EX41", std::nullopt, F2));
  EXPECT_EQ(r.alpha, 4u);
  EXPECT_EQ(r.beta, 1u);
}

TEST(AlphaBeta, WitnessesHaveTheClaimedProperties) {
  NLieAlgebra l = build("EX32-2", std::nullopt, F3);
  auto r = alpha_beta_exact_fp(l);
  ASSERT_TRUE(r.alpha_witness && r.beta_witness);
  EXPECT_EQ(r.alpha_witness->dim(), r.alpha);
  EXPECT_TRUE(classify_subspace(l, *r.alpha_witness).is_abelian_subalgebra);
  EXPECT_TRUE(classify_subspace(l, *r.beta_witness).is_abelian_ideal);
}

TEST(AlphaBeta, DirectSums) {
  for (Field f : {F2, F3}) {
    NLieAlgebra a4 = build("EX31", std::nullopt, f);
    NLieAlgebra l = direct_sum(a4, validated(NLieAlgebra(f, 3, 1)));
    auto r = alpha_beta_exact_fp(l);
    EXPECT_EQ(r.alpha, 3u);
    EXPECT_EQ(r.beta, 1u);
  }
}

TEST(AlphaBeta, ThreadCountDoesNotChangeTheAnswer) {
  NLieAlgebra l = build("EX42", 6, F2);
  SearchOptions one, four;
  four.threads = 4;
  auto a = alpha_beta_exact_fp(l, one), b = alpha_beta_exact_fp(l, four);
  EXPECT_EQ(a.alpha, b.alpha);
  EXPECT_EQ(a.beta, b.beta);
  EXPECT_EQ(a.alpha_witness, b.alpha_witness);
  EXPECT_EQ(a.beta_witness, b.beta_witness);
  EXPECT_EQ(a.subspaces_scanned, b.subspaces_scanned);
}

TEST(AlphaBeta, BudgetExhaustionIsReported) {
  SearchOptions tiny;
  tiny.budget = 3;
  auto r = alpha_beta_exact_fp(build("EX31", std::nullopt, F3), tiny);
  EXPECT_FALSE(r.complete);
  EXPECT_LE(r.alpha, 2u);
}

TEST(AlphaBeta, RejectsQ) {
  EXPECT_THROW(alpha_beta_exact_fp(build("EX31")), Error);
}

TEST(QBounds, Examples) {
  auto r = abelian_bounds_q(build("EX42", 6));
  EXPECT_GE(r.alpha, 5u);
  ASSERT_TRUE(r.alpha_witness);
  EXPECT_TRUE(classify_subspace(build("EX42", 6), *r.alpha_witness).is_abelian_subalgebra);

  r = abelian_bounds_q(NLieAlgebra(Q, 3, 4));
  EXPECT_EQ(r.alpha, 4u);
  EXPECT_TRUE(r.alpha_witness && r.alpha_witness->is_full());

  r = abelian_bounds_q(build("T43-c2", 5));
  EXPECT_GE(r.beta, 1u);
  EXPECT_LE(r.beta, r.beta_upper);
}

TEST(Reduce, ModP) {
  NLieAlgebra a4 = reduce_mod_p(build("EX31"), 2);
  EXPECT_TRUE(check_fundamental_identity(a4).holds);

  NLieAlgebra thirds(Q, 3, 4);
  thirds.set({1, 2, 3}, vec(Q, {0, 0, 0, 1}));
  thirds.set({1, 2, 4}, Vector{Scalar::zero(Q), Scalar::zero(Q), Scalar::parse("1/3", Q), Scalar::zero(Q)});
  EXPECT_FALSE(reducible_mod_p(thirds, 3));
  EXPECT_THROW(reduce_mod_p(thirds, 3), Error);
  EXPECT_TRUE(reducible_mod_p(thirds, 5));

  auto r = alpha_beta_exact_fp(reduce_mod_p(build("EX33"), 5));
  EXPECT_EQ(r.alpha, 3u);
  EXPECT_EQ(r.beta, 2u);
}

TEST(FindSubspace, HypoAbelianCodimOne) {
  NLieAlgebra l = build("EX33", std::nullopt, F2);
  auto s = find_subspace(l, 3, SubspacePredicate::hypo_abelian_ideal);
  ASSERT_TRUE(s.witness);
  EXPECT_TRUE(classify_subspace(l, *s.witness).is_hypo_abelian_ideal);
  EXPECT_FALSE(find_subspace(build("EX31", std::nullopt, F2), 2, SubspacePredicate::ideal).witness);
}

TEST(Claims, Examples) {
  Claims c;
  c.alpha = 3;
  c.beta = 0;
  EXPECT_TRUE(verify_claims(build("EX32-1"), c).all_pass());
  c.beta = 2;
  EXPECT_TRUE(verify_claims(build("EX32-2"), c).all_pass());

  Claims wrong;
  wrong.beta = 3;
  auto rep = verify_claims(build("EX33"), wrong);
  EXPECT_FALSE(rep.all_pass());
  ASSERT_EQ(rep.checks.size(), 1u);
  EXPECT_EQ(rep.checks[0].status, ClaimStatus::fail);

  Claims exact;
  exact.dim_derived = 1;
  exact.dim_center = 1;
  exact.nilpotent = true;
  EXPECT_TRUE(verify_claims(build("EX33"), exact).all_pass());
}
