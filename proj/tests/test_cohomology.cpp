#include <gtest/gtest.h>

#include "rrb/cohomology.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace rrb;

namespace {

struct Case {
  std::string name;
  RRBAlgebra a;
  RRBRepresentation r;
};

std::vector<Case> rrb_cases() {
  const auto f1 = fixtures::f1();
  const auto end = end_complex_rrb(Matrix{{1}, {0}}).algebra;
  const auto end2 = end_complex_rrb(Matrix{{1, 0}}).algebra;
  return {{"F0", fixtures::f0(), fixtures::f0_coeffs()},
          {"F0-adjoint", fixtures::f0(), adjoint_rrb_rep(fixtures::f0())},
          {"F1-adjoint", f1, adjoint_rrb_rep(f1)},
          {"F1-coadjoint", f1, dual_rrb_rep(adjoint_rrb_rep(f1))},
          {"End-adjoint", end, adjoint_rrb_rep(end)},
          {"End2-adjoint", end2, adjoint_rrb_rep(end2)}};
}

}  // namespace

TEST(Cohomology, SchemeSizes) {
  const auto a = fixtures::f1();
  const auto r = adjoint_rrb_rep(a);
  EXPECT_EQ(CochainScheme::rrb(a, r, 0).total(), 0u);
  EXPECT_EQ(CochainScheme::rrb(a, r, 1).total(), 5u);
  EXPECT_EQ(CochainScheme::rrb(a, r, 2).total(), 6u);
  EXPECT_EQ(CochainScheme::rrb(a, r, 3).total(), 1u);
  const auto f0 = CochainScheme::rrb(fixtures::f0(), fixtures::f0_coeffs(), 2);
  EXPECT_EQ(f0.fh_size(), 1u);
  EXPECT_EQ(f0.fw_size(), 2u);
  EXPECT_EQ(f0.theta_size(), 1u);
}

TEST(Cohomology, SquareZeroOnNamedCases) {
  for (const auto& c : rrb_cases()) {
    SCOPED_TRACE(c.name);
    for (std::size_t n = 1; n <= 3; ++n)
      EXPECT_TRUE((coboundary_matrix(c.a, c.r, n + 1) * coboundary_matrix(c.a, c.r, n)).is_zero()) << n;
  }
  const auto f2 = fixtures::f2();
  const auto r2 = adjoint_rb_rep(f2);
  for (std::size_t n = 1; n <= 3; ++n)
    EXPECT_TRUE((rb_coboundary_matrix(f2, r2, n + 1) * rb_coboundary_matrix(f2, r2, n)).is_zero());
}

TEST(Cohomology, BlockStructure) {
  const auto a = fixtures::f1();
  const auto r = adjoint_rrb_rep(a);
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto s = CochainScheme::rrb(a, r, n), t = CochainScheme::rrb(a, r, n + 1);
    const Matrix D = coboundary_matrix(a, r, n);
    EXPECT_EQ(D.block(0, 0, t.bar_size(), s.bar_size()), delta_matrix(a, r, n));
    EXPECT_EQ(D.block(t.bar_size(), 0, t.theta_size(), s.bar_size()), hT_matrix(a, r, n));
    EXPECT_EQ(D.block(t.bar_size(), s.bar_size(), t.theta_size(), s.theta_size()), partial_matrix(a, r, n));
    EXPECT_TRUE(D.block(0, s.bar_size(), t.bar_size(), s.theta_size()).is_zero());
  }
}

TEST(Cohomology, MatchesDenseOracle) {
  for (const auto& c : rrb_cases())
    for (std::size_t n = 1; n <= 3; ++n) {
      SCOPED_TRACE(c.name + " degree " + std::to_string(n));
      EXPECT_EQ(coboundary_matrix(c.a, c.r, n), oracle::rrb_coboundary(c.a, c.r, n));
    }
  const auto f2 = fixtures::f2();
  const auto r2 = adjoint_rb_rep(f2);
  for (std::size_t n = 1; n <= 3; ++n) EXPECT_EQ(rb_coboundary_matrix(f2, r2, n), oracle::rb_coboundary(f2, r2, n));
  const auto a = fixtures::f1();
  const auto r = adjoint_rrb_rep(a);
  const auto A = induced_prelie(a);
  const auto pr = induced_prelie_rep(a, r);
  for (std::size_t n = 1; n <= 3; ++n) EXPECT_EQ(prelie_coboundary(A, pr, n), oracle::prelie_coboundary(A, pr, n));
}

TEST(Cohomology, AdjointComplexAgrees) {
  for (const auto& c : rrb_cases())
    for (std::size_t n = 1; n <= 3; ++n) {
      SCOPED_TRACE(c.name + " degree " + std::to_string(n));
      EXPECT_EQ(adjoint_complex_matrix(c.a, n), coboundary_matrix(c.a, adjoint_rrb_rep(c.a), n));
    }
}

TEST(Cohomology, TrivialStructureHasFullCohomology) {
  const auto rep = cohomology_dims(fixtures::f0(), fixtures::f0_coeffs(), 3);
  ASSERT_EQ(rep.degrees.size(), 3u);
  const std::size_t expected[] = {3, 4, 1};
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(rep.degrees[i].dim_H, rep.degrees[i].dim_cochains);
    EXPECT_EQ(rep.degrees[i].dim_H, expected[i]);
  }
}

TEST(Cohomology, FirstCohomologyCountsDerivations) {
  const auto a = fixtures::f1();
  const auto rep = cohomology_dims(a, adjoint_rrb_rep(a), 1);
  EXPECT_EQ(rep.degrees[0].dim_H, oracle::derivation_solution_dim(a));
  EXPECT_EQ(rep.degrees[0].dim_H, 2u);

  const auto b = fixtures::f2();
  const auto rb = rb_cohomology_dims(b, adjoint_rb_rep(b), 1);
  EXPECT_EQ(rb.degrees[0].dim_H, oracle::rb_derivation_solution_dim(b));
  EXPECT_EQ(rb.degrees[0].dim_H, 1u);
}

TEST(Cohomology, DimensionsAgreeWithOracleRank) {
  const auto a = fixtures::f1();
  const auto r = adjoint_rrb_rep(a);
  const auto rep = cohomology_dims(a, r, 3);
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto& d = rep.degrees[n - 1];
    const std::size_t rank_out = oracle::rank(oracle::rrb_coboundary(a, r, n));
    const std::size_t rank_in = n == 1 ? 0 : oracle::rank(oracle::rrb_coboundary(a, r, n - 1));
    EXPECT_EQ(d.dim_H, d.dim_cochains - rank_out - rank_in) << n;
  }
}

TEST(Cohomology, XiIsChainMap) {
  const auto a = fixtures::f1();
  EXPECT_TRUE(xi_commutes(a, adjoint_rrb_rep(a), 3).valid());
}

TEST(Cohomology, LongExactSequenceOnF1) {
  const auto a = fixtures::f1();
  const auto les = les_report(a, adjoint_rrb_rep(a), 3);
  EXPECT_TRUE(les.exact());
  EXPECT_EQ(les.nodes.size(), 10u);
  for (const auto& node : les.nodes) EXPECT_TRUE(node.exact()) << node.space << node.degree;
}

TEST(Cohomology, Embeddings) {
  const auto a = fixtures::f1();
  EXPECT_TRUE(rrb_semidirect_embedding_check(a, adjoint_rrb_rep(a), 2).valid());
  const auto b = fixtures::f2();
  EXPECT_TRUE(rb_embedding_check(b, adjoint_rb_rep(b), 2).valid());
}

TEST(Cohomology, CocycleMembership) {
  const auto a = fixtures::f1();
  const auto r = adjoint_rrb_rep(a);
  const Matrix D1 = coboundary_matrix(a, r, 1);
  Cochain b{CochainScheme::rrb(a, r, 1), {1, 0, 2, -1, 3}};
  Cochain c{CochainScheme::rrb(a, r, 2), D1 * b.coords};
  EXPECT_TRUE(is_cocycle(a, r, c));
  auto pre = coboundary_preimage(a, r, c);
  ASSERT_TRUE(pre.has_value());
  EXPECT_EQ(D1 * pre->coords, c.coords);
  Cochain zero{c.scheme, zero_vector(c.coords.size())};
  EXPECT_TRUE(cohomologous(a, r, c, zero).has_value());
  for (const auto& z : kernel(coboundary_matrix(a, r, 2)).basis()) {
    Cochain zc{c.scheme, z};
    EXPECT_TRUE(is_cocycle(a, r, zc));
  }
}

TEST(Cohomology, BudgetIsEnforced) {
  const auto a = fixtures::f1();
  try {
    coboundary_matrix(a, adjoint_rrb_rep(a), 2, 3);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.budget, 3u);
    EXPECT_GT(e.requested, 3u);
  }
}

TEST(Cohomology, ThreadCountDoesNotChangeMatrices) {
  const auto a = fixtures::f1();
  const auto r = adjoint_rrb_rep(a);
  const Matrix serial = coboundary_matrix(a, r, 2);
  setenv("RRB_THREADS", "3", 1);
  const Matrix parallel = coboundary_matrix(a, r, 2);
  unsetenv("RRB_THREADS");
  EXPECT_EQ(serial, parallel);
}

TEST(CohomologyProperty, RandomInstances) {
  std::mt19937_64 gen(2024);
  for (int trial = 0; trial < 20; ++trial) {
    auto inst = fixtures::random_rrb(gen);
    SCOPED_TRACE(inst.name);
    const auto& a = inst.algebra;
    const auto& r = inst.coeffs;
    for (std::size_t n = 1; n <= 3; ++n) {
      const Matrix D = coboundary_matrix(a, r, n);
      EXPECT_EQ(D, oracle::rrb_coboundary(a, r, n));
      EXPECT_TRUE((coboundary_matrix(a, r, n + 1) * D).is_zero());
    }
    EXPECT_TRUE(xi_commutes(a, r, 3).valid());
    EXPECT_TRUE(les_report(a, r, 3).exact());
    EXPECT_TRUE(rrb_semidirect_embedding_check(a, r, 2).valid());
  }
  for (int trial = 0; trial < 20; ++trial) {
    auto inst = fixtures::random_rb(gen);
    SCOPED_TRACE(inst.name);
    for (std::size_t n = 1; n <= 3; ++n) {
      const Matrix D = rb_coboundary_matrix(inst.algebra, inst.coeffs, n);
      EXPECT_EQ(D, oracle::rb_coboundary(inst.algebra, inst.coeffs, n));
      EXPECT_TRUE((rb_coboundary_matrix(inst.algebra, inst.coeffs, n + 1) * D).is_zero());
    }
    EXPECT_TRUE(rb_embedding_check(inst.algebra, inst.coeffs, 2).valid());
  }
}
