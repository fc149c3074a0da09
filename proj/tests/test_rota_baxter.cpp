#include <gtest/gtest.h>

#include "rrb/rota_baxter.hpp"
#include "support/fixtures.hpp"

using namespace rrb;

namespace {

bool has_axiom(const ValidationReport& r, const std::string& axiom) {
  for (const auto& v : r.violations)
    if (v.axiom == axiom) return true;
  return false;
}

Matrix projection(std::size_t keep, std::size_t drop) {
  Matrix p(keep, keep + drop);
  for (std::size_t i = 0; i < keep; ++i) p(i, i) = 1;
  return p;
}

}  // namespace

TEST(RotaBaxter, NamedFixturesAreValid) {
  EXPECT_TRUE(check_rrb(fixtures::f0()).valid());
  EXPECT_TRUE(check_rrb(fixtures::f1()).valid());
  EXPECT_TRUE(check_rb(fixtures::f2()).valid());
  EXPECT_TRUE(check_rrb_representation(fixtures::f0(), fixtures::f0_coeffs()).valid());
}

TEST(RotaBaxter, IdentityOnAff1FailsWithWitness) {
  auto rep = check_rrb(fixtures::bad_rrb_identity());
  ASSERT_EQ(rep.violations.size(), 1u);
  EXPECT_EQ(rep.violations[0].axiom, "relative_rota_baxter");
  EXPECT_EQ(rep.violations[0].witness, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(rep.violations[0].residual, (Vector{0, -1}));

  auto rb = check_rb(fixtures::bad_rb_identity());
  ASSERT_EQ(rb.violations.size(), 1u);
  EXPECT_EQ(rb.violations[0].axiom, "rota_baxter");
  EXPECT_EQ(rb.violations[0].residual, (Vector{0, 1}));
  EXPECT_THROW(RBAlgebra::create(fixtures::aff1(), Matrix::identity(2)), AxiomError);
}

TEST(RotaBaxter, PerturbedMuIsRejected) {
  auto rep = check_rrb_representation(fixtures::f1(), fixtures::f1_perturbed_mu());
  EXPECT_FALSE(rep.valid());
  EXPECT_TRUE(has_axiom(rep, "mu_equivariance") || has_axiom(rep, "operator_compatibility"));
}

TEST(RotaBaxter, ShapeMismatchThrows) {
  RRBRepresentation r = adjoint_rrb_rep(fixtures::f1());
  r.mu.pop_back();
  EXPECT_THROW(check_rrb_representation(fixtures::f1(), r), ShapeError);
}

TEST(RotaBaxter, AdjointAndCoadjointPackagesOnF1) {
  const auto a = fixtures::f1();
  const auto ad = adjoint_rrb_rep(a);
  EXPECT_TRUE(check_rrb_representation(a, ad).valid());
  EXPECT_EQ(ad.h_dim, 2u);
  EXPECT_EQ(ad.w_dim, 1u);
  const auto co = dual_rrb_rep(ad);
  EXPECT_TRUE(check_rrb_representation(a, co).valid());
  EXPECT_EQ(dual_rrb_rep(co), ad);
}

TEST(RotaBaxter, SemidirectProductProjectsHomomorphically) {
  const auto a = fixtures::f1();
  const auto r = adjoint_rrb_rep(a);
  const auto s = semidirect_rrb(a, r);
  EXPECT_TRUE(check_rrb(s).valid());
  EXPECT_TRUE(check_representation(s.g, s.rep).valid());
  EXPECT_TRUE(check_rrb_homomorphism(s, a, projection(2, 2), projection(1, 1)).valid());
  Matrix bad = projection(2, 2);
  bad(0, 2) = 1;
  EXPECT_FALSE(check_rrb_homomorphism(s, a, bad, projection(1, 1)).valid());
}

TEST(RotaBaxter, RbSemidirectAndEmbedding) {
  const auto a = fixtures::f2();
  const auto r = adjoint_rb_rep(a);
  EXPECT_TRUE(check_rb_representation(a, r).valid());
  const auto s = semidirect_rb(a, r);
  EXPECT_TRUE(check_rb(s).valid());
  EXPECT_TRUE(check_rb_homomorphism(s, a, projection(2, 2)).valid());
  EXPECT_TRUE(check_rrb(rb_to_rrb(a)).valid());
}

TEST(RotaBaxter, InducedPreLieOnF1) {
  const auto a = fixtures::f1();
  const auto A = induced_prelie(a);
  EXPECT_TRUE(check_left_symmetry(A).valid());
  EXPECT_TRUE(check_prelie_rep(A, induced_prelie_rep(a, adjoint_rrb_rep(a))).valid());
}

TEST(RotaBaxter, RMatrixOnTwoDimensionalAlgebra) {
  Matrix r{{0, 1}, {-1, 0}};
  EXPECT_TRUE(check_rrb(rrb_from_r_matrix(fixtures::aff1(), r)).valid());
  EXPECT_THROW(rrb_from_r_matrix(fixtures::aff1(), Matrix{{0, 1}, {0, 0}}), ShapeError);
}

TEST(RotaBaxter, EndComplexExample) {
  const auto ex = end_complex_rrb(Matrix{{1}, {0}});
  EXPECT_EQ(ex.end_basis.cols(), 3u);
  EXPECT_EQ(ex.algebra.g_dim(), 3u);
  EXPECT_EQ(ex.algebra.v_dim(), 0u);
  EXPECT_TRUE(check_rrb(ex.algebra).valid());

  const auto ex2 = end_complex_rrb(Matrix{{1, 0}});
  EXPECT_EQ(ex2.algebra.v_dim(), 1u);
  EXPECT_TRUE(check_rrb(ex2.algebra).valid());
  EXPECT_TRUE(check_representation(ex2.algebra.g, ex2.algebra.rep).valid());
}

TEST(RotaBaxter, DualNumbersGiveValidRbPair) {
  AssociativeRBData d;
  d.dim = 2;
  d.product = constants_from(2, [](std::size_t i, std::size_t j) {
    Vector v{0, 0};
    if (i + j < 2) v[i + j] = 1;
    return v;
  });
  d.T = Matrix{{0, 0}, {1, 0}};
  d.module_dim = 2;
  d.action = {Matrix::identity(2), Matrix{{0, 0}, {1, 0}}};
  d.curlyT = d.T;
  EXPECT_TRUE(check_associative_rb(d).valid());
  auto [alg, rep] = from_associative(d);
  EXPECT_TRUE(check_rb(alg).valid());
  EXPECT_TRUE(check_rb_representation(alg, rep).valid());
}

TEST(RotaBaxter, StrictUpperProjectionIsNotRotaBaxter) {
  // basis E11, E12, E22 of upper triangular 2x2 matrices
  AssociativeRBData d;
  d.dim = 3;
  d.product = constants_from(3, [](std::size_t i, std::size_t j) {
    Vector v{0, 0, 0};
    if (i == 0 && j == 0) v[0] = 1;
    if (i == 0 && j == 1) v[1] = 1;
    if (i == 1 && j == 2) v[1] = 1;
    if (i == 2 && j == 2) v[2] = 1;
    return v;
  });
  d.T = Matrix{{0, 0, 0}, {0, 1, 0}, {0, 0, 0}};
  d.module_dim = 0;
  d.action = {Matrix(0, 0), Matrix(0, 0), Matrix(0, 0)};
  d.curlyT = Matrix(0, 0);
  const auto rep = check_associative_rb(d);
  ASSERT_FALSE(rep.valid());
  bool found = false;
  for (const auto& v : rep.violations)
    if (v.witness == std::vector<std::size_t>{0, 1}) found = true;
  EXPECT_TRUE(found);
  EXPECT_THROW(from_associative(d), AxiomError);
}

TEST(RotaBaxter, DerivationSpaces) {
  const auto s1 = derivation_space(fixtures::f1());
  EXPECT_EQ(s1.dim(), 2u);
  for (const auto& b : s1.basis()) {
    Matrix fg(2, 2), fv(1, 1);
    for (std::size_t i = 0; i < 4; ++i) fg(i / 2, i % 2) = b[i];
    fv(0, 0) = b[4];
    EXPECT_TRUE(check_derivation(fixtures::f1(), fg, fv).valid());
  }
  EXPECT_EQ(rb_derivation_space(fixtures::f2()).dim(), 1u);
  EXPECT_FALSE(check_rb_derivation(fixtures::f2(), Matrix::identity(2) + Matrix{{0, 0}, {0, 1}}).valid());
}

TEST(RotaBaxterProperty, RandomInstancesCloseUnderConstructions) {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 25; ++trial) {
    auto inst = fixtures::random_rrb(gen);
    SCOPED_TRACE(inst.name);
    ASSERT_TRUE(check_rrb(inst.algebra).valid());
    ASSERT_TRUE(check_rrb_representation(inst.algebra, inst.coeffs).valid());
    EXPECT_TRUE(check_rrb(semidirect_rrb(inst.algebra, inst.coeffs)).valid());
    const auto dual = dual_rrb_rep(inst.coeffs);
    EXPECT_TRUE(check_rrb_representation(inst.algebra, dual).valid());
    EXPECT_EQ(dual_rrb_rep(dual), inst.coeffs);
    const auto A = induced_prelie(inst.algebra);
    EXPECT_TRUE(check_left_symmetry(A).valid());
    EXPECT_TRUE(check_prelie_rep(A, induced_prelie_rep(inst.algebra, inst.coeffs)).valid());
  }
  for (int trial = 0; trial < 25; ++trial) {
    auto inst = fixtures::random_rb(gen);
    SCOPED_TRACE(inst.name);
    EXPECT_TRUE(check_rb(semidirect_rb(inst.algebra, inst.coeffs)).valid());
    EXPECT_TRUE(check_rrb(rb_to_rrb(inst.algebra)).valid());
  }
}
