#include <gtest/gtest.h>

#include "rrb/lie2.hpp"
#include "rrb/wedge.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace rrb;

namespace {

bool has_axiom(const ValidationReport& r, const std::string& axiom) {
  for (const auto& v : r.violations)
    if (v.axiom == axiom) return true;
  return false;
}

void randomize(std::mt19937_64& gen, Matrix& m) {
  std::uniform_int_distribution<int> d(-1, 1);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = d(gen);
}

void roundtrip_rrb(const RRBAlgebra& a, const RRBRepresentation& r, const Vector& c) {
  const SkeletalRRB2 s = cocycle_to_rrb2(a, r, c);
  EXPECT_TRUE(check_skeletal_rrb2(s).valid());
  EXPECT_EQ(oracle::skeletal_coords(s), c);
  const RRBThreeCocycle back = rrb2_to_3cocycle(s);
  EXPECT_EQ(back.base, a);
  EXPECT_EQ(back.coeffs, r);
  EXPECT_EQ(back.coords, c);
  EXPECT_EQ(cocycle_to_rrb2(back.base, back.coeffs, back.coords), s);
}

void roundtrip_rb(const RBAlgebra& a, const RBRepresentation& r, const Vector& c) {
  const SkeletalRB2 s = cocycle_to_rb2(a, r, c);
  EXPECT_TRUE(check_skeletal_rb2(s).valid());
  EXPECT_EQ(oracle::skeletal_coords(s), c);
  const RBThreeCocycle back = rb2_to_3cocycle(s);
  EXPECT_EQ(back.base, a);
  EXPECT_EQ(back.coeffs, r);
  EXPECT_EQ(back.coords, c);
  EXPECT_EQ(cocycle_to_rb2(back.base, back.coeffs, back.coords), s);
}

}  // namespace

TEST(Lie2, AllZeroIsValid) {
  SkeletalRRB2 s;
  s.g0 = LieAlgebra::abelian(2);
  s.g1_action = LinearRep::zero(2, 1);
  s.l3 = Matrix(1, 0);
  s.rho0_v0 = LinearRep::zero(2, 2);
  s.rho0_v1 = LinearRep::zero(2, 1);
  s.rho1 = {Matrix(1, 2)};
  s.rho2 = {Matrix(1, 2)};
  s.T0 = Matrix(2, 2);
  s.T1 = Matrix(1, 1);
  s.T2 = Matrix(1, 1);
  EXPECT_TRUE(check_skeletal_rrb2(s).valid());
  s.T2(0, 0) = 1;
  EXPECT_TRUE(check_skeletal_rrb2(s).valid());  // T0 = 0 kills every T2 term in condition (iii)
  s.rho2.pop_back();
  EXPECT_THROW(check_skeletal_rrb2(s), ShapeError);
}

TEST(Lie2, ZeroCocycleOnF1GivesStrictStructure) {
  const auto a = fixtures::f1();
  const auto r = adjoint_rrb_rep(a);
  const auto s3 = CochainScheme::rrb(a, r, 3);
  const SkeletalRRB2 s = cocycle_to_rrb2(a, r, zero_vector(s3.total()));
  EXPECT_TRUE(s.l3.is_zero());
  EXPECT_TRUE(s.T2.is_zero());
  for (const auto& m : s.rho2) EXPECT_TRUE(m.is_zero());
  EXPECT_TRUE(check_skeletal_rrb2(s).valid());
}

TEST(Lie2, StrictStructureOverBrokenOperatorFailsConditionOne) {
  const auto bad = fixtures::bad_rrb_identity();
  SkeletalRRB2 s;
  s.g0 = bad.g;
  s.g1_action = LinearRep::zero(2, 0);
  s.l3 = Matrix(0, 0);
  s.rho0_v0 = bad.rep;
  s.rho0_v1 = LinearRep::zero(2, 0);
  s.rho2 = {Matrix(0, 2)};
  s.T0 = bad.T;
  s.T1 = Matrix(0, 0);
  s.T2 = Matrix(0, 1);
  const auto report = check_skeletal_rrb2(s);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].axiom, "operator_i");
  EXPECT_EQ(report.violations[0].witness, (std::vector<std::size_t>{0, 1}));
}

TEST(Lie2, EveryThreeCocycleOnF1AdjointRoundTrips) {
  const auto a = fixtures::f1();
  const auto r = adjoint_rrb_rep(a);
  const Subspace z3 = kernel(coboundary_matrix(a, r, 3));
  ASSERT_GT(z3.dim(), 0u);
  for (const auto& c : z3.basis()) roundtrip_rrb(a, r, c);
}

TEST(Lie2, EveryThreeCocycleOnF2AdjointRoundTrips) {
  const auto a = fixtures::f2();
  const auto r = adjoint_rb_rep(a);
  const Subspace z3 = kernel(rb_coboundary_matrix(a, r, 3));
  ASSERT_GT(z3.dim(), 0u);
  for (const auto& c : z3.basis()) roundtrip_rb(a, r, c);
}

TEST(Lie2, NonCocycleIsRejected) {
  std::mt19937_64 gen(8);
  fixtures::RBInstance inst;
  Matrix D;
  do {
    inst = fixtures::random_rb(gen, 3);
    D = rb_coboundary_matrix(inst.algebra, inst.coeffs, 3);
  } while (D.is_zero());
  const auto& a = inst.algebra;
  const auto& r = inst.coeffs;
  bool tried = false;
  for (std::size_t k = 0; k < D.cols(); ++k) {
    const Vector e = unit_vector(D.cols(), k);
    if (is_zero(D * e)) continue;
    tried = true;
    try {
      cocycle_to_rb2(a, r, e);
      ADD_FAILURE() << "accepted a non-cocycle";
    } catch (const AxiomError& err) {
      EXPECT_EQ(err.report().violations.front().axiom.rfind("cocycle_", 0), 0u);
    }
  }
  EXPECT_TRUE(tried);
}

TEST(Lie2, PerturbedT2FailsConditionThree) {
  std::mt19937_64 gen(5);
  int found = 0;
  for (int trial = 0; trial < 200 && found < 3; ++trial) {
    auto inst = fixtures::random_rrb(gen, 3);
    const auto s3 = CochainScheme::rrb(inst.algebra, inst.coeffs, 3);
    if (s3.theta_size() == 0) continue;
    const Matrix D = coboundary_matrix(inst.algebra, inst.coeffs, 3);
    for (std::size_t k = s3.bar_size(); k < s3.total(); ++k) {
      const Vector e = unit_vector(s3.total(), k);
      if (is_zero(D * e)) continue;
      SkeletalRRB2 s = cocycle_to_rrb2(inst.algebra, inst.coeffs, zero_vector(s3.total()));
      const std::size_t off = k - s3.bar_size();
      s.T2(off % s.g1_dim(), off / s.g1_dim()) += 1;
      const auto report = check_skeletal_rrb2(s);
      ASSERT_FALSE(report.valid()) << inst.name;
      for (const auto& v : report.violations) {
        EXPECT_EQ(v.axiom, "operator_iii") << inst.name;
        EXPECT_EQ(v.witness.size(), 3u);
      }
      ++found;
      break;
    }
  }
  EXPECT_EQ(found, 3);
}

TEST(Lie2Property, AxiomsHoldExactlyForCocycles) {
  // For arbitrary higher data over a fixed valid degree-0 and coefficient
  // package, the full axiom check passes iff the coordinates are a cocycle.
  std::mt19937_64 gen(99);
  int valid_seen = 0, invalid_seen = 0;
  for (int trial = 0; trial < 20; ++trial) {
    auto inst = fixtures::random_rrb(gen, 3);
    SCOPED_TRACE(inst.name);
    const auto s3 = CochainScheme::rrb(inst.algebra, inst.coeffs, 3);
    const Matrix D = coboundary_matrix(inst.algebra, inst.coeffs, 3);
    const Subspace z3 = kernel(D);
    for (const auto& c : z3.basis()) roundtrip_rrb(inst.algebra, inst.coeffs, c);

    SkeletalRRB2 s = cocycle_to_rrb2(inst.algebra, inst.coeffs, zero_vector(s3.total()));
    for (int k = 0; k < 3; ++k) {
      randomize(gen, s.l3);
      for (auto& m : s.rho2) randomize(gen, m);
      randomize(gen, s.T2);
      const bool cocycle = is_zero(D * oracle::skeletal_coords(s));
      EXPECT_EQ(check_skeletal_rrb2(s).valid(), cocycle);
      (cocycle ? valid_seen : invalid_seen)++;
    }
  }
  for (int trial = 0; trial < 20; ++trial) {
    auto inst = fixtures::random_rb(gen, 3);
    SCOPED_TRACE(inst.name);
    const auto s3 = CochainScheme::rb(inst.algebra, inst.coeffs, 3);
    const Matrix D = rb_coboundary_matrix(inst.algebra, inst.coeffs, 3);
    for (const auto& c : kernel(D).basis()) roundtrip_rb(inst.algebra, inst.coeffs, c);

    SkeletalRB2 s = cocycle_to_rb2(inst.algebra, inst.coeffs, zero_vector(s3.total()));
    for (int k = 0; k < 3; ++k) {
      randomize(gen, s.l3);
      randomize(gen, s.T2);
      const bool cocycle = is_zero(D * oracle::skeletal_coords(s));
      EXPECT_EQ(check_skeletal_rb2(s).valid(), cocycle);
      (cocycle ? valid_seen : invalid_seen)++;
    }
  }
  EXPECT_GT(valid_seen, 0);
  EXPECT_GT(invalid_seen, 0);
}
