#pragma once

// Skeletal (relative) Rota-Baxter Lie 2-algebras (zero differentials) and
// their 3-cocycles.
//
// Storage conventions:
//   l3: g1_dim x C(g0_dim, 3), column = increasing triple of g0 indices.
//   rho1[a]: v1_dim x v0_dim, the map rho1(e_a): V0 -> V1 for a in g1.
//   rho2[p]: v1_dim x v0_dim, rho2(e_i, e_j) for the p-th pair i < j.
//   T2: g1_dim x C(v0_dim, 2), column = increasing pair of V0 indices.

#include <cstddef>
#include <vector>

#include "rrb/algebra.hpp"
#include "rrb/cohomology.hpp"
#include "rrb/linalg.hpp"
#include "rrb/rota_baxter.hpp"
#include "rrb/validation.hpp"

namespace rrb {

struct SkeletalRRB2 {
  LieAlgebra g0;          // l2 on g0 x g0
  LinearRep g1_action;    // l2(x, a) for x in g0, a in g1
  Matrix l3;
  LinearRep rho0_v0;      // rho0 on V0
  LinearRep rho0_v1;      // rho0 on V1
  std::vector<Matrix> rho1;
  std::vector<Matrix> rho2;
  Matrix T0;              // g0_dim x v0_dim
  Matrix T1;              // g1_dim x v1_dim
  Matrix T2;

  std::size_t g0_dim() const { return g0.dim(); }
  std::size_t g1_dim() const { return g1_action.space_dim; }
  std::size_t v0_dim() const { return rho0_v0.space_dim; }
  std::size_t v1_dim() const { return rho0_v1.space_dim; }
  bool operator==(const SkeletalRRB2&) const = default;
};

/// Lie 2-algebra with a Rota-Baxter operator for the adjoint representation.
struct SkeletalRB2 {
  LieAlgebra g0;
  LinearRep g1_action;
  Matrix l3;
  Matrix T0;  // g0_dim x g0_dim
  Matrix T1;  // g1_dim x g1_dim
  Matrix T2;  // g1_dim x C(g0_dim, 2)

  std::size_t g0_dim() const { return g0.dim(); }
  std::size_t g1_dim() const { return g1_action.space_dim; }
  bool operator==(const SkeletalRB2&) const = default;
};

/// Axioms: "jacobi", "g1_representation", "jacobiator" (Lie 2-algebra);
/// "rho0_v0_representation", "rho0_v1_representation", "rho1_equivariance",
/// "rho2_coherence" (representation); "operator_i", "operator_ii",
/// "operator_iii" (operator conditions). Throws ShapeError on bad shapes.
ValidationReport check_skeletal_rrb2(const SkeletalRRB2& s);
/// Checked against the adjoint representation (ad0, ad1, ad2).
ValidationReport check_skeletal_rb2(const SkeletalRB2& s);

struct RRBThreeCocycle {
  RRBAlgebra base;
  RRBRepresentation coeffs;
  Vector coords;  // degree-3 cochain coordinates
};

struct RBThreeCocycle {
  RBAlgebra base;
  RBRepresentation coeffs;
  Vector coords;
};

/// f_h = l3, f_w(x,y,u) = -rho2(x,y)u, theta(u,v) = -T2(u,v); coefficients
/// [V1 -T1-> g1, l2, rho0|V1, mu(u)a = -rho1(a)u]. Throws AxiomError when s
/// is invalid.
RRBThreeCocycle rrb2_to_3cocycle(const SkeletalRRB2& s);
/// Inverse of rrb2_to_3cocycle. Throws AxiomError when c is not a cocycle or
/// the result fails check_skeletal_rrb2.
SkeletalRRB2 cocycle_to_rrb2(const RRBAlgebra& base, const RRBRepresentation& coeffs, const Vector& c);

/// f = l3, theta = -T2, coefficients [g1; T1, l2].
RBThreeCocycle rb2_to_3cocycle(const SkeletalRB2& s);
SkeletalRB2 cocycle_to_rb2(const RBAlgebra& base, const RBRepresentation& coeffs, const Vector& c);

/// The skeletal RRB 2-algebra of the adjoint representation:
/// V0 = g0, V1 = g1, rho1(a)x = l2(a, x), rho2(x,y)z = -l3(x,y,z).
SkeletalRRB2 skeletal_rb2_as_rrb2(const SkeletalRB2& s);

}  // namespace rrb
