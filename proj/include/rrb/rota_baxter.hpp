#pragma once

// Rota-Baxter and relative Rota-Baxter Lie algebras, their representations,
// and the standard constructions on them (semidirect products, duals,
// induced pre-Lie data, derivations).
//
// Fixed basis conventions: sums are always ordered "base part first", so
// g + H has the g basis followed by the H basis, and V + W likewise.

#include <cstddef>
#include <utility>
#include <vector>

#include "rrb/algebra.hpp"
#include "rrb/linalg.hpp"
#include "rrb/validation.hpp"

namespace rrb {

/// (g, rho on V, T: V -> g). T is dim g x dim V.
struct RRBAlgebra {
  LieAlgebra g;
  LinearRep rep;
  Matrix T;

  /// Throws AxiomError if any axiom fails.
  static RRBAlgebra create(LieAlgebra g, LinearRep rep, Matrix T);

  std::size_t g_dim() const { return g.dim(); }
  std::size_t v_dim() const { return rep.space_dim; }
  bool operator==(const RRBAlgebra&) const = default;
};

/// (g, T) with T a Rota-Baxter operator of weight zero.
struct RBAlgebra {
  LieAlgebra g;
  Matrix T;

  static RBAlgebra create(LieAlgebra g, Matrix T);
  std::size_t dim() const { return g.dim(); }
  bool operator==(const RBAlgebra&) const = default;
};

/// Coefficient data [W -> H, rho_h, rho_w, mu] over an RRB algebra.
/// curlyT is h_dim x w_dim; mu[k] is the w_dim x h_dim matrix mu(u_k).
struct RRBRepresentation {
  std::size_t h_dim = 0;
  std::size_t w_dim = 0;
  Matrix curlyT;
  LinearRep rho_h;
  LinearRep rho_w;
  std::vector<Matrix> mu;

  static RRBRepresentation zero(const RRBAlgebra& a, std::size_t h_dim, std::size_t w_dim);
  /// mu(u) for an arbitrary u in V.
  Matrix mu_of(const Vector& u) const;
  bool operator==(const RRBRepresentation&) const = default;
};

/// Coefficient data [W; curlyT, rho_w] over an RB algebra.
struct RBRepresentation {
  std::size_t w_dim = 0;
  Matrix curlyT;
  LinearRep rho_w;

  static RBRepresentation zero(const RBAlgebra& a, std::size_t w_dim);
  bool operator==(const RBRepresentation&) const = default;
};

// Checks. Each returns every violated identity together with the basis
// indices where it fails. Shape mismatches throw ShapeError.
//
// check_rrb residual on (u_i, u_j): [Tu, Tv] - T(rho(Tu)v - rho(Tv)u).
// check_rb residual on (e_i, e_j):  T([Tx, y] + [x, Ty]) - [Tx, Ty].
ValidationReport check_rrb(const RRBAlgebra& a);
ValidationReport check_rb(const RBAlgebra& a);
ValidationReport check_rrb_representation(const RRBAlgebra& a, const RRBRepresentation& r);
ValidationReport check_rb_representation(const RBAlgebra& a, const RBRepresentation& r);

/// Homomorphism (phi: g -> g', psi: V -> V') of RRB algebras.
ValidationReport check_rrb_homomorphism(const RRBAlgebra& from, const RRBAlgebra& to, const Matrix& phi,
                                        const Matrix& psi);
ValidationReport check_rb_homomorphism(const RBAlgebra& from, const RBAlgebra& to, const Matrix& phi);

/// [V -T-> g, ad, rho, rhobar] with rhobar(u)(x) = -rho(x)u.
RRBRepresentation adjoint_rrb_rep(const RRBAlgebra& a);
/// [H* -(-curlyT^T)-> W*, rho_w*, rho_h*, -mu^T].
RRBRepresentation dual_rrb_rep(const RRBRepresentation& r);
/// [g; T, ad].
RBRepresentation adjoint_rb_rep(const RBAlgebra& a);

/// The RRB algebra on g + H with V + W; bracket
/// [x+a, y+b] = [x,y] + rho_h(x)b - rho_h(y)a, action
/// (x+a)(u+w) = rho(x)u + rho_w(x)w - mu(u)a, operator diag(T, curlyT).
RRBAlgebra semidirect_rrb(const RRBAlgebra& a, const RRBRepresentation& r);
/// The RB algebra on g + W with operator diag(T, curlyT).
RBAlgebra semidirect_rb(const RBAlgebra& a, const RBRepresentation& r);

/// u_i . u_j = rho(T u_i) u_j.
PreLieAlgebra induced_prelie(const RRBAlgebra& a);
/// theta(u) = rho_w(Tu), vartheta(u) = -mu(u) curlyT.
PreLieRep induced_prelie_rep(const RRBAlgebra& a, const RRBRepresentation& r);

/// (g, ad, T).
RRBAlgebra rb_to_rrb(const RBAlgebra& a);

/// Candidate with V = g*, coadjoint action and T = r read as a map g* -> g.
/// Throws ShapeError if r is not antisymmetric; validity is left to check_rrb.
RRBAlgebra rrb_from_r_matrix(const LieAlgebra& g, const Matrix& r);

/// The RRB algebra End(W -> H) acting on Hom(H, ker curlyT).
///
/// g has a basis of the solution space of A0 curlyT = curlyT A1 in
/// gl(H) + gl(W) (coordinates A0 row-major, then A1). V = Hom(H, ker curlyT)
/// with Phi = K phi for the canonical kernel basis K, coordinates phi
/// row-major. Action A.Phi = A1 Phi - Phi A0, operator Phi -> (0, Phi curlyT).
struct EndComplexExample {
  RRBAlgebra algebra;
  Matrix end_basis;     // columns: basis of End in gl(H) + gl(W)
  Matrix kernel_basis;  // columns: basis of ker curlyT
};
EndComplexExample end_complex_rrb(const Matrix& curlyT);

/// f_g a derivation of g, T f_V = f_g T, f_V(rho(x)u) = rho(x) f_V u + rho(f_g x) u.
ValidationReport check_derivation(const RRBAlgebra& a, const Matrix& f_g, const Matrix& f_V);
/// f a derivation of g commuting with T.
ValidationReport check_rb_derivation(const RBAlgebra& a, const Matrix& f);
/// Lie derivation condition alone.
ValidationReport check_lie_derivation(const LieAlgebra& g, const Matrix& f);

/// Solution spaces of the derivation conditions, obtained by solving the
/// linear system directly. Coordinates: f_g row-major, then f_V row-major.
Subspace derivation_space(const RRBAlgebra& a);
Subspace rb_derivation_space(const RBAlgebra& a);

/// An associative algebra (product e_i e_j = sum_k c(i,j,k) e_k) with a
/// Rota-Baxter operator T and a left module (one matrix per basis element)
/// with operator curlyT.
struct AssociativeRBData {
  std::size_t dim = 0;
  std::vector<Rational> product;
  Matrix T;
  std::size_t module_dim = 0;
  std::vector<Matrix> action;
  Matrix curlyT;
};
ValidationReport check_associative_rb(const AssociativeRBData& d);
/// Commutator Lie algebra with the same T, and the module as a representation.
/// Throws AxiomError naming every violated associative-side axiom.
std::pair<RBAlgebra, RBRepresentation> from_associative(const AssociativeRBData& d);

}  // namespace rrb
