#pragma once

// Abelian extensions and their 2-cocycles.
//
// An extension of (g, V, T) by (H, W, curlyT) is stored in the concatenated
// basis: the total Lie algebra is g + H (g first) and the total space is
// V + W (V first). Inclusion and projection are the canonical ones.
//
// A 2-cocycle (omega, varpi, chi) is held in the coordinates of the degree-2
// cochain space: omega = f_h block, varpi = f_w block, chi = theta block.

#include <cstddef>
#include <stdexcept>

#include "rrb/cohomology.hpp"
#include "rrb/linalg.hpp"
#include "rrb/rota_baxter.hpp"
#include "rrb/validation.hpp"

namespace rrb {

/// Thrown when a section does not split the projection.
struct InvalidSection : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct AbelianExtension {
  RRBAlgebra total;
  RRBAlgebra base;
  std::size_t h_dim = 0;
  std::size_t w_dim = 0;
};

struct TwoCocycle {
  Vector omega;  // Hom(wedge^2 g, H)
  Vector varpi;  // Hom(g (x) V, W)
  Vector chi;    // Hom(V, H)

  static TwoCocycle from_cochain(const CochainScheme& s, const Vector& coords);
  Vector to_cochain() const;
  bool operator==(const TwoCocycle&) const = default;
};

/// frak_s: g -> g + H and s: V -> V + W.
struct Section {
  Matrix frak_s;
  Matrix s;
};

Section canonical_section(const AbelianExtension& e);

/// Throws AxiomError (axioms "cocycle_fh", "cocycle_fw", "cocycle_theta",
/// witness = nonzero coordinates of D z) when z is not a cocycle.
AbelianExtension extension_from_cocycle(const RRBAlgebra& base, const RRBRepresentation& coeffs, const TwoCocycle& z);

/// rho_h(x)a = [s x, a], rho_w(x)w = rho^(s x)w, mu(u)a = -rho^(a) s(u),
/// curlyT = restriction of the total operator to W.
RRBRepresentation induced_coeff_rep_from_extension(const AbelianExtension& e, const Section& sec);

/// omega(x,y) = [s x, s y] - s[x,y], varpi(x,u) = rho^(s x)s(u) - s(rho(x)u),
/// chi(u) = T^(s u) - s(T u).
TwoCocycle cocycle_from_extension(const AbelianExtension& e, const Section& sec);

/// Validity of an extension in the canonical form: the total structure is a
/// relative Rota-Baxter Lie algebra, H is an abelian ideal acting trivially on
/// W, and inclusion and projection are homomorphisms.
ValidationReport check_extension(const AbelianExtension& e);

struct ExtensionIso {
  Matrix kappa;   // (x, a) -> (x, N x + a)
  Matrix lambda;  // (u, w) -> (u, S u + w)
};

/// Isomorphism from the extension of z1 to the extension of z2 given
/// z1 - z2 = D(N, S). Throws AxiomError listing the failed coboundary
/// equation blocks and the failed intertwining identities.
ExtensionIso iso_from_coboundary(const RRBAlgebra& base, const RRBRepresentation& coeffs, const TwoCocycle& z1,
                                 const TwoCocycle& z2, const Matrix& N, const Matrix& S);

// ---------------------------------------------------------------------------
// Rota-Baxter variant: extension of (g, T) by (H, curlyT) on g + H.

struct RBExtension {
  RBAlgebra total;
  RBAlgebra base;
  std::size_t h_dim = 0;
};

struct RBTwoCocycle {
  Vector omega;  // Hom(wedge^2 g, H)
  Vector chi;    // Hom(g, H)

  static RBTwoCocycle from_cochain(const CochainScheme& s, const Vector& coords);
  Vector to_cochain() const;
  bool operator==(const RBTwoCocycle&) const = default;
};

Matrix canonical_section_rb(const RBExtension& e);
RBExtension extension_from_cocycle_rb(const RBAlgebra& base, const RBRepresentation& coeffs, const RBTwoCocycle& z);
RBRepresentation induced_coeff_rep_from_extension_rb(const RBExtension& e, const Matrix& frak_s);
RBTwoCocycle cocycle_from_extension_rb(const RBExtension& e, const Matrix& frak_s);
ValidationReport check_extension_rb(const RBExtension& e);
/// kappa: (x, a) -> (x, N x + a) from the extension of z1 to that of z2,
/// given z1 - z2 = D(N).
Matrix iso_from_coboundary_rb(const RBAlgebra& base, const RBRepresentation& coeffs, const RBTwoCocycle& z1,
                              const RBTwoCocycle& z2, const Matrix& N);

}  // namespace rrb
