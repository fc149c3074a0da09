#pragma once

// Named test instances and a seeded generator of random valid instances.

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "rrb/rota_baxter.hpp"

namespace fixtures {

using namespace rrb;

LieAlgebra aff1();

/// Abelian g of dim 2, V = Q with zero action, T = 0.
RRBAlgebra f0();
/// Zero coefficients with dim H = dim W = 1.
RRBRepresentation f0_coeffs();
/// aff(1), V = Q with rho(e1) = 1, rho(e2) = 0, T(u1) = e2.
RRBAlgebra f1();
/// aff(1) with T: e1 -> e2, e2 -> 0.
RBAlgebra f2();

/// aff(1), adjoint action, T = identity (fails the operator identity).
RRBAlgebra bad_rrb_identity();
/// aff(1), T = identity (fails the Rota-Baxter identity).
RBAlgebra bad_rb_identity();
/// aff(1) acting on Q by rho(e1) = rho(e2) = 1 (not a representation).
LinearRep bad_character();
/// Adjoint package of F1 with one entry of mu perturbed.
RRBRepresentation f1_perturbed_mu();

struct RRBInstance {
  std::string name;
  RRBAlgebra algebra;
  RRBRepresentation coeffs;
};
struct RBInstance {
  std::string name;
  RBAlgebra algebra;
  RBRepresentation coeffs;
};

/// Random valid instance with all dimensions at most `max_dim`. Every
/// returned instance has passed check_rrb and check_rrb_representation.
RRBInstance random_rrb(std::mt19937_64& gen, std::size_t max_dim = 3);
RBInstance random_rb(std::mt19937_64& gen, std::size_t max_dim = 3);

}  // namespace fixtures
