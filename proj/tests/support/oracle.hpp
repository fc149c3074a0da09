#pragma once

// Naive reference evaluator for the coboundary operators. Cochains are
// expanded to dense arrays over all (not only increasing) index tuples and
// the operators are applied by direct summation over basis tuples. Only the
// structure types and Rational arithmetic are shared with the library; the
// coordinate layout is read from the documented convention.

#include <vector>

#include "rrb/lie2.hpp"
#include "rrb/rota_baxter.hpp"

namespace oracle {

using rrb::Matrix;
using rrb::Rational;

/// Coboundary C^n -> C^{n+1} of the relative Rota-Baxter complex.
Matrix rrb_coboundary(const rrb::RRBAlgebra& a, const rrb::RRBRepresentation& r, std::size_t n);
/// Coboundary C^n -> C^{n+1} of the Rota-Baxter complex.
Matrix rb_coboundary(const rrb::RBAlgebra& a, const rrb::RBRepresentation& r, std::size_t n);
/// Coboundary C^n -> C^{n+1} of the pre-Lie complex.
Matrix prelie_coboundary(const rrb::PreLieAlgebra& A, const rrb::PreLieRep& r, std::size_t n);

/// Dimension of the solution space of the derivation conditions, written
/// out as a linear system in the entries of (f_g, f_V) and solved by rank().
std::size_t derivation_solution_dim(const rrb::RRBAlgebra& a);
/// Same for a Lie derivation commuting with T.
std::size_t rb_derivation_solution_dim(const rrb::RBAlgebra& a);

/// Cochain coordinates of the higher data of a skeletal structure under the
/// sign table f_h = l3, f_w = -rho2, theta = -T2 (RB: f = l3, theta = -T2).
rrb::Vector skeletal_coords(const rrb::SkeletalRRB2& s);
rrb::Vector skeletal_coords(const rrb::SkeletalRB2& s);

/// Rank by plain Gaussian elimination.
std::size_t rank(const Matrix& m);

}  // namespace oracle
