#pragma once

// Finite-dimensional Lie algebras, linear representations and pre-Lie
// algebras, all written in a fixed ordered basis.

#include <cstddef>
#include <tuple>
#include <vector>

#include "rrb/linalg.hpp"
#include "rrb/validation.hpp"

namespace rrb {

/// Lie algebra given by structure constants: [e_i, e_j] = sum_k c(i,j,k) e_k.
class LieAlgebra {
 public:
  using BracketEntry = std::tuple<std::size_t, std::size_t, Vector>;

  LieAlgebra() = default;

  /// Builds from the upper-triangular entries (i < j) only; antisymmetry is
  /// filled in. Throws AxiomError when the Jacobi identity fails and
  /// ShapeError for out-of-range or diagonal entries.
  static LieAlgebra from_brackets(std::size_t dim, const std::vector<BracketEntry>& entries);
  static LieAlgebra abelian(std::size_t dim);
  /// Builds from the full dim^3 constant array with no axiom check.
  static LieAlgebra unchecked(std::size_t dim, std::vector<Rational> constants);

  std::size_t dim() const { return dim_; }
  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<Rational>& constants() const { return c_; }

  Vector bracket_basis(std::size_t i, std::size_t j) const;
  Vector bracket(const Vector& x, const Vector& y) const;
  /// Matrix of ad(e_i).
  Matrix ad(std::size_t i) const;
  bool is_abelian() const;

  bool operator==(const LieAlgebra&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> c_;
};

/// Representation of a Lie algebra: one matrix rho(e_i) per basis element.
struct LinearRep {
  std::size_t space_dim = 0;
  std::vector<Matrix> action;

  static LinearRep zero(std::size_t algebra_dim, std::size_t space_dim);
  /// rho(x) = sum_i x_i rho(e_i).
  Matrix act(const Vector& x) const;
  bool operator==(const LinearRep&) const = default;
};

/// Pre-Lie algebra: e_i . e_j = sum_k a(i,j,k) e_k.
class PreLieAlgebra {
 public:
  PreLieAlgebra() = default;
  /// Throws AxiomError when left-symmetry fails.
  static PreLieAlgebra create(std::size_t dim, std::vector<Rational> constants);
  static PreLieAlgebra unchecked(std::size_t dim, std::vector<Rational> constants);

  std::size_t dim() const { return dim_; }
  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return a_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<Rational>& constants() const { return a_; }
  Vector product_basis(std::size_t i, std::size_t j) const;
  Vector product(const Vector& x, const Vector& y) const;

  bool operator==(const PreLieAlgebra&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> a_;
};

/// Representation (theta, vartheta) of a pre-Lie algebra on a space W.
struct PreLieRep {
  std::size_t space_dim = 0;
  std::vector<Matrix> theta;
  std::vector<Matrix> vartheta;
  bool operator==(const PreLieRep&) const = default;
};

ValidationReport check_antisymmetry(const LieAlgebra& g);
ValidationReport check_jacobi(const LieAlgebra& g);
ValidationReport check_representation(const LieAlgebra& g, const LinearRep& r);
ValidationReport check_left_symmetry(const PreLieAlgebra& a);
ValidationReport check_prelie_rep(const PreLieAlgebra& a, const PreLieRep& r);

LinearRep adjoint_rep(const LieAlgebra& g);
/// rho*(x) = -rho(x)^T.
LinearRep dual_rep(const LinearRep& r);
/// Direct sum of two representations of the same algebra.
LinearRep direct_sum(const LinearRep& a, const LinearRep& b);
LieAlgebra commutator_lie(const PreLieAlgebra& a);

/// Structure constants of a dim-d algebra from a function (i, j) -> Vector.
template <class F>
std::vector<Rational> constants_from(std::size_t d, F&& product) {
  std::vector<Rational> c(d * d * d, Rational(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vector v = product(i, j);
      for (std::size_t k = 0; k < d; ++k) c[(i * d + j) * d + k] = v[k];
    }
  return c;
}

}  // namespace rrb
