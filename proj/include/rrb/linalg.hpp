#pragma once

// Exact linear algebra over the rationals.
//
// Scalars are GMP rationals (always kept in canonical p/q form). Matrices are
// dense and row-major; subspaces store a reduced row-echelon basis so that two
// equal subspaces compare equal member-by-member.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rrb {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Canonical "p/q" form; integers print without a denominator ("3", "-1/2").
std::string to_string(const Rational& q);

/// num/den in canonical form (mpq_class(num, den) alone is not reduced).
Rational frac(long num, long den);

/// Parses "p", "p/q" with optional sign. Throws std::invalid_argument on a
/// malformed string or a zero denominator.
Rational parse_rational(std::string_view text);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols);
  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vector column(std::size_t c) const;

  Matrix transpose() const;
  bool is_zero() const;

  /// Copies `m` into this matrix with its top-left corner at (r0, c0).
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  friend Matrix operator*(const Rational& s, const Matrix& m);

  bool operator==(const Matrix& o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Block-diagonal sum diag(a, b).
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// Commutator ab - ba of square matrices.
Matrix commutator(const Matrix& a, const Matrix& b);

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Reduced row-echelon form. The forward sweep is fraction-free (Bareiss) on
/// the row-scaled integer matrix; the result is then normalised so that every
/// pivot is 1 and pivot columns are otherwise zero.
struct Echelon {
  Matrix reduced;                  // only the first pivots.size() rows are nonzero
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};
Echelon rref(const Matrix& m);

/// Exact rank via fraction-free elimination.
std::size_t rank(const Matrix& m);

class Subspace {
 public:
  Subspace() = default;
  /// Span of arbitrary vectors of length `ambient_dim`; canonicalised.
  Subspace(std::size_t ambient_dim, const std::vector<Vector>& spanning);

  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim, {}); }
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const& { return basis_; }
  std::vector<Vector> basis() && { return std::move(basis_); }

  bool contains(const Vector& v) const;
  /// Returns a basis vector of `other` not in this subspace, if any.
  std::optional<Vector> find_outside(const Subspace& other) const;
  bool contains(const Subspace& other) const { return !find_outside(other).has_value(); }

  /// Basis matrix with basis vectors as columns (ambient_dim x dim).
  Matrix as_columns() const;

  bool operator==(const Subspace& o) const = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;           // reduced echelon rows
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);
Subspace intersection(const Subspace& a, const Subspace& b);

struct ContainmentError : std::runtime_error {
  ContainmentError(const std::string& what, Vector w)
      : std::runtime_error(what), witness(std::move(w)) {}
  Vector witness;
};

/// dim(outer) - dim(inner); throws ContainmentError with a witness when
/// inner is not a subspace of outer.
std::size_t quotient_dim(const Subspace& outer, const Subspace& inner);

/// Some x with m x = b, or nullopt when b is not in the column span.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

}  // namespace rrb
