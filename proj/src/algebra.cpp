#include "rrb/algebra.hpp"

#include <string>

namespace rrb {

namespace {

Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& q : m.row(r)) v.push_back(q);
  return v;
}

Matrix combine(const std::vector<Matrix>& mats, const Vector& x, std::size_t rows, std::size_t cols) {
  if (x.size() != mats.size()) throw ShapeError("linear combination: coefficient count mismatch");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) m = m + x[i] * mats[i];
  return m;
}

}  // namespace

void ValidationReport::check(const std::string& axiom, std::vector<std::size_t> witness, const Matrix& residual) {
  if (!residual.is_zero()) add(axiom, std::move(witness), flatten(residual));
}

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix) {
  for (const auto& v : other.violations) violations.push_back({prefix + v.axiom, v.witness, v.residual});
}

// ---------------------------------------------------------------------------
// LieAlgebra

LieAlgebra LieAlgebra::from_brackets(std::size_t dim, const std::vector<BracketEntry>& entries) {
  std::vector<Rational> c(dim * dim * dim, Rational(0));
  for (const auto& [i, j, coeffs] : entries) {
    if (i >= dim || j >= dim) throw ShapeError("bracket index out of range");
    if (i >= j) throw ShapeError("bracket entries must have i < j");
    if (coeffs.size() != dim) throw ShapeError("bracket coefficient vector has wrong length");
    for (std::size_t k = 0; k < dim; ++k) {
      c[(i * dim + j) * dim + k] = coeffs[k];
      c[(j * dim + i) * dim + k] = -coeffs[k];
    }
  }
  LieAlgebra g = unchecked(dim, std::move(c));
  if (auto report = check_jacobi(g); !report) throw AxiomError("Jacobi identity fails", report);
  return g;
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) {
  return unchecked(dim, std::vector<Rational>(dim * dim * dim, Rational(0)));
}

LieAlgebra LieAlgebra::unchecked(std::size_t dim, std::vector<Rational> constants) {
  if (constants.size() != dim * dim * dim) throw ShapeError("structure constant array has wrong size");
  LieAlgebra g;
  g.dim_ = dim;
  g.c_ = std::move(constants);
  return g;
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vector v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = constant(i, j, k);
  return v;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw ShapeError("bracket: argument dimension mismatch");
  Vector out = zero_vector(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      const Rational s = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (constant(i, j, k) != 0) out[k] += s * constant(i, j, k);
    }
  }
  return out;
}

Matrix LieAlgebra::ad(std::size_t i) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = constant(i, j, k);
  return m;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// LinearRep

LinearRep LinearRep::zero(std::size_t algebra_dim, std::size_t space_dim) {
  return {space_dim, std::vector<Matrix>(algebra_dim, Matrix(space_dim, space_dim))};
}

Matrix LinearRep::act(const Vector& x) const { return combine(action, x, space_dim, space_dim); }

// ---------------------------------------------------------------------------
// PreLieAlgebra

PreLieAlgebra PreLieAlgebra::create(std::size_t dim, std::vector<Rational> constants) {
  PreLieAlgebra a = unchecked(dim, std::move(constants));
  if (auto report = check_left_symmetry(a); !report) throw AxiomError("left-symmetry fails", report);
  return a;
}

PreLieAlgebra PreLieAlgebra::unchecked(std::size_t dim, std::vector<Rational> constants) {
  if (constants.size() != dim * dim * dim) throw ShapeError("pre-Lie constant array has wrong size");
  PreLieAlgebra a;
  a.dim_ = dim;
  a.a_ = std::move(constants);
  return a;
}

Vector PreLieAlgebra::product_basis(std::size_t i, std::size_t j) const {
  Vector v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = constant(i, j, k);
  return v;
}

Vector PreLieAlgebra::product(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw ShapeError("product: argument dimension mismatch");
  Vector out = zero_vector(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      for (std::size_t k = 0; k < dim_; ++k)
        if (constant(i, j, k) != 0) out[k] += x[i] * y[j] * constant(i, j, k);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Axiom checks

ValidationReport check_antisymmetry(const LieAlgebra& g) {
  ValidationReport report;
  const std::size_t d = g.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j)
      report.check("antisymmetry", {i, j}, g.bracket_basis(i, j) + g.bracket_basis(j, i));
  return report;
}

ValidationReport check_jacobi(const LieAlgebra& g) {
  ValidationReport report = check_antisymmetry(g);
  const std::size_t d = g.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const Vector ei = unit_vector(d, i), ej = unit_vector(d, j), ek = unit_vector(d, k);
        Vector r = g.bracket(ei, g.bracket_basis(j, k)) + g.bracket(ej, g.bracket_basis(k, i)) +
                   g.bracket(ek, g.bracket_basis(i, j));
        report.check("jacobi", {i, j, k}, r);
      }
  return report;
}

ValidationReport check_representation(const LieAlgebra& g, const LinearRep& r) {
  if (r.action.size() != g.dim()) throw ShapeError("representation: one matrix per generator required");
  for (const auto& m : r.action)
    if (m.rows() != r.space_dim || m.cols() != r.space_dim) throw ShapeError("representation: matrix shape");
  ValidationReport report;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j)
      report.check("representation", {i, j},
                   r.act(g.bracket_basis(i, j)) - commutator(r.action[i], r.action[j]));
  return report;
}

ValidationReport check_left_symmetry(const PreLieAlgebra& a) {
  ValidationReport report;
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const Vector ei = unit_vector(d, i), ej = unit_vector(d, j), ek = unit_vector(d, k);
        Vector assoc_ij = a.product(a.product_basis(i, j), ek) - a.product(ei, a.product_basis(j, k));
        Vector assoc_ji = a.product(a.product_basis(j, i), ek) - a.product(ej, a.product_basis(i, k));
        report.check("left_symmetry", {i, j, k}, assoc_ij - assoc_ji);
      }
  return report;
}

ValidationReport check_prelie_rep(const PreLieAlgebra& a, const PreLieRep& r) {
  const std::size_t d = a.dim();
  if (r.theta.size() != d || r.vartheta.size() != d) throw ShapeError("pre-Lie representation: one matrix per generator");
  ValidationReport report;
  LieAlgebra lie = commutator_lie(a);
  report.merge(check_representation(lie, LinearRep{r.space_dim, r.theta}), "theta_");
  const std::size_t w = r.space_dim;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Matrix lhs = commutator(r.theta[i], r.vartheta[j]);
      Matrix rhs = combine(r.vartheta, a.product_basis(i, j), w, w) - r.vartheta[j] * r.vartheta[i];
      report.check("vartheta_compatibility", {i, j}, lhs - rhs);
    }
  return report;
}

// ---------------------------------------------------------------------------
// Constructions

LinearRep adjoint_rep(const LieAlgebra& g) {
  LinearRep r{g.dim(), {}};
  for (std::size_t i = 0; i < g.dim(); ++i) r.action.push_back(g.ad(i));
  return r;
}

LinearRep dual_rep(const LinearRep& r) {
  LinearRep d{r.space_dim, {}};
  for (const auto& m : r.action) d.action.push_back(-m.transpose());
  return d;
}

LinearRep direct_sum(const LinearRep& a, const LinearRep& b) {
  if (a.action.size() != b.action.size()) throw ShapeError("direct sum of representations of different algebras");
  LinearRep s{a.space_dim + b.space_dim, {}};
  for (std::size_t i = 0; i < a.action.size(); ++i) s.action.push_back(direct_sum(a.action[i], b.action[i]));
  return s;
}

LieAlgebra commutator_lie(const PreLieAlgebra& a) {
  const std::size_t d = a.dim();
  return LieAlgebra::unchecked(
      d, constants_from(d, [&](std::size_t i, std::size_t j) { return a.product_basis(i, j) - a.product_basis(j, i); }));
}

}  // namespace rrb
