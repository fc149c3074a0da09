#include "rrb/rota_baxter.hpp"

#include <string>

namespace rrb {

namespace {

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols)
    throw ShapeError(std::string(what) + ": expected " + std::to_string(rows) + "x" + std::to_string(cols) +
                     ", got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

void require_rep_shape(const LinearRep& r, std::size_t alg_dim, const char* what) {
  if (r.action.size() != alg_dim) throw ShapeError(std::string(what) + ": wrong number of action matrices");
  for (const auto& m : r.action) require_shape(m, r.space_dim, r.space_dim, what);
}

Vector flatten(const Matrix& m) {
  Vector v;
  for (std::size_t r = 0; r < m.rows(); ++r) v.insert(v.end(), m.row(r).begin(), m.row(r).end());
  return v;
}

void append(Vector& out, const Vector& v) { out.insert(out.end(), v.begin(), v.end()); }

// Residuals of all derivation conditions, concatenated in a fixed order.
// Linear in (f_g, f_V), which derivation_space relies on.
Vector lie_derivation_residual(const LieAlgebra& g, const Matrix& f, ValidationReport* report) {
  const std::size_t d = g.dim();
  Vector all;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Vector r = f * g.bracket_basis(i, j) - g.bracket(f.column(i), unit_vector(d, j)) -
                 g.bracket(unit_vector(d, i), f.column(j));
      if (report) report->check("lie_derivation", {i, j}, r);
      append(all, r);
    }
  return all;
}

Vector rrb_derivation_residual(const RRBAlgebra& a, const Matrix& f_g, const Matrix& f_V, ValidationReport* report) {
  Vector all = lie_derivation_residual(a.g, f_g, report);
  Matrix commute = a.T * f_V - f_g * a.T;
  if (report)
    for (std::size_t k = 0; k < a.v_dim(); ++k) report->check("operator_compatibility", {k}, commute.column(k));
  append(all, flatten(commute));
  for (std::size_t i = 0; i < a.g_dim(); ++i) {
    Matrix r = f_V * a.rep.action[i] - a.rep.action[i] * f_V - a.rep.act(f_g.column(i));
    if (report) report->check("action_compatibility", {i}, r);
    append(all, flatten(r));
  }
  return all;
}

// Kernel of a linear map given as a function on matrices-as-coordinates.
template <class F>
Subspace kernel_of_linear(std::size_t n_unknowns, F&& residual) {
  std::vector<Vector> cols;
  std::size_t rows = 0;
  for (std::size_t i = 0; i < n_unknowns; ++i) {
    cols.push_back(residual(unit_vector(n_unknowns, i)));
    rows = cols.back().size();
  }
  return kernel(Matrix::from_columns(rows, cols));
}

Matrix unflatten(const Vector& v, std::size_t offset, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[offset + r * cols + c];
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------

RRBAlgebra RRBAlgebra::create(LieAlgebra g, LinearRep rep, Matrix T) {
  RRBAlgebra a{std::move(g), std::move(rep), std::move(T)};
  if (auto report = check_rrb(a); !report) throw AxiomError("not a relative Rota-Baxter Lie algebra", report);
  return a;
}

RBAlgebra RBAlgebra::create(LieAlgebra g, Matrix T) {
  RBAlgebra a{std::move(g), std::move(T)};
  if (auto report = check_rb(a); !report) throw AxiomError("not a Rota-Baxter Lie algebra", report);
  return a;
}

RRBRepresentation RRBRepresentation::zero(const RRBAlgebra& a, std::size_t h_dim, std::size_t w_dim) {
  return {h_dim,
          w_dim,
          Matrix(h_dim, w_dim),
          LinearRep::zero(a.g_dim(), h_dim),
          LinearRep::zero(a.g_dim(), w_dim),
          std::vector<Matrix>(a.v_dim(), Matrix(w_dim, h_dim))};
}

Matrix RRBRepresentation::mu_of(const Vector& u) const {
  if (u.size() != mu.size()) throw ShapeError("mu: argument dimension mismatch");
  Matrix m(w_dim, h_dim);
  for (std::size_t k = 0; k < u.size(); ++k)
    if (u[k] != 0) m = m + u[k] * mu[k];
  return m;
}

RBRepresentation RBRepresentation::zero(const RBAlgebra& a, std::size_t w_dim) {
  return {w_dim, Matrix(w_dim, w_dim), LinearRep::zero(a.dim(), w_dim)};
}

// ---------------------------------------------------------------------------
// Checks

ValidationReport check_rrb(const RRBAlgebra& a) {
  require_rep_shape(a.rep, a.g_dim(), "rep");
  require_shape(a.T, a.g_dim(), a.v_dim(), "T");
  ValidationReport report = check_jacobi(a.g);
  report.merge(check_representation(a.g, a.rep));
  const std::size_t m = a.v_dim();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Vector tu = a.T.column(i), tv = a.T.column(j);
      Vector inner = a.rep.act(tu) * unit_vector(m, j) - a.rep.act(tv) * unit_vector(m, i);
      report.check("relative_rota_baxter", {i, j}, a.g.bracket(tu, tv) - a.T * inner);
    }
  return report;
}

ValidationReport check_rb(const RBAlgebra& a) {
  require_shape(a.T, a.dim(), a.dim(), "T");
  ValidationReport report = check_jacobi(a.g);
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Vector tx = a.T.column(i), ty = a.T.column(j);
      Vector inner = a.g.bracket(tx, unit_vector(d, j)) + a.g.bracket(unit_vector(d, i), ty);
      report.check("rota_baxter", {i, j}, a.T * inner - a.g.bracket(tx, ty));
    }
  return report;
}

ValidationReport check_rrb_representation(const RRBAlgebra& a, const RRBRepresentation& r) {
  require_rep_shape(r.rho_h, a.g_dim(), "rho_h");
  require_rep_shape(r.rho_w, a.g_dim(), "rho_w");
  if (r.rho_h.space_dim != r.h_dim || r.rho_w.space_dim != r.w_dim) throw ShapeError("coefficient space dimensions");
  require_shape(r.curlyT, r.h_dim, r.w_dim, "curlyT");
  if (r.mu.size() != a.v_dim()) throw ShapeError("mu: one matrix per V generator required");
  for (const auto& m : r.mu) require_shape(m, r.w_dim, r.h_dim, "mu");

  ValidationReport report;
  report.merge(check_representation(a.g, r.rho_h), "rho_h_");
  report.merge(check_representation(a.g, r.rho_w), "rho_w_");
  for (std::size_t i = 0; i < a.g_dim(); ++i)
    for (std::size_t k = 0; k < a.v_dim(); ++k) {
      Matrix lhs = r.mu_of(a.rep.action[i].column(k));
      Matrix rhs = r.rho_w.action[i] * r.mu[k] - r.mu[k] * r.rho_h.action[i];
      report.check("mu_equivariance", {i, k}, lhs - rhs);
    }
  for (std::size_t k = 0; k < a.v_dim(); ++k) {
    Vector tu = a.T.column(k);
    Matrix lhs = r.rho_h.act(tu) * r.curlyT;
    Matrix rhs = r.curlyT * r.rho_w.act(tu) + r.curlyT * r.mu[k] * r.curlyT;
    report.check("operator_compatibility", {k}, lhs - rhs);
  }
  return report;
}

ValidationReport check_rb_representation(const RBAlgebra& a, const RBRepresentation& r) {
  require_rep_shape(r.rho_w, a.dim(), "rho_w");
  if (r.rho_w.space_dim != r.w_dim) throw ShapeError("coefficient space dimension");
  require_shape(r.curlyT, r.w_dim, r.w_dim, "curlyT");
  ValidationReport report;
  report.merge(check_representation(a.g, r.rho_w), "rho_w_");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Matrix rt = r.rho_w.act(a.T.column(i));
    Matrix rhs = r.curlyT * rt + r.curlyT * r.rho_w.action[i] * r.curlyT;
    report.check("operator_compatibility", {i}, rt * r.curlyT - rhs);
  }
  return report;
}

ValidationReport check_rrb_homomorphism(const RRBAlgebra& from, const RRBAlgebra& to, const Matrix& phi,
                                        const Matrix& psi) {
  require_shape(phi, to.g_dim(), from.g_dim(), "phi");
  require_shape(psi, to.v_dim(), from.v_dim(), "psi");
  ValidationReport report;
  const std::size_t d = from.g_dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      report.check("lie_homomorphism", {i, j},
                   phi * from.g.bracket_basis(i, j) - to.g.bracket(phi.column(i), phi.column(j)));
  Matrix op = to.T * psi - phi * from.T;
  for (std::size_t k = 0; k < from.v_dim(); ++k) report.check("operator_intertwining", {k}, op.column(k));
  for (std::size_t i = 0; i < d; ++i)
    report.check("action_intertwining", {i}, psi * from.rep.action[i] - to.rep.act(phi.column(i)) * psi);
  return report;
}

ValidationReport check_rb_homomorphism(const RBAlgebra& from, const RBAlgebra& to, const Matrix& phi) {
  require_shape(phi, to.dim(), from.dim(), "phi");
  ValidationReport report;
  const std::size_t d = from.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      report.check("lie_homomorphism", {i, j},
                   phi * from.g.bracket_basis(i, j) - to.g.bracket(phi.column(i), phi.column(j)));
  Matrix op = to.T * phi - phi * from.T;
  for (std::size_t k = 0; k < d; ++k) report.check("operator_intertwining", {k}, op.column(k));
  return report;
}

// ---------------------------------------------------------------------------
// Constructions

RRBRepresentation adjoint_rrb_rep(const RRBAlgebra& a) {
  RRBRepresentation r;
  r.h_dim = a.g_dim();
  r.w_dim = a.v_dim();
  r.curlyT = a.T;
  r.rho_h = adjoint_rep(a.g);
  r.rho_w = a.rep;
  for (std::size_t k = 0; k < a.v_dim(); ++k) {
    Matrix m(a.v_dim(), a.g_dim());
    for (std::size_t i = 0; i < a.g_dim(); ++i)
      for (std::size_t l = 0; l < a.v_dim(); ++l) m(l, i) = -a.rep.action[i](l, k);
    r.mu.push_back(std::move(m));
  }
  return r;
}

RRBRepresentation dual_rrb_rep(const RRBRepresentation& r) {
  RRBRepresentation d;
  d.h_dim = r.w_dim;
  d.w_dim = r.h_dim;
  d.curlyT = -r.curlyT.transpose();
  d.rho_h = dual_rep(r.rho_w);
  d.rho_w = dual_rep(r.rho_h);
  for (const auto& m : r.mu) d.mu.push_back(-m.transpose());
  return d;
}

RBRepresentation adjoint_rb_rep(const RBAlgebra& a) { return {a.dim(), a.T, adjoint_rep(a.g)}; }

RRBAlgebra semidirect_rrb(const RRBAlgebra& a, const RRBRepresentation& r) {
  const std::size_t n = a.g_dim(), h = r.h_dim, m = a.v_dim(), w = r.w_dim;
  if (r.rho_h.action.size() != n || r.mu.size() != m) throw ShapeError("coefficients do not match the base");
  const std::size_t N = n + h;
  std::vector<Rational> c(N * N * N, Rational(0));
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Rational& { return c[(i * N + j) * N + k]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) at(i, j, k) = a.g.constant(i, j, k);
    for (std::size_t b = 0; b < h; ++b)
      for (std::size_t k = 0; k < h; ++k) {
        at(i, n + b, n + k) = r.rho_h.action[i](k, b);
        at(n + b, i, n + k) = -r.rho_h.action[i](k, b);
      }
  }
  LinearRep rep{m + w, {}};
  for (std::size_t i = 0; i < n; ++i) rep.action.push_back(direct_sum(a.rep.action[i], r.rho_w.action[i]));
  for (std::size_t b = 0; b < h; ++b) {
    // (0 + e_b) acts by u + xi -> -mu(u) e_b
    Matrix act(m + w, m + w);
    for (std::size_t u = 0; u < m; ++u)
      for (std::size_t l = 0; l < w; ++l) act(m + l, u) = -r.mu[u](l, b);
    rep.action.push_back(std::move(act));
  }
  return {LieAlgebra::unchecked(N, std::move(c)), std::move(rep), direct_sum(a.T, r.curlyT)};
}

RBAlgebra semidirect_rb(const RBAlgebra& a, const RBRepresentation& r) {
  const std::size_t n = a.dim(), w = r.w_dim, N = n + w;
  if (r.rho_w.action.size() != n) throw ShapeError("coefficients do not match the base");
  std::vector<Rational> c(N * N * N, Rational(0));
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Rational& { return c[(i * N + j) * N + k]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) at(i, j, k) = a.g.constant(i, j, k);
    for (std::size_t b = 0; b < w; ++b)
      for (std::size_t k = 0; k < w; ++k) {
        at(i, n + b, n + k) = r.rho_w.action[i](k, b);
        at(n + b, i, n + k) = -r.rho_w.action[i](k, b);
      }
  }
  return {LieAlgebra::unchecked(N, std::move(c)), direct_sum(a.T, r.curlyT)};
}

PreLieAlgebra induced_prelie(const RRBAlgebra& a) {
  const std::size_t m = a.v_dim();
  return PreLieAlgebra::unchecked(
      m, constants_from(m, [&](std::size_t i, std::size_t j) { return a.rep.act(a.T.column(i)).column(j); }));
}

PreLieRep induced_prelie_rep(const RRBAlgebra& a, const RRBRepresentation& r) {
  if (r.mu.size() != a.v_dim()) throw ShapeError("coefficients do not match the base");
  PreLieRep p{r.w_dim, {}, {}};
  for (std::size_t k = 0; k < a.v_dim(); ++k) {
    p.theta.push_back(r.rho_w.act(a.T.column(k)));
    p.vartheta.push_back(-(r.mu[k] * r.curlyT));
  }
  return p;
}

RRBAlgebra rb_to_rrb(const RBAlgebra& a) { return {a.g, adjoint_rep(a.g), a.T}; }

RRBAlgebra rrb_from_r_matrix(const LieAlgebra& g, const Matrix& r) {
  require_shape(r, g.dim(), g.dim(), "r");
  if (!(r + r.transpose()).is_zero()) throw ShapeError("r-matrix must be antisymmetric");
  return {g, dual_rep(adjoint_rep(g)), r};
}

EndComplexExample end_complex_rrb(const Matrix& curlyT) {
  const std::size_t h = curlyT.rows(), w = curlyT.cols();
  const std::size_t n_coords = h * h + w * w;
  auto split = [&](const Vector& v) { return std::pair{unflatten(v, 0, h, h), unflatten(v, h * h, w, w)}; };
  auto join = [&](const Matrix& a0, const Matrix& a1) {
    Vector v = flatten(a0);
    append(v, flatten(a1));
    return v;
  };

  Subspace end = kernel_of_linear(n_coords, [&](const Vector& v) {
    auto [a0, a1] = split(v);
    return flatten(a0 * curlyT - curlyT * a1);
  });
  const std::size_t n = end.dim();
  Matrix E = end.as_columns();
  auto end_coords = [&](const Vector& v) {
    auto x = solve(E, v);
    if (!x) throw std::logic_error("End(W->H) is not closed");
    return *x;
  };

  std::vector<Rational> c(n * n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto [a0, a1] = split(E.column(i));
      auto [b0, b1] = split(E.column(j));
      Vector coords = end_coords(join(commutator(a0, b0), commutator(a1, b1)));
      for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = coords[k];
    }
  LieAlgebra g = LieAlgebra::unchecked(n, std::move(c));

  Matrix K = kernel(curlyT).as_columns();
  const std::size_t kd = K.cols(), m = kd * h;
  auto phi_coords = [&](const Matrix& Phi) {
    Vector out;
    for (std::size_t col = 0; col < h; ++col) {
      auto x = solve(K, Phi.column(col));
      if (!x) throw std::logic_error("image leaves ker curlyT");
      for (std::size_t r = 0; r < kd; ++r) out.push_back((*x)[r]);
    }
    // out is column-major in phi; reorder to row-major
    Vector rm(m);
    for (std::size_t col = 0; col < h; ++col)
      for (std::size_t r = 0; r < kd; ++r) rm[r * h + col] = out[col * kd + r];
    return rm;
  };

  LinearRep rep{m, {}};
  for (std::size_t i = 0; i < n; ++i) {
    auto [a0, a1] = split(E.column(i));
    Matrix act(m, m);
    for (std::size_t t = 0; t < m; ++t) {
      Matrix Phi = K * unflatten(unit_vector(m, t), 0, kd, h);
      Vector img = phi_coords(a1 * Phi - Phi * a0);
      for (std::size_t s = 0; s < m; ++s) act(s, t) = img[s];
    }
    rep.action.push_back(std::move(act));
  }
  Matrix T(n, m);
  for (std::size_t t = 0; t < m; ++t) {
    Matrix Phi = K * unflatten(unit_vector(m, t), 0, kd, h);
    Vector coords = end_coords(join(Matrix(h, h), Phi * curlyT));
    for (std::size_t s = 0; s < n; ++s) T(s, t) = coords[s];
  }
  return {{std::move(g), std::move(rep), std::move(T)}, std::move(E), std::move(K)};
}

// ---------------------------------------------------------------------------
// Derivations

ValidationReport check_lie_derivation(const LieAlgebra& g, const Matrix& f) {
  require_shape(f, g.dim(), g.dim(), "f");
  ValidationReport report;
  lie_derivation_residual(g, f, &report);
  return report;
}

ValidationReport check_derivation(const RRBAlgebra& a, const Matrix& f_g, const Matrix& f_V) {
  require_shape(f_g, a.g_dim(), a.g_dim(), "f_g");
  require_shape(f_V, a.v_dim(), a.v_dim(), "f_V");
  ValidationReport report;
  rrb_derivation_residual(a, f_g, f_V, &report);
  return report;
}

ValidationReport check_rb_derivation(const RBAlgebra& a, const Matrix& f) {
  ValidationReport report = check_lie_derivation(a.g, f);
  Matrix commute = f * a.T - a.T * f;
  for (std::size_t k = 0; k < a.dim(); ++k) report.check("operator_compatibility", {k}, commute.column(k));
  return report;
}

Subspace derivation_space(const RRBAlgebra& a) {
  const std::size_t n = a.g_dim(), m = a.v_dim();
  return kernel_of_linear(n * n + m * m, [&](const Vector& v) {
    return rrb_derivation_residual(a, unflatten(v, 0, n, n), unflatten(v, n * n, m, m), nullptr);
  });
}

Subspace rb_derivation_space(const RBAlgebra& a) {
  const std::size_t n = a.dim();
  return kernel_of_linear(n * n, [&](const Vector& v) {
    Matrix f = unflatten(v, 0, n, n);
    Vector r = lie_derivation_residual(a.g, f, nullptr);
    append(r, flatten(f * a.T - a.T * f));
    return r;
  });
}

// ---------------------------------------------------------------------------
// Associative Rota-Baxter data

ValidationReport check_associative_rb(const AssociativeRBData& d) {
  const std::size_t n = d.dim, m = d.module_dim;
  if (d.product.size() != n * n * n) throw ShapeError("associative product: wrong constant count");
  require_shape(d.T, n, n, "T");
  require_shape(d.curlyT, m, m, "curlyT");
  if (d.action.size() != n) throw ShapeError("module action: one matrix per generator required");
  for (const auto& a : d.action) require_shape(a, m, m, "module action");

  PreLieAlgebra prod = PreLieAlgebra::unchecked(n, d.product);  // used only as a bilinear product
  auto mult = [&](const Vector& x, const Vector& y) { return prod.product(x, y); };
  const LinearRep module{m, d.action};
  auto act = [&](const Vector& x) { return module.act(x); };

  ValidationReport report;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ei = unit_vector(n, i), ej = unit_vector(n, j);
      for (std::size_t k = 0; k < n; ++k) {
        const Vector ek = unit_vector(n, k);
        report.check("associativity", {i, j, k}, mult(mult(ei, ej), ek) - mult(ei, mult(ej, ek)));
      }
      Vector tx = d.T.column(i), ty = d.T.column(j);
      report.check("rota_baxter", {i, j}, mult(tx, ty) - d.T * (mult(tx, ej) + mult(ei, ty)));
      report.check("module", {i, j}, act(mult(ei, ej)) - d.action[i] * d.action[j]);
    }
  for (std::size_t i = 0; i < n; ++i) {
    Matrix lhs = act(d.T.column(i)) * d.curlyT;
    Matrix rhs = d.curlyT * (d.action[i] * d.curlyT + act(d.T.column(i)));
    report.check("module_compatibility", {i}, lhs - rhs);
  }
  return report;
}

std::pair<RBAlgebra, RBRepresentation> from_associative(const AssociativeRBData& d) {
  if (auto report = check_associative_rb(d); !report)
    throw AxiomError("not a Rota-Baxter associative algebra with module", report);
  const std::size_t n = d.dim;
  PreLieAlgebra prod = PreLieAlgebra::unchecked(n, d.product);
  LieAlgebra g = commutator_lie(prod);
  RBAlgebra a{g, d.T};
  RBRepresentation r{d.module_dim, d.curlyT, LinearRep{d.module_dim, d.action}};
  return {std::move(a), std::move(r)};
}

}  // namespace rrb
