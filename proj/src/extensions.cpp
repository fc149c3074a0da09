#include "rrb/extensions.hpp"

#include "rrb/wedge.hpp"

namespace rrb {

namespace {

Vector slice(const Vector& v, std::size_t from, std::size_t len) {
  return Vector(v.begin() + std::ptrdiff_t(from), v.begin() + std::ptrdiff_t(from + len));
}

Vector concat(std::initializer_list<const Vector*> parts) {
  Vector out;
  for (const Vector* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

std::vector<std::size_t> nonzero_positions(const Vector& v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.push_back(i);
  return out;
}

// Records one violation per block of `v` (split at the scheme's block
// boundaries) whose entries are not all zero.
void check_blocks(ValidationReport& report, const std::string& prefix, const CochainScheme& s, const Vector& v,
                  const char* names[3]) {
  const std::size_t sizes[3] = {s.fh_size(), s.fw_size(), s.theta_size()};
  std::size_t offset = 0;
  for (int b = 0; b < 3; ++b) {
    const Vector part = slice(v, offset, sizes[b]);
    if (!is_zero(part)) report.add(prefix + names[b], nonzero_positions(part), part);
    offset += sizes[b];
  }
}

// Value of an alternating bilinear map stored as pair_index * dim + c.
Vector pair_value(const Vector& coords, std::size_t n, std::size_t dim, std::size_t i, std::size_t j) {
  if (i == j) return zero_vector(dim);
  const bool swapped = i > j;
  const std::size_t p = swapped ? wedge_index(n, {j, i}) : wedge_index(n, {i, j});
  Vector v = slice(coords, p * dim, dim);
  return swapped ? Rational(-1) * v : v;
}

Matrix stack_identity_over(std::size_t top, std::size_t bottom, const Matrix& lower) {
  Matrix m(top + bottom, top);
  m.set_block(0, 0, Matrix::identity(top));
  m.set_block(top, 0, lower);
  return m;
}

Matrix inclusion(std::size_t before, std::size_t dim) {
  Matrix m(before + dim, dim);
  m.set_block(before, 0, Matrix::identity(dim));
  return m;
}

Matrix projection(std::size_t keep, std::size_t rest) {
  Matrix m(keep, keep + rest);
  m.set_block(0, 0, Matrix::identity(keep));
  return m;
}

Matrix unipotent(std::size_t top, std::size_t bottom, const Matrix& lower_left) {
  Matrix m = Matrix::identity(top + bottom);
  m.set_block(top, 0, lower_left);
  return m;
}

// Structure constants of g + H with [x,y] = [x,y]_g + omega(x,y),
// [x,a] = rho_h(x) a and H abelian.
LieAlgebra twisted_sum(const LieAlgebra& g, const LinearRep& rho_h, const Vector& omega) {
  const std::size_t d = g.dim(), h = rho_h.space_dim, G = d + h;
  return LieAlgebra::unchecked(G, constants_from(G, [&](std::size_t i, std::size_t j) {
    Vector v = zero_vector(G);
    if (i < d && j < d) {
      const Vector b = g.bracket_basis(i, j);
      const Vector w = pair_value(omega, d, h, i, j);
      for (std::size_t k = 0; k < d; ++k) v[k] = b[k];
      for (std::size_t k = 0; k < h; ++k) v[d + k] = w[k];
    } else if (i < d && j >= d) {
      for (std::size_t k = 0; k < h; ++k) v[d + k] = rho_h.action[i](k, j - d);
    } else if (i >= d && j < d) {
      for (std::size_t k = 0; k < h; ++k) v[d + k] = -rho_h.action[j](k, i - d);
    }
    return v;
  }));
}

void require_section_part(const Matrix& m, std::size_t base, std::size_t total, const char* what) {
  if (m.rows() != total || m.cols() != base) throw ShapeError(std::string(what) + ": wrong shape");
  if (!(m.block(0, 0, base, base) == Matrix::identity(base)))
    throw InvalidSection(std::string(what) + ": projection after section is not the identity");
}

// H-part (rows from `from`) of a vector.
Vector tail_part(const Vector& v, std::size_t from) { return slice(v, from, v.size() - from); }

ValidationReport ideal_checks(const LieAlgebra& total, std::size_t d) {
  ValidationReport report;
  const std::size_t G = total.dim();
  for (std::size_t i = 0; i < G; ++i)
    for (std::size_t a = d; a < G; ++a) {
      const Vector b = total.bracket_basis(i, a);
      report.check("ideal", {i, a}, slice(b, 0, d));
      if (i >= d && i < a) report.check("ideal_abelian", {i, a}, tail_part(b, d));
    }
  return report;
}

}  // namespace

// ---------------------------------------------------------------------------

TwoCocycle TwoCocycle::from_cochain(const CochainScheme& s, const Vector& coords) {
  if (s.degree != 2 || s.variant != Variant::RRB || coords.size() != s.total())
    throw ShapeError("2-cocycle: coordinates do not match the degree-2 cochain space");
  return {slice(coords, 0, s.fh_size()), slice(coords, s.fh_size(), s.fw_size()),
          slice(coords, s.bar_size(), s.theta_size())};
}

Vector TwoCocycle::to_cochain() const { return concat({&omega, &varpi, &chi}); }

Section canonical_section(const AbelianExtension& e) {
  return {stack_identity_over(e.base.g_dim(), e.h_dim, Matrix(e.h_dim, e.base.g_dim())),
          stack_identity_over(e.base.v_dim(), e.w_dim, Matrix(e.w_dim, e.base.v_dim()))};
}

AbelianExtension extension_from_cocycle(const RRBAlgebra& base, const RRBRepresentation& coeffs,
                                        const TwoCocycle& z) {
  const CochainScheme s2 = CochainScheme::rrb(base, coeffs, 2), s3 = CochainScheme::rrb(base, coeffs, 3);
  if (z.omega.size() != s2.fh_size() || z.varpi.size() != s2.fw_size() || z.chi.size() != s2.theta_size())
    throw ShapeError("2-cocycle: block sizes do not match the coefficients");
  ValidationReport cocycle;
  static const char* names[3] = {"cocycle_fh", "cocycle_fw", "cocycle_theta"};
  check_blocks(cocycle, "", s3, coboundary_matrix(base, coeffs, 2) * z.to_cochain(), names);
  if (!cocycle.valid()) throw AxiomError("not a 2-cocycle", cocycle);

  const std::size_t d = base.g_dim(), m = base.v_dim(), h = coeffs.h_dim, w = coeffs.w_dim;
  const std::size_t G = d + h, M = m + w;
  AbelianExtension e;
  e.base = base;
  e.h_dim = h;
  e.w_dim = w;
  e.total.g = twisted_sum(base.g, coeffs.rho_h, z.omega);
  e.total.rep.space_dim = M;
  for (std::size_t i = 0; i < d; ++i) {
    Matrix a(M, M);
    a.set_block(0, 0, base.rep.action[i]);
    a.set_block(m, m, coeffs.rho_w.action[i]);
    for (std::size_t u = 0; u < m; ++u)
      for (std::size_t c = 0; c < w; ++c) a(m + c, u) = z.varpi[(i * m + u) * w + c];
    e.total.rep.action.push_back(std::move(a));
  }
  for (std::size_t al = 0; al < h; ++al) {
    Matrix a(M, M);
    for (std::size_t u = 0; u < m; ++u)
      for (std::size_t c = 0; c < w; ++c) a(m + c, u) = -coeffs.mu[u](c, al);
    e.total.rep.action.push_back(std::move(a));
  }
  e.total.T = Matrix(G, M);
  e.total.T.set_block(0, 0, base.T);
  e.total.T.set_block(d, m, coeffs.curlyT);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t c = 0; c < h; ++c) e.total.T(d + c, u) = z.chi[u * h + c];

  const ValidationReport report = check_extension(e);
  if (!report.valid()) throw AxiomError("constructed extension fails its axioms", report);
  return e;
}

ValidationReport check_extension(const AbelianExtension& e) {
  const std::size_t d = e.base.g_dim(), m = e.base.v_dim(), h = e.h_dim, w = e.w_dim;
  if (e.total.g_dim() != d + h || e.total.v_dim() != m + w || e.total.T.rows() != d + h ||
      e.total.T.cols() != m + w)
    throw ShapeError("extension: total dimensions do not match base + coefficients");
  ValidationReport report;
  report.merge(check_rrb(e.total), "total_");
  report.merge(ideal_checks(e.total.g, d));
  for (std::size_t i = 0; i < d + h; ++i)
    for (std::size_t c = 0; c < w; ++c) {
      const Vector img = e.total.rep.action[i].column(m + c);
      report.check("w_invariant", {i, c}, slice(img, 0, m));
      if (i >= d) report.check("trivial_action", {i, c}, img);
    }
  RRBAlgebra sub{LieAlgebra::abelian(h), LinearRep::zero(h, w), e.total.T.block(d, m, h, w)};
  report.merge(check_rrb_homomorphism(sub, e.total, inclusion(d, h), inclusion(m, w)), "inclusion_");
  report.merge(check_rrb_homomorphism(e.total, e.base, projection(d, h), projection(m, w)), "projection_");
  return report;
}

RRBRepresentation induced_coeff_rep_from_extension(const AbelianExtension& e, const Section& sec) {
  const std::size_t d = e.base.g_dim(), m = e.base.v_dim(), h = e.h_dim, w = e.w_dim;
  require_section_part(sec.frak_s, d, d + h, "section of the Lie algebra");
  require_section_part(sec.s, m, m + w, "section of the representation space");
  RRBRepresentation r;
  r.h_dim = h;
  r.w_dim = w;
  r.curlyT = e.total.T.block(d, m, h, w);
  r.rho_h = LinearRep::zero(d, h);
  r.rho_w = LinearRep::zero(d, w);
  for (std::size_t i = 0; i < d; ++i) {
    const Vector sx = sec.frak_s.column(i);
    const Matrix act = e.total.rep.act(sx);
    for (std::size_t a = 0; a < h; ++a) {
      const Vector b = tail_part(e.total.g.bracket(sx, unit_vector(d + h, d + a)), d);
      for (std::size_t c = 0; c < h; ++c) r.rho_h.action[i](c, a) = b[c];
    }
    r.rho_w.action[i] = act.block(m, m, w, w);
  }
  for (std::size_t u = 0; u < m; ++u) {
    Matrix mu(w, h);
    const Vector su = sec.s.column(u);
    for (std::size_t a = 0; a < h; ++a) {
      const Vector img = tail_part(e.total.rep.action[d + a] * su, m);
      for (std::size_t c = 0; c < w; ++c) mu(c, a) = -img[c];
    }
    r.mu.push_back(std::move(mu));
  }
  return r;
}

TwoCocycle cocycle_from_extension(const AbelianExtension& e, const Section& sec) {
  const std::size_t d = e.base.g_dim(), m = e.base.v_dim(), h = e.h_dim, w = e.w_dim;
  require_section_part(sec.frak_s, d, d + h, "section of the Lie algebra");
  require_section_part(sec.s, m, m + w, "section of the representation space");
  TwoCocycle z;
  const WedgeBasis pairs(d, 2);
  for (const auto& t : pairs.tuples()) {
    const Vector lhs = e.total.g.bracket(sec.frak_s.column(t[0]), sec.frak_s.column(t[1]));
    const Vector v = tail_part(lhs - sec.frak_s * e.base.g.bracket_basis(t[0], t[1]), d);
    z.omega.insert(z.omega.end(), v.begin(), v.end());
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t u = 0; u < m; ++u) {
      const Vector lhs = e.total.rep.act(sec.frak_s.column(i)) * sec.s.column(u);
      const Vector v = tail_part(lhs - sec.s * e.base.rep.action[i].column(u), m);
      z.varpi.insert(z.varpi.end(), v.begin(), v.end());
    }
  for (std::size_t u = 0; u < m; ++u) {
    const Vector v = tail_part(e.total.T * sec.s.column(u) - sec.frak_s * e.base.T.column(u), d);
    z.chi.insert(z.chi.end(), v.begin(), v.end());
  }
  return z;
}

ExtensionIso iso_from_coboundary(const RRBAlgebra& base, const RRBRepresentation& coeffs, const TwoCocycle& z1,
                                 const TwoCocycle& z2, const Matrix& N, const Matrix& S) {
  const std::size_t d = base.g_dim(), m = base.v_dim(), h = coeffs.h_dim, w = coeffs.w_dim;
  if (N.rows() != h || N.cols() != d || S.rows() != w || S.cols() != m)
    throw ShapeError("coboundary witness: N must be h x g and S must be w x V");
  Vector b;
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t c = 0; c < h; ++c) b.push_back(N(c, x));
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t c = 0; c < w; ++c) b.push_back(S(c, u));
  const Vector diff = z1.to_cochain() - z2.to_cochain();
  if (diff.size() != CochainScheme::rrb(base, coeffs, 2).total())
    throw ShapeError("2-cocycle: block sizes do not match the coefficients");
  ValidationReport report;
  static const char* names[3] = {"coboundary_equation_omega", "coboundary_equation_varpi",
                                 "coboundary_equation_chi"};
  check_blocks(report, "", CochainScheme::rrb(base, coeffs, 2), diff - coboundary_matrix(base, coeffs, 1) * b,
               names);

  const AbelianExtension e1 = extension_from_cocycle(base, coeffs, z1);
  const AbelianExtension e2 = extension_from_cocycle(base, coeffs, z2);
  ExtensionIso iso{unipotent(d, h, N), unipotent(m, w, S)};
  report.merge(check_rrb_homomorphism(e1.total, e2.total, iso.kappa, iso.lambda));
  if (!report.valid()) throw AxiomError("witness does not give an isomorphism of extensions", report);
  return iso;
}

// ---------------------------------------------------------------------------
// Rota-Baxter variant

RBTwoCocycle RBTwoCocycle::from_cochain(const CochainScheme& s, const Vector& coords) {
  if (s.degree != 2 || s.variant != Variant::RB || coords.size() != s.total())
    throw ShapeError("2-cocycle: coordinates do not match the degree-2 cochain space");
  return {slice(coords, 0, s.fh_size()), slice(coords, s.bar_size(), s.theta_size())};
}

Vector RBTwoCocycle::to_cochain() const { return concat({&omega, &chi}); }

Matrix canonical_section_rb(const RBExtension& e) {
  return stack_identity_over(e.base.dim(), e.h_dim, Matrix(e.h_dim, e.base.dim()));
}

RBExtension extension_from_cocycle_rb(const RBAlgebra& base, const RBRepresentation& coeffs, const RBTwoCocycle& z) {
  const CochainScheme s2 = CochainScheme::rb(base, coeffs, 2), s3 = CochainScheme::rb(base, coeffs, 3);
  if (z.omega.size() != s2.fh_size() || z.chi.size() != s2.theta_size())
    throw ShapeError("2-cocycle: block sizes do not match the coefficients");
  ValidationReport cocycle;
  static const char* names[3] = {"cocycle_f", "cocycle_unused", "cocycle_theta"};
  check_blocks(cocycle, "", s3, rb_coboundary_matrix(base, coeffs, 2) * z.to_cochain(), names);
  if (!cocycle.valid()) throw AxiomError("not a 2-cocycle", cocycle);

  const std::size_t d = base.dim(), h = coeffs.w_dim;
  RBExtension e;
  e.base = base;
  e.h_dim = h;
  e.total.g = twisted_sum(base.g, coeffs.rho_w, z.omega);
  e.total.T = Matrix(d + h, d + h);
  e.total.T.set_block(0, 0, base.T);
  e.total.T.set_block(d, d, coeffs.curlyT);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t c = 0; c < h; ++c) e.total.T(d + c, x) = z.chi[x * h + c];
  const ValidationReport report = check_extension_rb(e);
  if (!report.valid()) throw AxiomError("constructed extension fails its axioms", report);
  return e;
}

ValidationReport check_extension_rb(const RBExtension& e) {
  const std::size_t d = e.base.dim(), h = e.h_dim;
  if (e.total.dim() != d + h || e.total.T.rows() != d + h || e.total.T.cols() != d + h)
    throw ShapeError("extension: total dimension does not match base + coefficients");
  ValidationReport report;
  report.merge(check_rb(e.total), "total_");
  report.merge(ideal_checks(e.total.g, d));
  RBAlgebra sub{LieAlgebra::abelian(h), e.total.T.block(d, d, h, h)};
  report.merge(check_rb_homomorphism(sub, e.total, inclusion(d, h)), "inclusion_");
  report.merge(check_rb_homomorphism(e.total, e.base, projection(d, h)), "projection_");
  return report;
}

RBRepresentation induced_coeff_rep_from_extension_rb(const RBExtension& e, const Matrix& frak_s) {
  const std::size_t d = e.base.dim(), h = e.h_dim;
  require_section_part(frak_s, d, d + h, "section of the Lie algebra");
  RBRepresentation r;
  r.w_dim = h;
  r.curlyT = e.total.T.block(d, d, h, h);
  r.rho_w = LinearRep::zero(d, h);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t a = 0; a < h; ++a) {
      const Vector b = tail_part(e.total.g.bracket(frak_s.column(i), unit_vector(d + h, d + a)), d);
      for (std::size_t c = 0; c < h; ++c) r.rho_w.action[i](c, a) = b[c];
    }
  return r;
}

RBTwoCocycle cocycle_from_extension_rb(const RBExtension& e, const Matrix& frak_s) {
  const std::size_t d = e.base.dim(), h = e.h_dim;
  require_section_part(frak_s, d, d + h, "section of the Lie algebra");
  RBTwoCocycle z;
  const WedgeBasis pairs(d, 2);
  for (const auto& t : pairs.tuples()) {
    const Vector lhs = e.total.g.bracket(frak_s.column(t[0]), frak_s.column(t[1]));
    const Vector v = tail_part(lhs - frak_s * e.base.g.bracket_basis(t[0], t[1]), d);
    z.omega.insert(z.omega.end(), v.begin(), v.end());
  }
  for (std::size_t x = 0; x < d; ++x) {
    const Vector v = tail_part(e.total.T * frak_s.column(x) - frak_s * e.base.T.column(x), d);
    z.chi.insert(z.chi.end(), v.begin(), v.end());
  }
  return z;
}

Matrix iso_from_coboundary_rb(const RBAlgebra& base, const RBRepresentation& coeffs, const RBTwoCocycle& z1,
                              const RBTwoCocycle& z2, const Matrix& N) {
  const std::size_t d = base.dim(), h = coeffs.w_dim;
  if (N.rows() != h || N.cols() != d) throw ShapeError("coboundary witness: N must be h x g");
  Vector b;
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t c = 0; c < h; ++c) b.push_back(N(c, x));
  const CochainScheme s2 = CochainScheme::rb(base, coeffs, 2);
  const Vector diff = z1.to_cochain() - z2.to_cochain();
  if (diff.size() != s2.total()) throw ShapeError("2-cocycle: block sizes do not match the coefficients");
  ValidationReport report;
  static const char* names[3] = {"coboundary_equation_omega", "coboundary_equation_unused",
                                 "coboundary_equation_chi"};
  check_blocks(report, "", s2, diff - rb_coboundary_matrix(base, coeffs, 1) * b, names);
  const RBExtension e1 = extension_from_cocycle_rb(base, coeffs, z1);
  const RBExtension e2 = extension_from_cocycle_rb(base, coeffs, z2);
  const Matrix kappa = unipotent(d, h, N);
  report.merge(check_rb_homomorphism(e1.total, e2.total, kappa));
  if (!report.valid()) throw AxiomError("witness does not give an isomorphism of extensions", report);
  return kappa;
}

}  // namespace rrb
