#include "rrb/lie2.hpp"

#include <algorithm>
#include <string>

#include "rrb/wedge.hpp"

namespace rrb {

namespace {

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols)
    throw ShapeError(std::string(what) + ": expected " + std::to_string(rows) + "x" + std::to_string(cols) +
                     ", got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

void require_rep(const LinearRep& r, std::size_t alg_dim, const char* what) {
  if (r.action.size() != alg_dim) throw ShapeError(std::string(what) + ": wrong number of action matrices");
  for (const auto& m : r.action) require_shape(m, r.space_dim, r.space_dim, what);
}

void require_shapes(const SkeletalRRB2& s) {
  const std::size_t d = s.g0_dim(), g1 = s.g1_dim(), v0 = s.v0_dim(), v1 = s.v1_dim();
  if (s.g0.constants().size() != d * d * d) throw ShapeError("g0: wrong number of structure constants");
  require_rep(s.g1_action, d, "g1_action");
  require_rep(s.rho0_v0, d, "rho0_v0");
  require_rep(s.rho0_v1, d, "rho0_v1");
  require_shape(s.l3, g1, binomial(d, 3), "l3");
  if (s.rho1.size() != g1) throw ShapeError("rho1: expected one matrix per basis element of g1");
  for (const auto& m : s.rho1) require_shape(m, v1, v0, "rho1");
  if (s.rho2.size() != binomial(d, 2)) throw ShapeError("rho2: expected one matrix per pair in g0");
  for (const auto& m : s.rho2) require_shape(m, v1, v0, "rho2");
  require_shape(s.T0, d, v0, "T0");
  require_shape(s.T1, g1, v1, "T1");
  require_shape(s.T2, g1, binomial(v0, 2), "T2");
}

// Alternating multilinear maps evaluated on arbitrary vectors.
class Skeletal {
 public:
  explicit Skeletal(const SkeletalRRB2& s) : s_(s), d_(s.g0_dim()), v0_(s.v0_dim()) {}

  Vector l3(const Vector& x, const Vector& y, const Vector& z) const {
    Vector out = zero_vector(s_.g1_dim());
    for (std::size_t a = 0; a < d_; ++a) {
      if (x[a] == 0) continue;
      for (std::size_t b = 0; b < d_; ++b) {
        if (y[b] == 0) continue;
        for (std::size_t c = 0; c < d_; ++c) {
          if (z[c] == 0) continue;
          IndexTuple t{a, b, c};
          const int sign = sort_with_sign(t);
          if (sign == 0) continue;
          out = out + Rational(sign * x[a] * y[b] * z[c]) * s_.l3.column(wedge_index(d_, t));
        }
      }
    }
    return out;
  }

  Matrix rho2(const Vector& x, const Vector& y) const {
    Matrix out(s_.v1_dim(), v0_);
    std::size_t p = 0;
    for (std::size_t a = 0; a < d_; ++a)
      for (std::size_t b = a + 1; b < d_; ++b, ++p) {
        const Rational c = x[a] * y[b] - x[b] * y[a];
        if (c != 0) out = out + c * s_.rho2[p];
      }
    return out;
  }

  Matrix rho1(const Vector& alpha) const {
    Matrix out(s_.v1_dim(), v0_);
    for (std::size_t a = 0; a < alpha.size(); ++a)
      if (alpha[a] != 0) out = out + alpha[a] * s_.rho1[a];
    return out;
  }

  Vector T2(const Vector& u, const Vector& v) const {
    Vector out = zero_vector(s_.g1_dim());
    std::size_t p = 0;
    for (std::size_t a = 0; a < v0_; ++a)
      for (std::size_t b = a + 1; b < v0_; ++b, ++p) {
        const Rational c = u[a] * v[b] - u[b] * v[a];
        if (c != 0) out = out + c * s_.T2.column(p);
      }
    return out;
  }

  // l2(x, a) for x in g0, a in g1.
  Vector act_g1(const Vector& x, const Vector& alpha) const { return s_.g1_action.act(x) * alpha; }

  // [A, phi] = A_1 phi - phi A_0 in End(V).
  Matrix bracket_end(const Vector& x, const Matrix& phi) const {
    return s_.rho0_v1.act(x) * phi - phi * s_.rho0_v0.act(x);
  }

 private:
  const SkeletalRRB2& s_;
  std::size_t d_, v0_;
};

void check_jacobiator(const SkeletalRRB2& s, const Skeletal& k, ValidationReport& report) {
  const std::size_t d = s.g0_dim();
  for (const auto& t : WedgeBasis(d, 4).tuples()) {
    std::vector<Vector> x;
    for (std::size_t i : t) x.push_back(unit_vector(d, i));
    auto others = [&](std::initializer_list<std::size_t> skip) {
      std::vector<Vector> out;
      for (std::size_t i = 0; i < 4; ++i)
        if (std::find(skip.begin(), skip.end(), i) == skip.end()) out.push_back(x[i]);
      return out;
    };
    Vector r = zero_vector(s.g1_dim());
    for (std::size_t p = 0; p < 4; ++p) {
      const auto o = others({p});
      const Vector term = k.act_g1(x[p], k.l3(o[0], o[1], o[2]));
      r = p % 2 == 0 ? r + term : r - term;
    }
    for (std::size_t p = 0; p < 4; ++p)
      for (std::size_t q = p + 1; q < 4; ++q) {
        const auto o = others({p, q});
        const Vector term = k.l3(s.g0.bracket(x[p], x[q]), o[0], o[1]);
        r = (p + q) % 2 == 1 ? r - term : r + term;
      }
    report.check("jacobiator", t, r);
  }
}

void check_representation_2(const SkeletalRRB2& s, const Skeletal& k, ValidationReport& report) {
  const std::size_t d = s.g0_dim(), g1 = s.g1_dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t a = 0; a < g1; ++a) {
      const Vector x = unit_vector(d, i), alpha = unit_vector(g1, a);
      report.check("rho1_equivariance", {i, a}, k.rho1(k.act_g1(x, alpha)) - k.bracket_end(x, s.rho1[a]));
    }
  for (const auto& t : WedgeBasis(d, 3).tuples()) {
    const Vector x = unit_vector(d, t[0]), y = unit_vector(d, t[1]), z = unit_vector(d, t[2]);
    const Matrix lhs = k.rho2(s.g0.bracket(x, y), z) + k.rho2(s.g0.bracket(y, z), x) +
                       k.rho2(s.g0.bracket(z, x), y) + k.rho1(k.l3(x, y, z));
    const Matrix rhs = k.bracket_end(x, k.rho2(y, z)) + k.bracket_end(y, k.rho2(z, x)) + k.bracket_end(z, k.rho2(x, y));
    report.check("rho2_coherence", t, lhs - rhs);
  }
}

void check_operator(const SkeletalRRB2& s, const Skeletal& k, ValidationReport& report) {
  const std::size_t v0 = s.v0_dim(), v1 = s.v1_dim();
  auto Tu = [&](std::size_t u) { return s.T0.column(u); };
  auto rho_v0 = [&](std::size_t u) { return s.rho0_v0.act(Tu(u)); };
  for (std::size_t u = 0; u < v0; ++u)
    for (std::size_t v = u + 1; v < v0; ++v) {
      const Vector inner = rho_v0(u).column(v) - rho_v0(v).column(u);
      report.check("operator_i", {u, v}, s.T0 * inner - s.g0.bracket(Tu(u), Tu(v)));
    }
  for (std::size_t xi = 0; xi < v1; ++xi)
    for (std::size_t v = 0; v < v0; ++v) {
      const Vector T1xi = s.T1.column(xi);
      const Vector inner = k.rho1(T1xi).column(v) - s.rho0_v1.act(Tu(v)).column(xi);
      report.check("operator_ii", {xi, v}, s.T1 * inner + k.act_g1(Tu(v), T1xi));
    }
  for (std::size_t i = 0; i < v0; ++i)
    for (std::size_t j = i; j < v0; ++j)
      for (std::size_t l = j; l < v0; ++l) {
        const std::size_t idx[3] = {i, j, l};
        Vector r = k.l3(Tu(i), Tu(j), Tu(l));
        for (std::size_t c = 0; c < 3; ++c) {
          const Vector v1v = unit_vector(v0, idx[c]), v2v = unit_vector(v0, idx[(c + 1) % 3]),
                       v3v = unit_vector(v0, idx[(c + 2) % 3]);
          const Vector t1 = s.T0 * v1v, t2 = s.T0 * v2v, t3 = s.T0 * v3v;
          const Vector t23 = k.T2(v2v, v3v);
          r = r + k.act_g1(t1, t23);
          r = r + k.T2(v3v, s.rho0_v0.act(t1) * v2v - s.rho0_v0.act(t2) * v1v);
          r = r + s.T1 * (k.rho1(t23) * v1v + k.rho2(t2, t3) * v1v);
        }
        report.check("operator_iii", {i, j, l}, r);
      }
}

std::vector<std::size_t> nonzero_positions(const Vector& v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.push_back(i);
  return out;
}

void require_cocycle(const CochainScheme& s3, const Vector& residual, const char* names[3]) {
  ValidationReport report;
  const std::size_t sizes[3] = {s3.fh_size(), s3.fw_size(), s3.theta_size()};
  std::size_t offset = 0;
  for (int b = 0; b < 3; ++b) {
    const Vector part(residual.begin() + std::ptrdiff_t(offset), residual.begin() + std::ptrdiff_t(offset + sizes[b]));
    if (!is_zero(part)) report.add(names[b], nonzero_positions(part), part);
    offset += sizes[b];
  }
  if (!report.valid()) throw AxiomError("not a 3-cocycle", report);
}

}  // namespace

ValidationReport check_skeletal_rrb2(const SkeletalRRB2& s) {
  require_shapes(s);
  const Skeletal k(s);
  ValidationReport report;
  report.merge(check_jacobi(s.g0));
  report.merge(check_representation(s.g0, s.g1_action), "g1_");
  check_jacobiator(s, k, report);
  report.merge(check_representation(s.g0, s.rho0_v0), "rho0_v0_");
  report.merge(check_representation(s.g0, s.rho0_v1), "rho0_v1_");
  check_representation_2(s, k, report);
  check_operator(s, k, report);
  return report;
}

SkeletalRRB2 skeletal_rb2_as_rrb2(const SkeletalRB2& s) {
  const std::size_t d = s.g0_dim(), g1 = s.g1_dim();
  if (s.g0.constants().size() != d * d * d) throw ShapeError("g0: wrong number of structure constants");
  require_rep(s.g1_action, d, "g1_action");
  require_shape(s.l3, g1, binomial(d, 3), "l3");
  SkeletalRRB2 r;
  r.g0 = s.g0;
  r.g1_action = s.g1_action;
  r.l3 = s.l3;
  r.rho0_v0 = adjoint_rep(s.g0);
  r.rho0_v1 = s.g1_action;
  for (std::size_t a = 0; a < g1; ++a) {
    Matrix m(g1, d);
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t c = 0; c < g1; ++c) m(c, x) = -s.g1_action.action[x](c, a);
    r.rho1.push_back(std::move(m));
  }
  for (const auto& t : WedgeBasis(d, 2).tuples()) {
    Matrix m(g1, d);
    for (std::size_t z = 0; z < d; ++z) {
      IndexTuple triple{t[0], t[1], z};
      const int sign = sort_with_sign(triple);
      if (sign == 0) continue;
      const std::size_t col = wedge_index(d, triple);
      for (std::size_t c = 0; c < g1; ++c) m(c, z) = Rational(-sign) * s.l3(c, col);
    }
    r.rho2.push_back(std::move(m));
  }
  r.T0 = s.T0;
  r.T1 = s.T1;
  r.T2 = s.T2;
  return r;
}

ValidationReport check_skeletal_rb2(const SkeletalRB2& s) { return check_skeletal_rrb2(skeletal_rb2_as_rrb2(s)); }

RRBThreeCocycle rrb2_to_3cocycle(const SkeletalRRB2& s) {
  if (auto report = check_skeletal_rrb2(s); !report)
    throw AxiomError("not a skeletal relative Rota-Baxter Lie 2-algebra", report);
  const std::size_t g1 = s.g1_dim(), v0 = s.v0_dim(), v1 = s.v1_dim();
  RRBThreeCocycle out;
  out.base = RRBAlgebra{s.g0, s.rho0_v0, s.T0};
  out.coeffs.h_dim = g1;
  out.coeffs.w_dim = v1;
  out.coeffs.curlyT = s.T1;
  out.coeffs.rho_h = s.g1_action;
  out.coeffs.rho_w = s.rho0_v1;
  for (std::size_t u = 0; u < v0; ++u) {
    Matrix mu(v1, g1);
    for (std::size_t a = 0; a < g1; ++a)
      for (std::size_t c = 0; c < v1; ++c) mu(c, a) = -s.rho1[a](c, u);
    out.coeffs.mu.push_back(std::move(mu));
  }
  for (std::size_t t = 0; t < s.l3.cols(); ++t)
    for (std::size_t c = 0; c < g1; ++c) out.coords.push_back(s.l3(c, t));
  for (const auto& m : s.rho2)
    for (std::size_t u = 0; u < v0; ++u)
      for (std::size_t c = 0; c < v1; ++c) out.coords.push_back(-m(c, u));
  for (std::size_t p = 0; p < s.T2.cols(); ++p)
    for (std::size_t c = 0; c < g1; ++c) out.coords.push_back(-s.T2(c, p));
  return out;
}

SkeletalRRB2 cocycle_to_rrb2(const RRBAlgebra& base, const RRBRepresentation& coeffs, const Vector& c) {
  const CochainScheme s3 = CochainScheme::rrb(base, coeffs, 3);
  if (c.size() != s3.total()) throw ShapeError("3-cocycle: coordinates do not match the degree-3 cochain space");
  static const char* names[3] = {"cocycle_fh", "cocycle_fw", "cocycle_theta"};
  require_cocycle(CochainScheme::rrb(base, coeffs, 4), coboundary_matrix(base, coeffs, 3) * c, names);

  const std::size_t d = base.g_dim(), v0 = base.v_dim(), g1 = coeffs.h_dim, v1 = coeffs.w_dim;
  SkeletalRRB2 s;
  s.g0 = base.g;
  s.g1_action = coeffs.rho_h;
  s.rho0_v0 = base.rep;
  s.rho0_v1 = coeffs.rho_w;
  s.T0 = base.T;
  s.T1 = coeffs.curlyT;
  for (std::size_t a = 0; a < g1; ++a) {
    Matrix m(v1, v0);
    for (std::size_t u = 0; u < v0; ++u)
      for (std::size_t k = 0; k < v1; ++k) m(k, u) = -coeffs.mu[u](k, a);
    s.rho1.push_back(std::move(m));
  }
  std::size_t pos = 0;
  s.l3 = Matrix(g1, binomial(d, 3));
  for (std::size_t t = 0; t < s.l3.cols(); ++t)
    for (std::size_t k = 0; k < g1; ++k) s.l3(k, t) = c[pos++];
  for (std::size_t p = 0; p < binomial(d, 2); ++p) {
    Matrix m(v1, v0);
    for (std::size_t u = 0; u < v0; ++u)
      for (std::size_t k = 0; k < v1; ++k) m(k, u) = -c[pos++];
    s.rho2.push_back(std::move(m));
  }
  s.T2 = Matrix(g1, binomial(v0, 2));
  for (std::size_t p = 0; p < s.T2.cols(); ++p)
    for (std::size_t k = 0; k < g1; ++k) s.T2(k, p) = -c[pos++];

  if (auto report = check_skeletal_rrb2(s); !report)
    throw AxiomError("cocycle does not give a skeletal relative Rota-Baxter Lie 2-algebra", report);
  return s;
}

RBThreeCocycle rb2_to_3cocycle(const SkeletalRB2& s) {
  if (auto report = check_skeletal_rb2(s); !report) throw AxiomError("not a skeletal Rota-Baxter Lie 2-algebra", report);
  const std::size_t g1 = s.g1_dim();
  RBThreeCocycle out;
  out.base = RBAlgebra{s.g0, s.T0};
  out.coeffs.w_dim = g1;
  out.coeffs.curlyT = s.T1;
  out.coeffs.rho_w = s.g1_action;
  for (std::size_t t = 0; t < s.l3.cols(); ++t)
    for (std::size_t c = 0; c < g1; ++c) out.coords.push_back(s.l3(c, t));
  for (std::size_t p = 0; p < s.T2.cols(); ++p)
    for (std::size_t c = 0; c < g1; ++c) out.coords.push_back(-s.T2(c, p));
  return out;
}

SkeletalRB2 cocycle_to_rb2(const RBAlgebra& base, const RBRepresentation& coeffs, const Vector& c) {
  const CochainScheme s3 = CochainScheme::rb(base, coeffs, 3);
  if (c.size() != s3.total()) throw ShapeError("3-cocycle: coordinates do not match the degree-3 cochain space");
  static const char* names[3] = {"cocycle_f", "cocycle_unused", "cocycle_theta"};
  require_cocycle(CochainScheme::rb(base, coeffs, 4), rb_coboundary_matrix(base, coeffs, 3) * c, names);

  const std::size_t d = base.dim(), g1 = coeffs.w_dim;
  SkeletalRB2 s;
  s.g0 = base.g;
  s.g1_action = coeffs.rho_w;
  s.T0 = base.T;
  s.T1 = coeffs.curlyT;
  std::size_t pos = 0;
  s.l3 = Matrix(g1, binomial(d, 3));
  for (std::size_t t = 0; t < s.l3.cols(); ++t)
    for (std::size_t k = 0; k < g1; ++k) s.l3(k, t) = c[pos++];
  s.T2 = Matrix(g1, binomial(d, 2));
  for (std::size_t p = 0; p < s.T2.cols(); ++p)
    for (std::size_t k = 0; k < g1; ++k) s.T2(k, p) = -c[pos++];

  if (auto report = check_skeletal_rb2(s); !report)
    throw AxiomError("cocycle does not give a skeletal Rota-Baxter Lie 2-algebra", report);
  return s;
}

}  // namespace rrb
