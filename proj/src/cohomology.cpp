#include "rrb/cohomology.hpp"

#include <string>

#include "assembly.hpp"

namespace rrb {

using detail::basis;
using detail::basis_args;
using detail::Block;
using detail::fill_block;
using detail::parity_sign;
using detail::replace_pair;
using detail::RowBuilder;
using detail::sparse;
using detail::SparseVec;
using detail::without;

namespace {

void check_budget(const CochainScheme& s, std::size_t budget) {
  const std::size_t total = s.total();
  if (total > budget) {
    std::string what = "cochain space of degree " + std::to_string(s.degree) + " has dimension " +
                       std::to_string(total) + " (blocks " + std::to_string(s.fh_size()) + " + " +
                       std::to_string(s.fw_size()) + " + " + std::to_string(s.theta_size()) +
                       "), over the budget of " + std::to_string(budget);
    throw BudgetExceeded(what, total, budget);
  }
}

struct Layout {
  Block fh, fw, th;
};

// Block positions inside the degree-n cochain space. Blocks of size zero are
// never evaluated.
Layout rrb_layout(const CochainScheme& s) {
  const std::size_t n = s.degree;
  Layout L;
  if (n == 0) return L;
  L.fh = Block(0, s.g_dim, n, detail::kNoTail, s.h_dim);
  L.fw = Block(L.fh.end(), s.g_dim, n - 1, s.v_dim, s.w_dim);
  L.th = n >= 2 ? Block(L.fw.end(), s.v_dim, n - 1, detail::kNoTail, s.h_dim) : Block(L.fw.end(), 0, 0, detail::kNoTail, 0);
  return L;
}

Layout rb_layout(const CochainScheme& s) {
  const std::size_t n = s.degree;
  Layout L;
  if (n == 0) return L;
  L.fh = Block(0, s.g_dim, n, detail::kNoTail, s.w_dim);
  L.fw = Block(L.fh.end(), 0, 0, detail::kNoTail, 0);
  L.th = n >= 2 ? Block(L.fh.end(), s.g_dim, n - 1, detail::kNoTail, s.w_dim) : Block(L.fh.end(), 0, 0, detail::kNoTail, 0);
  return L;
}

Vector flatten(const Matrix& m) {
  Vector v;
  for (std::size_t r = 0; r < m.rows(); ++r) v.insert(v.end(), m.row(r).begin(), m.row(r).end());
  return v;
}

// Chevalley-Eilenberg rows: (d f)(x_0..x_n) for f in block `in`.
void add_ce_terms(RowBuilder& rb, const Block& in, const LieAlgebra& g, const LinearRep& rho, const IndexTuple& x) {
  const auto args = basis_args(x);
  for (std::size_t i = 0; i < x.size(); ++i)
    rb.add(in, without(args, i), nullptr, &rho.action[x[i]], parity_sign(i));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      rb.add(in, replace_pair(args, i, j, sparse(g.bracket_basis(x[i], x[j]))), nullptr, nullptr,
             parity_sign(i + j));
}

void require_matching(const CochainScheme& expected, const Cochain& c) {
  if (!(c.scheme == expected)) throw ShapeError("cochain scheme does not match the algebra and coefficients");
  if (c.coords.size() != expected.total()) throw ShapeError("cochain has the wrong number of coordinates");
}

}  // namespace

// ---------------------------------------------------------------------------
// Schemes

CochainScheme CochainScheme::rrb(const RRBAlgebra& a, const RRBRepresentation& r, std::size_t n) {
  return {Variant::RRB, n, a.g_dim(), a.v_dim(), r.h_dim, r.w_dim};
}

CochainScheme CochainScheme::rb(const RBAlgebra& a, const RBRepresentation& r, std::size_t n) {
  return {Variant::RB, n, a.dim(), 0, 0, r.w_dim};
}

std::size_t CochainScheme::fh_size() const {
  if (degree == 0) return 0;
  return binomial(g_dim, degree) * (variant == Variant::RRB ? h_dim : w_dim);
}

std::size_t CochainScheme::fw_size() const {
  if (degree == 0 || variant == Variant::RB) return 0;
  return binomial(g_dim, degree - 1) * v_dim * w_dim;
}

std::size_t CochainScheme::theta_size() const {
  if (degree < 2) return 0;
  return variant == Variant::RRB ? binomial(v_dim, degree - 1) * h_dim : binomial(g_dim, degree - 1) * w_dim;
}

std::size_t cochain_dim(const CochainScheme& s) { return s.total(); }

// ---------------------------------------------------------------------------
// RRB complex

Matrix coboundary_matrix(const RRBAlgebra& a, const RRBRepresentation& r, std::size_t n, std::size_t budget) {
  const CochainScheme s0 = CochainScheme::rrb(a, r, n), s1 = CochainScheme::rrb(a, r, n + 1);
  check_budget(s0, budget);
  check_budget(s1, budget);
  Matrix D(s1.total(), s0.total());
  if (n == 0) return D;
  const Layout in = rrb_layout(s0), out = rrb_layout(s1);
  const std::size_t m = a.v_dim();

  std::vector<SparseVec> Tcol;
  std::vector<Matrix> rho_h_T, curlyT_mu, rho_T;
  for (std::size_t k = 0; k < m; ++k) {
    const Vector t = a.T.column(k);
    Tcol.push_back(sparse(t));
    rho_h_T.push_back(r.rho_h.act(t));
    curlyT_mu.push_back(r.curlyT * r.mu[k]);
    rho_T.push_back(a.rep.act(t));
  }

  // (delta f)_h = d_CE f_h
  fill_block(D, out.fh, [&](const IndexTuple& x, std::size_t, RowBuilder& rb) {
    add_ce_terms(rb, in.fh, a.g, r.rho_h, x);
  });

  // (delta f)_W(x_1..x_n, v)
  fill_block(D, out.fw, [&](const IndexTuple& x, std::size_t v, RowBuilder& rb) {
    const auto args = basis_args(x);
    const SparseVec tail = basis(v);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        rb.add(in.fw, replace_pair(args, i, j, sparse(a.g.bracket_basis(x[i], x[j]))), &tail, nullptr,
               parity_sign(i + j));
    rb.add(in.fh, args, nullptr, &r.mu[v], -parity_sign(n - 1));
    for (std::size_t i = 0; i < n; ++i) {
      const auto rest = without(args, i);
      rb.add(in.fw, rest, &tail, &r.rho_w.action[x[i]], parity_sign(i));
      const SparseVec moved = sparse(a.rep.action[x[i]].column(v));
      rb.add(in.fw, rest, &moved, nullptr, -parity_sign(i));
    }
  });

  // (partial theta + h_T f)(v_1..v_n)
  fill_block(D, out.th, [&](const IndexTuple& vt, std::size_t, RowBuilder& rb) {
    std::vector<SparseVec> targs;
    for (auto k : vt) targs.push_back(Tcol[k]);
    rb.add(in.fh, targs, nullptr, nullptr, parity_sign(n));
    for (std::size_t i = 0; i < n; ++i) {
      const SparseVec vi = basis(vt[i]);
      rb.add(in.fw, without(targs, i), &vi, &r.curlyT, parity_sign(i));
    }
    if (n < 2) return;
    const auto args = basis_args(vt);
    for (std::size_t i = 0; i < n; ++i) {
      const auto rest = without(args, i);
      rb.add(in.th, rest, nullptr, &rho_h_T[vt[i]], parity_sign(i));
      rb.add(in.th, rest, nullptr, &curlyT_mu[vt[i]], -parity_sign(i));
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        Vector arg = rho_T[vt[i]].column(vt[j]) - rho_T[vt[j]].column(vt[i]);
        rb.add(in.th, replace_pair(args, i, j, sparse(arg)), nullptr, nullptr, parity_sign(i + j));
      }
  });
  return D;
}

Matrix delta_matrix(const RRBAlgebra& a, const RRBRepresentation& r, std::size_t n, std::size_t budget) {
  const CochainScheme s0 = CochainScheme::rrb(a, r, n), s1 = CochainScheme::rrb(a, r, n + 1);
  return coboundary_matrix(a, r, n, budget).block(0, 0, s1.bar_size(), s0.bar_size());
}

Matrix partial_matrix(const RRBAlgebra& a, const RRBRepresentation& r, std::size_t n, std::size_t budget) {
  const CochainScheme s0 = CochainScheme::rrb(a, r, n), s1 = CochainScheme::rrb(a, r, n + 1);
  return coboundary_matrix(a, r, n, budget).block(s1.bar_size(), s0.bar_size(), s1.theta_size(), s0.theta_size());
}

Matrix hT_matrix(const RRBAlgebra& a, const RRBRepresentation& r, std::size_t n, std::size_t budget) {
  const CochainScheme s0 = CochainScheme::rrb(a, r, n), s1 = CochainScheme::rrb(a, r, n + 1);
  return coboundary_matrix(a, r, n, budget).block(s1.bar_size(), 0, s1.theta_size(), s0.bar_size());
}

// ---------------------------------------------------------------------------
// RB complex

Matrix rb_coboundary_matrix(const RBAlgebra& a, const RBRepresentation& r, std::size_t n, std::size_t budget) {
  const CochainScheme s0 = CochainScheme::rb(a, r, n), s1 = CochainScheme::rb(a, r, n + 1);
  check_budget(s0, budget);
  check_budget(s1, budget);
  Matrix D(s1.total(), s0.total());
  if (n == 0) return D;
  const Layout in = rb_layout(s0), out = rb_layout(s1);
  const std::size_t d = a.dim();

  std::vector<SparseVec> Tcol;
  std::vector<Matrix> rho_T, curlyT_rho;
  for (std::size_t k = 0; k < d; ++k) {
    const Vector t = a.T.column(k);
    Tcol.push_back(sparse(t));
    rho_T.push_back(r.rho_w.act(t));
    curlyT_rho.push_back(r.curlyT * r.rho_w.action[k]);
  }

  fill_block(D, out.fh, [&](const IndexTuple& x, std::size_t, RowBuilder& rb) {
    add_ce_terms(rb, in.fh, a.g, r.rho_w, x);
  });

  fill_block(D, out.th, [&](const IndexTuple& x, std::size_t, RowBuilder& rb) {
    std::vector<SparseVec> targs;
    for (auto k : x) targs.push_back(Tcol[k]);
    rb.add(in.fh, targs, nullptr, nullptr, parity_sign(n));
    for (std::size_t i = 0; i < n; ++i) {
      auto mixed = targs;
      mixed[i] = basis(x[i]);
      rb.add(in.fh, mixed, nullptr, &r.curlyT, -parity_sign(n));
    }
    if (n < 2) return;
    const auto args = basis_args(x);
    for (std::size_t i = 0; i < n; ++i) {
      const auto rest = without(args, i);
      rb.add(in.th, rest, nullptr, &rho_T[x[i]], parity_sign(i));
      rb.add(in.th, rest, nullptr, &curlyT_rho[x[i]], -parity_sign(i));
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const Vector ti = a.T.column(x[i]), tj = a.T.column(x[j]);
        Vector arg = a.g.bracket(ti, unit_vector(d, x[j])) - a.g.bracket(tj, unit_vector(d, x[i]));
        rb.add(in.th, replace_pair(args, i, j, sparse(arg)), nullptr, nullptr, parity_sign(i + j));
      }
  });
  return D;
}

// ---------------------------------------------------------------------------
// Pre-Lie complex and Xi

Matrix prelie_coboundary(const PreLieAlgebra& A, const PreLieRep& r, std::size_t n, std::size_t budget) {
  if (n == 0) throw std::invalid_argument("pre-Lie cochains start in degree 1");
  const std::size_t d = A.dim(), w = r.space_dim;
  const Block in(0, d, n - 1, d, w), out(0, d, n, d, w);
  if (in.size() > budget || out.size() > budget)
    throw BudgetExceeded("pre-Lie cochain space over budget", std::max(in.size(), out.size()), budget);
  Matrix m(out.size(), in.size());
  fill_block(m, out, [&](const IndexTuple& x, std::size_t t, RowBuilder& rb) {
    const auto args = basis_args(x);
    const SparseVec last = basis(t);
    for (std::size_t i = 0; i < n; ++i) {
      const auto rest = without(args, i);
      const SparseVec xi = basis(x[i]);
      const SparseVec prod = sparse(A.product_basis(x[i], t));
      rb.add(in, rest, &last, &r.theta[x[i]], parity_sign(i));
      rb.add(in, rest, &xi, &r.vartheta[t], parity_sign(i));
      rb.add(in, rest, &prod, nullptr, -parity_sign(i));
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        Vector c = A.product_basis(x[i], x[j]) - A.product_basis(x[j], x[i]);
        rb.add(in, replace_pair(args, i, j, sparse(c)), &last, nullptr, parity_sign(i + j));
      }
  });
  return m;
}

Matrix xi_matrix(const RRBAlgebra& a, const RRBRepresentation& r, std::size_t n) {
  if (n == 0) throw std::invalid_argument("Xi is defined from degree 1");
  const std::size_t m = a.v_dim();
  const Block out(0, m, n - 1, m, r.w_dim);
  const Block in = n >= 2 ? Block(0, m, n - 1, detail::kNoTail, r.h_dim) : Block(0, 0, 0, detail::kNoTail, 0);
  Matrix x(out.size(), in.size());
  if (n < 2) return x;
  fill_block(x, out, [&](const IndexTuple& vt, std::size_t last, RowBuilder& rb) {
    rb.add(in, basis_args(vt), nullptr, &r.mu[last], Rational(1));
  });
  return x;
}

ValidationReport xi_commutes(const RRBAlgebra& a, const RRBRepresentation& r, std::size_t max_degree,
                             std::size_t budget) {
  const PreLieAlgebra A = induced_prelie(a);
  const PreLieRep pr = induced_prelie_rep(a, r);
  ValidationReport report;
  for (std::size_t n = 1; n <= max_degree; ++n) {
    Matrix lhs = prelie_coboundary(A, pr, n, budget) * xi_matrix(a, r, n);
    Matrix rhs = xi_matrix(a, r, n + 1) * partial_matrix(a, r, n, budget);
    report.check("xi_chain_map", {n}, flatten(lhs - rhs));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Dimensions

namespace {

std::size_t homology_dim(const Matrix& d_out, const Matrix& d_in) {
  return quotient_dim(kernel(d_out), image(d_in));
}

template <class Scheme>
CohomologyReport dims_from(std::size_t max_degree, Scheme&& scheme, const std::vector<Matrix>& D) {
  CohomologyReport rep;
  for (std::size_t n = 1; n <= max_degree; ++n) {
    const CochainScheme s_prev = scheme(n - 1), s = scheme(n), s_next = scheme(n + 1);
    const Matrix& out = D[n];
    const Matrix& in = D[n - 1];
    DegreeReport dr;
    dr.n = n;
    dr.dim_cochains = s.total();
    Subspace Z = kernel(out), B = image(in);
    dr.dim_cocycles = Z.dim();
    dr.dim_coboundaries = B.dim();
    dr.dim_H = quotient_dim(Z, B);
    dr.dim_H_quot = homology_dim(out.block(0, 0, s_next.bar_size(), s.bar_size()),
                                 in.block(0, 0, s.bar_size(), s_prev.bar_size()));
    dr.dim_H_sub = homology_dim(out.block(s_next.bar_size(), s.bar_size(), s_next.theta_size(), s.theta_size()),
                                in.block(s.bar_size(), s_prev.bar_size(), s.theta_size(), s_prev.theta_size()));
    rep.degrees.push_back(dr);
  }
  return rep;
}

}  // namespace

CohomologyReport cohomology_dims(const RRBAlgebra& a, const RRBRepresentation& r, std::size_t max_degree,
                                 std::size_t budget) {
  if (max_degree < 1) throw std::invalid_argument("max_degree must be at least 1");
  std::vector<Matrix> D;
  for (std::size_t n = 0; n <= max_degree; ++n) D.push_back(coboundary_matrix(a, r, n, budget));
  return dims_from(max_degree, [&](std::size_t n) { return CochainScheme::rrb(a, r, n); }, D);
}

CohomologyReport rb_cohomology_dims(const RBAlgebra& a, const RBRepresentation& r, std::size_t max_degree,
                                    std::size_t budget) {
  if (max_degree < 1) throw std::invalid_argument("max_degree must be at least 1");
  std::vector<Matrix> D;
  for (std::size_t n = 0; n <= max_degree; ++n) D.push_back(rb_coboundary_matrix(a, r, n, budget));
  return dims_from(max_degree, [&](std::size_t n) { return CochainScheme::rb(a, r, n); }, D);
}

// ---------------------------------------------------------------------------
// Membership

Matrix coboundary_for(const RRBAlgebra& a, const RRBRepresentation& r, std::size_t n, std::size_t budget) {
  return coboundary_matrix(a, r, n, budget);
}

Matrix coboundary_for(const RBAlgebra& a, const RBRepresentation& r, std::size_t n, std::size_t budget) {
  return rb_coboundary_matrix(a, r, n, budget);
}

namespace {

CochainScheme scheme_for(const RRBAlgebra& a, const RRBRepresentation& r, std::size_t n) {
  return CochainScheme::rrb(a, r, n);
}
CochainScheme scheme_for(const RBAlgebra& a, const RBRepresentation& r, std::size_t n) {
  return CochainScheme::rb(a, r, n);
}

template <class A, class R>
bool is_cocycle_impl(const A& a, const R& r, const Cochain& c, std::size_t budget) {
  require_matching(scheme_for(a, r, c.scheme.degree), c);
  return is_zero(coboundary_for(a, r, c.scheme.degree, budget) * c.coords);
}

template <class A, class R>
std::optional<Cochain> preimage_impl(const A& a, const R& r, const Cochain& c, std::size_t budget) {
  require_matching(scheme_for(a, r, c.scheme.degree), c);
  if (c.scheme.degree == 0) return Cochain{c.scheme, {}};
  const std::size_t n = c.scheme.degree - 1;
  auto x = solve(coboundary_for(a, r, n, budget), c.coords);
  if (!x) return std::nullopt;
  return Cochain{scheme_for(a, r, n), std::move(*x)};
}

template <class A, class R>
std::optional<Cochain> cohomologous_impl(const A& a, const R& r, const Cochain& c1, const Cochain& c2,
                                         std::size_t budget) {
  if (!(c1.scheme == c2.scheme)) throw ShapeError("cochains of different degree or shape");
  return preimage_impl(a, r, Cochain{c1.scheme, c1.coords - c2.coords}, budget);
}

}  // namespace

bool is_cocycle(const RRBAlgebra& a, const RRBRepresentation& r, const Cochain& c, std::size_t budget) {
  return is_cocycle_impl(a, r, c, budget);
}
bool is_cocycle(const RBAlgebra& a, const RBRepresentation& r, const Cochain& c, std::size_t budget) {
  return is_cocycle_impl(a, r, c, budget);
}
std::optional<Cochain> coboundary_preimage(const RRBAlgebra& a, const RRBRepresentation& r, const Cochain& c,
                                           std::size_t budget) {
  return preimage_impl(a, r, c, budget);
}
std::optional<Cochain> coboundary_preimage(const RBAlgebra& a, const RBRepresentation& r, const Cochain& c,
                                           std::size_t budget) {
  return preimage_impl(a, r, c, budget);
}
std::optional<Cochain> cohomologous(const RRBAlgebra& a, const RRBRepresentation& r, const Cochain& c1,
                                    const Cochain& c2, std::size_t budget) {
  return cohomologous_impl(a, r, c1, c2, budget);
}
std::optional<Cochain> cohomologous(const RBAlgebra& a, const RBRepresentation& r, const Cochain& c1,
                                    const Cochain& c2, std::size_t budget) {
  return cohomologous_impl(a, r, c1, c2, budget);
}

// ---------------------------------------------------------------------------
// Long exact sequence

namespace {

// Cohomology of one complex at one degree, with representatives chosen as a
// canonical complement of the coboundaries inside the cocycles.
struct CohomologyBasis {
  std::size_t ambient = 0;
  std::vector<Vector> reps;
  Matrix reps_and_boundaries;

  CohomologyBasis(const Matrix& d_out, const Matrix& d_in) : ambient(d_out.cols()) {
    Subspace Z = kernel(d_out), B = image(d_in);
    (void)quotient_dim(Z, B);
    std::vector<Vector> span = B.basis();
    for (const auto& z : Z.basis()) {
      if (Subspace(ambient, span).contains(z)) continue;
      reps.push_back(z);
      span.push_back(z);
    }
    std::vector<Vector> cols = reps;
    cols.insert(cols.end(), B.basis().begin(), B.basis().end());
    reps_and_boundaries = Matrix::from_columns(ambient, cols);
  }

  std::size_t dim() const { return reps.size(); }

  /// Class coordinates of a cocycle.
  Vector coords(const Vector& z) const {
    auto x = solve(reps_and_boundaries, z);
    if (!x) throw std::logic_error("vector is not a cocycle");
    return Vector(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(dim()));
  }

  /// Matrix of the induced map H(this) -> H(to) of a chain-level map.
  Matrix induced(const Matrix& chain_map, const CohomologyBasis& to) const {
    std::vector<Vector> cols;
    for (const auto& r : reps) cols.push_back(to.coords(chain_map * r));
    return Matrix::from_columns(to.dim(), cols);
  }
};

}  // namespace

bool LesReport::exact() const {
  for (const auto& n : nodes)
    if (!n.exact()) return false;
  return true;
}

LesReport les_report(const RRBAlgebra& a, const RRBRepresentation& r, std::size_t max_degree, std::size_t budget) {
  if (max_degree < 1) throw std::invalid_argument("max_degree must be at least 1");
  const std::size_t top = max_degree + 1;
  std::vector<Matrix> D;
  std::vector<CochainScheme> S;
  for (std::size_t n = 0; n <= top + 1; ++n) S.push_back(CochainScheme::rrb(a, r, n));
  for (std::size_t n = 0; n <= top; ++n) D.push_back(coboundary_matrix(a, r, n, budget));

  auto quot_d = [&](std::size_t n) { return D[n].block(0, 0, S[n + 1].bar_size(), S[n].bar_size()); };
  auto sub_d = [&](std::size_t n) {
    return D[n].block(S[n + 1].bar_size(), S[n].bar_size(), S[n + 1].theta_size(), S[n].theta_size());
  };
  auto hT = [&](std::size_t n) { return D[n].block(S[n + 1].bar_size(), 0, S[n + 1].theta_size(), S[n].bar_size()); };
  auto iota = [&](std::size_t n) {
    Matrix m(S[n].total(), S[n].theta_size());
    m.set_block(S[n].bar_size(), 0, Matrix::identity(S[n].theta_size()));
    return m;
  };
  auto proj = [&](std::size_t n) {
    Matrix m(S[n].bar_size(), S[n].total());
    m.set_block(0, 0, Matrix::identity(S[n].bar_size()));
    return m;
  };

  // Sequence of spaces and the maps between consecutive ones.
  struct Space {
    std::string name;
    std::size_t degree;
    CohomologyBasis h;
  };
  std::vector<Space> seq;
  std::vector<Matrix> maps;  // maps[i]: seq[i] -> seq[i+1]
  for (std::size_t n = 1; n <= top; ++n) {
    seq.push_back({"sub", n, CohomologyBasis(sub_d(n), sub_d(n - 1))});
    if (n == top) break;
    seq.push_back({"full", n, CohomologyBasis(D[n], D[n - 1])});
    seq.push_back({"quot", n, CohomologyBasis(quot_d(n), quot_d(n - 1))});
  }
  // H^top(full) is needed for the outgoing map of the last node.
  CohomologyBasis full_top(D[top], D[top - 1]);
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    const std::size_t n = seq[i].degree;
    const Matrix chain = seq[i].name == "sub" ? iota(n) : seq[i].name == "full" ? proj(n) : hT(n);
    maps.push_back(seq[i].h.induced(chain, seq[i + 1].h));
  }
  maps.push_back(seq.back().h.induced(iota(top), full_top));

  LesReport rep;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    LesNode node;
    node.space = seq[i].name;
    node.degree = seq[i].degree;
    node.dim = seq[i].h.dim();
    node.dim_image = i == 0 ? 0 : rank(maps[i - 1]);
    node.dim_kernel = node.dim - rank(maps[i]);
    node.composite_zero = i == 0 || (maps[i] * maps[i - 1]).is_zero();
    rep.nodes.push_back(node);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Embeddings

RRBRepresentation rb_coefficients_as_rrb(const RBAlgebra& a, const RBRepresentation& r) {
  RRBRepresentation out;
  out.h_dim = r.w_dim;
  out.w_dim = r.w_dim;
  out.curlyT = r.curlyT;
  out.rho_h = r.rho_w;
  out.rho_w = r.rho_w;
  for (std::size_t k = 0; k < a.dim(); ++k) out.mu.push_back(r.rho_w.action[k]);
  return out;
}

Matrix rb_embedding_matrix(const RBAlgebra& a, const RBRepresentation& r, std::size_t n) {
  const RRBAlgebra big = rb_to_rrb(a);
  const RRBRepresentation coeffs = rb_coefficients_as_rrb(a, r);
  const CochainScheme src = CochainScheme::rb(a, r, n), dst = CochainScheme::rrb(big, coeffs, n);
  const Layout in = rb_layout(src), out = rrb_layout(dst);
  Matrix E(dst.total(), src.total());
  if (n == 0) return E;
  const std::size_t w = r.w_dim;
  for (std::size_t c = 0; c < in.fh.size(); ++c) E(out.fh.offset + c, in.fh.offset + c) = 1;
  for (std::size_t c = 0; c < in.th.size(); ++c) E(out.th.offset + c, in.th.offset + c) = 1;
  const WedgeBasis wb(a.dim(), n - 1);
  for (std::size_t t = 0; t < wb.size(); ++t)
    for (std::size_t v = 0; v < a.dim(); ++v) {
      IndexTuple full = wb.tuple(t);
      full.push_back(v);
      const int sign = sort_with_sign(full);
      if (sign == 0) continue;
      const std::size_t ft = wedge_index(a.dim(), full);
      for (std::size_t c = 0; c < w; ++c) E(out.fw.coordinate(t, v, c), in.fh.coordinate(ft, 0, c)) = sign;
    }
  return E;
}

ValidationReport rb_embedding_check(const RBAlgebra& a, const RBRepresentation& r, std::size_t max_degree,
                                    std::size_t budget) {
  const RRBAlgebra big = rb_to_rrb(a);
  const RRBRepresentation coeffs = rb_coefficients_as_rrb(a, r);
  ValidationReport report;
  for (std::size_t n = 1; n <= max_degree; ++n) {
    Matrix lhs = coboundary_matrix(big, coeffs, n, budget) * rb_embedding_matrix(a, r, n);
    Matrix rhs = rb_embedding_matrix(a, r, n + 1) * rb_coboundary_matrix(a, r, n, budget);
    report.check("rb_embedding_chain_map", {n}, flatten(lhs - rhs));
  }
  return report;
}

Matrix semidirect_embedding_matrix(const RRBAlgebra& a, const RRBRepresentation& r, std::size_t n) {
  const RRBAlgebra S = semidirect_rrb(a, r);
  const RRBRepresentation adj = adjoint_rrb_rep(S);
  const CochainScheme src = CochainScheme::rrb(a, r, n), dst = CochainScheme::rrb(S, adj, n);
  const Layout in = rrb_layout(src), out = rrb_layout(dst);
  Matrix E(dst.total(), src.total());
  if (n == 0) return E;
  const std::size_t g = a.g_dim(), m = a.v_dim(), G = S.g_dim(), M = S.v_dim();
  const WedgeBasis gb(g, n), gb1(g, n - 1), vb(m, n - 1);
  for (std::size_t t = 0; t < gb.size(); ++t) {
    const std::size_t T = wedge_index(G, gb.tuple(t));
    for (std::size_t c = 0; c < r.h_dim; ++c) E(out.fh.coordinate(T, 0, g + c), in.fh.coordinate(t, 0, c)) = 1;
  }
  for (std::size_t t = 0; t < gb1.size(); ++t) {
    const std::size_t T = wedge_index(G, gb1.tuple(t));
    for (std::size_t v = 0; v < m; ++v)
      for (std::size_t c = 0; c < r.w_dim; ++c)
        E(out.fw.coordinate(T, v, m + c), in.fw.coordinate(t, v, c)) = 1;
  }
  if (n >= 2)
    for (std::size_t t = 0; t < vb.size(); ++t) {
      const std::size_t T = wedge_index(M, vb.tuple(t));
      for (std::size_t c = 0; c < r.h_dim; ++c) E(out.th.coordinate(T, 0, g + c), in.th.coordinate(t, 0, c)) = 1;
    }
  return E;
}

ValidationReport rrb_semidirect_embedding_check(const RRBAlgebra& a, const RRBRepresentation& r,
                                                std::size_t max_degree, std::size_t budget) {
  const RRBAlgebra S = semidirect_rrb(a, r);
  const RRBRepresentation adj = adjoint_rrb_rep(S);
  ValidationReport report;
  for (std::size_t n = 1; n <= max_degree; ++n) {
    Matrix lhs = coboundary_matrix(S, adj, n, budget) * semidirect_embedding_matrix(a, r, n);
    Matrix rhs = semidirect_embedding_matrix(a, r, n + 1) * coboundary_matrix(a, r, n, budget);
    report.check("semidirect_embedding_chain_map", {n}, flatten(lhs - rhs));
  }
  return report;
}

}  // namespace rrb
