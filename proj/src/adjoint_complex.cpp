// Coboundary of the complex with adjoint coefficients, computed by applying
// the operator to each basis cochain and reading off the result. This does not
// go through RowBuilder; it evaluates concrete cochains on vectors.

#include <functional>

#include "rrb/cohomology.hpp"
#include "rrb/wedge.hpp"

namespace rrb {

namespace {

// A concrete alternating map Hom(wedge^k A (x) Tail, Target) stored at
// `offset` inside a coordinate vector.
struct Piece {
  std::size_t offset = 0, arg_dim = 0, degree = 0, tail_dim = 0, target_dim = 0;

  std::size_t tails() const { return tail_dim == 0 ? 1 : tail_dim; }
  std::size_t size() const { return binomial(arg_dim, degree) * tails() * target_dim; }

  Vector eval(const Vector& coords, const std::vector<Vector>& args, const Vector* tail) const {
    Vector out = zero_vector(target_dim);
    if (size() == 0) return out;
    IndexTuple idx;
    std::function<void(std::size_t, Rational)> rec = [&](std::size_t pos, Rational coef) {
      if (pos == args.size()) {
        IndexTuple s = idx;
        const int sign = sort_with_sign(s);
        if (sign == 0) return;
        const std::size_t t = wedge_index(arg_dim, s);
        for (std::size_t tl = 0; tl < tails(); ++tl) {
          Rational c = sign * coef;
          if (tail) c *= (*tail)[tl];
          if (c == 0) continue;
          const std::size_t base = offset + (t * tails() + tl) * target_dim;
          for (std::size_t k = 0; k < target_dim; ++k) out[k] += c * coords[base + k];
        }
        return;
      }
      for (std::size_t i = 0; i < args[pos].size(); ++i) {
        if (args[pos][i] == 0) continue;
        idx.push_back(i);
        rec(pos + 1, coef * args[pos][i]);
        idx.pop_back();
      }
    };
    rec(0, Rational(1));
    return out;
  }
};

struct AdjointLayout {
  Piece fg, fv, th;
  std::size_t total = 0;
};

AdjointLayout adjoint_layout(std::size_t g, std::size_t m, std::size_t n) {
  AdjointLayout L;
  if (n == 0) return L;
  L.fg = {0, g, n, 0, g};
  L.fv = {L.fg.size(), g, n - 1, m, m};
  if (n >= 2) L.th = {L.fg.size() + L.fv.size(), m, n - 1, 0, g};
  L.total = L.fg.size() + L.fv.size() + L.th.size();
  return L;
}

template <class T>
std::vector<T> drop(const std::vector<T>& v, std::size_t i, std::size_t j = SIZE_MAX) {
  std::vector<T> out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (k != i && k != j) out.push_back(v[k]);
  return out;
}

Rational sgn(std::size_t k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace

Matrix adjoint_complex_matrix(const RRBAlgebra& a, std::size_t n, std::size_t budget) {
  const std::size_t g = a.g_dim(), m = a.v_dim();
  const AdjointLayout in = adjoint_layout(g, m, n), out = adjoint_layout(g, m, n + 1);
  if (in.total > budget || out.total > budget)
    throw BudgetExceeded("adjoint cochain space over budget", std::max(in.total, out.total), budget);
  Matrix D(out.total, in.total);
  if (n == 0) return D;
  const LinearRep& rho = a.rep;
  auto act = [&](const Vector& x, const Vector& v) { return rho.act(x) * v; };
  auto T = [&](const Vector& v) { return a.T * v; };
  auto e_g = [&](std::size_t i) { return unit_vector(g, i); };
  auto e_v = [&](std::size_t i) { return unit_vector(m, i); };

  for (std::size_t col = 0; col < in.total; ++col) {
    const Vector f = unit_vector(in.total, col);
    Vector image(out.total, Rational(0));

    // (delta f)_g(x_1..x_{n+1}): Chevalley-Eilenberg with adjoint action
    const WedgeBasis gb(g, n + 1);
    for (std::size_t t = 0; t < gb.size(); ++t) {
      std::vector<Vector> xs;
      for (auto i : gb.tuple(t)) xs.push_back(e_g(i));
      Vector val = zero_vector(g);
      for (std::size_t i = 0; i < xs.size(); ++i)
        val = val + sgn(i) * a.g.bracket(xs[i], in.fg.eval(f, drop(xs, i), nullptr));
      for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
          std::vector<Vector> args{a.g.bracket(xs[i], xs[j])};
          for (auto& x : drop(xs, i, j)) args.push_back(x);
          val = val + sgn(i + j) * in.fg.eval(f, args, nullptr);
        }
      for (std::size_t k = 0; k < g; ++k) image[out.fg.offset + t * g + k] = val[k];
    }

    // (delta f)_V(x_1..x_n, v)
    const WedgeBasis gb1(g, n);
    for (std::size_t t = 0; t < gb1.size(); ++t)
      for (std::size_t v = 0; v < m; ++v) {
        std::vector<Vector> xs;
        for (auto i : gb1.tuple(t)) xs.push_back(e_g(i));
        const Vector vv = e_v(v);
        Vector val = zero_vector(m);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<Vector> args{a.g.bracket(xs[i], xs[j])};
            for (auto& x : drop(xs, i, j)) args.push_back(x);
            val = val + sgn(i + j) * in.fv.eval(f, args, &vv);
          }
        val = val + sgn(n - 1) * act(in.fg.eval(f, xs, nullptr), vv);
        for (std::size_t i = 0; i < n; ++i) {
          const auto rest = drop(xs, i);
          const Vector moved = act(xs[i], vv);
          val = val + sgn(i) * (act(xs[i], in.fv.eval(f, rest, &vv)) - in.fv.eval(f, rest, &moved));
        }
        for (std::size_t k = 0; k < m; ++k) image[out.fv.offset + (t * m + v) * m + k] = val[k];
      }

    // (partial theta + h_T f)(v_1..v_n)
    const WedgeBasis vb(m, n);
    for (std::size_t t = 0; t < vb.size(); ++t) {
      std::vector<Vector> vs, tvs;
      for (auto i : vb.tuple(t)) {
        vs.push_back(e_v(i));
        tvs.push_back(T(e_v(i)));
      }
      Vector val = sgn(n) * in.fg.eval(f, tvs, nullptr);
      for (std::size_t i = 0; i < n; ++i) val = val + sgn(i) * T(in.fv.eval(f, drop(tvs, i), &vs[i]));
      if (n >= 2) {
        for (std::size_t i = 0; i < n; ++i) {
          const Vector th = in.th.eval(f, drop(vs, i), nullptr);
          val = val + sgn(i) * (a.g.bracket(tvs[i], th) + T(act(th, vs[i])));
        }
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<Vector> args{act(tvs[i], vs[j]) - act(tvs[j], vs[i])};
            for (auto& x : drop(vs, i, j)) args.push_back(x);
            val = val + sgn(i + j) * in.th.eval(f, args, nullptr);
          }
      }
      for (std::size_t k = 0; k < g; ++k) image[out.th.offset + t * g + k] = val[k];
    }

    for (std::size_t r = 0; r < out.total; ++r) D(r, col) = image[r];
  }
  return D;
}

}  // namespace rrb
