#include "support/fixtures.hpp"

#include <functional>
#include <vector>

namespace fixtures {

LieAlgebra aff1() { return LieAlgebra::from_brackets(2, {{0, 1, {0, 1}}}); }

RRBAlgebra f0() { return RRBAlgebra::create(LieAlgebra::abelian(2), LinearRep::zero(2, 1), Matrix(2, 1)); }

RRBRepresentation f0_coeffs() { return RRBRepresentation::zero(f0(), 1, 1); }

RRBAlgebra f1() { return RRBAlgebra::create(aff1(), LinearRep{1, {Matrix{{1}}, Matrix{{0}}}}, Matrix{{0}, {1}}); }

RBAlgebra f2() { return RBAlgebra::create(aff1(), Matrix{{0, 0}, {1, 0}}); }

RRBAlgebra bad_rrb_identity() { return {aff1(), adjoint_rep(aff1()), Matrix::identity(2)}; }

RBAlgebra bad_rb_identity() { return {aff1(), Matrix::identity(2)}; }

LinearRep bad_character() { return {1, {Matrix{{1}}, Matrix{{1}}}}; }

RRBRepresentation f1_perturbed_mu() {
  RRBRepresentation r = adjoint_rrb_rep(f1());
  r.mu[0](0, 1) += 1;
  return r;
}

// ---------------------------------------------------------------------------
// Random instances

namespace {

int small_int(std::mt19937_64& gen, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }

bool coin(std::mt19937_64& gen, double p = 0.5) { return std::bernoulli_distribution(p)(gen); }

Matrix sparse_random(std::mt19937_64& gen, std::size_t r, std::size_t c, double density = 0.5) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (coin(gen, density)) m(i, j) = small_int(gen, -2, 2);
  return m;
}

LieAlgebra random_lie(std::mt19937_64& gen, std::size_t d) {
  using E = LieAlgebra::BracketEntry;
  std::vector<std::vector<E>> pool{{}};
  if (d == 2) pool.push_back({{0, 1, {0, 1}}});
  if (d == 3) {
    pool.push_back({{0, 1, {0, 0, 1}}});                                     // Heisenberg
    pool.push_back({{0, 1, {0, 2, 0}}, {0, 2, {0, 0, -2}}, {1, 2, {1, 0, 0}}});  // sl(2)
    pool.push_back({{0, 1, {0, 1, 0}}});                                     // aff(1) + Q
    const int lambda = std::vector<int>{1, -1, 2}[gen() % 3];
    pool.push_back({{0, 1, {0, 1, 0}}, {0, 2, {0, 0, Rational(lambda)}}});
    pool.push_back({{0, 1, {0, 1, 0}}, {0, 2, {0, 1, 1}}});
  }
  return LieAlgebra::from_brackets(d, pool[gen() % pool.size()]);
}

// Characters: linear forms vanishing on [g, g].
std::vector<Vector> characters(const LieAlgebra& g) {
  std::vector<Vector> brackets;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) brackets.push_back(g.bracket_basis(i, j));
  return kernel(Matrix::from_rows(g.dim(), brackets)).basis();
}

LinearRep random_rep(std::mt19937_64& gen, const LieAlgebra& g, std::size_t k) {
  const std::size_t d = g.dim();
  std::vector<std::function<LinearRep()>> options;
  options.push_back([&] { return LinearRep::zero(d, k); });
  if (k == d) {
    options.push_back([&] { return adjoint_rep(g); });
    options.push_back([&] { return dual_rep(adjoint_rep(g)); });
  }
  if (k == d + 1) {
    options.push_back([&] {
      LinearRep chi = LinearRep::zero(d, 1);
      auto ch = characters(g);
      for (std::size_t i = 0; i < d && !ch.empty(); ++i) chi.action[i](0, 0) = ch[0][i];
      return direct_sum(adjoint_rep(g), chi);
    });
  }
  // direct sum of characters, each twisted by a random scalar multiple
  options.push_back([&] {
    auto ch = characters(g);
    LinearRep r = LinearRep::zero(d, k);
    for (std::size_t s = 0; s < k; ++s) {
      Vector c = zero_vector(d);
      for (const auto& b : ch) c = c + Rational(small_int(gen, -1, 2)) * b;
      for (std::size_t i = 0; i < d; ++i) r.action[i](s, s) = c[i];
    }
    return r;
  });
  if (g.is_abelian()) {
    // commuting family: polynomials in one random matrix
    options.push_back([&] {
      Matrix A = sparse_random(gen, k, k);
      LinearRep r = LinearRep::zero(d, k);
      for (std::size_t i = 0; i < d; ++i)
        r.action[i] = Rational(small_int(gen, -1, 1)) * A + Rational(small_int(gen, -1, 1)) * (A * A);
      return r;
    });
  }
  return options[gen() % options.size()]();
}

Matrix random_operator(std::mt19937_64& gen, std::size_t rows, std::size_t cols,
                       const std::function<bool(const Matrix&)>& valid) {
  for (int attempt = 0; attempt < 80; ++attempt) {
    Matrix T = sparse_random(gen, rows, cols, attempt < 40 ? 0.5 : 0.25);
    if (!T.is_zero() && valid(T)) return T;
  }
  return Matrix(rows, cols);
}

Vector flat(const Matrix& m) {
  Vector v;
  for (std::size_t r = 0; r < m.rows(); ++r) v.insert(v.end(), m.row(r).begin(), m.row(r).end());
  return v;
}

// All residuals of the coefficient axioms that involve mu, as an affine
// function of the mu coordinates.
Vector mu_residual(const RRBAlgebra& a, const RRBRepresentation& r) {
  Vector out;
  for (std::size_t i = 0; i < a.g_dim(); ++i)
    for (std::size_t k = 0; k < a.v_dim(); ++k) {
      Matrix res = r.mu_of(a.rep.action[i].column(k)) - r.rho_w.action[i] * r.mu[k] + r.mu[k] * r.rho_h.action[i];
      Vector f = flat(res);
      out.insert(out.end(), f.begin(), f.end());
    }
  for (std::size_t k = 0; k < a.v_dim(); ++k) {
    Vector t = a.T.column(k);
    Matrix res = r.rho_h.act(t) * r.curlyT - r.curlyT * r.rho_w.act(t) - r.curlyT * r.mu[k] * r.curlyT;
    Vector f = flat(res);
    out.insert(out.end(), f.begin(), f.end());
  }
  return out;
}

void set_mu(RRBRepresentation& r, const Vector& x) {
  std::size_t p = 0;
  for (auto& m : r.mu)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = x[p++];
}

std::optional<RRBRepresentation> solve_for_mu(std::mt19937_64& gen, const RRBAlgebra& a, RRBRepresentation r) {
  const std::size_t unknowns = a.v_dim() * r.w_dim * r.h_dim;
  set_mu(r, zero_vector(unknowns));
  const Vector c = mu_residual(a, r);
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < unknowns; ++i) {
    set_mu(r, unit_vector(unknowns, i));
    cols.push_back(mu_residual(a, r) - c);
  }
  Matrix L = Matrix::from_columns(c.size(), cols);
  auto x = solve(L, Rational(-1) * c);
  if (!x) return std::nullopt;
  Vector mu = *x;
  for (const auto& k : kernel(L).basis()) mu = mu + Rational(small_int(gen, -1, 1)) * k;
  set_mu(r, mu);
  return r;
}

}  // namespace

RRBInstance random_rrb(std::mt19937_64& gen, std::size_t max_dim) {
  static int counter = 0;
  while (true) {
    const std::size_t d = 1 + gen() % max_dim, m = 1 + gen() % max_dim;
    LieAlgebra g = random_lie(gen, d);
    LinearRep rho = random_rep(gen, g, m);
    Matrix T = random_operator(gen, d, m, [&](const Matrix& t) { return check_rrb({g, rho, t}).valid(); });
    RRBAlgebra a{g, rho, T};
    if (!check_rrb(a).valid()) continue;

    RRBRepresentation r;
    const int kind = int(gen() % 4);
    if (kind == 0) {
      r = adjoint_rrb_rep(a);
    } else if (kind == 1) {
      r = dual_rrb_rep(adjoint_rrb_rep(a));
    } else {
      const std::size_t h = 1 + gen() % max_dim, w = 1 + gen() % max_dim;
      r = RRBRepresentation::zero(a, h, w);
      r.rho_h = random_rep(gen, g, h);
      r.rho_w = random_rep(gen, g, w);
      std::optional<RRBRepresentation> solved;
      for (int attempt = 0; attempt < 20 && !solved; ++attempt) {
        r.curlyT = sparse_random(gen, h, w);
        solved = solve_for_mu(gen, a, r);
      }
      if (!solved) {
        r.curlyT = Matrix(h, w);
        solved = solve_for_mu(gen, a, r);
      }
      if (!solved) continue;
      r = *solved;
    }
    if (!check_rrb_representation(a, r).valid()) continue;
    return {"random-rrb-" + std::to_string(counter++), std::move(a), std::move(r)};
  }
}

RBInstance random_rb(std::mt19937_64& gen, std::size_t max_dim) {
  static int counter = 0;
  while (true) {
    const std::size_t d = 1 + gen() % max_dim;
    LieAlgebra g = random_lie(gen, d);
    Matrix T = random_operator(gen, d, d, [&](const Matrix& t) { return check_rb({g, t}).valid(); });
    RBAlgebra a{g, T};
    RBRepresentation r;
    if (gen() % 3 == 0) {
      r = adjoint_rb_rep(a);
    } else {
      const std::size_t w = 1 + gen() % max_dim;
      r.w_dim = w;
      r.rho_w = random_rep(gen, g, w);
      r.curlyT = random_operator(gen, w, w, [&](const Matrix& t) {
        return check_rb_representation(a, {w, t, r.rho_w}).valid();
      });
    }
    if (!check_rb(a).valid() || !check_rb_representation(a, r).valid()) continue;
    return {"random-rb-" + std::to_string(counter++), std::move(a), std::move(r)};
  }
}

}  // namespace fixtures
