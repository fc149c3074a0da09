#include "rrb/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "rrb/wedge.hpp"

namespace rrb::json_io {

namespace {

std::string join(const std::vector<ParseIssue>& issues) {
  std::string out;
  for (const auto& i : issues) {
    if (!out.empty()) out += "; ";
    out += (i.pointer.empty() ? "/" : i.pointer) + ": " + i.message;
  }
  return out;
}

std::string child(const std::string& ptr, const std::string& key) { return ptr + "/" + key; }
std::string child(const std::string& ptr, std::size_t idx) { return ptr + "/" + std::to_string(idx); }

class Reader {
 public:
  std::vector<ParseIssue> issues;

  void fail(const std::string& ptr, std::string msg) { issues.push_back({ptr, std::move(msg)}); }
  bool ok() const { return issues.empty(); }
  void finish() const {
    if (!issues.empty()) throw ParseError(issues);
  }

  const Json* field(const Json& obj, const std::string& ptr, const std::string& key) {
    if (!obj.is_object()) {
      fail(ptr, "expected an object");
      return nullptr;
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
      fail(child(ptr, key), "missing field");
      return nullptr;
    }
    return &*it;
  }

  std::optional<std::size_t> natural(const Json& j, const std::string& ptr) {
    if (!j.is_number_unsigned()) {
      fail(ptr, "expected a non-negative integer");
      return std::nullopt;
    }
    return j.get<std::size_t>();
  }

  Rational rational(const Json& j, const std::string& ptr) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) {
      try {
        return parse_rational(j.get<std::string>());
      } catch (const std::exception& e) {
        fail(ptr, e.what());
        return Rational(0);
      }
    }
    fail(ptr, "expected a rational as a string or an integer");
    return Rational(0);
  }

  Vector vector(const Json& j, const std::string& ptr, std::size_t len) {
    Vector v(len, Rational(0));
    if (!j.is_array()) {
      fail(ptr, "expected an array");
      return v;
    }
    if (j.size() != len) {
      fail(ptr, "expected " + std::to_string(len) + " entries, got " + std::to_string(j.size()));
      return v;
    }
    for (std::size_t i = 0; i < len; ++i) v[i] = rational(j[i], child(ptr, i));
    return v;
  }

  Matrix matrix(const Json& j, const std::string& ptr, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    if (!j.is_array()) {
      fail(ptr, "expected an array of rows");
      return m;
    }
    if (j.size() != rows) {
      fail(ptr, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
      return m;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      const Vector row = vector(j[r], child(ptr, r), cols);
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
    }
    return m;
  }

  std::vector<Matrix> matrices(const Json& j, const std::string& ptr, std::size_t count, std::size_t rows,
                               std::size_t cols) {
    std::vector<Matrix> out(count, Matrix(rows, cols));
    if (!j.is_array()) {
      fail(ptr, "expected an array of matrices");
      return out;
    }
    if (j.size() != count) {
      fail(ptr, "expected " + std::to_string(count) + " matrices, got " + std::to_string(j.size()));
      return out;
    }
    for (std::size_t i = 0; i < count; ++i) out[i] = matrix(j[i], child(ptr, i), rows, cols);
    return out;
  }

  template <class F>
  auto sub(const Json& obj, const std::string& ptr, const std::string& key, F&& read)
      -> std::optional<decltype(read(obj, ptr))> {
    const Json* f = field(obj, ptr, key);
    if (!f) return std::nullopt;
    const std::size_t before = issues.size();
    auto value = read(*f, child(ptr, key));
    if (issues.size() != before) return std::nullopt;
    return value;
  }

  std::optional<LieAlgebra> lie(const Json& j, const std::string& ptr) {
    const Json* dim_j = field(j, ptr, "dim");
    const Json* br = field(j, ptr, "bracket");
    if (!dim_j || !br) return std::nullopt;
    const auto dim = natural(*dim_j, child(ptr, "dim"));
    if (!dim) return std::nullopt;
    const std::size_t d = *dim;
    const std::string bptr = child(ptr, "bracket");
    if (!br->is_array()) {
      fail(bptr, "expected an array of [i, j, coefficients] entries");
      return std::nullopt;
    }
    const std::size_t before = issues.size();
    std::vector<Rational> c(d * d * d, Rational(0));
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t e = 0; e < br->size(); ++e) {
      const Json& entry = (*br)[e];
      const std::string eptr = child(bptr, e);
      if (!entry.is_array() || entry.size() != 3) {
        fail(eptr, "expected [i, j, coefficients]");
        continue;
      }
      const auto i = natural(entry[0], child(eptr, 0));
      const auto k = natural(entry[1], child(eptr, 1));
      if (!i || !k) continue;
      if (*i >= d || *k >= d) {
        fail(eptr, "index out of range for dimension " + std::to_string(d));
        continue;
      }
      if (*i >= *k) {
        fail(eptr, *i == *k ? "bracket of a basis element with itself is zero; entry not allowed"
                            : "entries must list i < j");
        continue;
      }
      if (!seen.insert({*i, *k}).second) {
        fail(eptr, "duplicate entry for this pair");
        continue;
      }
      const Vector v = vector(entry[2], child(eptr, 2), d);
      for (std::size_t t = 0; t < d; ++t) {
        c[(*i * d + *k) * d + t] = v[t];
        c[(*k * d + *i) * d + t] = -v[t];
      }
    }
    if (issues.size() != before) return std::nullopt;
    return LieAlgebra::unchecked(d, std::move(c));
  }

  std::optional<LinearRep> rep(const Json& j, const std::string& ptr, std::size_t alg_dim) {
    const Json* sd = field(j, ptr, "space_dim");
    const Json* act = field(j, ptr, "action");
    if (!sd || !act) return std::nullopt;
    const auto m = natural(*sd, child(ptr, "space_dim"));
    if (!m) return std::nullopt;
    const std::size_t before = issues.size();
    LinearRep r{*m, matrices(*act, child(ptr, "action"), alg_dim, *m, *m)};
    if (issues.size() != before) return std::nullopt;
    return r;
  }

  std::optional<RRBAlgebra> rrb(const Json& j, const std::string& ptr) {
    auto g = sub(j, ptr, "lie", [&](const Json& x, const std::string& p) { return lie(x, p); });
    if (!g || !*g) return std::nullopt;
    auto r = sub(j, ptr, "rep", [&](const Json& x, const std::string& p) { return rep(x, p, (*g)->dim()); });
    if (!r || !*r) return std::nullopt;
    const Json* t = field(j, ptr, "T");
    if (!t) return std::nullopt;
    const std::size_t before = issues.size();
    Matrix T = matrix(*t, child(ptr, "T"), (*g)->dim(), (*r)->space_dim);
    if (issues.size() != before) return std::nullopt;
    return RRBAlgebra{**g, **r, std::move(T)};
  }

  std::optional<RBAlgebra> rb(const Json& j, const std::string& ptr) {
    auto g = sub(j, ptr, "lie", [&](const Json& x, const std::string& p) { return lie(x, p); });
    if (!g || !*g) return std::nullopt;
    const Json* t = field(j, ptr, "T");
    if (!t) return std::nullopt;
    const std::size_t before = issues.size();
    Matrix T = matrix(*t, child(ptr, "T"), (*g)->dim(), (*g)->dim());
    if (issues.size() != before) return std::nullopt;
    return RBAlgebra{**g, std::move(T)};
  }

  std::optional<RRBRepresentation> rrb_rep(const Json& j, const std::string& ptr, const RRBAlgebra& a) {
    auto rh = sub(j, ptr, "rho_h", [&](const Json& x, const std::string& p) { return rep(x, p, a.g_dim()); });
    auto rw = sub(j, ptr, "rho_w", [&](const Json& x, const std::string& p) { return rep(x, p, a.g_dim()); });
    if (!rh || !*rh || !rw || !*rw) return std::nullopt;
    const Json* ct = field(j, ptr, "curlyT");
    const Json* mu = field(j, ptr, "mu");
    if (!ct || !mu) return std::nullopt;
    const std::size_t before = issues.size();
    RRBRepresentation r;
    r.h_dim = (*rh)->space_dim;
    r.w_dim = (*rw)->space_dim;
    r.rho_h = **rh;
    r.rho_w = **rw;
    r.curlyT = matrix(*ct, child(ptr, "curlyT"), r.h_dim, r.w_dim);
    r.mu = matrices(*mu, child(ptr, "mu"), a.v_dim(), r.w_dim, r.h_dim);
    if (issues.size() != before) return std::nullopt;
    return r;
  }

  std::optional<RBRepresentation> rb_rep(const Json& j, const std::string& ptr, const RBAlgebra& a) {
    auto rw = sub(j, ptr, "rho_w", [&](const Json& x, const std::string& p) { return rep(x, p, a.dim()); });
    if (!rw || !*rw) return std::nullopt;
    const Json* ct = field(j, ptr, "curlyT");
    if (!ct) return std::nullopt;
    const std::size_t before = issues.size();
    RBRepresentation r;
    r.w_dim = (*rw)->space_dim;
    r.rho_w = **rw;
    r.curlyT = matrix(*ct, child(ptr, "curlyT"), r.w_dim, r.w_dim);
    if (issues.size() != before) return std::nullopt;
    return r;
  }

  // Reads "coeffs" as an object or one of the allowed package names.
  template <class Rep, class F>
  void coeffs(const Json& j, std::optional<Rep>& out, std::string& kind, const std::vector<std::string>& names,
              F&& read_explicit) {
    if (!j.is_object()) {
      fail("", "expected an object");
      return;
    }
    auto it = j.find("coeffs");
    if (it == j.end()) return;
    if (it->is_string()) {
      const std::string name = it->get<std::string>();
      if (std::find(names.begin(), names.end(), name) == names.end())
        fail("/coeffs", "unknown coefficient package '" + name + "'");
      kind = name;
      return;
    }
    kind = "explicit";
    out = read_explicit(*it, "/coeffs");
  }
};

template <class T, class F>
T run(F&& body) {
  Reader r;
  std::optional<T> value = body(r);
  if (!value && r.ok()) r.fail("", "unreadable document");
  r.finish();
  return std::move(*value);
}

Json pairs_json(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (std::size_t i : v) out.push_back(i);
  return out;
}

void render(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(std::size_t(indent) * 2, ' ');
  auto is_flat = [](const Json& x) {
    if (!x.is_array()) return !x.is_object();
    for (const auto& e : x)
      if (e.is_object() || (e.is_array() && std::any_of(e.begin(), e.end(), [](const Json& y) {
                              return y.is_object() || y.is_array();
                            })))
        return false;
    return true;
  };
  auto scalar = [](const Json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (is_flat(it.value())) {
        os << pad << it.key() << ": " << scalar(it.value()) << "\n";
      } else {
        os << pad << it.key() << ":\n";
        render(os, it.value(), indent + 1);
      }
    }
  } else if (j.is_array() && !is_flat(j)) {
    for (const auto& e : j) {
      os << pad << "-\n";
      render(os, e, indent + 1);
    }
  } else {
    os << pad << scalar(j) << "\n";
  }
}

}  // namespace

ParseError::ParseError(std::vector<ParseIssue> found) : std::runtime_error(join(found)), issues(std::move(found)) {}

Json load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError({{"", "cannot open " + path.string()}});
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError({{"", std::string("invalid JSON: ") + e.what()}});
  }
}

LieAlgebra read_lie(const Json& j) {
  return run<LieAlgebra>([&](Reader& r) { return r.lie(j, ""); });
}

LinearRep read_rep(const Json& j, std::size_t algebra_dim) {
  return run<LinearRep>([&](Reader& r) { return r.rep(j, "", algebra_dim); });
}

Matrix read_matrix(const Json& j, std::size_t rows, std::size_t cols) {
  return run<Matrix>([&](Reader& r) { return std::optional<Matrix>(r.matrix(j, "", rows, cols)); });
}

RRBAlgebra read_rrb(const Json& j) {
  return run<RRBAlgebra>([&](Reader& r) { return r.rrb(j, ""); });
}

RBAlgebra read_rb(const Json& j) {
  return run<RBAlgebra>([&](Reader& r) { return r.rb(j, ""); });
}

RRBProblem read_rrb_problem(const Json& j) {
  return run<RRBProblem>([&](Reader& r) -> std::optional<RRBProblem> {
    auto a = r.sub(j, "", "algebra", [&](const Json& x, const std::string& p) { return r.rrb(x, p); });
    if (!a || !*a) return std::nullopt;
    RRBProblem out{**a, std::nullopt, "adjoint"};
    r.coeffs(j, out.coeffs, out.coeffs_kind, {"adjoint", "coadjoint"},
             [&](const Json& x, const std::string& p) { return r.rrb_rep(x, p, out.algebra); });
    return out;
  });
}

RBProblem read_rb_problem(const Json& j) {
  return run<RBProblem>([&](Reader& r) -> std::optional<RBProblem> {
    auto a = r.sub(j, "", "algebra", [&](const Json& x, const std::string& p) { return r.rb(x, p); });
    if (!a || !*a) return std::nullopt;
    RBProblem out{**a, std::nullopt, "adjoint"};
    r.coeffs(j, out.coeffs, out.coeffs_kind, {"adjoint"},
             [&](const Json& x, const std::string& p) { return r.rb_rep(x, p, out.algebra); });
    return out;
  });
}

TwoCocycle read_two_cocycle(const Json& j, const CochainScheme& s) {
  return run<TwoCocycle>([&](Reader& r) -> std::optional<TwoCocycle> {
    const Json* o = r.field(j, "", "omega");
    const Json* v = r.field(j, "", "varpi");
    const Json* c = r.field(j, "", "chi");
    if (!o || !v || !c) return std::nullopt;
    return TwoCocycle{r.vector(*o, "/omega", s.fh_size()), r.vector(*v, "/varpi", s.fw_size()),
                      r.vector(*c, "/chi", s.theta_size())};
  });
}

RBTwoCocycle read_rb_two_cocycle(const Json& j, const CochainScheme& s) {
  return run<RBTwoCocycle>([&](Reader& r) -> std::optional<RBTwoCocycle> {
    const Json* o = r.field(j, "", "omega");
    const Json* c = r.field(j, "", "chi");
    if (!o || !c) return std::nullopt;
    return RBTwoCocycle{r.vector(*o, "/omega", s.fh_size()), r.vector(*c, "/chi", s.theta_size())};
  });
}

Vector read_cochain(const Json& j, const CochainScheme& s) {
  return run<Vector>([&](Reader& r) -> std::optional<Vector> {
    if (j.is_object() && j.contains("degree")) {
      const auto deg = r.natural(j["degree"], "/degree");
      if (deg && *deg != s.degree) r.fail("/degree", "expected degree " + std::to_string(s.degree));
    }
    const Json* c = r.field(j, "", "coords");
    if (!c) return std::nullopt;
    return r.vector(*c, "/coords", s.total());
  });
}

Section read_section(const Json& j, std::size_t g, std::size_t h, std::size_t v, std::size_t w) {
  return run<Section>([&](Reader& r) -> std::optional<Section> {
    const Json* fs = r.field(j, "", "frak_s");
    const Json* s = r.field(j, "", "s");
    if (!fs || !s) return std::nullopt;
    return Section{r.matrix(*fs, "/frak_s", g + h, g), r.matrix(*s, "/s", v + w, v)};
  });
}

Matrix read_section_rb(const Json& j, std::size_t g, std::size_t h) {
  return run<Matrix>([&](Reader& r) -> std::optional<Matrix> {
    const Json* fs = r.field(j, "", "frak_s");
    if (!fs) return std::nullopt;
    return r.matrix(*fs, "/frak_s", g + h, g);
  });
}

AbelianExtension read_extension(const Json& j) {
  return run<AbelianExtension>([&](Reader& r) -> std::optional<AbelianExtension> {
    auto base = r.sub(j, "", "base", [&](const Json& x, const std::string& p) { return r.rrb(x, p); });
    auto total = r.sub(j, "", "total", [&](const Json& x, const std::string& p) { return r.rrb(x, p); });
    auto h = r.sub(j, "", "h_dim", [&](const Json& x, const std::string& p) { return r.natural(x, p); });
    auto w = r.sub(j, "", "w_dim", [&](const Json& x, const std::string& p) { return r.natural(x, p); });
    if (!base || !*base || !total || !*total || !h || !*h || !w || !*w) return std::nullopt;
    AbelianExtension e{**total, **base, **h, **w};
    if (e.total.g_dim() != e.base.g_dim() + e.h_dim) r.fail("/total/lie/dim", "must equal base dimension + h_dim");
    if (e.total.v_dim() != e.base.v_dim() + e.w_dim)
      r.fail("/total/rep/space_dim", "must equal base space dimension + w_dim");
    return e;
  });
}

RBExtension read_rb_extension(const Json& j) {
  return run<RBExtension>([&](Reader& r) -> std::optional<RBExtension> {
    auto base = r.sub(j, "", "base", [&](const Json& x, const std::string& p) { return r.rb(x, p); });
    auto total = r.sub(j, "", "total", [&](const Json& x, const std::string& p) { return r.rb(x, p); });
    auto h = r.sub(j, "", "h_dim", [&](const Json& x, const std::string& p) { return r.natural(x, p); });
    if (!base || !*base || !total || !*total || !h || !*h) return std::nullopt;
    RBExtension e{**total, **base, **h};
    if (e.total.dim() != e.base.dim() + e.h_dim) r.fail("/total/lie/dim", "must equal base dimension + h_dim");
    return e;
  });
}

SkeletalRRB2 read_skeletal_rrb2(const Json& j) {
  return run<SkeletalRRB2>([&](Reader& r) -> std::optional<SkeletalRRB2> {
    auto g0 = r.sub(j, "", "g0", [&](const Json& x, const std::string& p) { return r.lie(x, p); });
    if (!g0 || !*g0) return std::nullopt;
    const std::size_t d = (*g0)->dim();
    auto rep_of = [&](const char* key) {
      return r.sub(j, "", key, [&](const Json& x, const std::string& p) { return r.rep(x, p, d); });
    };
    auto g1 = rep_of("g1_action");
    auto v0 = rep_of("rho0_v0");
    auto v1 = rep_of("rho0_v1");
    if (!g1 || !*g1 || !v0 || !*v0 || !v1 || !*v1) return std::nullopt;
    SkeletalRRB2 s;
    s.g0 = **g0;
    s.g1_action = **g1;
    s.rho0_v0 = **v0;
    s.rho0_v1 = **v1;
    const std::size_t n1 = s.g1_dim(), m0 = s.v0_dim(), m1 = s.v1_dim();
    const Json* l3 = r.field(j, "", "l3");
    const Json* rho1 = r.field(j, "", "rho1");
    const Json* rho2 = r.field(j, "", "rho2");
    const Json* T0 = r.field(j, "", "T0");
    const Json* T1 = r.field(j, "", "T1");
    const Json* T2 = r.field(j, "", "T2");
    if (!l3 || !rho1 || !rho2 || !T0 || !T1 || !T2) return std::nullopt;
    s.l3 = r.matrix(*l3, "/l3", n1, binomial(d, 3));
    s.rho1 = r.matrices(*rho1, "/rho1", n1, m1, m0);
    s.rho2 = r.matrices(*rho2, "/rho2", binomial(d, 2), m1, m0);
    s.T0 = r.matrix(*T0, "/T0", d, m0);
    s.T1 = r.matrix(*T1, "/T1", n1, m1);
    s.T2 = r.matrix(*T2, "/T2", n1, binomial(m0, 2));
    return s;
  });
}

SkeletalRB2 read_skeletal_rb2(const Json& j) {
  return run<SkeletalRB2>([&](Reader& r) -> std::optional<SkeletalRB2> {
    auto g0 = r.sub(j, "", "g0", [&](const Json& x, const std::string& p) { return r.lie(x, p); });
    if (!g0 || !*g0) return std::nullopt;
    const std::size_t d = (*g0)->dim();
    auto g1 = r.sub(j, "", "g1_action", [&](const Json& x, const std::string& p) { return r.rep(x, p, d); });
    if (!g1 || !*g1) return std::nullopt;
    SkeletalRB2 s;
    s.g0 = **g0;
    s.g1_action = **g1;
    const std::size_t n1 = s.g1_dim();
    const Json* l3 = r.field(j, "", "l3");
    const Json* T0 = r.field(j, "", "T0");
    const Json* T1 = r.field(j, "", "T1");
    const Json* T2 = r.field(j, "", "T2");
    if (!l3 || !T0 || !T1 || !T2) return std::nullopt;
    s.l3 = r.matrix(*l3, "/l3", n1, binomial(d, 3));
    s.T0 = r.matrix(*T0, "/T0", d, d);
    s.T1 = r.matrix(*T1, "/T1", n1, n1);
    s.T2 = r.matrix(*T2, "/T2", n1, binomial(d, 2));
    return s;
  });
}

// ---------------------------------------------------------------------------

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

static Json matrices_json(const std::vector<Matrix>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(to_json(m));
  return out;
}

Json to_json(const LieAlgebra& g) {
  Json br = Json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      const Vector b = g.bracket_basis(i, j);
      if (!is_zero(b)) br.push_back(Json::array({i, j, to_json(b)}));
    }
  return Json{{"dim", g.dim()}, {"bracket", br}};
}

Json to_json(const LinearRep& r) { return Json{{"space_dim", r.space_dim}, {"action", matrices_json(r.action)}}; }

Json to_json(const RRBAlgebra& a) { return Json{{"lie", to_json(a.g)}, {"rep", to_json(a.rep)}, {"T", to_json(a.T)}}; }

Json to_json(const RBAlgebra& a) { return Json{{"lie", to_json(a.g)}, {"T", to_json(a.T)}}; }

Json to_json(const RRBRepresentation& r) {
  return Json{{"curlyT", to_json(r.curlyT)},
              {"rho_h", to_json(r.rho_h)},
              {"rho_w", to_json(r.rho_w)},
              {"mu", matrices_json(r.mu)}};
}

Json to_json(const RBRepresentation& r) { return Json{{"curlyT", to_json(r.curlyT)}, {"rho_w", to_json(r.rho_w)}}; }

Json to_json(const ValidationReport& r) {
  Json vs = Json::array();
  for (const auto& v : r.violations)
    vs.push_back(Json{{"axiom", v.axiom}, {"witness", pairs_json(v.witness)}, {"residual", to_json(v.residual)}});
  return Json{{"valid", r.valid()}, {"violations", vs}};
}

Json to_json(const CohomologyReport& r) {
  Json ds = Json::array();
  for (const auto& d : r.degrees)
    ds.push_back(Json{{"n", d.n},
                      {"dim_cochains", d.dim_cochains},
                      {"dim_cocycles", d.dim_cocycles},
                      {"dim_coboundaries", d.dim_coboundaries},
                      {"dim_H", d.dim_H},
                      {"dim_H_sub", d.dim_H_sub},
                      {"dim_H_quot", d.dim_H_quot}});
  return Json{{"degrees", ds}};
}

Json to_json(const LesReport& r) {
  Json ns = Json::array();
  for (const auto& n : r.nodes)
    ns.push_back(Json{{"space", n.space},
                      {"degree", n.degree},
                      {"dim", n.dim},
                      {"dim_image", n.dim_image},
                      {"dim_kernel", n.dim_kernel},
                      {"composite_zero", n.composite_zero},
                      {"exact", n.exact()}});
  return Json{{"exact", r.exact()}, {"nodes", ns}};
}

Json to_json(const CochainScheme& s) {
  return Json{{"variant", s.variant == Variant::RRB ? "rrb" : "rb"},
              {"degree", s.degree},
              {"fh", s.fh_size()},
              {"fw", s.fw_size()},
              {"theta", s.theta_size()}};
}

Json to_json(const TwoCocycle& z) {
  return Json{{"omega", to_json(z.omega)}, {"varpi", to_json(z.varpi)}, {"chi", to_json(z.chi)}};
}

Json to_json(const RBTwoCocycle& z) { return Json{{"omega", to_json(z.omega)}, {"chi", to_json(z.chi)}}; }

Json to_json(const AbelianExtension& e) {
  return Json{{"base", to_json(e.base)}, {"total", to_json(e.total)}, {"h_dim", e.h_dim}, {"w_dim", e.w_dim}};
}

Json to_json(const RBExtension& e) {
  return Json{{"base", to_json(e.base)}, {"total", to_json(e.total)}, {"h_dim", e.h_dim}};
}

Json to_json(const ExtensionIso& iso) { return Json{{"kappa", to_json(iso.kappa)}, {"lambda", to_json(iso.lambda)}}; }

Json to_json(const SkeletalRRB2& s) {
  return Json{{"g0", to_json(s.g0)},         {"g1_action", to_json(s.g1_action)}, {"l3", to_json(s.l3)},
              {"rho0_v0", to_json(s.rho0_v0)}, {"rho0_v1", to_json(s.rho0_v1)},   {"rho1", matrices_json(s.rho1)},
              {"rho2", matrices_json(s.rho2)}, {"T0", to_json(s.T0)},             {"T1", to_json(s.T1)},
              {"T2", to_json(s.T2)}};
}

Json to_json(const SkeletalRB2& s) {
  return Json{{"g0", to_json(s.g0)}, {"g1_action", to_json(s.g1_action)}, {"l3", to_json(s.l3)},
              {"T0", to_json(s.T0)}, {"T1", to_json(s.T1)},               {"T2", to_json(s.T2)}};
}

std::string render_text(const Json& j) {
  std::ostringstream os;
  render(os, j, 0);
  return os.str();
}

}  // namespace rrb::json_io
