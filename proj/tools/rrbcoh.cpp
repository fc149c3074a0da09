// rrbcoh: batch front end for the rrb library.
//
// Exit codes: 0 success, 1 failed axiom or cocycle check (report on stdout),
// 2 parse or shape error, 3 cochain budget exceeded.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "rrb/cohomology.hpp"
#include "rrb/extensions.hpp"
#include "rrb/json_io.hpp"
#include "rrb/lie2.hpp"
#include "rrb/rota_baxter.hpp"

using namespace rrb;
using json_io::Json;

namespace {

struct Options {
  std::string command;
  std::string input;
  std::string variant = "rrb";
  std::size_t max_degree = 3;
  std::size_t budget = kDefaultBudget;
  std::string format = "json";
  std::string section;
  std::string cocycle;
};

struct Failure {
  int code;
  Json doc;
};

[[noreturn]] void fail_checks(const std::string& message, const ValidationReport& report) {
  Json doc = json_io::to_json(report);
  doc["error"] = "axiom";
  doc["message"] = message;
  throw Failure{1, doc};
}

[[noreturn]] void fail_usage(const std::string& message) {
  throw Failure{2, Json{{"error", "usage"}, {"message", message}}};
}

void require_valid(const ValidationReport& report, const std::string& message) {
  if (!report.valid()) fail_checks(message, report);
}

const std::string& require_file(const std::string& path, const char* flag) {
  if (path.empty()) fail_usage(std::string(flag) + " FILE is required for this command");
  return path;
}

// Resolved RRB input: validated algebra and coefficients.
struct RRBInput {
  RRBAlgebra algebra;
  RRBRepresentation coeffs;
};

struct RBInput {
  RBAlgebra algebra;
  RBRepresentation coeffs;
};

ValidationReport check_rrb_problem(const json_io::RRBProblem& p) {
  ValidationReport report = check_rrb(p.algebra);
  if (report.valid() && p.coeffs) report.merge(check_rrb_representation(p.algebra, *p.coeffs), "coeffs_");
  return report;
}

ValidationReport check_rb_problem(const json_io::RBProblem& p) {
  ValidationReport report = check_rb(p.algebra);
  if (report.valid() && p.coeffs) report.merge(check_rb_representation(p.algebra, *p.coeffs), "coeffs_");
  return report;
}

RRBInput load_rrb(const Options& o) {
  const auto p = json_io::read_rrb_problem(json_io::load_file(o.input));
  require_valid(check_rrb_problem(p), "input is not a valid relative Rota-Baxter Lie algebra with coefficients");
  if (p.coeffs) return {p.algebra, *p.coeffs};
  const auto ad = adjoint_rrb_rep(p.algebra);
  return {p.algebra, p.coeffs_kind == "coadjoint" ? dual_rrb_rep(ad) : ad};
}

RBInput load_rb(const Options& o) {
  const auto p = json_io::read_rb_problem(json_io::load_file(o.input));
  require_valid(check_rb_problem(p), "input is not a valid Rota-Baxter Lie algebra with coefficients");
  return {p.algebra, p.coeffs ? *p.coeffs : adjoint_rb_rep(p.algebra)};
}

bool rb(const Options& o) { return o.variant == "rb"; }

Json cmd_check(const Options& o) {
  const Json in = json_io::load_file(o.input);
  const ValidationReport report =
      rb(o) ? check_rb_problem(json_io::read_rb_problem(in)) : check_rrb_problem(json_io::read_rrb_problem(in));
  if (!report.valid()) fail_checks("axiom check failed", report);
  return json_io::to_json(report);
}

Json cmd_cohomology(const Options& o) {
  if (rb(o)) {
    const auto in = load_rb(o);
    return json_io::to_json(rb_cohomology_dims(in.algebra, in.coeffs, o.max_degree, o.budget));
  }
  const auto in = load_rrb(o);
  return json_io::to_json(cohomology_dims(in.algebra, in.coeffs, o.max_degree, o.budget));
}

Json basis_json(const Subspace& s) {
  Json out = Json::array();
  for (const auto& v : s.basis()) out.push_back(json_io::to_json(v));
  return out;
}

Json cmd_derivations(const Options& o) {
  if (rb(o)) {
    const auto a = load_rb(o).algebra;
    const Subspace s = rb_derivation_space(a);
    const auto h = rb_cohomology_dims(a, adjoint_rb_rep(a), 1, o.budget);
    return Json{{"dim", s.dim()}, {"basis", basis_json(s)}, {"dim_H1_adjoint", h.degrees.at(0).dim_H}};
  }
  const auto a = load_rrb(o).algebra;
  const Subspace s = derivation_space(a);
  const auto h = cohomology_dims(a, adjoint_rrb_rep(a), 1, o.budget);
  return Json{{"dim", s.dim()}, {"basis", basis_json(s)}, {"dim_H1_adjoint", h.degrees.at(0).dim_H}};
}

Json cmd_extension_build(const Options& o) {
  const Json zj = json_io::load_file(require_file(o.cocycle, "--cocycle"));
  if (rb(o)) {
    const auto in = load_rb(o);
    const auto z = json_io::read_rb_two_cocycle(zj, CochainScheme::rb(in.algebra, in.coeffs, 2));
    return json_io::to_json(extension_from_cocycle_rb(in.algebra, in.coeffs, z));
  }
  const auto in = load_rrb(o);
  const auto z = json_io::read_two_cocycle(zj, CochainScheme::rrb(in.algebra, in.coeffs, 2));
  return json_io::to_json(extension_from_cocycle(in.algebra, in.coeffs, z));
}

Json cmd_extension_extract(const Options& o) {
  const Json in = json_io::load_file(o.input);
  if (rb(o)) {
    const auto e = json_io::read_rb_extension(in);
    require_valid(check_extension_rb(e), "input is not a valid abelian extension");
    const Matrix sec = o.section.empty() ? canonical_section_rb(e)
                                         : json_io::read_section_rb(json_io::load_file(o.section), e.base.dim(),
                                                                    e.h_dim);
    return Json{{"coeffs", json_io::to_json(induced_coeff_rep_from_extension_rb(e, sec))},
                {"cocycle", json_io::to_json(cocycle_from_extension_rb(e, sec))}};
  }
  const auto e = json_io::read_extension(in);
  require_valid(check_extension(e), "input is not a valid abelian extension");
  const Section sec = o.section.empty() ? canonical_section(e)
                                        : json_io::read_section(json_io::load_file(o.section), e.base.g_dim(),
                                                                e.h_dim, e.base.v_dim(), e.w_dim);
  return Json{{"coeffs", json_io::to_json(induced_coeff_rep_from_extension(e, sec))},
              {"cocycle", json_io::to_json(cocycle_from_extension(e, sec))}};
}

Json cochain_json(const CochainScheme& s, const Vector& coords) {
  return Json{{"degree", s.degree}, {"scheme", json_io::to_json(s)}, {"coords", json_io::to_json(coords)}};
}

Json cmd_lie2_from_cocycle(const Options& o) {
  const Json cj = json_io::load_file(require_file(o.cocycle, "--cocycle"));
  if (rb(o)) {
    const auto in = load_rb(o);
    const Vector c = json_io::read_cochain(cj, CochainScheme::rb(in.algebra, in.coeffs, 3));
    return json_io::to_json(cocycle_to_rb2(in.algebra, in.coeffs, c));
  }
  const auto in = load_rrb(o);
  const Vector c = json_io::read_cochain(cj, CochainScheme::rrb(in.algebra, in.coeffs, 3));
  return json_io::to_json(cocycle_to_rrb2(in.algebra, in.coeffs, c));
}

Json cmd_lie2_to_cocycle(const Options& o) {
  const Json in = json_io::load_file(o.input);
  if (rb(o)) {
    const auto t = rb2_to_3cocycle(json_io::read_skeletal_rb2(in));
    return Json{{"algebra", json_io::to_json(t.base)},
                {"coeffs", json_io::to_json(t.coeffs)},
                {"cocycle", cochain_json(CochainScheme::rb(t.base, t.coeffs, 3), t.coords)}};
  }
  const auto t = rrb2_to_3cocycle(json_io::read_skeletal_rrb2(in));
  return Json{{"algebra", json_io::to_json(t.base)},
              {"coeffs", json_io::to_json(t.coeffs)},
              {"cocycle", cochain_json(CochainScheme::rrb(t.base, t.coeffs, 3), t.coords)}};
}

Json cmd_les(const Options& o) {
  if (rb(o)) fail_usage("les is defined for --variant rrb");
  const auto in = load_rrb(o);
  const LesReport r = les_report(in.algebra, in.coeffs, o.max_degree, o.budget);
  Json doc = json_io::to_json(r);
  if (!r.exact()) throw Failure{1, doc};
  return doc;
}

Json cmd_xi_check(const Options& o) {
  if (rb(o)) fail_usage("xi-check is defined for --variant rrb");
  const auto in = load_rrb(o);
  const ValidationReport r = xi_commutes(in.algebra, in.coeffs, o.max_degree, o.budget);
  if (!r.valid()) fail_checks("chain map identity failed", r);
  return json_io::to_json(r);
}

Json dispatch(const Options& o) {
  if (o.command == "check") return cmd_check(o);
  if (o.command == "cohomology") return cmd_cohomology(o);
  if (o.command == "derivations") return cmd_derivations(o);
  if (o.command == "extension-build") return cmd_extension_build(o);
  if (o.command == "extension-extract") return cmd_extension_extract(o);
  if (o.command == "lie2-from-cocycle") return cmd_lie2_from_cocycle(o);
  if (o.command == "lie2-to-cocycle") return cmd_lie2_to_cocycle(o);
  if (o.command == "les") return cmd_les(o);
  if (o.command == "xi-check") return cmd_xi_check(o);
  fail_usage("unknown command " + o.command);
}

int emit(const Options& o, const Json& doc, int code) {
  std::ostream& os = std::cout;
  if (o.format == "text")
    os << json_io::render_text(doc);
  else
    os << doc.dump(2) << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Cohomology and structure checks for relative Rota-Baxter Lie algebras"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--variant", o.variant, "rrb or rb")->check(CLI::IsMember({"rrb", "rb"}));
  app.add_option("--max-degree", o.max_degree, "highest degree to compute")->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  app.add_option("--budget", o.budget, "largest cochain space to assemble");
  app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--section", o.section, "section file for extension-extract");
  app.add_option("--cocycle", o.cocycle, "cocycle file for extension-build and lie2-from-cocycle");

  const char* commands[][2] = {
      {"check", "validate an algebra and its coefficients"},
      {"cohomology", "cohomology dimensions up to --max-degree"},
      {"derivations", "derivation space and adjoint first cohomology"},
      {"extension-build", "abelian extension from a 2-cocycle (--cocycle)"},
      {"extension-extract", "coefficients and 2-cocycle of an extension (--section optional)"},
      {"lie2-from-cocycle", "skeletal Lie 2-algebra from a 3-cocycle (--cocycle)"},
      {"lie2-to-cocycle", "3-cocycle of a skeletal Lie 2-algebra"},
      {"les", "long exact sequence certificate"},
      {"xi-check", "chain map to the pre-Lie complex"},
  };
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c[0], c[1]);
    sub->add_option("input", o.input, "input JSON file")->required();
    sub->callback([&o, name = std::string(c[0])] { o.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return emit(o, dispatch(o), 0);
  } catch (const Failure& f) {
    return emit(o, f.doc, f.code);
  } catch (const json_io::ParseError& e) {
    Json issues = Json::array();
    for (const auto& i : e.issues) issues.push_back(Json{{"pointer", i.pointer}, {"message", i.message}});
    return emit(o, Json{{"error", "parse"}, {"issues", issues}}, 2);
  } catch (const AxiomError& e) {
    Json doc = json_io::to_json(e.report());
    doc["error"] = "axiom";
    doc["message"] = e.what();
    return emit(o, doc, 1);
  } catch (const BudgetExceeded& e) {
    return emit(o, Json{{"error", "budget"}, {"message", e.what()}, {"requested", e.requested}, {"budget", e.budget}},
                3);
  } catch (const InvalidSection& e) {
    return emit(o, Json{{"error", "section"}, {"message", e.what()}}, 2);
  } catch (const ShapeError& e) {
    return emit(o, Json{{"error", "shape"}, {"message", e.what()}}, 2);
  }
}
