#pragma once

// JSON reading and writing for every value the command-line tool exchanges.
//
// Rationals are written as canonical strings ("3", "-1/2"); on input both
// strings and integer literals are accepted. Objects use sorted keys.
// Readers collect every problem they find and throw ParseError listing them,
// each located by a JSON pointer.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "rrb/cohomology.hpp"
#include "rrb/extensions.hpp"
#include "rrb/lie2.hpp"
#include "rrb/rota_baxter.hpp"

namespace rrb::json_io {

using Json = nlohmann::json;

struct ParseIssue {
  std::string pointer;
  std::string message;
};

struct ParseError : std::runtime_error {
  explicit ParseError(std::vector<ParseIssue> found);
  std::vector<ParseIssue> issues;
};

Json load_file(const std::filesystem::path& path);

// Input documents. Coefficients may be given explicitly or as the strings
// "adjoint" / "coadjoint"; when absent the adjoint package is used.

struct RRBProblem {
  RRBAlgebra algebra;
  std::optional<RRBRepresentation> coeffs;  // explicit coefficients
  std::string coeffs_kind = "adjoint";      // "explicit", "adjoint" or "coadjoint"
};

struct RBProblem {
  RBAlgebra algebra;
  std::optional<RBRepresentation> coeffs;
  std::string coeffs_kind = "adjoint";  // "explicit" or "adjoint"
};

LieAlgebra read_lie(const Json& j);
LinearRep read_rep(const Json& j, std::size_t algebra_dim);
Matrix read_matrix(const Json& j, std::size_t rows, std::size_t cols);
RRBAlgebra read_rrb(const Json& j);
RBAlgebra read_rb(const Json& j);
RRBProblem read_rrb_problem(const Json& j);
RBProblem read_rb_problem(const Json& j);
TwoCocycle read_two_cocycle(const Json& j, const CochainScheme& degree2);
RBTwoCocycle read_rb_two_cocycle(const Json& j, const CochainScheme& degree2);
/// {"coords": [...]} with an optional "degree" that must match.
Vector read_cochain(const Json& j, const CochainScheme& scheme);
Section read_section(const Json& j, std::size_t g_dim, std::size_t h_dim, std::size_t v_dim, std::size_t w_dim);
Matrix read_section_rb(const Json& j, std::size_t g_dim, std::size_t h_dim);
AbelianExtension read_extension(const Json& j);
RBExtension read_rb_extension(const Json& j);
SkeletalRRB2 read_skeletal_rrb2(const Json& j);
SkeletalRB2 read_skeletal_rb2(const Json& j);

Json to_json(const Rational& q);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const LieAlgebra& g);
Json to_json(const LinearRep& r);
Json to_json(const RRBAlgebra& a);
Json to_json(const RBAlgebra& a);
Json to_json(const RRBRepresentation& r);
Json to_json(const RBRepresentation& r);
Json to_json(const ValidationReport& r);
Json to_json(const CohomologyReport& r);
Json to_json(const LesReport& r);
Json to_json(const CochainScheme& s);
Json to_json(const TwoCocycle& z);
Json to_json(const RBTwoCocycle& z);
Json to_json(const AbelianExtension& e);
Json to_json(const RBExtension& e);
Json to_json(const ExtensionIso& iso);
Json to_json(const SkeletalRRB2& s);
Json to_json(const SkeletalRB2& s);

/// Indented "key: value" rendering of a JSON document.
std::string render_text(const Json& j);

}  // namespace rrb::json_io
