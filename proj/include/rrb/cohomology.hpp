#pragma once

// Cochain complexes of relative Rota-Baxter Lie algebras (with coefficients
// in a representation), of Rota-Baxter Lie algebras, and of pre-Lie
// algebras, assembled as explicit rational matrices.
//
// Degree-n cochains of (g, rho, T) with coefficients [W -> H, rho_h, rho_w, mu]:
//   f_h   in Hom(wedge^n g, H)
//   f_w   in Hom(wedge^{n-1} g (x) V, W)
//   theta in Hom(wedge^{n-1} V, H)        (absent for n = 1)
// concatenated in this order. Inside a block the coordinate of
// (tuple, tail, c) is (tuple_index * tail_dim + tail) * target_dim + c, with
// tuple_index the lexicographic position among increasing tuples. Degree 0 is
// the zero space.
//
// The coboundary D(n): C^n -> C^{n+1} is D(f, theta) = (delta f, dtheta + h_T f),
// i.e. the block matrix [[delta, 0], [h_T, partial]].

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rrb/linalg.hpp"
#include "rrb/rota_baxter.hpp"
#include "rrb/validation.hpp"

namespace rrb {

inline constexpr std::size_t kDefaultBudget = 20000;

/// Thrown when a requested cochain space is larger than the budget.
struct BudgetExceeded : std::runtime_error {
  BudgetExceeded(const std::string& what, std::size_t requested, std::size_t budget)
      : std::runtime_error(what), requested(requested), budget(budget) {}
  std::size_t requested;
  std::size_t budget;
};

enum class Variant { RRB, RB };

struct CochainScheme {
  Variant variant = Variant::RRB;
  std::size_t degree = 0;
  std::size_t g_dim = 0;
  std::size_t v_dim = 0;  // RB: unused
  std::size_t h_dim = 0;  // RB: unused
  std::size_t w_dim = 0;

  static CochainScheme rrb(const RRBAlgebra& a, const RRBRepresentation& r, std::size_t n);
  static CochainScheme rb(const RBAlgebra& a, const RBRepresentation& r, std::size_t n);

  /// RRB: sizes of f_h, f_w, theta. RB: f in the first slot, theta in the
  /// third, second slot empty.
  std::size_t fh_size() const;
  std::size_t fw_size() const;
  std::size_t theta_size() const;
  /// Size of the quotient part (f_h, f_w) or f.
  std::size_t bar_size() const { return fh_size() + fw_size(); }
  std::size_t total() const { return bar_size() + theta_size(); }
  bool operator==(const CochainScheme&) const = default;
};

std::size_t cochain_dim(const CochainScheme& s);

struct Cochain {
  CochainScheme scheme;
  Vector coords;
};

// ---------------------------------------------------------------------------
// Relative Rota-Baxter complex with coefficients

Matrix coboundary_matrix(const RRBAlgebra& a, const RRBRepresentation& r, std::size_t n,
                         std::size_t budget = kDefaultBudget);
/// The three pieces of coboundary_matrix.
Matrix delta_matrix(const RRBAlgebra& a, const RRBRepresentation& r, std::size_t n,
                    std::size_t budget = kDefaultBudget);
Matrix partial_matrix(const RRBAlgebra& a, const RRBRepresentation& r, std::size_t n,
                      std::size_t budget = kDefaultBudget);
Matrix hT_matrix(const RRBAlgebra& a, const RRBRepresentation& r, std::size_t n,
                 std::size_t budget = kDefaultBudget);

/// Coboundary with adjoint coefficients, built from the adjoint-specific
/// formulas by applying them to each basis cochain (separate code path from
/// coboundary_matrix). Same coordinates as
/// coboundary_matrix(a, adjoint_rrb_rep(a), n).
Matrix adjoint_complex_matrix(const RRBAlgebra& a, std::size_t n, std::size_t budget = kDefaultBudget);

// ---------------------------------------------------------------------------
// Rota-Baxter complex: C^1 = Hom(g, W), C^n = Hom(wedge^n g, W) + Hom(wedge^{n-1} g, W)

Matrix rb_coboundary_matrix(const RBAlgebra& a, const RBRepresentation& r, std::size_t n,
                            std::size_t budget = kDefaultBudget);

// ---------------------------------------------------------------------------
// Pre-Lie complex C^n = Hom(wedge^{n-1} A (x) A, W), n >= 1, and the map
// Xi(omega)(v_1..v_{n-1}, v_n) = mu(v_n) omega(v_1..v_{n-1}) from the theta
// blocks into it.

Matrix prelie_coboundary(const PreLieAlgebra& A, const PreLieRep& r, std::size_t n,
                         std::size_t budget = kDefaultBudget);
Matrix xi_matrix(const RRBAlgebra& a, const RRBRepresentation& r, std::size_t n);
/// Checks d(n) Xi(n) = Xi(n+1) partial(n) for 1 <= n <= max_degree.
ValidationReport xi_commutes(const RRBAlgebra& a, const RRBRepresentation& r, std::size_t max_degree,
                             std::size_t budget = kDefaultBudget);

// ---------------------------------------------------------------------------
// Dimensions

struct DegreeReport {
  std::size_t n = 0;
  std::size_t dim_cochains = 0;
  std::size_t dim_cocycles = 0;
  std::size_t dim_coboundaries = 0;
  std::size_t dim_H = 0;
  std::size_t dim_H_sub = 0;   // theta part with partial
  std::size_t dim_H_quot = 0;  // (f_h, f_w) part with delta
  bool operator==(const DegreeReport&) const = default;
};

struct CohomologyReport {
  std::vector<DegreeReport> degrees;
};

CohomologyReport cohomology_dims(const RRBAlgebra& a, const RRBRepresentation& r, std::size_t max_degree,
                                 std::size_t budget = kDefaultBudget);
CohomologyReport rb_cohomology_dims(const RBAlgebra& a, const RBRepresentation& r, std::size_t max_degree,
                                    std::size_t budget = kDefaultBudget);

// ---------------------------------------------------------------------------
// Membership

/// The coboundary out of the cochain's degree, for either variant.
Matrix coboundary_for(const RRBAlgebra& a, const RRBRepresentation& r, std::size_t n, std::size_t budget);
Matrix coboundary_for(const RBAlgebra& a, const RBRepresentation& r, std::size_t n, std::size_t budget);

bool is_cocycle(const RRBAlgebra& a, const RRBRepresentation& r, const Cochain& c,
                std::size_t budget = kDefaultBudget);
bool is_cocycle(const RBAlgebra& a, const RBRepresentation& r, const Cochain& c, std::size_t budget = kDefaultBudget);
/// Some b with D(b) = c, or nullopt.
std::optional<Cochain> coboundary_preimage(const RRBAlgebra& a, const RRBRepresentation& r, const Cochain& c,
                                           std::size_t budget = kDefaultBudget);
std::optional<Cochain> coboundary_preimage(const RBAlgebra& a, const RBRepresentation& r, const Cochain& c,
                                           std::size_t budget = kDefaultBudget);
/// Some b with c1 - c2 = D(b), or nullopt.
std::optional<Cochain> cohomologous(const RRBAlgebra& a, const RRBRepresentation& r, const Cochain& c1,
                                    const Cochain& c2, std::size_t budget = kDefaultBudget);
std::optional<Cochain> cohomologous(const RBAlgebra& a, const RBRepresentation& r, const Cochain& c1,
                                    const Cochain& c2, std::size_t budget = kDefaultBudget);

// ---------------------------------------------------------------------------
// Long exact sequence
//   ... -> H^n(sub) -> H^n(full) -> H^n(quot) -c-> H^{n+1}(sub) -> ...
// sub = (theta part, partial), quot = ((f_h, f_w) part, delta),
// c([alpha]) = [h_T alpha].

struct LesNode {
  std::string space;  // "sub", "full" or "quot"
  std::size_t degree = 0;
  std::size_t dim = 0;
  std::size_t dim_image = 0;   // of the incoming map
  std::size_t dim_kernel = 0;  // of the outgoing map
  bool composite_zero = true;  // outgoing after incoming vanishes
  bool exact() const { return composite_zero && dim_image == dim_kernel; }
};

struct LesReport {
  std::vector<LesNode> nodes;
  bool exact() const;
};

LesReport les_report(const RRBAlgebra& a, const RRBRepresentation& r, std::size_t max_degree,
                     std::size_t budget = kDefaultBudget);

// ---------------------------------------------------------------------------
// Embeddings of complexes

/// RB complex of (g, T) with coefficients [W; curlyT, rho_w] into the RRB
/// complex of (g, ad, T) with coefficients [W -> W; rho_w, rho_w, rho_w]:
/// (f, theta) -> (f, f, theta), the second copy of f read on
/// wedge^{n-1} g (x) g.
Matrix rb_embedding_matrix(const RBAlgebra& a, const RBRepresentation& r, std::size_t n);
/// The coefficient package [W -> W; rho_w, rho_w, rho_w].
RRBRepresentation rb_coefficients_as_rrb(const RBAlgebra& a, const RBRepresentation& r);
ValidationReport rb_embedding_check(const RBAlgebra& a, const RBRepresentation& r, std::size_t max_degree,
                                    std::size_t budget = kDefaultBudget);

/// Complex with coefficients into the adjoint complex of the semidirect
/// product, extending cochains by zero on the adjoined summands.
Matrix semidirect_embedding_matrix(const RRBAlgebra& a, const RRBRepresentation& r, std::size_t n);
ValidationReport rrb_semidirect_embedding_check(const RRBAlgebra& a, const RRBRepresentation& r,
                                                std::size_t max_degree, std::size_t budget = kDefaultBudget);

}  // namespace rrb
