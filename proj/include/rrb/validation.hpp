#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "rrb/linalg.hpp"

namespace rrb {

/// One failed instance of an identity: which axiom, on which basis indices,
/// and the (flattened) difference between the two sides.
struct Violation {
  std::string axiom;
  std::vector<std::size_t> witness;
  Vector residual;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
  explicit operator bool() const { return valid(); }

  void add(std::string axiom, std::vector<std::size_t> witness, Vector residual) {
    violations.push_back({std::move(axiom), std::move(witness), std::move(residual)});
  }
  /// Records a violation only when the residual is nonzero.
  void check(const std::string& axiom, std::vector<std::size_t> witness, Vector residual) {
    if (!is_zero(residual)) add(axiom, std::move(witness), std::move(residual));
  }
  void check(const std::string& axiom, std::vector<std::size_t> witness, const Matrix& residual);

  /// Appends `other`, prefixing each axiom name with `prefix`.
  void merge(const ValidationReport& other, const std::string& prefix = {});
};

/// Thrown by validating constructors when the data fails its axioms.
class AxiomError : public std::runtime_error {
 public:
  AxiomError(const std::string& what, ValidationReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Thrown when inputs have incompatible shapes (dimension bookkeeping).
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace rrb
