#pragma once

// Text syntax for scalars, polynomials, factored principal generators and
// torsion points.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pci/multipoly.hpp"
#include "pci/principal.hpp"
#include "pci/variety.hpp"

namespace pci {

/// Syntax or semantic error with the 0-based column where it was detected.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t column);
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

struct ParseContext {
  std::vector<std::string> names;
  RingMode mode = RingMode::kPolynomial;
  /// Radicand every irrational coefficient must use; nullopt accepts any
  /// single extension, 0 means rational coefficients only.
  std::optional<long> radicand;
};

/// Identifiers used in the inputs, ordered x < y < z < w first and then by
/// name with numeric suffixes compared as numbers (x2 < x10).
std::vector<std::string> infer_variables(const std::vector<std::string>& inputs);

/// Parses "3/2*x^4 - x + 1", "(1/2 + sqrt(2))*x*y^-1", "phi(12)^2*phi(8)".
/// phi(n) is the n-th cyclotomic polynomial in the single variable of a
/// univariate context.
MultiPoly parse_polynomial(const std::string& text, const ParseContext& context);
UniPoly parse_univariate(const std::string& text, const std::string& var = "x");
FieldElement parse_scalar(const std::string& text);

/// Parses a comma-separated list of scalars.
std::vector<FieldElement> parse_scalar_list(const std::string& text);

/// Factored grammar: "2*x*prod((x/y - 1)^2, (x/y - zeta(3,*)), (x - 2*y))".
/// Each factor is "(monomial fraction - root)" with an optional exponent;
/// roots are scalars, zeta(n,k) or zeta(n,*). Bare scalars and monomials
/// multiply the unit. prod(...) is optional grouping.
FactoredPrincipal parse_factored(const std::string& text, const ParseContext& context);

/// "zeta(4,1), zeta(4,3)", "0, 1", "-1, -1".
std::vector<PointCoordinate> parse_point(const std::string& text);

}  // namespace pci
