#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "pci/field.hpp"
#include "pci/monomial.hpp"
#include "pci/unipoly.hpp"

namespace pci {

enum class RingMode { kPolynomial, kLaurent };

std::string to_string(RingMode mode);

/// Sparse polynomial in nvars variables; in Laurent mode exponents may be
/// negative. Zero coefficients are never stored.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, FieldElement>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars, RingMode mode = RingMode::kPolynomial);

  static MultiPoly constant(std::size_t nvars, const FieldElement& c, RingMode mode = RingMode::kPolynomial);
  static MultiPoly variable(std::size_t nvars, std::size_t index, RingMode mode = RingMode::kPolynomial);
  static MultiPoly term(const FieldElement& c, const Monomial& m, RingMode mode = RingMode::kPolynomial);
  /// The univariate polynomial f placed in variable `index`.
  static MultiPoly from_unipoly(const UniPoly& f, std::size_t nvars, std::size_t index,
                                RingMode mode = RingMode::kPolynomial);

  std::size_t nvars() const { return nvars_; }
  RingMode mode() const { return mode_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool has_rational_coefficients() const;
  long total_degree() const;
  FieldElement coefficient(const Monomial& m) const;

  /// Adds c * m to this polynomial.
  void add_term(const Monomial& m, const FieldElement& c);

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const FieldElement& c);
  friend MultiPoly operator+(MultiPoly f, const MultiPoly& g) { return f += g; }
  friend MultiPoly operator-(MultiPoly f, const MultiPoly& g) { return f -= g; }
  friend MultiPoly operator*(const MultiPoly& f, const MultiPoly& g);
  friend MultiPoly operator*(MultiPoly f, const FieldElement& c) { return f *= c; }
  MultiPoly operator-() const;
  friend bool operator==(const MultiPoly& f, const MultiPoly& g) {
    return f.nvars_ == g.nvars_ && f.terms_ == g.terms_;
  }

  MultiPoly pow(unsigned exponent) const;
  MultiPoly times_monomial(const Monomial& m) const;

  /// Largest term under `order`; the polynomial must be nonzero.
  std::pair<Monomial, FieldElement> leading_term(const TermOrder& order) const;
  MultiPoly monic(const TermOrder& order) const;

  MultiPoly with_mode(RingMode mode) const;
  /// Same polynomial in a ring with more variables appended at the end.
  MultiPoly extended(std::size_t nvars) const;
  /// Drops trailing variables; they must not occur.
  MultiPoly truncated(std::size_t nvars) const;
  /// Relabels variable i as permutation[i] in a ring of `nvars` variables.
  MultiPoly renamed(const std::vector<std::size_t>& permutation, std::size_t nvars) const;
  bool uses_variable(std::size_t index) const;

  /// Substitutes univariate polynomials for the variables (polynomial mode).
  UniPoly substitute(const std::vector<UniPoly>& values) const;
  FieldElement evaluate(const std::vector<FieldElement>& point) const;
  /// One-variable polynomial as a UniPoly (nvars must be 1, no negative exponents).
  UniPoly to_unipoly() const;

  /// Terms are printed from the largest down under deglex with the last
  /// variable largest, so output is independent of any user order.
  std::string to_string(const std::vector<std::string>& names) const;
  std::string to_string() const;

 private:
  void check_compatible(const MultiPoly& other) const;

  Terms terms_;
  std::size_t nvars_ = 0;
  RingMode mode_ = RingMode::kPolynomial;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& f);

/// "x^2*y^-1"; "1" for the empty monomial.
std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names);

/// x, y, z, w for up to four variables, otherwise x1, x2, ...
std::vector<std::string> default_variable_names(std::size_t nvars);

/// f(x1^i, ..., xd^i). Polynomial mode needs i >= 1, Laurent mode i != 0.
MultiPoly power_substitute(const MultiPoly& f, long i);

/// Sum of all squarefree degree-k monomials in d variables; zero for k > d.
MultiPoly elementary_symmetric(std::size_t d, std::size_t k);

/// Checks x_l^n = sum_{i<d} (-1)^i x_l^{n-i-1} sigma_{i+1}(d) by expansion.
/// Requires 1 <= l <= d and n >= d + 1.
bool newton_power_identity_check(std::size_t d, long n, std::size_t l);

/// Number of terms; f must be nonzero.
std::size_t lambda(const MultiPoly& f);

/// f = scalar * monomial * polynomial, where polynomial has nonnegative
/// exponents, no variable dividing all of its terms, and leading
/// coefficient 1 under `order`.
struct LaurentNormal {
  MultiPoly polynomial;
  FieldElement scalar;
  Monomial monomial;
};
LaurentNormal laurent_normalize(const MultiPoly& f, const TermOrder& order);

}  // namespace pci
