#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "pci/field.hpp"

namespace pci {

/// Dense univariate polynomial over FieldElement, coefficients indexed by
/// degree. Trailing zeros are never stored, so the zero polynomial has no
/// coefficients and degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(std::vector<FieldElement> coefficients);  // NOLINT(google-explicit-constructor)
  UniPoly(std::initializer_list<long> coefficients);
  explicit UniPoly(FieldElement constant);

  static UniPoly monomial(FieldElement coefficient, std::size_t degree);
  /// x^n - 1.
  static UniPoly binomial(std::size_t n);
  static UniPoly x() { return monomial(FieldElement(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const { return !is_zero() && coeffs_.back().is_one(); }
  bool has_rational_coefficients() const;
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<FieldElement>& coefficients() const { return coeffs_; }
  const FieldElement& leading_coefficient() const;
  /// Coefficient of x^k, zero beyond the degree.
  FieldElement operator[](std::size_t k) const;

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  UniPoly& operator*=(const UniPoly& other);
  UniPoly& operator*=(const FieldElement& scalar);
  friend UniPoly operator+(UniPoly f, const UniPoly& g) { return f += g; }
  friend UniPoly operator-(UniPoly f, const UniPoly& g) { return f -= g; }
  friend UniPoly operator*(const UniPoly& f, const UniPoly& g);
  friend UniPoly operator*(UniPoly f, const FieldElement& c) { return f *= c; }
  UniPoly operator-() const;
  friend bool operator==(const UniPoly& f, const UniPoly& g) { return f.coeffs_ == g.coeffs_; }

  UniPoly pow(unsigned exponent) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  FieldElement evaluate(const FieldElement& at) const;

  /// Multiplicity of the root 0.
  std::size_t x_valuation() const;
  /// Divides out x^k; requires k <= x_valuation().
  UniPoly shift_down(std::size_t k) const;
  UniPoly shift_up(std::size_t k) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();

  std::vector<FieldElement> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const UniPoly& f);

struct DivRem {
  UniPoly quotient;
  UniPoly remainder;
};

/// f = q*g + r with deg r < deg g. Throws std::domain_error for g = 0.
DivRem divrem(const UniPoly& f, const UniPoly& g);
UniPoly operator%(const UniPoly& f, const UniPoly& g);

/// Exact quotient f / g; throws std::domain_error if g does not divide f.
UniPoly exact_quotient(const UniPoly& f, const UniPoly& g);

/// f(x^i), i >= 1.
UniPoly power_substitute(const UniPoly& f, long i);

/// Monic gcd; gcd(f, 0) = monic(f); gcd(0, 0) throws.
UniPoly gcd(const UniPoly& f, const UniPoly& g);
/// Monic lcm; lcm(f, 0) = 0.
UniPoly lcm(const UniPoly& f, const UniPoly& g);

/// True iff f | g; f = 0 throws.
bool divides(const UniPoly& f, const UniPoly& g);

}  // namespace pci
