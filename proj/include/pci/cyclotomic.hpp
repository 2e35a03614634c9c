#pragma once

#include <map>
#include <string>
#include <vector>

#include "pci/unipoly.hpp"

namespace pci {

/// Mobius function; n >= 1.
int mobius(long n);
/// Euler's totient; n >= 1.
long euler_phi(long n);
/// Positive divisors of n in increasing order.
std::vector<long> divisors(long n);

/// The n-th cyclotomic polynomial, built as the Mobius product of the
/// binomials x^d - 1 over d | n. Results are cached process-wide.
const UniPoly& cyclotomic_poly(long n);

/// Exponent map n -> k_n with every k_n >= 1.
using CycExponents = std::map<long, int>;

/// f = unit * x^x_valuation * prod phi_n^k_n * residual, residual monic with
/// nonzero constant term and no cyclotomic factor.
struct CycFactorization {
  FieldElement unit = FieldElement(1);
  std::size_t x_valuation = 0;
  CycExponents exponents;
  UniPoly residual;

  UniPoly reconstruct() const;
  /// "3*x^2*phi_12^2*phi_1*[x - 2]": unit (omitted when 1), x^v, cyclotomic
  /// factors by decreasing index, residual in brackets.
  std::string to_string(const std::string& var = "x") const;
};

/// Splits off the cyclotomic part of a nonzero polynomial with rational
/// coefficients. Throws std::invalid_argument for f = 0 or non-rational input.
CycFactorization factor_cyclotomic(const UniPoly& f);

/// x^v * prod phi_n^k_n.
UniPoly cyclotomic_product(const CycExponents& exponents, std::size_t x_valuation = 0);

}  // namespace pci
