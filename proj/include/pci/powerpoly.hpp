#pragma once

// Powered univariate polynomials: f divides f(x^i) for every i >= 1.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pci/cyclotomic.hpp"

namespace pci {

/// Finite set of positive integers, no element dividing another.
class Antichain {
 public:
  Antichain() = default;
  /// Throws std::invalid_argument unless the elements form an antichain.
  explicit Antichain(std::set<long> elements);
  /// Maximal elements of an arbitrary finite set of positive integers.
  static Antichain maximal_elements(const std::set<long>& elements);

  const std::set<long>& elements() const { return elements_; }
  bool empty() const { return elements_.empty(); }
  /// All divisors of all elements.
  std::set<long> downset() const;
  /// D(this) is a subset of D(other).
  bool precedes_or_equals(const Antichain& other) const;

  friend bool operator==(const Antichain&, const Antichain&) = default;
  std::string to_string() const;

 private:
  std::set<long> elements_;
};

/// Downset of an arbitrary set of positive integers.
std::set<long> downset(const std::set<long>& elements);

struct PsiFactor {
  Antichain antichain;
  int exponent = 0;
  friend bool operator==(const PsiFactor&, const PsiFactor&) = default;
};

/// f = unit * x^v * prod psi_{A_i}^{alpha_i} with D(A_1) > D(A_2) > ... as
/// downsets; factors are listed from the largest downset down.
struct PsiDecomposition {
  std::vector<PsiFactor> factors;
  std::size_t monomial_valuation = 0;
  FieldElement unit = FieldElement(1);

  UniPoly reconstruct() const;
  /// Chain form, e.g. "psi{8,12}^2 * psi{4} * psi{1}".
  std::string chain_string() const;
  /// Quotient of binomials, e.g. "(x^12 - 1)^2*(x^8 - 1)^2*(x - 1) / (x^4 - 1)".
  std::string binomial_string(const std::string& var = "x") const;
};

/// Exponent n -> e of the factors (x^n - 1)^e; negative entries are
/// denominators.
using BinomialQuotient = std::map<long, int>;

bool is_powered(const UniPoly& f);
/// Monic generator of the power-closure of (f).
UniPoly star(const UniPoly& f);
/// Monic generator of the power-interior of (f); nullopt encodes the zero
/// ideal (f has a root that is not a root of unity).
std::optional<UniPoly> circle(const UniPoly& f);

/// Exponent-level forms of star and circle on a cyclotomic exponent map.
CycExponents star_exponents(const CycExponents& k);
CycExponents circle_exponents(const CycExponents& k);

/// psi_C = prod of phi_i over the downset of C, computed as lcm(x^c - 1).
UniPoly psi_poly(const std::set<long>& elements);
/// Inclusion-exclusion form of psi over the maximal elements of C.
BinomialQuotient psi_inclusion_exclusion(const std::set<long>& elements);
/// Evaluates a quotient of binomials by exact division.
UniPoly evaluate_binomial_quotient(const BinomialQuotient& q);
std::string binomial_quotient_string(const BinomialQuotient& q, const std::string& var = "x");

/// Throws std::invalid_argument if f is not powered.
PsiDecomposition psi_decompose(const UniPoly& f);

enum class DownsetMode { kStar, kCircle };
std::set<long> downset_bound(const UniPoly& f, DownsetMode mode);

}  // namespace pci
