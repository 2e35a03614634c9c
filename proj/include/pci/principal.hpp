#pragma once

// Principal power-closed ideals: binomial structure and the classifier for
// products of binomial factors (xi - rho).

#include <optional>
#include <string>
#include <vector>

#include "pci/cyclotomic.hpp"
#include "pci/ideal.hpp"

namespace pci {

/// A nonzero scalar rho. Roots of unity are kept symbolically as
/// zeta_order^index; other scalars carry a field value. A scalar root may
/// also denote one of the order-th roots of `scalar`, namely
/// scalar^(1/order) * zeta_order^index (only produced by binomial_factor).
struct Root {
  enum class Kind { kUnity, kScalar, kAllPrimitive };

  Kind kind = Kind::kUnity;
  long order = 1;
  long index = 0;
  FieldElement scalar{1};

  static Root unity(long order, long index);
  /// Every primitive order-th root at once.
  static Root all_primitive(long order);
  /// Converts field roots of unity (such as -1) to symbolic form.
  static Root from_scalar(const FieldElement& c);

  bool is_root_of_unity() const { return kind != Kind::kScalar; }
  /// Reduced (order, index) with gcd(index, order) = 1 and 0 <= index < order.
  Root normalized() const;
  Root inverse() const;
  friend bool operator==(const Root& a, const Root& b);
  /// "zeta(4,1)", "zeta(6,*)", "2", "2^(1/3)*zeta(3,1)".
  std::string to_string() const;
};

/// "x^2/(y*z)", "y/x", "x*y".
std::string fraction_to_string(const Monomial& xi, const std::vector<std::string>& names);

/// True iff supp(p) ∩ supp(q) = ∅ and gcd of all coordinates is 1.
bool is_primitive_pair(const std::vector<int>& p, const std::vector<int>& q);

/// Irreducibility of c1*x^a + c2*x^b: the reduced exponent pair is primitive.
bool binomial_irreducible(const MultiPoly& b);

struct BinomialFactorization {
  FieldElement scalar;
  /// Monomial content x^c.
  Monomial content;
  /// Primitive pair with x^q'' > x^p'' under the order.
  std::vector<int> p;
  std::vector<int> q;
  long h = 1;
  FieldElement rho;
  /// b = scalar * x^c * prod_i (x^q'' - roots[i] x^p'').
  std::vector<Root> roots;

  std::string to_string(const std::vector<std::string>& names) const;
};

/// Factors a binomial into irreducibles over C; roots are symbolic.
BinomialFactorization binomial_factor(const MultiPoly& b, const TermOrder& order);

/// One factor (xi - rho)^multiplicity with xi a Laurent monomial.
struct BinomialFactor {
  Monomial xi;
  Root rho;
  int multiplicity = 1;
};

/// Lemma-style associate test: (xi, c) ~ (xi', c') iff equal or
/// (xi', c') = (xi^-1, c^-1).
bool associates(const BinomialFactor& a, const BinomialFactor& b);

/// f = scalar * monomial * prod (xi_i - rho_i)^{m_i}.
struct FactoredPrincipal {
  std::size_t nvars = 0;
  FieldElement scalar{1};
  Monomial monomial;
  std::vector<BinomialFactor> factors;

  std::string to_string(const std::vector<std::string>& names) const;
};

struct GroupSummary {
  /// Positive primitive fraction shared by the group.
  Monomial eta;
  /// Cyclotomic exponents of the group polynomial in eta.
  CycExponents exponents;
  bool powered = false;
};

struct Verdict {
  bool power_closed = false;
  std::string witness;
  std::vector<GroupSummary> groups;
  /// Orientation order actually used.
  std::string order_name;
};

/// Classifies (f) in the polynomial or Laurent ring. Throws
/// std::invalid_argument for malformed input and for root groups whose
/// multiplicities differ between conjugate roots.
Verdict classify_principal(const FactoredPrincipal& f, RingMode mode, const TermOrder& order);

/// The polynomial generator: each factor is cleared to x^{xi+} - rho x^{xi-}
/// and conjugate roots are multiplied out.
MultiPoly expand(const FactoredPrincipal& f, RingMode mode, const TermOrder& order);

/// The product x^{p_k} prod_{i<k} (x^{p_k} - x^{p_i}) over the terms of f
/// sorted by the order (the leading factor x^{p_k} only in polynomial mode).
MultiPoly divisibility_witness(const MultiPoly& f, RingMode mode, const TermOrder& order);

/// f divides divisibility_witness(f) in the given ring.
bool satisfies_divisibility_bound(const MultiPoly& f, RingMode mode, const TermOrder& order);

}  // namespace pci
