#pragma once

// Ideals of Q(sqrt m)[x1..xd] and of its Laurent ring, together with the
// power-closure and power-interior operators.

#include <string>
#include <vector>

#include "pci/groebner.hpp"
#include "pci/multipoly.hpp"

namespace pci {

class Ideal {
 public:
  explicit Ideal(std::size_t nvars, RingMode mode = RingMode::kPolynomial) : nvars_(nvars), mode_(mode) {}
  Ideal(std::vector<MultiPoly> generators, std::size_t nvars, RingMode mode = RingMode::kPolynomial);
  /// Takes the ring from the first generator; the list must be nonempty.
  explicit Ideal(std::vector<MultiPoly> generators);

  const std::vector<MultiPoly>& generators() const { return generators_; }
  std::size_t nvars() const { return nvars_; }
  RingMode mode() const { return mode_; }

  std::string to_string(const std::vector<std::string>& names) const;
  std::string to_string() const { return to_string(default_variable_names(nvars_)); }

 private:
  std::vector<MultiPoly> generators_;
  std::size_t nvars_;
  RingMode mode_;
};

/// Generators of the polynomial part I ∩ Q[x] of an ideal: the ideal itself
/// in polynomial mode, its saturation by x1*...*xd in Laurent mode.
Ideal polynomial_contraction(const Ideal& ideal, const GroebnerLimits& limits = {});

/// Reduced basis of the polynomial contraction.
GroebnerBasis groebner(const Ideal& ideal, const TermOrder& order, const GroebnerLimits& limits = {});
GroebnerBasis groebner(const Ideal& ideal);

bool member(const MultiPoly& f, const Ideal& ideal, const TermOrder& order, const GroebnerLimits& limits = {});
bool member(const MultiPoly& f, const Ideal& ideal);
/// J ⊆ I.
bool contains(const Ideal& ideal, const Ideal& sub);
bool equal(const Ideal& a, const Ideal& b);

/// Generators f_j^(i), 1 <= i <= lambda(f_j); the same window in Laurent mode.
Ideal power_closure(const Ideal& ideal);
bool is_power_closed(const Ideal& ideal);

Ideal sum(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);
Ideal power(const Ideal& ideal, unsigned n);
/// Elimination of t from t*I + (1 - t)*J.
Ideal intersect(const Ideal& a, const Ideal& b, const GroebnerLimits& limits = {});
/// (I : (x1*...*xd)^inf) for the polynomial generators of a Laurent ideal,
/// returned as a polynomial-mode ideal.
Ideal laurent_saturate(const Ideal& ideal, const GroebnerLimits& limits = {});

/// f^(i) ∈ I for every 1 <= i <= bound.
bool bounded_power_interior(const Ideal& ideal, const MultiPoly& f, long bound);

/// 1 ∈ I + (t*f - 1).
bool radical_member(const MultiPoly& f, const Ideal& ideal);

/// g_k = sum_i a_i m_i prod_{j<k} (m_i - m_j) for f = sum_i a_i m_i, k = 1..lambda(f).
std::vector<MultiPoly> gauss_jordan_generators(const MultiPoly& f);

}  // namespace pci
