#pragma once

// Zero loci and radicals of power-closed ideals: lines and linear
// components for linear forms, torus subgroups cut out by binomials, and
// vanishing ideals of orbits of torsion points.

#include <optional>
#include <string>
#include <vector>

#include "pci/ideal.hpp"
#include "pci/lattice.hpp"

namespace pci {

/// Subsets A of {0..d-1} with zero coefficient sum; each stands for the
/// line spanned by the indicator vector of A.
struct LineFamily {
  std::size_t dim = 0;
  std::vector<std::vector<std::size_t>> subsets;

  /// "{1,2} {1,2,3}" with 1-based indices, or "{}" when empty.
  std::string to_string() const;
};

/// All nonempty zero-sum subsets; a must be nonzero and d <= 24.
LineFamily zero_sum_lines(const std::vector<FieldElement>& a);

/// f restricted to the line t * (indicator of subset) is identically zero.
bool vanishes_on_line(const MultiPoly& f, const std::vector<std::size_t>& subset);

/// Linear subspace: coordinates outside `support` vanish and coordinates are
/// equal inside each block.
struct LinearComponent {
  std::vector<std::size_t> support;
  std::vector<std::vector<std::size_t>> blocks;

  /// (x_j : j outside support) + (x_i - x_k : consecutive i, k in a block).
  Ideal prime(std::size_t dim) const;
  std::string to_string() const;
};

/// Irreducible components of the zero locus of the power-closure of
/// (sum a_i x_i): the maximal subspaces whose blocks all have zero sum.
std::vector<LinearComponent> linear_closure_components(const std::vector<FieldElement>& a);

struct RadicalResult {
  Ideal radical;
  std::vector<LinearComponent> components;
  /// Every generator of the radical lies in the radical of the closure.
  bool contained_in_radical = false;
  /// Every generator of the closure lies in every component prime.
  bool closure_in_components = false;
};

/// Radical of (f)^(*) for f = sum a_i x_i as the intersection of the
/// component primes, validated both ways by radical membership.
RadicalResult radical_of_linear_closure(const std::vector<FieldElement>& a);

/// Torsion-aware description of {w in T^d : w^v = 1 for all v in L}.
class TorusSubgroup {
 public:
  explicit TorusSubgroup(ExponentLattice lattice) : lattice_(std::move(lattice)) {}

  const ExponentLattice& lattice() const { return lattice_; }
  std::size_t dim() const { return lattice_.dim(); }
  /// G ⊆ H exactly when H's lattice is contained in G's.
  bool is_subgroup_of(const TorusSubgroup& other) const { return lattice_.contains(other.lattice_); }
  friend bool operator==(const TorusSubgroup& a, const TorusSubgroup& b) { return a.lattice_ == b.lattice_; }

 private:
  ExponentLattice lattice_;
};

/// Subgroup cut out by x^p - x^q (any scalar multiple is accepted).
TorusSubgroup torus_subgroup(const MultiPoly& binomial);

struct IsoType {
  std::size_t torus_rank = 0;
  std::vector<Integer> cyclic_invariants;

  /// "T^1 x Z/2", "Z/2", or "1" for the trivial group.
  std::string to_string() const;
};
IsoType subgroup_iso_type(const TorusSubgroup& g);

TorusSubgroup subgroup_intersect(const TorusSubgroup& g, const TorusSubgroup& h);
/// Drops members contained in another member; keeps first occurrences.
std::vector<TorusSubgroup> irredundant_union(const std::vector<TorusSubgroup>& members);

/// A coordinate of a torsion point: zero or the root of unity zeta_order^index.
struct PointCoordinate {
  bool zero = false;
  long order = 1;
  long index = 0;
};

/// Vanishing ideal of the orbit {w^(j) : j >= 1} of a point whose
/// coordinates are zero or roots of unity.
Ideal it_generators(const std::vector<PointCoordinate>& point);

/// f vanishes at w^(j), decided by reducing modulo a cyclotomic polynomial.
bool vanishes_at_power(const MultiPoly& f, const std::vector<PointCoordinate>& point, long j);

}  // namespace pci
