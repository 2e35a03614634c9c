#pragma once

// Integer matrices and sublattices of Z^d.

#include <string>
#include <vector>

#include "pci/field.hpp"

namespace pci {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

/// Row Hermite normal form: nonzero rows only, pivots positive and strictly
/// moving right, entries above a pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(IntMatrix rows, std::size_t columns);

/// Nonzero diagonal entries of the Smith normal form, each dividing the next.
std::vector<Integer> smith_invariants(IntMatrix rows, std::size_t columns);

/// Basis (in Hermite form) of {v in Z^n : A v = 0}.
IntMatrix integer_kernel(const IntMatrix& a, std::size_t columns);

/// Sublattice of Z^dim spanned by a list of rows, stored in Hermite form so
/// equal lattices have equal bases.
class ExponentLattice {
 public:
  explicit ExponentLattice(std::size_t dim) : dim_(dim) {}
  ExponentLattice(std::size_t dim, IntMatrix rows);
  static ExponentLattice full(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  const IntMatrix& basis() const { return basis_; }

  bool contains(const IntVector& v) const;
  bool contains(const ExponentLattice& other) const;

  /// Lattice spanned by both.
  friend ExponentLattice operator+(const ExponentLattice& a, const ExponentLattice& b);
  friend bool operator==(const ExponentLattice& a, const ExponentLattice& b) {
    return a.dim_ == b.dim_ && a.basis_ == b.basis_;
  }

  /// "[(2,-2)]"
  std::string to_string() const;

 private:
  std::size_t dim_;
  IntMatrix basis_;
};

IntVector to_int_vector(const std::vector<int>& v);

}  // namespace pci
