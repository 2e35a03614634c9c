#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pci/multipoly.hpp"

namespace pci {

/// Thrown when a Groebner computation passes its deadline.
class ComputationTimeout : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroebnerLimits {
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Reduced Groebner basis: monic elements sorted by increasing leading
/// monomial. Two bases of the same ideal under the same order compare equal.
class GroebnerBasis {
 public:
  GroebnerBasis(std::vector<MultiPoly> elements, TermOrder order)
      : elements_(std::move(elements)), order_(std::move(order)) {}

  const std::vector<MultiPoly>& elements() const { return elements_; }
  const TermOrder& order() const { return order_; }
  std::size_t size() const { return elements_.size(); }
  bool is_unit() const;
  bool is_zero() const { return elements_.empty(); }

  MultiPoly normal_form(const MultiPoly& f) const;
  bool contains(const MultiPoly& f) const { return normal_form(f).is_zero(); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) { return a.elements_ == b.elements_; }

 private:
  std::vector<MultiPoly> elements_;
  TermOrder order_;
};

/// Buchberger's algorithm with the Gebauer-Moeller criteria and the normal
/// selection strategy. Inputs must share nvars and have no negative exponents.
GroebnerBasis groebner(const std::vector<MultiPoly>& generators, const TermOrder& order,
                       const GroebnerLimits& limits = {});

/// Remainder of f on division by `divisors` (not necessarily a basis).
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& divisors, const TermOrder& order);

}  // namespace pci
