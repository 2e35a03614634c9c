#pragma once

// Exact scalars in Q and in quadratic extensions Q(sqrt(m)).

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace pci {

using Rational = mpq_class;
using Integer = mpz_class;

/// Raised when two quadratic irrationals from different extensions meet.
class FieldMismatch : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// a + b*sqrt(m) with a, b rational and m squarefree, m != 0, 1.
///
/// A value whose irrational part vanishes is stored with radicand 0, so a
/// rational number has exactly one representation whichever extension it
/// was computed in. Two elements with nonzero irrational parts must share
/// the radicand; anything else throws FieldMismatch.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  FieldElement(Rational value) : a_(std::move(value)) {  // NOLINT
    a_.canonicalize();
  }
  FieldElement(Rational a, Rational b, long m);

  /// sqrt(m) for squarefree m (m != 0, 1).
  static FieldElement sqrt(long m);

  const Rational& rational_part() const { return a_; }
  const Rational& irrational_part() const { return b_; }
  /// Zero for rational values.
  long radicand() const { return m_; }

  bool is_zero() const { return m_ == 0 && sgn(a_) == 0; }
  bool is_one() const { return m_ == 0 && a_ == 1; }
  bool is_rational() const { return m_ == 0; }
  bool is_integer() const { return m_ == 0 && a_.get_den() == 1; }

  FieldElement& operator+=(const FieldElement& other);
  FieldElement& operator-=(const FieldElement& other);
  FieldElement& operator*=(const FieldElement& other);
  FieldElement& operator/=(const FieldElement& other);

  friend FieldElement operator+(FieldElement x, const FieldElement& y) { return x += y; }
  friend FieldElement operator-(FieldElement x, const FieldElement& y) { return x -= y; }
  friend FieldElement operator*(FieldElement x, const FieldElement& y) { return x *= y; }
  friend FieldElement operator/(FieldElement x, const FieldElement& y) { return x /= y; }
  FieldElement operator-() const;

  friend bool operator==(const FieldElement& x, const FieldElement& y) {
    return x.m_ == y.m_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  FieldElement inverse() const;
  FieldElement conjugate() const;
  /// a^2 - m b^2.
  Rational norm() const;
  FieldElement pow(long exponent) const;

  /// Text form accepted back by the expression parser.
  std::string to_string() const;
  /// True when to_string() needs parentheses as a coefficient.
  bool is_compound() const { return m_ != 0 && sgn(a_) != 0; }

 private:
  void normalize();

  Rational a_;
  Rational b_;
  long m_ = 0;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

/// Order n of x as a root of unity, if x^n = 1 for some n >= 1.
std::optional<int> root_of_unity_order(const FieldElement& x);

/// Squarefree decomposition value = square^2 * core, core squarefree
/// (sign carried by core).
struct SquarefreeSplit {
  Integer square;
  long core;
};
SquarefreeSplit squarefree_split(long value);

bool is_squarefree(long value);

}  // namespace pci
