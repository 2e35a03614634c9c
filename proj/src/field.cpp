#include "pci/field.hpp"

#include <sstream>

namespace pci {

namespace {

long merge_radicand(long m1, long m2) {
  if (m1 == 0) return m2;
  if (m2 == 0 || m1 == m2) return m1;
  throw FieldMismatch("cannot combine sqrt(" + std::to_string(m1) + ") and sqrt(" +
                      std::to_string(m2) + ")");
}

}  // namespace

bool is_squarefree(long value) {
  if (value == 0) return false;
  unsigned long n = value < 0 ? -static_cast<unsigned long>(value) : value;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
    if (n % p == 0) n /= p;
  }
  return true;
}

SquarefreeSplit squarefree_split(long value) {
  if (value == 0) return {Integer(0), 0};
  long sign = value < 0 ? -1 : 1;
  unsigned long n = value < 0 ? -static_cast<unsigned long>(value) : value;
  unsigned long square = 1;
  unsigned long core = 1;
  for (unsigned long p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) square *= p;
    if (e % 2) core *= p;
  }
  core *= n;
  return {Integer(square), sign * static_cast<long>(core)};
}

FieldElement::FieldElement(Rational a, Rational b, long m) : a_(std::move(a)), b_(std::move(b)), m_(m) {
  a_.canonicalize();
  b_.canonicalize();
  if (m_ != 0 && (m_ == 1 || !is_squarefree(m_))) {
    throw std::invalid_argument("radicand must be squarefree and different from 0, 1");
  }
  if (m_ == 0 && sgn(b_) != 0) throw std::invalid_argument("irrational part without radicand");
  normalize();
}

FieldElement FieldElement::sqrt(long m) { return FieldElement(Rational(0), Rational(1), m); }

void FieldElement::normalize() {
  if (m_ != 0 && sgn(b_) == 0) m_ = 0;
}

FieldElement& FieldElement::operator+=(const FieldElement& other) {
  if (other.m_ == 0) {
    a_ += other.a_;
    return *this;
  }
  m_ = merge_radicand(m_, other.m_);
  a_ += other.a_;
  b_ += other.b_;
  normalize();
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& other) {
  if (other.m_ == 0) {
    a_ -= other.a_;
    return *this;
  }
  m_ = merge_radicand(m_, other.m_);
  a_ -= other.a_;
  b_ -= other.b_;
  normalize();
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& other) {
  if (other.m_ == 0) {
    a_ *= other.a_;
    if (m_ != 0) {
      b_ *= other.a_;
      normalize();
    }
    return *this;
  }
  if (m_ == 0) {
    b_ = a_ * other.b_;
    a_ *= other.a_;
    m_ = other.m_;
    normalize();
    return *this;
  }
  m_ = merge_radicand(m_, other.m_);
  Rational a = a_ * other.a_ + b_ * other.b_ * m_;
  Rational b = a_ * other.b_ + b_ * other.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  normalize();
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& other) {
  if (other.is_zero()) throw std::domain_error("division by zero");
  if (other.m_ == 0) {
    a_ /= other.a_;
    if (m_ != 0) b_ /= other.a_;
    return *this;
  }
  return *this *= other.inverse();
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Rational FieldElement::norm() const { return a_ * a_ - b_ * b_ * m_; }

FieldElement FieldElement::conjugate() const {
  FieldElement r = *this;
  r.b_ = -r.b_;
  return r;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (m_ == 0) {
    FieldElement r;
    r.a_ = 1 / a_;
    return r;
  }
  // m is not a perfect square, so the norm of a nonzero element is nonzero.
  Rational n = norm();
  FieldElement r;
  r.a_ = a_ / n;
  r.b_ = -b_ / n;
  r.m_ = m_;
  return r;
}

FieldElement FieldElement::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  FieldElement result(1);
  FieldElement base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string FieldElement::to_string() const {
  if (m_ == 0) return a_.get_str();
  std::ostringstream os;
  std::string radical = "sqrt(" + std::to_string(m_) + ")";
  bool has_a = sgn(a_) != 0;
  if (has_a) os << a_.get_str();
  Rational b_abs = abs(b_);
  if (has_a) {
    os << (sgn(b_) < 0 ? " - " : " + ");
  } else if (sgn(b_) < 0) {
    os << "-";
  }
  if (b_abs != 1) os << b_abs.get_str() << "*";
  os << radical;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

std::optional<int> root_of_unity_order(const FieldElement& x) {
  // Roots of unity in Q or Q(sqrt(m)) have order 1, 2, 3, 4 or 6.
  if (x.is_zero()) return std::nullopt;
  FieldElement power = x;
  for (int n = 1; n <= 6; ++n) {
    if (power.is_one()) return n;
    power *= x;
  }
  return std::nullopt;
}

}  // namespace pci
