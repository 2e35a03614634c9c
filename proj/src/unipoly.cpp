#include "pci/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace pci {

UniPoly::UniPoly(std::vector<FieldElement> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly::UniPoly(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

UniPoly::UniPoly(FieldElement constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

UniPoly UniPoly::monomial(FieldElement coefficient, std::size_t degree) {
  if (coefficient.is_zero()) return {};
  std::vector<FieldElement> c(degree + 1);
  c[degree] = std::move(coefficient);
  return UniPoly(std::move(c));
}

UniPoly UniPoly::binomial(std::size_t n) {
  std::vector<FieldElement> c(n + 1);
  c[n] = FieldElement(1);
  c[0] -= FieldElement(1);
  return UniPoly(std::move(c));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool UniPoly::has_rational_coefficients() const {
  for (const auto& c : coeffs_) {
    if (!c.is_rational()) return false;
  }
  return true;
}

const FieldElement& UniPoly::leading_coefficient() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

FieldElement UniPoly::operator[](std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : FieldElement();
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<FieldElement> c(f.coeffs_.size() + g.coeffs_.size() - 1);
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
    if (f.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
      if (g.coeffs_[j].is_zero()) continue;
      c[i + j] += f.coeffs_[i] * g.coeffs_[j];
    }
  }
  return UniPoly(std::move(c));
}

UniPoly& UniPoly::operator*=(const UniPoly& other) { return *this = *this * other; }

UniPoly& UniPoly::operator*=(const FieldElement& scalar) {
  if (scalar.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly UniPoly::pow(unsigned exponent) const {
  UniPoly result{1};
  UniPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base *= base;
  }
  return result;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<FieldElement> c(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) c[k - 1] = coeffs_[k] * FieldElement(static_cast<long>(k));
  return UniPoly(std::move(c));
}

UniPoly UniPoly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return *this * leading_coefficient().inverse();
}

FieldElement UniPoly::evaluate(const FieldElement& at) const {
  FieldElement acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

std::size_t UniPoly::x_valuation() const {
  std::size_t v = 0;
  while (v < coeffs_.size() && coeffs_[v].is_zero()) ++v;
  return v;
}

UniPoly UniPoly::shift_down(std::size_t k) const {
  if (k > x_valuation() || (is_zero() && k > 0)) throw std::domain_error("x^k does not divide polynomial");
  if (is_zero()) return {};
  return UniPoly(std::vector<FieldElement>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
}

UniPoly UniPoly::shift_up(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<FieldElement> c(k);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return UniPoly(std::move(c));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const FieldElement& c = coeffs_[k];
    if (c.is_zero()) continue;
    FieldElement magnitude = c;
    bool negative = false;
    if (!c.is_compound()) {
      negative = c.is_rational() ? sgn(c.rational_part()) < 0 : sgn(c.irrational_part()) < 0;
      if (negative) magnitude = -c;
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string coeff = magnitude.is_compound() ? "(" + magnitude.to_string() + ")" : magnitude.to_string();
    if (k == 0) {
      os << coeff;
      continue;
    }
    if (!magnitude.is_one()) os << coeff << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const UniPoly& f) { return os << f.to_string(); }

DivRem divrem(const UniPoly& f, const UniPoly& g) {
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (f.degree() < g.degree()) return {UniPoly(), f};
  std::vector<FieldElement> rem = f.coefficients();
  const auto& gc = g.coefficients();
  const std::size_t dg = gc.size() - 1;
  const bool monic = g.is_monic();
  const FieldElement lead_inv = monic ? FieldElement(1) : gc.back().inverse();
  std::vector<FieldElement> quot(rem.size() - dg);
  for (std::size_t k = rem.size(); k-- > dg;) {
    if (rem[k].is_zero()) continue;
    FieldElement q = monic ? rem[k] : rem[k] * lead_inv;
    const std::size_t shift = k - dg;
    for (std::size_t j = 0; j < dg; ++j) {
      if (!gc[j].is_zero()) rem[shift + j] -= q * gc[j];
    }
    rem[k] = FieldElement();
    quot[shift] = std::move(q);
  }
  rem.resize(dg);
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly operator%(const UniPoly& f, const UniPoly& g) { return divrem(f, g).remainder; }

UniPoly exact_quotient(const UniPoly& f, const UniPoly& g) {
  auto [q, r] = divrem(f, g);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

UniPoly power_substitute(const UniPoly& f, long i) {
  if (i < 1) throw std::invalid_argument("power substitution index must be >= 1");
  if (f.is_zero() || i == 1) return f;
  const auto& c = f.coefficients();
  std::vector<FieldElement> out((c.size() - 1) * static_cast<std::size_t>(i) + 1);
  for (std::size_t k = 0; k < c.size(); ++k) out[k * static_cast<std::size_t>(i)] = c[k];
  return UniPoly(std::move(out));
}

UniPoly gcd(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
  UniPoly a = f.monic();
  UniPoly b = g.monic();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    UniPoly r = (a % b).monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

UniPoly lcm(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  return exact_quotient(f.monic() * g.monic(), gcd(f, g));
}

bool divides(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero()) throw std::invalid_argument("divisibility by the zero polynomial");
  return (g % f).is_zero();
}

}  // namespace pci
