#include "pci/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pci {

std::string to_string(RingMode mode) { return mode == RingMode::kLaurent ? "laurent" : "poly"; }

MultiPoly::MultiPoly(std::size_t nvars, RingMode mode) : nvars_(nvars), mode_(mode) {
  if (nvars > kMaxVariables) throw std::invalid_argument("too many variables");
}

MultiPoly MultiPoly::constant(std::size_t nvars, const FieldElement& c, RingMode mode) {
  MultiPoly f(nvars, mode);
  f.add_term(Monomial(nvars), c);
  return f;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index, RingMode mode) {
  MultiPoly f(nvars, mode);
  f.add_term(Monomial::variable(nvars, index), FieldElement(1));
  return f;
}

MultiPoly MultiPoly::term(const FieldElement& c, const Monomial& m, RingMode mode) {
  MultiPoly f(m.size(), mode);
  f.add_term(m, c);
  return f;
}

MultiPoly MultiPoly::from_unipoly(const UniPoly& f, std::size_t nvars, std::size_t index, RingMode mode) {
  MultiPoly out(nvars, mode);
  const auto& c = f.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!c[k].is_zero()) out.add_term(Monomial::variable(nvars, index, static_cast<int>(k)), c[k]);
  }
  return out;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool MultiPoly::has_rational_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_rational(); });
}

long MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  long d = terms_.begin()->first.total_degree();
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

FieldElement MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? FieldElement() : it->second;
}

void MultiPoly::add_term(const Monomial& m, const FieldElement& c) {
  if (m.size() != nvars_) throw std::invalid_argument("monomial has the wrong number of variables");
  if (mode_ == RingMode::kPolynomial && m.has_negative_exponent()) {
    throw std::invalid_argument("negative exponent outside the Laurent ring");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& other) const {
  if (nvars_ != other.nvars_) throw std::invalid_argument("polynomials live in rings of different dimension");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  check_compatible(other);
  if (other.mode_ == RingMode::kLaurent) mode_ = RingMode::kLaurent;
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  check_compatible(other);
  if (other.mode_ == RingMode::kLaurent) mode_ = RingMode::kLaurent;
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const FieldElement& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& f, const MultiPoly& g) {
  f.check_compatible(g);
  MultiPoly out(f.nvars_, f.mode_ == RingMode::kLaurent || g.mode_ == RingMode::kLaurent ? RingMode::kLaurent
                                                                                          : RingMode::kPolynomial);
  for (const auto& [m1, c1] : f.terms_) {
    for (const auto& [m2, c2] : g.terms_) out.add_term(m1 * m2, c1 * c2);
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(nvars_, FieldElement(1), mode_);
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::times_monomial(const Monomial& m) const {
  MultiPoly out(nvars_, mode_);
  for (const auto& [mono, c] : terms_) out.terms_.emplace(mono * m, c);
  if (mode_ == RingMode::kPolynomial) {
    for (const auto& [mono, c] : out.terms_) {
      if (mono.has_negative_exponent()) throw std::invalid_argument("negative exponent outside the Laurent ring");
    }
  }
  return out;
}

std::pair<Monomial, FieldElement> MultiPoly::leading_term(const TermOrder& order) const {
  if (terms_.empty()) throw std::invalid_argument("the zero polynomial has no leading term");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it) {
    if (order.less(best->first, it->first)) best = it;
  }
  return *best;
}

MultiPoly MultiPoly::monic(const TermOrder& order) const {
  if (terms_.empty()) return *this;
  return *this * leading_term(order).second.inverse();
}

MultiPoly MultiPoly::with_mode(RingMode mode) const {
  MultiPoly out = *this;
  out.mode_ = mode;
  if (mode == RingMode::kPolynomial) {
    for (const auto& [m, c] : terms_) {
      if (m.has_negative_exponent()) throw std::invalid_argument("negative exponent outside the Laurent ring");
    }
  }
  return out;
}

MultiPoly MultiPoly::extended(std::size_t nvars) const {
  MultiPoly out(nvars, mode_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m.extended(nvars), c);
  return out;
}

MultiPoly MultiPoly::truncated(std::size_t nvars) const {
  MultiPoly out(nvars, mode_);
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = nvars; i < nvars_; ++i) {
      if (m[i] != 0) throw std::invalid_argument("cannot drop a variable that occurs");
    }
    out.terms_.emplace(m.truncated(nvars), c);
  }
  return out;
}

MultiPoly MultiPoly::renamed(const std::vector<std::size_t>& permutation, std::size_t nvars) const {
  if (permutation.size() != nvars_) throw std::invalid_argument("renaming must cover every variable");
  MultiPoly out(nvars, mode_);
  for (const auto& [m, c] : terms_) {
    Monomial r(nvars);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] != 0) r.set(permutation[i], r[permutation[i]] + m[i]);
    }
    out.add_term(r, c);
  }
  return out;
}

bool MultiPoly::uses_variable(std::size_t index) const {
  return std::any_of(terms_.begin(), terms_.end(), [index](const auto& t) { return t.first[index] != 0; });
}

UniPoly MultiPoly::substitute(const std::vector<UniPoly>& values) const {
  if (values.size() != nvars_) throw std::invalid_argument("one value per variable is required");
  UniPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.has_negative_exponent()) throw std::invalid_argument("cannot substitute into negative powers");
    UniPoly t(c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] > 0) t *= values[i].pow(static_cast<unsigned>(m[i]));
    }
    out += t;
  }
  return out;
}

FieldElement MultiPoly::evaluate(const std::vector<FieldElement>& point) const {
  if (point.size() != nvars_) throw std::invalid_argument("point has the wrong dimension");
  FieldElement out;
  for (const auto& [m, c] : terms_) {
    FieldElement t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] != 0) t *= point[i].pow(m[i]);
    }
    out += t;
  }
  return out;
}

UniPoly MultiPoly::to_unipoly() const {
  if (nvars_ != 1) throw std::invalid_argument("expected a polynomial in one variable");
  std::vector<FieldElement> c;
  for (const auto& [m, coeff] : terms_) {
    if (m[0] < 0) throw std::invalid_argument("negative exponent in a univariate polynomial");
    auto k = static_cast<std::size_t>(m[0]);
    if (c.size() <= k) c.resize(k + 1);
    c[k] = coeff;
  }
  return UniPoly(std::move(c));
}

namespace {

bool is_negative(const FieldElement& c) {
  if (c.is_rational()) return sgn(c.rational_part()) < 0;
  return sgn(c.rational_part()) == 0 && sgn(c.irrational_part()) < 0;
}

std::string monomial_text(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (m[i] != 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

}  // namespace

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (names.size() != nvars_) throw std::invalid_argument("one name per variable is required");
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, FieldElement>> sorted(terms_.begin(), terms_.end());
  TermOrder order = TermOrder::deglex(nvars_);
  std::sort(sorted.begin(), sorted.end(), [&order](const auto& a, const auto& b) { return order.less(b.first, a.first); });
  std::string out;
  for (const auto& [m, c] : sorted) {
    bool negative = is_negative(c);
    FieldElement a = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono = monomial_text(m, names);
    std::string coeff = a.is_compound() ? "(" + a.to_string() + ")" : a.to_string();
    if (mono.empty()) {
      out += coeff;
    } else if (a.is_one()) {
      out += mono;
    } else {
      out += coeff + "*" + mono;
    }
  }
  return out;
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string s = monomial_text(m, names);
  return s.empty() ? "1" : s;
}

std::string MultiPoly::to_string() const { return to_string(default_variable_names(nvars_)); }

std::ostream& operator<<(std::ostream& os, const MultiPoly& f) { return os << f.to_string(); }

std::vector<std::string> default_variable_names(std::size_t nvars) {
  static const char* kShort[] = {"x", "y", "z", "w"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) {
    names.push_back(nvars <= 4 ? std::string(kShort[i]) : "x" + std::to_string(i + 1));
  }
  return names;
}

MultiPoly power_substitute(const MultiPoly& f, long i) {
  if (i == 0) throw std::invalid_argument("power substitution index must be nonzero");
  if (i < 0 && f.mode() == RingMode::kPolynomial) {
    throw std::invalid_argument("negative power substitution needs the Laurent ring");
  }
  MultiPoly out(f.nvars(), f.mode());
  for (const auto& [m, c] : f.terms()) out.add_term(m.scaled(static_cast<int>(i)), c);
  return out;
}

MultiPoly elementary_symmetric(std::size_t d, std::size_t k) {
  MultiPoly out(d);
  if (k > d) return out;
  std::vector<bool> pick(d, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    Monomial m(d);
    for (std::size_t i = 0; i < d; ++i) {
      if (pick[i]) m.set(i, 1);
    }
    out.add_term(m, FieldElement(1));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

bool newton_power_identity_check(std::size_t d, long n, std::size_t l) {
  if (l < 1 || l > d) throw std::invalid_argument("variable index must lie in 1..d");
  if (n < static_cast<long>(d) + 1) throw std::invalid_argument("exponent must be at least d + 1");
  const std::size_t v = l - 1;
  MultiPoly lhs = MultiPoly::term(FieldElement(1), Monomial::variable(d, v, static_cast<int>(n)));
  MultiPoly rhs(d);
  for (std::size_t i = 0; i < d; ++i) {
    MultiPoly t = elementary_symmetric(d, i + 1).times_monomial(
        Monomial::variable(d, v, static_cast<int>(n - static_cast<long>(i) - 1)));
    if (i % 2 == 0) {
      rhs += t;
    } else {
      rhs -= t;
    }
  }
  return lhs == rhs;
}

std::size_t lambda(const MultiPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("lambda of the zero polynomial");
  return f.size();
}

LaurentNormal laurent_normalize(const MultiPoly& f, const TermOrder& order) {
  if (f.is_zero()) throw std::invalid_argument("cannot normalize the zero polynomial");
  Monomial shift = f.terms().begin()->first;
  for (const auto& [m, c] : f.terms()) shift = gcd(shift, m);
  MultiPoly shifted = f.with_mode(RingMode::kLaurent).times_monomial(shift.negated()).with_mode(RingMode::kPolynomial);
  FieldElement lc = shifted.leading_term(order).second;
  return {shifted * lc.inverse(), lc, shift};
}

}  // namespace pci
