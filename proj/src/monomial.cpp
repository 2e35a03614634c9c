#include "pci/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pci {

namespace {

void check_size(std::size_t nvars) {
  if (nvars > kMaxVariables) {
    throw std::invalid_argument("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
}

}  // namespace

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) { check_size(nvars); }

Monomial::Monomial(std::initializer_list<int> exponents)
    : Monomial(std::span<const int>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const int> exponents) : nvars_(static_cast<std::uint8_t>(exponents.size())) {
  check_size(exponents.size());
  std::copy(exponents.begin(), exponents.end(), exps_.begin());
  degree_ = std::accumulate(exponents.begin(), exponents.end(), 0L);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, int power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, int value) {
  if (i >= nvars_) throw std::out_of_range("variable index out of range");
  degree_ += value - exps_[i];
  exps_[i] = value;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.begin() + nvars_, [](int e) { return e == 0; });
}

bool Monomial::has_negative_exponent() const {
  return std::any_of(exps_.begin(), exps_.begin() + nvars_, [](int e) { return e < 0; });
}

std::vector<int> Monomial::to_vector() const { return {exps_.begin(), exps_.begin() + nvars_}; }

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] > 0 && other.exps_[i] > 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < nvars_; ++i) r.exps_[i] += other.exps_[i];
  r.degree_ += other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < nvars_; ++i) r.exps_[i] -= other.exps_[i];
  r.degree_ -= other.degree_;
  return r;
}

Monomial Monomial::scaled(int factor) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < nvars_; ++i) r.exps_[i] *= factor;
  r.degree_ *= factor;
  return r;
}

Monomial Monomial::extended(std::size_t nvars) const {
  check_size(nvars);
  if (nvars < nvars_) throw std::invalid_argument("cannot extend to fewer variables");
  Monomial r = *this;
  r.nvars_ = static_cast<std::uint8_t>(nvars);
  return r;
}

Monomial Monomial::truncated(std::size_t nvars) const {
  if (nvars > nvars_) throw std::invalid_argument("cannot truncate to more variables");
  Monomial r(nvars);
  for (std::size_t i = 0; i < nvars; ++i) r.set(i, exps_[i]);
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  r.degree_ = std::accumulate(r.exps_.begin(), r.exps_.begin() + r.nvars_, 0L);
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  r.degree_ = std::accumulate(r.exps_.begin(), r.exps_.begin() + r.nvars_, 0L);
  return r;
}

TermOrder TermOrder::lex(std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  for (std::size_t i = 0; i < nvars; ++i) p[i] = nvars - 1 - i;
  return TermOrder(Kind::kLex, std::move(p), 0);
}

TermOrder TermOrder::deglex(std::size_t nvars) {
  TermOrder o = lex(nvars);
  o.kind_ = Kind::kDegLex;
  return o;
}

TermOrder TermOrder::elimination(std::size_t nvars, const std::vector<std::size_t>& block) {
  std::vector<std::size_t> p(block);
  for (std::size_t i = nvars; i-- > 0;) {
    if (std::find(block.begin(), block.end(), i) == block.end()) p.push_back(i);
  }
  return with_priority(Kind::kElimination, std::move(p), block.size());
}

TermOrder TermOrder::with_priority(Kind kind, std::vector<std::size_t> priority, std::size_t block_size) {
  std::vector<std::size_t> sorted = priority;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw std::invalid_argument("priority must be a permutation of the variables");
  }
  if (block_size > priority.size()) throw std::invalid_argument("elimination block larger than the ring");
  if (kind != Kind::kElimination) block_size = 0;
  return TermOrder(kind, std::move(priority), block_size);
}

int TermOrder::compare_lex(const Monomial& a, const Monomial& b, std::size_t from, std::size_t to) const {
  for (std::size_t k = from; k < to; ++k) {
    const std::size_t v = priority_[k];
    if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
  }
  return 0;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::kLex:
      return compare_lex(a, b, 0, priority_.size());
    case Kind::kDegLex:
      if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree() ? -1 : 1;
      return compare_lex(a, b, 0, priority_.size());
    case Kind::kElimination: {
      long da = 0;
      long db = 0;
      for (std::size_t k = 0; k < block_size_; ++k) {
        da += a[priority_[k]];
        db += b[priority_[k]];
      }
      if (da != db) return da < db ? -1 : 1;
      if (int c = compare_lex(a, b, 0, block_size_)) return c;
      long ra = a.total_degree() - da;
      long rb = b.total_degree() - db;
      if (ra != rb) return ra < rb ? -1 : 1;
      return compare_lex(a, b, block_size_, priority_.size());
    }
  }
  return 0;
}

std::string TermOrder::name() const {
  switch (kind_) {
    case Kind::kLex:
      return "lex";
    case Kind::kDegLex:
      return "deglex";
    case Kind::kElimination:
      return "elimination";
  }
  return "?";
}

}  // namespace pci
