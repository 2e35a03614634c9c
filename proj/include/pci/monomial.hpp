#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace pci {

/// Most variables any ring in this library may have, counting the
/// auxiliary variables adjoined for elimination.
inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector of length nvars. Exponents may be negative; only Laurent
/// polynomials use that.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<int> exponents);
  explicit Monomial(std::span<const int> exponents);

  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1);

  std::size_t size() const { return nvars_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, int value);
  long total_degree() const { return degree_; }
  bool is_one() const;
  bool has_negative_exponent() const;
  std::vector<int> to_vector() const;

  /// Componentwise comparison: every exponent of this <= other's.
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Componentwise difference (no divisibility check).
  Monomial operator/(const Monomial& other) const;
  Monomial scaled(int factor) const;
  Monomial negated() const { return scaled(-1); }
  /// Appends zero exponents up to nvars.
  Monomial extended(std::size_t nvars) const;
  /// Drops trailing variables.
  Monomial truncated(std::size_t nvars) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.exps_ == b.exps_;
  }
  /// Plain lexicographic comparison of the exponent arrays, used only as a
  /// canonical storage order.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

 private:
  std::array<int, kMaxVariables> exps_{};
  std::uint8_t nvars_ = 0;
  long degree_ = 0;
};

/// Monomial orders used by the Groebner engine.
///
/// Variables are compared through a priority list (most significant
/// first). The default priority makes the last variable the largest, so
/// x < y < z. An elimination order compares the first `block_size`
/// priority variables by degree-lex before the remaining ones.
class TermOrder {
 public:
  enum class Kind { kLex, kDegLex, kElimination };

  static TermOrder lex(std::size_t nvars);
  static TermOrder deglex(std::size_t nvars);
  /// Variables listed in `block` dominate every monomial free of them.
  static TermOrder elimination(std::size_t nvars, const std::vector<std::size_t>& block);
  static TermOrder with_priority(Kind kind, std::vector<std::size_t> priority, std::size_t block_size = 0);

  Kind kind() const { return kind_; }
  std::size_t nvars() const { return priority_.size(); }
  const std::vector<std::size_t>& priority() const { return priority_; }
  std::size_t block_size() const { return block_size_; }

  /// Three-way comparison of two monomials.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string name() const;
  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  TermOrder(Kind kind, std::vector<std::size_t> priority, std::size_t block_size)
      : kind_(kind), priority_(std::move(priority)), block_size_(block_size) {}

  int compare_lex(const Monomial& a, const Monomial& b, std::size_t from, std::size_t to) const;

  Kind kind_;
  std::vector<std::size_t> priority_;
  std::size_t block_size_ = 0;
};

}  // namespace pci
