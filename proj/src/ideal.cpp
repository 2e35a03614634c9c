#include "pci/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace pci {

namespace {

void check_ring(const MultiPoly& f, std::size_t nvars) {
  if (f.nvars() != nvars) throw std::invalid_argument("polynomial and ideal live in rings of different dimension");
}

void check_same_ring(const Ideal& a, const Ideal& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("ideals live in rings of different dimension");
  if (a.mode() != b.mode()) throw std::invalid_argument("cannot mix polynomial and Laurent ideals");
}

// The polynomial representative of f that generates the same Laurent ideal.
MultiPoly laurent_representative(const MultiPoly& f) {
  if (f.is_zero()) return MultiPoly(f.nvars());
  return laurent_normalize(f, TermOrder::deglex(f.nvars())).polynomial;
}

// Generators of the contraction, in polynomial mode.
std::vector<MultiPoly> contraction_generators(const Ideal& ideal, const GroebnerLimits& limits) {
  if (ideal.mode() == RingMode::kPolynomial) return ideal.generators();
  return laurent_saturate(ideal, limits).generators();
}

// Eliminates the last variable of an (n+1)-variable ring.
std::vector<MultiPoly> eliminate_last(const std::vector<MultiPoly>& generators, std::size_t n,
                                      const GroebnerLimits& limits) {
  GroebnerBasis basis = groebner(generators, TermOrder::elimination(n + 1, {n}), limits);
  std::vector<MultiPoly> out;
  for (const auto& g : basis.elements()) {
    if (!g.uses_variable(n)) out.push_back(g.truncated(n));
  }
  return out;
}

MultiPoly polynomial_form(const MultiPoly& f, const Ideal& ideal) {
  check_ring(f, ideal.nvars());
  if (ideal.mode() == RingMode::kLaurent) return laurent_representative(f);
  return f.with_mode(RingMode::kPolynomial);
}

}  // namespace

Ideal::Ideal(std::vector<MultiPoly> generators, std::size_t nvars, RingMode mode)
    : nvars_(nvars), mode_(mode) {
  for (auto& g : generators) {
    check_ring(g, nvars);
    if (g.is_zero()) continue;
    generators_.push_back(g.with_mode(mode));
  }
}

Ideal::Ideal(std::vector<MultiPoly> generators)
    : Ideal(generators, generators.empty() ? 0 : generators.front().nvars(),
            generators.empty() ? RingMode::kPolynomial : generators.front().mode()) {
  if (generators.empty()) throw std::invalid_argument("cannot infer the ring of an ideal without generators");
}

std::string Ideal::to_string(const std::vector<std::string>& names) const {
  std::string out = "(";
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    if (k > 0) out += ", ";
    out += generators_[k].to_string(names);
  }
  if (generators_.empty()) out += "0";
  return out + ")";
}

Ideal laurent_saturate(const Ideal& ideal, const GroebnerLimits& limits) {
  const std::size_t n = ideal.nvars();
  std::vector<MultiPoly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(laurent_representative(g).extended(n + 1));
  if (gens.empty()) return Ideal(n, RingMode::kPolynomial);
  Monomial all(n + 1);
  for (std::size_t i = 0; i <= n; ++i) all.set(i, 1);
  gens.push_back(MultiPoly::term(FieldElement(1), all) - MultiPoly::constant(n + 1, FieldElement(1)));
  return Ideal(eliminate_last(gens, n, limits), n, RingMode::kPolynomial);
}

Ideal polynomial_contraction(const Ideal& ideal, const GroebnerLimits& limits) {
  return Ideal(contraction_generators(ideal, limits), ideal.nvars(), RingMode::kPolynomial);
}

GroebnerBasis groebner(const Ideal& ideal, const TermOrder& order, const GroebnerLimits& limits) {
  auto gens = contraction_generators(ideal, limits);
  if (gens.empty()) return GroebnerBasis({}, order);
  return groebner(gens, order, limits);
}

GroebnerBasis groebner(const Ideal& ideal) { return groebner(ideal, TermOrder::deglex(ideal.nvars())); }

bool member(const MultiPoly& f, const Ideal& ideal, const TermOrder& order, const GroebnerLimits& limits) {
  MultiPoly p = polynomial_form(f, ideal);
  if (p.is_zero()) return true;
  return groebner(ideal, order, limits).contains(p);
}

bool member(const MultiPoly& f, const Ideal& ideal) { return member(f, ideal, TermOrder::deglex(ideal.nvars())); }

bool contains(const Ideal& ideal, const Ideal& sub) {
  check_same_ring(ideal, sub);
  GroebnerBasis basis = groebner(ideal);
  return std::all_of(sub.generators().begin(), sub.generators().end(),
                     [&](const MultiPoly& g) { return basis.contains(polynomial_form(g, ideal)); });
}

bool equal(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  return groebner(a) == groebner(b);
}

Ideal power_closure(const Ideal& ideal) {
  std::vector<MultiPoly> gens;
  for (const auto& f : ideal.generators()) {
    const auto count = static_cast<long>(lambda(f));
    for (long i = 1; i <= count; ++i) gens.push_back(power_substitute(f, i));
  }
  return Ideal(std::move(gens), ideal.nvars(), ideal.mode());
}

bool is_power_closed(const Ideal& ideal) {
  GroebnerBasis basis = groebner(ideal);
  for (const auto& f : ideal.generators()) {
    const auto count = static_cast<long>(lambda(f));
    for (long i = 2; i <= count; ++i) {
      if (!basis.contains(polynomial_form(power_substitute(f, i), ideal))) return false;
    }
  }
  return true;
}

Ideal sum(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  std::vector<MultiPoly> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(std::move(gens), a.nvars(), a.mode());
}

Ideal product(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  std::vector<MultiPoly> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g);
  }
  return Ideal(std::move(gens), a.nvars(), a.mode());
}

Ideal power(const Ideal& ideal, unsigned n) {
  Ideal out(std::vector<MultiPoly>{MultiPoly::constant(ideal.nvars(), FieldElement(1), ideal.mode())}, ideal.nvars(),
            ideal.mode());
  for (unsigned k = 0; k < n; ++k) out = product(out, ideal);
  return out;
}

Ideal intersect(const Ideal& a, const Ideal& b, const GroebnerLimits& limits) {
  check_same_ring(a, b);
  const std::size_t n = a.nvars();
  auto ga = contraction_generators(a, limits);
  auto gb = contraction_generators(b, limits);
  if (ga.empty() || gb.empty()) return Ideal(n, a.mode());
  MultiPoly t = MultiPoly::variable(n + 1, n);
  MultiPoly one_minus_t = MultiPoly::constant(n + 1, FieldElement(1)) - t;
  std::vector<MultiPoly> gens;
  for (const auto& f : ga) gens.push_back(t * f.extended(n + 1));
  for (const auto& g : gb) gens.push_back(one_minus_t * g.extended(n + 1));
  return Ideal(eliminate_last(gens, n, limits), n, a.mode());
}

bool bounded_power_interior(const Ideal& ideal, const MultiPoly& f, long bound) {
  if (bound < 1) throw std::invalid_argument("the bound must be at least 1");
  GroebnerBasis basis = groebner(ideal);
  for (long i = 1; i <= bound; ++i) {
    if (!basis.contains(polynomial_form(power_substitute(f, i), ideal))) return false;
  }
  return true;
}

bool radical_member(const MultiPoly& f, const Ideal& ideal) {
  const std::size_t n = ideal.nvars();
  MultiPoly p = polynomial_form(f, ideal);
  if (p.is_zero()) return true;
  std::vector<MultiPoly> gens;
  for (const auto& g : contraction_generators(ideal, {})) gens.push_back(g.extended(n + 1));
  gens.push_back(MultiPoly::variable(n + 1, n) * p.extended(n + 1) - MultiPoly::constant(n + 1, FieldElement(1)));
  return groebner(gens, TermOrder::deglex(n + 1)).is_unit();
}

std::vector<MultiPoly> gauss_jordan_generators(const MultiPoly& f) {
  const std::size_t count = lambda(f);
  std::vector<MultiPoly> monomials;
  std::vector<FieldElement> coeffs;
  for (const auto& [m, c] : f.terms()) {
    monomials.push_back(MultiPoly::term(FieldElement(1), m, f.mode()));
    coeffs.push_back(c);
  }
  std::vector<MultiPoly> out;
  for (std::size_t k = 0; k < count; ++k) {
    MultiPoly g(f.nvars(), f.mode());
    for (std::size_t i = k; i < count; ++i) {
      MultiPoly t = monomials[i] * coeffs[i];
      for (std::size_t j = 0; j < k; ++j) t = t * (monomials[i] - monomials[j]);
      g += t;
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace pci
