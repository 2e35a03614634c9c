#include "pci/principal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "pci/powerpoly.hpp"

namespace pci {

namespace {

long mod(long a, long n) { return ((a % n) + n) % n; }

// Generator of the roots of unity inside Q(sqrt m), with its order.
std::optional<std::pair<FieldElement, long>> field_unity_generator(long radicand) {
  if (radicand == -1) return std::make_pair(FieldElement::sqrt(-1), 4L);
  if (radicand == -3) return std::make_pair(FieldElement(Rational(1, 2), Rational(1, 2), -3), 6L);
  return std::nullopt;
}

long coordinate_gcd(const Monomial& m) {
  long g = 0;
  for (std::size_t i = 0; i < m.size(); ++i) g = std::gcd(g, static_cast<long>(m[i]));
  return g;
}

Monomial positive_part(const Monomial& m) {
  Monomial out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] > 0) out.set(i, m[i]);
  }
  return out;
}

Monomial negative_part(const Monomial& m) { return positive_part(m.negated()); }

Monomial divide_exponents(const Monomial& m, long h) {
  Monomial out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out.set(i, static_cast<int>(m[i] / h));
  return out;
}

// Positive means x^{xi+} > x^{xi-}.
bool is_positive(const Monomial& xi, const TermOrder& order) {
  return order.less(negative_part(xi), positive_part(xi));
}

}  // namespace

std::string fraction_to_string(const Monomial& xi, const std::vector<std::string>& names) {
  Monomial num = positive_part(xi);
  Monomial den = negative_part(xi);
  std::string out = monomial_to_string(num, names);
  if (!den.is_one()) {
    std::string d = monomial_to_string(den, names);
    out += "/" + (den.total_degree() > 1 && d.find('*') != std::string::npos ? "(" + d + ")" : d);
  }
  return out;
}

namespace {

struct Group {
  Monomial eta;
  std::map<std::pair<long, long>, int> roots;
};

struct Collected {
  std::vector<Group> groups;
  // Non-root-of-unity factors, kept whole.
  std::vector<BinomialFactor> scalars;
};

void validate(const FactoredPrincipal& f) {
  if (f.monomial.size() != f.nvars) throw std::invalid_argument("unit monomial has the wrong number of variables");
  if (f.scalar.is_zero()) throw std::invalid_argument("the unit scalar must be nonzero");
  for (const auto& factor : f.factors) {
    if (factor.xi.size() != f.nvars) throw std::invalid_argument("factor has the wrong number of variables");
    if (factor.xi.is_one()) throw std::invalid_argument("factor (1 - rho) is a scalar, not a binomial");
    if (factor.multiplicity < 1) throw std::invalid_argument("factor multiplicities must be positive");
    if (factor.rho.kind == Root::Kind::kScalar && factor.rho.scalar.is_zero()) {
      throw std::invalid_argument("rho = 0 makes the factor a monomial; put it in the unit");
    }
    if (factor.rho.kind == Root::Kind::kScalar && factor.rho.order != 1) {
      throw std::invalid_argument("radical scalar roots cannot be classified");
    }
    if (factor.rho.is_root_of_unity() && factor.rho.order < 1) {
      throw std::invalid_argument("root of unity order must be positive");
    }
  }
}

Collected collect(const FactoredPrincipal& f, const TermOrder& order) {
  validate(f);
  Collected out;
  std::map<Monomial, std::size_t> group_index;
  for (const auto& factor : f.factors) {
    Root rho = factor.rho.kind == Root::Kind::kScalar ? Root::from_scalar(factor.rho.scalar) : factor.rho;
    if (rho.kind == Root::Kind::kScalar) {
      out.scalars.push_back({factor.xi, rho, factor.multiplicity});
      continue;
    }
    const long h = coordinate_gcd(factor.xi);
    Monomial eta = divide_exponents(factor.xi, h);
    std::vector<std::pair<long, long>> roots;
    std::vector<long> indices;
    if (rho.kind == Root::Kind::kAllPrimitive) {
      for (long k = 0; k < rho.order; ++k) {
        if (std::gcd(k, rho.order) == 1) indices.push_back(k);
      }
    } else {
      indices.push_back(mod(rho.index, rho.order));
    }
    for (long k : indices) {
      for (long j = 0; j < h; ++j) roots.emplace_back(rho.order * h, k + rho.order * j);
    }
    bool flip = !is_positive(eta, order);
    if (flip) eta = eta.negated();
    auto [it, inserted] = group_index.try_emplace(eta, out.groups.size());
    if (inserted) out.groups.push_back({eta, {}});
    Group& g = out.groups[it->second];
    for (auto [n, k] : roots) {
      Root r = Root::unity(n, flip ? -k : k).normalized();
      g.roots[{r.order, r.index}] += factor.multiplicity;
    }
  }
  return out;
}

CycExponents group_exponents(const Group& g, const std::vector<std::string>& names) {
  std::map<long, std::map<long, int>> by_order;
  for (const auto& [root, m] : g.roots) by_order[root.first][root.second] += m;
  CycExponents out;
  for (const auto& [n, indices] : by_order) {
    int m = indices.begin()->second;
    bool uniform = static_cast<long>(indices.size()) == euler_phi(n) &&
                   std::all_of(indices.begin(), indices.end(), [m](const auto& e) { return e.second == m; });
    if (!uniform) {
      throw std::invalid_argument("roots of order " + std::to_string(n) + " in the group of " +
                                  fraction_to_string(g.eta, names) +
                                  " do not carry equal multiplicities over all primitive roots");
    }
    out[n] = m;
  }
  return out;
}

std::string powered_failure(const CycExponents& k) {
  for (auto [n, kn] : k) {
    for (long d : divisors(n)) {
      auto it = k.find(d);
      int kd = it == k.end() ? 0 : it->second;
      if (kd < kn) {
        return "phi_" + std::to_string(d) + " has multiplicity " + std::to_string(kd) + " below the " +
               std::to_string(kn) + " of phi_" + std::to_string(n);
      }
    }
  }
  return "";
}

MultiPoly homogenized(const UniPoly& g, const Monomial& eta, RingMode mode) {
  const std::size_t n = eta.size();
  Monomial plus = positive_part(eta);
  Monomial minus = negative_part(eta);
  const long deg = g.degree();
  MultiPoly out(n, mode);
  for (long e = 0; e <= deg; ++e) {
    const FieldElement& c = g.coefficients()[static_cast<std::size_t>(e)];
    if (c.is_zero()) continue;
    out.add_term(plus.scaled(static_cast<int>(e)) * minus.scaled(static_cast<int>(deg - e)), c);
  }
  return out;
}

}  // namespace

Root Root::unity(long order, long index) {
  if (order < 1) throw std::invalid_argument("root of unity order must be positive");
  Root r;
  r.kind = Kind::kUnity;
  r.order = order;
  r.index = index;
  return r;
}

Root Root::all_primitive(long order) {
  Root r = unity(order, 0);
  r.kind = Kind::kAllPrimitive;
  return r;
}

Root Root::from_scalar(const FieldElement& c) {
  auto n = root_of_unity_order(c);
  if (!n) {
    Root r;
    r.kind = Kind::kScalar;
    r.scalar = c;
    return r;
  }
  if (*n == 1) return unity(1, 0);
  if (*n == 2) return unity(2, 1);
  auto generator = field_unity_generator(c.radicand());
  if (!generator) throw std::logic_error("unexpected root of unity");
  FieldElement power(1);
  for (long k = 0; k < generator->second; ++k) {
    if (power == c) return unity(generator->second, k).normalized();
    power *= generator->first;
  }
  throw std::logic_error("root of unity not generated");
}

Root Root::normalized() const {
  if (kind != Kind::kUnity) return *this;
  long k = mod(index, order);
  long g = std::gcd(k, order);
  if (k == 0) return unity(1, 0);
  return unity(order / g, k / g);
}

Root Root::inverse() const {
  switch (kind) {
    case Kind::kUnity:
      return unity(order, -index).normalized();
    case Kind::kAllPrimitive:
      return *this;
    case Kind::kScalar: {
      Root r = *this;
      r.scalar = scalar.inverse();
      r.index = mod(-index, order);
      return r;
    }
  }
  return *this;
}

bool operator==(const Root& a, const Root& b) {
  Root x = a.kind == Root::Kind::kScalar && a.order == 1 ? Root::from_scalar(a.scalar) : a.normalized();
  Root y = b.kind == Root::Kind::kScalar && b.order == 1 ? Root::from_scalar(b.scalar) : b.normalized();
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case Root::Kind::kUnity:
      return x.order == y.order && x.index == y.index;
    case Root::Kind::kAllPrimitive:
      return x.order == y.order;
    case Root::Kind::kScalar:
      return x.scalar == y.scalar && x.order == y.order && x.index == y.index;
  }
  return false;
}

std::string Root::to_string() const {
  switch (kind) {
    case Kind::kUnity: {
      Root r = normalized();
      if (r.order == 1) return "1";
      if (r.order == 2) return "-1";
      return "zeta(" + std::to_string(r.order) + "," + std::to_string(r.index) + ")";
    }
    case Kind::kAllPrimitive:
      return "zeta(" + std::to_string(order) + ",*)";
    case Kind::kScalar: {
      std::string s = scalar.is_compound() || (order > 1 && sgn(scalar.rational_part()) < 0)
                          ? "(" + scalar.to_string() + ")"
                          : scalar.to_string();
      if (order == 1) return s;
      s += "^(1/" + std::to_string(order) + ")";
      if (index != 0) s += "*zeta(" + std::to_string(order) + "," + std::to_string(index) + ")";
      return s;
    }
  }
  return "?";
}

bool is_primitive_pair(const std::vector<int>& p, const std::vector<int>& q) {
  if (p.size() != q.size()) throw std::invalid_argument("exponent vectors must have equal length");
  long g = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != 0 && q[i] != 0) return false;
    g = std::gcd(g, static_cast<long>(p[i]));
    g = std::gcd(g, static_cast<long>(q[i]));
  }
  return g == 1;
}

bool binomial_irreducible(const MultiPoly& b) {
  if (b.size() != 2) throw std::invalid_argument("expected a binomial");
  auto first = b.terms().begin();
  return coordinate_gcd(first->first / std::next(first)->first) == 1;
}

BinomialFactorization binomial_factor(const MultiPoly& b, const TermOrder& order) {
  if (b.size() != 2) throw std::invalid_argument("expected a binomial");
  std::pair<Monomial, FieldElement> t1 = *b.terms().begin();
  std::pair<Monomial, FieldElement> t2 = *std::next(b.terms().begin());
  BinomialFactorization out;
  out.content = gcd(t1.first, t2.first);
  Monomial m1 = t1.first / out.content;
  Monomial m2 = t2.first / out.content;
  if (order.less(m1, m2)) {
    std::swap(m1, m2);
    std::swap(t1, t2);
  }
  out.scalar = t1.second;
  out.rho = -(t2.second / t1.second);
  out.h = coordinate_gcd(m1 / m2);
  out.q = divide_exponents(m1, out.h).to_vector();
  out.p = divide_exponents(m2, out.h).to_vector();
  Root rho = Root::from_scalar(out.rho);
  for (long j = 0; j < out.h; ++j) {
    if (rho.kind == Root::Kind::kUnity) {
      out.roots.push_back(Root::unity(rho.order * out.h, rho.index + rho.order * j).normalized());
    } else {
      Root r = rho;
      r.order = out.h;
      r.index = j;
      out.roots.push_back(r);
    }
  }
  return out;
}

std::string BinomialFactorization::to_string(const std::vector<std::string>& names) const {
  Monomial q_mono(std::span<const int>(q.data(), q.size()));
  Monomial p_mono(std::span<const int>(p.data(), p.size()));
  std::string out;
  if (scalar == FieldElement(-1)) {
    out += "-";
  } else if (!scalar.is_one()) {
    out += (scalar.is_compound() ? "(" + scalar.to_string() + ")" : scalar.to_string()) + "*";
  }
  if (!content.is_one()) out += monomial_to_string(content, names) + "*";
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (k > 0) out += "*";
    const std::string root = roots[k].to_string();
    const std::string lower = p_mono.is_one() ? "" : monomial_to_string(p_mono, names);
    out += "(" + monomial_to_string(q_mono, names);
    if (root == "1" || root == "-1") {
      out += (root == "1" ? " - " : " + ") + (lower.empty() ? "1" : lower);
    } else {
      out += " - " + root + (lower.empty() ? "" : "*" + lower);
    }
    out += ")";
  }
  return out;
}

bool associates(const BinomialFactor& a, const BinomialFactor& b) {
  if (a.xi == b.xi && a.rho == b.rho) return true;
  return a.xi == b.xi.negated() && a.rho == b.rho.inverse();
}

std::string FactoredPrincipal::to_string(const std::vector<std::string>& names) const {
  std::string out;
  if (!scalar.is_one()) out += scalar.is_compound() ? "(" + scalar.to_string() + ")" : scalar.to_string();
  if (!monomial.is_one()) {
    if (!out.empty()) out += "*";
    out += monomial_to_string(monomial, names);
  }
  for (const auto& factor : factors) {
    if (!out.empty()) out += "*";
    std::string root = factor.rho.to_string();
    out += "(" + fraction_to_string(factor.xi, names) +
           (root[0] == '-' && root.find_first_of("+(") == std::string::npos ? " + " + root.substr(1) : " - " + root) +
           ")";
    if (factor.multiplicity > 1) out += "^" + std::to_string(factor.multiplicity);
  }
  return out.empty() ? "1" : out;
}

Verdict classify_principal(const FactoredPrincipal& f, RingMode mode, const TermOrder& order) {
  if (mode == RingMode::kPolynomial && f.monomial.has_negative_exponent()) {
    throw std::invalid_argument("negative unit exponents need the Laurent ring");
  }
  const auto names = default_variable_names(f.nvars);
  Collected c = collect(f, order);
  Verdict v;
  v.order_name = order.name();
  for (const auto& g : c.groups) {
    GroupSummary s{g.eta, group_exponents(g, names), false};
    s.powered = is_powered(cyclotomic_product(s.exponents));
    if (!s.powered && v.witness.empty()) {
      v.witness = "group in " + fraction_to_string(g.eta, names) + " is not powered: " + powered_failure(s.exponents);
    }
    v.groups.push_back(std::move(s));
  }
  if (!c.scalars.empty()) {
    const auto& bad = c.scalars.front();
    v.witness = "rho = " + bad.rho.to_string() + " in the factor of " + fraction_to_string(bad.xi, names) +
                " is not a root of unity";
  }
  v.power_closed = v.witness.empty();
  return v;
}

MultiPoly expand(const FactoredPrincipal& f, RingMode mode, const TermOrder& order) {
  if (mode == RingMode::kPolynomial && f.monomial.has_negative_exponent()) {
    throw std::invalid_argument("negative unit exponents need the Laurent ring");
  }
  const auto names = default_variable_names(f.nvars);
  Collected c = collect(f, order);
  MultiPoly out = MultiPoly::term(f.scalar, f.monomial, mode);
  for (const auto& g : c.groups) {
    out = out * homogenized(cyclotomic_product(group_exponents(g, names)), g.eta, mode);
  }
  for (const auto& s : c.scalars) {
    MultiPoly b = MultiPoly::term(FieldElement(1), positive_part(s.xi), mode) -
                  MultiPoly::term(s.rho.scalar, negative_part(s.xi), mode);
    out = out * b.pow(static_cast<unsigned>(s.multiplicity));
  }
  return out;
}

MultiPoly divisibility_witness(const MultiPoly& f, RingMode mode, const TermOrder& order) {
  if (f.is_zero()) throw std::invalid_argument("the zero polynomial has no terms");
  std::vector<Monomial> monomials;
  for (const auto& [m, c] : f.terms()) monomials.push_back(m);
  std::sort(monomials.begin(), monomials.end(), [&order](const Monomial& a, const Monomial& b) {
    return order.less(a, b);
  });
  const Monomial& top = monomials.back();
  MultiPoly lead = MultiPoly::term(FieldElement(1), top, mode);
  MultiPoly out = mode == RingMode::kPolynomial ? lead : MultiPoly::constant(f.nvars(), FieldElement(1), mode);
  for (std::size_t i = 0; i + 1 < monomials.size(); ++i) {
    out = out * (lead - MultiPoly::term(FieldElement(1), monomials[i], mode));
  }
  return out;
}

bool satisfies_divisibility_bound(const MultiPoly& f, RingMode mode, const TermOrder& order) {
  Ideal principal({f.with_mode(mode)}, f.nvars(), mode);
  return member(divisibility_witness(f, mode, order).with_mode(mode), principal, order);
}

}  // namespace pci
