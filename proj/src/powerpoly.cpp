#include "pci/powerpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pci {

namespace {

int exponent_of(const CycExponents& k, long n) {
  auto it = k.find(n);
  return it == k.end() ? 0 : it->second;
}

CycFactorization checked_factor(const UniPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("the zero polynomial is not allowed here");
  return factor_cyclotomic(f);
}

bool exponents_powered(const CycExponents& k) {
  for (auto [n, kn] : k) {
    for (long d : divisors(n)) {
      if (exponent_of(k, d) < kn) return false;
    }
  }
  return true;
}

std::string binomial_text(long n, const std::string& var) {
  std::string s = "(" + var;
  if (n > 1) s += "^" + std::to_string(n);
  return s + " - 1)";
}

}  // namespace

Antichain::Antichain(std::set<long> elements) : elements_(std::move(elements)) {
  for (long a : elements_) {
    if (a < 1) throw std::invalid_argument("antichain elements must be positive");
    for (long b : elements_) {
      if (a != b && b % a == 0) {
        throw std::invalid_argument(std::to_string(a) + " divides " + std::to_string(b) + ": not an antichain");
      }
    }
  }
}

Antichain Antichain::maximal_elements(const std::set<long>& elements) {
  std::set<long> maximal;
  for (long a : elements) {
    if (a < 1) throw std::invalid_argument("elements must be positive");
    bool dominated = std::any_of(elements.begin(), elements.end(), [a](long b) { return b != a && b % a == 0; });
    if (!dominated) maximal.insert(a);
  }
  return Antichain(std::move(maximal));
}

std::set<long> downset(const std::set<long>& elements) {
  std::set<long> out;
  for (long a : elements) {
    for (long d : divisors(a)) out.insert(d);
  }
  return out;
}

std::set<long> Antichain::downset() const { return pci::downset(elements_); }

bool Antichain::precedes_or_equals(const Antichain& other) const {
  return std::all_of(elements_.begin(), elements_.end(), [&other](long a) {
    return std::any_of(other.elements_.begin(), other.elements_.end(), [a](long b) { return b % a == 0; });
  });
}

std::string Antichain::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (long a : elements_) {
    if (!first) os << ",";
    os << a;
    first = false;
  }
  os << "}";
  return os.str();
}

CycExponents star_exponents(const CycExponents& k) {
  CycExponents out;
  for (auto [n, kn] : k) {
    int p = kn;
    for (long d : divisors(n)) p = std::min(p, exponent_of(k, d));
    if (p > 0) out[n] = p;
  }
  return out;
}

CycExponents circle_exponents(const CycExponents& k) {
  std::set<long> support;
  for (auto [n, kn] : k) support.insert(n);
  CycExponents out;
  for (long n : downset(support)) {
    int q = 0;
    for (auto [m, km] : k) {
      if (m % n == 0) q = std::max(q, km);
    }
    out[n] = q;
  }
  return out;
}

bool is_powered(const UniPoly& f) {
  CycFactorization fac = checked_factor(f);
  return fac.residual.is_constant() && exponents_powered(fac.exponents);
}

UniPoly star(const UniPoly& f) {
  CycFactorization fac = checked_factor(f);
  return cyclotomic_product(star_exponents(fac.exponents), fac.x_valuation);
}

std::optional<UniPoly> circle(const UniPoly& f) {
  CycFactorization fac = checked_factor(f);
  if (!fac.residual.is_constant()) return std::nullopt;
  return cyclotomic_product(circle_exponents(fac.exponents), fac.x_valuation);
}

UniPoly psi_poly(const std::set<long>& elements) {
  if (elements.empty()) throw std::invalid_argument("psi polynomial of an empty set");
  UniPoly result{1};
  const Antichain maximal = Antichain::maximal_elements(elements);
  for (long a : maximal.elements()) {
    result = lcm(result, UniPoly::binomial(static_cast<std::size_t>(a)));
  }
  return result;
}

BinomialQuotient psi_inclusion_exclusion(const std::set<long>& elements) {
  if (elements.empty()) throw std::invalid_argument("psi polynomial of an empty set");
  const Antichain antichain = Antichain::maximal_elements(elements);
  const auto& maximal = antichain.elements();
  std::vector<long> n(maximal.begin(), maximal.end());
  if (n.size() > 20) throw std::invalid_argument("antichain too large for inclusion-exclusion");
  BinomialQuotient q;
  for (unsigned long mask = 1; mask < (1ul << n.size()); ++mask) {
    long g = 0;
    int size = 0;
    for (std::size_t j = 0; j < n.size(); ++j) {
      if (mask & (1ul << j)) {
        g = std::gcd(g, n[j]);
        ++size;
      }
    }
    q[g] += (size % 2 == 1) ? 1 : -1;
  }
  std::erase_if(q, [](const auto& entry) { return entry.second == 0; });
  return q;
}

UniPoly evaluate_binomial_quotient(const BinomialQuotient& q) {
  UniPoly numerator{1};
  for (auto [n, e] : q) {
    if (e > 0) numerator *= UniPoly::binomial(static_cast<std::size_t>(n)).pow(static_cast<unsigned>(e));
  }
  for (auto [n, e] : q) {
    for (int i = 0; i < -e; ++i) numerator = exact_quotient(numerator, UniPoly::binomial(static_cast<std::size_t>(n)));
  }
  return numerator;
}

std::string binomial_quotient_string(const BinomialQuotient& q, const std::string& var) {
  auto side = [&](bool numerator, int& count) {
    std::string out;
    count = 0;
    for (auto it = q.rbegin(); it != q.rend(); ++it) {
      int e = numerator ? it->second : -it->second;
      if (e <= 0) continue;
      if (!out.empty()) out += "*";
      out += binomial_text(it->first, var);
      if (e > 1) out += "^" + std::to_string(e);
      ++count;
    }
    return out;
  };
  int num_count = 0;
  int den_count = 0;
  std::string num = side(true, num_count);
  std::string den = side(false, den_count);
  if (num.empty()) num = "1";
  if (den.empty()) return num;
  return num + " / " + (den_count > 1 ? "(" + den + ")" : den);
}

UniPoly PsiDecomposition::reconstruct() const {
  UniPoly result = UniPoly::monomial(unit, monomial_valuation);
  for (const auto& factor : factors) {
    result *= psi_poly(factor.antichain.elements()).pow(static_cast<unsigned>(factor.exponent));
  }
  return result;
}

std::string PsiDecomposition::chain_string() const {
  std::ostringstream os;
  bool first = true;
  auto sep = [&]() {
    if (!first) os << " * ";
    first = false;
  };
  if (!unit.is_one()) {
    sep();
    os << (unit.is_compound() ? "(" + unit.to_string() + ")" : unit.to_string());
  }
  if (monomial_valuation > 0) {
    sep();
    os << "x";
    if (monomial_valuation > 1) os << "^" << monomial_valuation;
  }
  for (const auto& factor : factors) {
    sep();
    os << "psi" << factor.antichain.to_string();
    if (factor.exponent > 1) os << "^" << factor.exponent;
  }
  if (first) os << "1";
  return os.str();
}

std::string PsiDecomposition::binomial_string(const std::string& var) const {
  BinomialQuotient total;
  for (const auto& factor : factors) {
    for (auto [n, e] : psi_inclusion_exclusion(factor.antichain.elements())) total[n] += e * factor.exponent;
  }
  std::erase_if(total, [](const auto& entry) { return entry.second == 0; });
  std::string body = binomial_quotient_string(total, var);
  std::string prefix;
  if (!unit.is_one()) prefix += (unit.is_compound() ? "(" + unit.to_string() + ")" : unit.to_string()) + "*";
  if (monomial_valuation > 0) {
    prefix += var;
    if (monomial_valuation > 1) prefix += "^" + std::to_string(monomial_valuation);
    prefix += "*";
  }
  return prefix + body;
}

PsiDecomposition psi_decompose(const UniPoly& f) {
  CycFactorization fac = checked_factor(f);
  if (!fac.residual.is_constant() || !exponents_powered(fac.exponents)) {
    throw std::invalid_argument("psi decomposition requires a powered polynomial");
  }
  PsiDecomposition out;
  out.unit = fac.unit;
  out.monomial_valuation = fac.x_valuation;
  std::set<int> levels;
  for (auto [n, k] : fac.exponents) levels.insert(k);
  int previous = 0;
  for (int alpha : levels) {
    std::set<long> level_set;
    for (auto [n, k] : fac.exponents) {
      if (k >= alpha) level_set.insert(n);
    }
    out.factors.push_back({Antichain::maximal_elements(level_set), alpha - previous});
    previous = alpha;
  }
  return out;
}

std::set<long> downset_bound(const UniPoly& f, DownsetMode mode) {
  CycFactorization fac = checked_factor(f);
  std::set<long> support;
  for (auto [n, k] : fac.exponents) support.insert(n);
  if (mode == DownsetMode::kCircle) return downset(support);
  std::set<long> out;
  for (long n : support) {
    auto ds = divisors(n);
    if (std::all_of(ds.begin(), ds.end(), [&support](long d) { return support.count(d) > 0; })) out.insert(n);
  }
  return out;
}

}  // namespace pci
