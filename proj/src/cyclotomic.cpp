#include "pci/cyclotomic.hpp"

#include <cstdint>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace pci {

namespace {

std::vector<std::pair<long, int>> factorize(long n) {
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

void require_positive(long n) {
  if (n < 1) throw std::invalid_argument("index must be a positive integer");
}

// Arithmetic modulo the Mersenne prime 2^61 - 1, used to reject trial
// divisors before doing the exact division.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(z & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(z >> 61);
  std::uint64_t s = lo + hi;
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul_mod(r, a);
    a = mul_mod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce_integer(const Integer& z) {
  Integer r = z % Integer(static_cast<unsigned long>(kPrime));
  if (sgn(r) < 0) r += Integer(static_cast<unsigned long>(kPrime));
  return r.get_ui();
}

std::optional<std::vector<std::uint64_t>> reduce_mod_prime(const UniPoly& f) {
  std::vector<std::uint64_t> out;
  out.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) {
    const Rational& q = c.rational_part();
    std::uint64_t den = reduce_integer(q.get_den());
    if (den == 0) return std::nullopt;
    out.push_back(mul_mod(reduce_integer(q.get_num()), pow_mod(den, kPrime - 2)));
  }
  return out;
}

// Remainder of f modulo a monic integer polynomial g, both reduced mod p.
bool divides_mod_prime(std::vector<std::uint64_t> f, const std::vector<std::uint64_t>& g) {
  const std::size_t dg = g.size() - 1;
  for (std::size_t k = f.size(); k-- > dg;) {
    std::uint64_t q = f[k];
    if (q == 0) continue;
    const std::size_t shift = k - dg;
    for (std::size_t j = 0; j < dg; ++j) {
      std::uint64_t t = mul_mod(q, g[j]);
      f[shift + j] = f[shift + j] >= t ? f[shift + j] - t : f[shift + j] + kPrime - t;
    }
    f[k] = 0;
  }
  for (std::size_t j = 0; j < dg && j < f.size(); ++j) {
    if (f[j] != 0) return false;
  }
  return true;
}

struct CyclotomicCache {
  std::mutex mutex;
  std::map<long, UniPoly> exact;
  std::map<long, std::vector<std::uint64_t>> modular;
};

CyclotomicCache& cache() {
  static CyclotomicCache instance;
  return instance;
}

UniPoly compute_cyclotomic(long n) {
  UniPoly numerator{1};
  std::vector<long> denominators;
  for (long d : divisors(n)) {
    int mu = mobius(n / d);
    if (mu == 1) numerator *= UniPoly::binomial(static_cast<std::size_t>(d));
    if (mu == -1) denominators.push_back(d);
  }
  for (long d : denominators) numerator = exact_quotient(numerator, UniPoly::binomial(static_cast<std::size_t>(d)));
  return numerator;
}

const std::vector<std::uint64_t>& cyclotomic_mod_prime(long n) {
  const UniPoly& phi = cyclotomic_poly(n);
  auto& c = cache();
  std::lock_guard<std::mutex> lock(c.mutex);
  auto it = c.modular.find(n);
  if (it == c.modular.end()) it = c.modular.emplace(n, *reduce_mod_prime(phi)).first;
  return it->second;
}

}  // namespace

int mobius(long n) {
  require_positive(n);
  int result = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    result = -result;
  }
  return result;
}

long euler_phi(long n) {
  require_positive(n);
  long result = n;
  for (auto [p, e] : factorize(n)) result = result / p * (p - 1);
  return result;
}

std::vector<long> divisors(long n) {
  require_positive(n);
  std::vector<long> small;
  std::vector<long> large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

const UniPoly& cyclotomic_poly(long n) {
  require_positive(n);
  auto& c = cache();
  {
    std::lock_guard<std::mutex> lock(c.mutex);
    auto it = c.exact.find(n);
    if (it != c.exact.end()) return it->second;
  }
  UniPoly phi = compute_cyclotomic(n);
  std::lock_guard<std::mutex> lock(c.mutex);
  // std::map never moves its nodes, so handing out references is safe.
  return c.exact.emplace(n, std::move(phi)).first->second;
}

UniPoly cyclotomic_product(const CycExponents& exponents, std::size_t x_valuation) {
  UniPoly result = UniPoly::monomial(FieldElement(1), x_valuation);
  for (auto [n, k] : exponents) {
    if (k < 0) throw std::invalid_argument("negative cyclotomic exponent");
    result *= cyclotomic_poly(n).pow(static_cast<unsigned>(k));
  }
  return result;
}

UniPoly CycFactorization::reconstruct() const {
  return cyclotomic_product(exponents, x_valuation) * residual * unit;
}

std::string CycFactorization::to_string(const std::string& var) const {
  std::vector<std::string> parts;
  if (x_valuation > 0) parts.push_back(var + (x_valuation > 1 ? "^" + std::to_string(x_valuation) : ""));
  for (auto it = exponents.rbegin(); it != exponents.rend(); ++it) {
    parts.push_back("phi_" + std::to_string(it->first) + (it->second > 1 ? "^" + std::to_string(it->second) : ""));
  }
  if (!residual.is_constant()) parts.push_back("[" + residual.to_string(var) + "]");
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "*") + p;
  if (unit.is_one()) return out.empty() ? "1" : out;
  if (unit == FieldElement(-1)) return "-" + (out.empty() ? "1" : out);
  std::string u = unit.is_compound() ? "(" + unit.to_string() + ")" : unit.to_string();
  return out.empty() ? u : u + "*" + out;
}

CycFactorization factor_cyclotomic(const UniPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
  if (!f.has_rational_coefficients()) {
    throw std::invalid_argument("cyclotomic factorization needs rational coefficients");
  }
  CycFactorization out;
  out.unit = f.leading_coefficient();
  out.x_valuation = f.x_valuation();
  UniPoly rest = f.monic().shift_down(out.x_valuation);
  const long initial_degree = rest.degree();
  // phi(n) >= sqrt(n / 2), so phi(n) <= deg forces n <= 2 deg^2.
  const long bound = 2 * initial_degree * initial_degree;
  for (long n = 1; n <= bound && rest.degree() > 0; ++n) {
    const long phi = euler_phi(n);
    if (phi > rest.degree()) continue;
    int k = 0;
    while (rest.degree() >= phi) {
      auto modular = reduce_mod_prime(rest);
      if (modular && !divides_mod_prime(*modular, cyclotomic_mod_prime(n))) break;
      auto [q, r] = divrem(rest, cyclotomic_poly(n));
      if (!r.is_zero()) break;
      rest = std::move(q);
      ++k;
    }
    if (k > 0) out.exponents[n] = k;
  }
  out.residual = std::move(rest);
  return out;
}

}  // namespace pci
