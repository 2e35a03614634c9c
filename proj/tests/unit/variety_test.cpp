#include <gtest/gtest.h>

#include <complex>
#include <cmath>

#include "pci/ideal.hpp"
#include "pci/variety.hpp"
#include "test_support.hpp"

using namespace pci;
using pci::testing::P;
using pci::testing::uniform;

namespace {

std::vector<FieldElement> random_vector(std::size_t d) {
  std::vector<FieldElement> a;
  bool nonzero = false;
  while (!nonzero) {
    a.clear();
    for (std::size_t i = 0; i < d; ++i) {
      a.emplace_back(Rational(uniform(-3, 3)));
      nonzero = nonzero || !a.back().is_zero();
    }
  }
  return a;
}

std::vector<std::vector<std::size_t>> brute_zero_sum(const std::vector<FieldElement>& a) {
  std::vector<std::vector<std::size_t>> out;
  for (unsigned mask = 1; mask < (1u << a.size()); ++mask) {
    FieldElement s(0);
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (mask & (1u << i)) {
        s += a[i];
        subset.push_back(i);
      }
    }
    if (s.is_zero()) out.push_back(subset);
  }
  std::sort(out.begin(), out.end());
  return out;
}

MultiPoly linear_form(const std::vector<FieldElement>& a) {
  MultiPoly f(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) f.add_term(Monomial::variable(a.size(), i), a[i]);
  return f;
}

std::complex<double> eval_numeric(const MultiPoly& f, const std::vector<std::complex<double>>& p) {
  std::complex<double> acc = 0;
  for (const auto& [m, c] : f.terms()) {
    std::complex<double> t = c.rational_part().get_d();
    for (std::size_t i = 0; i < p.size(); ++i) t *= std::pow(p[i], m[i]);
    acc += t;
  }
  return acc;
}

}  // namespace

TEST(Variety, ZeroSumLinesMatchBruteForce) {
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_vector(static_cast<std::size_t>(uniform(1, 5)));
    auto lines = zero_sum_lines(a).subsets;
    std::sort(lines.begin(), lines.end());
    EXPECT_EQ(lines, brute_zero_sum(a));
  }
}

TEST(Variety, ClosureGeneratorsVanishOnLines) {
  for (int trial = 0; trial < 60; ++trial) {
    auto a = random_vector(static_cast<std::size_t>(uniform(1, 5)));
    MultiPoly f = linear_form(a);
    for (const auto& subset : zero_sum_lines(a).subsets) {
      for (long i = 1; i <= static_cast<long>(a.size()); ++i) {
        EXPECT_TRUE(vanishes_on_line(power_substitute(f, i), subset));
      }
    }
  }
  EXPECT_FALSE(vanishes_on_line(P("x + y"), {0}));
}

TEST(Variety, RadicalOfLinearClosureValidates) {
  for (int trial = 0; trial < 12; ++trial) {
    auto a = random_vector(static_cast<std::size_t>(uniform(1, 3)));
    RadicalResult r = radical_of_linear_closure(a);
    EXPECT_TRUE(r.contained_in_radical);
    EXPECT_TRUE(r.closure_in_components);
    EXPECT_TRUE(is_power_closed(r.radical));
  }
}

TEST(Variety, ComponentsOfAlternatingForm) {
  std::vector<FieldElement> a = {FieldElement(1), FieldElement(-1), FieldElement(1), FieldElement(-1)};
  std::string text;
  for (const auto& c : linear_closure_components(a)) text += (text.empty() ? "" : " ") + c.to_string();
  EXPECT_EQ(text, "{1,2}|{3,4} {1,4}|{2,3}");
  // The point (1, 1, 2, 2) lies on the first component; every f^(i) vanishes there.
  MultiPoly f = linear_form(a);
  std::vector<FieldElement> p = {FieldElement(1), FieldElement(1), FieldElement(2), FieldElement(2)};
  for (long i = 1; i <= 4; ++i) EXPECT_TRUE(power_substitute(f, i).evaluate(p).is_zero());
}

TEST(Variety, SingleBinomialSubgroupsHaveCorankOne) {
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t d = static_cast<std::size_t>(uniform(2, 4));
    Monomial p(d), q(d);
    for (std::size_t i = 0; i < d; ++i) (uniform(0, 1) ? p : q).set(i, static_cast<int>(uniform(0, 3)));
    if (p == q) continue;
    MultiPoly b = MultiPoly::term(FieldElement(1), p) - MultiPoly::term(FieldElement(1), q);
    IsoType t = subgroup_iso_type(torus_subgroup(b));
    EXPECT_EQ(t.torus_rank, d - 1);
    // The finite part is cyclic of order gcd(p - q).
    long g = 0;
    for (std::size_t i = 0; i < d; ++i) g = std::gcd(g, static_cast<long>(p[i] - q[i]));
    if (g > 1) {
      ASSERT_EQ(t.cyclic_invariants.size(), 1u);
      EXPECT_EQ(t.cyclic_invariants[0], g);
    } else {
      EXPECT_TRUE(t.cyclic_invariants.empty());
    }
  }
}

TEST(Variety, IrredundantUnion) {
  TorusSubgroup a = torus_subgroup(P("x - y"));
  TorusSubgroup b = torus_subgroup(P("x^2 - y^2"));
  auto u = irredundant_union({a, b, a});
  ASSERT_EQ(u.size(), 1u);
  EXPECT_EQ(u[0], b);
  EXPECT_TRUE(a.is_subgroup_of(b));
}

TEST(Variety, OrbitIdealVanishesNumerically) {
  const double pi = std::acos(-1.0);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t d = static_cast<std::size_t>(uniform(1, 2));
    std::vector<PointCoordinate> w;
    for (std::size_t i = 0; i < d; ++i) {
      if (uniform(0, 4) == 0) {
        w.push_back({true, 1, 0});
      } else {
        long n = uniform(1, 6);
        w.push_back({false, n, uniform(0, n - 1)});
      }
    }
    Ideal ideal = it_generators(w);
    EXPECT_TRUE(is_power_closed(ideal));
    for (long j = 1; j <= 12; ++j) {
      std::vector<std::complex<double>> p;
      for (const auto& c : w) {
        p.push_back(c.zero ? 0.0 : std::polar(1.0, 2 * pi * static_cast<double>(c.index * j) / static_cast<double>(c.order)));
      }
      for (const auto& g : ideal.generators()) {
        EXPECT_LT(std::abs(eval_numeric(g, p)), 1e-9);
        EXPECT_TRUE(vanishes_at_power(g, w, j));
      }
    }
  }
}
