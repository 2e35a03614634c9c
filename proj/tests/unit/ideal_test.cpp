#include <gtest/gtest.h>

#include "pci/ideal.hpp"
#include "pci/powerpoly.hpp"
#include "test_support.hpp"

using namespace pci;
using pci::testing::I;
using pci::testing::P;
using pci::testing::random_poly;
using pci::testing::uniform;

namespace {

MultiPoly uni(const UniPoly& f) { return MultiPoly::from_unipoly(f, 1, 0); }

Ideal random_ideal(std::size_t d) {
  std::vector<MultiPoly> gens;
  long count = uniform(1, 2);
  for (long i = 0; i < count; ++i) gens.push_back(random_poly(d, 3, 3));
  return Ideal(gens, d);
}

}  // namespace

TEST(Ideal, ClosureIsAClosureOperator) {
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t d = static_cast<std::size_t>(uniform(1, 3));
    Ideal i = random_ideal(d);
    Ideal c = power_closure(i);
    EXPECT_TRUE(contains(c, i));
    EXPECT_TRUE(equal(power_closure(c), c));
    EXPECT_TRUE(is_power_closed(c));
    Ideal j = sum(i, random_ideal(d));
    EXPECT_TRUE(contains(power_closure(j), c));
  }
}

TEST(Ideal, ClosureCommutesWithSum) {
  for (int trial = 0; trial < 15; ++trial) {
    Ideal a = random_ideal(2), b = random_ideal(2);
    EXPECT_TRUE(equal(power_closure(sum(a, b)), sum(power_closure(a), power_closure(b))));
  }
}

TEST(Ideal, ProductOfClosedIsClosed) {
  for (int trial = 0; trial < 10; ++trial) {
    Ideal a = random_ideal(2), b = random_ideal(2);
    EXPECT_TRUE(is_power_closed(product(power_closure(a), power_closure(b))));
  }
}

TEST(Ideal, LinearBinomialClosure) {
  Ideal c = power_closure(I({"y - 2*x"}));
  EXPECT_TRUE(equal(c, I({"y - 2*x", "x^2"})));
  EXPECT_FALSE(is_power_closed(I({"y - 2*x"})));
  EXPECT_TRUE(is_power_closed(I({"y - x"})));
}

TEST(Ideal, IntersectionAgainstProductOfComaximal) {
  Ideal a = I({"x - 1"}), b = I({"y - 2"});
  EXPECT_TRUE(equal(intersect(a, b), I({"(x - 1)*(y - 2)"})));
  Ideal cap = intersect(I({"x", "y^2"}), I({"x^2", "y"}));
  EXPECT_TRUE(equal(cap, I({"x^2", "x*y", "y^2"})));
}

TEST(Ideal, UnivariateClosureMatchesStar) {
  for (int trial = 0; trial < 10; ++trial) {
    CycExponents k;
    k[uniform(1, 6)] = static_cast<int>(uniform(1, 2));
    k[uniform(1, 6)] = 1;
    UniPoly f = cyclotomic_product(k);
    Ideal c = power_closure(Ideal({uni(f)}, 1));
    EXPECT_TRUE(equal(c, Ideal({uni(star(f))}, 1)));
  }
}

TEST(Ideal, InteriorByBoundedSearch) {
  Ideal i = Ideal({uni(UniPoly{1, 1})}, 1);
  EXPECT_TRUE(bounded_power_interior(i, uni(UniPoly{-1, 0, 1}), 8));
  EXPECT_FALSE(bounded_power_interior(i, uni(UniPoly{1, 1}), 8));
}

TEST(Ideal, Radical) {
  Ideal i = I({"x^2", "y^3"});
  EXPECT_TRUE(radical_member(P("x + y"), i));
  EXPECT_FALSE(member(P("x + y"), i));
  EXPECT_FALSE(radical_member(P("x + 1"), i));
}

TEST(Ideal, LaurentSaturation) {
  Ideal i = I({"x*y - x", "x^2*z"}, {"x", "y", "z"}, RingMode::kLaurent);
  EXPECT_TRUE(groebner(i).is_unit());
  Ideal j = I({"x*(y - 1)"}, {"x", "y"}, RingMode::kLaurent);
  EXPECT_TRUE(equal(laurent_saturate(j), I({"y - 1"})));
}

TEST(Ideal, GaussJordanGeneratorsMatchClosure) {
  const std::vector<std::string> names = {"x", "y", "z"};
  for (int trial = 0; trial < 8; ++trial) {
    MultiPoly f(3);
    for (std::size_t v = 0; v < 3; ++v) {
      long c = uniform(-3, 3);
      if (c != 0) f.add_term(Monomial::variable(3, v), FieldElement(c));
    }
    if (f.is_zero()) continue;
    EXPECT_TRUE(equal(Ideal(gauss_jordan_generators(f), 3), power_closure(Ideal({f}, 3))));
  }
}
