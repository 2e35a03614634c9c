#include <gtest/gtest.h>

#include "pci/parser.hpp"
#include "test_support.hpp"

using namespace pci;
using pci::testing::uniform;

namespace {

MultiPoly random_expression(std::size_t nvars, RingMode mode, long radicand) {
  MultiPoly f(nvars, mode);
  long terms = uniform(1, 5);
  for (long t = 0; t < terms; ++t) {
    Monomial m(nvars);
    for (std::size_t v = 0; v < nvars; ++v) {
      m.set(v, static_cast<int>(mode == RingMode::kLaurent ? uniform(-3, 3) : uniform(0, 4)));
    }
    Rational a(uniform(-7, 7), uniform(1, 4));
    Rational b(radicand && uniform(0, 1) ? uniform(-3, 3) : 0, uniform(1, 3));
    a.canonicalize();
    b.canonicalize();
    f.add_term(m, FieldElement(a, b, radicand ? radicand : 2));
  }
  return f;
}

}  // namespace

TEST(Parser, RandomRoundTrip) {
  const std::vector<std::string> names = {"x", "y", "z"};
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    RingMode mode = uniform(0, 1) ? RingMode::kLaurent : RingMode::kPolynomial;
    long radicand = std::vector<long>{0, 2, 3, -1, 5}[static_cast<std::size_t>(uniform(0, 4))];
    MultiPoly f = random_expression(3, mode, radicand);
    std::string text = f.to_string(names);
    MultiPoly g = parse_polynomial(text, ParseContext{names, mode, std::nullopt});
    EXPECT_EQ(g, f) << text;
    EXPECT_EQ(g.to_string(names), text);
    ++checked;
  }
  EXPECT_EQ(checked, 1000);
}

TEST(Parser, Grammar) {
  ParseContext xy{{"x", "y"}, RingMode::kPolynomial, std::nullopt};
  EXPECT_EQ(parse_polynomial("y - 2*x", xy).to_string({"x", "y"}), "y - 2*x");
  EXPECT_EQ(parse_polynomial("2x y^2", xy), parse_polynomial("2*x*y^2", xy));
  EXPECT_EQ(parse_polynomial("(x + y)/2", xy).to_string({"x", "y"}), "1/2*y + 1/2*x");
  MultiPoly f = parse_polynomial("z - (1/2 + sqrt(2))*x - (1/2 - sqrt(2))*y",
                                 ParseContext{{"x", "y", "z"}, RingMode::kLaurent, std::nullopt});
  EXPECT_EQ(lambda(f), 3u);
  EXPECT_EQ(parse_univariate("phi(12)"), cyclotomic_poly(12));
  EXPECT_EQ(parse_scalar("-1/2*sqrt(-3) + 1/2"), FieldElement(Rational(1, 2), Rational(-1, 2), -3));
}

TEST(Parser, Errors) {
  ParseContext xy{{"x", "y"}, RingMode::kPolynomial, std::nullopt};
  try {
    parse_polynomial("x^-1*y - 1", xy);
    FAIL() << "negative exponent accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 2u);
  }
  EXPECT_THROW(parse_polynomial("x + w", xy), ParseError);
  EXPECT_THROW(parse_polynomial("x + * y", xy), ParseError);
  EXPECT_THROW(parse_polynomial("(x + y", xy), ParseError);
  EXPECT_THROW(parse_polynomial("sqrt(2)*x + sqrt(3)", xy), ParseError);
  EXPECT_THROW(parse_polynomial("x/y", xy), ParseError);
  ParseContext rational{{"x"}, RingMode::kPolynomial, 0};
  EXPECT_THROW(parse_polynomial("sqrt(2)*x", rational), ParseError);
}

TEST(Parser, VariableInference) {
  EXPECT_EQ(infer_variables({"y + x10 - x2", "z*w + a"}),
            (std::vector<std::string>{"y", "z", "w", "a", "x2", "x10"}));
  EXPECT_EQ(infer_variables({"y - 2*x"}), (std::vector<std::string>{"x", "y"}));
}

TEST(Parser, FactoredAndPoints) {
  ParseContext xy{{"x", "y"}, RingMode::kPolynomial, std::nullopt};
  FactoredPrincipal f = parse_factored("2*x*prod((x/y - 1)^2, (x/y - zeta(3,*)))", xy);
  EXPECT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].multiplicity, 2);
  EXPECT_EQ(f.scalar, FieldElement(2));
  auto p = parse_point("zeta(4,1), 0, -1");
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p[0].order, 4);
  EXPECT_TRUE(p[1].zero);
  EXPECT_EQ(p[2].order, 2);
  EXPECT_THROW(parse_point("2"), ParseError);
}
