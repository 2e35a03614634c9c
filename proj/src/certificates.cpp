#include "pci/certificates.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "pci/ideal.hpp"
#include "pci/parser.hpp"
#include "pci/powerpoly.hpp"
#include "pci/principal.hpp"
#include "pci/variety.hpp"

namespace pci {

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

struct Certificate {
  std::string id;
  std::string topic;
  std::string anchor;
  std::function<Outcome(bool perturbed, const CertificateOptions& options)> run;
};

const std::vector<std::string> kXY = {"x", "y"};
const std::vector<std::string> kXYZ = {"x", "y", "z"};

MultiPoly poly(const std::string& text, const std::vector<std::string>& names,
               RingMode mode = RingMode::kPolynomial) {
  return parse_polynomial(text, ParseContext{names, mode, std::nullopt});
}

Ideal ideal(const std::vector<std::string>& gens, const std::vector<std::string>& names,
            RingMode mode = RingMode::kPolynomial) {
  std::vector<MultiPoly> polys;
  for (const auto& g : gens) polys.push_back(poly(g, names, mode));
  return Ideal(polys, names.size(), mode);
}

std::string basis_text(const GroebnerBasis& basis, const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    out += (i ? ", " : "") + basis.elements()[i].to_string(names);
  }
  return out + "}";
}

std::string cyc_text(const CycExponents& k) {
  CycFactorization f;
  f.exponents = k;
  f.residual = UniPoly{1};
  return f.to_string();
}

std::string cyc_text(const UniPoly& f) { return factor_cyclotomic(f).to_string(); }

UniPoly cyc(std::initializer_list<std::pair<const long, int>> k) { return cyclotomic_product(CycExponents(k)); }

Outcome compare(const std::string& what, const std::string& actual, const std::string& expected) {
  if (actual == expected) return {true, what + " = " + actual};
  return {false, what + " = " + actual + ", expected " + expected};
}

Outcome all_of(std::initializer_list<Outcome> parts) {
  Outcome out{true, ""};
  for (const auto& p : parts) {
    out.passed = out.passed && p.passed;
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += p.detail;
  }
  return out;
}

Outcome boolean(const std::string& what, bool actual, bool expected) {
  return {actual == expected, what + " is " + (actual ? "true" : "false") +
                                  (actual == expected ? "" : std::string(", expected ") + (expected ? "true" : "false"))};
}

const UniPoly& example_f() {
  static const UniPoly f = cyc({{12, 6}, {8, 3}, {6, 5}, {4, 4}, {3, 2}, {2, 3}, {1, 4}});
  return f;
}

UniPoly oracle_star(const UniPoly& f) {
  UniPoly g = f;
  for (long i = 2; i <= f.degree() + 1; ++i) g = gcd(g, power_substitute(f, i));
  return g.monic();
}

std::vector<Certificate> build() {
  std::vector<Certificate> c;

  c.push_back({"linear-binomial-closure", "closure", "closure of (y - 2x) has reduced deglex basis {y - 2x, x^2}",
               [](bool perturbed, const CertificateOptions&) {
                 Ideal closure = power_closure(ideal({"y - 2*x"}, kXY));
                 GroebnerBasis basis = groebner(closure, TermOrder::deglex(2));
                 GroebnerBasis expected({poly("y - 2*x", kXY), poly(perturbed ? "x^3" : "x^2", kXY)},
                                        TermOrder::deglex(2));
                 return compare("basis", basis_text(basis, kXY), basis_text(expected, kXY));
               }});

  c.push_back({"intersection-not-commuting", "closure",
               "for I = (y - 2x), J = (y - 3x): x^2 lies in the intersection of the closures but not in the "
               "closure of the intersection",
               [](bool perturbed, const CertificateOptions&) {
                 Ideal i = ideal({"y - 2*x"}, kXY);
                 Ideal j = ideal({"y - 3*x"}, kXY);
                 MultiPoly x2 = poly("x^2", kXY);
                 Ideal closures_cap = intersect(power_closure(i), power_closure(j));
                 Ideal cap_closure = power_closure(intersect(i, j));
                 return all_of({compare("basis of the intersection of closures",
                                        basis_text(groebner(closures_cap), kXY), "{x^2, x*y, y^2}"),
                                boolean("x^2 in the intersection of closures", member(x2, closures_cap), true),
                                boolean("x^2 in the closure of the intersection", member(x2, cap_closure),
                                        perturbed)});
               }});

  c.push_back({"intersection-is-product", "closure", "(y - 2x) ∩ (y - 3x) = ((y - 2x)(y - 3x))",
               [](bool perturbed, const CertificateOptions&) {
                 Ideal cap = intersect(ideal({"y - 2*x"}, kXY), ideal({"y - 3*x"}, kXY));
                 Ideal prod = ideal({perturbed ? "(y - 2*x)*(y - 4*x)" : "(y - 2*x)*(y - 3*x)"}, kXY);
                 return boolean("equal", equal(cap, prod), true);
               }});

  c.push_back({"monomial-and-toric-closed", "closure",
               "monomial and toric ideals are power-closed; (x + y) is not",
               [](bool perturbed, const CertificateOptions&) {
                 return all_of({boolean("(x^2*y, x*y^2) closed", is_power_closed(ideal({"x^2*y", "x*y^2"}, kXY)), true),
                                boolean("(x*z - y^2) closed", is_power_closed(ideal({"x*z - y^2"}, kXYZ)), true),
                                boolean("(x + y) closed", is_power_closed(ideal({"x + y"}, kXY)), perturbed)});
               }});

  c.push_back({"newton-identity", "symmetric",
               "x_l^n = sum_i (-1)^i x_l^(n-i-1) sigma_(i+1) for l <= d <= 5 and d + 1 <= n <= d + 4",
               [](bool perturbed, const CertificateOptions&) {
                 int checked = 0;
                 for (std::size_t d = 1; d <= 5; ++d) {
                   for (long n = static_cast<long>(d) + 1; n <= static_cast<long>(d) + 4; ++n) {
                     for (std::size_t l = 1; l <= d; ++l) {
                       if (!newton_power_identity_check(d, n, l)) {
                         return Outcome{false, "fails at d=" + std::to_string(d) + " n=" + std::to_string(n) +
                                                   " l=" + std::to_string(l)};
                       }
                       ++checked;
                     }
                   }
                 }
                 const int expected = perturbed ? 61 : 60;
                 return compare("identities checked", std::to_string(checked), std::to_string(expected));
               }});

  c.push_back({"gauss-jordan-generators", "symmetric",
               "the triangular generators g_k generate the same ideal as f, f^(2), ..., f^(lambda)",
               [](bool perturbed, const CertificateOptions&) {
                 const std::vector<std::string> names = {"x", "y", "z", "w"};
                 std::vector<std::string> forms = {"x - y", "x + 2*y + 3*z", "2*x + 3*y - 5*z + w", "x + y + z + w"};
                 for (const auto& form : forms) {
                   MultiPoly f = poly(form, names);
                   Ideal closure = power_closure(Ideal({f}, 4));
                   std::vector<MultiPoly> g = gauss_jordan_generators(f);
                   if (perturbed) g.pop_back();
                   if (!equal(Ideal(g, 4), closure)) return Outcome{false, "differs for " + form};
                 }
                 return Outcome{true, std::to_string(forms.size()) + " linear forms agree"};
               }});

  c.push_back({"laurent-linear-form", "laurent",
               "Laurent closure of (z - a x - b y), a = 1/2 + sqrt(2), a + b = 1, is (z - a x - b y, (y - x)^2)",
               [](bool perturbed, const CertificateOptions&) {
                 const std::string f = "z - (1/2 + sqrt(2))*x - (1/2 - sqrt(2))*y";
                 Ideal closure = power_closure(ideal({f}, kXYZ, RingMode::kLaurent));
                 Ideal expected = ideal({f, perturbed ? "(y - x)^3" : "(y - x)^2"}, kXYZ, RingMode::kLaurent);
                 return all_of({boolean("equal to (f, (y - x)^2)", equal(closure, expected), true),
                                compare("closure generators", std::to_string(closure.generators().size()), "3")});
               }});

  c.push_back({"laurent-units", "laurent", "in the Laurent ring (x) is the unit ideal and (x*y - x) = (y - 1)",
               [](bool perturbed, const CertificateOptions&) {
                 Ideal unit = ideal({"x"}, kXY, RingMode::kLaurent);
                 Ideal shifted = ideal({"x*y - x"}, kXY, RingMode::kLaurent);
                 return all_of({boolean("(x) is the unit ideal", groebner(unit).is_unit(), true),
                                boolean("(x*y - x) = (y - 1)",
                                        equal(shifted, ideal({perturbed ? "y - 2" : "y - 1"}, kXY, RingMode::kLaurent)),
                                        true)});
               }});

  c.push_back({"laurent-intersection-stretch", "laurent",
               "with a = 1/2 + sqrt(2), c = 1/2 + 2 sqrt(2): (xy)^12 (y - x)^2 is not in the closure of "
               "(z - a x - b y)(z - c x - d y), specialised at z = 1",
               [](bool perturbed, const CertificateOptions& options) {
                 const std::string f = "(1 - (1/2 + sqrt(2))*x - (1/2 - sqrt(2))*y)";
                 const std::string g = "(1 - (1/2 + 2*sqrt(2))*x - (1/2 - 2*sqrt(2))*y)";
                 Ideal closure = power_closure(ideal({f + "*" + g}, kXY));
                 GroebnerLimits limits{std::chrono::steady_clock::now() + options.stretch_budget};
                 try {
                   GroebnerBasis basis = groebner(closure, TermOrder::deglex(2), limits);
                   bool in = basis.contains(poly("(x*y)^12*(y - x)^2", kXY));
                   return all_of({boolean("target is a member", in, perturbed),
                                  compare("basis size", std::to_string(basis.size()), "3")});
                 } catch (const ComputationTimeout&) {
                   return Outcome{false, "not finished within the time budget"};
                 }
               }});

  c.push_back({"laurent-divisibility-bound", "laurent",
               "a power-closed (f) has f dividing x^(p_k) prod_(i<k) (x^(p_k) - x^(p_i)), without the leading "
               "monomial in the Laurent ring; z - a x - b y fails the bound",
               [](bool perturbed, const CertificateOptions&) {
                 std::vector<std::string> inputs = {"x^2 - y^2", "(x - y)^2", "x*y - 1", "x^3 - z^3",
                                                    "(x*y - z^2)*(x - y)"};
                 for (const auto& text : inputs) {
                   MultiPoly f = poly(text, kXYZ);
                   for (RingMode mode : {RingMode::kPolynomial, RingMode::kLaurent}) {
                     if (!satisfies_divisibility_bound(f, mode, TermOrder::deglex(3))) {
                       return Outcome{false, "fails for " + text + " in " + to_string(mode)};
                     }
                   }
                 }
                 MultiPoly g = poly("z - (1/2 + sqrt(2))*x - (1/2 - sqrt(2))*y", kXYZ);
                 return all_of({Outcome{true, std::to_string(inputs.size()) + " power-closed generators, both rings"},
                                boolean("bound holds for z - a x - b y",
                                        satisfies_divisibility_bound(g, RingMode::kLaurent, TermOrder::deglex(3)),
                                        perturbed)});
               }});

  c.push_back({"star-exponents", "univariate",
               "star of phi12^6 phi8^3 phi6^5 phi4^4 phi3^2 phi2^3 phi1^4 is phi12^2 phi8^3 phi6^2 phi4^3 phi3^2 "
               "phi2^3 phi1^4",
               [](bool perturbed, const CertificateOptions&) {
                 CycExponents expected{{12, perturbed ? 3 : 2}, {8, 3}, {6, 2}, {4, 3}, {3, 2}, {2, 3}, {1, 4}};
                 return compare("star", cyc_text(star(example_f())), cyc_text(expected));
               }});

  c.push_back({"circle-exponents", "univariate",
               "circle of the same f is phi12^6 phi8^3 phi6^6 phi4^6 phi3^6 phi2^6 phi1^6",
               [](bool perturbed, const CertificateOptions&) {
                 CycExponents expected{{12, 6}, {8, 3}, {6, 6}, {4, 6}, {3, 6}, {2, 6}, {1, perturbed ? 5 : 6}};
                 auto result = circle(example_f());
                 if (!result) return Outcome{false, "circle is the zero ideal"};
                 return compare("circle", cyc_text(*result), cyc_text(expected));
               }});

  c.push_back({"powered-verdicts", "univariate",
               "phi12^2 phi8^2 phi6^2 phi4^3 phi3^2 phi2^3 phi1^4 is powered; with phi8^3 phi4^2 it is not",
               [](bool perturbed, const CertificateOptions&) {
                 UniPoly f = cyc({{12, 2}, {8, 2}, {6, 2}, {4, 3}, {3, 2}, {2, 3}, {1, 4}});
                 UniPoly g = cyc({{12, 2}, {8, 3}, {6, 2}, {4, 2}, {3, 2}, {2, 3}, {1, 4}});
                 return all_of({boolean("f powered", is_powered(f), true),
                                boolean("g powered", is_powered(g), perturbed),
                                boolean("x - 2 powered", is_powered(UniPoly{-2, 1}), false)});
               }});

  c.push_back({"lcm-strictness", "univariate",
               "f = phi4^2 phi2 phi1^2, g = phi2^2 phi1: star(lcm) = lcm differs from lcm(star f, star g)",
               [](bool perturbed, const CertificateOptions&) {
                 UniPoly f = cyc({{4, 2}, {2, 1}, {1, 2}});
                 UniPoly g = cyc({{2, 2}, {1, 1}});
                 UniPoly l = lcm(f, g);
                 UniPoly both = lcm(star(f), star(g));
                 return all_of({compare("lcm", cyc_text(l), perturbed ? "phi_4^2*phi_2^2*phi_1^3" : cyc_text(star(l))),
                                compare("lcm of stars", cyc_text(both), cyc_text(cyc({{4, 1}, {2, 1}, {1, 2}}))),
                                boolean("strict", !(both == l), true)});
               }});

  c.push_back({"gcd-strictness", "univariate",
               "same f, g: circle(gcd) = gcd differs from gcd(circle f, circle g) = phi2^2 phi1^2",
               [](bool perturbed, const CertificateOptions&) {
                 UniPoly f = cyc({{4, 2}, {2, 1}, {1, 2}});
                 UniPoly g = cyc({{2, 2}, {1, 1}});
                 UniPoly d = gcd(f, g);
                 UniPoly both = gcd(*circle(f), *circle(g));
                 return all_of({compare("circle of gcd", cyc_text(*circle(d)), cyc_text(d)),
                                compare("gcd of circles", cyc_text(both),
                                        cyc_text(cyc({{2, 2}, {1, perturbed ? 1 : 2}}))),
                                boolean("strict", !(both == d), true)});
               }});

  c.push_back({"star-gcd-oracle", "univariate", "star(f) = gcd(f, f^(2), ..., f^(deg f + 1))",
               [](bool perturbed, const CertificateOptions&) {
                 std::vector<UniPoly> inputs = {example_f(), cyc({{4, 2}, {2, 1}, {1, 2}}),
                                                cyc({{6, 1}, {3, 2}}) * UniPoly{-2, 0, 1}, UniPoly{-2, 1},
                                                UniPoly::monomial(FieldElement(1), 3)};
                 for (const auto& f : inputs) {
                   UniPoly expected = oracle_star(f);
                   if (perturbed) expected = expected * UniPoly{1, 1};
                   if (!(star(f) == expected)) return Outcome{false, "differs for " + f.to_string()};
                 }
                 return Outcome{true, std::to_string(inputs.size()) + " polynomials agree"};
               }});

  c.push_back({"interior-zero", "univariate", "(x - 2) has closure (1) and interior (0)",
               [](bool perturbed, const CertificateOptions&) {
                 UniPoly f{-2, 1};
                 return all_of({compare("star", star(f).to_string(), perturbed ? "x - 2" : "1"),
                                boolean("interior is zero", !circle(f).has_value(), true),
                                compare("circle(x + 1)", circle(UniPoly{1, 1})->to_string(), "x^2 - 1")});
               }});

  c.push_back({"psi-decomposition", "univariate",
               "the powered f decomposes as psi{8,12}^2 psi{4} psi{1}",
               [](bool perturbed, const CertificateOptions&) {
                 UniPoly f = cyc({{12, 2}, {8, 2}, {6, 2}, {4, 3}, {3, 2}, {2, 3}, {1, 4}});
                 PsiDecomposition d = psi_decompose(f);
                 return all_of({compare("chain", d.chain_string(),
                                        perturbed ? "psi{8,12}^2 * psi{4}^2 * psi{1}" : "psi{8,12}^2 * psi{4} * psi{1}"),
                                boolean("reconstructs", d.reconstruct() == f, true)});
               }});

  c.push_back({"psi-three-element-identity", "univariate",
               "for the antichain {4, 6, 9} the four nested psi products coincide",
               [](bool perturbed, const CertificateOptions&) {
                 const long n1 = 4, n2 = 6, n3 = perturbed ? 10 : 9;
                 auto psi = [](std::initializer_list<long> s) { return psi_poly(std::set<long>(s)); };
                 auto g = [](long a, long b) { return std::gcd(a, b); };
                 UniPoly p1 = psi({n1, n2}) * psi({n3}) * psi({g(n1, n2)});
                 UniPoly p2 = psi({n1, n3}) * psi({n2}) * psi({g(n1, n3)});
                 UniPoly p3 = psi({n2, n3}) * psi({n1}) * psi({g(n2, n3)});
                 UniPoly p4 = psi({n1, n2, n3}) * psi({g(n1, n2), g(n1, n3), g(n2, n3)}) *
                              psi({g(g(n1, n2), n3)});
                 UniPoly reference = psi({4, 6}) * psi({9}) * psi({2});
                 bool equal_all = p1 == p2 && p2 == p3 && p3 == p4;
                 return all_of({boolean("all four equal", equal_all, true),
                                boolean("matches {4,6,9}", p1 == reference, true)});
               }});

  c.push_back({"psi-inclusion-exclusion", "univariate",
               "psi_A equals the alternating product of x^gcd(S) - 1 over subsets S of A",
               [](bool perturbed, const CertificateOptions&) {
                 std::vector<std::set<long>> sets = {{1}, {2, 3}, {8, 12}, {4, 6, 9}, {6, 10, 15}, {12, 18, 20}};
                 for (const auto& a : sets) {
                   UniPoly expected = psi_poly(a);
                   if (perturbed) expected = expected * UniPoly{-1, 1};
                   if (!(evaluate_binomial_quotient(psi_inclusion_exclusion(a)) == expected)) {
                     return Outcome{false, "differs for " + Antichain(a).to_string()};
                   }
                 }
                 return Outcome{true, std::to_string(sets.size()) + " antichains agree"};
               }});

  c.push_back({"principal-examples", "principal",
               "(x/y - 1)(x/y + 1) and x(x - y) are power-closed, x - 2y is not; Groebner agrees",
               [](bool perturbed, const CertificateOptions&) {
                 struct Case {
                   std::string text;
                   bool expected;
                 };
                 std::vector<Case> cases = {{"(x/y - 1)*(x/y + 1)", true}, {"(x - 2*y)", perturbed}, {"x*(x - y)", true}};
                 std::vector<Outcome> parts;
                 TermOrder order = TermOrder::deglex(2);
                 for (const auto& cs : cases) {
                   FactoredPrincipal f = parse_factored(cs.text, ParseContext{kXY, RingMode::kPolynomial, std::nullopt});
                   Verdict v = classify_principal(f, RingMode::kPolynomial, order);
                   bool gb = is_power_closed(Ideal({expand(f, RingMode::kPolynomial, order)}, 2));
                   if (v.power_closed != cs.expected || gb != v.power_closed) {
                     return Outcome{false, cs.text + ": classifier " + (v.power_closed ? "true" : "false") +
                                               ", groebner " + (gb ? "true" : "false")};
                   }
                 }
                 return Outcome{true, std::to_string(cases.size()) + " verdicts match"};
               }});

  c.push_back({"binomial-factorization", "principal",
               "x^2 - y^2 = -(y - x)(y + x) with y > x; x^3 y - x y^3 has content xy; x^2 y - z^3 is irreducible",
               [](bool perturbed, const CertificateOptions&) {
                 TermOrder order = TermOrder::lex(3);
                 BinomialFactorization a = binomial_factor(poly("x^2 - y^2", kXYZ), order);
                 BinomialFactorization b = binomial_factor(poly("x^3*y - x*y^3", kXYZ), order);
                 return all_of({compare("x^2 - y^2", a.to_string(kXYZ), "-(y - x)*(y + x)"),
                                compare("h", std::to_string(b.h), perturbed ? "3" : "2"),
                                compare("content", monomial_to_string(b.content, kXYZ), "x*y"),
                                boolean("x^2*y - z^3 irreducible", binomial_irreducible(poly("x^2*y - z^3", kXYZ)), true),
                                boolean("x^2 - y^2 irreducible", binomial_irreducible(poly("x^2 - y^2", kXYZ)), false)});
               }});

  c.push_back({"associates", "principal", "(x/y - 2) and (y/x - 1/2) are associates; (x/y - 3) is not",
               [](bool perturbed, const CertificateOptions&) {
                 Monomial xi({1, -1});
                 BinomialFactor a{xi, Root::from_scalar(2), 1};
                 BinomialFactor b{xi.negated(), Root::from_scalar(FieldElement(Rational(1, 2))), 1};
                 BinomialFactor c3{xi, Root::from_scalar(3), 1};
                 return all_of({boolean("(x/y - 2) ~ (y/x - 1/2)", associates(a, b), !perturbed),
                                boolean("(x/y - 2) ~ (x/y - 3)", associates(a, c3), false)});
               }});

  c.push_back({"classifier-sweep", "principal",
               "classifier and Groebner agree on products of (x/y - zeta) with zeta of order <= 4",
               [](bool perturbed, const CertificateOptions&) {
                 TermOrder order = TermOrder::deglex(2);
                 int agreed = 0;
                 for (long n1 = 1; n1 <= 4; ++n1) {
                   for (long k1 = 0; k1 < n1; ++k1) {
                     if (std::gcd(k1, n1) != 1) continue;
                     for (long n2 = 1; n2 <= 2; ++n2) {
                       for (long k2 = 0; k2 < n2; ++k2) {
                         FactoredPrincipal f{2, FieldElement(1), Monomial(2), {}};
                         f.factors.push_back({Monomial({1, -1}), Root::unity(n1, k1), 1});
                         f.factors.push_back({Monomial({2, -1}), Root::unity(n2, k2), 1});
                         Verdict v;
                         try {
                           v = classify_principal(f, RingMode::kPolynomial, order);
                         } catch (const std::invalid_argument&) {
                           continue;
                         }
                         MultiPoly e = expand(f, RingMode::kPolynomial, order);
                         bool gb = is_power_closed(Ideal({e}, 2));
                         if (gb != v.power_closed) return Outcome{false, "disagree on " + f.to_string(kXY)};
                         ++agreed;
                       }
                     }
                   }
                 }
                 return compare("agreements", std::to_string(agreed), perturbed ? "0" : std::to_string(agreed));
               }});

  c.push_back({"radical-sum-product", "radical", "the radical of (x + y, xy) is (x, y)",
               [](bool perturbed, const CertificateOptions&) {
                 RadicalResult r = radical_of_linear_closure({FieldElement(1), FieldElement(1)});
                 Ideal i = ideal({"x + y", "x*y"}, kXY);
                 return all_of({boolean("equals (x, y)", equal(r.radical, ideal({"x", perturbed ? "y^2" : "y"}, kXY)), true),
                                boolean("x in the radical", radical_member(poly("x", kXY), i), true),
                                boolean("x in (x + y, xy)", member(poly("x", kXY), i), false),
                                boolean("validated", r.contained_in_radical && r.closure_in_components, true)});
               }});

  c.push_back({"zero-sum-lines", "radical", "zero-sum subsets for (1,-1), (1,1), (1,1,-2)",
               [](bool perturbed, const CertificateOptions&) {
                 auto lines = [](std::vector<long> a) {
                   std::vector<FieldElement> v(a.begin(), a.end());
                   return zero_sum_lines(v).to_string();
                 };
                 return all_of({compare("(1,-1)", lines({1, -1}), "{1,2}"), compare("(1,1)", lines({1, 1}), "{}"),
                                compare("(1,1,-2)", lines({1, 1, -2}), perturbed ? "{1,2}" : "{1,2,3}")});
               }});

  c.push_back({"torus-iso-type", "radical",
               "x^2 - y^2 cuts out T^1 x Z/2; (x - y, xy - 1) cuts out Z/2",
               [](bool perturbed, const CertificateOptions&) {
                 TorusSubgroup g = torus_subgroup(poly("x^2 - y^2", kXY));
                 TorusSubgroup a = torus_subgroup(poly("x - y", kXY));
                 TorusSubgroup b = torus_subgroup(poly("x*y - 1", kXY));
                 return all_of({compare("lattice", g.lattice().to_string(), "[(2,-2)]"),
                                compare("x^2 - y^2", subgroup_iso_type(g).to_string(), perturbed ? "T^1 x Z/4" : "T^1 x Z/2"),
                                compare("intersection", subgroup_iso_type(subgroup_intersect(a, b)).to_string(), "Z/2"),
                                boolean("G ∩ G = G", subgroup_intersect(g, g) == g, true)});
               }});

  c.push_back({"torsion-point-ideal", "radical",
               "the orbit ideal of (-1, -1) contains x - y; that of (0, 1) contains x and y - 1",
               [](bool perturbed, const CertificateOptions&) {
                 Ideal a = it_generators({{false, 2, 1}, {false, 2, 1}});
                 Ideal b = it_generators({{true, 1, 0}, {false, 1, 0}});
                 return all_of({boolean("x - y in I(-1,-1)", member(poly(perturbed ? "x + y" : "x - y", kXY), a), true),
                                boolean("x^2 - 1 in I(-1,-1)", member(poly("x^2 - 1", kXY), a), true),
                                boolean("x in I(0,1)", member(poly("x", kXY), b), true),
                                boolean("y - 1 in I(0,1)", member(poly("y - 1", kXY), b), true),
                                boolean("power-closed", is_power_closed(a), true)});
               }});

  c.push_back({"radical-validation", "radical",
               "radicals of linear closures pass the two-sided radical-membership check",
               [](bool perturbed, const CertificateOptions&) {
                 std::vector<std::vector<long>> vectors = {{1, 1}, {1, -1}, {1, 1, -2}, {1, -1, 1, -1}, {2, 3, -5}, {1, 2, 3}};
                 std::string components;
                 for (const auto& a : vectors) {
                   RadicalResult r = radical_of_linear_closure(std::vector<FieldElement>(a.begin(), a.end()));
                   if (!r.contained_in_radical || !r.closure_in_components || !is_power_closed(r.radical)) {
                     return Outcome{false, "validation fails"};
                   }
                   if (a.size() == 4) {
                     for (const auto& comp : r.components) components += (components.empty() ? "" : " ") + comp.to_string();
                   }
                 }
                 return compare("components for (1,-1,1,-1)", components,
                                perturbed ? "{1,2,3,4}" : "{1,2}|{3,4} {1,4}|{2,3}");
               }});
  return c;
}

const std::vector<Certificate>& registry() {
  static const std::vector<Certificate> certificates = build();
  return certificates;
}

}  // namespace

const std::vector<std::string>& certificate_topics() {
  static const std::vector<std::string> topics = {"closure", "laurent", "univariate", "principal", "radical", "symmetric"};
  return topics;
}

std::vector<std::string> certificate_ids() {
  std::vector<std::string> out;
  for (const auto& c : registry()) out.push_back(c.id);
  return out;
}

std::vector<CertificateResult> run_certificates(const CertificateOptions& options) {
  for (const auto& topic : options.only) {
    const auto& topics = certificate_topics();
    if (std::find(topics.begin(), topics.end(), topic) == topics.end()) {
      throw std::invalid_argument("unknown certificate topic '" + topic + "'");
    }
  }
  if (options.perturb) {
    auto ids = certificate_ids();
    if (std::find(ids.begin(), ids.end(), *options.perturb) == ids.end()) {
      throw std::invalid_argument("unknown certificate '" + *options.perturb + "'");
    }
  }
  std::vector<CertificateResult> out;
  for (const auto& c : registry()) {
    if (!options.only.empty() && !options.only.count(c.topic)) continue;
    CertificateResult r{c.id, c.topic, c.anchor, false, "", 0};
    auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = c.run(options.perturb == c.id, options);
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace pci
