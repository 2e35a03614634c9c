// Command-line front end for the power-closed ideal library.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

#include "pci/certificates.hpp"
#include "pci/ideal.hpp"
#include "pci/parser.hpp"
#include "pci/powerpoly.hpp"
#include "pci/principal.hpp"
#include "pci/variety.hpp"

using json = nlohmann::json;
using namespace pci;

namespace {

struct Settings {
  std::string ring = "poly";
  std::string order = "deglex";
  std::string vars;
  std::string field;
  bool json = false;
};

struct Output {
  json data = json::object();
  std::string text;
  bool ok = true;
};

RingMode ring_mode(const Settings& s) { return s.ring == "laurent" ? RingMode::kLaurent : RingMode::kPolynomial; }

std::optional<long> field_radicand(const std::string& field) {
  if (field.empty()) return std::nullopt;
  if (field == "rational" || field == "Q") return 0;
  std::string digits = field;
  for (const char* prefix : {"sqrt(", "sqrt", "Q(sqrt(", "Q(sqrt"}) {
    if (field.rfind(prefix, 0) == 0) {
      digits = field.substr(std::string(prefix).size());
      break;
    }
  }
  while (!digits.empty() && digits.back() == ')') digits.pop_back();
  long m = 0;
  try {
    m = std::stol(digits);
  } catch (const std::exception&) {
    throw std::invalid_argument("--field expects rational or sqrt(m), got '" + field + "'");
  }
  if (!is_squarefree(m) || m == 1 || m == 0) throw std::invalid_argument("--field needs a squarefree m other than 0, 1");
  return m;
}

std::vector<std::string> split_list(const std::string& text, char sep = ',') {
  std::vector<std::string> parts;
  int depth = 0;
  std::string current;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty() || !parts.empty()) parts.push_back(current);
  return parts;
}

// Generator lists: each argument may hold several comma-separated polynomials.
std::vector<std::string> flatten(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const auto& a : args) {
    for (const auto& p : split_list(a)) out.push_back(p);
  }
  return out;
}

struct Ring {
  std::vector<std::string> names;
  RingMode mode;
  TermOrder order;
  ParseContext context;
};

Ring make_ring(const Settings& s, const std::vector<std::string>& inputs) {
  std::vector<std::string> names = s.vars.empty() ? infer_variables(inputs) : split_list(s.vars);
  for (auto& n : names) n.erase(std::remove_if(n.begin(), n.end(), ::isspace), n.end());
  if (names.empty()) names = {"x"};
  if (names.size() > kMaxVariables) throw std::invalid_argument("at most 16 variables are supported");
  RingMode mode = ring_mode(s);
  TermOrder order = s.order == "lex" ? TermOrder::lex(names.size()) : TermOrder::deglex(names.size());
  return Ring{names, mode, order, ParseContext{names, mode, field_radicand(s.field)}};
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

void describe_ring(const Ring& r, Output& out) {
  out.data["variables"] = r.names;
  out.data["ring"] = to_string(r.mode);
  out.data["order"] = r.order.name();
  out.text += "# ring " + to_string(r.mode) + " in " + join(r.names, " < ") + ", order " + r.order.name() + "\n";
}

std::vector<MultiPoly> parse_all(const std::vector<std::string>& texts, const Ring& r) {
  std::vector<MultiPoly> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, r.context));
  return out;
}

std::vector<std::string> poly_strings(const std::vector<MultiPoly>& polys, const Ring& r) {
  std::vector<std::string> out;
  for (const auto& p : polys) out.push_back(p.to_string(r.names));
  return out;
}

void add_basis(const GroebnerBasis& basis, const Ring& r, Output& out, const std::string& key = "groebner") {
  auto elements = poly_strings(basis.elements(), r);
  out.data[key] = elements;
  out.text += key + ":\n";
  for (const auto& e : elements) out.text += "  " + e + "\n";
}

void add_generators(const Ideal& ideal, const Ring& r, Output& out, const std::string& key = "generators") {
  auto gens = poly_strings(ideal.generators(), r);
  out.data[key] = gens;
  out.text += key + ":\n";
  for (const auto& g : gens) out.text += "  " + g + "\n";
}

std::string univariate_variable(const Settings& s, const std::string& text) {
  auto names = s.vars.empty() ? infer_variables({text}) : split_list(s.vars);
  if (names.size() > 1) throw std::invalid_argument("expected a polynomial in one variable");
  return names.empty() ? "x" : names.front();
}

json exponents_json(const CycExponents& k) {
  json out = json::object();
  for (auto [n, e] : k) out[std::to_string(n)] = e;
  return out;
}

std::string set_string(const std::set<long>& s) {
  std::vector<std::string> items;
  for (long n : s) items.push_back(std::to_string(n));
  return "{" + join(items, ",") + "}";
}

Output cmd_factor(const Settings& s, const std::string& text) {
  std::string var = univariate_variable(s, text);
  CycFactorization f = factor_cyclotomic(parse_univariate(text, var));
  Output out;
  out.data = {{"unit", f.unit.to_string()},
              {"x_valuation", f.x_valuation},
              {"exponents", exponents_json(f.exponents)},
              {"residual", f.residual.to_string(var)},
              {"factored", f.to_string(var)}};
  out.text = f.to_string(var) + "\n";
  return out;
}

Output cmd_is_powered(const Settings& s, const std::string& text) {
  std::string var = univariate_variable(s, text);
  bool powered = is_powered(parse_univariate(text, var));
  Output out;
  out.data = {{"powered", powered}};
  out.text = std::string(powered ? "true" : "false") + "\n";
  return out;
}

Output cmd_star(const Settings& s, const std::string& text) {
  std::string var = univariate_variable(s, text);
  UniPoly g = star(parse_univariate(text, var));
  Output out;
  out.data = {{"generator", g.to_string(var)}, {"factored", factor_cyclotomic(g).to_string(var)}};
  out.text = g.to_string(var) + "\n" + factor_cyclotomic(g).to_string(var) + "\n";
  return out;
}

Output cmd_circle(const Settings& s, const std::string& text) {
  std::string var = univariate_variable(s, text);
  auto g = circle(parse_univariate(text, var));
  Output out;
  if (!g) {
    out.data = {{"zero", true}, {"generator", "0"}};
    out.text = "(0)\n";
    return out;
  }
  out.data = {{"zero", false}, {"generator", g->to_string(var)}, {"factored", factor_cyclotomic(*g).to_string(var)}};
  out.text = g->to_string(var) + "\n" + factor_cyclotomic(*g).to_string(var) + "\n";
  return out;
}

Output cmd_psi(const Settings& s, const std::string& text, const std::string& form) {
  std::string var = univariate_variable(s, text);
  PsiDecomposition d = psi_decompose(parse_univariate(text, var));
  Output out;
  json factors = json::array();
  for (const auto& f : d.factors) {
    factors.push_back({{"antichain", std::vector<long>(f.antichain.elements().begin(), f.antichain.elements().end())},
                       {"exponent", f.exponent}});
  }
  out.data = {{"factors", factors},
              {"monomial_valuation", d.monomial_valuation},
              {"chain", d.chain_string()},
              {"binomial", d.binomial_string(var)}};
  if (form != "binomial") out.text += d.chain_string() + "\n";
  if (form != "chain") out.text += d.binomial_string(var) + "\n";
  return out;
}

Output cmd_downset(const Settings& s, const std::string& text, const std::string& mode) {
  std::string var = univariate_variable(s, text);
  auto set = downset_bound(parse_univariate(text, var), mode == "circle" ? DownsetMode::kCircle : DownsetMode::kStar);
  Output out;
  out.data = {{"downset", std::vector<long>(set.begin(), set.end())}};
  out.text = set_string(set) + "\n";
  return out;
}

Output cmd_closure(const Settings& s, const std::vector<std::string>& args) {
  auto texts = flatten(args);
  Ring r = make_ring(s, texts);
  Output out;
  describe_ring(r, out);
  Ideal closure = power_closure(Ideal(parse_all(texts, r), r.names.size(), r.mode));
  add_generators(closure, r, out);
  add_basis(groebner(closure, r.order), r, out);
  return out;
}

Output cmd_is_closed(const Settings& s, const std::vector<std::string>& args) {
  auto texts = flatten(args);
  Ring r = make_ring(s, texts);
  Output out;
  describe_ring(r, out);
  bool closed = is_power_closed(Ideal(parse_all(texts, r), r.names.size(), r.mode));
  out.data["power_closed"] = closed;
  out.text += std::string(closed ? "true" : "false") + "\n";
  return out;
}

Output cmd_member(const Settings& s, const std::string& f_text, const std::vector<std::string>& args) {
  auto texts = flatten(args);
  auto all = texts;
  all.push_back(f_text);
  Ring r = make_ring(s, all);
  Output out;
  describe_ring(r, out);
  bool in = member(parse_polynomial(f_text, r.context), Ideal(parse_all(texts, r), r.names.size(), r.mode), r.order);
  out.data["member"] = in;
  out.text += std::string(in ? "true" : "false") + "\n";
  return out;
}

Output cmd_intersect(const Settings& s, const std::string& a, const std::string& b) {
  auto ta = split_list(a);
  auto tb = split_list(b);
  auto all = ta;
  all.insert(all.end(), tb.begin(), tb.end());
  Ring r = make_ring(s, all);
  Output out;
  describe_ring(r, out);
  Ideal cap = intersect(Ideal(parse_all(ta, r), r.names.size(), r.mode), Ideal(parse_all(tb, r), r.names.size(), r.mode));
  add_generators(cap, r, out);
  add_basis(groebner(cap, r.order), r, out);
  return out;
}

Output cmd_groebner(const Settings& s, const std::vector<std::string>& args) {
  auto texts = flatten(args);
  Ring r = make_ring(s, texts);
  Output out;
  describe_ring(r, out);
  add_basis(groebner(Ideal(parse_all(texts, r), r.names.size(), r.mode), r.order), r, out);
  return out;
}

Output cmd_radical_member(const Settings& s, const std::string& f_text, const std::vector<std::string>& args) {
  auto texts = flatten(args);
  auto all = texts;
  all.push_back(f_text);
  Ring r = make_ring(s, all);
  if (r.mode != RingMode::kPolynomial) throw std::invalid_argument("radical-member works in the polynomial ring");
  Output out;
  describe_ring(r, out);
  bool in = radical_member(parse_polynomial(f_text, r.context), Ideal(parse_all(texts, r), r.names.size(), r.mode));
  out.data["radical_member"] = in;
  out.text += std::string(in ? "true" : "false") + "\n";
  return out;
}

Output cmd_interior_test(const Settings& s, const std::string& f_text, const std::vector<std::string>& args, long bound) {
  auto texts = flatten(args);
  auto all = texts;
  all.push_back(f_text);
  Ring r = make_ring(s, all);
  Output out;
  describe_ring(r, out);
  bool ok = bounded_power_interior(Ideal(parse_all(texts, r), r.names.size(), r.mode),
                                   parse_polynomial(f_text, r.context), bound);
  out.data["bound"] = bound;
  out.data["all_substitutions_in_ideal"] = ok;
  out.text += std::string(ok ? "true" : "false") + "\n";
  return out;
}

Output cmd_classify(const Settings& s, const std::string& text, bool cross_check) {
  Ring r = make_ring(s, {text});
  FactoredPrincipal f = parse_factored(text, r.context);
  Output out;
  describe_ring(r, out);
  Verdict v = classify_principal(f, r.mode, r.order);
  MultiPoly e = expand(f, r.mode, r.order);
  json groups = json::array();
  out.text += "factored: " + f.to_string(r.names) + "\n";
  for (const auto& g : v.groups) {
    std::string eta = fraction_to_string(g.eta, r.names);
    groups.push_back({{"eta", eta}, {"exponents", exponents_json(g.exponents)}, {"powered", g.powered}});
    CycFactorization cf;
    cf.exponents = g.exponents;
    cf.residual = UniPoly{1};
    out.text += "group " + eta + ": " + cf.to_string("t") + (g.powered ? " (powered)" : " (not powered)") + "\n";
  }
  out.data["factored"] = f.to_string(r.names);
  out.data["groups"] = groups;
  out.data["expanded"] = e.to_string(r.names);
  out.data["power_closed"] = v.power_closed;
  out.data["witness"] = v.witness;
  out.text += "expanded: " + e.to_string(r.names) + "\n";
  out.text += std::string("power_closed: ") + (v.power_closed ? "true" : "false") + "\n";
  if (!v.witness.empty()) out.text += "witness: " + v.witness + "\n";
  if (cross_check) {
    bool gb = is_power_closed(Ideal({e}, r.names.size(), r.mode));
    out.data["groebner_power_closed"] = gb;
    out.text += std::string("groebner: ") + (gb ? "true" : "false") + "\n";
    if (gb != v.power_closed) {
      out.ok = false;
      out.text += "error: classifier and Groebner disagree\n";
    }
  }
  return out;
}

Output cmd_binomial_factor(const Settings& s, const std::string& text) {
  Ring r = make_ring(s, {text});
  BinomialFactorization b = binomial_factor(parse_polynomial(text, r.context), r.order);
  Output out;
  describe_ring(r, out);
  std::vector<std::string> roots;
  for (const auto& root : b.roots) roots.push_back(root.to_string());
  out.data["content"] = monomial_to_string(b.content, r.names);
  out.data["p"] = b.p;
  out.data["q"] = b.q;
  out.data["h"] = b.h;
  out.data["roots"] = roots;
  out.data["factored"] = b.to_string(r.names);
  out.data["irreducible"] = b.h == 1;
  out.text += b.to_string(r.names) + "\n";
  return out;
}

Output cmd_lines(const std::string& text) {
  LineFamily lines = zero_sum_lines(parse_scalar_list(text));
  Output out;
  json subsets = json::array();
  for (const auto& sset : lines.subsets) {
    std::vector<std::size_t> one_based;
    for (auto i : sset) one_based.push_back(i + 1);
    subsets.push_back(one_based);
  }
  out.data = {{"dim", lines.dim}, {"lines", subsets}};
  out.text = lines.to_string() + "\n";
  return out;
}

Output cmd_radical_linear(const std::string& text) {
  auto a = parse_scalar_list(text);
  RadicalResult res = radical_of_linear_closure(a);
  Ring r{default_variable_names(a.size()), RingMode::kPolynomial, TermOrder::deglex(a.size()), {}};
  Output out;
  std::vector<std::string> comps;
  for (const auto& c : res.components) comps.push_back(c.to_string());
  out.data["components"] = comps;
  out.text += "components: " + join(comps, " ") + "\n";
  add_basis(groebner(res.radical), r, out, "radical");
  out.data["contained_in_radical"] = res.contained_in_radical;
  out.data["closure_in_components"] = res.closure_in_components;
  out.text += std::string("validated: ") + (res.contained_in_radical && res.closure_in_components ? "true" : "false") + "\n";
  out.ok = res.contained_in_radical && res.closure_in_components;
  return out;
}

void add_subgroup(const TorusSubgroup& g, Output& out) {
  IsoType iso = subgroup_iso_type(g);
  std::vector<std::string> inv;
  for (const auto& c : iso.cyclic_invariants) inv.push_back(c.get_str());
  out.data["lattice"] = g.lattice().to_string();
  out.data["torus_rank"] = iso.torus_rank;
  out.data["cyclic_invariants"] = inv;
  out.data["iso_type"] = iso.to_string();
  out.text += "lattice: " + g.lattice().to_string() + "\niso type: " + iso.to_string() + "\n";
}

Output cmd_torus(const Settings& s, const std::string& text) {
  Ring r = make_ring(s, {text});
  Output out;
  describe_ring(r, out);
  add_subgroup(torus_subgroup(parse_polynomial(text, r.context)), out);
  return out;
}

Output cmd_torus_iso(const std::string& text) {
  IntMatrix rows;
  std::size_t dim = 0;
  for (const auto& row : split_list(text, ';')) {
    IntVector v;
    for (const auto& entry : split_list(row)) {
      FieldElement c = parse_scalar(entry);
      if (!c.is_integer()) throw std::invalid_argument("lattice entries must be integers");
      v.push_back(c.rational_part().get_num());
    }
    if (dim != 0 && v.size() != dim) throw std::invalid_argument("lattice rows must have equal length");
    dim = v.size();
    rows.push_back(v);
  }
  if (dim == 0) throw std::invalid_argument("empty lattice");
  Output out;
  add_subgroup(TorusSubgroup(ExponentLattice(dim, rows)), out);
  return out;
}

Output cmd_it_gens(const Settings& s, const std::string& text) {
  auto point = parse_point(text);
  Ring r{s.vars.empty() ? default_variable_names(point.size()) : split_list(s.vars), RingMode::kPolynomial,
         TermOrder::deglex(point.size()), {}};
  if (r.names.size() != point.size()) throw std::invalid_argument("--vars must name one variable per coordinate");
  Ideal ideal = it_generators(point);
  Output out;
  add_generators(ideal, r, out);
  return out;
}

Output cmd_certify(const std::vector<std::string>& only, const std::string& perturb, bool list, long budget) {
  Output out;
  if (list) {
    out.data["topics"] = certificate_topics();
    out.data["certificates"] = certificate_ids();
    out.text = "topics: " + join(certificate_topics(), ", ") + "\n" + join(certificate_ids(), "\n") + "\n";
    return out;
  }
  CertificateOptions options;
  options.only = std::set<std::string>(only.begin(), only.end());
  if (!perturb.empty()) options.perturb = perturb;
  options.stretch_budget = std::chrono::seconds(budget);
  json results = json::array();
  int failed = 0;
  for (const auto& r : run_certificates(options)) {
    results.push_back({{"id", r.id}, {"topic", r.topic}, {"anchor", r.anchor}, {"passed", r.passed}, {"detail", r.detail}});
    std::ostringstream line;
    line << (r.passed ? "PASS " : "FAIL ") << r.topic << "/" << r.id << " -- " << r.anchor << "\n     " << r.detail
         << "\n";
    out.text += line.str();
    if (!r.passed) ++failed;
  }
  out.data["results"] = results;
  out.data["failed"] = failed;
  out.text += std::to_string(results.size() - failed) + "/" + std::to_string(results.size()) + " passed\n";
  out.ok = failed == 0;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact power-closures, power-interiors and zero loci of ideals"};
  app.require_subcommand(1);
  Settings settings;
  auto add_common = [&settings](CLI::App* sub) {
    sub->add_option("--ring", settings.ring, "poly or laurent")->check(CLI::IsMember({"poly", "laurent"}));
    sub->add_option("--order", settings.order, "lex or deglex (last variable largest)")
        ->check(CLI::IsMember({"lex", "deglex"}));
    sub->add_option("--vars", settings.vars, "comma-separated variables, smallest first");
    sub->add_option("--field", settings.field, "rational or sqrt(m)");
    sub->add_flag("--json", settings.json, "machine-readable output");
  };

  std::function<Output()> action;
  std::string f_text, second, form = "both", mode = "star", point, binomial, perturb;
  std::vector<std::string> gens, only;
  long bound = 10;
  long budget = 1800;
  bool cross_check = false, list = false;

  auto unary = [&](const std::string& name, const std::string& help, auto fn) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub);
    sub->add_option("f", f_text, "polynomial in one variable")->required();
    sub->callback([&, fn] { action = [&, fn] { return fn(settings, f_text); }; });
    return sub;
  };
  unary("factor", "cyclotomic factorization of a univariate polynomial", cmd_factor);
  unary("is-powered", "does f divide f(x^i) for all i", cmd_is_powered);
  unary("star", "generator of the power-closure of (f)", cmd_star);
  unary("circle", "generator of the power-interior of (f); (0) if zero", cmd_circle);
  auto* psi = unary("psi", "nested psi decomposition of a powered polynomial",
                    [&form](const Settings& s, const std::string& t) { return cmd_psi(s, t, form); });
  psi->add_option("--form", form, "chain, binomial or both")->check(CLI::IsMember({"chain", "binomial", "both"}));
  auto* down = unary("downset", "divisor-closed index bound for star or circle",
                     [&mode](const Settings& s, const std::string& t) { return cmd_downset(s, t, mode); });
  down->add_option("--mode", mode, "star or circle")->check(CLI::IsMember({"star", "circle"}));

  auto ideal_cmd = [&](const std::string& name, const std::string& help, auto fn) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub);
    sub->add_option("generators", gens, "generators (separate arguments or comma-separated)")->required();
    sub->callback([&, fn] { action = [&, fn] { return fn(settings, gens); }; });
    return sub;
  };
  ideal_cmd("closure", "power-closure generators and Groebner basis", cmd_closure);
  ideal_cmd("is-closed", "is the ideal power-closed", cmd_is_closed);
  ideal_cmd("groebner", "reduced Groebner basis (Laurent ideals are saturated first)", cmd_groebner);

  auto member_cmd = [&](const std::string& name, const std::string& help, auto fn) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub);
    sub->add_option("f", f_text, "candidate element")->required();
    sub->add_option("generators", gens, "ideal generators")->required();
    sub->callback([&, fn] { action = [&, fn] { return fn(settings, f_text, gens); }; });
    return sub;
  };
  member_cmd("member", "ideal membership", cmd_member);
  member_cmd("radical-member", "radical membership", cmd_radical_member);
  auto* interior = member_cmd("interior-test", "are f^(1..bound) all in the ideal",
                              [&bound](const Settings& s, const std::string& f, const std::vector<std::string>& g) {
                                return cmd_interior_test(s, f, g, bound);
                              });
  interior->add_option("--bound", bound, "largest substitution exponent")->check(CLI::PositiveNumber);

  {
    auto* sub = app.add_subcommand("intersect", "intersection of two ideals given as comma-separated lists");
    add_common(sub);
    sub->add_option("left", f_text)->required();
    sub->add_option("right", second)->required();
    sub->callback([&] { action = [&] { return cmd_intersect(settings, f_text, second); }; });
  }
  {
    auto* sub = app.add_subcommand("classify-principal", "decide whether a factored principal ideal is power-closed");
    add_common(sub);
    sub->add_option("f", f_text, "e.g. \"x*(x/y - 1)^2*(x/y - zeta(3,*))\"")->required();
    sub->add_flag("--cross-check", cross_check, "confirm the verdict with Groebner bases");
    sub->callback([&] { action = [&] { return cmd_classify(settings, f_text, cross_check); }; });
  }
  {
    auto* sub = app.add_subcommand("binomial-factor", "factor a binomial over the roots of unity");
    add_common(sub);
    sub->add_option("b", f_text)->required();
    sub->callback([&] { action = [&] { return cmd_binomial_factor(settings, f_text); }; });
  }
  {
    auto* sub = app.add_subcommand("lines", "zero-sum subsets of a coefficient vector");
    add_common(sub);
    sub->add_option("coefficients", f_text, "e.g. \"1, -1, 1, -1\"")->required();
    sub->callback([&] { action = [&] { return cmd_lines(f_text); }; });
  }
  {
    auto* sub = app.add_subcommand("radical-linear", "radical of the power-closure of a linear form");
    add_common(sub);
    sub->add_option("coefficients", f_text)->required();
    sub->callback([&] { action = [&] { return cmd_radical_linear(f_text); }; });
  }
  {
    auto* sub = app.add_subcommand("torus", "torus subgroup cut out by a binomial");
    add_common(sub);
    sub->add_option("--binomial,binomial", binomial)->required();
    sub->callback([&] { action = [&] { return cmd_torus(settings, binomial); }; });
  }
  {
    auto* sub = app.add_subcommand("torus-iso", "isomorphism type of the subgroup of a lattice");
    add_common(sub);
    sub->add_option("lattice", f_text, "rows separated by ';', e.g. \"2,-2\"")->required();
    sub->callback([&] { action = [&] { return cmd_torus_iso(f_text); }; });
  }
  {
    auto* sub = app.add_subcommand("it-gens", "vanishing ideal of the power orbit of a torsion point");
    add_common(sub);
    sub->add_option("--point,point", point, "e.g. \"zeta(4,1), 0\"")->required();
    sub->callback([&] { action = [&] { return cmd_it_gens(settings, point); }; });
  }
  {
    auto* sub = app.add_subcommand("certify", "reproduce the worked examples");
    add_common(sub);
    sub->add_option("--only", only, "topics to run")->check(CLI::IsMember(certificate_topics()));
    sub->add_option("--perturb", perturb, "alter the expected value of one certificate");
    sub->add_option("--budget", budget, "seconds allowed for the long intersection")->check(CLI::PositiveNumber);
    sub->add_flag("--list", list, "list topics and certificate ids");
    sub->callback([&] { action = [&] { return cmd_certify(only, perturb, list, budget); }; });
  }

  CLI11_PARSE(app, argc, argv);
  try {
    Output out = action();
    if (settings.json) {
      out.data["ok"] = out.ok;
      std::cout << out.data.dump(2) << "\n";
    } else {
      std::cout << out.text;
    }
    return out.ok ? 0 : 1;
  } catch (const std::exception& e) {
    if (settings.json) {
      std::cout << json{{"ok", false}, {"error", e.what()}}.dump(2) << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return 2;
  }
}
