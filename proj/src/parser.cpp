#include "pci/parser.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>

#include "pci/cyclotomic.hpp"

namespace pci {

ParseError::ParseError(const std::string& message, std::size_t column)
    : std::invalid_argument(message + " (column " + std::to_string(column + 1) + ")"), column_(column) {}

namespace {

enum class Tok { kNumber, kIdent, kSymbol, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;
};

const std::set<std::string> kKeywords = {"sqrt", "phi", "zeta", "prod"};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Tok::kNumber, text.substr(i, j - i), i});
      i = j;
    } else if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({Tok::kIdent, text.substr(i, j - i), i});
      i = j;
    } else if (std::string("+-*/^(),").find(static_cast<char>(c)) != std::string::npos) {
      out.push_back({Tok::kSymbol, std::string(1, static_cast<char>(c)), i});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", i);
    }
  }
  out.push_back({Tok::kEnd, "", text.size()});
  return out;
}

long to_long(const Token& t) {
  try {
    std::size_t used = 0;
    long v = std::stol(t.text, &used);
    if (used != t.text.size()) throw ParseError("bad integer", t.column);
    return v;
  } catch (const std::out_of_range&) {
    throw ParseError("integer too large", t.column);
  }
}

class Parser {
 public:
  Parser(const std::string& text, ParseContext context) : tokens_(tokenize(text)), ctx_(std::move(context)) {}

  MultiPoly parse_all() {
    MultiPoly f = expression();
    expect_end();
    return f;
  }

  void expect_end() const {
    if (peek().kind != Tok::kEnd) throw ParseError("unexpected '" + peek().text + "'", peek().column);
  }

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  bool at(const std::string& symbol, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::kSymbol && peek(ahead).text == symbol;
  }
  bool at_ident(const std::string& name) const { return peek().kind == Tok::kIdent && peek().text == name; }
  Token next() {
    Token t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }
  void expect(const std::string& symbol) {
    if (!at(symbol)) {
      throw ParseError("expected '" + symbol + "'" + (peek().kind == Tok::kEnd ? " at end of input" : ""),
                       peek().column);
    }
    next();
  }
  std::size_t position() const { return pos_; }
  void rewind(std::size_t pos) { pos_ = pos; }
  std::size_t nvars() const { return ctx_.names.size(); }
  RingMode mode() const { return ctx_.mode; }
  void set_mode(RingMode mode) { ctx_.mode = mode; }

  long signed_integer() {
    bool negative = false;
    if (at("-") || at("+")) negative = next().text == "-";
    if (peek().kind != Tok::kNumber) throw ParseError("expected an integer", peek().column);
    long v = to_long(next());
    return negative ? -v : v;
  }

  MultiPoly expression() {
    MultiPoly f(nvars(), mode());
    bool negate = false;
    if (at("-") || at("+")) negate = next().text == "-";
    MultiPoly t = term();
    f = negate ? -t : t;
    while (at("+") || at("-")) {
      bool minus = next().text == "-";
      MultiPoly u = term();
      f = minus ? f - u : f + u;
    }
    return f;
  }

  bool starts_primary() const {
    const Token& t = peek();
    return t.kind == Tok::kNumber || (t.kind == Tok::kIdent && t.text != "zeta") || at("(");
  }

  MultiPoly term() {
    MultiPoly f = factor();
    while (true) {
      if (at("*")) {
        next();
        f = f * factor();
      } else if (at("/")) {
        std::size_t column = next().column;
        f = divide(f, factor(), column);
      } else if (starts_primary()) {
        f = f * factor();
      } else {
        return f;
      }
    }
  }

  MultiPoly divide(const MultiPoly& f, const MultiPoly& g, std::size_t column) const {
    if (g.is_zero()) throw ParseError("division by zero", column);
    if (!g.is_monomial()) throw ParseError("can only divide by a constant or a monomial", column);
    const auto& [m, c] = *g.terms().begin();
    if (!m.is_one() && mode() != RingMode::kLaurent) {
      throw ParseError("dividing by a variable needs the Laurent ring", column);
    }
    return f.times_monomial(m.negated()) * c.inverse();
  }

  MultiPoly factor() {
    std::size_t column = peek().column;
    MultiPoly base = primary();
    if (!at("^")) return base;
    next();
    std::size_t exp_column = peek().column;
    long e = signed_integer();
    if (e >= 0) {
      if (e > 100000) throw ParseError("exponent too large", exp_column);
      return base.pow(static_cast<unsigned>(e));
    }
    if (base.is_zero()) throw ParseError("zero to a negative power", column);
    if (!base.is_monomial()) throw ParseError("negative powers need a monomial base", column);
    const auto& [m, c] = *base.terms().begin();
    if (!m.is_one() && mode() != RingMode::kLaurent) {
      throw ParseError("negative exponents need the Laurent ring", exp_column);
    }
    if (e < std::numeric_limits<int>::min() / 2) throw ParseError("exponent too large", exp_column);
    return MultiPoly::term(c.pow(e), m.scaled(static_cast<int>(e)), mode());
  }

  MultiPoly primary() {
    const Token t = peek();
    if (t.kind == Tok::kNumber) {
      next();
      return MultiPoly::constant(nvars(), FieldElement(Rational(Integer(t.text))), mode());
    }
    if (at("(")) {
      next();
      MultiPoly f = expression();
      expect(")");
      return f;
    }
    if (t.kind != Tok::kIdent) {
      throw ParseError(t.kind == Tok::kEnd ? "unexpected end of input" : "unexpected '" + t.text + "'", t.column);
    }
    next();
    if (t.text == "sqrt") return MultiPoly::constant(nvars(), square_root(t.column), mode());
    if (t.text == "phi") {
      expect("(");
      std::size_t column = peek().column;
      long n = signed_integer();
      expect(")");
      if (n < 1) throw ParseError("phi(n) needs n >= 1", column);
      if (nvars() != 1) throw ParseError("phi(n) is only available with a single variable", t.column);
      return MultiPoly::from_unipoly(cyclotomic_poly(n), 1, 0, mode());
    }
    if (t.text == "zeta" || t.text == "prod") throw ParseError("'" + t.text + "' is not allowed here", t.column);
    auto it = std::find(ctx_.names.begin(), ctx_.names.end(), t.text);
    if (it == ctx_.names.end()) throw ParseError("unknown variable '" + t.text + "'", t.column);
    return MultiPoly::variable(nvars(), static_cast<std::size_t>(it - ctx_.names.begin()), mode());
  }

  FieldElement square_root(std::size_t column) {
    expect("(");
    std::size_t arg_column = peek().column;
    long k = signed_integer();
    expect(")");
    if (k == 0) return FieldElement(0);
    SquarefreeSplit split = squarefree_split(k);
    if (split.core == 1) return FieldElement(Rational(split.square));
    if (ctx_.radicand && *ctx_.radicand != split.core) {
      if (*ctx_.radicand == 0) throw ParseError("irrational coefficients are not allowed here", column);
      throw ParseError("sqrt(" + std::to_string(split.core) + ") is outside Q(sqrt(" +
                           std::to_string(*ctx_.radicand) + "))",
                       arg_column);
    }
    if (seen_radicand_ && *seen_radicand_ != split.core) {
      throw ParseError("mixed quadratic extensions sqrt(" + std::to_string(*seen_radicand_) + ") and sqrt(" +
                           std::to_string(split.core) + ")",
                       arg_column);
    }
    seen_radicand_ = split.core;
    return FieldElement(0, Rational(split.square), split.core);
  }

  // zeta(n,k) or zeta(n,*), after the identifier.
  Root zeta() {
    expect("(");
    std::size_t column = peek().column;
    long n = signed_integer();
    if (n < 1) throw ParseError("zeta order must be positive", column);
    expect(",");
    Root r;
    if (at("*")) {
      next();
      r = Root::all_primitive(n);
    } else {
      r = Root::unity(n, signed_integer());
    }
    expect(")");
    return r;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  ParseContext ctx_;
  std::optional<long> seen_radicand_;
};

template <typename F>
auto with_field_errors(F&& body) {
  try {
    return body();
  } catch (const FieldMismatch& e) {
    throw ParseError(std::string("mixed quadratic extensions: ") + e.what(), 0);
  }
}

std::vector<std::string> split_top_level(const std::string& text) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string current;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

bool natural_less(const std::string& a, const std::string& b) {
  auto split = [](const std::string& s) {
    std::size_t i = s.size();
    while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
    return std::make_pair(s.substr(0, i), s.substr(i));
  };
  auto [pa, na] = split(a);
  auto [pb, nb] = split(b);
  if (pa != pb) return pa < pb;
  if (na.size() != nb.size()) return na.size() < nb.size();
  return na < nb;
}

Root negate_root(const Root& r) {
  switch (r.kind) {
    case Root::Kind::kUnity:
      return Root::unity(2 * r.order, 2 * r.index + r.order).normalized();
    case Root::Kind::kAllPrimitive: {
      long n = r.order;
      if (n % 2 == 1) return Root::all_primitive(2 * n);
      if (n % 4 == 2) return Root::all_primitive(n / 2);
      return r;
    }
    case Root::Kind::kScalar:
      return Root::from_scalar(-r.scalar);
  }
  return r;
}

Root times_root(const Root& r, const FieldElement& c, std::size_t column) {
  if (c.is_one()) return r;
  if (c == FieldElement(-1)) return negate_root(r);
  if (r.kind == Root::Kind::kUnity && r.normalized().order == 1) return Root::from_scalar(c);
  throw ParseError("a zeta root can only be combined with the scalars 1 and -1", column);
}

// Parses "(lhs -/+ root)" when the current token is '('. Returns nullopt and
// leaves the position unchanged if the group is not a binomial factor.
std::optional<BinomialFactor> binomial_group(Parser& p, FieldElement& unit, Monomial& cofactor) {
  const std::size_t start = p.position();
  const std::size_t column = p.peek().column;
  p.expect("(");
  MultiPoly lhs = p.term();
  if (!(p.at("-") || p.at("+")) || !lhs.is_monomial() || lhs.is_constant()) {
    p.rewind(start);
    return std::nullopt;
  }
  const bool plus = p.next().text == "+";
  Root root = Root::unity(1, 0);
  MultiPoly rest = MultiPoly::constant(p.nvars(), FieldElement(1), p.mode());
  bool any = false;
  while (!p.at(")")) {
    if (p.peek().kind == Tok::kEnd) throw ParseError("expected ')' at end of input", p.peek().column);
    if (any && p.at("*")) p.next();
    if (p.at_ident("zeta")) {
      std::size_t zeta_column = p.next().column;
      if (root.kind != Root::Kind::kUnity || root.order != 1) throw ParseError("more than one zeta", zeta_column);
      root = p.zeta();
    } else if (p.at("/")) {
      std::size_t div_column = p.next().column;
      rest = p.divide(rest, p.factor(), div_column);
    } else {
      rest = rest * p.factor();
    }
    any = true;
  }
  if (!any) throw ParseError("missing root after the sign", p.peek().column);
  p.expect(")");
  if (rest.is_zero()) throw ParseError("the root must be nonzero", column);
  if (!rest.is_monomial()) throw ParseError("a factor must have exactly two terms", column);
  const auto& [m_lhs, c_lhs] = *lhs.terms().begin();
  const auto& [m_rest, c_rest] = *rest.terms().begin();
  FieldElement scalar = c_rest / c_lhs;
  if (plus) scalar = -scalar;
  BinomialFactor factor;
  factor.xi = m_lhs / m_rest;
  if (factor.xi.is_one()) throw ParseError("both terms use the same monomial", column);
  if (root.kind == Root::Kind::kUnity && root.normalized().order == 1) {
    factor.rho = Root::from_scalar(scalar);
  } else {
    factor.rho = times_root(root, scalar, column);
  }
  if (p.at("^")) {
    p.next();
    std::size_t e_column = p.peek().column;
    long e = p.signed_integer();
    if (e < 1 || e > 100000) throw ParseError("factor exponents must be positive", e_column);
    factor.multiplicity = static_cast<int>(e);
  }
  // lhs - rest = c_lhs * x^{m_rest} * (xi - rho).
  unit *= c_lhs.pow(factor.multiplicity);
  cofactor = cofactor * m_rest.scaled(factor.multiplicity);
  return factor;
}

}  // namespace

std::vector<std::string> infer_variables(const std::vector<std::string>& inputs) {
  std::set<std::string> seen;
  for (const auto& text : inputs) {
    for (const auto& t : tokenize(text)) {
      if (t.kind == Tok::kIdent && !kKeywords.count(t.text)) seen.insert(t.text);
    }
  }
  std::vector<std::string> out;
  for (const char* base : {"x", "y", "z", "w"}) {
    if (seen.erase(base)) out.push_back(base);
  }
  std::vector<std::string> rest(seen.begin(), seen.end());
  std::sort(rest.begin(), rest.end(), natural_less);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

MultiPoly parse_polynomial(const std::string& text, const ParseContext& context) {
  if (context.names.size() > kMaxVariables) throw ParseError("too many variables", 0);
  return with_field_errors([&] { return Parser(text, context).parse_all(); });
}

UniPoly parse_univariate(const std::string& text, const std::string& var) {
  MultiPoly f = parse_polynomial(text, ParseContext{{var}, RingMode::kPolynomial, std::nullopt});
  return f.to_unipoly();
}

FieldElement parse_scalar(const std::string& text) {
  MultiPoly f = parse_polynomial(text, ParseContext{{}, RingMode::kPolynomial, std::nullopt});
  return f.is_zero() ? FieldElement(0) : f.terms().begin()->second;
}

std::vector<FieldElement> parse_scalar_list(const std::string& text) {
  std::vector<FieldElement> out;
  std::optional<long> radicand;
  for (const auto& part : split_top_level(text)) {
    FieldElement c = parse_scalar(part);
    if (c.radicand() != 0) {
      if (radicand && *radicand != c.radicand()) throw ParseError("mixed quadratic extensions in list", 0);
      radicand = c.radicand();
    }
    out.push_back(c);
  }
  return out;
}

FactoredPrincipal parse_factored(const std::string& text, const ParseContext& context) {
  return with_field_errors([&] {
    ParseContext laurent = context;
    laurent.mode = RingMode::kLaurent;
    Parser p(text, laurent);
    FactoredPrincipal out;
    out.nvars = context.names.size();
    out.monomial = Monomial(out.nvars);
    auto item = [&](auto& self) -> void {
      if (p.at_ident("prod") && p.at("(", 1)) {
        p.next();
        p.next();
        while (true) {
          self(self);
          while (p.at("*") || (!p.at(",") && !p.at(")") && p.peek().kind != Tok::kEnd)) {
            if (p.at("*")) p.next();
            self(self);
          }
          if (p.at(",")) {
            p.next();
            continue;
          }
          p.expect(")");
          return;
        }
      }
      if (p.at("(")) {
        std::size_t start = p.position();
        auto factor = binomial_group(p, out.scalar, out.monomial);
        if (factor) {
          out.factors.push_back(*factor);
          return;
        }
        p.rewind(start);
      }
      std::size_t column = p.peek().column;
      MultiPoly f = p.factor();
      if (f.is_zero()) throw ParseError("zero factor", column);
      if (!f.is_monomial()) {
        throw ParseError("expected a binomial factor (xi - rho), a scalar or a monomial", column);
      }
      out.scalar *= f.terms().begin()->second;
      out.monomial = out.monomial * f.terms().begin()->first;
    };
    item(item);
    while (p.peek().kind != Tok::kEnd) {
      if (p.at("*")) p.next();
      item(item);
    }
    return out;
  });
}

std::vector<PointCoordinate> parse_point(const std::string& text) {
  std::vector<PointCoordinate> out;
  std::size_t offset = 0;
  for (const auto& part : split_top_level(text)) {
    try {
      Parser p(part, ParseContext{{}, RingMode::kPolynomial, std::nullopt});
      if (p.at_ident("zeta")) {
        p.next();
        Root r = p.zeta();
        p.expect_end();
        if (r.kind == Root::Kind::kAllPrimitive) throw ParseError("a point needs a single root", 0);
        r = r.normalized();
        out.push_back({false, r.order, r.index});
      } else {
        MultiPoly f = p.parse_all();
        FieldElement c = f.is_zero() ? FieldElement(0) : f.terms().begin()->second;
        if (c.is_zero()) {
          out.push_back({true, 1, 0});
        } else {
          Root r = Root::from_scalar(c);
          if (!r.is_root_of_unity()) throw ParseError(c.to_string() + " is neither 0 nor a root of unity", 0);
          out.push_back({false, r.order, r.index});
        }
      }
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).rfind(" (column")),
                       offset + e.column());
    }
    offset += part.size() + 1;
  }
  return out;
}

}  // namespace pci
