#include "pci/groebner.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace pci {

namespace {

struct Term {
  Monomial m;
  FieldElement c;
};

// Terms in strictly decreasing order.
using Poly = std::vector<Term>;

Poly to_poly(const MultiPoly& f, const TermOrder& order) {
  Poly p;
  p.reserve(f.size());
  for (const auto& [m, c] : f.terms()) {
    if (m.has_negative_exponent()) throw std::invalid_argument("Groebner bases need nonnegative exponents");
    p.push_back({m, c});
  }
  std::sort(p.begin(), p.end(), [&order](const Term& a, const Term& b) { return order.less(b.m, a.m); });
  return p;
}

MultiPoly from_poly(const Poly& p, std::size_t nvars) {
  MultiPoly f(nvars);
  for (const auto& t : p) f.add_term(t.m, t.c);
  return f;
}

void make_monic(Poly& p) {
  if (p.empty() || p.front().c.is_one()) return;
  FieldElement inv = p.front().c.inverse();
  for (auto& t : p) t.c *= inv;
}

// p[start..] - c * m * g, assuming the leading terms cancel.
Poly subtract_multiple(const Poly& p, std::size_t start, const FieldElement& c, const Monomial& m, const Poly& g,
                       const TermOrder& order) {
  Poly out;
  out.reserve(p.size() - start + g.size());
  std::size_t i = start + 1;
  std::size_t j = 1;
  while (i < p.size() || j < g.size()) {
    if (j >= g.size()) {
      out.push_back(p[i++]);
      continue;
    }
    Monomial gm = g[j].m * m;
    int cmp = i < p.size() ? order.compare(p[i].m, gm) : -1;
    if (cmp > 0) {
      out.push_back(p[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, -(c * g[j].c)});
      ++j;
    } else {
      FieldElement v = p[i].c - c * g[j].c;
      if (!v.is_zero()) out.push_back({gm, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

class Deadline {
 public:
  explicit Deadline(const GroebnerLimits& limits) : limits_(limits) {}
  void check() {
    if (!limits_.deadline || ticks_++ % 64 != 0) return;
    if (std::chrono::steady_clock::now() > *limits_.deadline) {
      throw ComputationTimeout("Groebner basis computation exceeded its time budget");
    }
  }

 private:
  const GroebnerLimits& limits_;
  unsigned long ticks_ = 0;
};

// Full reduction by monic reducers; picks the shortest applicable reducer.
Poly reduce(Poly p, const std::vector<const Poly*>& reducers, const TermOrder& order, Deadline* deadline) {
  Poly result;
  std::size_t head = 0;
  while (head < p.size()) {
    const Poly* best = nullptr;
    for (const Poly* r : reducers) {
      if (r->front().m.divides(p[head].m) && (best == nullptr || r->size() < best->size())) best = r;
    }
    if (best == nullptr) {
      result.push_back(std::move(p[head]));
      ++head;
      continue;
    }
    if (deadline) deadline->check();
    FieldElement c = p[head].c;
    p = subtract_multiple(p, head, c, p[head].m / best->front().m, *best, order);
    head = 0;
  }
  return result;
}

Poly s_polynomial(const Poly& f, const Poly& g, const Monomial& l, const TermOrder& order) {
  Poly a;
  a.reserve(f.size());
  Monomial mf = l / f.front().m;
  for (const auto& t : f) a.push_back({t.m * mf, t.c});
  return subtract_multiple(a, 0, FieldElement(1), l / g.front().m, g, order);
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(const TermOrder& order, const GroebnerLimits& limits) : order_(order), deadline_(limits) {}

  void add(Poly h) {
    h = reduce(std::move(h), active_reducers(), order_, &deadline_);
    if (h.empty()) return;
    make_monic(h);
    update(std::move(h));
  }

  void run() {
    while (!pairs_.empty()) {
      deadline_.check();
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        int cmp = order_.compare(pairs_[k].lcm, pairs_[best].lcm);
        if (cmp < 0 || (cmp == 0 && std::tie(pairs_[k].i, pairs_[k].j) < std::tie(pairs_[best].i, pairs_[best].j))) {
          best = k;
        }
      }
      Pair p = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<long>(best));
      add(s_polynomial(store_[p.i], store_[p.j], p.lcm, order_));
    }
  }

  std::vector<Poly> reduced_basis() {
    std::vector<std::size_t> g;
    for (std::size_t k = 0; k < store_.size(); ++k) {
      if (active_[k]) g.push_back(k);
    }
    std::vector<Poly> out;
    for (std::size_t k : g) {
      std::vector<const Poly*> others;
      for (std::size_t other : g) {
        if (other != k) others.push_back(&store_[other]);
      }
      Poly r = reduce(store_[k], others, order_, &deadline_);
      make_monic(r);
      out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(),
              [this](const Poly& a, const Poly& b) { return order_.less(a.front().m, b.front().m); });
    return out;
  }

 private:
  std::vector<const Poly*> active_reducers() const {
    std::vector<const Poly*> out;
    for (std::size_t k = 0; k < store_.size(); ++k) {
      if (active_[k]) out.push_back(&store_[k]);
    }
    return out;
  }

  void update(Poly h_poly) {
    const std::size_t h = store_.size();
    store_.push_back(std::move(h_poly));
    active_.push_back(false);
    const Monomial& lh = store_[h].front().m;
    if (lh.is_one()) {
      std::fill(active_.begin(), active_.end(), false);
      active_[h] = true;
      pairs_.clear();
      return;
    }

    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < h; ++g) {
      if (active_[g]) candidates.push_back({g, h, lcm(store_[g].front().m, lh)});
    }
    std::vector<Pair> kept;
    std::vector<bool> coprime;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const Pair& c = candidates[k];
      bool is_coprime = store_[c.i].front().m.coprime(lh);
      bool redundant = false;
      if (!is_coprime) {
        for (std::size_t r = k + 1; r < candidates.size() && !redundant; ++r) {
          redundant = candidates[r].lcm.divides(c.lcm);
        }
        for (std::size_t r = 0; r < kept.size() && !redundant; ++r) redundant = kept[r].lcm.divides(c.lcm);
      }
      if (!redundant) {
        kept.push_back(c);
        coprime.push_back(is_coprime);
      }
    }

    std::erase_if(pairs_, [&](const Pair& p) {
      return lh.divides(p.lcm) && !(lcm(store_[p.i].front().m, lh) == p.lcm) &&
             !(lcm(store_[p.j].front().m, lh) == p.lcm);
    });
    for (std::size_t k = 0; k < kept.size(); ++k) {
      if (!coprime[k]) pairs_.push_back(kept[k]);
    }

    for (std::size_t g = 0; g < h; ++g) {
      if (active_[g] && lh.divides(store_[g].front().m)) active_[g] = false;
    }
    active_[h] = true;
  }

  const TermOrder& order_;
  Deadline deadline_;
  std::vector<Poly> store_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

std::size_t common_nvars(const std::vector<MultiPoly>& polys, std::size_t fallback) {
  std::size_t n = polys.empty() ? fallback : polys.front().nvars();
  for (const auto& f : polys) {
    if (f.nvars() != n) throw std::invalid_argument("generators live in rings of different dimension");
  }
  return n;
}

// Index of the only variable occurring in the generators, if there is one.
std::optional<std::size_t> single_variable(const std::vector<MultiPoly>& generators, std::size_t n) {
  std::optional<std::size_t> found;
  for (std::size_t v = 0; v < n; ++v) {
    bool used = std::any_of(generators.begin(), generators.end(), [v](const MultiPoly& f) { return f.uses_variable(v); });
    if (!used) continue;
    if (found) return std::nullopt;
    found = v;
  }
  return found;
}

// In one variable the reduced basis is the monic gcd; Euclid avoids the
// coefficient swell of pair-by-pair reduction.
GroebnerBasis univariate_basis(const std::vector<MultiPoly>& generators, std::size_t n, std::size_t v,
                               const TermOrder& order) {
  std::vector<UniPoly> polys;
  for (const auto& f : generators) {
    if (f.is_zero()) continue;
    std::vector<FieldElement> c;
    for (const auto& [m, coeff] : f.terms()) {
      if (m.has_negative_exponent()) throw std::invalid_argument("Groebner bases need nonnegative exponents");
      auto k = static_cast<std::size_t>(m[v]);
      if (c.size() <= k) c.resize(k + 1);
      c[k] += coeff;
    }
    polys.emplace_back(std::move(c));
  }
  if (polys.empty()) return GroebnerBasis({}, order);
  std::sort(polys.begin(), polys.end(), [](const UniPoly& a, const UniPoly& b) { return a.degree() < b.degree(); });
  UniPoly g = polys.front();
  for (std::size_t k = 1; k < polys.size() && g.degree() > 0; ++k) {
    UniPoly r = polys[k] % g;
    if (!r.is_zero()) g = gcd(g, r);
  }
  return GroebnerBasis({MultiPoly::from_unipoly(g.monic(), n, v)}, order);
}

}  // namespace

bool GroebnerBasis::is_unit() const { return elements_.size() == 1 && elements_.front().is_constant(); }

MultiPoly GroebnerBasis::normal_form(const MultiPoly& f) const { return pci::normal_form(f, elements_, order_); }

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& divisors, const TermOrder& order) {
  std::vector<Poly> polys;
  for (const auto& g : divisors) {
    if (g.nvars() != f.nvars()) throw std::invalid_argument("polynomial and ideal live in different rings");
    if (g.is_zero()) continue;
    Poly p = to_poly(g, order);
    make_monic(p);
    polys.push_back(std::move(p));
  }
  std::vector<const Poly*> reducers;
  for (const auto& p : polys) reducers.push_back(&p);
  return from_poly(reduce(to_poly(f, order), reducers, order, nullptr), f.nvars());
}

GroebnerBasis groebner(const std::vector<MultiPoly>& generators, const TermOrder& order,
                       const GroebnerLimits& limits) {
  const std::size_t n = common_nvars(generators, order.nvars());
  if (order.nvars() != n) throw std::invalid_argument("term order and ring have different dimension");
  if (auto v = single_variable(generators, n)) return univariate_basis(generators, n, *v, order);
  std::vector<Poly> inputs;
  for (const auto& f : generators) {
    if (!f.is_zero()) inputs.push_back(to_poly(f, order));
  }
  std::stable_sort(inputs.begin(), inputs.end(), [&order](const Poly& a, const Poly& b) {
    return order.less(a.front().m, b.front().m);
  });
  Buchberger engine(order, limits);
  for (auto& p : inputs) engine.add(std::move(p));
  engine.run();
  std::vector<MultiPoly> basis;
  for (const auto& p : engine.reduced_basis()) basis.push_back(from_poly(p, n));
  return GroebnerBasis(std::move(basis), order);
}

}  // namespace pci
