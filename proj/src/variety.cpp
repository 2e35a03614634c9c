#include "pci/variety.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "pci/cyclotomic.hpp"

namespace pci {

namespace {

std::string index_set(const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(s[k] + 1);
  }
  return out + "}";
}

MultiPoly linear_form(const std::vector<FieldElement>& a) {
  MultiPoly f(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) f.add_term(Monomial::variable(a.size(), i), a[i]);
  return f;
}

FieldElement subset_sum(const std::vector<FieldElement>& a, const std::vector<std::size_t>& s) {
  FieldElement total;
  for (std::size_t i : s) total += a[i];
  return total;
}

bool component_contained(const LinearComponent& small, const LinearComponent& big) {
  for (std::size_t i : small.support) {
    if (!std::binary_search(big.support.begin(), big.support.end(), i)) return false;
  }
  auto in_small_support = [&small](std::size_t i) {
    return std::binary_search(small.support.begin(), small.support.end(), i);
  };
  for (const auto& block : big.blocks) {
    std::size_t inside = static_cast<std::size_t>(std::count_if(block.begin(), block.end(), in_small_support));
    if (inside == 0) continue;
    if (inside != block.size()) return false;
    bool one_block = std::any_of(small.blocks.begin(), small.blocks.end(), [&block](const auto& b) {
      return std::includes(b.begin(), b.end(), block.begin(), block.end());
    });
    if (!one_block) return false;
  }
  return true;
}

void check_vector(const std::vector<FieldElement>& a, std::size_t limit) {
  if (a.empty() || std::all_of(a.begin(), a.end(), [](const FieldElement& c) { return c.is_zero(); })) {
    throw std::invalid_argument("the coefficient vector must be nonzero");
  }
  if (a.size() > limit) throw std::invalid_argument("at most " + std::to_string(limit) + " coordinates are supported");
}

IntVector exponent_vector(const Monomial& m) {
  IntVector v;
  for (std::size_t i = 0; i < m.size(); ++i) v.emplace_back(m[i]);
  return v;
}

MultiPoly lattice_binomial(const IntVector& v, std::size_t nvars) {
  Monomial plus(nvars);
  Monomial minus(nvars);
  for (std::size_t i = 0; i < nvars; ++i) {
    long e = v[i].get_si();
    if (e > 0) plus.set(i, static_cast<int>(e));
    if (e < 0) minus.set(i, static_cast<int>(-e));
  }
  return MultiPoly::term(FieldElement(1), plus) - MultiPoly::term(FieldElement(1), minus);
}

long common_order(const std::vector<PointCoordinate>& point) {
  long n = 1;
  for (const auto& c : point) {
    if (c.zero) continue;
    if (c.order < 1) throw std::invalid_argument("root of unity order must be positive");
    n = std::lcm(n, c.order);
  }
  return n;
}

long scaled_index(const PointCoordinate& c, long n) {
  long k = ((c.index % c.order) + c.order) % c.order;
  return k * (n / c.order);
}

}  // namespace

std::string LineFamily::to_string() const {
  if (subsets.empty()) return "{}";
  std::string out;
  for (std::size_t k = 0; k < subsets.size(); ++k) {
    if (k > 0) out += " ";
    out += index_set(subsets[k]);
  }
  return out;
}

LineFamily zero_sum_lines(const std::vector<FieldElement>& a) {
  check_vector(a, 24);
  LineFamily out;
  out.dim = a.size();
  const unsigned long limit = 1ul << a.size();
  for (unsigned long mask = 1; mask < limit; ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (mask & (1ul << i)) s.push_back(i);
    }
    if (subset_sum(a, s).is_zero()) out.subsets.push_back(std::move(s));
  }
  std::sort(out.subsets.begin(), out.subsets.end(),
            [](const auto& x, const auto& y) { return x.size() != y.size() ? x.size() < y.size() : x < y; });
  return out;
}

bool vanishes_on_line(const MultiPoly& f, const std::vector<std::size_t>& subset) {
  std::vector<UniPoly> values(f.nvars());
  for (std::size_t i : subset) {
    if (i >= f.nvars()) throw std::invalid_argument("line index out of range");
    values[i] = UniPoly::x();
  }
  return f.substitute(values).is_zero();
}

Ideal LinearComponent::prime(std::size_t dim) const {
  std::vector<MultiPoly> gens;
  for (std::size_t j = 0; j < dim; ++j) {
    if (!std::binary_search(support.begin(), support.end(), j)) gens.push_back(MultiPoly::variable(dim, j));
  }
  for (const auto& block : blocks) {
    for (std::size_t k = 1; k < block.size(); ++k) {
      gens.push_back(MultiPoly::variable(dim, block[k - 1]) - MultiPoly::variable(dim, block[k]));
    }
  }
  return Ideal(std::move(gens), dim);
}

std::string LinearComponent::to_string() const {
  if (blocks.empty()) return "origin";
  std::string out;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (k > 0) out += "|";
    out += index_set(blocks[k]);
  }
  return out;
}

std::vector<LinearComponent> linear_closure_components(const std::vector<FieldElement>& a) {
  check_vector(a, 12);
  const std::size_t d = a.size();
  std::vector<std::vector<std::size_t>> zero_sum;
  for (auto& s : zero_sum_lines(a).subsets) zero_sum.push_back(std::move(s));

  std::vector<LinearComponent> all;
  // Set partitions of subsets of {0..d-1} into zero-sum blocks, each block
  // started by the smallest unused index it contains.
  std::function<void(std::size_t, std::vector<bool>&, std::vector<std::vector<std::size_t>>&)> extend =
      [&](std::size_t next, std::vector<bool>& used, std::vector<std::vector<std::size_t>>& blocks) {
        LinearComponent c;
        c.blocks = blocks;
        for (std::size_t i = 0; i < d; ++i) {
          if (used[i]) c.support.push_back(i);
        }
        std::sort(c.blocks.begin(), c.blocks.end());
        all.push_back(std::move(c));
        for (const auto& s : zero_sum) {
          if (s.front() < next) continue;
          if (std::any_of(s.begin(), s.end(), [&used](std::size_t i) { return used[i]; })) continue;
          for (std::size_t i : s) used[i] = true;
          blocks.push_back(s);
          extend(s.front() + 1, used, blocks);
          blocks.pop_back();
          for (std::size_t i : s) used[i] = false;
        }
      };
  std::vector<bool> used(d, false);
  std::vector<std::vector<std::size_t>> blocks;
  extend(0, used, blocks);

  std::vector<LinearComponent> maximal;
  for (std::size_t k = 0; k < all.size(); ++k) {
    bool dominated = false;
    for (std::size_t j = 0; j < all.size() && !dominated; ++j) {
      if (j != k && component_contained(all[k], all[j]) && !component_contained(all[j], all[k])) dominated = true;
    }
    if (!dominated) maximal.push_back(all[k]);
  }
  std::sort(maximal.begin(), maximal.end(), [](const LinearComponent& x, const LinearComponent& y) {
    return std::tie(x.support, x.blocks) < std::tie(y.support, y.blocks);
  });
  maximal.erase(std::unique(maximal.begin(), maximal.end(),
                            [](const LinearComponent& x, const LinearComponent& y) {
                              return x.support == y.support && x.blocks == y.blocks;
                            }),
                maximal.end());
  return maximal;
}

RadicalResult radical_of_linear_closure(const std::vector<FieldElement>& a) {
  const std::size_t d = a.size();
  auto components = linear_closure_components(a);
  Ideal closure = power_closure(Ideal({linear_form(a)}));
  Ideal radical = components.front().prime(d);
  for (std::size_t k = 1; k < components.size(); ++k) radical = intersect(radical, components[k].prime(d));
  GroebnerBasis basis = groebner(radical);
  RadicalResult out{Ideal(basis.elements(), d), components};
  out.contained_in_radical = std::all_of(basis.elements().begin(), basis.elements().end(),
                                         [&closure](const MultiPoly& g) { return radical_member(g, closure); });
  out.closure_in_components = std::all_of(components.begin(), components.end(), [&](const LinearComponent& c) {
    GroebnerBasis prime = groebner(c.prime(d));
    return std::all_of(closure.generators().begin(), closure.generators().end(),
                       [&prime](const MultiPoly& g) { return prime.contains(g); });
  });
  return out;
}

TorusSubgroup torus_subgroup(const MultiPoly& binomial) {
  if (binomial.size() != 2) throw std::invalid_argument("expected a binomial x^p - x^q");
  auto first = binomial.terms().begin();
  auto second = std::next(first);
  if (!(first->second + second->second).is_zero()) {
    throw std::invalid_argument("binomial coefficients must be opposite: x^p - x^q");
  }
  IntVector v = exponent_vector(first->first);
  IntVector w = exponent_vector(second->first);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= w[i];
  return TorusSubgroup(ExponentLattice(binomial.nvars(), {v}));
}

std::string IsoType::to_string() const {
  std::string out = torus_rank > 0 ? "T^" + std::to_string(torus_rank) : "";
  for (const auto& c : cyclic_invariants) out += (out.empty() ? "Z/" : " x Z/") + c.get_str();
  return out.empty() ? "1" : out;
}

IsoType subgroup_iso_type(const TorusSubgroup& g) {
  const auto& lattice = g.lattice();
  IsoType out;
  out.torus_rank = lattice.dim() - lattice.rank();
  for (auto& c : smith_invariants(lattice.basis(), lattice.dim())) {
    if (c > 1) out.cyclic_invariants.push_back(c);
  }
  return out;
}

TorusSubgroup subgroup_intersect(const TorusSubgroup& g, const TorusSubgroup& h) {
  return TorusSubgroup(g.lattice() + h.lattice());
}

std::vector<TorusSubgroup> irredundant_union(const std::vector<TorusSubgroup>& members) {
  std::vector<TorusSubgroup> out;
  for (std::size_t k = 0; k < members.size(); ++k) {
    bool redundant = false;
    for (std::size_t j = 0; j < members.size() && !redundant; ++j) {
      if (j == k || !members[k].is_subgroup_of(members[j])) continue;
      // Equal members: keep the first one.
      redundant = !(members[k] == members[j]) || j < k;
    }
    if (!redundant) out.push_back(members[k]);
  }
  return out;
}

Ideal it_generators(const std::vector<PointCoordinate>& point) {
  const std::size_t d = point.size();
  if (d == 0) throw std::invalid_argument("empty point");
  const long n = common_order(point);
  std::vector<std::size_t> nonzero;
  std::vector<MultiPoly> gens;
  for (std::size_t j = 0; j < d; ++j) {
    if (point[j].zero) {
      gens.push_back(MultiPoly::variable(d, j));
    } else {
      nonzero.push_back(j);
    }
  }
  if (!nonzero.empty()) {
    IntMatrix relation(1, IntVector(nonzero.size() + 1));
    for (std::size_t k = 0; k < nonzero.size(); ++k) relation[0][k] = scaled_index(point[nonzero[k]], n);
    relation[0][nonzero.size()] = n;
    IntMatrix kernel = integer_kernel(relation, nonzero.size() + 1);
    IntMatrix projected;
    for (const auto& row : kernel) projected.emplace_back(row.begin(), row.end() - 1);
    ExponentLattice lattice(nonzero.size(), std::move(projected));
    std::vector<MultiPoly> binomials;
    for (const auto& row : lattice.basis()) {
      IntVector full(d);
      for (std::size_t k = 0; k < nonzero.size(); ++k) full[nonzero[k]] = row[k];
      binomials.push_back(lattice_binomial(full, d));
    }
    Ideal saturated = laurent_saturate(Ideal(std::move(binomials), d, RingMode::kLaurent));
    gens.insert(gens.end(), saturated.generators().begin(), saturated.generators().end());
  }
  return Ideal(groebner(gens, TermOrder::deglex(d)).elements(), d);
}

bool vanishes_at_power(const MultiPoly& f, const std::vector<PointCoordinate>& point, long j) {
  if (point.size() != f.nvars()) throw std::invalid_argument("point has the wrong dimension");
  const long n = common_order(point);
  std::vector<FieldElement> residues(static_cast<std::size_t>(n));
  for (const auto& [m, c] : f.terms()) {
    long e = 0;
    bool vanishes = false;
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (m[i] == 0) continue;
      if (point[i].zero) {
        if (m[i] < 0) throw std::invalid_argument("negative power of a zero coordinate");
        vanishes = true;
        break;
      }
      e = (e + static_cast<long>(m[i]) % n * (scaled_index(point[i], n) * (j % n) % n)) % n;
    }
    if (vanishes) continue;
    residues[static_cast<std::size_t>(((e % n) + n) % n)] += c;
  }
  return (UniPoly(std::move(residues)) % cyclotomic_poly(n)).is_zero();
}

}  // namespace pci
