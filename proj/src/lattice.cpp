#include "pci/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pci {

namespace {

void check_shape(const IntMatrix& rows, std::size_t columns) {
  for (const auto& r : rows) {
    if (r.size() != columns) throw std::invalid_argument("matrix rows have inconsistent length");
  }
}

bool is_zero_row(const IntVector& r) {
  return std::all_of(r.begin(), r.end(), [](const Integer& v) { return sgn(v) == 0; });
}

void axpy(IntVector& target, const Integer& q, const IntVector& source) {
  for (std::size_t k = 0; k < target.size(); ++k) target[k] -= q * source[k];
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix rows, std::size_t columns) {
  check_shape(rows, columns);
  std::size_t top = 0;
  for (std::size_t col = 0; col < columns && top < rows.size(); ++col) {
    while (true) {
      std::size_t pivot = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r) {
        if (sgn(rows[r][col]) == 0) continue;
        if (pivot == rows.size() || abs(rows[r][col]) < abs(rows[pivot][col])) pivot = r;
      }
      if (pivot == rows.size()) break;
      std::swap(rows[top], rows[pivot]);
      bool done = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (sgn(rows[r][col]) == 0) continue;
        axpy(rows[r], floor_div(rows[r][col], rows[top][col]), rows[top]);
        if (sgn(rows[r][col]) != 0) done = false;
      }
      if (done) break;
    }
    if (top >= rows.size() || sgn(rows[top][col]) == 0) continue;
    if (sgn(rows[top][col]) < 0) {
      for (auto& v : rows[top]) v = -v;
    }
    for (std::size_t r = 0; r < top; ++r) axpy(rows[r], floor_div(rows[r][col], rows[top][col]), rows[top]);
    ++top;
  }
  rows.resize(top);
  std::erase_if(rows, is_zero_row);
  return rows;
}

std::vector<Integer> smith_invariants(IntMatrix m, std::size_t columns) {
  check_shape(m, columns);
  const std::size_t nrows = m.size();
  std::vector<Integer> out;
  for (std::size_t t = 0; t < std::min(nrows, columns); ++t) {
    while (true) {
      std::size_t pr = nrows;
      std::size_t pc = columns;
      for (std::size_t r = t; r < nrows; ++r) {
        for (std::size_t c = t; c < columns; ++c) {
          if (sgn(m[r][c]) != 0 && (pr == nrows || abs(m[r][c]) < abs(m[pr][pc]))) {
            pr = r;
            pc = c;
          }
        }
      }
      if (pr == nrows) {
        std::sort(out.begin(), out.end());
        return out;
      }
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t r = t + 1; r < nrows; ++r) {
        if (sgn(m[r][t]) == 0) continue;
        axpy(m[r], floor_div(m[r][t], m[t][t]), m[t]);
        if (sgn(m[r][t]) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < columns; ++c) {
        if (sgn(m[t][c]) == 0) continue;
        Integer q = floor_div(m[t][c], m[t][t]);
        for (auto& row : m) row[c] -= q * row[t];
        if (sgn(m[t][c]) != 0) clean = false;
      }
      if (!clean) continue;
      bool divides_all = true;
      for (std::size_t r = t + 1; r < nrows && divides_all; ++r) {
        for (std::size_t c = t + 1; c < columns; ++c) {
          if (sgn(m[r][c]) != 0 && !mpz_divisible_p(m[r][c].get_mpz_t(), m[t][t].get_mpz_t())) {
            for (std::size_t k = t; k < columns; ++k) m[t][k] += m[r][k];
            divides_all = false;
            break;
          }
        }
      }
      if (divides_all) break;
    }
    out.push_back(abs(m[t][t]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntMatrix integer_kernel(const IntMatrix& a, std::size_t columns) {
  check_shape(a, columns);
  const std::size_t m = a.size();
  IntMatrix aug(columns, IntVector(m + columns));
  for (std::size_t i = 0; i < columns; ++i) {
    for (std::size_t r = 0; r < m; ++r) aug[i][r] = a[r][i];
    aug[i][m + i] = 1;
  }
  IntMatrix h = hermite_normal_form(std::move(aug), m + columns);
  IntMatrix kernel;
  for (const auto& row : h) {
    if (std::all_of(row.begin(), row.begin() + static_cast<long>(m), [](const Integer& v) { return sgn(v) == 0; })) {
      kernel.emplace_back(row.begin() + static_cast<long>(m), row.end());
    }
  }
  return hermite_normal_form(std::move(kernel), columns);
}

ExponentLattice::ExponentLattice(std::size_t dim, IntMatrix rows)
    : dim_(dim), basis_(hermite_normal_form(std::move(rows), dim)) {}

ExponentLattice ExponentLattice::full(std::size_t dim) {
  IntMatrix id(dim, IntVector(dim));
  for (std::size_t i = 0; i < dim; ++i) id[i][i] = 1;
  return ExponentLattice(dim, std::move(id));
}

bool ExponentLattice::contains(const IntVector& v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector has the wrong dimension");
  IntVector rest = v;
  std::size_t row = 0;
  for (std::size_t col = 0; col < dim_; ++col) {
    if (row < basis_.size() && sgn(basis_[row][col]) != 0) {
      if (!mpz_divisible_p(rest[col].get_mpz_t(), basis_[row][col].get_mpz_t())) return false;
      Integer q = rest[col] / basis_[row][col];
      axpy(rest, q, basis_[row]);
      ++row;
    } else if (sgn(rest[col]) != 0) {
      return false;
    }
  }
  return true;
}

bool ExponentLattice::contains(const ExponentLattice& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("lattices of different dimension");
  return std::all_of(other.basis_.begin(), other.basis_.end(), [this](const IntVector& v) { return contains(v); });
}

ExponentLattice operator+(const ExponentLattice& a, const ExponentLattice& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("lattices of different dimension");
  IntMatrix rows = a.basis_;
  rows.insert(rows.end(), b.basis_.begin(), b.basis_.end());
  return ExponentLattice(a.dim_, std::move(rows));
}

std::string ExponentLattice::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    if (r > 0) os << ", ";
    os << "(";
    for (std::size_t c = 0; c < dim_; ++c) {
      if (c > 0) os << ",";
      os << basis_[r][c];
    }
    os << ")";
  }
  os << "]";
  return os.str();
}

IntVector to_int_vector(const std::vector<int>& v) {
  IntVector out;
  for (int x : v) out.emplace_back(x);
  return out;
}

}  // namespace pci
