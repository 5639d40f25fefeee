#include "symcone/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "symcone/errors.hpp"

namespace symcone {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

void require_rank(const ClassVector& a, const Lattice& lattice, const char* what) {
  if (a.size() != lattice.rank()) {
    std::ostringstream msg;
    msg << what << " has " << a.size() << " coefficients, lattice rank is " << lattice.rank();
    throw DimensionError(msg.str());
  }
}

// Reduces `rows` (each of width `cols`, last column optionally an augmented
// right-hand side) to row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational lead = rows[r][c];
    for (auto& x : rows[r]) x /= lead;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational factor = rows[i][c];
      for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= factor * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

ClassVector ClassVector::zero(std::size_t rank) { return ClassVector(std::vector<Rational>(rank)); }

ClassVector ClassVector::unit(std::size_t rank, std::size_t index) {
  ClassVector v = zero(rank);
  v.coeffs.at(index) = 1;
  return v;
}

ClassVector ClassVector::of(std::initializer_list<long> values) {
  ClassVector v;
  for (long x : values) v.coeffs.emplace_back(x);
  return v;
}

bool ClassVector::is_integral() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& x) { return is_integer(x); });
}

bool ClassVector::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& x) { return x == 0; });
}

ClassVector& ClassVector::operator+=(const ClassVector& other) {
  if (other.size() != size()) throw DimensionError("adding class vectors of different length");
  for (std::size_t i = 0; i < size(); ++i) coeffs[i] += other.coeffs[i];
  return *this;
}

ClassVector& ClassVector::operator-=(const ClassVector& other) {
  if (other.size() != size()) throw DimensionError("subtracting class vectors of different length");
  for (std::size_t i = 0; i < size(); ++i) coeffs[i] -= other.coeffs[i];
  return *this;
}

ClassVector& ClassVector::operator*=(const Rational& scalar) {
  for (auto& x : coeffs) x *= scalar;
  return *this;
}

bool operator<(const ClassVector& a, const ClassVector& b) {
  return std::lexicographical_compare(a.coeffs.begin(), a.coeffs.end(), b.coeffs.begin(), b.coeffs.end(),
                                      [](const Rational& x, const Rational& y) { return x < y; });
}

ClassVector operator+(ClassVector a, const ClassVector& b) { return a += b; }
ClassVector operator-(ClassVector a, const ClassVector& b) { return a -= b; }
ClassVector operator-(ClassVector a) { return a *= Rational(-1); }
ClassVector operator*(const Rational& scalar, ClassVector a) { return a *= scalar; }

Lattice::Lattice(std::vector<std::string> basis_names, const std::vector<std::vector<std::int64_t>>& gram)
    : names_(std::move(basis_names)) {
  const std::size_t n = names_.size();
  if (n == 0) throw DimensionError("lattice must have positive rank");
  if (gram.size() != n) throw DimensionError("gram has " + std::to_string(gram.size()) + " rows, expected " + std::to_string(n));
  std::set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty()) throw DimensionError("basis names must be nonempty");
    if (!seen.insert(name).second) throw DimensionError("duplicate basis name '" + name + "'");
  }
  gram_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (gram[i].size() != n) throw DimensionError("gram row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < n; ++j) gram_.push_back(gram[i][j]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (gram_[i * n + j] != gram_[j * n + i]) {
        throw DimensionError("gram is not symmetric: entry [" + std::to_string(i) + "][" + std::to_string(j) +
                             "] differs from [" + std::to_string(j) + "][" + std::to_string(i) + "]");
      }
    }
  }
}

std::vector<std::vector<std::int64_t>> Lattice::gram_rows() const {
  std::vector<std::vector<std::int64_t>> rows(rank());
  for (std::size_t i = 0; i < rank(); ++i) rows[i].assign(gram_.begin() + i * rank(), gram_.begin() + (i + 1) * rank());
  return rows;
}

std::optional<std::size_t> Lattice::index_of(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

ClassVector Lattice::basis(const std::string& name) const {
  const auto idx = index_of(name);
  if (!idx) throw DimensionError("no basis class named '" + name + "'");
  return ClassVector::unit(rank(), *idx);
}

const char* to_string(Parity parity) { return parity == Parity::Odd ? "odd" : "even"; }

Rational pair(const ClassVector& a, const ClassVector& b, const Lattice& lattice) {
  require_rank(a, lattice, "first argument");
  require_rank(b, lattice, "second argument");
  Rational total = 0;
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    if (a[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < lattice.rank(); ++j) {
      if (const auto g = lattice.gram(i, j); g != 0 && b[j] != 0) row += Rational(static_cast<long>(g)) * b[j];
    }
    total += a[i] * row;
  }
  return total;
}

Rational self_int(const ClassVector& a, const Lattice& lattice) { return pair(a, a, lattice); }

SignatureReport signature(const Lattice& lattice) {
  const std::size_t n = lattice.rank();
  Matrix a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(lattice.gram(i, j));

  // Congruence A -> E^T A E: apply each elementary operation to rows and columns.
  auto add_multiple = [&](std::size_t target, std::size_t source, const Rational& c) {
    for (std::size_t j = 0; j < n; ++j) a[target][j] += c * a[source][j];
    for (std::size_t i = 0; i < n; ++i) a[i][target] += c * a[i][source];
  };
  auto swap_index = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    for (auto& row : a) std::swap(row[i], row[j]);
  };

  SignatureReport report;
  std::size_t k = 0;
  while (k < n) {
    std::size_t p = k;
    while (p < n && a[p][p] == 0) ++p;
    if (p < n) {
      swap_index(k, p);
      for (std::size_t j = k + 1; j < n; ++j) {
        if (a[j][k] != 0) add_multiple(j, k, -a[j][k] / a[k][k]);
      }
      (a[k][k] > 0 ? report.n_plus : report.n_minus) += 1;
      ++k;
      continue;
    }
    // Zero diagonal on the remaining block: e_i <- e_i + e_j turns a nonzero
    // off-diagonal entry into a pivot 2*a[i][j].
    bool found = false;
    for (std::size_t i = k; i < n && !found; ++i) {
      for (std::size_t j = i + 1; j < n && !found; ++j) {
        if (a[i][j] != 0) {
          add_multiple(i, j, Rational(1));
          found = true;
        }
      }
    }
    if (!found) {
      report.n_zero += n - k;
      break;
    }
  }
  return report;
}

Parity parity(const Lattice& lattice) {
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    if (lattice.gram(i, i) % 2 != 0) return Parity::Odd;
  }
  return Parity::Even;
}

bool in_positive_cone(const ClassVector& a, const Lattice& lattice) { return self_int(a, lattice) > 0; }

bool same_component(const ClassVector& a, const ClassVector& b, const Lattice& lattice) {
  const auto sig = signature(lattice);
  if (!sig.hyperbolic()) {
    throw DomainError("same_component requires signature (1, n, 0), got (" + std::to_string(sig.n_plus) + ", " +
                      std::to_string(sig.n_minus) + ", " + std::to_string(sig.n_zero) + ")");
  }
  if (self_int(a, lattice) <= 0) throw DomainError("same_component: first class " + to_expression(a, lattice) + " has non-positive square");
  if (self_int(b, lattice) <= 0) throw DomainError("same_component: second class " + to_expression(b, lattice) + " has non-positive square");
  return pair(a, b, lattice) > 0;
}

ClassVector solve_from_pairings(std::span<const PairingTarget> targets, const Lattice& lattice) {
  const std::size_t n = lattice.rank();
  Matrix rows;
  rows.reserve(targets.size());
  for (const auto& t : targets) {
    require_rank(t.probe, lattice, "probe");
    std::vector<Rational> row(n + 1);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) row[j] += t.probe[i] * static_cast<long>(lattice.gram(i, j));
    }
    row[n] = t.value;
    rows.push_back(std::move(row));
  }
  const auto pivots = row_reduce(rows, n);
  for (std::size_t i = pivots.size(); i < rows.size(); ++i) {
    if (rows[i][n] != 0) throw NoSolutionError("pairing targets are inconsistent");
  }
  if (pivots.size() < n) {
    throw AmbiguityError("pairing targets leave a kernel of dimension " + std::to_string(n - pivots.size()),
                         n - pivots.size());
  }
  ClassVector x = ClassVector::zero(n);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rows[r][n];
  return x;
}

std::size_t span_rank(std::span<const ClassVector> vectors) {
  if (vectors.empty()) return 0;
  const std::size_t width = vectors.front().size();
  Matrix rows;
  for (const auto& v : vectors) {
    if (v.size() != width) throw DimensionError("span_rank: vectors of different length");
    rows.push_back(v.coeffs);
  }
  return row_reduce(rows, width).size();
}

std::string to_expression(const ClassVector& a, const Lattice& lattice) {
  require_rank(a, lattice, "class");
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Rational& c = a[i];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (c < 0) out << '-';
    else if (!first) out << '+';
    if (mag != 1) {
      out << to_string(mag);
      if (!is_integer(mag)) out << '*';
    }
    out << lattice.basis_names()[i];
    first = false;
  }
  if (first) out << '0';
  return out.str();
}

}  // namespace symcone
