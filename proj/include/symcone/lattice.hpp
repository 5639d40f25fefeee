#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symcone/rational.hpp"

namespace symcone {

/// Rational coefficient vector over a lattice basis.
///
/// Carries no reference to its lattice; every operation takes the lattice
/// explicitly and rejects vectors whose length differs from its rank.
struct ClassVector {
  std::vector<Rational> coeffs;

  ClassVector() = default;
  explicit ClassVector(std::vector<Rational> c) : coeffs(std::move(c)) {}

  static ClassVector zero(std::size_t rank);
  static ClassVector unit(std::size_t rank, std::size_t index);
  static ClassVector of(std::initializer_list<long> values);

  std::size_t size() const noexcept { return coeffs.size(); }
  const Rational& operator[](std::size_t i) const { return coeffs[i]; }
  Rational& operator[](std::size_t i) { return coeffs[i]; }

  bool is_integral() const;
  bool is_zero() const;

  ClassVector& operator+=(const ClassVector& other);
  ClassVector& operator-=(const ClassVector& other);
  ClassVector& operator*=(const Rational& scalar);

  friend bool operator==(const ClassVector& a, const ClassVector& b) { return a.coeffs == b.coeffs; }
  /// Lexicographic on coefficients.
  friend bool operator<(const ClassVector& a, const ClassVector& b);
};

ClassVector operator+(ClassVector a, const ClassVector& b);
ClassVector operator-(ClassVector a, const ClassVector& b);
ClassVector operator-(ClassVector a);
ClassVector operator*(const Rational& scalar, ClassVector a);

/// Integral symmetric bilinear form with named basis classes.
class Lattice {
 public:
  /// Throws DimensionError on a non-square or asymmetric Gram matrix, an
  /// empty basis, or duplicate/empty basis names.
  Lattice(std::vector<std::string> basis_names, const std::vector<std::vector<std::int64_t>>& gram);

  std::size_t rank() const noexcept { return names_.size(); }
  std::int64_t gram(std::size_t i, std::size_t j) const { return gram_[i * rank() + j]; }
  std::vector<std::vector<std::int64_t>> gram_rows() const;
  const std::vector<std::string>& basis_names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  /// Basis class with the given name.
  ClassVector basis(const std::string& name) const;

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::int64_t> gram_;
};

struct SignatureReport {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;

  /// b+ = 1 and nondegenerate.
  bool hyperbolic() const noexcept { return n_plus == 1 && n_zero == 0; }
  friend bool operator==(const SignatureReport&, const SignatureReport&) = default;
};

enum class Parity { Even, Odd };

const char* to_string(Parity parity);

Rational pair(const ClassVector& a, const ClassVector& b, const Lattice& lattice);
Rational self_int(const ClassVector& a, const Lattice& lattice);

/// Exact symmetric diagonalization over the rationals; Sylvester counts.
SignatureReport signature(const Lattice& lattice);
Parity parity(const Lattice& lattice);

bool in_positive_cone(const ClassVector& a, const Lattice& lattice);

/// Whether two positive-square classes lie on the same sheet of the positive
/// cone. Requires signature (1, n, 0); throws DomainError naming the class
/// that violates a precondition.
bool same_component(const ClassVector& a, const ClassVector& b, const Lattice& lattice);

struct PairingTarget {
  ClassVector probe;
  Rational value;
};

/// Returns the unique x with pair(x, probe) = value for every target.
/// Throws NoSolutionError when the system is inconsistent and
/// AmbiguityError (with the kernel dimension) when it is underdetermined.
ClassVector solve_from_pairings(std::span<const PairingTarget> targets, const Lattice& lattice);

/// Rank of the rational span of the given vectors.
std::size_t span_rank(std::span<const ClassVector> vectors);

/// Human-readable linear combination over basis names, e.g. "4e+f-9k".
std::string to_expression(const ClassVector& a, const Lattice& lattice);

}  // namespace symcone
