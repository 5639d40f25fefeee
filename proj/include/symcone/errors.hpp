#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symcone {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vector length does not match lattice rank, or malformed lattice data.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A precondition on an argument value failed (e.g. non-positive square).
class DomainError : public Error {
 public:
  using Error::Error;
};

class NoSolutionError : public Error {
 public:
  using Error::Error;
};

class AmbiguityError : public Error {
 public:
  AmbiguityError(const std::string& what, std::size_t kernel_dim)
      : Error(what), kernel_dim_(kernel_dim) {}
  std::size_t kernel_dim() const noexcept { return kernel_dim_; }

 private:
  std::size_t kernel_dim_;
};

/// A surface model violates one of its invariants. `field()` names the offending path.
class ModelError : public Error {
 public:
  ModelError(std::string field, const std::string& message)
      : Error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// The model lacks data a query needs (e.g. Kähler queries without a curve list).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

class OutOfScopeError : public Error {
 public:
  using Error::Error;
};

class CertificationError : public Error {
 public:
  enum class Kind { NotObstructing, NotNegativeCurve, NotPositive, WrongComponent, NoAdmissibleParameter };
  CertificationError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace symcone
