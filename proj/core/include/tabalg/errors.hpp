#ifndef TABALG_ERRORS_HPP
#define TABALG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tabalg {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: index out of range, non-bijective map, wrong dimensions,
/// or a representation that is not a homomorphism. Distinct from a negative
/// verdict on well-formed input.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Text-format error carrying the 1-based line number.
class ParseError : public StructuralError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : StructuralError("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Diagonalization could not separate characters within tolerance.
class NumericalDegeneracy : public Error {
 public:
  using Error::Error;
};

/// A construction produced data violating its own guarantees (e.g. quotient
/// structure constants depending on the chosen representative).
class IntegrityError : public Error {
 public:
  using Error::Error;
};

/// Relation matrix fails the association-scheme axioms.
class NotAScheme : public Error {
 public:
  using Error::Error;
};

/// The algebra does not have the standard character.
class NotInStandardClass : public Error {
 public:
  using Error::Error;
};

/// Operation is not defined for this kind of input (e.g. dual of a
/// noncommutative algebra).
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// Exact arithmetic was demanded but the data are not rational.
class ExactnessError : public Error {
 public:
  using Error::Error;
};

/// Parameters outside the domain of a generator.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace tabalg

#endif  // TABALG_ERRORS_HPP
