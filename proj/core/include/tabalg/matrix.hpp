#ifndef TABALG_MATRIX_HPP
#define TABALG_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "tabalg/scalar.hpp"

namespace tabalg {

/// Dense row-major matrix of Scalars. Exactness is per-entry; elimination
/// routines pivot exactly on exact data and by magnitude otherwise.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_exact() const;
  Matrix transpose() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  /// Entrywise (Hadamard) product.
  Matrix hadamard(const Matrix& o) const;
  Scalar trace() const;
  /// Sum of all entries.
  Scalar entry_sum() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Entrywise near() with the given tolerance; shapes must agree.
bool near(const Matrix& a, const Matrix& b, double tol = kDefaultTolerance);

/// Largest entry magnitude.
double max_abs(const Matrix& m);

std::size_t rank(const Matrix& m, double tol = kDefaultTolerance);

/// Basis of {x : m x = 0}, one column vector per element.
std::vector<std::vector<Scalar>> nullspace(const Matrix& m, double tol = kDefaultTolerance);

/// Unique solution of m x = rhs for square nonsingular m; nullopt if singular.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& rhs,
                                         double tol = kDefaultTolerance);

/// Inverse, or nullopt if singular.
std::optional<Matrix> inverse(const Matrix& m, double tol = kDefaultTolerance);

Scalar determinant(const Matrix& m, double tol = kDefaultTolerance);

}  // namespace tabalg

#endif  // TABALG_MATRIX_HPP
