#ifndef TABALG_SCALAR_HPP
#define TABALG_SCALAR_HPP

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>
#include <variant>

namespace tabalg {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// Default absolute tolerance for approximate comparisons.
inline constexpr double kDefaultTolerance = 1e-9;

/// A number that is either an exact rational or an approximate complex
/// double. Arithmetic between two exact values stays exact; anything touching
/// an approximate value becomes approximate. Comparisons against exact values
/// ignore the tolerance.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(int v) : value_(Rational(v)) {}
  Scalar(long v) : value_(Rational(v)) {}
  Scalar(long long v);
  Scalar(const Rational& v) : value_(v) {}
  Scalar(Rational&& v) : value_(std::move(v)) {}
  explicit Scalar(double v) : value_(Complex(v, 0.0)) {}
  explicit Scalar(Complex v) : value_(v) {}

  /// Exact num/den, reduced.
  static Scalar fraction(long long num, long long den);

  bool is_exact() const noexcept { return std::holds_alternative<Rational>(value_); }

  /// Throws ExactnessError if approximate.
  const Rational& rational() const;
  Complex complex() const;
  double real() const;
  double imag() const;
  double abs() const;

  Scalar conj() const;
  /// Drops exactness.
  Scalar approx() const { return Scalar(complex()); }

  bool is_zero(double tol = kDefaultTolerance) const;
  bool is_real(double tol = kDefaultTolerance) const;
  /// Real and strictly positive.
  bool is_positive(double tol = kDefaultTolerance) const;
  bool is_nonnegative(double tol = kDefaultTolerance) const;
  /// Real and within tol of an integer (exact: denominator 1).
  bool is_integer(double tol = kDefaultTolerance) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  /// Exact comparison when both sides are exact, otherwise bitwise complex
  /// equality. Prefer near() for approximate data.
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Reduced `num/den` for exact values; 12 significant digits otherwise.
  std::string str() const;

 private:
  std::variant<Rational, Complex> value_;
};

/// |a - b| <= tol, or exact equality when both are exact.
bool near(const Scalar& a, const Scalar& b, double tol = kDefaultTolerance);

/// Total order used for deterministic sorting: by real part then imaginary
/// part, treating differences below tol as ties. Returns -1, 0, 1.
int compare(const Scalar& a, const Scalar& b, double tol = kDefaultTolerance);

/// Best rational approximation with denominator <= max_den, accepted only if
/// it lies within tol of x (scaled by max(1, |x|)).
std::optional<Rational> rationalize(double x, double tol, long max_den = 1000000);

/// Parse `num`, `num/den`, or a decimal float. Throws std::invalid_argument.
Scalar parse_scalar(const std::string& token);

}  // namespace tabalg

#endif  // TABALG_SCALAR_HPP
