#include "tabalg/scalar.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "tabalg/errors.hpp"

namespace tabalg {

namespace {

Rational from_long_long(long long v) {
  static_assert(sizeof(long) == sizeof(long long) || sizeof(long) == 4);
  if (v >= std::numeric_limits<long>::min() && v <= std::numeric_limits<long>::max()) {
    return Rational(static_cast<long>(v));
  }
  return Rational(std::to_string(v));
}

std::string format_double(double x) {
  if (x == 0.0) x = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

}  // namespace

Scalar::Scalar(long long v) : value_(from_long_long(v)) {}

Scalar Scalar::fraction(long long num, long long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q = from_long_long(num) / from_long_long(den);
  return Scalar(std::move(q));
}

const Rational& Scalar::rational() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return *q;
  throw ExactnessError("approximate value " + str() + " used where an exact rational is required");
}

Complex Scalar::complex() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return {q->get_d(), 0.0};
  return std::get<Complex>(value_);
}

double Scalar::real() const { return complex().real(); }
double Scalar::imag() const { return is_exact() ? 0.0 : std::get<Complex>(value_).imag(); }
double Scalar::abs() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return std::fabs(q->get_d());
  return std::abs(std::get<Complex>(value_));
}

Scalar Scalar::conj() const {
  if (is_exact()) return *this;
  return Scalar(std::conj(std::get<Complex>(value_)));
}

bool Scalar::is_zero(double tol) const {
  if (const auto* q = std::get_if<Rational>(&value_)) return sgn(*q) == 0;
  return std::abs(std::get<Complex>(value_)) <= tol;
}

bool Scalar::is_real(double tol) const {
  return is_exact() || std::fabs(std::get<Complex>(value_).imag()) <= tol;
}

bool Scalar::is_positive(double tol) const {
  if (const auto* q = std::get_if<Rational>(&value_)) return sgn(*q) > 0;
  return is_real(tol) && real() > tol;
}

bool Scalar::is_nonnegative(double tol) const {
  if (const auto* q = std::get_if<Rational>(&value_)) return sgn(*q) >= 0;
  return is_real(tol) && real() >= -tol;
}

bool Scalar::is_integer(double tol) const {
  if (const auto* q = std::get_if<Rational>(&value_)) return q->get_den() == 1;
  if (!is_real(tol)) return false;
  double r = real();
  return std::fabs(r - std::round(r)) <= tol;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_exact() && o.is_exact()) {
    std::get<Rational>(value_) += std::get<Rational>(o.value_);
  } else {
    value_ = complex() + o.complex();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (is_exact() && o.is_exact()) {
    std::get<Rational>(value_) -= std::get<Rational>(o.value_);
  } else {
    value_ = complex() - o.complex();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_exact() && o.is_exact()) {
    std::get<Rational>(value_) *= std::get<Rational>(o.value_);
  } else {
    value_ = complex() * o.complex();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_exact() && sgn(std::get<Rational>(o.value_)) == 0) {
    throw std::domain_error("division by exact zero");
  }
  if (is_exact() && o.is_exact()) {
    std::get<Rational>(value_) /= std::get<Rational>(o.value_);
  } else {
    value_ = complex() / o.complex();
  }
  return *this;
}

Scalar Scalar::operator-() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return Scalar(Rational(-*q));
  return Scalar(-std::get<Complex>(value_));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.rational() == b.rational();
  return a.complex() == b.complex();
}

std::string Scalar::str() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return q->get_str();
  Complex z = std::get<Complex>(value_);
  std::string re = format_double(z.real());
  if (z.imag() == 0.0) return re;
  std::string im = format_double(std::fabs(z.imag()));
  return re + (z.imag() < 0 ? "-" : "+") + im + "i";
}

bool near(const Scalar& a, const Scalar& b, double tol) {
  if (a.is_exact() && b.is_exact()) return a.rational() == b.rational();
  return std::abs(a.complex() - b.complex()) <= tol;
}

int compare(const Scalar& a, const Scalar& b, double tol) {
  if (a.is_exact() && b.is_exact()) {
    int c = cmp(a.rational(), b.rational());
    return (c > 0) - (c < 0);
  }
  Complex x = a.complex(), y = b.complex();
  if (std::fabs(x.real() - y.real()) > tol) return x.real() < y.real() ? -1 : 1;
  if (std::fabs(x.imag() - y.imag()) > tol) return x.imag() < y.imag() ? -1 : 1;
  return 0;
}

std::optional<Rational> rationalize(double x, double tol, long max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  // continued-fraction convergents h/k
  long double h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  long double rest = x;
  const double scale = std::max(1.0, std::fabs(x));
  for (int iter = 0; iter < 64; ++iter) {
    long double a = std::floor(rest);
    long double h2 = a * h1 + h0;
    long double k2 = a * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1, h1 = h2, k0 = k1, k1 = k2;
    if (std::fabs(static_cast<double>(h1 / k1) - x) <= tol * scale) {
      Rational q(Rational(std::to_string(static_cast<long long>(h1))) /
                 Rational(std::to_string(static_cast<long long>(k1))));
      q.canonicalize();
      return q;
    }
    long double frac = rest - a;
    if (frac == 0) break;
    rest = 1 / frac;
  }
  return std::nullopt;
}

Scalar parse_scalar(const std::string& token) {
  if (token.empty()) throw std::invalid_argument("empty number");
  auto is_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  auto strip_plus = [](std::string s) {
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    return s;
  };
  auto slash = token.find('/');
  if (slash != std::string::npos) {
    std::string num = token.substr(0, slash), den = token.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+') {
      throw std::invalid_argument("malformed rational '" + token + "'");
    }
    Rational d(den);
    if (sgn(d) == 0) throw std::invalid_argument("zero denominator in '" + token + "'");
    Rational q(Rational(strip_plus(num)) / d);
    q.canonicalize();
    return Scalar(std::move(q));
  }
  if (is_int(token)) return Scalar(Rational(strip_plus(token)));
  char* end = nullptr;
  double v = std::strtod(token.c_str(), &end);
  if (end != token.c_str() + token.size() || !std::isfinite(v)) {
    throw std::invalid_argument("malformed number '" + token + "'");
  }
  return Scalar(v);
}

}  // namespace tabalg
