#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace ej {

/// Exact rational scalar. Kept canonical (lowest terms, positive denominator)
/// by the backend, so operator== is representation equality.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Formats as "num/den", denominator always present ("3/2", "0/1", "-1/2").
std::string rational_to_string(const Rational& r);

/// Parses "num/den" or a bare integer "num". Rejects zero or negative
/// denominators and representations not in lowest terms.
Rational rational_from_string(const std::string& s);

/// Element of the real number field generated by the square roots of 2 and 3:
///   q + r2*sqrt(2) + r3*sqrt(3) + r6*sqrt(6).
/// The four components determine the value uniquely, so equality is
/// component-wise and zero means all components vanish.
struct FieldElem {
  Rational q, r2, r3, r6;

  FieldElem() = default;
  FieldElem(Rational a) : q(std::move(a)) {}
  FieldElem(long a) : q(a) {}
  FieldElem(int a) : q(a) {}
  FieldElem(Rational a, Rational b, Rational c, Rational d)
      : q(std::move(a)), r2(std::move(b)), r3(std::move(c)), r6(std::move(d)) {}

  bool is_zero() const { return q == 0 && r2 == 0 && r3 == 0 && r6 == 0; }
  bool is_rational() const { return r2 == 0 && r3 == 0 && r6 == 0; }

  friend bool operator==(const FieldElem&, const FieldElem&) = default;

  FieldElem operator-() const { return {-q, -r2, -r3, -r6}; }
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }

  /// Multiplicative inverse; throws std::domain_error on zero.
  FieldElem inverse() const;

  std::string to_string() const;
};

FieldElem sqrt2();
FieldElem sqrt3();
FieldElem sqrt6();

/// Nearest binary64 to the exact value, within 4 ulp (in practice 1).
/// Throws std::overflow_error if the value exceeds the double range.
double to_double(const FieldElem& x);
double to_double(const Rational& r);

}  // namespace ej
