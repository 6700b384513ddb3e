#include "ej/field.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>

namespace ej {

std::string rational_to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational rational_from_string(const std::string& s) {
  const auto slash = s.find('/');
  BigInt num, den;
  try {
    if (slash == std::string::npos) {
      num = BigInt(s);
      den = 1;
    } else {
      num = BigInt(s.substr(0, slash));
      den = BigInt(s.substr(slash + 1));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational: '" + s + "'");
  }
  if (den <= 0)
    throw std::invalid_argument("rational denominator must be positive: '" + s + "'");
  if (gcd(num, den) != 1)
    throw std::invalid_argument("rational not in lowest terms: '" + s + "'");
  return Rational(num, den);
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  q += o.q;
  r2 += o.r2;
  r3 += o.r3;
  r6 += o.r6;
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  q -= o.q;
  r2 -= o.r2;
  r3 -= o.r3;
  r6 -= o.r6;
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  // Multiplication table: sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2*sqrt3,
  // sqrt3*sqrt6 = 3*sqrt2, squares 2, 3, 6. Zero components are skipped;
  // most tensor coefficients live in a single component.
  const FieldElem& a = *this;
  const FieldElem& b = o;
  Rational nq, n2, n3, n6;
  if (a.q != 0) {
    if (b.q != 0) nq += a.q * b.q;
    if (b.r2 != 0) n2 += a.q * b.r2;
    if (b.r3 != 0) n3 += a.q * b.r3;
    if (b.r6 != 0) n6 += a.q * b.r6;
  }
  if (a.r2 != 0) {
    if (b.q != 0) n2 += a.r2 * b.q;
    if (b.r2 != 0) nq += 2 * (a.r2 * b.r2);
    if (b.r3 != 0) n6 += a.r2 * b.r3;
    if (b.r6 != 0) n3 += 2 * (a.r2 * b.r6);
  }
  if (a.r3 != 0) {
    if (b.q != 0) n3 += a.r3 * b.q;
    if (b.r2 != 0) n6 += a.r3 * b.r2;
    if (b.r3 != 0) nq += 3 * (a.r3 * b.r3);
    if (b.r6 != 0) n2 += 3 * (a.r3 * b.r6);
  }
  if (a.r6 != 0) {
    if (b.q != 0) n6 += a.r6 * b.q;
    if (b.r2 != 0) n3 += 2 * (a.r6 * b.r2);
    if (b.r3 != 0) n2 += 3 * (a.r6 * b.r3);
    if (b.r6 != 0) nq += 6 * (a.r6 * b.r6);
  }
  q = std::move(nq);
  r2 = std::move(n2);
  r3 = std::move(n3);
  r6 = std::move(n6);
  return *this;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero field element");
  // Rationalize with the two Galois conjugates: first kill the sqrt2 parts,
  // then the sqrt3 part of what remains.
  const FieldElem c2{q, -r2, r3, -r6};
  FieldElem m = *this * c2;  // lands in Q(sqrt3): m.r2 == m.r6 == 0
  const FieldElem c3{m.q, 0, -m.r3, 0};
  const FieldElem n = m * c3;  // rational
  return c2 * c3 * FieldElem(Rational(1) / n.q);
}

FieldElem& FieldElem::operator/=(const FieldElem& o) { return *this *= o.inverse(); }

FieldElem sqrt2() { return {0, 1, 0, 0}; }
FieldElem sqrt3() { return {0, 0, 1, 0}; }
FieldElem sqrt6() { return {0, 0, 0, 1}; }

std::string FieldElem::to_string() const {
  std::string s = rational_to_string(q);
  if (r2 != 0) s += " + (" + rational_to_string(r2) + ")*sqrt2";
  if (r3 != 0) s += " + (" + rational_to_string(r3) + ")*sqrt3";
  if (r6 != 0) s += " + (" + rational_to_string(r6) + ")*sqrt6";
  return s;
}

namespace {

template <class Float>
Float eval_float(const FieldElem& x, Float& scale) {
  const Float s2 = sqrt(Float(2)), s3 = sqrt(Float(3)), s6 = sqrt(Float(6));
  auto conv = [](const Rational& r) { return Float(numerator(r)) / Float(denominator(r)); };
  const Float t0 = conv(x.q), t1 = conv(x.r2) * s2, t2 = conv(x.r3) * s3, t3 = conv(x.r6) * s6;
  scale = (std::max)({fabs(t0), fabs(t1), fabs(t2), fabs(t3)});
  return t0 + t1 + t2 + t3;
}

template <class Float>
bool try_to_double(const FieldElem& x, int safe_bits, double& out) {
  Float scale;
  const Float v = eval_float<Float>(x, scale);
  // The sum is accurate to roughly the working precision relative to the
  // largest term; accept only if cancellation left enough bits.
  if (v != 0 && fabs(v) < ldexp(scale, -safe_bits)) return false;
  out = v.template convert_to<double>();
  return true;
}

}  // namespace

double to_double(const FieldElem& x) {
  if (x.is_zero()) return 0.0;
  double out;
  using boost::multiprecision::cpp_bin_float_quad;
  using big_float = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<160>>;
  using huge_float = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<600>>;
  if (!try_to_double<cpp_bin_float_quad>(x, 50, out) &&
      !try_to_double<big_float>(x, 460, out)) {
    huge_float scale;
    out = eval_float<huge_float>(x, scale).convert_to<double>();
  }
  if (!std::isfinite(out)) throw std::overflow_error("field element exceeds double range");
  return out;
}

double to_double(const Rational& r) { return to_double(FieldElem(r)); }

}  // namespace ej
