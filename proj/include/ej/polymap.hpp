#pragma once

#include "ej/linalg.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace ej {

/// A monomial of degree <= 6 in up to 254 variables, packed into one key:
/// the top byte is the total degree, the next bytes list the participating
/// variables (1-based, ascending, with multiplicity), and unused low bytes
/// are zero. Keys in ascending order enumerate monomials by total degree
/// and, within a degree, in lexicographic order of the exponent vector
/// (leading monomial first), so iteration order is graded lexicographic.
using MonomialKey = std::uint64_t;

constexpr int kMaxPolyDegree = 6;
constexpr int kMaxPolyDim = 254;

MonomialKey monomial_one();
MonomialKey monomial_var(int var);  // 0-based variable index
MonomialKey monomial_mul(MonomialKey a, MonomialKey b);
int monomial_degree(MonomialKey k);
/// Exponent vector of length dim.
std::vector<int> monomial_exponents(MonomialKey k, int dim);
MonomialKey monomial_from_exponents(std::span<const int> exps);

struct PolyTerm {
  MonomialKey key;
  FieldElem coeff;
  friend bool operator==(const PolyTerm&, const PolyTerm&) = default;
};

/// Sparse multivariate polynomial with exact coefficients, kept canonical:
/// terms sorted by key, no zero coefficients. Two maps are equal iff their
/// term vectors are identical.
class PolynomialMap {
 public:
  PolynomialMap() = default;
  explicit PolynomialMap(int dim) : dim_(dim) {}

  static PolynomialMap constant(int dim, FieldElem c);
  static PolynomialMap coordinate(int dim, int var);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<PolyTerm>& terms() const { return terms_; }

  void add_term(MonomialKey k, const FieldElem& c);  // accumulates; call normalize() after a batch
  void normalize();

  PolynomialMap& operator+=(const PolynomialMap& o);
  PolynomialMap& operator-=(const PolynomialMap& o);
  friend PolynomialMap operator+(PolynomialMap a, const PolynomialMap& b) { return a += b; }
  friend PolynomialMap operator-(PolynomialMap a, const PolynomialMap& b) { return a -= b; }
  PolynomialMap operator*(const PolynomialMap& o) const;
  PolynomialMap operator*(const FieldElem& s) const;
  friend PolynomialMap operator*(const FieldElem& s, const PolynomialMap& p) { return p * s; }

  friend bool operator==(const PolynomialMap&, const PolynomialMap&) = default;

  /// Partial derivative with respect to variable var (0-based).
  PolynomialMap derivative(int var) const;

  FieldElem eval(const Vec& point) const;

  std::string to_string() const;

 private:
  int dim_ = 0;
  std::vector<PolyTerm> terms_;
};

/// Product kernels. The serial form is the reference; the parallel form
/// blocks the left operand across OpenMP threads. Exact arithmetic makes
/// the two bit-identical, which the tests assert.
PolynomialMap poly_mul_serial(const PolynomialMap& a, const PolynomialMap& b);
PolynomialMap poly_mul_parallel(const PolynomialMap& a, const PolynomialMap& b);

struct WeightedProduct {
  FieldElem weight;
  const PolynomialMap* left;
  const PolynomialMap* right;
};

/// sum_i weight_i * left_i * right_i, the inner loop of every bilinear
/// contraction of polynomial vectors (gram pairings, trilinear pairings).
PolynomialMap weighted_product_sum_serial(std::span<const WeightedProduct> items, int dim);
PolynomialMap weighted_product_sum_parallel(std::span<const WeightedProduct> items, int dim);
PolynomialMap weighted_product_sum(std::span<const WeightedProduct> items, int dim);

}  // namespace ej
