#pragma once

#include "ej/field.hpp"

#include <vector>

namespace ej {

using Vec = std::vector<FieldElem>;

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const FieldElem& s, const Vec& v);
bool is_zero(const Vec& v);

/// Dense matrix of exact field elements. Dimensions here never exceed a few
/// dozen, so plain Gaussian elimination is all we need.
class FMatrix {
 public:
  FMatrix() = default;
  FMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static FMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  FieldElem& at(int i, int j) { return a_[i * cols_ + j]; }
  const FieldElem& at(int i, int j) const { return a_[i * cols_ + j]; }

  FMatrix transpose() const;
  FMatrix operator*(const FMatrix& o) const;
  FMatrix operator-(const FMatrix& o) const;
  Vec operator*(const Vec& v) const;

  bool is_symmetric() const;
  friend bool operator==(const FMatrix&, const FMatrix&) = default;

  /// Gauss-Jordan with the first nonzero pivot in column order (exact
  /// arithmetic needs no pivoting heuristics). Throws std::domain_error
  /// when singular.
  FMatrix inverse() const;

  FieldElem determinant() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<FieldElem> a_;
};

}  // namespace ej
