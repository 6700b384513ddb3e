#pragma once

#include "ej/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ej {

/// Nondegenerate quadratic space: a dimension together with an invertible
/// symmetric Gram matrix. The inverse is computed once at construction;
/// singular or asymmetric input is rejected there.
class QuadraticSpace {
 public:
  QuadraticSpace(int dim, FMatrix gram);

  static QuadraticSpace euclidean(int dim);
  static QuadraticSpace diagonal(Vec entries);

  int dim() const { return dim_; }
  const FMatrix& gram() const { return gram_; }
  const FMatrix& gram_inv() const { return gram_inv_; }

  /// Q(x) = x^T G x.
  FieldElem eval(const Vec& x) const;

  /// Symmetric bilinear polarization Q(x;y) = (Q(x+y)-Q(x)-Q(y))/2 = x^T G y.
  FieldElem polar(const Vec& x, const Vec& y) const;

  /// Index raising: the unique v with Q(v;y) = w^T y for all y, i.e. G^{-1} w.
  Vec raise(const Vec& covector) const;

  /// Index lowering G v.
  Vec lower(const Vec& v) const;

  /// Basis of the orthogonal complement of v (dim-1 vectors), obtained by
  /// one Gram-Schmidt step of the standard basis against v. Deterministic.
  /// Requires Q(v) != 0; throws std::domain_error on an isotropic vector.
  std::vector<Vec> orth_complement(const Vec& v) const;

  friend bool operator==(const QuadraticSpace& a, const QuadraticSpace& b) {
    return a.dim_ == b.dim_ && a.gram_ == b.gram_;
  }

 private:
  int dim_;
  FMatrix gram_;
  FMatrix gram_inv_;
};

/// Linear map between quadratic spaces claiming to preserve the forms.
struct Isometry {
  QuadraticSpace source;
  QuadraticSpace target;
  FMatrix matrix;  // target.dim x source.dim
};

struct IsometryReport {
  bool pass = false;
  std::string failure;  // empty when passing; names the violated entry otherwise
};

/// Exact check of M^T G_target M == G_source and invertibility of M.
IsometryReport verify_isometry(const Isometry& iso);

}  // namespace ej
