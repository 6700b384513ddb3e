#include "ej/quadspace.hpp"

#include <stdexcept>

namespace ej {

QuadraticSpace::QuadraticSpace(int dim, FMatrix gram) : dim_(dim), gram_(std::move(gram)) {
  if (dim_ <= 0) throw std::invalid_argument("quadratic space dimension must be positive");
  if (gram_.rows() != dim_ || gram_.cols() != dim_)
    throw std::invalid_argument("gram matrix has wrong shape");
  if (!gram_.is_symmetric()) throw std::invalid_argument("gram matrix must be symmetric");
  try {
    gram_inv_ = gram_.inverse();
  } catch (const std::domain_error&) {
    throw std::invalid_argument("gram matrix is singular (degenerate form rejected)");
  }
}

QuadraticSpace QuadraticSpace::euclidean(int dim) {
  return QuadraticSpace(dim, FMatrix::identity(dim));
}

QuadraticSpace QuadraticSpace::diagonal(Vec entries) {
  FMatrix g(entries.size(), entries.size());
  for (size_t i = 0; i < entries.size(); ++i) g.at(i, i) = entries[i];
  return QuadraticSpace(static_cast<int>(entries.size()), std::move(g));
}

FieldElem QuadraticSpace::eval(const Vec& x) const { return polar(x, x); }

FieldElem QuadraticSpace::polar(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw std::invalid_argument("vector dimension mismatch");
  FieldElem acc;
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (gram_.at(i, j).is_zero() || y[j].is_zero()) continue;
      acc += x[i] * gram_.at(i, j) * y[j];
    }
  }
  return acc;
}

Vec QuadraticSpace::raise(const Vec& covector) const { return gram_inv_ * covector; }

Vec QuadraticSpace::lower(const Vec& v) const { return gram_ * v; }

std::vector<Vec> QuadraticSpace::orth_complement(const Vec& v) const {
  const FieldElem qv = eval(v);
  if (qv.is_zero()) throw std::domain_error("cannot complement an isotropic vector");
  const FieldElem qv_inv = qv.inverse();
  int skip = 0;
  while (v[skip].is_zero()) ++skip;  // v != 0 since Q(v) != 0
  std::vector<Vec> basis;
  basis.reserve(dim_ - 1);
  const Vec lv = lower(v);  // Q(v; e_i) = lv[i]
  for (int i = 0; i < dim_; ++i) {
    if (i == skip) continue;
    Vec w(dim_);
    w[i] = FieldElem(1);
    if (!lv[i].is_zero()) {
      const FieldElem c = lv[i] * qv_inv;
      for (int k = 0; k < dim_; ++k) w[k] -= c * v[k];
    }
    basis.push_back(std::move(w));
  }
  return basis;
}

IsometryReport verify_isometry(const Isometry& iso) {
  const FMatrix& m = iso.matrix;
  if (m.rows() != iso.target.dim() || m.cols() != iso.source.dim())
    return {false, "matrix shape does not match source/target dimensions"};
  if (m.rows() == m.cols() && m.determinant().is_zero()) return {false, "matrix is singular"};
  if (m.rows() != m.cols()) return {false, "matrix is not square"};
  const FMatrix lhs = m.transpose() * iso.target.gram() * m;
  const FMatrix& rhs = iso.source.gram();
  for (int i = 0; i < lhs.rows(); ++i)
    for (int j = 0; j < lhs.cols(); ++j)
      if (lhs.at(i, j) != rhs.at(i, j))
        return {false, "pullback gram entry (" + std::to_string(i) + "," + std::to_string(j) +
                           ") is " + lhs.at(i, j).to_string() + ", expected " +
                           rhs.at(i, j).to_string()};
  return {true, ""};
}

}  // namespace ej
