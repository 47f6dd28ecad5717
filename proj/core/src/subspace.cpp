#include "plie/subspace.hpp"

#include "plie/errors.hpp"

namespace plie {

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
  Subspace s(ambient);
  if (vectors.empty()) return s;
  const EchelonForm ef = rref(Matrix::from_rows(vectors, ambient));
  for (std::size_t r = 0; r < ef.pivots.size(); ++r) s.basis_.push_back(ef.reduced.row(r));
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  std::vector<Vector> units;
  for (std::size_t i = 0; i < ambient; ++i) units.push_back(unit_vector(ambient, i));
  return span(ambient, units);
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionError("Subspace::contains: ambient mismatch");
  if (plie::is_zero(v)) return true;
  std::vector<Vector> rows = basis_;
  rows.push_back(v);
  return rank(Matrix::from_rows(rows, ambient_)) == basis_.size();
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis_) {
    if (!contains(v)) return false;
  }
  return true;
}

Subspace Subspace::orthogonal_complement(const Matrix& gram) const {
  if (gram.rows() != ambient_ || gram.cols() != ambient_)
    throw DimensionError("orthogonal_complement: gram shape mismatch");
  if (basis_.empty()) return whole(ambient_);
  std::vector<Vector> rows;
  for (const auto& b : basis_) rows.push_back(gram * b);
  Subspace s(ambient_);
  s.basis_ = kernel(Matrix::from_rows(rows, ambient_));
  return s;
}

Vector Subspace::project(const Vector& v, const Matrix& gram) const {
  const std::size_t k = basis_.size();
  if (k == 0) return zero_vector(ambient_);
  // Solve (B^T G B) c = B^T G v.
  Matrix normal(k, k);
  Vector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Vector gbi = gram * basis_[i];
    rhs[i] = dot(gbi, v);
    for (std::size_t j = 0; j < k; ++j) normal(i, j) = dot(gbi, basis_[j]);
  }
  const auto c = solve(normal, rhs);
  if (!c) throw SingularMatrixError();
  Vector p = zero_vector(ambient_);
  for (std::size_t i = 0; i < k; ++i) p = add(p, scale((*c)[i], basis_[i]));
  return p;
}

}  // namespace plie
