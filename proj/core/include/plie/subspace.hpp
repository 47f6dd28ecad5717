#pragma once

#include <cstddef>
#include <vector>

#include "plie/matrix.hpp"

namespace plie {

/// Linear subspace of Q^n stored by its canonical basis (the nonzero rows of
/// the reduced row echelon form of any spanning set). Two subspaces are equal
/// iff their canonical bases are equal.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace whole(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  /// Orthogonal complement with respect to the bilinear form given by gram.
  Subspace orthogonal_complement(const Matrix& gram) const;

  /// Orthogonal projection onto this subspace along its gram-complement.
  Vector project(const Vector& v, const Matrix& gram) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
};

}  // namespace plie
