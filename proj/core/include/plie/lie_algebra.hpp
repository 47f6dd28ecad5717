#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "plie/matrix.hpp"

namespace plie {

/// One structure constant: [e_i, e_j] has coefficient `value` on e_k.
/// Indices are 0-based; i < j is required.
struct StructureConstant {
  int i;
  int j;
  int k;
  Rational value;
};

/// Finite-dimensional algebra with an antisymmetric bracket given by exact
/// structure constants. Construction through `raw` does not validate Jacobi;
/// `checked` throws PreconditionError when Jacobi fails.
class LieAlgebra {
 public:
  LieAlgebra() = default;

  static LieAlgebra raw(int dim, const std::vector<StructureConstant>& entries,
                        std::vector<std::string> labels = {});
  static LieAlgebra checked(int dim, const std::vector<StructureConstant>& entries,
                            std::vector<std::string> labels = {});
  static LieAlgebra abelian(int dim, std::vector<std::string> labels = {});

  int dim() const { return dim_; }

  /// c_{ij}^k for any i, j (antisymmetry applied).
  const Rational& constant(int i, int j, int k) const;

  /// [e_i, e_j] as a coordinate vector.
  Vector basis_bracket(int i, int j) const;

  /// Nonzero constants with i < j, ordered by (i, j, k).
  std::vector<StructureConstant> entries() const;

  const std::vector<std::string>& labels() const { return labels_; }
  LieAlgebra with_labels(std::vector<std::string> labels) const;

  bool is_abelian() const;

  /// Same bracket scaled by s (used for scale-invariance checks).
  LieAlgebra scaled(const Rational& s) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.c_ == b.c_;
  }

 private:
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * dim_ + j) * dim_ + k;
  }

  int dim_ = 0;
  std::vector<Rational> c_;  // full n^3 table, antisymmetric in (i, j)
  std::vector<std::string> labels_;
};

std::vector<std::string> default_labels(int dim, const std::string& stem = "e");

}  // namespace plie
