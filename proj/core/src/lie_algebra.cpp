#include "plie/lie_algebra.hpp"

#include <utility>

#include "plie/errors.hpp"
#include "plie/lie.hpp"

namespace plie {

std::vector<std::string> default_labels(int dim, const std::string& stem) {
  std::vector<std::string> out;
  for (int i = 1; i <= dim; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

LieAlgebra LieAlgebra::raw(int dim, const std::vector<StructureConstant>& entries,
                           std::vector<std::string> labels) {
  if (dim < 0) throw DimensionError("negative dimension");
  LieAlgebra a;
  a.dim_ = dim;
  a.c_.assign(static_cast<std::size_t>(dim) * dim * dim, Rational());
  for (const auto& e : entries) {
    if (e.i < 0 || e.j < 0 || e.k < 0 || e.i >= dim || e.j >= dim || e.k >= dim)
      throw DimensionError("structure constant index out of range");
    if (e.i >= e.j) throw PreconditionError("structure constants require i < j");
    a.c_[a.index(e.i, e.j, e.k)] += e.value;
    a.c_[a.index(e.j, e.i, e.k)] -= e.value;
  }
  if (labels.empty()) labels = default_labels(dim);
  if (static_cast<int>(labels.size()) != dim) throw DimensionError("label count != dim");
  a.labels_ = std::move(labels);
  return a;
}

LieAlgebra LieAlgebra::checked(int dim, const std::vector<StructureConstant>& entries,
                               std::vector<std::string> labels) {
  LieAlgebra a = raw(dim, entries, std::move(labels));
  const JacobiCheck j = is_lie_algebra(a);
  if (!j.holds) throw PreconditionError("Jacobi identity fails: " + j.describe(a));
  return a;
}

LieAlgebra LieAlgebra::abelian(int dim, std::vector<std::string> labels) {
  return raw(dim, {}, std::move(labels));
}

const Rational& LieAlgebra::constant(int i, int j, int k) const { return c_[index(i, j, k)]; }

Vector LieAlgebra::basis_bracket(int i, int j) const {
  Vector v(static_cast<std::size_t>(dim_));
  for (int k = 0; k < dim_; ++k) v[k] = constant(i, j, k);
  return v;
}

std::vector<StructureConstant> LieAlgebra::entries() const {
  std::vector<StructureConstant> out;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (!constant(i, j, k).is_zero()) out.push_back({i, j, k, constant(i, j, k)});
  return out;
}

LieAlgebra LieAlgebra::with_labels(std::vector<std::string> labels) const {
  if (static_cast<int>(labels.size()) != dim_) throw DimensionError("label count != dim");
  LieAlgebra a = *this;
  a.labels_ = std::move(labels);
  return a;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& x : c_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

LieAlgebra LieAlgebra::scaled(const Rational& s) const {
  LieAlgebra a = *this;
  for (auto& x : a.c_) x *= s;
  return a;
}

}  // namespace plie
