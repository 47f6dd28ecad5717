#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "plie/exterior.hpp"
#include "plie/lie_algebra.hpp"
#include "plie/matrix.hpp"
#include "plie/subspace.hpp"

namespace plie {

/// Scalar product on a based space, stored as its Gram matrix. Always
/// symmetric positive-definite; the constructor enforces this.
class Metric {
 public:
  Metric() = default;
  explicit Metric(Matrix gram);

  static Metric identity(int dim) { return Metric(Matrix::identity(static_cast<std::size_t>(dim))); }

  int dim() const { return static_cast<int>(gram_.rows()); }
  const Matrix& gram() const { return gram_; }
  const Matrix& inverse_gram() const { return inverse_; }

  Rational inner(const Vector& u, const Vector& v) const;

  /// ⟨ , ⟩* on the dual space: Gram matrix G⁻¹.
  Metric dual() const;
  Metric scaled(const Rational& s) const;

  friend bool operator==(const Metric& a, const Metric& b) { return a.gram_ == b.gram_; }

 private:
  Matrix gram_;
  Matrix inverse_;
};

Vector bracket_of(const LieAlgebra& alg, const Vector& u, const Vector& v);

/// [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
Vector jacobi_defect(const LieAlgebra& alg, int i, int j, int k);

struct JacobiCheck {
  bool holds = true;
  std::optional<std::array<int, 3>> witness;
  Vector defect;

  std::string describe(const LieAlgebra& alg) const;
};

JacobiCheck is_lie_algebra(const LieAlgebra& alg);

/// Matrix of v ↦ [u, v].
Matrix ad_operator(const LieAlgebra& alg, const Vector& u);

/// ad_u extended as a derivation to Λ^k of the algebra's own space (Primal tag).
KVector ad_apply(const LieAlgebra& alg, const Vector& u, const KVector& x);

/// Matrix of v∧w ↦ [u,v]∧w + v∧[u,w] on the sorted Λ² basis.
Matrix ad_operator_wedge2(const LieAlgebra& alg, const Vector& u);

/// G⁻¹·opᵀ·G, so that ⟨op(u), v⟩ = ⟨u, adjoint(v)⟩.
Matrix metric_adjoint(const Metric& metric, const Matrix& op);

/// S = {u : ad_u + ad_u^t = 0}.
Subspace compute_S(const LieAlgebra& alg, const Metric& metric);

Subspace derived_ideal(const LieAlgebra& alg);
Subspace center(const LieAlgebra& alg);

/// (tr ad_{e_1}, …, tr ad_{e_n})
Vector ad_traces(const LieAlgebra& alg);
bool is_unimodular(const LieAlgebra& alg);

struct MilnorReport {
  Subspace s_basis;
  Subspace derived_basis;
  bool s_abelian = false;
  bool derived_abelian = false;
  bool orthogonality_holds = false;
  bool is_milnor = false;
  /// Set when is_milnor and dim S ≥ 1; must then hold.
  std::optional<bool> derived_even_dim;
  /// Human-readable description of the first failing check.
  std::optional<std::string> witness;
};

MilnorReport milnor_check(const LieAlgebra& alg, const Metric& metric);

/// Levi-Civita product: 2⟨A_u v, w⟩ = ⟨[u,v],w⟩ + ⟨[w,u],v⟩ + ⟨[w,v],u⟩.
Vector levi_civita_product(const LieAlgebra& alg, const Metric& metric, const Vector& u,
                           const Vector& v);
/// Matrix of A_u.
Matrix levi_civita_operator(const LieAlgebra& alg, const Metric& metric, const Vector& u);

/// A_{[u,v]} − A_u∘A_v + A_v∘A_u
Matrix covariant_curvature(const LieAlgebra& alg, const Metric& metric, const Vector& u,
                           const Vector& v);

struct FlatnessCheck {
  bool flat = true;
  std::optional<std::pair<int, int>> witness;
};

FlatnessCheck is_flat_metric(const LieAlgebra& alg, const Metric& metric);

}  // namespace plie
