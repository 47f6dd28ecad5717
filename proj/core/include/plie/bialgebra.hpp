#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plie/exterior.hpp"
#include "plie/lie.hpp"
#include "plie/lie_algebra.hpp"

namespace plie {

/// One sparse cocycle entry: ξ(e_i) has coefficient `value` on e_j∧e_k, j < k.
/// Indices are 0-based.
struct CocycleEntry {
  int i;
  int j;
  int k;
  Rational value;
};

/// Linear map ξ: 𝒢 → Λ²𝒢, stored as its values on the basis.
class Cocycle {
 public:
  Cocycle() = default;
  explicit Cocycle(std::vector<KVector> values);

  static Cocycle zero(int dim);
  static Cocycle from_entries(int dim, const std::vector<CocycleEntry>& entries);

  int dim() const { return static_cast<int>(values_.size()); }
  const KVector& value(int i) const { return values_.at(static_cast<std::size_t>(i)); }
  KVector apply(const Vector& u) const;

  std::vector<CocycleEntry> entries() const;
  bool is_zero() const;
  Cocycle scaled(const Rational& s) const;

  friend bool operator==(const Cocycle& a, const Cocycle& b) = default;

 private:
  std::vector<KVector> values_;
};

/// A Lie algebra with a candidate cocycle. Validity (cocycle condition, Jacobi
/// of the dual bracket) is queried, not enforced, so that failing candidates
/// can still be inspected.
class Bialgebra {
 public:
  Bialgebra() = default;
  Bialgebra(LieAlgebra algebra, Cocycle cocycle);

  const LieAlgebra& algebra() const { return algebra_; }
  const Cocycle& cocycle() const { return cocycle_; }
  const LieAlgebra& dual_algebra() const { return dual_; }

 private:
  LieAlgebra algebra_;
  Cocycle cocycle_;
  LieAlgebra dual_;
};

/// [α,β]*(u) = ⟨α∧β, ξ(u)⟩
Vector dual_bracket(const Bialgebra& bi, const Vector& alpha, const Vector& beta);

/// Structure constants of 𝒢* read off the dual bracket; labels get a '*'.
LieAlgebra dual_algebra(const Bialgebra& bi);

/// ρ: 𝒢* → Λ²𝒢*, ⟨ρ(γ), u∧v⟩ = γ([u,v]). Returned as a cocycle on the dual
/// algebra (values Primal relative to 𝒢*). Equals −d on 1-forms.
Cocycle dual_cocycle(const Bialgebra& bi);

/// The bialgebra (𝒢*, ρ) whose dual is the original algebra.
Bialgebra dual_bialgebra(const Bialgebra& bi);

/// ξ([u,v]) − ad_u ξ(v) + ad_v ξ(u)
KVector cocycle_defect(const Bialgebra& bi, const Vector& u, const Vector& v);

struct CocycleCheck {
  bool holds = true;
  std::optional<std::pair<int, int>> witness;
  KVector defect;
};

CocycleCheck is_cocycle(const Bialgebra& bi);

/// κ(ε_i) = tr ad_{ε_i} on the dual algebra.
Vector modular_form(const Bialgebra& bi);

}  // namespace plie
