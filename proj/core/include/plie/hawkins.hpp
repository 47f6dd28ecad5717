#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plie/bialgebra.hpp"
#include "plie/lie.hpp"

namespace plie {

/// A Riemannian Poisson-Lie group at the infinitesimal level: Lie algebra 𝒢,
/// cocycle ξ on 𝒢, and the scalar product on 𝒢. The contravariant geometry
/// lives on 𝒢* with the dual bracket and ⟨ , ⟩* = inverse Gram.
struct Triple {
  Bialgebra bialgebra;
  Metric metric;

  Triple() = default;
  Triple(LieAlgebra algebra, Cocycle cocycle, Metric metric)
      : bialgebra(std::move(algebra), std::move(cocycle)), metric(std::move(metric)) {}

  const LieAlgebra& algebra() const { return bialgebra.algebra(); }
  const Cocycle& cocycle() const { return bialgebra.cocycle(); }
  const LieAlgebra& dual_algebra() const { return bialgebra.dual_algebra(); }
  Metric dual_metric() const { return metric.dual(); }
};

/// Christoffel-style table of the contravariant connection on the dual basis:
/// 𝒟_{α_i} α_j = Σ_k Γ_{ij}^k α_k.
class ConnectionTable {
 public:
  ConnectionTable() = default;
  explicit ConnectionTable(int dim);

  int dim() const { return dim_; }
  Rational& at(int i, int j, int k) { return gamma_[index(i, j, k)]; }
  const Rational& at(int i, int j, int k) const { return gamma_[index(i, j, k)]; }

  Vector apply(int i, int j) const;
  /// Matrix of β ↦ 𝒟_α β.
  Matrix operator_for(const Vector& alpha) const;
  bool is_zero() const;

 private:
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * dim_ + j) * dim_ + k;
  }

  int dim_ = 0;
  std::vector<Rational> gamma_;
};

/// Solves 2⟨𝒟_αβ,γ⟩* = ⟨[γ,α]*,β⟩* + ⟨[γ,β]*,α⟩* + ⟨[α,β]*,γ⟩* on basis triples.
ConnectionTable contravariant_connection(const Triple& triple);

bool is_torsion_free(const ConnectionTable& table, const LieAlgebra& dual_algebra);
bool is_metric_parallel(const ConnectionTable& table, const Metric& dual_metric);

/// K(α_i,α_j) = 𝒟_i𝒟_j − 𝒟_j𝒟_i − 𝒟_{[α_i,α_j]*} for i < j, in
/// combinations(n, 2) order.
std::vector<Matrix> contravariant_curvature(const ConnectionTable& table, const Bialgebra& bi);

struct ContravariantFlatness {
  bool flat = true;
  std::optional<std::pair<int, int>> witness;
};

ContravariantFlatness is_flat(const Triple& triple);

/// ℳ(α,β,γ) on 𝒢* (coordinates in the dual basis). Each argument is projected
/// onto S ⊂ 𝒢* along [𝒢*,𝒢*]; the result is ad_α ad_β ρ(γ) on the projections,
/// so it vanishes whenever an argument lies in the derived ideal. Throws
/// NotFlatError on non-flat triples.
KVector metacurvature(const Triple& triple, const Vector& alpha, const Vector& beta, const Vector& gamma);

struct MetaflatCheck {
  bool metaflat = true;
  /// ℳ(α,β,γ) = ℳ(β,α,γ) on every S-basis triple.
  bool symmetric = true;
  Subspace s_dual;
  std::optional<std::array<int, 3>> witness;  // indices into s_dual.basis()
  KVector witness_value;
};

MetaflatCheck is_metaflat(const Triple& triple);

enum class VolumeVerdict { Satisfied, Violated, NecessaryOnlyPassed };

std::string to_string(VolumeVerdict v);

struct VolumeCheck {
  VolumeVerdict verdict = VolumeVerdict::Satisfied;
  bool primal_unimodular = true;
  bool dual_unimodular = true;
  Vector kappa;
  /// ρ(i_{ξ(e_i)} μ_e) for each basis vector, ρ = −d on Λ^{n−2}𝒢*.
  std::vector<KVector> condition_values;
  bool necessary_condition_holds = true;
  std::optional<std::string> witness;
};

/// μ_e = ε_1∧…∧ε_n. Unimodular 𝒢: satisfied iff κ = 0 and every
/// ρ(i_{ξ(u)}μ_e) vanishes. Otherwise only the necessary condition is
/// decidable: failing it means violated, passing it is reported as
/// NecessaryOnlyPassed. A zero cocycle is always satisfied (π ≡ 0).
VolumeCheck volume_compatibility(const Triple& triple);

struct HawkinsReport {
  // input validity
  bool algebra_is_lie = true;
  bool cocycle_holds = true;
  bool dual_is_lie = true;

  bool is_flat = false;
  bool is_metaflat = false;
  VolumeCheck volume;
  MilnorReport dual_milnor;
  Vector kappa;

  /// is_flat computed from the connection agrees with the dual Milnor check.
  bool flat_matches_dual_milnor = true;
  /// 𝒢 abelian: π is the linear Poisson structure and Hawkins reduces to
  /// "dual is Milnor".
  bool linear_poisson = false;

  std::vector<std::string> witnesses;

  bool valid() const { return algebra_is_lie && cocycle_holds && dual_is_lie; }
  bool hawkins_satisfied() const {
    return is_flat && is_metaflat && volume.verdict == VolumeVerdict::Satisfied;
  }
};

HawkinsReport full_report(const Triple& triple);

}  // namespace plie
