#pragma once

#include <string>
#include <vector>

#include "plie/bialgebra.hpp"
#include "plie/lie.hpp"

namespace plie {

/// Which linear constraint families to impose on the unknown ρ: 𝒢 → Λ²𝒢.
struct ConstraintFlags {
  bool cocycle = true;
  bool flat = true;
  bool volume_linear = false;
  bool dual_unimodular = false;

  /// Parses a comma-separated list of {cocycle, flat, volume, unimodular}.
  static ConstraintFlags parse(const std::string& csv);
  std::string str() const;
};

/// Coordinates on the n·C(n,2)-dimensional space of linear maps 𝒢 → Λ²𝒢:
/// index i·C(n,2) + p is the coefficient of ρ(e_i) on the p-th sorted pair.
std::size_t cocycle_coordinate_count(int dim);
Cocycle cocycle_from_coordinates(int dim, const Vector& x);
Vector coordinates_of(const Cocycle& c);

/// Exact solution space of the stacked linear constraints on ρ.
struct CocycleSpace {
  LieAlgebra algebra;
  Metric metric;
  ConstraintFlags flags;
  /// Canonical echelon basis in cocycle coordinates.
  std::vector<Vector> basis;
  /// One name per basis vector: the coefficient at its pivot, e.g.
  /// "rho(e1)[e2^e3]". The space's parameters are exactly these coefficients.
  std::vector<std::string> parameter_labels;

  std::size_t dim() const { return basis.size(); }
  Cocycle basis_cocycle(std::size_t m) const;
  /// Σ params[m] · basis[m]
  Cocycle cocycle_at(const Vector& params) const;
};

/// Throws PreconditionError when (alg, metric) is not a Milnor Lie algebra.
CocycleSpace cocycle_space(const LieAlgebra& alg, const Metric& metric, const ConstraintFlags& flags);

/// Quadratic polynomial tᵀ·M·t in the parameters of a CocycleSpace, M symmetric.
struct QuadraticConstraint {
  std::string label;
  Matrix form;

  Rational evaluate(const Vector& params) const;
  /// Coefficient of t_a·t_b (a ≤ b) in the expanded polynomial.
  Rational monomial(std::size_t a, std::size_t b) const;
  /// Scaled so that the first nonzero monomial (in (a, b) order) has
  /// coefficient 1.
  QuadraticConstraint normalized() const;
  bool is_zero() const { return form.is_zero(); }
  std::string str(const std::vector<std::string>& names) const;
};

/// Jacobi defect components of the dual bracket [ , ]* induced by ρ ∈ space,
/// one polynomial per (triple, component), zero polynomials dropped.
std::vector<QuadraticConstraint> quadratic_constraints(const CocycleSpace& space);

}  // namespace plie
