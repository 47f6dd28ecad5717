#pragma once

#include <map>
#include <string>
#include <vector>

#include "plie/lie_algebra.hpp"
#include "plie/matrix.hpp"

namespace plie {

/// Which side of the duality a k-vector lives on, relative to a fixed based
/// space V: Primal is Λ^k V, Dual is Λ^k V*.
enum class Space { Primal, Dual };

Space opposite(Space s);

/// Strictly increasing 0-based basis indices.
using MultiIndex = std::vector<int>;

/// All strictly increasing k-subsets of {0..n-1}, in lexicographic order.
std::vector<MultiIndex> combinations(int n, int k);

/// Sorts `idx` in place and returns the sign of the sorting permutation, or 0
/// if an index repeats.
int sort_with_sign(std::vector<int>& idx);

/// Exact element of Λ^k of an n-dimensional based space. Zero coefficients are
/// never stored, so equality is structural.
class KVector {
 public:
  KVector() = default;
  KVector(int dim, int degree, Space space);

  static KVector basis(int dim, Space space, MultiIndex indices);
  static KVector from_vector(Space space, const Vector& v);
  static KVector scalar(int dim, Space space, const Rational& value);
  /// e_0 ∧ ... ∧ e_{n-1}
  static KVector top(int dim, Space space);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  Space space() const { return space_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const MultiIndex& idx) const;
  /// Adds `value` to the coefficient of the (not necessarily sorted) index
  /// tuple, applying the sorting sign.
  void add_term(MultiIndex idx, const Rational& value);
  const std::map<MultiIndex, Rational>& terms() const { return terms_; }

  /// Dense coefficients in combinations(dim, degree) order.
  Vector to_dense() const;
  static KVector from_dense(int dim, int degree, Space space, const Vector& coeffs);

  /// Same coefficients, tagged with another space. Used when an object changes
  /// role (Λ²𝒢* seen as the primal side of the dual algebra).
  KVector retagged(Space space) const;

  KVector& operator+=(const KVector& other);
  KVector& operator-=(const KVector& other);
  KVector& operator*=(const Rational& s);
  friend KVector operator+(KVector a, const KVector& b) { return a += b; }
  friend KVector operator-(KVector a, const KVector& b) { return a -= b; }
  friend KVector operator*(const Rational& s, KVector a) { return a *= s; }
  friend KVector operator-(KVector a) { return a *= Rational(-1); }
  friend bool operator==(const KVector& a, const KVector& b) = default;

  /// e.g. "-2 e1^e2 + 1/2 e2^e3"; "0" for the zero element.
  std::string str(const std::vector<std::string>& labels = {}) const;

 private:
  void check_compatible(const KVector& other) const;

  int dim_ = 0;
  int degree_ = 0;
  Space space_ = Space::Primal;
  std::map<MultiIndex, Rational> terms_;
};

/// a ∧ b. Throws DimensionError on dim or space mismatch; a degree above dim
/// yields the zero element of that degree.
KVector wedge(const KVector& a, const KVector& b);

/// ⟨α₁∧…∧αₖ, u₁∧…∧uₖ⟩ = det[αᵢ(uⱼ)], extended bilinearly. Arguments must have
/// equal dim and degree and opposite space tags (either order).
Rational pairing(const KVector& a, const KVector& b);

/// Interior product i_alpha x with i_{a∧b} = i_b ∘ i_a. For degree-1 alpha,
/// i_α(u₁∧…∧uₖ) = Σⱼ (−1)^{j+1} α(uⱼ) u₁∧…ûⱼ…∧uₖ.
KVector interior(const KVector& alpha, const KVector& x);

/// Chevalley–Eilenberg differential of a form on `alg` (Dual tag):
/// (dω)(u₀,…,uₖ) = Σ_{i<j} (−1)^{i+j} ω([uᵢ,uⱼ], u₀,…,ûᵢ,…,ûⱼ,…,uₖ).
KVector ce_differential(const LieAlgebra& alg, const KVector& omega);

}  // namespace plie
