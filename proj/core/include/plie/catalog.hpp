#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "plie/hawkins.hpp"

namespace plie {

// ---------------------------------------------------------------------------
// Builders for the classification setting. Each is exact and basis-explicit.

/// 3-dimensional Milnor algebra: [e1,e2] = λe3, [e1,e3] = −λe2, identity metric.
LieAlgebra milnor_dim3(const Rational& lambda = 1);

/// 4-dimensional Milnor algebra on (e1,e2,f1,f2): [e2,f1] = f2, [e2,f2] = −f1.
LieAlgebra milnor_dim4();

/// Milnor algebra on (s1..sq, f1..f2r) with [s,f_{2j−1}] = ⟨s,u_j⟩ f_{2j},
/// [s,f_{2j}] = −⟨s,u_j⟩ f_{2j−1}; ⟨ , ⟩ Euclidean in that basis.
LieAlgebra milnor_from_vectors(const std::vector<Vector>& u);

/// Group side of the 3-dimensional family: brackets [e1*,e2*] = a e2*,
/// [e1*,e3*] = a e3*, [e2*,e3*] = c e1*; ξ(e2*) = −λ e1*∧e3*,
/// ξ(e3*) = λ e1*∧e2*; identity metric.
Triple dim3_family(const Rational& a, const Rational& c, const Rational& lambda = 1);

/// Group side of the 4-dimensional family on (e1*,e2*,f1*,f2*).
Triple dim4_family(const Rational& b, const Rational& c, const Rational& d, const Rational& beta1,
                   const Rational& beta2);

/// Normal form on (e0,e1,e2,e3): [e1,e2] = b e2 − c e3, [e1,e3] = c e2 + b e3,
/// [e2,e3] = β1 e0 + β2 e1, ξ0(e2) = e0∧e3, ξ0(e3) = −e0∧e2.
Triple normal_form_dim4(const Rational& b, const Rational& c, const Rational& beta1, const Rational& beta2,
                        const Matrix& gram);

/// Linear Poisson structure on an abelian 𝒢 whose dual is milnor_from_vectors(u).
Triple linear_case(const std::vector<Vector>& u);

// ---------------------------------------------------------------------------

struct Expectation {
  bool flat = true;
  bool metaflat = true;
  VolumeVerdict volume = VolumeVerdict::Satisfied;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  Triple triple;
  Expectation expected;
  /// Set when part of the data (typically the metric) is a sample choice
  /// rather than a verbatim transcription.
  std::optional<std::string> reconstruction_note;
};

const std::vector<CatalogEntry>& catalog();
/// Throws UnknownNameError.
const CatalogEntry& find_entry(const std::string& name);

struct CatalogVerification {
  std::string name;
  HawkinsReport report;
  Expectation expected;
  std::vector<std::string> mismatches;
  bool passed() const { return mismatches.empty(); }
};

CatalogVerification catalog_verify(const std::string& name);
CatalogVerification verify_against(const CatalogEntry& entry);

// ---------------------------------------------------------------------------
// Parameterized families.

struct Family {
  std::string name;
  std::string description;
  std::vector<std::string> parameters;
  std::function<Triple(const Vector&)> build;
};

const std::vector<Family>& families();
/// Throws UnknownNameError.
const Family& find_family(const std::string& name);

/// All-zero point plus points from {±1, ±2, ±1/2}: the full product for up
/// to three parameters, otherwise the product of {0, 1, −1/2}.
std::vector<Vector> default_grid(std::size_t parameter_count);

struct FamilyRow {
  Vector params;
  bool valid = false;
  bool flat = false;
  bool metaflat = false;
  VolumeVerdict volume = VolumeVerdict::Satisfied;
  bool hawkins = false;
  std::optional<std::string> witness;
};

struct ConditionSummary {
  std::string condition;
  bool holds_everywhere = true;
  std::optional<std::size_t> first_failure;  // row index
  std::optional<std::string> witness;
};

struct FamilyReport {
  std::string family;
  std::vector<std::string> parameters;
  std::vector<FamilyRow> rows;
  std::vector<ConditionSummary> summary;

  /// One row per grid point, fixed column order.
  std::string table() const;
};

/// Throws DimensionError when a grid point has the wrong parameter count.
FamilyReport verify_family(const Family& family, const std::vector<Vector>& grid);

}  // namespace plie
