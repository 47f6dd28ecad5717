#pragma once

#include <string>

#include <json.hpp>

#include "plie/catalog.hpp"
#include "plie/classify.hpp"
#include "plie/hawkins.hpp"
#include "plie/numcheck.hpp"

namespace plie::cli {

/// Version of the machine-readable output; bumped on incompatible changes.
inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const Vector& v);
Vector vector_from_json(const nlohmann::json& j);

nlohmann::json to_json(const KVector& x);
KVector kvector_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MilnorReport& r);
MilnorReport milnor_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const HawkinsReport& r);
HawkinsReport hawkins_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CocycleSpace& space, const std::vector<QuadraticConstraint>& quadratic);
nlohmann::json to_json(const CatalogVerification& v);
nlohmann::json to_json(const FamilyReport& r);
nlohmann::json to_json(const numeric::VolumeReport& r);
nlohmann::json to_json(const numeric::MultiplicativityReport& r);

std::string render_text(const HawkinsReport& r, const LieAlgebra& dual);
std::string render_text(const MilnorReport& r, const LieAlgebra& alg);
std::string render_text(const CocycleSpace& space, const std::vector<QuadraticConstraint>& quadratic);
std::string render_text(const CatalogVerification& v);
std::string render_text(const FamilyReport& r);
std::string render_text(const numeric::VolumeReport& r);
std::string render_text(const numeric::MultiplicativityReport& r);

}  // namespace plie::cli
