#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "plie/errors.hpp"
#include "plie/hawkins.hpp"

namespace plie::cli {

/// On-disk description of a triple (𝒢, ξ, ⟨ , ⟩). Indices are 1-based in the
/// file and 0-based here.
struct TripleDocument {
  int dim = 0;
  std::vector<std::string> labels;
  std::vector<StructureConstant> structure_constants;
  Matrix metric;
  std::vector<CocycleEntry> cocycle;
  nlohmann::json metadata = nlohmann::json::object();

  friend bool operator==(const TripleDocument& a, const TripleDocument& b);
};

enum class ParseErrorKind {
  MalformedDocument,
  MalformedRational,
  IndexOutOfRange,
  AsymmetricMetric,
  DuplicateEntry,
  InvalidMetric,
};

std::string to_string(ParseErrorKind kind);

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::string location, const std::string& detail);
  ParseErrorKind kind() const { return kind_; }
  const std::string& location() const { return location_; }

 private:
  ParseErrorKind kind_;
  std::string location_;
};

TripleDocument parse_document(const std::string& text);
TripleDocument read_document(const std::string& path);
std::string serialize_document(const TripleDocument& doc);

/// Indented JSON in which arrays of scalars stay on one line, so sparse
/// entries and metric rows read as tuples.
std::string compact_dump(const nlohmann::json& j);

/// Builds the triple. The metric is checked for positive-definiteness here.
Triple to_triple(const TripleDocument& doc);
TripleDocument from_triple(const Triple& triple, nlohmann::json metadata = nlohmann::json::object());

}  // namespace plie::cli
