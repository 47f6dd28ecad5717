#include "plie_cli/document.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <tuple>

namespace plie::cli {

using nlohmann::json;

namespace {

void compact_dump_into(const json& j, int indent, std::string& out) {
  const auto pad = [&](int n) { out.append(static_cast<std::size_t>(n), ' '); };
  if (j.is_array()) {
    const bool flat = std::none_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); });
    if (flat || j.empty()) {
      out += j.dump();
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      pad(indent + 2);
      compact_dump_into(j[i], indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    pad(indent);
    out += "]";
  } else if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      pad(indent + 2);
      out += json(it.key()).dump() + ": ";
      compact_dump_into(it.value(), indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    pad(indent);
    out += "}";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string compact_dump(const json& j) {
  std::string out;
  compact_dump_into(j, 0, out);
  return out;
}

std::string to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::MalformedDocument: return "malformed-document";
    case ParseErrorKind::MalformedRational: return "malformed-rational";
    case ParseErrorKind::IndexOutOfRange: return "index-out-of-range";
    case ParseErrorKind::AsymmetricMetric: return "asymmetric-metric";
    case ParseErrorKind::DuplicateEntry: return "duplicate-entry";
    case ParseErrorKind::InvalidMetric: return "invalid-metric";
  }
  return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::string location, const std::string& detail)
    : Error(to_string(kind) + " at " + location + ": " + detail), kind_(kind), location_(std::move(location)) {}

bool operator==(const TripleDocument& a, const TripleDocument& b) {
  const auto key = [](const TripleDocument& d) {
    std::vector<std::tuple<int, int, int, std::string>> sc;
    for (const auto& e : d.structure_constants) sc.emplace_back(e.i, e.j, e.k, e.value.str());
    std::vector<std::tuple<int, int, int, std::string>> co;
    for (const auto& e : d.cocycle) co.emplace_back(e.i, e.j, e.k, e.value.str());
    return std::tuple(d.dim, d.labels, sc, d.metric, co, d.metadata);
  };
  return key(a) == key(b);
}

namespace {

[[noreturn]] void fail(ParseErrorKind kind, const std::string& where, const std::string& detail) {
  throw ParseError(kind, where, detail);
}

Rational rational_at(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) fail(ParseErrorKind::MalformedRational, where, "expected a rational string \"p/q\"");
  const auto r = Rational::try_parse(v.get<std::string>());
  if (!r) fail(ParseErrorKind::MalformedRational, where, "cannot parse \"" + v.get<std::string>() + "\"");
  return *r;
}

int index_at(const json& v, int dim, const std::string& where) {
  if (!v.is_number_integer()) fail(ParseErrorKind::MalformedDocument, where, "index must be an integer");
  const long i = v.get<long>();
  if (i < 1 || i > dim)
    fail(ParseErrorKind::IndexOutOfRange, where, std::to_string(i) + " not in 1.." + std::to_string(dim));
  return static_cast<int>(i - 1);
}

// Reads [[a, b, c, "p/q"], ...]; the pair (a,b) or (b,c) must be strictly increasing.
template <typename Entry>
std::vector<Entry> sparse_entries(const json& root, const char* field, int dim, bool lead_pair) {
  std::vector<Entry> out;
  if (!root.contains(field)) return out;
  const json& list = root.at(field);
  if (!list.is_array()) fail(ParseErrorKind::MalformedDocument, field, "expected an array");
  std::set<std::tuple<int, int, int>> seen;
  for (std::size_t n = 0; n < list.size(); ++n) {
    const std::string where = std::string(field) + "[" + std::to_string(n + 1) + "]";
    const json& e = list[n];
    if (!e.is_array() || e.size() != 4)
      fail(ParseErrorKind::MalformedDocument, where, "expected [index, index, index, \"p/q\"]");
    const int a = index_at(e[0], dim, where + "[1]");
    const int b = index_at(e[1], dim, where + "[2]");
    const int c = index_at(e[2], dim, where + "[3]");
    const Rational value = rational_at(e[3], where + "[4]");
    if (lead_pair ? a >= b : b >= c)
      fail(ParseErrorKind::MalformedDocument, where,
           lead_pair ? "first two indices must satisfy i < j" : "last two indices must satisfy j < k");
    if (!seen.insert({a, b, c}).second) fail(ParseErrorKind::DuplicateEntry, where, "repeats an earlier entry");
    out.push_back(Entry{a, b, c, value});
  }
  return out;
}

}  // namespace

TripleDocument parse_document(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ParseErrorKind::MalformedDocument, "byte " + std::to_string(e.byte), e.what());
  }
  if (!root.is_object()) fail(ParseErrorKind::MalformedDocument, "document", "expected an object");
  if (!root.contains("dim") || !root["dim"].is_number_integer())
    fail(ParseErrorKind::MalformedDocument, "dim", "missing or not an integer");

  TripleDocument doc;
  doc.dim = root["dim"].get<int>();
  if (doc.dim < 1) fail(ParseErrorKind::MalformedDocument, "dim", "must be at least 1");

  if (root.contains("labels")) {
    const json& labels = root["labels"];
    if (!labels.is_array() || labels.size() != static_cast<std::size_t>(doc.dim))
      fail(ParseErrorKind::MalformedDocument, "labels", "expected " + std::to_string(doc.dim) + " strings");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const std::string where = "labels[" + std::to_string(i + 1) + "]";
      if (!labels[i].is_string()) fail(ParseErrorKind::MalformedDocument, where, "expected a string");
      if (!seen.insert(labels[i].get<std::string>()).second)
        fail(ParseErrorKind::DuplicateEntry, where, "label repeated");
      doc.labels.push_back(labels[i].get<std::string>());
    }
  } else {
    doc.labels = default_labels(doc.dim);
  }

  doc.structure_constants = sparse_entries<StructureConstant>(root, "structure_constants", doc.dim, true);
  doc.cocycle = sparse_entries<CocycleEntry>(root, "cocycle", doc.dim, false);

  const auto n = static_cast<std::size_t>(doc.dim);
  if (root.contains("metric")) {
    const json& rows = root["metric"];
    if (!rows.is_array() || rows.size() != n)
      fail(ParseErrorKind::MalformedDocument, "metric", "expected " + std::to_string(n) + " rows");
    doc.metric = Matrix(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      if (!rows[r].is_array() || rows[r].size() != n)
        fail(ParseErrorKind::MalformedDocument, "metric row " + std::to_string(r + 1),
             "expected " + std::to_string(n) + " entries");
      for (std::size_t c = 0; c < n; ++c)
        doc.metric(r, c) = rational_at(rows[r][c], "metric (row " + std::to_string(r + 1) + ", col " +
                                                        std::to_string(c + 1) + ")");
    }
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r + 1; c < n; ++c)
        if (doc.metric(r, c) != doc.metric(c, r))
          fail(ParseErrorKind::AsymmetricMetric,
               "metric (row " + std::to_string(r + 1) + ", col " + std::to_string(c + 1) + ")",
               doc.metric(r, c).str() + " != " + doc.metric(c, r).str());
  } else {
    doc.metric = Matrix::identity(n);
  }

  if (root.contains("metadata")) doc.metadata = root["metadata"];
  return doc;
}

TripleDocument read_document(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    buffer << in.rdbuf();
  }
  return parse_document(buffer.str());
}

std::string serialize_document(const TripleDocument& doc) {
  json root;
  root["dim"] = doc.dim;
  root["labels"] = doc.labels;
  root["structure_constants"] = json::array();
  for (const auto& e : doc.structure_constants)
    root["structure_constants"].push_back({e.i + 1, e.j + 1, e.k + 1, e.value.str()});
  root["metric"] = json::array();
  for (std::size_t r = 0; r < doc.metric.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < doc.metric.cols(); ++c) row.push_back(doc.metric(r, c).str());
    root["metric"].push_back(row);
  }
  root["cocycle"] = json::array();
  for (const auto& e : doc.cocycle) root["cocycle"].push_back({e.i + 1, e.j + 1, e.k + 1, e.value.str()});
  root["metadata"] = doc.metadata;
  return compact_dump(root) + "\n";
}

Triple to_triple(const TripleDocument& doc) {
  if (!is_positive_definite(doc.metric))
    throw ParseError(ParseErrorKind::InvalidMetric, "metric", "not positive definite");
  return Triple(LieAlgebra::raw(doc.dim, doc.structure_constants, doc.labels),
                Cocycle::from_entries(doc.dim, doc.cocycle), Metric(doc.metric));
}

TripleDocument from_triple(const Triple& triple, json metadata) {
  TripleDocument doc;
  doc.dim = triple.algebra().dim();
  doc.labels = triple.algebra().labels();
  doc.structure_constants = triple.algebra().entries();
  doc.metric = triple.metric.gram();
  doc.cocycle = triple.cocycle().entries();
  doc.metadata = std::move(metadata);
  return doc;
}

}  // namespace plie::cli
