#include "plie_cli/render.hpp"

#include <sstream>

namespace plie::cli {

using nlohmann::json;

json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

Vector vector_from_json(const json& j) {
  Vector v;
  for (const auto& x : j) v.push_back(Rational::parse(x.get<std::string>()));
  return v;
}

// Terms are [i1, ..., ik, "p/q"] with 1-based indices, in sorted index order.
json to_json(const KVector& x) {
  json terms = json::array();
  for (const auto& [idx, c] : x.terms()) {
    json t = json::array();
    for (int i : idx) t.push_back(i + 1);
    t.push_back(c.str());
    terms.push_back(std::move(t));
  }
  return {{"dim", x.dim()},
          {"degree", x.degree()},
          {"space", x.space() == Space::Primal ? "primal" : "dual"},
          {"terms", terms}};
}

KVector kvector_from_json(const json& j) {
  const Space space = j.at("space").get<std::string>() == "primal" ? Space::Primal : Space::Dual;
  KVector out(j.at("dim").get<int>(), j.at("degree").get<int>(), space);
  for (const auto& t : j.at("terms")) {
    MultiIndex idx;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) idx.push_back(t[i].get<int>() - 1);
    out.add_term(std::move(idx), Rational::parse(t.back().get<std::string>()));
  }
  return out;
}

namespace {

json subspace_json(const Subspace& s) {
  json basis = json::array();
  for (const auto& b : s.basis()) basis.push_back(to_json(b));
  return {{"ambient", s.ambient()}, {"basis", basis}};
}

Subspace subspace_from_json(const json& j) {
  std::vector<Vector> basis;
  for (const auto& b : j.at("basis")) basis.push_back(vector_from_json(b));
  return Subspace::span(j.at("ambient").get<std::size_t>(), basis);
}

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string vector_text(const Vector& v) { return to_string(v); }

std::string point_text(const numeric::Point& p) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p[i];
  os << ')';
  return os.str();
}

json point_json(const numeric::Point& p) { return std::vector<double>(p.data(), p.data() + p.size()); }

VolumeVerdict verdict_from(const std::string& s) {
  for (auto v : {VolumeVerdict::Satisfied, VolumeVerdict::Violated, VolumeVerdict::NecessaryOnlyPassed})
    if (to_string(v) == s) return v;
  throw Error("unknown volume verdict: " + s);
}

}  // namespace

json to_json(const MilnorReport& r) {
  return {{"s", subspace_json(r.s_basis)},
          {"derived", subspace_json(r.derived_basis)},
          {"s_abelian", r.s_abelian},
          {"derived_abelian", r.derived_abelian},
          {"orthogonality_holds", r.orthogonality_holds},
          {"is_milnor", r.is_milnor},
          {"derived_even_dim", optional_json(r.derived_even_dim)},
          {"witness", optional_json(r.witness)}};
}

MilnorReport milnor_report_from_json(const json& j) {
  MilnorReport r;
  r.s_basis = subspace_from_json(j.at("s"));
  r.derived_basis = subspace_from_json(j.at("derived"));
  r.s_abelian = j.at("s_abelian").get<bool>();
  r.derived_abelian = j.at("derived_abelian").get<bool>();
  r.orthogonality_holds = j.at("orthogonality_holds").get<bool>();
  r.is_milnor = j.at("is_milnor").get<bool>();
  r.derived_even_dim = optional_from<bool>(j.at("derived_even_dim"));
  r.witness = optional_from<std::string>(j.at("witness"));
  return r;
}

json to_json(const HawkinsReport& r) {
  json values = json::array();
  for (const auto& v : r.volume.condition_values) values.push_back(to_json(v));
  return {{"algebra_is_lie", r.algebra_is_lie},
          {"cocycle_holds", r.cocycle_holds},
          {"dual_is_lie", r.dual_is_lie},
          {"flat", r.is_flat},
          {"metaflat", r.is_metaflat},
          {"volume",
           {{"verdict", to_string(r.volume.verdict)},
            {"primal_unimodular", r.volume.primal_unimodular},
            {"dual_unimodular", r.volume.dual_unimodular},
            {"kappa", to_json(r.volume.kappa)},
            {"condition_values", values},
            {"necessary_condition_holds", r.volume.necessary_condition_holds},
            {"witness", optional_json(r.volume.witness)}}},
          {"dual_milnor", to_json(r.dual_milnor)},
          {"kappa", to_json(r.kappa)},
          {"flat_matches_dual_milnor", r.flat_matches_dual_milnor},
          {"linear_poisson", r.linear_poisson},
          {"hawkins_satisfied", r.valid() && r.hawkins_satisfied()},
          {"witnesses", r.witnesses}};
}

HawkinsReport hawkins_report_from_json(const json& j) {
  HawkinsReport r;
  r.algebra_is_lie = j.at("algebra_is_lie").get<bool>();
  r.cocycle_holds = j.at("cocycle_holds").get<bool>();
  r.dual_is_lie = j.at("dual_is_lie").get<bool>();
  r.is_flat = j.at("flat").get<bool>();
  r.is_metaflat = j.at("metaflat").get<bool>();
  const json& v = j.at("volume");
  r.volume.verdict = verdict_from(v.at("verdict").get<std::string>());
  r.volume.primal_unimodular = v.at("primal_unimodular").get<bool>();
  r.volume.dual_unimodular = v.at("dual_unimodular").get<bool>();
  r.volume.kappa = vector_from_json(v.at("kappa"));
  for (const auto& x : v.at("condition_values")) r.volume.condition_values.push_back(kvector_from_json(x));
  r.volume.necessary_condition_holds = v.at("necessary_condition_holds").get<bool>();
  r.volume.witness = optional_from<std::string>(v.at("witness"));
  r.dual_milnor = milnor_report_from_json(j.at("dual_milnor"));
  r.kappa = vector_from_json(j.at("kappa"));
  r.flat_matches_dual_milnor = j.at("flat_matches_dual_milnor").get<bool>();
  r.linear_poisson = j.at("linear_poisson").get<bool>();
  r.witnesses = j.at("witnesses").get<std::vector<std::string>>();
  return r;
}

json to_json(const CocycleSpace& space, const std::vector<QuadraticConstraint>& quadratic) {
  json basis = json::array();
  for (std::size_t m = 0; m < space.dim(); ++m) {
    json entries = json::array();
    for (const auto& e : space.basis_cocycle(m).entries())
      entries.push_back({e.i + 1, e.j + 1, e.k + 1, e.value.str()});
    basis.push_back({{"parameter", space.parameter_labels[m]}, {"cocycle", entries}});
  }
  json quad = json::array();
  for (const auto& q : quadratic) {
    const auto n = q.normalized();
    json rows = json::array();
    for (std::size_t r = 0; r < q.form.rows(); ++r) rows.push_back(to_json(q.form.row(r)));
    quad.push_back({{"label", q.label}, {"polynomial", q.str(space.parameter_labels)},
                    {"normalized", n.str(space.parameter_labels)}, {"form", rows}});
  }
  return {{"algebra_labels", space.algebra.labels()},
          {"flags", space.flags.str()},
          {"ambient_dim", cocycle_coordinate_count(space.algebra.dim())},
          {"dimension", space.dim()},
          {"basis", basis},
          {"quadratic_constraints", quad}};
}

json to_json(const CatalogVerification& v) {
  return {{"name", v.name},
          {"passed", v.passed()},
          {"expected",
           {{"flat", v.expected.flat}, {"metaflat", v.expected.metaflat}, {"volume", to_string(v.expected.volume)}}},
          {"mismatches", v.mismatches},
          {"report", to_json(v.report)}};
}

json to_json(const FamilyReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"params", to_json(row.params)},
                    {"valid", row.valid},
                    {"flat", row.flat},
                    {"metaflat", row.metaflat},
                    {"volume", to_string(row.volume)},
                    {"hawkins", row.hawkins},
                    {"witness", optional_json(row.witness)}});
  json summary = json::array();
  for (const auto& s : r.summary)
    summary.push_back({{"condition", s.condition},
                       {"holds_everywhere", s.holds_everywhere},
                       {"first_failure", optional_json(s.first_failure)},
                       {"witness", optional_json(s.witness)}});
  return {{"family", r.family}, {"parameters", r.parameters}, {"rows", rows}, {"summary", summary}};
}

json to_json(const numeric::VolumeReport& r) {
  json worst = json::array();
  for (const auto& w : r.worst) worst.push_back({{"point", point_json(w.point)}, {"residual", w.value}});
  return {{"model", r.model},
          {"points", r.points},
          {"max_residual", r.max_residual},
          {"worst", worst},
          {"closed_form_deviation", optional_json(r.closed_form_deviation)},
          {"pi_antisymmetric", r.pi_antisymmetric},
          {"fd_step", r.tolerance.fd_step},
          {"abs_tol", r.tolerance.abs_tol},
          {"passed", r.passed}};
}

json to_json(const numeric::MultiplicativityReport& r) {
  json worst = nullptr;
  if (r.worst_pair) worst = {point_json(r.worst_pair->first), point_json(r.worst_pair->second)};
  return {{"model", r.model},          {"pairs", r.pairs},   {"max_deviation", r.max_deviation},
          {"worst_pair", worst},       {"fd_step", r.tolerance.fd_step}, {"abs_tol", r.tolerance.abs_tol},
          {"passed", r.passed}};
}

std::string render_text(const HawkinsReport& r, const LieAlgebra& dual) {
  std::ostringstream os;
  os << "algebra is Lie:        " << yes_no(r.algebra_is_lie) << '\n'
     << "cocycle condition:     " << yes_no(r.cocycle_holds) << '\n'
     << "dual bracket is Lie:   " << yes_no(r.dual_is_lie) << '\n'
     << "flat:                  " << yes_no(r.is_flat) << '\n'
     << "metaflat:              " << yes_no(r.is_metaflat) << '\n'
     << "volume compatibility:  " << to_string(r.volume.verdict) << '\n'
     << "  primal unimodular:   " << yes_no(r.volume.primal_unimodular) << '\n'
     << "  kappa:               " << vector_text(r.kappa) << '\n';
  for (std::size_t i = 0; i < r.volume.condition_values.size(); ++i) {
    const auto& v = r.volume.condition_values[i];
    if (!v.is_zero()) os << "  rho(i_{xi(" << (i + 1) << ")} mu) = " << v.str(dual.labels()) << '\n';
  }
  os << "linear Poisson:        " << yes_no(r.linear_poisson) << '\n'
     << "Hawkins satisfied:     " << yes_no(r.valid() && r.hawkins_satisfied()) << '\n';
  for (const auto& w : r.witnesses) os << "witness: " << w << '\n';
  return os.str();
}

std::string render_text(const MilnorReport& r, const LieAlgebra& alg) {
  std::ostringstream os;
  const auto basis_text = [&](const Subspace& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.basis().size(); ++i)
      out += (i ? ", " : "") + KVector::from_vector(Space::Primal, s.basis()[i]).str(alg.labels());
    return out + "}";
  };
  os << "S:              dim " << r.s_basis.dim() << ' ' << basis_text(r.s_basis) << '\n'
     << "[g,g]:          dim " << r.derived_basis.dim() << ' ' << basis_text(r.derived_basis) << '\n'
     << "S abelian:      " << yes_no(r.s_abelian) << '\n'
     << "[g,g] abelian:  " << yes_no(r.derived_abelian) << '\n'
     << "S^perp = [g,g]: " << yes_no(r.orthogonality_holds) << '\n'
     << "Milnor:         " << yes_no(r.is_milnor) << '\n';
  if (r.derived_even_dim) os << "dim [g,g] even: " << yes_no(*r.derived_even_dim) << '\n';
  if (r.witness) os << "witness: " << *r.witness << '\n';
  return os.str();
}

std::string render_text(const CocycleSpace& space, const std::vector<QuadraticConstraint>& quadratic) {
  std::ostringstream os;
  const auto& l = space.algebra.labels();
  os << "flags: " << space.flags.str() << '\n'
     << "ambient dimension: " << cocycle_coordinate_count(space.algebra.dim()) << '\n'
     << "solution dimension: " << space.dim() << '\n';
  for (std::size_t m = 0; m < space.dim(); ++m) {
    os << "basis " << (m + 1) << " (parameter " << space.parameter_labels[m] << "):\n";
    const Cocycle c = space.basis_cocycle(m);
    for (int i = 0; i < c.dim(); ++i)
      if (!c.value(i).is_zero()) os << "  rho(" << l[static_cast<std::size_t>(i)] << ") = " << c.value(i).str(l) << '\n';
  }
  os << "quadratic constraints: " << quadratic.size() << '\n';
  for (const auto& q : quadratic) os << "  " << q.label << ": " << q.str(space.parameter_labels) << '\n';
  return os.str();
}

std::string render_text(const CatalogVerification& v) {
  std::ostringstream os;
  os << v.name << ": " << (v.passed() ? "PASS" : "FAIL") << '\n'
     << "  flat " << yes_no(v.report.is_flat) << ", metaflat " << yes_no(v.report.is_metaflat) << ", volume "
     << to_string(v.report.volume.verdict) << '\n';
  for (const auto& m : v.mismatches) os << "  mismatch: " << m << '\n';
  for (const auto& w : v.report.witnesses) os << "  witness: " << w << '\n';
  return os.str();
}

std::string render_text(const FamilyReport& r) {
  std::ostringstream os;
  os << "family " << r.family << ", " << r.rows.size() << " grid points\n" << r.table();
  for (const auto& s : r.summary) {
    os << s.condition << ": " << (s.holds_everywhere ? "holds at every point" : "fails");
    if (s.first_failure) {
      os << " (first at row " << (*s.first_failure + 1) << ": " << vector_text(r.rows[*s.first_failure].params);
      if (s.witness) os << "; " << *s.witness;
      os << ')';
    }
    os << '\n';
  }
  return os.str();
}

std::string render_text(const numeric::VolumeReport& r) {
  std::ostringstream os;
  os << r.model << ": d(i_pi mu) " << (r.passed ? "PASS" : "FAIL") << '\n'
     << "  points: " << r.points << ", step " << r.tolerance.fd_step << ", tolerance " << r.tolerance.abs_tol << '\n'
     << "  max residual: " << r.max_residual << '\n';
  if (r.closed_form_deviation) os << "  closed-form deviation: " << *r.closed_form_deviation << '\n';
  if (!r.pi_antisymmetric) os << "  pi is not antisymmetric at some point\n";
  for (const auto& w : r.worst) os << "  worst: " << point_text(w.point) << " -> " << w.value << '\n';
  return os.str();
}

std::string render_text(const numeric::MultiplicativityReport& r) {
  std::ostringstream os;
  os << r.model << ": multiplicativity " << (r.passed ? "PASS" : "FAIL") << '\n'
     << "  pairs: " << r.pairs << ", max deviation: " << r.max_deviation << '\n';
  if (r.worst_pair)
    os << "  worst pair: " << point_text(r.worst_pair->first) << ", " << point_text(r.worst_pair->second) << '\n';
  return os.str();
}

}  // namespace plie::cli
