#include "plie/catalog.hpp"

#include <iomanip>
#include <sstream>

#include "plie/errors.hpp"

namespace plie {
namespace {

using SC = StructureConstant;
using CE = CocycleEntry;

const std::vector<std::string> kStar3{"e1*", "e2*", "e3*"};
const std::vector<std::string> kStar4{"e1*", "e2*", "f1*", "f2*"};
const std::vector<std::string> kNormal4{"e0", "e1", "e2", "e3"};

Metric identity(int n) { return Metric::identity(n); }

Triple dim2_nonzero() {
  return Triple(LieAlgebra::abelian(2), Cocycle::from_entries(2, {{0, 0, 1, 1}}), identity(2));
}

Triple dim3_abelian(const Rational& lambda) {
  return Triple(LieAlgebra::abelian(3),
                Cocycle::from_entries(3, {{1, 0, 2, -lambda}, {2, 0, 1, lambda}}), identity(3));
}

// ℋ3 with [e1,e2] = e3 and ξ0(e1) = λ e2∧e3, ξ0(e2) = −λ e1∧e3.
Triple dim3_heisenberg(const Rational& lambda, const Rational& a) {
  return Triple(LieAlgebra::checked(3, {{0, 1, 2, 1}}),
                Cocycle::from_entries(3, {{0, 1, 2, lambda}, {1, 0, 2, -lambda}}),
                Metric(Matrix::diagonal({1, 1, a})));
}

Matrix gram(std::initializer_list<std::initializer_list<Rational>> rows) { return Matrix(rows); }

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;
  const Expectation ok{};
  const auto violated = [](bool flat, bool metaflat) { return Expectation{flat, metaflat, VolumeVerdict::Violated}; };

  c.push_back({"dim2-trivial", "abelian R^2 with zero cocycle", Triple(LieAlgebra::abelian(2), Cocycle::zero(2), identity(2)),
               ok, std::nullopt});
  c.push_back({"dim2-nonzero", "abelian R^2 with xi(e1) = e1^e2 (dual is non-unimodular)", dim2_nonzero(),
               violated(false, false), std::nullopt});
  c.push_back({"dim3-abelian", "abelian R^3, xi0 with lambda = 1, Euclidean metric", dim3_abelian(1), ok, std::nullopt});
  c.push_back({"dim3-heisenberg", "Heisenberg algebra, xi0 with lambda = 1, metric diag(1,1,a) with a = 2",
               dim3_heisenberg(1, 2), ok, std::nullopt});
  c.push_back({"dim3-rho3-a1", "3-dim family with a = 1, c = 0, lambda = 1", dim3_family(1, 0, 1),
               violated(true, true), std::nullopt});
  c.push_back({"dim3-rho3f-c1", "3-dim family with a = 0, c = 1, lambda = 1", dim3_family(0, 1, 1), ok, std::nullopt});
  c.push_back({"dim4-rho4-d1", "4-dim family with d = 1, other parameters 0", dim4_family(0, 0, 1, 0, 0),
               violated(true, true), std::nullopt});

  const Matrix id4 = Matrix::identity(4);
  c.push_back({"dim4-unimodular-a", "abelian R^4 (b = c = beta1 = beta2 = 0)", normal_form_dim4(0, 0, 0, 0, id4), ok,
               std::nullopt});
  c.push_back({"dim4-unimodular-b", "b = 0, c = 0, beta1 = 1, beta2 = 2", normal_form_dim4(0, 0, 1, 2, id4), ok,
               std::nullopt});
  c.push_back({"dim4-unimodular-c", "b = 0, c = 0, beta1 = 0, beta2 = 1", normal_form_dim4(0, 0, 0, 1, id4), ok,
               std::nullopt});
  c.push_back({"dim4-unimodular-d", "b = 0, c = 1, beta = 0, metric diag(1,a,1,1) with a = 2",
               normal_form_dim4(0, 1, 0, 0, Matrix::diagonal({1, 2, 1, 1})), ok,
               "identity value of dx^2 + a dy^2 + dz^2 + dt^2 with e1 along the rotation coordinate"});
  c.push_back({"dim4-unimodular-e", "oscillator type: b = 0, c = 1, beta1 = 1, beta2 = 0",
               normal_form_dim4(0, 1, 1, 0, Matrix::diagonal({3, 2, 1, 1})), ok,
               "metric is a sample positive diagonal Gram; the group-level metric degenerates at the identity "
               "as printed"});
  c.push_back({"dim4-unimodular-f", "b = 0, c = 1, beta1 = 0, beta2 = 1",
               normal_form_dim4(0, 1, 0, 1, gram({{2, 1, 0, 0}, {1, 3, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}})), ok,
               "stated block form symmetrized, sample values a = 2, b = 1, c = 3, d = 2"});
  c.push_back({"dim4-nonunimodular", "b = 1, c = 1, beta = 0; volume settled numerically",
               normal_form_dim4(1, 1, 0, 0, id4), Expectation{true, true, VolumeVerdict::NecessaryOnlyPassed},
               std::nullopt});

  c.push_back({"linear-q2-r1", "linear Poisson structure, Milnor dual with u1 = (1,2)", linear_case({{1, 2}}), ok,
               std::nullopt});
  c.push_back({"linear-q1-r2", "linear Poisson structure, Milnor dual with u1 = (1), u2 = (3)",
               linear_case({{1}, {3}}), ok, std::nullopt});
  return c;
}

std::vector<Family> build_families() {
  std::vector<Family> f;
  f.push_back({"dim3-rho3", "3-dim family: cocycle and flat constraints only", {"a", "c", "lambda"},
               [](const Vector& p) { return dim3_family(p[0], p[1], p[2]); }});
  f.push_back({"dim3-rho3f", "3-dim family with every linear constraint (a = 0)", {"c", "lambda"},
               [](const Vector& p) { return dim3_family(0, p[0], p[1]); }});
  f.push_back({"dim4-rho4", "4-dim family: cocycle and flat constraints only", {"b", "c", "d", "beta1", "beta2"},
               [](const Vector& p) { return dim4_family(p[0], p[1], p[2], p[3], p[4]); }});
  f.push_back({"dim4-normal", "4-dim normal form with Euclidean metric", {"b", "c", "beta1", "beta2"},
               [](const Vector& p) { return normal_form_dim4(p[0], p[1], p[2], p[3], Matrix::identity(4)); }});
  return f;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

LieAlgebra milnor_dim3(const Rational& lambda) {
  return LieAlgebra::raw(3, {{0, 1, 2, lambda}, {0, 2, 1, -lambda}});
}

LieAlgebra milnor_dim4() {
  return LieAlgebra::raw(4, {{1, 2, 3, 1}, {1, 3, 2, -1}}, {"e1", "e2", "f1", "f2"});
}

LieAlgebra milnor_from_vectors(const std::vector<Vector>& u) {
  if (u.empty()) throw PreconditionError("milnor_from_vectors: need at least one vector");
  const int q = static_cast<int>(u.front().size());
  const int r = static_cast<int>(u.size());
  std::vector<std::string> labels;
  for (int a = 0; a < q; ++a) labels.push_back("s" + std::to_string(a + 1));
  for (int j = 0; j < 2 * r; ++j) labels.push_back("f" + std::to_string(j + 1));
  std::vector<SC> sc;
  for (int j = 0; j < r; ++j) {
    const auto& uj = u[static_cast<std::size_t>(j)];
    if (static_cast<int>(uj.size()) != q) throw DimensionError("milnor_from_vectors: vectors differ in length");
    if (is_zero(uj)) throw PreconditionError("milnor_from_vectors: vectors must be nonzero");
    const int f1 = q + 2 * j;
    const int f2 = f1 + 1;
    for (int a = 0; a < q; ++a) {
      const Rational& w = uj[static_cast<std::size_t>(a)];
      if (w.is_zero()) continue;
      sc.push_back({a, f1, f2, w});
      sc.push_back({a, f2, f1, -w});
    }
  }
  return LieAlgebra::raw(q + 2 * r, sc, labels);
}

Triple dim3_family(const Rational& a, const Rational& c, const Rational& lambda) {
  auto alg = LieAlgebra::raw(3, {{0, 1, 1, a}, {0, 2, 2, a}, {1, 2, 0, c}}, kStar3);
  auto xi = Cocycle::from_entries(3, {{1, 0, 2, -lambda}, {2, 0, 1, lambda}});
  return Triple(std::move(alg), std::move(xi), identity(3));
}

Triple dim4_family(const Rational& b, const Rational& c, const Rational& d, const Rational& beta1,
                   const Rational& beta2) {
  // basis order (e1*, e2*, f1*, f2*)
  auto alg = LieAlgebra::raw(4,
                             {{0, 2, 2, b},
                              {0, 2, 3, -c},
                              {0, 3, 2, c},
                              {0, 3, 3, b},
                              {1, 2, 2, d},
                              {1, 3, 3, d},
                              {2, 3, 0, beta1},
                              {2, 3, 1, beta2}},
                             kStar4);
  auto xi = Cocycle::from_entries(4, {{2, 1, 3, -1}, {3, 1, 2, 1}});
  return Triple(std::move(alg), std::move(xi), identity(4));
}

Triple normal_form_dim4(const Rational& b, const Rational& c, const Rational& beta1, const Rational& beta2,
                        const Matrix& g) {
  auto alg = LieAlgebra::raw(
      4, {{1, 2, 2, b}, {1, 2, 3, -c}, {1, 3, 2, c}, {1, 3, 3, b}, {2, 3, 0, beta1}, {2, 3, 1, beta2}}, kNormal4);
  auto xi = Cocycle::from_entries(4, {{2, 0, 3, 1}, {3, 0, 2, -1}});
  return Triple(std::move(alg), std::move(xi), Metric(g));
}

Triple linear_case(const std::vector<Vector>& u) {
  const LieAlgebra m = milnor_from_vectors(u);
  const Bialgebra side(m, Cocycle::zero(m.dim()));
  return Triple(side.dual_algebra(), dual_cocycle(side), identity(m.dim()));
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& find_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw UnknownNameError("catalog entry " + name);
}

CatalogVerification verify_against(const CatalogEntry& entry) {
  CatalogVerification v{entry.name, full_report(entry.triple), entry.expected, {}};
  const auto& r = v.report;
  if (!r.valid()) v.mismatches.emplace_back("input is not a valid Lie bialgebra");
  if (r.is_flat != entry.expected.flat)
    v.mismatches.push_back("flat: expected " + yes_no(entry.expected.flat) + ", got " + yes_no(r.is_flat));
  if (r.is_metaflat != entry.expected.metaflat)
    v.mismatches.push_back("metaflat: expected " + yes_no(entry.expected.metaflat) + ", got " +
                           yes_no(r.is_metaflat));
  if (r.volume.verdict != entry.expected.volume)
    v.mismatches.push_back("volume: expected " + to_string(entry.expected.volume) + ", got " +
                           to_string(r.volume.verdict));
  if (!r.flat_matches_dual_milnor) v.mismatches.emplace_back("flatness disagrees with dual Milnor check");
  return v;
}

CatalogVerification catalog_verify(const std::string& name) { return verify_against(find_entry(name)); }

const std::vector<Family>& families() {
  static const std::vector<Family> all = build_families();
  return all;
}

const Family& find_family(const std::string& name) {
  for (const auto& f : families())
    if (f.name == name) return f;
  throw UnknownNameError("family " + name);
}

std::vector<Vector> default_grid(std::size_t parameter_count) {
  const std::vector<Rational> wide{1, -1, 2, -2, Rational(1, 2), Rational(-1, 2)};
  const std::vector<Rational> narrow{0, 1, Rational(-1, 2)};
  const auto& values = parameter_count <= 3 ? wide : narrow;

  std::vector<Vector> grid{zero_vector(parameter_count)};
  std::vector<std::size_t> idx(parameter_count, 0);
  if (parameter_count == 0) return grid;
  while (true) {
    Vector p;
    for (auto i : idx) p.push_back(values[i]);
    if (!is_zero(p)) grid.push_back(p);
    std::size_t pos = parameter_count;
    while (pos > 0 && ++idx[pos - 1] == values.size()) idx[--pos] = 0;
    if (pos == 0) break;
  }
  return grid;
}

FamilyReport verify_family(const Family& family, const std::vector<Vector>& grid) {
  FamilyReport out{family.name, family.parameters, {}, {}};
  for (const auto& p : grid) {
    if (p.size() != family.parameters.size())
      throw DimensionError("verify_family: point has " + std::to_string(p.size()) + " parameters, family " +
                           family.name + " expects " + std::to_string(family.parameters.size()));
    const HawkinsReport r = full_report(family.build(p));
    FamilyRow row{p, r.valid(), r.is_flat, r.is_metaflat, r.volume.verdict, r.valid() && r.hawkins_satisfied(),
                  std::nullopt};
    if (!r.witnesses.empty()) row.witness = r.witnesses.front();
    out.rows.push_back(std::move(row));
  }

  const auto summarize = [&](const std::string& name, auto holds) {
    ConditionSummary s{name, true, std::nullopt, std::nullopt};
    for (std::size_t i = 0; i < out.rows.size(); ++i) {
      if (holds(out.rows[i])) continue;
      s.holds_everywhere = false;
      s.first_failure = i;
      s.witness = out.rows[i].witness;
      break;
    }
    out.summary.push_back(std::move(s));
  };
  summarize("valid", [](const FamilyRow& r) { return r.valid; });
  summarize("flat", [](const FamilyRow& r) { return r.flat; });
  summarize("metaflat", [](const FamilyRow& r) { return r.metaflat; });
  summarize("volume", [](const FamilyRow& r) { return r.volume == VolumeVerdict::Satisfied; });
  summarize("hawkins", [](const FamilyRow& r) { return r.hawkins; });
  return out;
}

std::string FamilyReport::table() const {
  std::ostringstream os;
  for (const auto& p : parameters) os << std::setw(8) << p << ' ';
  os << std::setw(6) << "valid" << std::setw(6) << "flat" << std::setw(10) << "metaflat" << "  " << std::setw(22)
     << std::left << "volume" << std::right << std::setw(8) << "hawkins" << '\n';
  for (const auto& r : rows) {
    for (const auto& v : r.params) os << std::setw(8) << v.str() << ' ';
    os << std::setw(6) << yes_no(r.valid) << std::setw(6) << yes_no(r.flat) << std::setw(10) << yes_no(r.metaflat)
       << "  " << std::setw(22) << std::left << to_string(r.volume) << std::right << std::setw(8)
       << yes_no(r.hawkins) << '\n';
  }
  return os.str();
}

}  // namespace plie
