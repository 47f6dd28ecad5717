#include "plie/classify.hpp"

#include <sstream>

#include "plie/errors.hpp"
#include "plie/hawkins.hpp"

namespace plie {
namespace {

std::size_t pair_count(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }

void append(Vector& out, const Vector& part) { out.insert(out.end(), part.begin(), part.end()); }

// Stacked residual of every enabled constraint family; linear in rho.
Vector residual(const LieAlgebra& alg, const Subspace& s, const ConstraintFlags& flags, const Cocycle& rho) {
  const int n = alg.dim();
  const auto un = static_cast<std::size_t>(n);
  const Bialgebra bi(alg, rho);
  Vector out;

  if (flags.cocycle) {
    for (std::size_t i = 0; i < un; ++i)
      for (std::size_t j = i + 1; j < un; ++j)
        append(out, cocycle_defect(bi, unit_vector(un, i), unit_vector(un, j)).to_dense());
  }
  if (flags.flat) {
    for (const auto& a : s.basis())
      for (const auto& b : s.basis())
        for (const auto& c : s.basis()) append(out, ad_apply(alg, a, ad_apply(alg, b, rho.apply(c))).to_dense());
  }
  if (flags.volume_linear && n >= 2) {
    // The group side has Lie algebra 𝒢* (bracket from rho) and cocycle ξ dual to alg's bracket.
    const LieAlgebra& group_alg = bi.dual_algebra();
    const Cocycle xi = dual_cocycle(bi);
    const KVector mu = KVector::top(n, Space::Dual);
    for (int i = 0; i < n; ++i) append(out, ce_differential(group_alg, interior(xi.value(i), mu)).to_dense());
  }
  if (flags.dual_unimodular) append(out, modular_form(bi));
  return out;
}

std::string coordinate_label(const LieAlgebra& alg, std::size_t coord) {
  const int n = alg.dim();
  const std::size_t pc = pair_count(n);
  const auto pairs = combinations(n, 2);
  const auto& l = alg.labels();
  const auto& p = pairs[coord % pc];
  return "rho(" + l[coord / pc] + ")[" + l[p[0]] + "^" + l[p[1]] + "]";
}

}  // namespace

ConstraintFlags ConstraintFlags::parse(const std::string& csv) {
  ConstraintFlags f{false, false, false, false};
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "cocycle")
      f.cocycle = true;
    else if (tok == "flat")
      f.flat = true;
    else if (tok == "volume" || tok == "volume_linear")
      f.volume_linear = true;
    else if (tok == "unimodular" || tok == "dual_unimodular")
      f.dual_unimodular = true;
    else if (!tok.empty())
      throw Error("unknown constraint flag: " + tok);
  }
  return f;
}

std::string ConstraintFlags::str() const {
  std::vector<std::string> parts;
  if (cocycle) parts.emplace_back("cocycle");
  if (flat) parts.emplace_back("flat");
  if (volume_linear) parts.emplace_back("volume");
  if (dual_unimodular) parts.emplace_back("unimodular");
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
  return s;
}

std::size_t cocycle_coordinate_count(int dim) { return static_cast<std::size_t>(dim) * pair_count(dim); }

Cocycle cocycle_from_coordinates(int dim, const Vector& x) {
  if (x.size() != cocycle_coordinate_count(dim)) throw DimensionError("cocycle coordinates: size mismatch");
  const std::size_t pc = pair_count(dim);
  std::vector<KVector> values;
  for (int i = 0; i < dim; ++i) {
    const Vector part(x.begin() + static_cast<std::ptrdiff_t>(i * pc),
                      x.begin() + static_cast<std::ptrdiff_t>((i + 1) * pc));
    values.push_back(KVector::from_dense(dim, 2, Space::Primal, part));
  }
  return Cocycle(std::move(values));
}

Vector coordinates_of(const Cocycle& c) {
  Vector out;
  for (int i = 0; i < c.dim(); ++i) append(out, c.value(i).to_dense());
  return out;
}

Cocycle CocycleSpace::basis_cocycle(std::size_t m) const {
  return cocycle_from_coordinates(algebra.dim(), basis.at(m));
}

Cocycle CocycleSpace::cocycle_at(const Vector& params) const {
  if (params.size() != basis.size()) throw DimensionError("cocycle_at: parameter count mismatch");
  Vector x = zero_vector(cocycle_coordinate_count(algebra.dim()));
  for (std::size_t m = 0; m < basis.size(); ++m) x = add(x, scale(params[m], basis[m]));
  return cocycle_from_coordinates(algebra.dim(), x);
}

CocycleSpace cocycle_space(const LieAlgebra& alg, const Metric& metric, const ConstraintFlags& flags) {
  const MilnorReport milnor = milnor_check(alg, metric);
  if (!milnor.is_milnor)
    throw PreconditionError("cocycle_space: input is not a Milnor Lie algebra (" +
                            milnor.witness.value_or("?") + ")");
  const int n = alg.dim();
  const std::size_t count = cocycle_coordinate_count(n);

  std::vector<Vector> columns;
  for (std::size_t k = 0; k < count; ++k)
    columns.push_back(residual(alg, milnor.s_basis, flags, cocycle_from_coordinates(n, unit_vector(count, k))));

  CocycleSpace space;
  space.algebra = alg;
  space.metric = metric;
  space.flags = flags;
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  if (rows == 0) {
    for (std::size_t k = 0; k < count; ++k) space.basis.push_back(unit_vector(count, k));
  } else {
    space.basis = kernel(Matrix::from_columns(columns, rows));
  }
  for (const auto& b : space.basis) {
    std::size_t pivot = 0;
    while (b[pivot].is_zero()) ++pivot;
    space.parameter_labels.push_back(coordinate_label(alg, pivot));
  }
  return space;
}

Rational QuadraticConstraint::evaluate(const Vector& params) const { return dot(params, form * params); }

Rational QuadraticConstraint::monomial(std::size_t a, std::size_t b) const {
  if (a == b) return form(a, a);
  return Rational(2) * form(a, b);
}

QuadraticConstraint QuadraticConstraint::normalized() const {
  const std::size_t k = form.rows();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      const Rational lead = monomial(a, b);
      if (!lead.is_zero()) return {label, (Rational(1) / lead) * form};
    }
  return *this;
}

std::string QuadraticConstraint::str(const std::vector<std::string>& names) const {
  const std::size_t k = form.rows();
  std::ostringstream os;
  bool first = true;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      const Rational c = monomial(a, b);
      if (c.is_zero()) continue;
      if (!first) os << (c.sign() < 0 ? " - " : " + ");
      else if (c.sign() < 0) os << "-";
      os << abs(c) << "*" << names.at(a) << "*" << names.at(b);
      first = false;
    }
  return first ? "0" : os.str();
}

std::vector<QuadraticConstraint> quadratic_constraints(const CocycleSpace& space) {
  const int n = space.algebra.dim();
  const std::size_t k = space.dim();
  const auto triples = combinations(n, 3);

  // All Jacobi defect components of the dual bracket, concatenated.
  const auto defects = [&](const Cocycle& rho) {
    const Bialgebra bi(space.algebra, rho);
    Vector out;
    for (const auto& t : triples) append(out, jacobi_defect(bi.dual_algebra(), t[0], t[1], t[2]));
    return out;
  };

  std::vector<Vector> diag;
  for (std::size_t m = 0; m < k; ++m) diag.push_back(defects(space.basis_cocycle(m)));

  const std::size_t components = triples.size() * static_cast<std::size_t>(n);
  std::vector<Matrix> forms(components, Matrix(k, k));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t c = 0; c < components; ++c) forms[c](a, a) = diag[a][c];
    for (std::size_t b = a + 1; b < k; ++b) {
      const Vector x = add(space.basis[a], space.basis[b]);
      const Vector both = defects(cocycle_from_coordinates(n, x));
      for (std::size_t c = 0; c < components; ++c) {
        const Rational cross = (both[c] - diag[a][c] - diag[b][c]) / Rational(2);
        forms[c](a, b) = cross;
        forms[c](b, a) = cross;
      }
    }
  }

  const auto dual_labels = Bialgebra(space.algebra, Cocycle::zero(n)).dual_algebra().labels();
  std::vector<QuadraticConstraint> out;
  for (std::size_t c = 0; c < components; ++c) {
    if (forms[c].is_zero()) continue;
    const auto& t = triples[c / static_cast<std::size_t>(n)];
    const auto comp = static_cast<int>(c % static_cast<std::size_t>(n));
    out.push_back({"J(" + dual_labels[t[0]] + "," + dual_labels[t[1]] + "," + dual_labels[t[2]] + ")[" +
                       dual_labels[comp] + "]",
                   forms[c]});
  }
  return out;
}

}  // namespace plie
