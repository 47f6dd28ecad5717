#include "plie/lie.hpp"

#include <sstream>

#include "plie/errors.hpp"

namespace plie {
namespace {

void check_vector(const LieAlgebra& alg, const Vector& v) {
  if (static_cast<int>(v.size()) != alg.dim()) throw DimensionError("vector length != algebra dimension");
}

Vector flatten(const Matrix& m) {
  Vector out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m(r, c));
  return out;
}

bool brackets_vanish(const LieAlgebra& alg, const Subspace& s, std::string* witness) {
  const auto& b = s.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      const Vector br = bracket_of(alg, b[i], b[j]);
      if (!is_zero(br)) {
        if (witness)
          *witness = "[" + to_string(b[i]) + ", " + to_string(b[j]) + "] = " + to_string(br);
        return false;
      }
    }
  return true;
}

}  // namespace

Metric::Metric(Matrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_square()) throw DimensionError("metric: Gram matrix is not square");
  if (!gram_.is_symmetric()) throw PreconditionError("metric: Gram matrix is not symmetric");
  if (!is_positive_definite(gram_)) throw PreconditionError("metric: Gram matrix is not positive-definite");
  inverse_ = inverse(gram_);
}

Rational Metric::inner(const Vector& u, const Vector& v) const { return dot(u, gram_ * v); }

Metric Metric::dual() const { return Metric(inverse_); }

Metric Metric::scaled(const Rational& s) const { return Metric(s * gram_); }

Vector bracket_of(const LieAlgebra& alg, const Vector& u, const Vector& v) {
  check_vector(alg, u);
  check_vector(alg, v);
  const int n = alg.dim();
  Vector out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (v[j].is_zero() || i == j) continue;
      const Rational w = u[i] * v[j];
      for (int k = 0; k < n; ++k) {
        const Rational& c = alg.constant(i, j, k);
        if (!c.is_zero()) out[k] += w * c;
      }
    }
  }
  return out;
}

Vector jacobi_defect(const LieAlgebra& alg, int i, int j, int k) {
  const int n = alg.dim();
  if (i < 0 || j < 0 || k < 0 || i >= n || j >= n || k >= n)
    throw DimensionError("jacobi_defect: index out of range");
  const auto e = [n](int m) { return unit_vector(static_cast<std::size_t>(n), static_cast<std::size_t>(m)); };
  Vector d = bracket_of(alg, alg.basis_bracket(i, j), e(k));
  d = add(d, bracket_of(alg, alg.basis_bracket(j, k), e(i)));
  d = add(d, bracket_of(alg, alg.basis_bracket(k, i), e(j)));
  return d;
}

std::string JacobiCheck::describe(const LieAlgebra& alg) const {
  if (holds || !witness) return "Jacobi holds";
  const auto& l = alg.labels();
  const auto [i, j, k] = *witness;
  return "J(" + l[i] + "," + l[j] + "," + l[k] + ") = " +
         KVector::from_vector(Space::Primal, defect).str(l);
}

JacobiCheck is_lie_algebra(const LieAlgebra& alg) {
  JacobiCheck out;
  const int n = alg.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vector d = jacobi_defect(alg, i, j, k);
        if (!is_zero(d)) {
          out.holds = false;
          out.witness = std::array<int, 3>{i, j, k};
          out.defect = std::move(d);
          return out;
        }
      }
  return out;
}

Matrix ad_operator(const LieAlgebra& alg, const Vector& u) {
  check_vector(alg, u);
  const auto n = static_cast<std::size_t>(alg.dim());
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(bracket_of(alg, u, unit_vector(n, j)));
  return Matrix::from_columns(cols, n);
}

KVector ad_apply(const LieAlgebra& alg, const Vector& u, const KVector& x) {
  check_vector(alg, u);
  if (x.dim() != alg.dim()) throw DimensionError("ad_apply: dim mismatch");
  const int n = alg.dim();
  KVector out(n, x.degree(), x.space());
  for (const auto& [idx, c] : x.terms()) {
    for (std::size_t p = 0; p < idx.size(); ++p) {
      for (int m = 0; m < n; ++m) {
        Rational w;
        for (int i = 0; i < n; ++i)
          if (!u[i].is_zero()) w += u[i] * alg.constant(i, idx[p], m);
        if (w.is_zero()) continue;
        MultiIndex replaced = idx;
        replaced[p] = m;
        out.add_term(std::move(replaced), c * w);
      }
    }
  }
  return out;
}

Matrix ad_operator_wedge2(const LieAlgebra& alg, const Vector& u) {
  const int n = alg.dim();
  const auto basis = combinations(n, 2);
  std::vector<Vector> cols;
  for (const auto& J : basis) cols.push_back(ad_apply(alg, u, KVector::basis(n, Space::Primal, J)).to_dense());
  return Matrix::from_columns(cols, basis.size());
}

Matrix metric_adjoint(const Metric& metric, const Matrix& op) {
  if (op.rows() != metric.gram().rows() || !op.is_square()) throw DimensionError("metric_adjoint: shape mismatch");
  return metric.inverse_gram() * op.transpose() * metric.gram();
}

Subspace compute_S(const LieAlgebra& alg, const Metric& metric) {
  const auto n = static_cast<std::size_t>(alg.dim());
  if (static_cast<std::size_t>(metric.dim()) != n) throw DimensionError("compute_S: metric dim mismatch");
  std::vector<Vector> cols;
  for (std::size_t m = 0; m < n; ++m) {
    const Matrix ad = ad_operator(alg, unit_vector(n, m));
    cols.push_back(flatten(ad + metric_adjoint(metric, ad)));
  }
  return Subspace::span(n, kernel(Matrix::from_columns(cols, n * n)));
}

Subspace derived_ideal(const LieAlgebra& alg) {
  const int n = alg.dim();
  std::vector<Vector> gens;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) gens.push_back(alg.basis_bracket(i, j));
  return Subspace::span(static_cast<std::size_t>(n), gens);
}

Subspace center(const LieAlgebra& alg) {
  const auto n = static_cast<std::size_t>(alg.dim());
  std::vector<Vector> cols;
  for (std::size_t m = 0; m < n; ++m) cols.push_back(flatten(ad_operator(alg, unit_vector(n, m))));
  return Subspace::span(n, kernel(Matrix::from_columns(cols, n * n)));
}

Vector ad_traces(const LieAlgebra& alg) {
  const auto n = static_cast<std::size_t>(alg.dim());
  Vector t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      t[i] += alg.constant(static_cast<int>(i), static_cast<int>(j), static_cast<int>(j));
  return t;
}

bool is_unimodular(const LieAlgebra& alg) { return is_zero(ad_traces(alg)); }

MilnorReport milnor_check(const LieAlgebra& alg, const Metric& metric) {
  MilnorReport r;
  r.s_basis = compute_S(alg, metric);
  r.derived_basis = derived_ideal(alg);

  std::string w;
  r.s_abelian = brackets_vanish(alg, r.s_basis, &w);
  if (!r.s_abelian) r.witness = "S not abelian: " + w;

  std::string wd;
  r.derived_abelian = brackets_vanish(alg, r.derived_basis, &wd);
  if (!r.derived_abelian && !r.witness) r.witness = "derived ideal not abelian: " + wd;

  r.orthogonality_holds = r.s_basis.orthogonal_complement(metric.gram()) == r.derived_basis;
  if (!r.orthogonality_holds && !r.witness) {
    std::ostringstream os;
    os << "S^perp != [g,g]: dim S = " << r.s_basis.dim() << ", dim [g,g] = " << r.derived_basis.dim();
    r.witness = os.str();
  }

  r.is_milnor = r.s_abelian && r.derived_abelian && r.orthogonality_holds;
  if (r.is_milnor && r.s_basis.dim() >= 1) r.derived_even_dim = r.derived_basis.dim() % 2 == 0;
  return r;
}

Vector levi_civita_product(const LieAlgebra& alg, const Metric& metric, const Vector& u, const Vector& v) {
  check_vector(alg, u);
  check_vector(alg, v);
  const auto n = static_cast<std::size_t>(alg.dim());
  const Vector uv = bracket_of(alg, u, v);
  Vector rhs(n);
  for (std::size_t m = 0; m < n; ++m) {
    const Vector w = unit_vector(n, m);
    rhs[m] = metric.inner(uv, w) + metric.inner(bracket_of(alg, w, u), v) + metric.inner(bracket_of(alg, w, v), u);
  }
  return scale(Rational(1, 2), metric.inverse_gram() * rhs);
}

Matrix levi_civita_operator(const LieAlgebra& alg, const Metric& metric, const Vector& u) {
  const auto n = static_cast<std::size_t>(alg.dim());
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(levi_civita_product(alg, metric, u, unit_vector(n, j)));
  return Matrix::from_columns(cols, n);
}

Matrix covariant_curvature(const LieAlgebra& alg, const Metric& metric, const Vector& u, const Vector& v) {
  const Matrix au = levi_civita_operator(alg, metric, u);
  const Matrix av = levi_civita_operator(alg, metric, v);
  return levi_civita_operator(alg, metric, bracket_of(alg, u, v)) - au * av + av * au;
}

FlatnessCheck is_flat_metric(const LieAlgebra& alg, const Metric& metric) {
  const auto n = static_cast<std::size_t>(alg.dim());
  std::vector<Matrix> ops;
  for (std::size_t i = 0; i < n; ++i) ops.push_back(levi_civita_operator(alg, metric, unit_vector(n, i)));
  FlatnessCheck out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Matrix k = levi_civita_operator(alg, metric, alg.basis_bracket(static_cast<int>(i), static_cast<int>(j))) -
                       ops[i] * ops[j] + ops[j] * ops[i];
      if (!k.is_zero()) {
        out.flat = false;
        out.witness = std::make_pair(static_cast<int>(i), static_cast<int>(j));
        return out;
      }
    }
  return out;
}

}  // namespace plie
