#include "plie/hawkins.hpp"

#include <sstream>

#include "plie/errors.hpp"

namespace plie {
namespace {

std::string label_or_index(const std::vector<std::string>& labels, int i) {
  return i < static_cast<int>(labels.size()) ? labels[i] : "e" + std::to_string(i + 1);
}

KVector metacurvature_on_s(const Triple& triple, const Subspace& s, const Matrix& dual_gram, const Vector& alpha,
                           const Vector& beta, const Vector& gamma) {
  const LieAlgebra& dual = triple.dual_algebra();
  const Cocycle rho = dual_cocycle(triple.bialgebra);
  const Vector a = s.project(alpha, dual_gram);
  const Vector b = s.project(beta, dual_gram);
  const Vector c = s.project(gamma, dual_gram);
  return ad_apply(dual, a, ad_apply(dual, b, rho.apply(c)));
}

}  // namespace

ConnectionTable::ConnectionTable(int dim) : dim_(dim), gamma_(static_cast<std::size_t>(dim) * dim * dim) {}

Vector ConnectionTable::apply(int i, int j) const {
  Vector v(static_cast<std::size_t>(dim_));
  for (int k = 0; k < dim_; ++k) v[k] = at(i, j, k);
  return v;
}

Matrix ConnectionTable::operator_for(const Vector& alpha) const {
  if (static_cast<int>(alpha.size()) != dim_) throw DimensionError("ConnectionTable: dim mismatch");
  const auto n = static_cast<std::size_t>(dim_);
  Matrix m(n, n);
  for (int i = 0; i < dim_; ++i) {
    if (alpha[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) m(k, j) += alpha[i] * at(i, j, k);
  }
  return m;
}

bool ConnectionTable::is_zero() const {
  for (const auto& g : gamma_) {
    if (!g.is_zero()) return false;
  }
  return true;
}

ConnectionTable contravariant_connection(const Triple& triple) {
  const LieAlgebra& dual = triple.dual_algebra();
  const Metric dm = triple.dual_metric();
  const int n = dual.dim();
  const auto un = static_cast<std::size_t>(n);
  const auto e = [un](int m) { return unit_vector(un, static_cast<std::size_t>(m)); };

  ConnectionTable table(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Vector rhs(un);
      for (int k = 0; k < n; ++k) {
        rhs[k] = dm.inner(dual.basis_bracket(k, i), e(j)) + dm.inner(dual.basis_bracket(k, j), e(i)) +
                 dm.inner(dual.basis_bracket(i, j), e(k));
      }
      const Vector g = scale(Rational(1, 2), dm.inverse_gram() * rhs);
      for (int k = 0; k < n; ++k) table.at(i, j, k) = g[k];
    }
  }
  return table;
}

bool is_torsion_free(const ConnectionTable& table, const LieAlgebra& dual_algebra) {
  const int n = table.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (table.at(i, j, k) - table.at(j, i, k) != dual_algebra.constant(i, j, k)) return false;
  return true;
}

bool is_metric_parallel(const ConnectionTable& table, const Metric& dual_metric) {
  const int n = table.dim();
  const auto un = static_cast<std::size_t>(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = j; k < n; ++k) {
        const Rational s = dual_metric.inner(table.apply(i, j), unit_vector(un, static_cast<std::size_t>(k))) +
                           dual_metric.inner(unit_vector(un, static_cast<std::size_t>(j)), table.apply(i, k));
        if (!s.is_zero()) return false;
      }
  return true;
}

std::vector<Matrix> contravariant_curvature(const ConnectionTable& table, const Bialgebra& bi) {
  const LieAlgebra& dual = bi.dual_algebra();
  const int n = table.dim();
  const auto un = static_cast<std::size_t>(n);
  std::vector<Matrix> ops;
  for (int i = 0; i < n; ++i) ops.push_back(table.operator_for(unit_vector(un, static_cast<std::size_t>(i))));
  std::vector<Matrix> out;
  for (const auto& ij : combinations(n, 2)) {
    const int i = ij[0];
    const int j = ij[1];
    out.push_back(ops[i] * ops[j] - ops[j] * ops[i] - table.operator_for(dual.basis_bracket(i, j)));
  }
  return out;
}

ContravariantFlatness is_flat(const Triple& triple) {
  const ConnectionTable table = contravariant_connection(triple);
  const auto curv = contravariant_curvature(table, triple.bialgebra);
  const auto pairs = combinations(triple.algebra().dim(), 2);
  ContravariantFlatness out;
  for (std::size_t p = 0; p < curv.size(); ++p) {
    if (!curv[p].is_zero()) {
      out.flat = false;
      out.witness = std::make_pair(pairs[p][0], pairs[p][1]);
      break;
    }
  }
  return out;
}

KVector metacurvature(const Triple& triple, const Vector& alpha, const Vector& beta, const Vector& gamma) {
  if (!is_flat(triple).flat) throw NotFlatError();
  const Metric dm = triple.dual_metric();
  const Subspace s = compute_S(triple.dual_algebra(), dm);
  return metacurvature_on_s(triple, s, dm.gram(), alpha, beta, gamma);
}

MetaflatCheck is_metaflat(const Triple& triple) {
  if (!is_flat(triple).flat) throw NotFlatError();
  const Metric dm = triple.dual_metric();
  MetaflatCheck out;
  out.s_dual = compute_S(triple.dual_algebra(), dm);
  const auto& b = out.s_dual.basis();
  const int k = static_cast<int>(b.size());
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      for (int z = 0; z < k; ++z) {
        const KVector m = metacurvature_on_s(triple, out.s_dual, dm.gram(), b[x], b[y], b[z]);
        if (y > x) {
          const KVector swapped = metacurvature_on_s(triple, out.s_dual, dm.gram(), b[y], b[x], b[z]);
          if (swapped != m) out.symmetric = false;
        }
        if (!m.is_zero() && out.metaflat) {
          out.metaflat = false;
          out.witness = std::array<int, 3>{x, y, z};
          out.witness_value = m;
        }
      }
  return out;
}

std::string to_string(VolumeVerdict v) {
  switch (v) {
    case VolumeVerdict::Satisfied:
      return "satisfied";
    case VolumeVerdict::Violated:
      return "violated";
    case VolumeVerdict::NecessaryOnlyPassed:
      return "necessary-only-passed";
  }
  return "unknown";
}

VolumeCheck volume_compatibility(const Triple& triple) {
  const LieAlgebra& alg = triple.algebra();
  const int n = alg.dim();
  VolumeCheck out;
  out.primal_unimodular = is_unimodular(alg);
  out.kappa = modular_form(triple.bialgebra);
  out.dual_unimodular = is_zero(out.kappa);

  const std::vector<std::string> form_labels = triple.dual_algebra().labels();
  if (n >= 2) {
    const KVector mu = KVector::top(n, Space::Dual);
    for (int i = 0; i < n; ++i) {
      const KVector contracted = interior(triple.cocycle().value(i), mu);
      KVector value = -ce_differential(alg, contracted);
      if (!value.is_zero() && out.necessary_condition_holds) {
        out.necessary_condition_holds = false;
        out.witness = "volume: rho(i_{xi(" + label_or_index(alg.labels(), i) + ")} mu) != 0 (= " +
                      value.str(form_labels) + ")";
      }
      out.condition_values.push_back(std::move(value));
    }
  }

  if (!out.necessary_condition_holds) {
    out.verdict = VolumeVerdict::Violated;
  } else if (triple.cocycle().is_zero()) {
    // ξ = 0 integrates to π ≡ 0, for which i_π μ = 0 in any regime.
    out.verdict = VolumeVerdict::Satisfied;
  } else if (out.primal_unimodular) {
    out.verdict = out.dual_unimodular ? VolumeVerdict::Satisfied : VolumeVerdict::Violated;
    if (!out.dual_unimodular)
      out.witness = "volume: dual algebra not unimodular, kappa = " + to_string(out.kappa);
  } else {
    out.verdict = VolumeVerdict::NecessaryOnlyPassed;
  }
  return out;
}

HawkinsReport full_report(const Triple& triple) {
  HawkinsReport r;
  const JacobiCheck jac = is_lie_algebra(triple.algebra());
  r.algebra_is_lie = jac.holds;
  if (!jac.holds) r.witnesses.push_back("algebra: " + jac.describe(triple.algebra()));

  const CocycleCheck coc = is_cocycle(triple.bialgebra);
  r.cocycle_holds = coc.holds;
  if (!coc.holds) {
    const auto& l = triple.algebra().labels();
    r.witnesses.push_back("cocycle: defect(" + l[coc.witness->first] + "," + l[coc.witness->second] +
                          ") = " + coc.defect.str(l));
  }

  const JacobiCheck djac = is_lie_algebra(triple.dual_algebra());
  r.dual_is_lie = djac.holds;
  if (!djac.holds) r.witnesses.push_back("dual algebra: " + djac.describe(triple.dual_algebra()));

  const ContravariantFlatness flat = is_flat(triple);
  r.is_flat = flat.flat;
  r.dual_milnor = milnor_check(triple.dual_algebra(), triple.dual_metric());
  r.flat_matches_dual_milnor = r.is_flat == r.dual_milnor.is_milnor;
  if (!r.is_flat) {
    const auto& dl = triple.dual_algebra().labels();
    r.witnesses.push_back("flat: K(" + dl[flat.witness->first] + "," + dl[flat.witness->second] + ") != 0" +
                          (r.dual_milnor.witness ? "; " + *r.dual_milnor.witness : ""));
  }
  if (!r.flat_matches_dual_milnor) r.witnesses.push_back("internal: flatness disagrees with dual Milnor check");

  if (r.is_flat) {
    const MetaflatCheck meta = is_metaflat(triple);
    r.is_metaflat = meta.metaflat;
    if (!meta.metaflat) {
      const auto [x, y, z] = *meta.witness;
      std::ostringstream os;
      os << "metaflat: M(s" << x + 1 << ",s" << y + 1 << ",s" << z + 1
         << ") = " << meta.witness_value.str(triple.dual_algebra().labels());
      r.witnesses.push_back(os.str());
    }
  } else {
    r.witnesses.push_back("metaflat: not evaluated (requires flatness)");
  }

  r.volume = volume_compatibility(triple);
  r.kappa = r.volume.kappa;
  if (r.volume.witness) r.witnesses.push_back(*r.volume.witness);

  r.linear_poisson = triple.algebra().is_abelian();
  return r;
}

}  // namespace plie
