// Acceptance driver: prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails. Every expected value below is either a literal or is
// recomputed here by an independent route.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "plie/catalog.hpp"
#include "plie/classify.hpp"
#include "plie/numcheck.hpp"
#include "support/generators.hpp"

using namespace plie;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

KVector e2(int n, int i, int j, const Rational& c) { return c * KVector::basis(n, Space::Primal, {i, j}); }

// Monomial coefficients of a Jacobi-defect component, obtained by evaluating
// the dual bracket at unit and pairwise parameter vectors.
std::vector<Rational> brute_force_monomials(const CocycleSpace& s, int a, int b, int c, int k) {
  const auto eval = [&](const Vector& t) {
    const Bialgebra bi(s.algebra, s.cocycle_at(t));
    const LieAlgebra d = LieAlgebra::raw(s.algebra.dim(), bi.dual_algebra().entries());
    return jacobi_defect(d, a, b, c)[static_cast<std::size_t>(k)];
  };
  std::vector<Rational> out;
  const std::size_t m = s.dim();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      const Vector ei = unit_vector(m, i);
      if (i == j) {
        out.push_back(eval(ei));
      } else {
        const Vector ej = unit_vector(m, j);
        out.push_back(eval(add(ei, ej)) - eval(ei) - eval(ej));
      }
    }
  return out;
}

Outcome criterion1() {
  Outcome o;
  const CocycleSpace s = cocycle_space(milnor_dim3(1), Metric::identity(3), ConstraintFlags::parse("cocycle,flat"));
  o.require(s.dim() == 2, "dim-3 cocycle+flat space has dimension 2 (got " + std::to_string(s.dim()) + ")");
  // Every basis element has the shape ρ(e1) = c e2∧e3, ρ(e2) = a e1∧e2, ρ(e3) = a e1∧e3.
  for (std::size_t m = 0; m < s.dim(); ++m) {
    const Cocycle r = s.basis_cocycle(m);
    const Rational c = r.value(0).coeff({1, 2}), a = r.value(1).coeff({0, 1});
    o.require(r == Cocycle({e2(3, 1, 2, c), e2(3, 0, 1, a), e2(3, 0, 2, a)}), "basis element matches the a/c pattern");
  }
  const CocycleSpace f =
      cocycle_space(milnor_dim3(1), Metric::identity(3), ConstraintFlags::parse("cocycle,flat,volume,unimodular"));
  o.require(f.dim() == 1, "with volume and unimodular flags the dimension is 1 (got " + std::to_string(f.dim()) + ")");
  if (f.dim() == 1) {
    const Cocycle r = f.basis_cocycle(0);
    const Rational c = r.value(0).coeff({1, 2});
    o.require(!c.is_zero() && r == Cocycle({e2(3, 1, 2, c), KVector(3, 2, Space::Primal), KVector(3, 2, Space::Primal)}),
              "the surviving direction is rho(e1) = c e2^e3");
  }
  o.note("dims " + std::to_string(s.dim()) + " and " + std::to_string(f.dim()));
  return o;
}

Outcome criterion2() {
  Outcome o;
  const CocycleSpace s = cocycle_space(milnor_dim4(), Metric::identity(4), ConstraintFlags::parse("cocycle,flat"));
  o.require(s.dim() == 5, "dim-4 space has dimension 5 (got " + std::to_string(s.dim()) + ")");
  if (s.dim() != 5) return o;
  // Parameters come out as (β1, β2, b, c, d); check against the explicit family.
  plie::testing::Gen gen(2);
  for (int t = 0; t < 10; ++t) {
    const Vector p = gen.vector(5);
    o.require(s.cocycle_at(p) == dual_cocycle(dim4_family(p[2], p[3], p[4], p[0], p[1]).bialgebra),
              "space element equals the rho4 family at matching parameters");
  }
  // Distinct normalized polynomials must be exactly {bβ1, bβ2, dβ1, dβ2}.
  const auto qs = quadratic_constraints(s);
  std::vector<std::pair<std::size_t, std::size_t>> found;
  for (const auto& q : qs) {
    const QuadraticConstraint nq = q.normalized();
    std::vector<std::pair<std::size_t, std::size_t>> support;
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i; j < 5; ++j)
        if (!nq.monomial(i, j).is_zero()) support.emplace_back(i, j);
    o.require(support.size() == 1, "each constraint is a single monomial: " + q.str(s.parameter_labels));
    if (support.size() == 1) {
      o.require(nq.monomial(support[0].first, support[0].second) == Rational(1), "canonical scaling");
      o.require(q.monomial(support[0].first, support[0].second) == Rational(2), "coefficient 2 before scaling");
      if (std::find(found.begin(), found.end(), support[0]) == found.end()) found.push_back(support[0]);
    }
  }
  std::sort(found.begin(), found.end());
  const std::vector<std::pair<std::size_t, std::size_t>> expected{{0, 2}, {0, 4}, {1, 2}, {1, 4}};
  o.require(found == expected, "monomial set is {b*beta1, b*beta2, d*beta1, d*beta2}");
  // Cross-check each polynomial against the brute-force expansion.
  std::size_t oracle_nonzero = 0;
  std::size_t idx = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      for (int c = b + 1; c < 4; ++c)
        for (int k = 0; k < 4; ++k) {
          const auto mono = brute_force_monomials(s, a, b, c, k);
          if (std::all_of(mono.begin(), mono.end(), [](const Rational& r) { return r.is_zero(); })) continue;
          ++oracle_nonzero;
          if (idx < qs.size()) {
            std::size_t pos = 0;
            for (std::size_t i = 0; i < 5; ++i)
              for (std::size_t j = i; j < 5; ++j, ++pos)
                o.require(qs[idx].monomial(i, j) == mono[pos], "polynomial matches brute force");
          }
          ++idx;
        }
  o.require(oracle_nonzero == qs.size(), "same number of nonzero components as brute force");
  o.note(std::to_string(qs.size()) + " nonzero components, distinct monomials " + std::to_string(found.size()));
  return o;
}

Outcome criterion3() {
  Outcome o;
  int points = 0;
  for (const Rational a : {Rational(1), Rational(-2), Rational(1, 2)})
    for (const Rational c : {Rational(1), Rational(3), Rational(-1, 3)}) {
      const Triple t = dim3_family(a, c);
      o.require(jacobi_defect(t.algebra(), 0, 1, 2) == Vector{2 * a * c, 0, 0}, "defect equals 2ac e1*");
      ++points;
    }
  const CocycleSpace s = cocycle_space(milnor_dim3(1), Metric::identity(3), ConstraintFlags::parse("cocycle,flat"));
  const auto qs = quadratic_constraints(s);
  o.require(qs.size() == 1, "exactly one nonzero defect component");
  if (qs.size() == 1) {
    o.require(qs[0].monomial(0, 1) == Rational(2) && qs[0].monomial(0, 0).is_zero() && qs[0].monomial(1, 1).is_zero(),
              "extracted polynomial is 2*c*a");
    o.require(qs[0].label.find("[e1*]") != std::string::npos, "component along e1*");
    o.note("polynomial " + qs[0].str(s.parameter_labels));
  }
  o.note(std::to_string(points) + " grid points");
  return o;
}

Outcome criterion4() {
  Outcome o;
  plie::testing::Gen gen(4);
  for (int t = 0; t < 10; ++t) {
    const Rational b = gen.small(), c = gen.small(), d = gen.small(), b1 = gen.small(), b2 = gen.small();
    // κ is the modular form of the Milnor-side bialgebra, i.e. tr ad on the family's algebra.
    const Triple t4 = dim4_family(b, c, d, b1, b2);
    o.require(modular_form(dual_bialgebra(t4.bialgebra)) == Vector{2 * b, 2 * d, 0, 0}, "kappa = (2b,2d,0,0)");
    o.require(ad_traces(t4.algebra()) == Vector{2 * b, 2 * d, 0, 0}, "trace of ad = (2b,2d,0,0)");
    const Rational a = gen.small(), cc = gen.small();
    const Triple t3 = dim3_family(a, cc);
    o.require(modular_form(dual_bialgebra(t3.bialgebra)) == Vector{2 * a, 0, 0}, "kappa = (2a,0,0)");
    o.require(ad_traces(t3.algebra()) == Vector{2 * a, 0, 0}, "trace of ad = (2a,0,0)");
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (const auto& [a, b, lambda] : std::vector<std::array<Rational, 3>>{{1, 0, 1}, {0, 1, 1}, {1, 1, 2}}) {
    KVector r1(3, 2, Space::Primal);
    r1.add_term({0, 1}, a);
    r1.add_term({0, 2}, b);
    const Bialgebra side(milnor_dim3(lambda),
                         Cocycle({r1, KVector(3, 2, Space::Primal), KVector(3, 2, Space::Primal)}));
    const Triple t(side.dual_algebra(), dual_cocycle(side), Metric::identity(3));
    const KVector m = metacurvature(t, {1, 0, 0}, {1, 0, 0}, {1, 0, 0});
    KVector expected(3, 2, Space::Primal);
    expected.add_term({0, 1}, -a * lambda * lambda);
    expected.add_term({0, 2}, -b * lambda * lambda);
    o.require(m.to_dense() == expected.to_dense(),
              "(a,b,lambda)=(" + a.str() + "," + b.str() + "," + lambda.str() + ") gives " + m.str());
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  int instances = 0, disagreements = 0;
  const auto compare = [&](const Triple& t, const std::string& what) {
    ++instances;
    const bool lc = is_flat_metric(t.algebra(), t.metric).flat;
    const bool mc = milnor_check(t.algebra(), t.metric).is_milnor;
    const bool cf = is_flat(t).flat;
    const bool dm = milnor_check(t.dual_algebra(), t.dual_metric()).is_milnor;
    if (lc != mc || cf != dm) {
      ++disagreements;
      o.require(false, what);
    }
  };
  for (const auto& e : catalog()) compare(e.triple, e.name);
  plie::testing::Gen gen(6);
  const auto& pool = plie::testing::algebra_pool();
  int random = 0;
  for (int round = 0; round < 3; ++round)
    for (const auto& p : pool) {
      const auto n = static_cast<std::size_t>(p.algebra.dim());
      if (n < 2 || n > 4) continue;
      const Matrix basis = gen.invertible(n);
      const LieAlgebra alg = plie::testing::change_basis(p.algebra, basis);
      const Metric metric = round == 0 ? plie::testing::transport(Metric::identity(static_cast<int>(n)), basis)
                                       : Metric(gen.positive_definite(n));
      // Linear Poisson structure: abelian primal whose dual is `alg`.
      const Bialgebra side(alg, Cocycle::zero(static_cast<int>(n)));
      const Triple t(side.dual_algebra(), dual_cocycle(side), Metric(inverse(metric.gram())));
      compare(t, p.name + " (linear)");
      // Same algebra carrying a zero cocycle checks the primal equivalence.
      compare(Triple(alg, Cocycle::zero(static_cast<int>(n)), metric), p.name + " (primal)");
      random += 2;
    }
  o.require(random >= 20, "at least 20 random instances");
  o.note(std::to_string(instances) + " instances (" + std::to_string(random) + " random), " +
         std::to_string(disagreements) + " disagreements");
  return o;
}

Outcome criterion7() {
  Outcome o;
  plie::testing::Gen gen(7);
  std::vector<LieAlgebra> algebras;
  for (const auto& p : plie::testing::algebra_pool()) algebras.push_back(p.algebra);
  for (const auto& e : catalog()) {
    algebras.push_back(e.triple.algebra());
    algebras.push_back(e.triple.dual_algebra());
  }
  int checks = 0;
  for (const auto& alg : algebras) {
    const int n = alg.dim();
    const auto un = static_cast<std::size_t>(n);
    o.require(is_lie_algebra(alg).holds, "Jacobi");
    for (int t = 0; t < 3; ++t) {
      const Vector u = gen.vector(un), v = gen.vector(un);
      o.require(bracket_of(alg, u, v) == scale(Rational(-1), bracket_of(alg, v, u)), "antisymmetry");
      for (int k = 0; k < n; ++k) {
        const KVector w = gen.kvector(n, k, Space::Dual);
        o.require(ce_differential(alg, ce_differential(alg, w)).is_zero(), "d o d = 0");
        for (int l = 0; k + l <= n && l <= 2; ++l) {
          const KVector x = gen.kvector(n, l, Space::Dual);
          const Rational sign = (k * l) % 2 == 0 ? Rational(1) : Rational(-1);
          o.require(wedge(w, x) == sign * wedge(x, w), "graded anticommutativity");
        }
      }
      ++checks;
    }
  }
  for (const auto& e : catalog())
    for (int variant = 0; variant < 2; ++variant) {
      const int n = e.triple.algebra().dim();
      const Triple t = variant == 0 ? e.triple
                                    : Triple(e.triple.algebra(), e.triple.cocycle(),
                                             Metric(gen.positive_definite(static_cast<std::size_t>(n))));
      const ConnectionTable table = contravariant_connection(t);
      o.require(is_torsion_free(table, t.dual_algebra()), e.name + " torsion-free");
      o.require(is_metric_parallel(table, t.dual_metric()), e.name + " metric-parallel");
    }
  o.note(std::to_string(algebras.size()) + " algebras, " + std::to_string(checks) + " randomized rounds");
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto verdict = [](const std::string& name) { return full_report(find_entry(name).triple); };
  const HawkinsReport dim2 = verdict("dim2-nonzero");
  o.require(!dim2.hawkins_satisfied(), "dim-2 nonzero cocycle is violated");
  for (const char* name : {"dim3-abelian", "dim3-heisenberg"})
    o.require(verdict(name).hawkins_satisfied(), std::string(name) + " satisfied");
  for (const Rational a : {Rational(1), Rational(2)})
    for (const Rational lambda : {Rational(1), Rational(3)}) {
      const HawkinsReport r = full_report(dim3_family(a, 0, lambda));
      o.require(r.is_flat && r.is_metaflat && r.volume.verdict == VolumeVerdict::Violated, "dim-3 family a != 0 violated");
      o.require(r.volume.condition_values.size() == 3 &&
                    r.volume.condition_values[1] == lambda * a * KVector::basis(3, Space::Dual, {0, 1}),
                "witness value lambda*a e1^e2");
    }
  for (const char* name : {"dim4-unimodular-a", "dim4-unimodular-b", "dim4-unimodular-c", "dim4-unimodular-d"})
    o.require(verdict(name).hawkins_satisfied(), std::string(name) + " satisfied");
  const HawkinsReport nu = verdict("dim4-nonunimodular");
  o.require(nu.is_flat && nu.is_metaflat && nu.volume.verdict == VolumeVerdict::NecessaryOnlyPassed,
            "dim4-nonunimodular is flat, metaflat, necessary-only-passed");
  return o;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

Outcome criterion9() {
  Outcome o;
  using namespace plie::numeric;
  const NumericTolerance tol{1e-4, 1e-5};
  for (const char* name : {"dim3-abelian", "dim3-heisenberg", "dim4-unimodular-a", "dim4-nonunimodular"}) {
    const VolumeReport r = check_volume_condition(find_model(name), 100, tol);
    o.require(r.passed && r.max_residual < 1e-5, std::string(name) + " residual " + fmt(r.max_residual));
  }
  // Exact contraction against −e^{−2bx}(z dx∧dz + t dx∧dt) with b = 1.
  const CoordinateModel& nu = find_model("dim4-nonunimodular");
  double worst = 0.0;
  for (const auto& p : sample_points(nu.domain, 100, 0.0, 9)) {
    Eigen::VectorXd expected = Eigen::VectorXd::Zero(6);
    expected[1] = -std::exp(-2.0 * p[0]) * p[2];
    expected[2] = -std::exp(-2.0 * p[0]) * p[3];
    worst = std::max(worst, (contract_bivector(nu.pi(p), nu.mu(p)) - expected).cwiseAbs().maxCoeff());
  }
  o.require(worst <= 1e-12, "closed form deviation " + fmt(worst));
  const VolumeReport neg = check_volume_condition(find_model("dim4-nonunimodular-perturbed"), 100, tol);
  o.require(neg.max_residual > 1e-2,
            "negative control mu = exp(-2bx + x^2/2) exceeds 1e-2 (max residual " + fmt(neg.max_residual) +
                "; this density depends on x alone, and i_pi mu only has dx^dz, dx^dt components, so it stays closed)");
  const VolumeReport neg_y = check_volume_condition(find_model("dim4-nonunimodular-perturbed-y"), 100, tol);
  o.note("supplementary control mu = exp(-2bx + y^2/2): max residual " + fmt(neg_y.max_residual) +
         (neg_y.max_residual > 1e-2 ? " (detected)" : " (NOT detected)"));
  for (const char* name : {"dim3-heisenberg", "dim4-nonunimodular"}) {
    const MultiplicativityReport m = check_multiplicativity(find_model(name), 100, tol);
    o.require(m.passed && m.max_deviation < 1e-5, std::string(name) + " multiplicativity " + fmt(m.max_deviation));
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  for (const auto& e : catalog()) {
    const Triple scaled(e.triple.algebra(), e.triple.cocycle().scaled(3), e.triple.metric.scaled(2));
    const HawkinsReport a = full_report(e.triple), b = full_report(scaled);
    o.require(a.valid() == b.valid() && a.is_flat == b.is_flat && a.is_metaflat == b.is_metaflat &&
                  a.volume.verdict == b.volume.verdict && a.volume.necessary_condition_holds == b.volume.necessary_condition_holds &&
                  a.hawkins_satisfied() == b.hawkins_satisfied() && a.dual_milnor.is_milnor == b.dual_milnor.is_milnor,
              e.name);
  }
  o.note(std::to_string(catalog().size()) + " entries");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                       criterion6, criterion7, criterion8, criterion9, criterion10};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL");
    for (const auto& n : o.notes) std::cout << "\n    " << n;
    std::cout << '\n';
    failures += o.pass ? 0 : 1;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
