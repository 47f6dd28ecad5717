#include <gtest/gtest.h>

#include "plie/catalog.hpp"
#include "plie/errors.hpp"
#include "plie/lie.hpp"
#include "support/generators.hpp"

using namespace plie;
using plie::testing::Gen;

namespace {

Vector u(std::initializer_list<Rational> xs) { return Vector(xs); }

const LieAlgebra& so3() {
  static const LieAlgebra a = LieAlgebra::raw(3, {{0, 1, 2, 1}, {1, 2, 0, 1}, {0, 2, 1, -1}});
  return a;
}

// Koszul oracle: A_u v from the defining identity solved by brute force against
// each basis w, written out independently of the library's product.
Vector koszul_oracle(const LieAlgebra& alg, const Matrix& g, const Vector& x, const Vector& y) {
  const std::size_t n = static_cast<std::size_t>(alg.dim());
  Vector rhs(n);
  for (std::size_t w = 0; w < n; ++w) {
    const Vector ew = unit_vector(n, w);
    rhs[w] = dot(bracket_of(alg, x, y), g * ew) + dot(bracket_of(alg, ew, x), g * y) +
             dot(bracket_of(alg, ew, y), g * x);
  }
  return scale(Rational(1, 2), inverse(g) * rhs);
}

}  // namespace

TEST(Bracket, MilnorExamples) {
  const Rational lambda(2);
  const LieAlgebra h = milnor_dim3(lambda);
  EXPECT_TRUE(is_zero(bracket_of(h, u({1, 0, 0}), u({1, 0, 0}))));
  EXPECT_EQ(bracket_of(h, u({1, 0, 0}), u({0, 1, 0})), u({0, 0, lambda}));
  // [e2+e3, e1] = −[e1,e2] − [e1,e3] = −λe3 + λe2
  EXPECT_EQ(bracket_of(h, u({0, 1, 1}), u({1, 0, 0})), u({0, lambda, -lambda}));
}

TEST(Bracket, AntisymmetryProperty) {
  Gen gen(51);
  for (const auto& p : plie::testing::algebra_pool())
    for (int t = 0; t < 10; ++t) {
      const auto n = static_cast<std::size_t>(p.algebra.dim());
      const Vector x = gen.vector(n), y = gen.vector(n);
      EXPECT_EQ(bracket_of(p.algebra, x, y), scale(-1, bracket_of(p.algebra, y, x))) << p.name;
    }
}

TEST(Jacobi, PoolAndCatalogAlgebrasAreLie) {
  for (const auto& p : plie::testing::algebra_pool()) EXPECT_TRUE(is_lie_algebra(p.algebra).holds) << p.name;
  for (const auto& e : catalog()) {
    EXPECT_TRUE(is_lie_algebra(e.triple.algebra()).holds) << e.name;
    EXPECT_TRUE(is_lie_algebra(e.triple.dual_algebra()).holds) << e.name;
  }
}

TEST(Jacobi, DualDim3FamilyDefectIs2ac) {
  for (int a = -2; a <= 2; ++a)
    for (int c = -2; c <= 2; ++c) {
      const LieAlgebra alg = dim3_family(a, c).algebra();
      EXPECT_EQ(jacobi_defect(alg, 0, 1, 2), u({Rational(2 * a * c), 0, 0}));
      EXPECT_EQ(is_lie_algebra(alg).holds, a * c == 0);
    }
}

TEST(Jacobi, RawAcceptsCheckedRejects) {
  const std::vector<StructureConstant> sc{{0, 1, 1, 1}, {0, 2, 2, 1}, {1, 2, 0, 1}};
  EXPECT_NO_THROW(LieAlgebra::raw(3, sc));
  EXPECT_THROW(LieAlgebra::checked(3, sc), PreconditionError);
}

TEST(AdOperator, Examples) {
  const Rational lambda(3);
  const Matrix ad = ad_operator(milnor_dim3(lambda), u({1, 0, 0}));
  EXPECT_EQ(ad, (Matrix{{0, 0, 0}, {0, 0, -lambda}, {0, lambda, 0}}));
  EXPECT_TRUE(ad_operator(LieAlgebra::abelian(3), u({1, 2, 3})).is_zero());
}

TEST(AdOperator, WedgeTwoMatchesDerivation) {
  // ad_{e1} ρ(e1) with ρ(e1) = a e1∧e2 + b e1∧e3 + c e2∧e3 is aλ e1∧e3 − bλ e1∧e2
  const Rational a(2), b(-1), c(5), lambda(3);
  const LieAlgebra h = milnor_dim3(lambda);
  KVector rho(3, 2, Space::Primal);
  rho.add_term({0, 1}, a);
  rho.add_term({0, 2}, b);
  rho.add_term({1, 2}, c);
  KVector expected(3, 2, Space::Primal);
  expected.add_term({0, 2}, a * lambda);
  expected.add_term({0, 1}, -b * lambda);
  EXPECT_EQ(ad_apply(h, u({1, 0, 0}), rho), expected);
  EXPECT_EQ(ad_operator_wedge2(h, u({1, 0, 0})) * rho.to_dense(), expected.to_dense());
}

TEST(MetricAdjoint, DefiningIdentity) {
  Gen gen(53);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 4));
    const Metric m(gen.positive_definite(n));
    const Matrix op = gen.matrix(n, n);
    const Matrix adj = metric_adjoint(m, op);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        EXPECT_EQ(m.inner(op * unit_vector(n, i), unit_vector(n, j)), m.inner(unit_vector(n, i), adj * unit_vector(n, j)));
  }
  const Matrix skew{{0, 1}, {-1, 0}};
  EXPECT_EQ(metric_adjoint(Metric::identity(2), skew), Rational(-1) * skew);
  // Heisenberg with diag(1,1,a)
  const Metric g(Matrix::diagonal({1, 1, 2}));
  const Matrix ad = ad_operator(LieAlgebra::raw(3, {{0, 1, 2, 1}}), u({1, 0, 0}));
  const Matrix adj = metric_adjoint(g, ad);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      EXPECT_EQ(g.inner(ad * unit_vector(3, i), unit_vector(3, j)), g.inner(unit_vector(3, i), adj * unit_vector(3, j)));
}

TEST(Subspaces, SCenterDerivedAndTraces) {
  EXPECT_EQ(compute_S(LieAlgebra::abelian(3), Metric::identity(3)), Subspace::whole(3));
  EXPECT_EQ(compute_S(milnor_dim3(1), Metric::identity(3)), Subspace::span(3, {u({1, 0, 0})}));
  EXPECT_EQ(compute_S(so3(), Metric::identity(3)), Subspace::whole(3));

  const LieAlgebra heis = LieAlgebra::raw(3, {{0, 1, 2, 1}});
  EXPECT_EQ(derived_ideal(heis), Subspace::span(3, {u({0, 0, 1})}));
  EXPECT_EQ(center(heis), Subspace::span(3, {u({0, 0, 1})}));
  EXPECT_TRUE(is_unimodular(heis));
  EXPECT_EQ(derived_ideal(LieAlgebra::abelian(2)).dim(), 0u);
  EXPECT_EQ(center(LieAlgebra::abelian(2)), Subspace::whole(2));

  const Rational b(3), d(-2);
  EXPECT_EQ(ad_traces(dim4_family(b, 1, d, 0, 0).algebra()), u({2 * b, 2 * d, 0, 0}));
  EXPECT_EQ(ad_traces(dim3_family(Rational(5), 0).algebra()), u({10, 0, 0}));
}

TEST(Milnor, Examples) {
  const MilnorReport ab = milnor_check(LieAlgebra::abelian(3), Metric(Matrix::diagonal({1, 2, 3})));
  EXPECT_TRUE(ab.is_milnor);
  EXPECT_EQ(ab.derived_basis.dim(), 0u);

  const MilnorReport h = milnor_check(milnor_dim3(1), Metric::identity(3));
  EXPECT_TRUE(h.is_milnor);
  EXPECT_EQ(h.s_basis, Subspace::span(3, {u({1, 0, 0})}));
  EXPECT_EQ(h.derived_basis, Subspace::span(3, {u({0, 1, 0}), u({0, 0, 1})}));
  EXPECT_EQ(h.derived_even_dim, std::optional<bool>(true));

  const MilnorReport s = milnor_check(so3(), Metric::identity(3));
  EXPECT_FALSE(s.is_milnor);
  EXPECT_FALSE(s.s_abelian);
  EXPECT_TRUE(s.witness.has_value());
  EXPECT_EQ(s.is_milnor, s.s_abelian && s.derived_abelian && s.orthogonality_holds);
}

TEST(LeviCivita, Examples) {
  EXPECT_TRUE(levi_civita_operator(LieAlgebra::abelian(3), Metric::identity(3), u({1, 1, 1})).is_zero());
  // so(3) identity Gram: A_{e1}e2 = ½[e1,e2]
  EXPECT_EQ(levi_civita_product(so3(), Metric::identity(3), u({1, 0, 0}), u({0, 1, 0})),
            scale(Rational(1, 2), bracket_of(so3(), u({1, 0, 0}), u({0, 1, 0}))));
  // Milnor: A vanishes on the derived ideal and equals ad on S
  const LieAlgebra h = milnor_dim3(2);
  EXPECT_TRUE(levi_civita_operator(h, Metric::identity(3), u({0, 1, 0})).is_zero());
  EXPECT_EQ(levi_civita_operator(h, Metric::identity(3), u({1, 0, 0})), ad_operator(h, u({1, 0, 0})));
}

TEST(LeviCivita, MatchesKoszulOracle) {
  Gen gen(57);
  for (const auto& p : plie::testing::algebra_pool()) {
    const auto n = static_cast<std::size_t>(p.algebra.dim());
    const Matrix g = gen.positive_definite(n);
    const Vector x = gen.vector(n), y = gen.vector(n);
    EXPECT_EQ(levi_civita_product(p.algebra, Metric(g), x, y), koszul_oracle(p.algebra, g, x, y)) << p.name;
  }
}

TEST(Flatness, Examples) {
  EXPECT_TRUE(is_flat_metric(LieAlgebra::abelian(3), Metric::identity(3)).flat);
  EXPECT_FALSE(is_flat_metric(so3(), Metric::identity(3)).flat);
  EXPECT_TRUE(is_flat_metric(milnor_dim4(), Metric::identity(4)).flat);
}

TEST(Flatness, MilnorEquivalenceOnPoolWithRandomBases) {
  Gen gen(59);
  int milnor = 0, non_milnor = 0;
  for (const auto& p : plie::testing::algebra_pool())
    for (int t = 0; t < 4; ++t) {
      const auto n = static_cast<std::size_t>(p.algebra.dim());
      const Matrix basis = gen.invertible(n);
      const LieAlgebra alg = plie::testing::change_basis(p.algebra, basis);
      // Even trials keep the adapted metric, odd trials draw an arbitrary one.
      const Metric metric = t % 2 == 0 ? plie::testing::transport(Metric::identity(static_cast<int>(n)), basis)
                                       : Metric(gen.positive_definite(n));
      const MilnorReport r = milnor_check(alg, metric);
      EXPECT_EQ(r.is_milnor, is_flat_metric(alg, metric).flat) << p.name << " trial " << t;
      if (t % 2 == 0) EXPECT_EQ(r.is_milnor, p.milnor_with_identity) << p.name;
      if (r.is_milnor && r.s_basis.dim() >= 1) EXPECT_EQ(r.derived_basis.dim() % 2, 0u) << p.name;
      (r.is_milnor ? milnor : non_milnor)++;
    }
  EXPECT_GT(milnor, 10);
  EXPECT_GT(non_milnor, 10);
}
