#include <gtest/gtest.h>

#include "plie/errors.hpp"
#include "plie/exterior.hpp"
#include "support/generators.hpp"

using namespace plie;
using plie::testing::Gen;

namespace {

KVector e(int n, std::initializer_list<int> idx, Space s = Space::Primal) { return KVector::basis(n, s, idx); }
KVector vec(Space s, const Vector& v) { return KVector::from_vector(s, v); }

// Oracle: the CE formula evaluated on basis tuples through pairing only.
KVector ce_by_evaluation(const LieAlgebra& alg, const KVector& omega) {
  const int n = alg.dim();
  const int k = omega.degree();
  KVector out(n, k + 1, Space::Dual);
  for (const auto& idx : combinations(n, k + 1)) {
    Rational total = 0;
    for (int i = 0; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) {
        // ω([u_i,u_j], rest): wedge the arguments and pair with ω.
        KVector args = KVector::from_vector(Space::Primal, alg.basis_bracket(idx[i], idx[j]));
        for (int m = 0; m <= k; ++m)
          if (m != i && m != j) args = wedge(args, KVector::basis(n, Space::Primal, {idx[m]}));
        const Rational sign = (i + j) % 2 ? -1 : 1;
        total += sign * pairing(omega, args);
      }
    out.add_term(idx, total);
  }
  return out;
}

}  // namespace

TEST(Wedge, BasisExamples) {
  EXPECT_EQ(wedge(e(3, {0}), e(3, {1})), e(3, {0, 1}));
  EXPECT_EQ(wedge(e(3, {1}), e(3, {0})), -e(3, {0, 1}));
  // (e1+e2)∧(e1−e2) = −2 e1∧e2 by bilinear expansion
  EXPECT_EQ(wedge(vec(Space::Primal, {1, 1, 0}), vec(Space::Primal, {1, -1, 0})), Rational(-2) * e(3, {0, 1}));
  EXPECT_TRUE(wedge(e(2, {0, 1}), e(2, {0})).is_zero());
  EXPECT_THROW(wedge(e(3, {0}), e(3, {1}, Space::Dual)), DimensionError);
}

TEST(Wedge, GradedAnticommutativeAndAssociative) {
  Gen gen(21);
  for (int t = 0; t < 100; ++t) {
    const int n = gen.integer(2, 5);
    const int p = gen.integer(0, n), q = gen.integer(0, n - p);
    const KVector a = gen.kvector(n, p, Space::Dual), b = gen.kvector(n, q, Space::Dual);
    const Rational sign = (p * q) % 2 ? -1 : 1;
    EXPECT_EQ(wedge(a, b), sign * wedge(b, a));
    const int r = gen.integer(0, n - p - q);
    const KVector c = gen.kvector(n, r, Space::Dual);
    EXPECT_EQ(wedge(wedge(a, b), c), wedge(a, wedge(b, c)));
  }
}

TEST(Pairing, Examples) {
  EXPECT_EQ(pairing(e(3, {0, 2}, Space::Dual), e(3, {0, 2})), Rational(1));
  EXPECT_EQ(pairing(e(3, {0, 2}, Space::Dual), e(3, {0, 1})), Rational(0));
  const Rational lambda(5, 3);
  EXPECT_EQ(pairing(-lambda * e(3, {0, 2}, Space::Dual), e(3, {0, 2})), -lambda);
  EXPECT_EQ(pairing(e(3, {0, 2}), e(3, {0, 2}, Space::Dual)), Rational(1));
  EXPECT_THROW(pairing(e(3, {0, 2}), e(3, {0, 2})), Error);
}

TEST(Pairing, DecomposableEqualsDeterminant) {
  Gen gen(23);
  for (int t = 0; t < 60; ++t) {
    const int n = gen.integer(2, 4);
    const int k = gen.integer(1, n);
    std::vector<Vector> alphas, us;
    KVector a = KVector::scalar(n, Space::Dual, 1), u = KVector::scalar(n, Space::Primal, 1);
    for (int i = 0; i < k; ++i) {
      alphas.push_back(gen.vector(static_cast<std::size_t>(n)));
      us.push_back(gen.vector(static_cast<std::size_t>(n)));
      a = wedge(a, vec(Space::Dual, alphas.back()));
      u = wedge(u, vec(Space::Primal, us.back()));
    }
    Matrix evals(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        evals(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
            dot(alphas[static_cast<std::size_t>(i)], us[static_cast<std::size_t>(j)]);
    EXPECT_EQ(pairing(a, u), determinant(evals));
  }
}

TEST(Interior, Examples) {
  const KVector top = KVector::top(3, Space::Primal);
  EXPECT_EQ(interior(e(3, {0}, Space::Dual), top), e(3, {1, 2}));
  // i_{e1*∧e3*} = i_{e3*} ∘ i_{e1*}: e1∧e2∧e3 → e2∧e3 → −e2
  EXPECT_EQ(interior(e(3, {0, 2}, Space::Dual), top), -e(3, {1}));
  const Rational lambda(7, 2);
  EXPECT_EQ(interior(-lambda * e(3, {0, 2}, Space::Dual), top), lambda * e(3, {1}));
}

TEST(Interior, SquareVanishesAndDegreeTwoComposes) {
  Gen gen(29);
  for (int t = 0; t < 60; ++t) {
    const int n = gen.integer(2, 5);
    const KVector a = vec(Space::Dual, gen.vector(static_cast<std::size_t>(n)));
    const KVector b = vec(Space::Dual, gen.vector(static_cast<std::size_t>(n)));
    const KVector x = gen.kvector(n, gen.integer(2, n), Space::Primal);
    EXPECT_TRUE(interior(a, interior(a, x)).is_zero());
    EXPECT_EQ(interior(wedge(a, b), x), interior(b, interior(a, x)));
  }
}

TEST(CeDifferential, MilnorAnchor) {
  const Rational lambda(3);
  const LieAlgebra h = LieAlgebra::raw(3, {{0, 1, 2, lambda}, {0, 2, 1, -lambda}});
  EXPECT_EQ(ce_differential(h, e(3, {1}, Space::Dual)), lambda * e(3, {0, 2}, Space::Dual));
  EXPECT_EQ(ce_differential(h, e(3, {2}, Space::Dual)), -lambda * e(3, {0, 1}, Space::Dual));
  EXPECT_TRUE(ce_differential(LieAlgebra::abelian(3), e(3, {0}, Space::Dual)).is_zero());
}

TEST(CeDifferential, MatchesEvaluationFormulaOnPoolAlgebras) {
  Gen gen(31);
  for (const auto& p : plie::testing::algebra_pool()) {
    const int n = p.algebra.dim();
    for (int k = 1; k < n; ++k) {
      const KVector w = gen.kvector(n, k, Space::Dual);
      EXPECT_EQ(ce_differential(p.algebra, w), ce_by_evaluation(p.algebra, w)) << p.name << " degree " << k;
    }
  }
}

TEST(CeDifferential, SquaresToZeroOnValidAlgebras) {
  Gen gen(37);
  for (const auto& p : plie::testing::algebra_pool()) {
    const int n = p.algebra.dim();
    for (int k = 0; k + 2 <= n; ++k) {
      const KVector w = gen.kvector(n, k, Space::Dual);
      EXPECT_TRUE(ce_differential(p.algebra, ce_differential(p.algebra, w)).is_zero()) << p.name;
    }
  }
}

TEST(CeDifferential, SquareFailsWithoutJacobi) {
  // bracket3 at a = c = 1 violates Jacobi; d∘d detects it on 1-forms.
  const LieAlgebra bad = LieAlgebra::raw(3, {{0, 1, 1, 1}, {0, 2, 2, 1}, {1, 2, 0, 1}});
  bool nonzero = false;
  for (int i = 0; i < 3; ++i)
    nonzero = nonzero || !ce_differential(bad, ce_differential(bad, e(3, {i}, Space::Dual))).is_zero();
  EXPECT_TRUE(nonzero);
}

TEST(CeDifferential, LeibnizRule) {
  Gen gen(41);
  for (const auto& p : plie::testing::algebra_pool()) {
    const int n = p.algebra.dim();
    const int a = gen.integer(0, n - 1);
    const int b = gen.integer(0, n - 1 - a);
    const KVector w = gen.kvector(n, a, Space::Dual), v = gen.kvector(n, b, Space::Dual);
    const Rational sign = a % 2 ? -1 : 1;
    EXPECT_EQ(ce_differential(p.algebra, wedge(w, v)),
              wedge(ce_differential(p.algebra, w), v) + sign * wedge(w, ce_differential(p.algebra, v)))
        << p.name;
  }
}

TEST(KVector, DenseRoundTripAndFormatting) {
  Gen gen(43);
  const KVector x = gen.kvector(4, 2, Space::Primal);
  EXPECT_EQ(KVector::from_dense(4, 2, Space::Primal, x.to_dense()), x);
  KVector y(3, 2, Space::Primal);
  y.add_term({1, 0}, 2);
  y.add_term({1, 2}, Rational(1, 2));
  EXPECT_EQ(y.str(), "-2 e1^e2 + 1/2 e2^e3");
  EXPECT_EQ(KVector(3, 1, Space::Primal).str(), "0");
  EXPECT_EQ(combinations(4, 2).size(), 6u);
}
