#include <gtest/gtest.h>

#include "support.hpp"

using namespace modlie;
using namespace modlie::testing;

namespace {

/// Gram of the Killing form read straight off the structure constants:
/// κ(b_i, b_j) = Σ_{k,l} c(i, l, k) c(j, k, l).
Matrix killing_by_constants(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  Matrix g(L.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) g(i, j) += L.constant(i, l, k) * L.constant(j, k, l);
  return g;
}

Representation matrix_rep(const MatrixLieAlgebra& m) { return Representation(m.algebra, m.embedding); }

}  // namespace

TEST(KillingForm, Sl2OverRationals) {
  const LieAlgebra L = builtin_sl2(Field::rationals()).algebra;
  const BilinearForm k = killing_form(L);
  EXPECT_EQ(k.gram, Matrix::from_ints(Field::rationals(), {{0, 4, 0}, {4, 0, 0}, {0, 0, 8}}));
  EXPECT_EQ(k.label, "killing");
  EXPECT_EQ(leibniz_det(k.gram), Field::rationals().from_int(-128));
  EXPECT_TRUE(killing_radical(k).is_zero());
  EXPECT_TRUE(is_nondegenerate(k));
}

TEST(KillingForm, Sl2OverF3) {
  const Field f = Field::prime(3);
  const BilinearForm k = killing_form(builtin_sl2(f).algebra);
  EXPECT_EQ(k.gram, Matrix::from_ints(f, {{0, 1, 0}, {1, 0, 0}, {0, 0, 2}}));
  EXPECT_TRUE(is_nondegenerate(k));
}

TEST(KillingForm, FslIsIdenticallyZero) {
  const LieAlgebra L = builtin_fsl2(Field::prime(2));
  const BilinearForm k = killing_form(L);
  EXPECT_TRUE(k.gram(2, 2).is_zero());
  EXPECT_TRUE(k.gram.is_zero());
  EXPECT_FALSE(is_nondegenerate(k));
  EXPECT_TRUE(killing_radical(k).is_full());
}

TEST(KillingForm, AbelianAndAff2) {
  const LieAlgebra ab = new_lie_algebra(Field::prime(5), {"a", "b", "c"}, {});
  EXPECT_TRUE(killing_form(ab).gram.is_zero());
  EXPECT_TRUE(killing_radical(killing_form(ab)).is_full());
  EXPECT_TRUE(associativity_check(killing_form(ab)));
  const Field q = Field::rationals();
  EXPECT_EQ(killing_form(builtin_aff2(q).algebra).gram, Matrix::from_ints(q, {{1, 0}, {0, 0}}));
}

TEST(KillingForm, MatchesConstantsFormulaAndIsSymmetric) {
  std::mt19937_64 rng(31);
  for (const Field& f : sample_fields()) {
    for (const auto& L : catalog(f)) {
      const Matrix g = killing_form(L).gram;
      EXPECT_EQ(g, killing_by_constants(L));
      EXPECT_EQ(g, g.transpose());
      const LieAlgebra R = random_rebase(L, rng);
      EXPECT_EQ(killing_form(R).gram, killing_by_constants(R));
    }
  }
}

TEST(KillingForm, AssociativityOnCatalogAndRandomAlgebras) {
  for (const Field& f : sample_fields()) {
    for (const auto& L : catalog(f)) EXPECT_TRUE(associativity_check(killing_form(L)));
    EXPECT_TRUE(associativity_check(killing_form(builtin_sl(f, 3).algebra)));
  }
  std::mt19937_64 rng(32);
  const Field f5 = Field::prime(5);
  for (int s = 0; s < 60; ++s) {
    const auto base = catalog(f5);
    const LieAlgebra R = random_rebase(base[static_cast<std::size_t>(s) % base.size()], rng);
    const Matrix g = killing_by_constants(R);
    // Direct triple loop on κ([b_i, b_j], b_k) = κ(b_i, [b_j, b_k]).
    bool direct = true;
    for (std::size_t i = 0; i < R.dim(); ++i)
      for (std::size_t j = 0; j < R.dim(); ++j)
        for (std::size_t k = 0; k < R.dim(); ++k) {
          Scalar lhs = f5.zero(), rhs = f5.zero();
          for (std::size_t m = 0; m < R.dim(); ++m) {
            lhs += R.constant(i, j, m) * g(m, k);
            rhs += R.constant(j, k, m) * g(i, m);
          }
          direct = direct && lhs == rhs;
        }
    ASSERT_TRUE(direct);
    ASSERT_TRUE(associativity_check(killing_form(R)));
  }
}

TEST(KillingForm, RadicalIsAnIdeal) {
  for (const Field& f : sample_fields()) {
    for (const auto& L : catalog(f)) {
      const Subspace rad = killing_radical(killing_form(L));
      EXPECT_TRUE(is_ideal(L, rad));
      if (!f.is_prime()) {
        EXPECT_TRUE(is_solvable_subspace(L, rad));
      }
    }
  }
}

TEST(TraceForm, AdjointGivesKillingForm) {
  for (const Field& f : sample_fields()) {
    for (const auto& L : catalog(f)) {
      const BilinearForm t = trace_form(adjoint_rep(L));
      EXPECT_EQ(t.gram, killing_form(L).gram);
      EXPECT_EQ(t.label, "trace");
    }
  }
  const Field f2 = Field::prime(2);
  const BilinearForm t = trace_form(adjoint_rep(builtin_fsl2(f2)));
  for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(t.gram(i, i).is_zero());
  EXPECT_TRUE(trace_form(trivial_rep(builtin_fsl2(f2), 2)).gram.is_zero());
}

TEST(TraceForm, StandardRepresentation) {
  const Field q = Field::rationals();
  const BilinearForm t = trace_form(matrix_rep(builtin_sl2(q)));
  EXPECT_EQ(t.gram, Matrix::from_ints(q, {{0, 1, 0}, {1, 0, 0}, {0, 0, 2}}));
}

TEST(Cartan, FslCounterexample) {
  const LieAlgebra L = builtin_fsl2(Field::prime(2));
  const CartanReport r = cartan_statements(L, adjoint_rep(L));
  EXPECT_TRUE(r.stmt1);
  EXPECT_TRUE(r.stmt2);
  EXPECT_FALSE(r.solvable);
  EXPECT_FALSE(r.consistent);
}

TEST(Cartan, SolvableCounterexampleAlgebra) {
  for (std::uint64_t p : {2, 3, 5}) {
    const Field f = Field::prime(p);
    const std::size_t n = p;
    Matrix x(f, n, n), y(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      x(i, (i + 1) % n) = f.one();
      y(i, i) = f.from_int(static_cast<long long>(i));
    }
    const MatrixLieAlgebra S = commutator_algebra_of_matrices({x, y}, {"x", "y"});
    const CartanReport r = cartan_statements(S.algebra, matrix_rep(S));
    EXPECT_TRUE(r.solvable);
    EXPECT_TRUE(r.stmt1);
    EXPECT_TRUE(r.consistent);
  }
}

TEST(Cartan, Sl2OverRationals) {
  const LieAlgebra L = builtin_sl2(Field::rationals()).algebra;
  const CartanReport r = cartan_statements(L, adjoint_rep(L));
  EXPECT_FALSE(r.stmt1);
  EXPECT_FALSE(r.stmt2);
  EXPECT_FALSE(r.solvable);
  EXPECT_TRUE(r.consistent);
}

TEST(Cartan, ConsistentOverRationals) {
  const Field q = Field::rationals();
  for (const auto& L : catalog(q)) EXPECT_TRUE(cartan_statements(L, adjoint_rep(L)).consistent);
  const MatrixLieAlgebra gl3 = builtin_gl(q, 3);
  EXPECT_TRUE(cartan_statements(gl3.algebra, matrix_rep(gl3)).consistent);
}

TEST(Cartan, RejectsForeignRepresentation) {
  const Field f = Field::prime(3);
  const LieAlgebra H = builtin_heisenberg(f).algebra;
  const LieAlgebra A = builtin_aff2(f).algebra;
  try {
    cartan_statements(H, adjoint_rep(A));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidRepresentation);
  }
}

TEST(Cartan, Semisimplicity) {
  const Field q = Field::rationals();
  const SemisimplicityReport sl = cartan_semisimplicity(builtin_sl2(q).algebra);
  EXPECT_TRUE(sl.semisimple);
  EXPECT_TRUE(sl.nondegenerate);
  EXPECT_TRUE(sl.equivalent);
  const SemisimplicityReport aff = cartan_semisimplicity(builtin_aff2(q).algebra);
  EXPECT_FALSE(aff.semisimple);
  EXPECT_FALSE(aff.nondegenerate);
  EXPECT_TRUE(aff.equivalent);
  EXPECT_EQ(rank(killing_form(builtin_aff2(q).algebra).gram), 1u);
  const SemisimplicityReport fsl = cartan_semisimplicity(builtin_fsl2(Field::prime(2)));
  EXPECT_TRUE(fsl.semisimple);
  EXPECT_FALSE(fsl.nondegenerate);
  EXPECT_FALSE(fsl.equivalent);
  for (const auto& L : catalog(q)) EXPECT_TRUE(cartan_semisimplicity(L).equivalent);
}
