#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tdga/errors.hpp"
#include "tdga/twisted_algebra.hpp"

namespace tdga {
namespace {

AlgebraParams proposed(std::uint64_t q) {
  const FieldParams f(q);
  std::uint64_t l = 2;
  while (is_square(FieldElement(f, l))) ++l;
  return AlgebraParams(q, q, l);
}

const std::vector<AlgebraParams>& parameter_sets() {
  static const std::vector<AlgebraParams> sets{AlgebraParams(19, 19, 18), AlgebraParams(23, 23, 11), proposed(31),
                                               AlgebraParams(41, 41, 29), AlgebraParams(3, 3, 2),
                                               AlgebraParams(5, 10, 2)};
  return sets;
}

AlgebraElement y_elem(const AlgebraParams& p) { return AlgebraElement::basis(p, {0, true}); }

TEST(AlgebraParams, ValidatesInvariants) {
  EXPECT_THROW(AlgebraParams(19, 18, 18), std::invalid_argument);  // 19 does not divide 36
  EXPECT_THROW(AlgebraParams(19, 19, 4), std::invalid_argument);   // square
  EXPECT_THROW(AlgebraParams(19, 19, 0), std::invalid_argument);
  EXPECT_THROW(AlgebraParams(21, 21, 2), std::invalid_argument);
  EXPECT_NO_THROW(AlgebraParams(5, 10, 2));
}

TEST(Dihedral, ProductRules) {
  const std::size_t n = 7;
  EXPECT_EQ(group_mul(n, {1, false}, {n - 1, false}), (GroupElement{0, false}));
  EXPECT_EQ(group_mul(n, {0, true}, {0, true}), (GroupElement{0, false}));
  // x^2 y * x^3 = x^2 (y x^3) = x^2 x^-3 y = x^4 y in D_10.
  EXPECT_EQ(group_mul(5, {2, true}, {3, false}), (GroupElement{4, true}));
  EXPECT_EQ(group_mul(5, {2, false}, {3, true}), (GroupElement{0, true}));
  EXPECT_EQ(group_mul(5, {2, true}, {3, true}), (GroupElement{4, false}));
  EXPECT_THROW(group_mul(5, {5, false}, {0, false}), ParameterMismatch);
}

TEST(Dihedral, GroupAxiomsExhaustive) {
  for (std::size_t n : {1u, 2u, 5u, 6u}) {
    const auto elems = group_elements(n);
    ASSERT_EQ(elems.size(), 2 * n);
    for (const auto& g : elems) {
      EXPECT_EQ(group_mul(n, g, group_inv(n, g)), (GroupElement{0, false}));
      EXPECT_EQ(group_mul(n, {0, false}, g), g);
      for (const auto& h : elems) {
        for (const auto& k : elems) {
          EXPECT_EQ(group_mul(n, group_mul(n, g, h), k), group_mul(n, g, group_mul(n, h, k)));
        }
      }
    }
    // y x y^-1 = x^-1
    if (n > 1) {
      const auto yxy = group_mul(n, group_mul(n, {0, true}, {1, false}), group_inv(n, {0, true}));
      EXPECT_EQ(yxy, group_inv(n, {1, false}));
    }
  }
}

TEST(Cocycle, Values) {
  const AlgebraParams p(19, 19, 18);
  EXPECT_EQ(cocycle(p, {2, false}, {3, true}).value(), 1u);
  EXPECT_EQ(cocycle(p, {0, true}, {0, true}).value(), 18u);
  EXPECT_EQ(cocycle(p, {0, false}, {0, false}).value(), 1u);
  EXPECT_EQ(cocycle(p, {4, true}, {7, true}).value(), 18u);
}

TEST(Cocycle, VerifiesForProposedParameters) {
  for (const auto& p : {AlgebraParams(19, 19, 18), AlgebraParams(23, 23, 11)}) {
    const auto report = verify_cocycle(p);
    EXPECT_TRUE(report.ok());
    EXPECT_FALSE(report.identity_violation.has_value());
  }
}

TEST(Cocycle, ConstantLambdaMapFailsOnlyNormalization) {
  // Replacing the "otherwise" branch by lambda yields a constant map: the
  // product identity still holds (lambda^2 on both sides), alpha(1, 1) != 1.
  const AlgebraParams p(19, 19, 18);
  const auto report = verify_cocycle(p, [&](GroupElement, GroupElement) { return p.lambda(); });
  EXPECT_FALSE(report.ok());
  EXPECT_FALSE(report.normalized);
  EXPECT_TRUE(report.identity);
}

TEST(Cocycle, BrokenCandidateIsCaughtWithWitness) {
  // lambda whenever the left factor is a reflection.
  const AlgebraParams p(23, 23, 11);
  const CocycleFn broken = [&](GroupElement g, GroupElement) {
    return g.reflection ? p.lambda() : FieldElement::one(p.field());
  };
  const auto report = verify_cocycle(p, broken);
  EXPECT_FALSE(report.identity);
  ASSERT_TRUE(report.identity_violation.has_value());
  const auto [g, h, k] = *report.identity_violation;
  const std::size_t n = p.n();
  EXPECT_NE(broken(g, group_mul(n, h, k)) * broken(h, k), broken(group_mul(n, g, h), k) * broken(g, h));
}

TEST(Cocycle, SizeGuard) {
  const AlgebraParams big(257, 257, 3);
  EXPECT_THROW(verify_cocycle(big), std::length_error);
}

TEST(AlgMul, IdentityAndReflectionSquare) {
  for (const auto& p : parameter_sets()) {
    Rng rng(p.q());
    const auto v = sample_algebra_element(p, rng);
    EXPECT_EQ(alg_mul(AlgebraElement::one(p), v), v);
    EXPECT_EQ(alg_mul(v, AlgebraElement::one(p)), v);
    EXPECT_EQ(alg_mul(y_elem(p), y_elem(p)), scalar_mul(p.lambda(), AlgebraElement::one(p)));
  }
}

TEST(AlgMul, MatchesBasisExpansion) {
  for (const auto& p : parameter_sets()) {
    Rng rng(1000 + p.q());
    for (int i = 0; i < 100; ++i) {
      const auto u = sample_algebra_element(p, rng);
      const auto v = sample_algebra_element(p, rng);
      ASSERT_EQ(alg_mul(u, v), oracle::basis_expansion_mul(u, v));
    }
  }
}

TEST(AlgMul, ParameterMismatchThrows) {
  const AlgebraParams a(19, 19, 18), b(19, 19, 2), c(23, 23, 11);
  EXPECT_THROW(alg_mul(AlgebraElement::one(a), AlgebraElement::one(b)), ParameterMismatch);
  EXPECT_THROW(alg_add(AlgebraElement::one(a), AlgebraElement::one(c)), ParameterMismatch);
}

TEST(AlgMul, StructuralProperties) {
  for (const auto& p : parameter_sets()) {
    Rng rng(2000 + p.q());
    for (int i = 0; i < 100; ++i) {
      const auto u = sample_algebra_element(p, rng);
      const auto v = sample_algebra_element(p, rng);
      const auto w = sample_algebra_element(p, rng);
      ASSERT_EQ(alg_mul(alg_mul(u, v), w), alg_mul(u, alg_mul(v, w)));

      const auto a = sample_rotation(p, rng);
      const auto b = sample_rotation(p, rng);
      ASSERT_EQ(alg_mul(a, b), alg_mul(b, a));

      const auto t1 = sample_reversible(p, rng);
      const auto t2 = sample_reversible(p, rng);
      ASSERT_EQ(alg_mul(t1, adjunct(t2)), alg_mul(t2, adjunct(t1)));

      ASSERT_TRUE(alg_mul(t1, t2).in_rotation_part());
      ASSERT_TRUE(alg_mul(psi(t1), t2).in_reflection_part());
      ASSERT_TRUE(alg_mul(t1, psi(t2)).in_reflection_part());
      ASSERT_TRUE(adjunct(a).in_rotation_part());
      ASSERT_TRUE(adjunct(t1).in_reflection_part());
    }
  }
}

TEST(AlgAdd, Componentwise) {
  const AlgebraParams p(19, 19, 18);
  Rng rng(3);
  const auto u = sample_algebra_element(p, rng);
  EXPECT_EQ(u + AlgebraElement(p), u);
  EXPECT_TRUE((u + scalar_mul(p.element(18), u)).is_zero());
  const auto sum = AlgebraElement::one(p) + y_elem(p);
  EXPECT_EQ(sum.avec()[0].value(), 1u);
  EXPECT_EQ(sum.bvec()[0].value(), 1u);
  EXPECT_EQ(u - u, AlgebraElement(p));
}

TEST(Adjunct, ClosedFormMatchesDefinition) {
  for (const auto& p : parameter_sets()) {
    Rng rng(3000 + p.q());
    for (int i = 0; i < 100; ++i) {
      const auto u = sample_algebra_element(p, rng);
      ASSERT_EQ(adjunct(u), oracle::adjunct_by_definition(u));
    }
    EXPECT_EQ(adjunct(AlgebraElement::one(p)), AlgebraElement::one(p));
    for (std::size_t i = 0; i < p.n(); ++i) {
      EXPECT_EQ(adjunct(AlgebraElement::basis(p, {i, false})), AlgebraElement::basis(p, {(p.n() - i) % p.n(), false}));
    }
  }
}

TEST(Adjunct, PureReflectionScalesByLambda) {
  const AlgebraParams p(19, 19, 18);
  Rng rng(4);
  auto b = sample_reversible(p, rng);
  b.set_coefficient({3, true}, p.element(5));  // not reversible any more; adjunct does not care
  const auto adj = adjunct(b);
  EXPECT_TRUE(adj.in_reflection_part());
  for (std::size_t i = 0; i < p.n(); ++i) EXPECT_EQ(adj.bvec()[i], b.bvec()[i] * p.element(18));
  EXPECT_EQ(adj, oracle::adjunct_by_definition(b));
}

TEST(Psi, MovesHalves) {
  const AlgebraParams p(19, 19, 18);
  EXPECT_EQ(psi(y_elem(p)), AlgebraElement::one(p));
  Rng rng(5);
  auto t = sample_reversible(p, rng);
  t.set_coefficient({1, true}, p.element(7));
  const auto pt = psi(t);
  EXPECT_TRUE(pt.in_rotation_part());
  for (std::size_t i = 0; i < p.n(); ++i) EXPECT_EQ(pt.avec()[i], t.bvec()[i]);
  EXPECT_EQ(psi_inv(pt), t);
  EXPECT_THROW(psi(AlgebraElement::one(p)), SupportViolation);
  EXPECT_THROW(psi_inv(y_elem(p)), SupportViolation);
}

TEST(Psi, LinearAndMutuallyInverse) {
  const AlgebraParams p(23, 23, 11);
  Rng rng(6);
  for (int i = 0; i < 200; ++i) {
    const auto a = psi_inv(sample_rotation(p, rng));
    const auto b = psi_inv(sample_rotation(p, rng));
    const auto c = sample_element(p.field(), rng);
    EXPECT_EQ(psi(a + scalar_mul(c, b)), psi(a) + scalar_mul(c, psi(b)));
    EXPECT_EQ(psi_inv(psi(a)), a);
  }
}

TEST(Reversible, Membership) {
  const auto ex = fixture::load("instance_q23.txt");
  const AlgebraParams& p = ex.algebra;
  EXPECT_TRUE(is_reversible(y_elem(p)));
  EXPECT_TRUE(is_reversible(ex.t));
  EXPECT_TRUE(is_reversible(ex.t_tilde));
  EXPECT_FALSE(is_reversible(AlgebraElement::basis(p, {1, true})));
  EXPECT_FALSE(is_reversible(AlgebraElement::one(p)));
  EXPECT_FALSE(is_reversible(ex.h));
}

TEST(Reversible, SamplerDrawsHalfPlusOneCoefficients) {
  const AlgebraParams p(19, 19, 18);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng a(seed), b(seed);
    const auto t = sample_reversible(p, a);
    EXPECT_TRUE(is_reversible(t));
    for (std::size_t i = 0; i <= 9; ++i) EXPECT_EQ(t.bvec()[i], sample_element(p.field(), b));
    EXPECT_EQ(a.next(), b.next());  // exactly 10 draws were consumed
    Rng c(seed);
    EXPECT_EQ(sample_reversible(p, c), t);
  }
  const AlgebraParams even(5, 10, 2);
  Rng rng(9);
  for (int i = 0; i < 100; ++i) EXPECT_TRUE(is_reversible(sample_reversible(even, rng)));
}

TEST(Star, ReflectionUnitGivesLambdaSquared) {
  // y * adjunct(y) = y * (lambda y) = lambda * alpha(y, y) = lambda^2.
  const AlgebraParams p(19, 19, 18);
  const auto one = AlgebraElement::one(p);
  EXPECT_EQ(star(one, one), scalar_mul(p.lambda() * p.lambda(), one));
  EXPECT_EQ(star(one, one), oracle::basis_expansion_mul(y_elem(p), oracle::adjunct_by_definition(y_elem(p))));
}

TEST(Star, CommutativeAssociativeClosedWithIdentity) {
  for (const auto& p : parameter_sets()) {
    Rng rng(4000 + p.q());
    const FieldElement l = p.lambda();
    const auto unit = scalar_mul(inv(l * l), AlgebraElement::one(p));
    for (int i = 0; i < 100; ++i) {
      const auto a = psi(sample_reversible(p, rng));
      const auto b = psi(sample_reversible(p, rng));
      const auto c = psi(sample_reversible(p, rng));
      const auto ab = star(a, b);
      ASSERT_EQ(ab, star(b, a));
      ASSERT_TRUE(is_reversible(psi_inv(ab)));
      ASSERT_EQ(star(ab, c), star(a, star(b, c)));
      ASSERT_EQ(ab, oracle::basis_expansion_mul(psi_inv(a), oracle::adjunct_by_definition(psi_inv(b))));
      ASSERT_EQ(star(a, unit), a);
    }
  }
}

TEST(Star, RejectsInputsOutsideDomain) {
  const AlgebraParams p(19, 19, 18);
  EXPECT_THROW(star(y_elem(p), AlgebraElement::one(p)), SupportViolation);
  EXPECT_THROW(star(AlgebraElement::basis(p, {1, false}), AlgebraElement::one(p)), SupportViolation);
}

TEST(Act, TwoSidedMultiplication) {
  const AlgebraParams p(19, 19, 18);
  Rng rng(8);
  const auto h = sample_algebra_element(p, rng);
  EXPECT_EQ(act(AlgebraElement::one(p), y_elem(p), h), alg_mul(h, y_elem(p)));
  const auto s = sample_rotation(p, rng);
  const auto t = sample_reversible(p, rng);
  EXPECT_EQ(act(s, t, h), oracle::basis_expansion_mul(oracle::basis_expansion_mul(s, h), t));
  EXPECT_THROW(act(h, t, h), SupportViolation);
  EXPECT_THROW(act(s, AlgebraElement::basis(p, {1, true}), h), SupportViolation);
}

TEST(Act, CompositionFactorsThroughStar) {
  // Acting twice multiplies h on the right by t' t = lambda^-1 star(psi t, psi t'),
  // an element of F_q^alpha C_n; the s parts compose by multiplication.
  for (const auto& p : parameter_sets()) {
    Rng rng(5000 + p.q());
    const FieldElement l_inv = inv(p.lambda());
    std::size_t two_sided_form_holds = 0;
    for (int i = 0; i < 100; ++i) {
      const auto h = sample_algebra_element(p, rng);
      const auto s1 = sample_rotation(p, rng), s2 = sample_rotation(p, rng);
      const auto t1 = sample_reversible(p, rng), t2 = sample_reversible(p, rng);
      const auto twice = act(s1, t1, act(s2, t2, h));
      const auto st = star(psi(t1), psi(t2));
      ASSERT_EQ(twice, alg_mul(alg_mul(alg_mul(s1, s2), h), scalar_mul(l_inv, st)));
      if (twice == act(alg_mul(s1, s2), psi_inv(st), h)) ++two_sided_form_holds;
    }
    // Writing the composite as a single s h t acting pair fails on generic inputs.
    if (p.q() >= 19) EXPECT_EQ(two_sided_form_holds, 0u) << "q=" << p.q();
  }
}

}  // namespace
}  // namespace tdga
