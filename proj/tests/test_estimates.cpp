#include <gtest/gtest.h>

#include "retractkit/estimates.hpp"

using namespace retractkit;

namespace {

CommPoly C(const char* text) { return parse<CommPoly>(text); }
NCPoly N(const char* text) { return parse<NCPoly>(text); }

using CommKind = OrankWitness<CommMonomial>::Kind;
using NCKind = OrankWitness<Word>::Kind;

}  // namespace

TEST(OrankWitness, Examples) {
  const auto mixed = orank_witness(C("x*y"));
  EXPECT_EQ(mixed.kind, CommKind::mixed_monomial);
  EXPECT_EQ(mixed.mixed, (CommMonomial{1, 1}));
  const auto pure = orank_witness(C("x^2 + y^2"));
  EXPECT_EQ(pure.kind, CommKind::pure_powers);
  EXPECT_EQ(pure.x_power, 2U);
  EXPECT_EQ(pure.y_power, 2U);
  EXPECT_EQ(orank_witness(C("x + y")).kind, CommKind::none);
  EXPECT_EQ(orank_witness(N("x^3 + y")).kind, NCKind::none);
  EXPECT_EQ(orank_witness(N("y*x + x^5")).kind, NCKind::mixed_monomial);
  EXPECT_THROW(orank_witness(CommPoly()), DegreeOfZero);
}

TEST(OrankWitness, ImpliesWeightedBound) {
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const CommPoly p = random_poly<CommPoly>(rng, static_cast<unsigned>(rng.uniform(1, 6)), 5, 3);
    if (orank_witness(p).kind == CommKind::none) continue;
    for (unsigned a = 1; a <= 10; ++a) {
      for (unsigned b = 1; b <= 10; ++b) EXPECT_GE(wdeg(p, WeightPair(a, b)), a + b) << print(p);
    }
  }
}

TEST(BoundNoncomm, Examples) {
  auto r = bound_noncomm(N("x + y^2"), N("y + x^2"), N("x*y"));
  EXPECT_EQ(r.lower_bound, 4);
  EXPECT_EQ(r.actual_degree, 4U);
  EXPECT_TRUE(r.satisfied);
  EXPECT_FALSE(r.strictly_satisfied);
  r = bound_noncomm(N("x"), N("y"), N("x*y"));
  EXPECT_EQ(r.lower_bound, 2);
  EXPECT_EQ(r.actual_degree, 2U);
  EXPECT_THROW(bound_noncomm(N("x"), N("x^2 + y"), N("x*y")), PreconditionViolated);
  EXPECT_THROW(bound_noncomm(N("x^2"), N("x^3"), N("x*y")), PreconditionViolated);
}

TEST(BoundNoncomm, DependentNondivisibleCase) {
  // Leading forms x^2 and x^3 commute; 2 and 3 are mutually non-divisible.
  const auto r = bound_noncomm(N("x^2 + y"), N("x^3"), N("x*y"));
  EXPECT_EQ(r.precondition_case, PreconditionCase::dependent_nondivisible);
  EXPECT_TRUE(r.satisfied);
  // [f, g] = y*x^3 - x^3*y has degree 4: bound 4/5 * wdeg(xy, (2, 3)) = 4.
  EXPECT_EQ(r.lower_bound, 4);
}

TEST(BoundComm, Examples) {
  auto r = bound_comm(C("x"), C("y"), C("x^3 + x*y^2 + 7"));
  EXPECT_EQ(r.lower_bound, 3);
  EXPECT_EQ(r.actual_degree, 3U);
  r = bound_comm(C("x^2"), C("y^3"), C("x*y"));
  EXPECT_EQ(r.lower_bound, 5);
  EXPECT_EQ(r.actual_degree, 5U);
  r = bound_comm(C("x"), C("x + y^2"), C("y"));
  EXPECT_EQ(r.lower_bound, 2);
  EXPECT_EQ(r.actual_degree, 2U);
  EXPECT_THROW(bound_comm(C("x + y"), C("(x + y)^2"), C("x")), PreconditionViolated);
}

TEST(BoundComm, RationalBound) {
  // m = 2, n = 4, J = d(x^2+y)/dx * 4y^3 - 1 * 0 = 8*x*y^3, deg 4; gcd 2:
  // w * (1 - 2 * (6 - 4 - 2) / 8) = w.
  auto r = bound_comm(C("x^2 + y"), C("y^4"), C("x*y"));
  EXPECT_EQ(r.lower_bound, 6);
  // m = 3, n = 2, J of (x^3 + y, x^2): -2x, deg 1; gcd 1:
  // wdeg(xy, (3, 2)) = 5, bound 5 * (1 - (5 - 1 - 2) / 6) = 10/3.
  r = bound_comm(C("x^3 + y"), C("x^2"), C("x*y"));
  EXPECT_EQ(r.lower_bound, make_scalar(10, 3));
  EXPECT_EQ(r.actual_degree, 5U);
}

TEST(CorollaryBounds, CommutatorExamples) {
  auto r = check_commutator_bound(N("x + y^2"), N("y + x^2"), N("x*y"));
  EXPECT_EQ(r.lower_bound, 4);
  EXPECT_EQ(r.actual_degree, 4U);
  EXPECT_FALSE(r.strict);
  r = check_commutator_bound(N("x"), N("y"), N("x*y*x*y"));
  EXPECT_TRUE(r.strict);
  EXPECT_TRUE(r.strictly_satisfied);
  EXPECT_EQ(r.actual_degree, 4U);
  r = check_commutator_bound(N("x + y^2"), N("y + x^2"), N("x*y*x*y"));
  EXPECT_TRUE(r.strict);
  EXPECT_EQ(r.actual_degree, 8U);
  EXPECT_EQ(r.lower_bound, 4);
  EXPECT_FALSE(r.violation());
  EXPECT_THROW(check_commutator_bound(N("x"), N("y"), N("x + y")), PreconditionViolated);
}

TEST(CorollaryBounds, JacobianExamples) {
  auto r = check_jacobian_bound(C("x^2"), C("y^3"), C("x*y"));
  EXPECT_EQ(r.lower_bound, 5);
  EXPECT_EQ(r.actual_degree, 5U);
  r = check_jacobian_bound(C("x"), C("y"), C("x*y"));
  EXPECT_EQ(r.lower_bound, 2);
  r = check_jacobian_bound(C("x"), C("x + y^2"), C("x*y"));
  EXPECT_EQ(r.actual_degree, 3U);
  EXPECT_EQ(r.lower_bound, 3);
}

TEST(CorollaryBounds, ReductionCanDestroyTheWitness) {
  // p = (x+y)^2 carries a mixed monomial, but f + g = x, so p(f, g) = x^2.
  const auto r = check_jacobian_bound(C("x + y^2"), C("-y^2"), C("(x + y)^2"));
  EXPECT_EQ(r.actual_degree, 2U);
  EXPECT_EQ(r.lower_bound, 3);
  EXPECT_FALSE(r.satisfied);
  EXPECT_EQ(r.precondition_case, PreconditionCase::reduced);
  EXPECT_EQ(r.reduction_steps, 1U);
  EXPECT_FALSE(r.guaranteed);
  EXPECT_FALSE(r.violation());
  const auto n = check_commutator_bound(N("x + y^2"), N("-y^2"), N("(x + y)^2"));
  EXPECT_FALSE(n.satisfied);
  EXPECT_FALSE(n.guaranteed);
}

TEST(CorollaryBounds, ReducedPairsWithWitnessHold) {
  // f = x + y^2 reduces by g = y^2 to x; p = x*y stays mixed.
  const auto r = check_commutator_bound(N("x + y^2"), N("y^2"), N("x*y"));
  EXPECT_EQ(r.precondition_case, PreconditionCase::reduced);
  EXPECT_TRUE(r.guaranteed);
  EXPECT_TRUE(r.satisfied);
}

TEST(StrictHypothesis, Examples) {
  EXPECT_TRUE(strict_hypothesis(N("x*y*x*y")));
  EXPECT_FALSE(strict_hypothesis(N("x*y")));
  EXPECT_FALSE(strict_hypothesis(N("x*y*x + x")));
}

TEST(StrictHypothesis, ImpliesStrictCommutatorBound) {
  Rng rng(5);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const NCPoly f = random_poly<NCPoly>(rng, static_cast<unsigned>(rng.uniform(1, 3)), 3, 3);
    const NCPoly g = random_poly<NCPoly>(rng, static_cast<unsigned>(rng.uniform(1, 3)), 3, 3);
    if (commutator(f, g).is_zero()) continue;
    NCPoly p = random_homogeneous<NCPoly>(rng, 3, 3, 3);
    if (!strict_hypothesis(p)) continue;
    const auto r = check_commutator_bound(f, g, p);
    if (!r.guaranteed) continue;
    ++checked;
    EXPECT_TRUE(r.strictly_satisfied) << print(f) << " | " << print(g) << " | " << print(p);
  }
  EXPECT_GT(checked, 10);
}

TEST(Growth, NoncommExamples) {
  auto r = growth_noncomm(NCEndo(N("x"), N("y + x*y*x")), 3);
  ASSERT_EQ(r.points.size(), 4U);
  EXPECT_EQ(r.points[0].degree, 2U);
  EXPECT_EQ(r.points[1].degree, 4U);
  EXPECT_TRUE(r.satisfied);
  EXPECT_TRUE(r.strictly_increasing);
  r = growth_noncomm(NCEndo(N("x^2"), N("y")), 1);
  EXPECT_EQ(r.points[1].degree, 3U);
  EXPECT_THROW(growth_noncomm(NCEndo(N("y"), N("x")), 2), PreconditionViolated);
  EXPECT_THROW(growth_noncomm(NCEndo(N("x^2"), N("x^3")), 2), PreconditionViolated);
}

TEST(Growth, CommExamples) {
  const auto r = growth_comm(CommEndo(C("x"), C("y^2")), C("x"), 4);
  std::vector<unsigned> degrees;
  for (const auto& pt : r.points) degrees.push_back(pt.degree);
  EXPECT_EQ(degrees, (std::vector<unsigned>{0, 1, 3, 7, 15}));
  EXPECT_TRUE(r.satisfied);
  EXPECT_THROW(growth_comm(CommEndo(C("x"), C("y^2")), C("y"), 2), PreconditionViolated);
  EXPECT_THROW(growth_comm(CommEndo(C("x"), C("y + x")), C("x"), 2), PreconditionViolated);
  EXPECT_THROW(growth_comm(CommEndo(C("x"), C("y^2")), C("3"), 2), PreconditionViolated);
}

TEST(Fuzz, SmallRunsAreClean) {
  FuzzConfig config;
  config.seed = 3;
  config.trials = 60;
  const auto nc = fuzz_estimates<NCPoly>(config);
  EXPECT_EQ(nc.accepted, 60U);
  EXPECT_EQ(nc.violations, 0U);
  const auto c = fuzz_estimates<CommPoly>(config);
  EXPECT_EQ(c.violations, 0U);
  EXPECT_GT(c.corollary_checks, 0U);
}

TEST(Fuzz, DeterministicInSeed) {
  FuzzConfig config;
  config.seed = 8;
  config.trials = 25;
  const auto a = fuzz_estimates<CommPoly>(config);
  const auto b = fuzz_estimates<CommPoly>(config);
  EXPECT_EQ(a.precondition_rejections, b.precondition_rejections);
  EXPECT_EQ(a.equality_cases, b.equality_cases);
  EXPECT_EQ(a.cost_redraws, b.cost_redraws);
}

TEST(Fuzz, CorruptedBoundIsDetected) {
  FuzzConfig config;
  config.seed = 1;
  config.trials = 10;
  config.corrupt_bound = true;
  EXPECT_EQ(fuzz_estimates<NCPoly>(config).violations, 10U);
}
