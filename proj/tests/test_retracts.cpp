#include <gtest/gtest.h>

#include "oracles.hpp"
#include "retractkit/random.hpp"
#include "retractkit/retracts.hpp"

using namespace retractkit;

namespace {

CommPoly C(const char* text) { return parse<CommPoly>(text); }
NCPoly N(const char* text) { return parse<NCPoly>(text); }
UniPoly U(const char* text) { return parse_uni(text); }

// Monic with zero constant term: the normalization of decompose_inner.
template <class P>
P normalized(const P& r) {
  return (1 / r.leading_coefficient()) * (r - P(r.constant_term()));
}

}  // namespace

TEST(Membership, Examples) {
  EXPECT_EQ(*membership(C("x^2 + 2*x + 5"), C("x")), U("t^2 + 2*t + 5"));
  EXPECT_EQ(*membership(C("(x + x*y)^3 - (x + x*y)"), C("x + x*y")), U("t^3 - t"));
  EXPECT_FALSE(membership(C("x^2 + y"), C("x")));
  EXPECT_EQ(*membership(N("(x*y - y*x)^2 + 3"), N("x*y - y*x")), U("t^2 + 3"));
  EXPECT_FALSE(membership(N("x*y*x*y + 1"), N("y*x")));
  EXPECT_THROW(membership(C("x"), C("4")), ConstantGenerator);
  EXPECT_EQ(*membership(CommPoly(), C("x*y")), UniPoly());
}

TEST(DecomposeInner, Examples) {
  const auto d = decompose_inner(C("x^4 + 2*x^2*y + y^2"), 2);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->inner, C("x^2 + y"));
  EXPECT_EQ(d->outer, U("t^2"));
  EXPECT_FALSE(decompose_inner(C("x^2 + y"), 1));
  const auto whole = decompose_inner(C("3*x*y - 2*y + 7"), 2);
  ASSERT_TRUE(whole);
  EXPECT_EQ(whole->inner, C("x*y - 2/3*y"));
  EXPECT_EQ(whole->outer, U("3*t + 7"));
  EXPECT_THROW(decompose_inner(C("x^3 + y"), 2), InvalidDegree);
  EXPECT_THROW(decompose_inner(C("5"), 1), PreconditionViolated);
}

TEST(DecomposeInner, Noncommutative) {
  const NCPoly r = N("x*y + y^2*x - 2*x + y");
  const NCPoly p = eval_uni(U("2*t^3 - t + 1"), r);
  const auto d = decompose_inner(p, 3);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->inner, normalized(r));
  EXPECT_EQ(eval_uni(d->outer, d->inner), p);
  EXPECT_FALSE(decompose_inner(N("x*y*x*y + y*x"), 2));
}

TEST(DecomposeInner, HomogeneousRoots) {
  EXPECT_EQ(*homogeneous_root(C("4*x^2 + 4*x*y + y^2"), 2), C("x + 1/2*y"));
  EXPECT_FALSE(homogeneous_root(C("x^2 + y^2"), 2));
  EXPECT_EQ(*homogeneous_root(N("(x*y - y*x)^3"), 3), N("x*y - y*x"));
  EXPECT_FALSE(homogeneous_root(N("x*y*y*x"), 2));
}

class RoundTrip : public ::testing::TestWithParam<int> {};

TEST_P(RoundTrip, MembershipAndDecomposition) {
  Rng rng(static_cast<std::uint64_t>(GetParam()));
  for (int i = 0; i < 40; ++i) {
    const UniPoly f = random_uni(rng, static_cast<unsigned>(rng.uniform(1, 4)), 4);
    const CommPoly r = random_poly<CommPoly>(rng, static_cast<unsigned>(rng.uniform(1, 4)), 5, 4);
    const CommPoly p = eval_uni(f, r);
    EXPECT_EQ(*membership(p, r), f);
    const auto d = decompose_inner(p, deg(r));
    ASSERT_TRUE(d) << print(r) << " " << print_uni(f);
    EXPECT_EQ(d->inner, normalized(r));
    EXPECT_EQ(eval_uni(d->outer, d->inner), p);

    const NCPoly s = random_poly<NCPoly>(rng, static_cast<unsigned>(rng.uniform(1, 3)), 4, 4);
    const NCPoly q = eval_uni(f, s);
    EXPECT_EQ(*membership(q, s), f);
    const auto e = decompose_inner(q, deg(s));
    ASSERT_TRUE(e) << print(s) << " " << print_uni(f);
    EXPECT_EQ(e->inner, normalized(s));
    EXPECT_EQ(eval_uni(e->outer, e->inner), q);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RoundTrip, ::testing::Values(1, 2, 3));

TEST(VerifyRetraction, Examples) {
  const auto cert = verify_retraction(CommEndo(C("x + x*y"), C("0")));
  EXPECT_EQ(cert.generator, C("x*y + x"));
  EXPECT_THROW(verify_retraction(CommEndo::identity()), IdentityImproper);
  EXPECT_THROW(verify_retraction(CommEndo(C("-x"), C("0"))), NotIdempotent);
  const auto nc = verify_retraction(NCEndo(N("x + x*y - y*x"), N("0")));
  EXPECT_EQ(nc.generator, N("x + x*y - y*x"));
  const auto onto_k = verify_retraction(CommEndo(C("2"), C("-1")));
  EXPECT_TRUE(onto_k.generator.is_zero());
}

TEST(VerifyRetraction, ConjugatedProjections) {
  // pi = (x*y, 1): image K[x*y]; a conjugate by a triangular map.
  const auto cert = verify_retraction(CommEndo(C("x*y"), C("1")));
  EXPECT_EQ(cert.generator, C("x*y"));
  const CommEndo alpha(C("x"), C("y + x^2"));
  const CommEndo alpha_inv(C("x"), C("y - x^2"));
  const auto pi = compose(alpha_inv, compose(CommEndo(C("x"), C("0")), alpha));
  const auto c = verify_retraction(pi);
  EXPECT_TRUE(membership(pi.x_image(), c.generator));
  EXPECT_TRUE(membership(pi.y_image(), c.generator));
  EXPECT_EQ(pi(c.generator), c.generator);
}

TEST(FindRetractionPower, Examples) {
  auto cert = find_retraction_power(CommEndo(C("x*y"), C("1")), C("x*y"));
  EXPECT_EQ(cert.power, 1U);
  EXPECT_EQ(cert.pi, CommEndo(C("x*y"), C("1")));
  EXPECT_EQ(cert.generator, C("x*y"));
  cert = find_retraction_power(CommEndo(C("-x"), C("0")), C("x^2"));
  EXPECT_EQ(cert.power, 2U);
  EXPECT_EQ(cert.pi, CommEndo(C("x"), C("0")));
  EXPECT_EQ(cert.generator, C("x"));
  EXPECT_EQ(find_retraction_power(CommEndo(C("x"), C("0")), C("x")).power, 1U);
  EXPECT_THROW(find_retraction_power(CommEndo(C("y"), C("x")), C("x*y")), PreconditionViolated);
  EXPECT_THROW(find_retraction_power(CommEndo(C("x"), C("0")), C("y")), PreconditionViolated);
  // x -> 2x never becomes idempotent, but y -> 0 makes it non-injective.
  EXPECT_THROW(find_retraction_power(CommEndo(C("2*x"), C("0")), C("0")), PreconditionViolated);
}

TEST(FindRetractionPower, BoundExhausted) {
  // (x -> -x, y -> 0) fixes x^2 and needs m = 2.
  EXPECT_THROW(find_retraction_power(CommEndo(C("-x"), C("0")), C("x^2"), 1), NotFoundWithinBound);
}

TEST(SearchRetraction, Examples) {
  auto s = search_retraction_for(C("x*y"), 6);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->a, U("t"));
  EXPECT_EQ(s->b, U("1"));
  EXPECT_EQ(s->certificate.pi, CommEndo(C("x*y"), C("1")));
  s = search_retraction_for(C("x"), 6);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->a, U("t"));
  EXPECT_EQ(s->b, UniPoly());
  EXPECT_FALSE(search_retraction_for(C("x^2 + y^3"), 6));
  EXPECT_FALSE(search_retraction_for(C("x^2 + y^2"), 6));
  EXPECT_THROW(search_retraction_for(C("1"), 3), ConstantGenerator);
}

TEST(SearchRetraction, NeedsElementaryMoves) {
  // No solution with a constant coordinate; (A, B) = (t^2, t) is found
  // through the move x -> x + y^2.
  const CommPoly r = C("y + (x - y^2)^2");
  const auto s = search_retraction_for(r, 6);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->a, U("t^2"));
  EXPECT_EQ(s->b, U("t"));
  EXPECT_TRUE(is_idempotent(s->certificate.pi));
  EXPECT_FALSE(search_retraction_for(r, 1));
}

TEST(SearchRetraction, AgreesWithBruteForce) {
  // Brute force over A, B with coefficients in {-1, 0, 1} and degree <= 2.
  std::vector<UniPoly> small;
  for (int a0 = -1; a0 <= 1; ++a0) {
    for (int a1 = -1; a1 <= 1; ++a1) {
      for (int a2 = -1; a2 <= 1; ++a2) small.push_back(UniPoly(std::vector<Scalar>{a0, a1, a2}));
    }
  }
  Rng rng(23);
  for (int i = 0; i < 60; ++i) {
    const CommPoly r = random_poly<CommPoly>(rng, static_cast<unsigned>(rng.uniform(1, 3)), 3, 1);
    bool brute = false;
    for (const auto& a : small) {
      for (const auto& b : small) brute = brute || substitute_univariate(r, a, b) == UniPoly::t();
    }
    const auto found = search_retraction_for(r, 2);
    if (brute) EXPECT_TRUE(found) << print(r);
    if (found) EXPECT_EQ(substitute_univariate(r, found->a, found->b), UniPoly::t());
  }
}

TEST(SearchRetraction, Noncommutative) {
  const auto s = search_retraction_for(N("x + x*y - y*x"), 4);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->certificate.pi, NCEndo(N("x + x*y - y*x"), N("0")));
}

TEST(CanonicalForm, Examples) {
  auto c = canonical_form_check(C("x + x*y"));
  EXPECT_TRUE(c.canonical);
  EXPECT_EQ(c.w, C("x*y"));
  EXPECT_FALSE(canonical_form_check(C("x + x^2")).canonical);
  auto n = canonical_form_check(N("x + x*y - y*x"));
  EXPECT_TRUE(n.canonical);
  EXPECT_EQ(n.w, N("x*y - y*x"));
}

TEST(CanonicalForm, ImpliesProjectionSolves) {
  Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    const CommPoly w = C("y") * random_poly<CommPoly>(rng, static_cast<unsigned>(rng.uniform(0, 3)), 4, 3);
    const CommPoly r = CommPoly::x() + w;
    ASSERT_TRUE(canonical_form_check(r).canonical);
    EXPECT_EQ(substitute_univariate(r, UniPoly::t(), UniPoly()), UniPoly::t());
    const auto s = search_retraction_for(r, 3);
    ASSERT_TRUE(s) << print(r);
    EXPECT_FALSE(s->certificate.pi == CommEndo::identity());
  }
}
