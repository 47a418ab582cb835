#pragma once

#include <optional>
#include <vector>

#include "retractkit/endo.hpp"

namespace retractkit {

class NotIdempotent : public Error {
 public:
  NotIdempotent() : Error("endomorphism is not idempotent") {}
};

class IdentityImproper : public Error {
 public:
  IdentityImproper() : Error("the identity is not a proper retraction") {}
};

// p = eval_uni(outer, inner), inner monic with zero constant term.
template <class P>
struct DecompositionResult {
  P inner;
  UniPoly outer;
};

// pi is a proper retraction of A2 onto K[generator]. A retraction with
// constant images (onto K) carries the zero generator.
template <class P>
struct RetractionCertificate {
  Endomorphism<P> pi;
  P generator;
  unsigned power = 1;
  std::optional<P> fixed_element;
};

// f with eval_uni(f, r) = p, by leading-form peeling. Throws ConstantGenerator.
template <class P>
std::optional<UniPoly> membership(const P& p, const P& r);

// p = f(r) with deg r = d, solved one homogeneous component of r at a time.
// Throws PreconditionViolated for constant p, InvalidDegree when d does not
// divide deg p.
template <class P>
std::optional<DecompositionResult<P>> decompose_inner(const P& p, unsigned d);

// Monic homogeneous k-th root of the homogeneous h, if one exists.
template <class P>
std::optional<P> homogeneous_root(const P& h, unsigned k);

// Checks pi^2 = pi and pi != identity, then extracts the generator of the
// image. Throws NotIdempotent, IdentityImproper, or TheoremInconsistency when
// no generator is found for a genuine retraction.
template <class P>
RetractionCertificate<P> verify_retraction(const Endomorphism<P>& pi);

// Smallest m <= m_max with phi^m idempotent. Requires phi to fix the nonzero
// p and to be non-injective (PreconditionViolated); NotFoundWithinBound past
// m_max.
template <class P>
RetractionCertificate<P> find_retraction_power(const Endomorphism<P>& phi, const P& p, unsigned m_max = 64);

template <class P>
struct RetractionSearchResult {
  UniPoly a;  // pi(x) = a(r)
  UniPoly b;  // pi(y) = b(r)
  RetractionCertificate<P> certificate;
};

// Solves r(A(t), B(t)) = t over deg A, deg B <= deg_bound (abelianized r in
// K<x,y>). nullopt means no solution within the bound. Throws
// ConstantGenerator.
template <class P>
std::optional<RetractionSearchResult<P>> search_retraction_for(const P& r, unsigned deg_bound);

// Every (A, B) of exact degrees (deg_a, deg_b) with R(A, B) = t has one
// degree dividing the other; a solution exists iff this returns one.
std::optional<std::pair<UniPoly, UniPoly>> solve_line_parametrization(const CommPoly& r, unsigned deg_a,
                                                                      unsigned deg_b);

template <class P>
struct CanonicalForm {
  bool canonical = false;
  P w;  // r - x
};

// r = x + w with every monomial of w containing y.
template <class P>
CanonicalForm<P> canonical_form_check(const P& r);

std::vector<unsigned> divisors(unsigned n);

}  // namespace retractkit
