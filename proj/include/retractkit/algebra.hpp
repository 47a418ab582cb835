#pragma once

#include <optional>

#include "retractkit/poly.hpp"
#include "retractkit/uni_poly.hpp"

namespace retractkit {

// Weights of x and y in a weighted degree. Both must be >= 1.
struct WeightPair {
  unsigned a = 1;
  unsigned b = 1;

  WeightPair() = default;
  WeightPair(unsigned weight_x, unsigned weight_y);
};

// Total degree. Throws DegreeOfZero on 0.
template <class P>
unsigned deg(const P& p);

// max over the support of a*(x count) + b*(y count). Throws DegreeOfZero on 0.
template <class P>
unsigned wdeg(const P& p, WeightPair w);

// Highest homogeneous component. Throws DegreeOfZero on 0.
template <class P>
P leading_form(const P& p);

template <class P>
P homogeneous_component(const P& p, unsigned degree);

// Top component of p for the weighted degree with weights w.
template <class P>
P weighted_leading_form(const P& p, WeightPair w);

// Image of p under x -> f, y -> g. Word order is preserved in K<x,y>.
template <class P>
P substitute(const P& p, const P& f, const P& g);

// f(r); well defined in K<x,y> because powers of r commute.
template <class P>
P eval_uni(const UniPoly& f, const P& r);

// True iff every support monomial uses only the given letter (constants
// included).
template <class P>
bool uses_only(const P& p, Letter letter);

// [f, g] = fg - gf.
NCPoly commutator(const NCPoly& f, const NCPoly& g);

CommPoly partial_x(const CommPoly& p);
CommPoly partial_y(const CommPoly& p);

// df/dx * dg/dy - df/dy * dg/dx.
CommPoly jacobian(const CommPoly& f, const CommPoly& g);

// K<x,y> -> K[x,y], letting the variables commute.
CommPoly abelianize(const NCPoly& p);

// Membership in the commutator ideal, i.e. the kernel of abelianize.
bool in_commutator_ideal(const NCPoly& w);

// Quotient q with p = d*q when d divides p. Throws DivisorZero when d = 0.
std::optional<CommPoly> divides(const CommPoly& d, const CommPoly& p);

// Two-variable polynomial p(t, s) restricted to the line x = t, y = s. Used
// to turn "substitute commuting univariate polynomials" into K[t].
UniPoly substitute_univariate(const CommPoly& p, const UniPoly& a, const UniPoly& b);

}  // namespace retractkit
