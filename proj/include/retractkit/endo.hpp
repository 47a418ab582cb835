#pragma once

#include <variant>

#include "retractkit/algebra.hpp"
#include "retractkit/expr_io.hpp"

namespace retractkit {

// The algebra endomorphism of A2 with x -> x_image, y -> y_image. Two
// endomorphisms are equal when their images are.
template <class P>
class Endomorphism {
 public:
  using Poly = P;

  Endomorphism(P x_image, P y_image) : x_(std::move(x_image)), y_(std::move(y_image)) {}

  static Endomorphism identity() { return {P::x(), P::y()}; }

  const P& x_image() const { return x_; }
  const P& y_image() const { return y_; }
  const P& image(Letter letter) const { return letter == Letter::x ? x_ : y_; }

  P operator()(const P& p) const { return substitute(p, x_, y_); }

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

 private:
  P x_;
  P y_;
};

using CommEndo = Endomorphism<CommPoly>;
using NCEndo = Endomorphism<NCPoly>;
using AnyEndo = std::variant<CommEndo, NCEndo>;

template <class P>
P apply(const Endomorphism<P>& phi, const P& p) {
  return phi(p);
}

// (sigma o tau)(p) = sigma(tau(p)).
template <class P>
Endomorphism<P> compose(const Endomorphism<P>& sigma, const Endomorphism<P>& tau) {
  return {sigma(tau.x_image()), sigma(tau.y_image())};
}

// k-fold composition; power(phi, 0) is the identity.
template <class P>
Endomorphism<P> power(const Endomorphism<P>& phi, unsigned k) {
  auto result = Endomorphism<P>::identity();
  auto base = phi;
  while (k > 0) {
    if (k & 1U) result = compose(result, base);
    k >>= 1U;
    if (k > 0) base = compose(base, base);
  }
  return result;
}

template <class P>
bool is_idempotent(const Endomorphism<P>& phi) {
  return compose(phi, phi) == phi;
}

template <class P>
bool fixes(const Endomorphism<P>& phi, const P& p) {
  return phi(p) == p;
}

// Algebraic independence of the images: J(f, g) != 0 in K[x,y] (char 0), and
// [f, g] != 0 in K<x,y> (dependent pairs lie in a rank-one subalgebra).
bool is_injective(const CommEndo& phi);
bool is_injective(const NCEndo& phi);

AnyEndo make_endo(const EndoSpec& spec);

template <class P>
EndoSpec to_spec(const Endomorphism<P>& phi) {
  return {ring_of<P>(), print(phi.x_image()), print(phi.y_image())};
}

EndoSpec to_spec(const AnyEndo& phi);

// Extracts the typed polynomial, throwing RingMismatch when the tag differs.
template <class P>
const P& as_ring(const AnyPoly& p) {
  if (const P* typed = std::get_if<P>(&p)) return *typed;
  throw RingMismatch("polynomial belongs to the " + to_string(p.index() == 0 ? RingTag::comm : RingTag::noncomm) +
                     " ring, expected " + to_string(ring_of<P>()));
}

template <class P>
const Endomorphism<P>& as_ring(const AnyEndo& phi) {
  if (const auto* typed = std::get_if<Endomorphism<P>>(&phi)) return *typed;
  throw RingMismatch("endomorphism belongs to the " +
                     to_string(phi.index() == 0 ? RingTag::comm : RingTag::noncomm) + " ring, expected " +
                     to_string(ring_of<P>()));
}

AnyPoly apply(const AnyEndo& phi, const AnyPoly& p);
AnyEndo compose(const AnyEndo& sigma, const AnyEndo& tau);

}  // namespace retractkit
