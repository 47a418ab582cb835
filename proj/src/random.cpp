#include "retractkit/random.hpp"

#include <limits>
#include <stdexcept>

namespace retractkit {

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection sampling keeps the draw unbiased and independent of the
  // standard library's distribution implementation.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw = engine_();
  while (draw >= limit) draw = engine_();
  return lo + static_cast<long>(draw % span);
}

long Rng::nonzero(long bound) {
  const long v = uniform(1, bound);
  return chance(1, 2) ? v : -v;
}

bool Rng::chance(unsigned numerator, unsigned denominator) {
  return uniform(0, static_cast<long>(denominator) - 1) < static_cast<long>(numerator);
}

namespace {

CommMonomial random_monomial(Rng& rng, unsigned degree, CommMonomial*) {
  const auto i = static_cast<std::uint32_t>(rng.uniform(0, degree));
  return {i, degree - i};
}

Word random_monomial(Rng& rng, unsigned degree, Word*) {
  std::string letters(degree, 'x');
  for (auto& c : letters) c = rng.chance(1, 2) ? 'x' : 'y';
  return Word(std::move(letters));
}

template <class Mono>
Mono random_monomial(Rng& rng, unsigned degree) {
  return random_monomial(rng, degree, static_cast<Mono*>(nullptr));
}

}  // namespace

template <class P>
P random_poly(Rng& rng, unsigned degree, unsigned support, long coeff_bound) {
  using Mono = typename P::Monomial;
  std::vector<typename P::Term> terms;
  terms.emplace_back(random_monomial<Mono>(rng, degree), rng.nonzero(coeff_bound));
  const long extra = support > 1 ? rng.uniform(0, support - 1) : 0;
  for (long k = 0; k < extra; ++k) {
    const auto d = static_cast<unsigned>(rng.uniform(0, degree));
    terms.emplace_back(random_monomial<Mono>(rng, d), rng.nonzero(coeff_bound));
  }
  P p = P::from_terms(std::move(terms));
  // Collisions can cancel the top term; retry keeps the degree exact.
  if (p.is_zero() || p.leading_term().first.degree() != degree) return random_poly<P>(rng, degree, support, coeff_bound);
  return p;
}

template <class P>
P random_homogeneous(Rng& rng, unsigned degree, unsigned support, long coeff_bound) {
  using Mono = typename P::Monomial;
  std::vector<typename P::Term> terms;
  const long count = rng.uniform(1, support);
  for (long k = 0; k < count; ++k) terms.emplace_back(random_monomial<Mono>(rng, degree), rng.nonzero(coeff_bound));
  P p = P::from_terms(std::move(terms));
  if (p.is_zero()) return random_homogeneous<P>(rng, degree, support, coeff_bound);
  return p;
}

UniPoly random_uni(Rng& rng, unsigned degree, long coeff_bound) {
  std::vector<Scalar> c;
  for (unsigned k = 0; k < degree; ++k) c.emplace_back(rng.uniform(-coeff_bound, coeff_bound));
  c.emplace_back(rng.nonzero(coeff_bound));
  return UniPoly(std::move(c));
}

template CommPoly random_poly<CommPoly>(Rng&, unsigned, unsigned, long);
template NCPoly random_poly<NCPoly>(Rng&, unsigned, unsigned, long);
template CommPoly random_homogeneous<CommPoly>(Rng&, unsigned, unsigned, long);
template NCPoly random_homogeneous<NCPoly>(Rng&, unsigned, unsigned, long);

}  // namespace retractkit
