#pragma once

#include <cstdint>
#include <random>

#include "retractkit/poly.hpp"
#include "retractkit/uni_poly.hpp"

namespace retractkit {

// Seeded generator passed explicitly to every randomized operation. Only the
// raw mt19937_64 stream is used (its output is fixed by the standard), so a
// seed reproduces the same values on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  // Uniform nonzero integer in [-bound, bound], bound >= 1.
  long nonzero(long bound);
  bool chance(unsigned numerator, unsigned denominator);
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// Random polynomial of total degree exactly `degree` with at most `support`
// terms and integer coefficients in [-coeff_bound, coeff_bound].
template <class P>
P random_poly(Rng& rng, unsigned degree, unsigned support, long coeff_bound);

// Random homogeneous polynomial of the given degree.
template <class P>
P random_homogeneous(Rng& rng, unsigned degree, unsigned support, long coeff_bound);

// Random univariate polynomial of exact degree.
UniPoly random_uni(Rng& rng, unsigned degree, long coeff_bound);

}  // namespace retractkit
