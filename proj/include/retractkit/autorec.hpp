#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "retractkit/endo.hpp"
#include "retractkit/random.hpp"

namespace retractkit {

// x -> a11*x + a12*y + bx, y -> a21*x + a22*y + by with a11*a22 - a12*a21 != 0.
struct LinearAuto {
  Scalar a11 = 1, a12 = 0, a21 = 0, a22 = 1;
  Scalar bx = 0, by = 0;

  Scalar determinant() const { return a11 * a22 - a12 * a21; }
  friend bool operator==(const LinearAuto&, const LinearAuto&) = default;
};

// x -> x + h(y), y -> y.
struct TriangularX {
  UniPoly h;
  friend bool operator==(const TriangularX&, const TriangularX&) = default;
};

// x -> x, y -> y + h(x).
struct TriangularY {
  UniPoly h;
  friend bool operator==(const TriangularY&, const TriangularY&) = default;
};

using ElementaryAuto = std::variant<LinearAuto, TriangularX, TriangularY>;

// Throws std::invalid_argument for a singular linear map.
template <class P>
Endomorphism<P> to_endo(const ElementaryAuto& e);

ElementaryAuto inverse(const ElementaryAuto& e);

// factors[0] o factors[1] o ... o factors[n-1]. Empty means identity.
struct TameDecomposition {
  std::vector<ElementaryAuto> factors;
};

template <class P>
Endomorphism<P> recompose(const TameDecomposition& d);

TameDecomposition inverse(const TameDecomposition& d);

// True iff [f, g] = c*(xy - yx) with c != 0.
bool dicks_test(const NCEndo& phi);

// Elementary reduction: while some image has degree > 1, subtract from the
// higher-degree image a scalar multiple of a power of the other one so that
// its leading form cancels. Succeeds with a decomposition that recomposes to
// phi exactly, or returns nullopt, which certifies phi is not an automorphism.
template <class P>
std::optional<TameDecomposition> tame_decompose(const Endomorphism<P>& phi);

bool is_automorphism(const CommEndo& phi);
bool is_automorphism(const NCEndo& phi);

struct RandomAutoConfig {
  unsigned length = 4;
  long coeff_bound = 3;
  unsigned deg_bound = 3;
};

// Product of config.length random elementary automorphisms. Linear entries
// and polynomial coefficients are integers in [-coeff_bound, coeff_bound];
// triangular parts have degree in [1, deg_bound].
TameDecomposition random_tame_factors(Rng& rng, const RandomAutoConfig& config);

template <class P>
Endomorphism<P> random_automorphism(std::uint64_t seed, const RandomAutoConfig& config) {
  Rng rng(seed);
  return recompose<P>(random_tame_factors(rng, config));
}

}  // namespace retractkit
