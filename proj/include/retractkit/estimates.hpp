#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "retractkit/autorec.hpp"
#include "retractkit/expr_io.hpp"

namespace retractkit {

// Syntactic reason why wdeg(p, (a, b)) >= a + b for every weight pair.
template <class Mono>
struct OrankWitness {
  enum class Kind { mixed_monomial, pure_powers, none };
  Kind kind = Kind::none;
  Mono mixed{};            // kind == mixed_monomial
  unsigned x_power = 0;    // kind == pure_powers: x^x_power in the support
  unsigned y_power = 0;    //                      y^y_power in the support
};

// Highest mixed monomial if any; otherwise the largest pure powers x^i, y^j
// with i, j >= 2; otherwise none. Throws DegreeOfZero.
template <class P>
OrankWitness<typename P::Monomial> orank_witness(const P& p);

// True iff every monomial of p contains both letters and deg p > 2.
template <class P>
bool strict_hypothesis(const P& p);

enum class PreconditionCase {
  leading_forms_independent,
  dependent_nondivisible,  // leading forms dependent, neither degree divides the other
  reduced,                 // brought into one of the above by elementary moves
};

std::string to_string(PreconditionCase c);

struct EstimateReport {
  unsigned actual_degree = 0;
  Scalar lower_bound = 0;
  PreconditionCase precondition_case = PreconditionCase::leading_forms_independent;
  bool satisfied = false;           // actual_degree >= lower_bound
  bool strict = false;              // the strict form of the inequality applies
  bool strictly_satisfied = false;  // actual_degree > lower_bound
  // Whether the inequality is a consequence of the checked hypotheses. False
  // only for the corollary checks when the elementary reduction destroys the
  // syntactic outer-rank witness of p.
  bool guaranteed = true;
  unsigned reduction_steps = 0;

  bool violation() const { return guaranteed && (!satisfied || (strict && !strictly_satisfied)); }
};

// deg p(f, g) >= deg[f, g] / deg(fg) * wdeg(p, (deg f, deg g)), for [f, g] != 0
// and either [f+, g+] != 0 or neither of deg f, deg g dividing the other.
// Throws PreconditionViolated naming the failed clause.
EstimateReport bound_noncomm(const NCPoly& f, const NCPoly& g, const NCPoly& p);

// deg p(f, g) >= w * (1 - gcd(m, n) * (m + n - deg J(f, g) - 2) / (m * n)) with
// m = deg f, n = deg g, w = wdeg(p, (m, n)), for J(f, g) != 0.
EstimateReport bound_comm(const CommPoly& f, const CommPoly& g, const CommPoly& p);

// deg p(f, g) >= deg[f, g], strictly when strict_hypothesis holds.
EstimateReport check_commutator_bound(const NCPoly& f, const NCPoly& g, const NCPoly& p);

// deg p(f, g) >= deg J(f, g) + 2.
EstimateReport check_jacobian_bound(const CommPoly& f, const CommPoly& g, const CommPoly& p);

struct GrowthPoint {
  unsigned k = 0;
  unsigned degree = 0;
};

struct GrowthReport {
  std::vector<GrowthPoint> points;
  bool satisfied = true;           // every entry meets its lower bound
  bool strictly_increasing = true;
};

// deg [phi^k(x), phi^k(y)] for k = 0..k_max; each must be >= k + 2.
// Requires phi injective and not an automorphism.
GrowthReport growth_noncomm(const NCEndo& phi, unsigned k_max);

// deg J(phi^k(x), phi^k(y)) for k = 0..k_max; each must be >= k. Requires phi
// injective, not an automorphism, and fixing the nonconstant p.
GrowthReport growth_comm(const CommEndo& phi, const CommPoly& p, unsigned k_max);

struct FuzzConfig {
  std::uint64_t seed = 0;
  unsigned trials = 1000;
  unsigned max_degree = 8;
  unsigned max_support = 12;
  long coeff_bound = 5;
  // Upper bound on the a-priori expansion size of p(f, g); costlier triples
  // are redrawn so a run stays at desk scale.
  std::size_t cost_budget = 2500;
  // Test-only: replace the bound with wdeg(p) + 1, which no triple can meet.
  bool corrupt_bound = false;
};

struct FuzzSummary {
  RingTag ring = RingTag::comm;
  std::uint64_t seed = 0;
  unsigned accepted = 0;              // triples passing preconditions, all checked
  unsigned precondition_rejections = 0;
  unsigned cost_redraws = 0;
  unsigned equality_cases = 0;        // actual degree == bound
  unsigned corollary_checks = 0;      // triples where p had an outer-rank witness
  unsigned corollary_unguaranteed = 0;
  unsigned case_counts[3] = {0, 0, 0};
  unsigned violations = 0;
  std::vector<std::string> violation_examples;
};

// Random (f, g, p) triples: bound_noncomm / bound_comm on each, plus the
// corollary check whenever p carries an outer-rank witness.
template <class P>
FuzzSummary fuzz_estimates(const FuzzConfig& config);

}  // namespace retractkit
