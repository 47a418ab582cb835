#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "retractkit/autorec.hpp"
#include "retractkit/estimates.hpp"
#include "retractkit/retracts.hpp"

namespace retractkit {

class DivisibilityUnexpected : public Error {
 public:
  using Error::Error;
};

// (c, d) with s = c*r + d and c != 0.
template <class P>
std::optional<std::pair<Scalar, Scalar>> is_affine_in_generator(const P& s, const P& r);

enum class InjectionVerdict {
  consistent,        // phi is an automorphism
  outer_rank_below_two,  // phi is not an automorphism, and p lies in K[c] for a coordinate c
  inconsistent,      // phi is not an automorphism although p has outer rank two
};

std::string to_string(InjectionVerdict v);

struct InjectionReport {
  InjectionVerdict verdict = InjectionVerdict::consistent;
  bool automorphism = true;
  bool outer_rank_two_certified = false;
  std::string reason;
};

// An injective phi fixing p is an automorphism when p has outer rank two.
// Requires fixes(phi, p), is_injective(phi) and an outer-rank witness on p
// (PreconditionViolated otherwise).
template <class P>
InjectionReport verify_theorem_injection(const Endomorphism<P>& phi, const P& p);

// True when p is neither a polynomial in a lower-degree element nor has a
// leading form c*l^n with l linear, which rules out p in K[c] for a
// coordinate c.
template <class P>
bool certifies_outer_rank_two(const P& p);

struct SearchConfig {
  unsigned retraction_deg_bound = 6;
  unsigned orbit_samples = 200;
  RandomAutoConfig automorphisms{4, 3, 2};
  unsigned m_max = 64;
  std::uint64_t seed = 0;
};

enum class Verdict { not_test_element, test_element_modulo_bounds, unknown };

std::string to_string(Verdict v);

template <class P>
struct SearchReport {
  std::vector<unsigned> divisors_tried;
  std::vector<P> inners_found;
  unsigned retraction_deg_bound = 0;
  unsigned orbit_samples = 0;
  unsigned orbit_samples_skipped = 0;  // samples abandoned at the term cap
  bool exhaustive = true;
};

template <class P>
struct Certification {
  Verdict verdict = Verdict::unknown;
  std::string stage;  // constant | retraction_search | orbit | none
  std::optional<RetractionCertificate<P>> certificate;
  SearchReport<P> report;
  std::string reason;
};

template <class P>
Certification<P> certify_test_element(const P& p, const SearchConfig& config = {});

enum class OrbitCase { comm, noncomm_commutator_ideal, noncomm_general };

std::string to_string(OrbitCase c);

template <class P>
struct OrbitCounterexampleReport {
  P r;
  P w;
  OrbitCase case_tag = OrbitCase::comm;
  unsigned m = 0;
  std::optional<CommPoly> divisor_test;  // v or q, tested against x^M - y
  Endomorphism<P> alpha = Endomorphism<P>::identity();
  P result;              // pi(alpha(f(r))) with pi = (r, 0)
  P expected;            // the closed form, computed independently
  UniPoly result_outer;  // result = result_outer(r)
  bool affine_check = false;
};

// pi = (r, 0) with r = x + w in canonical form, and an automorphism alpha
// such that pi(alpha(f(r))) is not f(c*r + d). Throws PreconditionViolated,
// DivisibilityUnexpected, or TheoremInconsistency when the computed image
// disagrees with its closed form.
template <class P>
OrbitCounterexampleReport<P> orbit_falsifier(const P& r, const UniPoly& f);

}  // namespace retractkit
