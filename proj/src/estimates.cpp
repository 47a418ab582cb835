#include "retractkit/estimates.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

namespace retractkit {

template <class P>
OrankWitness<typename P::Monomial> orank_witness(const P& p) {
  using Mono = typename P::Monomial;
  if (p.is_zero()) throw DegreeOfZero();
  OrankWitness<Mono> w;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const Mono& m = it->first;
    if (m.x_count() > 0 && m.y_count() > 0) {
      w.kind = OrankWitness<Mono>::Kind::mixed_monomial;
      w.mixed = m;
      return w;
    }
    if (m.y_count() == 0) w.x_power = std::max(w.x_power, m.x_count());
    if (m.x_count() == 0) w.y_power = std::max(w.y_power, m.y_count());
  }
  if (w.x_power >= 2 && w.y_power >= 2) {
    w.kind = OrankWitness<Mono>::Kind::pure_powers;
  } else {
    w.x_power = w.y_power = 0;
  }
  return w;
}

template <class P>
bool strict_hypothesis(const P& p) {
  if (p.is_zero() || deg(p) <= 2) return false;
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [](const auto& t) { return t.first.x_count() > 0 && t.first.y_count() > 0; });
}

std::string to_string(PreconditionCase c) {
  switch (c) {
    case PreconditionCase::leading_forms_independent:
      return "leading_forms_independent";
    case PreconditionCase::dependent_nondivisible:
      return "dependent_nondivisible";
    case PreconditionCase::reduced:
      return "reduced";
  }
  return "unknown";
}

namespace {

bool leading_forms_dependent(const NCPoly& f, const NCPoly& g) {
  return commutator(leading_form(f), leading_form(g)).is_zero();
}

bool leading_forms_dependent(const CommPoly& f, const CommPoly& g) {
  return jacobian(leading_form(f), leading_form(g)).is_zero();
}

bool mutually_nondivisible(unsigned m, unsigned n) { return m % n != 0 && n % m != 0; }

template <class P>
PreconditionCase classify(const P& f, const P& g) {
  if (!leading_forms_dependent(f, g)) return PreconditionCase::leading_forms_independent;
  if (mutually_nondivisible(deg(f), deg(g))) return PreconditionCase::dependent_nondivisible;
  return PreconditionCase::reduced;
}

// c with top == c * base.
template <class P>
std::optional<Scalar> proportional(const P& top, const P& base) {
  const auto& [mono, coeff] = base.leading_term();
  const Scalar c = top.coefficient(mono) / coeff;
  if (c == 0 || !(top == c * base)) return std::nullopt;
  return c;
}

template <class P>
struct ReducedTriple {
  P f, g, p;
  unsigned steps = 0;
  bool complete = true;
};

// Elementary moves f <- f - c g^k (or the symmetric one) until the leading
// forms become independent or the degrees mutually non-divisible, carrying p
// along so that p(f, g) is unchanged. [f, g] and J(f, g) are invariant.
template <class P>
ReducedTriple<P> reduce_pair(P f, P g, P p) {
  ReducedTriple<P> r{std::move(f), std::move(g), std::move(p)};
  while (classify(r.f, r.g) == PreconditionCase::reduced) {
    const unsigned m = deg(r.f);
    const unsigned n = deg(r.g);
    const bool reduce_f = m >= n;
    const P& big = reduce_f ? r.f : r.g;
    const P& small = reduce_f ? r.g : r.f;
    const unsigned k = (reduce_f ? m / n : n / m);
    auto c = proportional(leading_form(big), leading_form(small).pow(k));
    if (!c) {
      r.complete = false;
      return r;
    }
    if (reduce_f) {
      r.f = r.f - *c * r.g.pow(k);
      r.p = substitute(r.p, P::x() + *c * P::y().pow(k), P::y());
    } else {
      r.g = r.g - *c * r.f.pow(k);
      r.p = substitute(r.p, P::x(), P::y() + *c * P::x().pow(k));
    }
    ++r.steps;
  }
  return r;
}

template <class P>
bool has_witness(const P& p) {
  return !p.is_zero() && orank_witness(p).kind != OrankWitness<typename P::Monomial>::Kind::none;
}

void finish(EstimateReport& r) {
  r.satisfied = Scalar(r.actual_degree) >= r.lower_bound;
  r.strictly_satisfied = Scalar(r.actual_degree) > r.lower_bound;
}

template <class P>
EstimateReport corollary_report(const P& f, const P& g, const P& p, unsigned bound) {
  EstimateReport r;
  const auto reduced = reduce_pair(f, g, p);
  r.reduction_steps = reduced.steps;
  r.precondition_case = reduced.steps > 0 ? PreconditionCase::reduced : classify(f, g);
  r.lower_bound = bound;
  r.strict = strict_hypothesis(reduced.p);
  r.guaranteed = reduced.complete && has_witness(reduced.p);
  r.actual_degree = deg(substitute(p, f, g));
  finish(r);
  return r;
}

}  // namespace

EstimateReport bound_noncomm(const NCPoly& f, const NCPoly& g, const NCPoly& p) {
  if (commutator(f, g).is_zero()) throw PreconditionViolated("f and g are algebraically dependent ([f,g] = 0)");
  if (p.is_zero()) throw PreconditionViolated("p must be nonzero");
  const unsigned m = deg(f);
  const unsigned n = deg(g);
  EstimateReport r;
  r.precondition_case = classify(f, g);
  if (r.precondition_case == PreconditionCase::reduced) {
    throw PreconditionViolated("leading forms commute and one of deg f, deg g divides the other");
  }
  r.lower_bound = make_scalar(deg(commutator(f, g)), m + n) * wdeg(p, WeightPair(m, n));
  r.actual_degree = deg(substitute(p, f, g));
  finish(r);
  return r;
}

EstimateReport bound_comm(const CommPoly& f, const CommPoly& g, const CommPoly& p) {
  const CommPoly j = jacobian(f, g);
  if (j.is_zero()) throw PreconditionViolated("f and g are algebraically dependent (J(f,g) = 0)");
  if (p.is_zero()) throw PreconditionViolated("p must be nonzero");
  const unsigned m = deg(f);
  const unsigned n = deg(g);
  const long gcd_mn = std::gcd(m, n);
  EstimateReport r;
  r.precondition_case = classify(f, g);
  const Scalar deficiency = make_scalar(gcd_mn * (static_cast<long>(m + n) - static_cast<long>(deg(j)) - 2),
                                        static_cast<long>(m) * n);
  r.lower_bound = Scalar(wdeg(p, WeightPair(m, n))) * (1 - deficiency);
  r.actual_degree = deg(substitute(p, f, g));
  finish(r);
  return r;
}

EstimateReport check_commutator_bound(const NCPoly& f, const NCPoly& g, const NCPoly& p) {
  const NCPoly c = commutator(f, g);
  if (c.is_zero()) throw PreconditionViolated("f and g are algebraically dependent ([f,g] = 0)");
  if (!has_witness(p)) throw PreconditionViolated("p has no outer-rank witness");
  return corollary_report(f, g, p, deg(c));
}

EstimateReport check_jacobian_bound(const CommPoly& f, const CommPoly& g, const CommPoly& p) {
  const CommPoly j = jacobian(f, g);
  if (j.is_zero()) throw PreconditionViolated("f and g are algebraically dependent (J(f,g) = 0)");
  if (!has_witness(p)) throw PreconditionViolated("p has no outer-rank witness");
  return corollary_report(f, g, p, deg(j) + 2);
}

GrowthReport growth_noncomm(const NCEndo& phi, unsigned k_max) {
  if (!is_injective(phi)) throw PreconditionViolated("phi is not injective ([f,g] = 0)");
  if (is_automorphism(phi)) throw PreconditionViolated("phi is an automorphism");
  GrowthReport report;
  auto power_k = NCEndo::identity();
  for (unsigned k = 0; k <= k_max; ++k) {
    const unsigned d = deg(commutator(power_k.x_image(), power_k.y_image()));
    if (d < k + 2) report.satisfied = false;
    if (!report.points.empty() && d <= report.points.back().degree) report.strictly_increasing = false;
    report.points.push_back({k, d});
    if (k < k_max) power_k = compose(power_k, phi);
  }
  return report;
}

GrowthReport growth_comm(const CommEndo& phi, const CommPoly& p, unsigned k_max) {
  if (!is_injective(phi)) throw PreconditionViolated("phi is not injective (J = 0)");
  if (is_automorphism(phi)) throw PreconditionViolated("phi is an automorphism");
  if (p.is_constant()) throw PreconditionViolated("fixed element p must be nonconstant");
  if (!fixes(phi, p)) throw PreconditionViolated("phi does not fix p");
  GrowthReport report;
  auto power_k = CommEndo::identity();
  for (unsigned k = 0; k <= k_max; ++k) {
    const unsigned d = deg(jacobian(power_k.x_image(), power_k.y_image()));
    if (d < k) report.satisfied = false;
    if (!report.points.empty() && d <= report.points.back().degree) report.strictly_increasing = false;
    report.points.push_back({k, d});
    if (k < k_max) power_k = compose(power_k, phi);
  }
  return report;
}

namespace {

template <class P>
std::size_t expansion_cost(const P& p, const P& f, const P& g) {
  std::size_t total = 0;
  for (const auto& t : p.terms()) {
    std::size_t c = 1;
    for (unsigned k = 0; k < t.first.x_count() && c <= (1U << 30); ++k) c *= f.size();
    for (unsigned k = 0; k < t.first.y_count() && c <= (1U << 30); ++k) c *= g.size();
    total += c;
  }
  return total;
}

// f = c1*h^a + lower, g = c2*h^b + lower with a, b mutually non-divisible:
// dependent leading forms without a reduction move.
template <class P>
std::pair<P, P> dependent_pair(Rng& rng, const FuzzConfig& config) {
  static constexpr unsigned kExponents[][2] = {{2, 3}, {3, 2}, {3, 4}, {4, 3}, {2, 5}, {5, 2}, {3, 5}, {5, 3}};
  for (;;) {
    const unsigned e = static_cast<unsigned>(rng.uniform(1, 2));
    const auto& ab = kExponents[rng.uniform(0, 7)];
    if (ab[0] * e > config.max_degree || ab[1] * e > config.max_degree) continue;
    const P h = random_homogeneous<P>(rng, e, 2, 2);
    auto with_lower = [&](unsigned exponent) {
      const unsigned top = exponent * e;
      P lower = random_poly<P>(rng, static_cast<unsigned>(rng.uniform(0, top - 1)),
                               static_cast<unsigned>(rng.uniform(1, 4)), config.coeff_bound);
      return P(rng.nonzero(3)) * h.pow(exponent) + lower;
    };
    P f = with_lower(ab[0]);
    P g = with_lower(ab[1]);
    if (f.size() <= config.max_support && g.size() <= config.max_support) return {std::move(f), std::move(g)};
  }
}

template <class P>
P draw_poly(Rng& rng, const FuzzConfig& config) {
  return random_poly<P>(rng, static_cast<unsigned>(rng.uniform(1, config.max_degree)),
                        static_cast<unsigned>(rng.uniform(1, config.max_support)), config.coeff_bound);
}

template <class P>
EstimateReport main_bound(const P& f, const P& g, const P& p) {
  if constexpr (std::is_same_v<P, NCPoly>) {
    return bound_noncomm(f, g, p);
  } else {
    return bound_comm(f, g, p);
  }
}

template <class P>
EstimateReport corollary(const P& f, const P& g, const P& p) {
  if constexpr (std::is_same_v<P, NCPoly>) {
    return check_commutator_bound(f, g, p);
  } else {
    return check_jacobian_bound(f, g, p);
  }
}

template <class P>
std::string describe(const P& f, const P& g, const P& p, const EstimateReport& r, const char* what) {
  std::ostringstream out;
  out << what << ": f = " << print(f) << ", g = " << print(g) << ", p = " << print(p) << ": actual "
      << r.actual_degree << (r.strict ? " not > " : " < ") << "bound " << to_string(r.lower_bound);
  return out.str();
}

}  // namespace

template <class P>
FuzzSummary fuzz_estimates(const FuzzConfig& config) {
  FuzzSummary summary;
  summary.ring = ring_of<P>();
  summary.seed = config.seed;
  Rng rng(config.seed);
  while (summary.accepted < config.trials) {
    auto [f, g] = rng.chance(1, 4) ? dependent_pair<P>(rng, config)
                                   : std::pair<P, P>{draw_poly<P>(rng, config), draw_poly<P>(rng, config)};
    const P p = draw_poly<P>(rng, config);
    if (expansion_cost(p, f, g) > config.cost_budget) {
      ++summary.cost_redraws;
      continue;
    }
    EstimateReport r;
    try {
      r = main_bound(f, g, p);
    } catch (const PreconditionViolated&) {
      ++summary.precondition_rejections;
      continue;
    }
    ++summary.accepted;
    ++summary.case_counts[static_cast<int>(r.precondition_case)];
    if (config.corrupt_bound) {
      r.lower_bound = wdeg(p, WeightPair(deg(f), deg(g))) + 1;
      finish(r);
    }
    if (Scalar(r.actual_degree) == r.lower_bound) ++summary.equality_cases;
    if (r.violation()) {
      ++summary.violations;
      if (summary.violation_examples.size() < 5) summary.violation_examples.push_back(describe(f, g, p, r, "bound"));
    }
    if (has_witness(p)) {
      ++summary.corollary_checks;
      const EstimateReport c = corollary(f, g, p);
      if (!c.guaranteed) ++summary.corollary_unguaranteed;
      if (c.violation()) {
        ++summary.violations;
        if (summary.violation_examples.size() < 5) {
          summary.violation_examples.push_back(describe(f, g, p, c, "corollary"));
        }
      }
    }
  }
  return summary;
}

template OrankWitness<CommMonomial> orank_witness<CommPoly>(const CommPoly&);
template OrankWitness<Word> orank_witness<NCPoly>(const NCPoly&);
template bool strict_hypothesis<CommPoly>(const CommPoly&);
template bool strict_hypothesis<NCPoly>(const NCPoly&);
template FuzzSummary fuzz_estimates<CommPoly>(const FuzzConfig&);
template FuzzSummary fuzz_estimates<NCPoly>(const FuzzConfig&);

}  // namespace retractkit
