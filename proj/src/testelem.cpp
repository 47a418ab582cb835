#include "retractkit/testelem.hpp"

namespace retractkit {

namespace {

// (c, d) with g = f(c*t + d), c != 0.
std::optional<std::pair<Scalar, Scalar>> affine_reparametrization(const UniPoly& g, const UniPoly& f) {
  if (g.is_zero() || f.is_constant() || g.degree() != f.degree()) return std::nullopt;
  const unsigned n = f.degree();
  const Scalar ratio = g.leading_coefficient() / f.leading_coefficient();
  auto c = rational_root(ratio, n);
  if (!c) return std::nullopt;
  std::vector<Scalar> candidates{*c};
  if (n % 2 == 0) candidates.push_back(-*c);
  for (const Scalar& cand : candidates) {
    Scalar c_pow = 1;
    for (unsigned i = 1; i < n; ++i) c_pow *= cand;
    // Coefficient of t^(n-1) in f(c t + d): f_n * n * c^(n-1) * d + f_(n-1) * c^(n-1).
    const Scalar d = (g.coefficient(n - 1) - f.coefficient(n - 1) * c_pow) / (f.leading_coefficient() * n * c_pow);
    if (f.compose(UniPoly(std::vector<Scalar>{d, cand})) == g) return std::make_pair(cand, d);
  }
  return std::nullopt;
}

template <class P>
bool has_witness(const P& p) {
  return !p.is_zero() && orank_witness(p).kind != OrankWitness<typename P::Monomial>::Kind::none;
}

// alpha(p) one elementary factor at a time, innermost first.
template <class P>
P apply_factors(const TameDecomposition& alpha, P p) {
  for (auto it = alpha.factors.rbegin(); it != alpha.factors.rend(); ++it) p = to_endo<P>(*it)(p);
  return p;
}

}  // namespace

template <class P>
std::optional<std::pair<Scalar, Scalar>> is_affine_in_generator(const P& s, const P& r) {
  auto g = membership(s, r);
  if (!g || g->is_zero() || g->is_constant() || g->degree() != 1) return std::nullopt;
  return std::make_pair(g->coefficient(1), g->coefficient(0));
}

std::string to_string(InjectionVerdict v) {
  switch (v) {
    case InjectionVerdict::consistent:
      return "consistent";
    case InjectionVerdict::outer_rank_below_two:
      return "outer_rank_below_two";
    case InjectionVerdict::inconsistent:
      return "inconsistent";
  }
  return "unknown";
}

template <class P>
bool certifies_outer_rank_two(const P& p) {
  if (p.is_constant()) return false;
  const unsigned n = deg(p);
  if (n < 2) return false;
  for (unsigned d : divisors(n)) {
    if (d < n && decompose_inner(p, d)) return false;
  }
  return !homogeneous_root(leading_form(p), n).has_value();
}

template <class P>
InjectionReport verify_theorem_injection(const Endomorphism<P>& phi, const P& p) {
  if (!fixes(phi, p)) throw PreconditionViolated("phi does not fix p");
  if (!is_injective(phi)) throw PreconditionViolated("phi is not injective");
  if (!has_witness(p)) throw PreconditionViolated("p has no outer-rank witness");
  InjectionReport report;
  report.automorphism = is_automorphism(phi);
  if (report.automorphism) {
    report.reason = "phi is an automorphism";
    return report;
  }
  report.outer_rank_two_certified = certifies_outer_rank_two(p);
  if (report.outer_rank_two_certified) {
    report.verdict = InjectionVerdict::inconsistent;
    report.reason = "injective non-automorphism fixes an element of outer rank two";
  } else {
    report.verdict = InjectionVerdict::outer_rank_below_two;
    report.reason = "p is a polynomial in a lower-degree element or in a coordinate; the theorem does not apply";
  }
  return report;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::not_test_element:
      return "NotTestElement";
    case Verdict::test_element_modulo_bounds:
      return "TestElementModuloBounds";
    case Verdict::unknown:
      return "Unknown";
  }
  return "Unknown";
}

template <class P>
Certification<P> certify_test_element(const P& p, const SearchConfig& config) {
  if (p.is_zero()) throw PreconditionViolated("p must be nonzero");
  Certification<P> out;
  out.report.retraction_deg_bound = config.retraction_deg_bound;
  auto finish_with = [&](RetractionCertificate<P> cert, const char* stage) {
    if (!(cert.pi(p) == p)) throw TheoremInconsistency("retraction certificate does not fix p");
    cert.fixed_element = p;
    out.verdict = Verdict::not_test_element;
    out.stage = stage;
    out.certificate = std::move(cert);
    return out;
  };
  if (p.is_constant()) {
    return finish_with(verify_retraction(Endomorphism<P>(P::x(), P())), "constant");
  }

  for (unsigned d : divisors(deg(p))) {
    out.report.divisors_tried.push_back(d);
    try {
      auto dec = decompose_inner(p, d);
      if (!dec) continue;
      out.report.inners_found.push_back(dec->inner);
      if (auto found = search_retraction_for(dec->inner, config.retraction_deg_bound)) {
        return finish_with(std::move(found->certificate), "retraction_search");
      }
    } catch (const TermLimitExceeded&) {
      out.report.exhaustive = false;
    }
  }

  Rng rng(config.seed);
  for (unsigned s = 0; s < config.orbit_samples; ++s) {
    const TameDecomposition alpha = random_tame_factors(rng, config.automorphisms);
    ++out.report.orbit_samples;
    try {
      const P moved = apply_factors(alpha, p);
      const bool in_x = uses_only(moved, Letter::x);
      if (!in_x && !uses_only(moved, Letter::y)) continue;
      const Endomorphism<P> rho = in_x ? Endomorphism<P>(P::x(), P()) : Endomorphism<P>(P(), P::y());
      const auto forward = recompose<P>(alpha);
      const auto backward = recompose<P>(inverse(alpha));
      return finish_with(verify_retraction(compose(backward, compose(rho, forward))), "orbit");
    } catch (const TermLimitExceeded&) {
      ++out.report.orbit_samples_skipped;
    }
  }

  out.stage = "none";
  if (out.report.exhaustive) {
    out.verdict = Verdict::test_element_modulo_bounds;
    out.reason = "no inner generator admits a retraction within the degree bound";
  } else {
    out.verdict = Verdict::unknown;
    out.reason = "a decomposition or retraction search hit the term cap";
  }
  return out;
}

std::string to_string(OrbitCase c) {
  switch (c) {
    case OrbitCase::comm:
      return "comm";
    case OrbitCase::noncomm_commutator_ideal:
      return "noncomm_commutator_ideal";
    case OrbitCase::noncomm_general:
      return "noncomm_general";
  }
  return "unknown";
}

namespace {

// Smallest admissible M with x^M - y not dividing v: deg v + 1, raised once.
unsigned choose_m(const CommPoly& v) {
  const unsigned first = deg(v) + 1;
  for (unsigned m = first; m <= first + 1; ++m) {
    if (!divides(CommPoly::x().pow(m) - CommPoly::y(), v)) return m;
  }
  throw DivisibilityUnexpected("x^M - y divides " + print(v) + " for M = " + std::to_string(first) + " and " +
                               std::to_string(first + 1));
}

// t + t^M * v(t, t^M).
UniPoly shifted_argument(const CommPoly& v, unsigned m) {
  const UniPoly tm = UniPoly::t().pow(m);
  return UniPoly::t() + tm * substitute_univariate(v, UniPoly::t(), tm);
}

}  // namespace

template <class P>
OrbitCounterexampleReport<P> orbit_falsifier(const P& r, const UniPoly& f) {
  if (f.is_constant()) throw PreconditionViolated("f must be nonconstant");
  const auto form = canonical_form_check(r);
  if (!form.canonical) throw PreconditionViolated("r is not of the form x + w with w in the ideal generated by y");
  if (uses_only(form.w, Letter::y)) throw PreconditionViolated("w lies in K[y]");

  OrbitCounterexampleReport<P> out;
  out.r = r;
  out.w = form.w;
  UniPoly argument;
  const P x = P::x();
  const P y = P::y();
  if constexpr (std::is_same_v<P, NCPoly>) {
    if (in_commutator_ideal(form.w)) {
      out.case_tag = OrbitCase::noncomm_commutator_ideal;
      out.m = 2;
      out.alpha = Endomorphism<P>(y + x.pow(2), x);
      if (!substitute(form.w, r.pow(2), r).is_zero()) {
        throw TheoremInconsistency("w in the commutator ideal does not vanish on commuting arguments");
      }
      argument = UniPoly::t().pow(2);
    } else {
      out.case_tag = OrbitCase::noncomm_general;
      out.divisor_test = *divides(CommPoly::y(), abelianize(form.w));
    }
  } else {
    out.case_tag = OrbitCase::comm;
    out.divisor_test = *divides(CommPoly::y(), form.w);
    if (uses_only(*out.divisor_test, Letter::y)) throw PreconditionViolated("q lies in K[y]");
  }
  if (out.divisor_test) {
    out.m = choose_m(*out.divisor_test);
    out.alpha = Endomorphism<P>(x, y + x.pow(out.m));
    argument = shifted_argument(*out.divisor_test, out.m);
  }

  const Endomorphism<P> pi(r, P());
  out.result = pi(out.alpha(eval_uni(f, r)));
  const UniPoly outer = f.compose(argument);
  out.expected = eval_uni(outer, r);
  if (!(out.result == out.expected)) throw TheoremInconsistency("pi(alpha(f(r))) differs from its closed form");
  auto recovered = membership(out.result, r);
  if (!recovered || !(*recovered == outer)) throw TheoremInconsistency("pi(alpha(f(r))) is not the expected element of K[r]");
  out.result_outer = outer;
  out.affine_check = affine_reparametrization(outer, f).has_value();
  return out;
}

template std::optional<std::pair<Scalar, Scalar>> is_affine_in_generator<CommPoly>(const CommPoly&, const CommPoly&);
template std::optional<std::pair<Scalar, Scalar>> is_affine_in_generator<NCPoly>(const NCPoly&, const NCPoly&);
template bool certifies_outer_rank_two<CommPoly>(const CommPoly&);
template bool certifies_outer_rank_two<NCPoly>(const NCPoly&);
template InjectionReport verify_theorem_injection<CommPoly>(const CommEndo&, const CommPoly&);
template InjectionReport verify_theorem_injection<NCPoly>(const NCEndo&, const NCPoly&);
template Certification<CommPoly> certify_test_element<CommPoly>(const CommPoly&, const SearchConfig&);
template Certification<NCPoly> certify_test_element<NCPoly>(const NCPoly&, const SearchConfig&);
template OrbitCounterexampleReport<CommPoly> orbit_falsifier<CommPoly>(const CommPoly&, const UniPoly&);
template OrbitCounterexampleReport<NCPoly> orbit_falsifier<NCPoly>(const NCPoly&, const UniPoly&);

}  // namespace retractkit
