#include "retractkit/retracts.hpp"

#include <algorithm>
#include <map>

namespace retractkit {

std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

template <class P>
std::optional<UniPoly> membership(const P& p, const P& r) {
  if (r.is_constant()) throw ConstantGenerator();
  const unsigned d = deg(r);
  std::vector<P> powers{P(1)};
  std::vector<Scalar> coeffs;
  P rest = p;
  while (!rest.is_constant()) {
    const unsigned n = deg(rest);
    if (n % d != 0) return std::nullopt;
    const unsigned k = n / d;
    while (powers.size() <= k) powers.push_back(powers.back() * r);
    const P top = leading_form(rest);
    const Scalar c = top.leading_coefficient() / powers[k].leading_coefficient();
    if (!(top == c * leading_form(powers[k]))) return std::nullopt;
    if (coeffs.size() <= k) coeffs.resize(k + 1);
    coeffs[k] = c;
    rest -= c * powers[k];
  }
  if (coeffs.empty()) coeffs.resize(1);
  coeffs[0] = rest.constant_term();
  return UniPoly(std::move(coeffs));
}

namespace {

std::optional<CommPoly> root_of(const CommPoly& h, unsigned k) {
  const auto& top = h.leading_term().first;
  if (top.i % k != 0 || top.j % k != 0) return std::nullopt;
  const CommMonomial lead{top.i / k, top.j / k};
  CommMonomial divisor{lead.i * (k - 1), lead.j * (k - 1)};
  CommPoly root = CommPoly::term(lead, 1);
  CommMonomial last = lead;
  for (;;) {
    const CommPoly residual = h - root.pow(k);
    if (residual.is_zero()) return root;
    const auto& [mono, coeff] = residual.leading_term();
    if (!divisor.divides(mono)) return std::nullopt;
    const CommMonomial next = mono / divisor;
    if (!(next < last)) return std::nullopt;
    root += CommPoly::term(next, coeff / k);
    last = next;
  }
}

// The coefficient of u*m^(k-1) in r^k is the coefficient of u in r.
std::optional<NCPoly> root_of(const NCPoly& h, unsigned k) {
  const std::string& top = h.leading_term().first.letters();
  if (top.size() % k != 0) return std::nullopt;
  const std::size_t d = top.size() / k;
  const std::string lead = top.substr(0, d);
  std::string tail;
  for (unsigned i = 1; i < k; ++i) tail += lead;
  std::vector<NCPoly::Term> terms;
  for (const auto& [word, coeff] : h.terms()) {
    const std::string& w = word.letters();
    if (w.size() == top.size() && w.compare(d, std::string::npos, tail) == 0) terms.emplace_back(Word(w.substr(0, d)), coeff);
  }
  NCPoly root = NCPoly::from_terms(std::move(terms));
  if (!(root.pow(k) == h)) return std::nullopt;
  return root;
}

// Solves L(h) = target for h homogeneous of the given degree, where
// L(h) = sum_i top^i * h * top^(k-1-i).
template <class P>
std::optional<P> solve_linearized(const std::vector<P>& top_powers, unsigned k, unsigned degree, P target) {
  using Mono = typename P::Monomial;
  auto apply_l = [&](const P& h) {
    P out;
    for (unsigned i = 0; i < k; ++i) out += top_powers[i] * h * top_powers[k - 1 - i];
    return out;
  };
  std::map<Mono, std::pair<P, P>> pivots;
  for (const Mono& basis : Mono::all_of_degree(degree)) {
    P image = apply_l(P::term(basis, 1));
    P preimage = P::term(basis, 1);
    while (!image.is_zero()) {
      const auto& [mono, coeff] = image.leading_term();
      auto it = pivots.find(mono);
      if (it == pivots.end()) {
        pivots.emplace(mono, std::make_pair(image, preimage));
        break;
      }
      const Scalar factor = coeff / it->second.first.leading_coefficient();
      image -= factor * it->second.first;
      preimage -= factor * it->second.second;
    }
  }
  P solution;
  while (!target.is_zero()) {
    const auto& [mono, coeff] = target.leading_term();
    auto it = pivots.find(mono);
    if (it == pivots.end()) return std::nullopt;
    const Scalar factor = coeff / it->second.first.leading_coefficient();
    target -= factor * it->second.first;
    solution += factor * it->second.second;
  }
  return solution;
}

}  // namespace

template <class P>
std::optional<P> homogeneous_root(const P& h, unsigned k) {
  if (h.is_zero()) throw DegreeOfZero();
  if (k == 0) throw InvalidDegree("root index must be positive");
  if (k == 1) return (1 / h.leading_coefficient()) * h;
  return root_of((1 / h.leading_coefficient()) * h, k);
}

template <class P>
std::optional<DecompositionResult<P>> decompose_inner(const P& p, unsigned d) {
  if (p.is_constant()) throw PreconditionViolated("p must be nonconstant");
  const unsigned n = deg(p);
  if (d == 0 || n % d != 0) {
    throw InvalidDegree("inner degree " + std::to_string(d) + " does not divide deg p = " + std::to_string(n));
  }
  const unsigned k = n / d;
  const Scalar lead = p.leading_coefficient();
  if (k == 1) {
    const Scalar c = p.constant_term();
    return DecompositionResult<P>{(1 / lead) * (p - P(c)), UniPoly(std::vector<Scalar>{c, lead})};
  }
  auto top = homogeneous_root(leading_form(p), k);
  if (!top) return std::nullopt;
  std::vector<P> top_powers{P(1)};
  for (unsigned i = 1; i < k; ++i) top_powers.push_back(top_powers.back() * *top);
  const P scaled = (1 / lead) * p;
  P r = *top;
  for (unsigned j = 1; j < d; ++j) {
    const P target = homogeneous_component(scaled, n - j) - homogeneous_component(r.pow(k), n - j);
    auto component = solve_linearized(top_powers, k, d - j, target);
    if (!component) return std::nullopt;
    r += *component;
  }
  auto outer = membership(p, r);
  if (!outer) return std::nullopt;
  return DecompositionResult<P>{std::move(r), std::move(*outer)};
}

template <class P>
RetractionCertificate<P> verify_retraction(const Endomorphism<P>& pi) {
  if (!is_idempotent(pi)) throw NotIdempotent();
  if (pi == Endomorphism<P>::identity()) throw IdentityImproper();
  const P& u = pi.x_image();
  const P& v = pi.y_image();
  if (u.is_constant() && v.is_constant()) return {pi, P(), 1, std::nullopt};
  const P& source = v.is_constant() || (!u.is_constant() && deg(u) <= deg(v)) ? u : v;
  for (unsigned d : divisors(deg(source))) {
    auto dec = decompose_inner(source, d);
    if (!dec) continue;
    if (membership(u, dec->inner) && membership(v, dec->inner) && pi(dec->inner) == dec->inner) {
      return {pi, std::move(dec->inner), 1, std::nullopt};
    }
  }
  throw TheoremInconsistency("idempotent endomorphism whose image is not K[r] for any r found by decomposition");
}

template <class P>
RetractionCertificate<P> find_retraction_power(const Endomorphism<P>& phi, const P& p, unsigned m_max) {
  if (p.is_zero()) throw PreconditionViolated("p must be nonzero");
  if (!fixes(phi, p)) throw PreconditionViolated("phi does not fix p");
  if (is_injective(phi)) throw PreconditionViolated("phi is injective");
  auto power_m = phi;
  for (unsigned m = 1; m <= m_max; ++m) {
    if (is_idempotent(power_m)) {
      auto cert = verify_retraction(power_m);
      cert.power = m;
      cert.fixed_element = p;
      return cert;
    }
    if (m < m_max) power_m = compose(power_m, phi);
  }
  throw NotFoundWithinBound("no idempotent power phi^m with m <= " + std::to_string(m_max));
}

namespace {

// R(x, y) = sum_i c_i(y) x^i.
std::vector<UniPoly> coefficients_in_x(const CommPoly& r) {
  std::vector<std::vector<Scalar>> c;
  for (const auto& [mono, coeff] : r.terms()) {
    if (c.size() <= mono.i) c.resize(mono.i + 1);
    if (c[mono.i].size() <= mono.j) c[mono.i].resize(mono.j + 1);
    c[mono.i][mono.j] = coeff;
  }
  std::vector<UniPoly> out;
  for (auto& v : c) out.emplace_back(std::move(v));
  return out;
}

CommPoly swap_letters(const CommPoly& r) { return substitute(r, CommPoly::y(), CommPoly::x()); }

UniPoly constant(const Scalar& c) { return UniPoly(c); }

// B constant: R(x, b) must be u*x + v with u != 0.
std::optional<std::pair<UniPoly, UniPoly>> solve_with_constant_b(const CommPoly& r) {
  const auto c = coefficients_in_x(r);
  if (c.size() < 2 || c[1].is_zero()) return std::nullopt;
  std::optional<Scalar> b;
  if (c.size() > 2) {
    UniPoly g;
    for (std::size_t i = 2; i < c.size(); ++i) g = gcd(g, c[i]);
    for (const Scalar& root : rational_roots(g)) {
      if (c[1](root) != 0) {
        b = root;
        break;
      }
    }
  } else {
    for (long n = 0;; n = n > 0 ? -n : 1 - n) {
      if (c[1](Scalar(n)) != 0) {
        b = Scalar(n);
        break;
      }
    }
  }
  if (!b) return std::nullopt;
  const Scalar u = c[1](*b);
  const Scalar v = c[0](*b);
  return std::make_pair((1 / u) * (UniPoly::t() - constant(v)), constant(*b));
}

std::optional<std::pair<UniPoly, UniPoly>> solve_linear(const CommPoly& r, unsigned deg_a, unsigned deg_b) {
  const Scalar u = r.coefficient(CommMonomial::x());
  const Scalar v = r.coefficient(CommMonomial::y());
  const Scalar c = r.constant_term();
  const UniPoly t = UniPoly::t();
  if (u != 0 && deg_a == 1 && (v == 0 || deg_b == 0)) {
    const UniPoly b = v == 0 && deg_b > 0 ? UniPoly::monomial(deg_b, 1) : UniPoly();
    return std::make_pair((1 / u) * (t - constant(c)), b);
  }
  if (v != 0 && deg_b == 1 && (u == 0 || deg_a == 0)) {
    const UniPoly a = u == 0 && deg_a > 0 ? UniPoly::monomial(deg_a, 1) : UniPoly();
    return std::make_pair(a, (1 / v) * (t - constant(c)));
  }
  if (u != 0 && v != 0 && deg_a == deg_b) {
    // u*A + v*B = t - c with cancelling tops.
    const UniPoly b = deg_b == 1 ? (2 / v) * t : UniPoly::monomial(deg_b, 1);
    return std::make_pair((1 / u) * (t - constant(c) - v * b), b);
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<UniPoly, UniPoly>> solve_line_parametrization(const CommPoly& r, unsigned deg_a,
                                                                      unsigned deg_b) {
  if (r.is_constant()) return std::nullopt;
  if (deg(r) == 1) return solve_linear(r, deg_a, deg_b);
  if (deg_a == 0 && deg_b == 0) return std::nullopt;
  if (deg_b == 0) {
    if (deg_a != 1) return std::nullopt;
    return solve_with_constant_b(r);
  }
  if (deg_a == 0) {
    if (deg_b != 1) return std::nullopt;
    auto swapped = solve_with_constant_b(swap_letters(r));
    if (!swapped) return std::nullopt;
    return std::make_pair(swapped->second, swapped->first);
  }
  // The top weighted form must vanish at the leading coefficients, and an
  // elementary move then lowers the larger degree.
  if (deg_a % deg_b == 0) {
    const unsigned k = deg_a / deg_b;
    const CommPoly top = weighted_leading_form(r, WeightPair(k, 1));
    for (const Scalar& lambda : rational_roots(substitute_univariate(top, UniPoly::t(), UniPoly(1)))) {
      if (lambda == 0) continue;
      const CommPoly moved = substitute(r, CommPoly::x() + lambda * CommPoly::y().pow(k), CommPoly::y());
      for (unsigned lower = 0; lower < deg_a; ++lower) {
        if (auto s = solve_line_parametrization(moved, lower, deg_b)) {
          return std::make_pair(s->first + lambda * s->second.pow(k), s->second);
        }
      }
    }
  }
  if (deg_b % deg_a == 0 && deg_a != deg_b) {
    auto swapped = solve_line_parametrization(swap_letters(r), deg_b, deg_a);
    if (swapped) return std::make_pair(swapped->second, swapped->first);
  }
  return std::nullopt;
}

template <class P>
std::optional<RetractionSearchResult<P>> search_retraction_for(const P& r, unsigned deg_bound) {
  if (r.is_constant()) throw ConstantGenerator();
  CommPoly commutative;
  if constexpr (std::is_same_v<P, NCPoly>) {
    commutative = abelianize(r);
  } else {
    commutative = r;
  }
  for (unsigned total = 1; total <= 2 * deg_bound; ++total) {
    // Larger deg A first, so r = x*y yields (t, 1) rather than (1, t).
    for (unsigned deg_a = std::min(total, deg_bound) + 1; deg_a-- > 0;) {
      const unsigned deg_b = total - deg_a;
      if (deg_b > deg_bound) continue;
      auto solution = solve_line_parametrization(commutative, deg_a, deg_b);
      if (!solution) continue;
      const auto& [a, b] = *solution;
      if (!(substitute_univariate(commutative, a, b) == UniPoly::t())) {
        throw TheoremInconsistency("line parametrization failed verification");
      }
      const Endomorphism<P> pi(eval_uni(a, r), eval_uni(b, r));
      try {
        return RetractionSearchResult<P>{a, b, verify_retraction(pi)};
      } catch (const NotIdempotent&) {
        throw TheoremInconsistency("(A(r), B(r)) with r(A, B) = t is not idempotent");
      } catch (const IdentityImproper&) {
        throw TheoremInconsistency("(A(r), B(r)) with r(A, B) = t is the identity");
      }
    }
  }
  return std::nullopt;
}

template <class P>
CanonicalForm<P> canonical_form_check(const P& r) {
  CanonicalForm<P> out;
  out.w = r - P::x();
  out.canonical = std::all_of(out.w.terms().begin(), out.w.terms().end(),
                              [](const auto& t) { return t.first.y_count() > 0; });
  return out;
}

template std::optional<UniPoly> membership<CommPoly>(const CommPoly&, const CommPoly&);
template std::optional<UniPoly> membership<NCPoly>(const NCPoly&, const NCPoly&);
template std::optional<CommPoly> homogeneous_root<CommPoly>(const CommPoly&, unsigned);
template std::optional<NCPoly> homogeneous_root<NCPoly>(const NCPoly&, unsigned);
template std::optional<DecompositionResult<CommPoly>> decompose_inner<CommPoly>(const CommPoly&, unsigned);
template std::optional<DecompositionResult<NCPoly>> decompose_inner<NCPoly>(const NCPoly&, unsigned);
template RetractionCertificate<CommPoly> verify_retraction<CommPoly>(const CommEndo&);
template RetractionCertificate<NCPoly> verify_retraction<NCPoly>(const NCEndo&);
template RetractionCertificate<CommPoly> find_retraction_power<CommPoly>(const CommEndo&, const CommPoly&, unsigned);
template RetractionCertificate<NCPoly> find_retraction_power<NCPoly>(const NCEndo&, const NCPoly&, unsigned);
template std::optional<RetractionSearchResult<CommPoly>> search_retraction_for<CommPoly>(const CommPoly&, unsigned);
template std::optional<RetractionSearchResult<NCPoly>> search_retraction_for<NCPoly>(const NCPoly&, unsigned);
template CanonicalForm<CommPoly> canonical_form_check<CommPoly>(const CommPoly&);
template CanonicalForm<NCPoly> canonical_form_check<NCPoly>(const NCPoly&);

}  // namespace retractkit
