#include "retractkit/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace retractkit {

WeightPair::WeightPair(unsigned weight_x, unsigned weight_y) : a(weight_x), b(weight_y) {
  if (a == 0 || b == 0) throw InvalidDegree("weights must be positive");
}

namespace {

template <class Mono>
unsigned weight_of(const Mono& m, WeightPair w) {
  return w.a * m.x_count() + w.b * m.y_count();
}

template <class P>
P substitute_terms(const std::vector<typename P::Term>& terms, const P& f, const P& g) {
  using Term = typename P::Term;
  Scalar constant = 0;
  std::vector<Term> x_branch;
  std::vector<Term> y_branch;
  for (const auto& [mono, coeff] : terms) {
    if (mono.is_one()) {
      constant += coeff;
    } else if (mono.first_letter() == Letter::x) {
      x_branch.emplace_back(mono.drop_first(), coeff);
    } else {
      y_branch.emplace_back(mono.drop_first(), coeff);
    }
  }
  P result(constant);
  if (!x_branch.empty()) result += f * substitute_terms(x_branch, f, g);
  if (!y_branch.empty()) result += g * substitute_terms(y_branch, f, g);
  return result;
}

}  // namespace

template <class P>
unsigned deg(const P& p) {
  return p.leading_term().first.degree();
}

template <class P>
unsigned wdeg(const P& p, WeightPair w) {
  if (p.is_zero()) throw DegreeOfZero();
  unsigned best = 0;
  for (const auto& t : p.terms()) best = std::max(best, weight_of(t.first, w));
  return best;
}

template <class P>
P leading_form(const P& p) {
  return homogeneous_component(p, deg(p));
}

template <class P>
P homogeneous_component(const P& p, unsigned degree) {
  std::vector<typename P::Term> kept;
  for (const auto& t : p.terms()) {
    if (t.first.degree() == degree) kept.push_back(t);
  }
  return P::from_terms(std::move(kept));
}

template <class P>
P weighted_leading_form(const P& p, WeightPair w) {
  const unsigned top = wdeg(p, w);
  std::vector<typename P::Term> kept;
  for (const auto& t : p.terms()) {
    if (weight_of(t.first, w) == top) kept.push_back(t);
  }
  return P::from_terms(std::move(kept));
}

template <class P>
P substitute(const P& p, const P& f, const P& g) {
  if (p.is_zero()) return {};
  return substitute_terms(p.terms(), f, g);
}

template <class P>
P eval_uni(const UniPoly& f, const P& r) {
  P acc;
  const auto& c = f.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * r + P(*it);
  return acc;
}

template <class P>
bool uses_only(const P& p, Letter letter) {
  return std::all_of(p.terms().begin(), p.terms().end(), [&](const auto& t) {
    return letter == Letter::x ? t.first.y_count() == 0 : t.first.x_count() == 0;
  });
}

NCPoly commutator(const NCPoly& f, const NCPoly& g) { return f * g - g * f; }

CommPoly partial_x(const CommPoly& p) {
  std::vector<CommPoly::Term> out;
  for (const auto& [m, c] : p.terms()) {
    if (m.i > 0) out.emplace_back(CommMonomial{m.i - 1, m.j}, c * m.i);
  }
  return CommPoly::from_terms(std::move(out));
}

CommPoly partial_y(const CommPoly& p) {
  std::vector<CommPoly::Term> out;
  for (const auto& [m, c] : p.terms()) {
    if (m.j > 0) out.emplace_back(CommMonomial{m.i, m.j - 1}, c * m.j);
  }
  return CommPoly::from_terms(std::move(out));
}

CommPoly jacobian(const CommPoly& f, const CommPoly& g) {
  return partial_x(f) * partial_y(g) - partial_y(f) * partial_x(g);
}

CommPoly abelianize(const NCPoly& p) {
  std::vector<CommPoly::Term> out;
  out.reserve(p.size());
  for (const auto& [w, c] : p.terms()) out.emplace_back(CommMonomial{w.x_count(), w.y_count()}, c);
  return CommPoly::from_terms(std::move(out));
}

bool in_commutator_ideal(const NCPoly& w) { return abelianize(w).is_zero(); }

std::optional<CommPoly> divides(const CommPoly& d, const CommPoly& p) {
  if (d.is_zero()) throw DivisorZero();
  const auto& [lead_mono, lead_coeff] = d.leading_term();
  CommPoly remainder = p;
  std::vector<CommPoly::Term> quotient;
  // Graded-lex is a well order compatible with multiplication, so peeling
  // leading terms either empties the remainder or gets stuck.
  while (!remainder.is_zero()) {
    const auto& [m, c] = remainder.leading_term();
    if (!lead_mono.divides(m)) return std::nullopt;
    const CommPoly step = CommPoly::term(m / lead_mono, c / lead_coeff);
    quotient.emplace_back(m / lead_mono, c / lead_coeff);
    remainder -= step * d;
  }
  return CommPoly::from_terms(std::move(quotient));
}

UniPoly substitute_univariate(const CommPoly& p, const UniPoly& a, const UniPoly& b) {
  UniPoly result;
  unsigned max_i = 0;
  unsigned max_j = 0;
  for (const auto& t : p.terms()) {
    max_i = std::max(max_i, t.first.i);
    max_j = std::max(max_j, t.first.j);
  }
  std::vector<UniPoly> a_pow{UniPoly(1)};
  std::vector<UniPoly> b_pow{UniPoly(1)};
  for (unsigned k = 1; k <= max_i; ++k) a_pow.push_back(a_pow.back() * a);
  for (unsigned k = 1; k <= max_j; ++k) b_pow.push_back(b_pow.back() * b);
  for (const auto& [m, c] : p.terms()) result = result + c * (a_pow[m.i] * b_pow[m.j]);
  return result;
}

#define RETRACTKIT_INSTANTIATE(P)                                       \
  template unsigned deg<P>(const P&);                                   \
  template unsigned wdeg<P>(const P&, WeightPair);                      \
  template P leading_form<P>(const P&);                                 \
  template P homogeneous_component<P>(const P&, unsigned);              \
  template P weighted_leading_form<P>(const P&, WeightPair);            \
  template P substitute<P>(const P&, const P&, const P&);               \
  template P eval_uni<P>(const UniPoly&, const P&);                     \
  template bool uses_only<P>(const P&, Letter);

RETRACTKIT_INSTANTIATE(CommPoly)
RETRACTKIT_INSTANTIATE(NCPoly)

#undef RETRACTKIT_INSTANTIATE

}  // namespace retractkit
