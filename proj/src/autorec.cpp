#include "retractkit/autorec.hpp"

#include <stdexcept>

namespace retractkit {

template <class P>
Endomorphism<P> to_endo(const ElementaryAuto& e) {
  return std::visit(
      [](const auto& v) -> Endomorphism<P> {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, LinearAuto>) {
          if (v.determinant() == 0) throw std::invalid_argument("singular linear map");
          return {v.a11 * P::x() + v.a12 * P::y() + P(v.bx), v.a21 * P::x() + v.a22 * P::y() + P(v.by)};
        } else if constexpr (std::is_same_v<T, TriangularX>) {
          return {P::x() + eval_uni(v.h, P::y()), P::y()};
        } else {
          return {P::x(), P::y() + eval_uni(v.h, P::x())};
        }
      },
      e);
}

ElementaryAuto inverse(const ElementaryAuto& e) {
  return std::visit(
      [](const auto& v) -> ElementaryAuto {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, LinearAuto>) {
          const Scalar det = v.determinant();
          if (det == 0) throw std::invalid_argument("singular linear map");
          LinearAuto inv;
          inv.a11 = v.a22 / det;
          inv.a12 = -v.a12 / det;
          inv.a21 = -v.a21 / det;
          inv.a22 = v.a11 / det;
          inv.bx = -(inv.a11 * v.bx + inv.a12 * v.by);
          inv.by = -(inv.a21 * v.bx + inv.a22 * v.by);
          return inv;
        } else {
          return T{-v.h};
        }
      },
      e);
}

template <class P>
Endomorphism<P> recompose(const TameDecomposition& d) {
  auto acc = Endomorphism<P>::identity();
  // Left to right keeps the substituted images small: acc o e only plugs the
  // accumulated images into the elementary map's images.
  for (const auto& e : d.factors) acc = compose(acc, to_endo<P>(e));
  return acc;
}

TameDecomposition inverse(const TameDecomposition& d) {
  TameDecomposition inv;
  for (auto it = d.factors.rbegin(); it != d.factors.rend(); ++it) inv.factors.push_back(inverse(*it));
  return inv;
}

bool dicks_test(const NCEndo& phi) {
  const NCPoly c = commutator(phi.x_image(), phi.y_image());
  if (c.size() != 2) return false;
  const Scalar s = c.coefficient(Word("xy"));
  return s != 0 && c.coefficient(Word("yx")) == -s;
}

namespace {

// c with top == c * base, when top and base are proportional (base != 0).
template <class P>
std::optional<Scalar> proportionality(const P& top, const P& base) {
  const auto& [mono, coeff] = base.leading_term();
  const Scalar c = top.coefficient(mono) / coeff;
  if (c == 0 || top.size() != base.size() || !(top == c * base)) return std::nullopt;
  return c;
}

// If leading_form(u) = c * leading_form(v)^k for k = deg u / deg v, returns
// (c, k).
template <class P>
std::optional<std::pair<Scalar, unsigned>> reduction_step(const P& u, const P& v) {
  const unsigned du = deg(u);
  const unsigned dv = deg(v);
  if (dv == 0 || du % dv != 0) return std::nullopt;
  const unsigned k = du / dv;
  auto c = proportionality(leading_form(u), leading_form(v).pow(k));
  if (!c) return std::nullopt;
  return std::make_pair(*c, k);
}

UniPoly scaled_power(const Scalar& c, unsigned k) { return UniPoly::monomial(k, c); }

}  // namespace

template <class P>
std::optional<TameDecomposition> tame_decompose(const Endomorphism<P>& phi) {
  P u = phi.x_image();
  P v = phi.y_image();
  std::vector<ElementaryAuto> moves;
  for (;;) {
    if (u.is_zero() || v.is_zero()) return std::nullopt;
    const unsigned du = deg(u);
    const unsigned dv = deg(v);
    if (du <= 1 && dv <= 1) break;
    if (du >= dv) {
      if (auto step = reduction_step(u, v)) {
        const auto& [c, k] = *step;
        u -= c * v.pow(k);
        moves.emplace_back(TriangularX{scaled_power(c, k)});
        continue;
      }
      if (du != dv) return std::nullopt;
    }
    if (auto step = reduction_step(v, u)) {
      const auto& [c, k] = *step;
      v -= c * u.pow(k);
      moves.emplace_back(TriangularY{scaled_power(c, k)});
      continue;
    }
    return std::nullopt;
  }
  LinearAuto linear;
  linear.a11 = u.coefficient(P::Monomial::x());
  linear.a12 = u.coefficient(P::Monomial::y());
  linear.bx = u.constant_term();
  linear.a21 = v.coefficient(P::Monomial::x());
  linear.a22 = v.coefficient(P::Monomial::y());
  linear.by = v.constant_term();
  if (linear.determinant() == 0) return std::nullopt;
  TameDecomposition d;
  if (!(linear == LinearAuto{})) d.factors.emplace_back(linear);
  for (auto it = moves.rbegin(); it != moves.rend(); ++it) d.factors.push_back(*it);
  return d;
}

bool is_automorphism(const CommEndo& phi) { return tame_decompose(phi).has_value(); }

bool is_automorphism(const NCEndo& phi) { return dicks_test(phi); }

TameDecomposition random_tame_factors(Rng& rng, const RandomAutoConfig& config) {
  const long cb = std::max(1L, config.coeff_bound);
  const unsigned db = std::max(1U, config.deg_bound);
  TameDecomposition d;
  for (unsigned k = 0; k < config.length; ++k) {
    switch (rng.uniform(0, 2)) {
      case 0: {
        LinearAuto l;
        do {
          l.a11 = rng.uniform(-cb, cb);
          l.a12 = rng.uniform(-cb, cb);
          l.a21 = rng.uniform(-cb, cb);
          l.a22 = rng.uniform(-cb, cb);
        } while (l.determinant() == 0);
        l.bx = rng.uniform(-cb, cb);
        l.by = rng.uniform(-cb, cb);
        d.factors.emplace_back(l);
        break;
      }
      case 1:
        d.factors.emplace_back(TriangularX{random_uni(rng, static_cast<unsigned>(rng.uniform(1, db)), cb)});
        break;
      default:
        d.factors.emplace_back(TriangularY{random_uni(rng, static_cast<unsigned>(rng.uniform(1, db)), cb)});
        break;
    }
  }
  return d;
}

template Endomorphism<CommPoly> to_endo<CommPoly>(const ElementaryAuto&);
template Endomorphism<NCPoly> to_endo<NCPoly>(const ElementaryAuto&);
template Endomorphism<CommPoly> recompose<CommPoly>(const TameDecomposition&);
template Endomorphism<NCPoly> recompose<NCPoly>(const TameDecomposition&);
template std::optional<TameDecomposition> tame_decompose<CommPoly>(const CommEndo&);
template std::optional<TameDecomposition> tame_decompose<NCPoly>(const NCEndo&);

}  // namespace retractkit
