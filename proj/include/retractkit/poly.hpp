#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "retractkit/errors.hpp"
#include "retractkit/monomial.hpp"
#include "retractkit/scalar.hpp"

namespace retractkit {

// Support-size cap for every polynomial the library builds. Read from
// RETRACTKIT_MAX_TERMS, default 200000.
std::size_t max_terms();

// Sparse polynomial in two variables over Scalar. Terms are kept sorted
// ascending in the monomial order with no zero coefficients, so equality is
// structural and the leading term is the last one.
template <class Mono>
class Poly {
 public:
  using Monomial = Mono;
  using Term = std::pair<Mono, Scalar>;

  Poly() = default;
  Poly(long constant) : Poly(Scalar(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(const Scalar& constant) {
    if (constant != 0) terms_.emplace_back(Mono::one(), constant);
  }

  static Poly term(const Mono& mono, const Scalar& coeff) {
    Poly p;
    if (coeff != 0) p.terms_.emplace_back(mono, coeff);
    return p;
  }
  static Poly x() { return term(Mono::x(), 1); }
  static Poly y() { return term(Mono::y(), 1); }
  static Poly variable(Letter letter) { return term(Mono::of(letter), 1); }

  // Accepts terms in any order with repeated monomials.
  static Poly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    Poly p;
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        p.terms_.back().second += t.second;
      } else {
        if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
        p.terms_.push_back(std::move(t));
      }
    }
    if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
    p.check_size();
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  Scalar coefficient(const Mono& mono) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), mono,
                               [](const Term& t, const Mono& m) { return t.first < m; });
    if (it != terms_.end() && it->first == mono) return it->second;
    return 0;
  }
  Scalar constant_term() const { return coefficient(Mono::one()); }

  const Term& leading_term() const {
    if (terms_.empty()) throw DegreeOfZero();
    return terms_.back();
  }
  const Scalar& leading_coefficient() const { return leading_term().second; }

  Poly operator-() const {
    Poly p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
  }

  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.size() * b.size() > 64 * max_terms()) throw TermLimitExceeded(a.size() * b.size(), max_terms());
    std::vector<Term> products;
    products.reserve(a.size() * b.size());
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) products.emplace_back(ma * mb, ca * cb);
    }
    return from_terms(std::move(products));
  }

  friend Poly operator*(const Scalar& c, const Poly& p) {
    if (c == 0) return {};
    Poly out = p;
    for (auto& t : out.terms_) t.second *= c;
    return out;
  }
  friend Poly operator*(const Poly& p, const Scalar& c) { return c * p; }

  Poly& operator+=(const Poly& other) { return *this = *this + other; }
  Poly& operator-=(const Poly& other) { return *this = *this - other; }
  Poly& operator*=(const Poly& other) { return *this = *this * other; }

  Poly pow(unsigned exponent) const {
    Poly result(1);
    Poly base = *this;
    while (exponent > 0) {
      if (exponent & 1U) result *= base;
      exponent >>= 1U;
      if (exponent > 0) base *= base;
    }
    return result;
  }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  static Poly merge(const Poly& a, const Poly& b, bool subtract) {
    Poly out;
    out.terms_.reserve(a.size() + b.size());
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
        out.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || ib->first < ia->first) {
        out.terms_.emplace_back(ib->first, subtract ? Scalar(-ib->second) : ib->second);
        ++ib;
      } else {
        Scalar c = subtract ? Scalar(ia->second - ib->second) : Scalar(ia->second + ib->second);
        if (c != 0) out.terms_.emplace_back(ia->first, std::move(c));
        ++ia;
        ++ib;
      }
    }
    out.check_size();
    return out;
  }

  void check_size() const {
    if (terms_.size() > max_terms()) throw TermLimitExceeded(terms_.size(), max_terms());
  }

  std::vector<Term> terms_;
};

using CommPoly = Poly<CommMonomial>;
using NCPoly = Poly<Word>;

}  // namespace retractkit
