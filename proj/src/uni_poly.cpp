#include "retractkit/uni_poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "retractkit/errors.hpp"

namespace retractkit {

UniPoly::UniPoly(const Scalar& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

UniPoly::UniPoly(std::vector<Scalar> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly UniPoly::monomial(unsigned degree, const Scalar& coeff) {
  std::vector<Scalar> c(degree + 1, Scalar(0));
  c[degree] = coeff;
  return UniPoly(std::move(c));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

unsigned UniPoly::degree() const {
  if (coeffs_.empty()) throw DegreeOfZero();
  return static_cast<unsigned>(coeffs_.size() - 1);
}

const Scalar& UniPoly::leading_coefficient() const {
  if (coeffs_.empty()) throw DegreeOfZero();
  return coeffs_.back();
}

Scalar UniPoly::operator()(const Scalar& at) const {
  Scalar acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + UniPoly(*it);
  return acc;
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Scalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(0));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(c));
}

UniPoly operator*(const Scalar& c, const UniPoly& p) { return UniPoly(c) * p; }

UniPoly UniPoly::pow(unsigned exponent) const {
  UniPoly result(1);
  for (unsigned k = 0; k < exponent; ++k) result = result * *this;
  return result;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw DivisorZero();
  std::vector<Scalar> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  if (rem.size() <= dd) return {UniPoly(), *this};
  std::vector<Scalar> quot(rem.size() - dd, Scalar(0));
  for (std::size_t k = rem.size(); k-- > dd;) {
    Scalar q = rem[k] / divisor.coeffs_[dd];
    if (q == 0) continue;
    quot[k - dd] = q;
    for (std::size_t i = 0; i <= dd; ++i) rem[k - dd + i] -= q * divisor.coeffs_[i];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return Scalar(1 / leading_coefficient()) * *this;
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  // Trial division; adequate for the coefficient sizes this library meets.
  std::vector<std::pair<mpz_class, unsigned>> factors;
  for (mpz_class p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0) {
      n /= p;
      ++e;
    }
    if (e > 0) factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<mpz_class> divisors{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = divisors.size();
    mpz_class power = 1;
    for (unsigned k = 1; k <= e; ++k) {
      power *= p;
      for (std::size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * power);
    }
  }
  return divisors;
}

}  // namespace

std::vector<Scalar> rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
  std::vector<Scalar> roots;
  // Integer coefficients with the zero root factored out.
  std::vector<Scalar> c = p.coefficients();
  std::size_t shift = 0;
  while (c[shift] == 0) ++shift;
  if (shift > 0) roots.emplace_back(0);
  mpz_class lcm_den = 1;
  for (const auto& v : c) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v.get_den().get_mpz_t());
  std::vector<mpz_class> ints;
  for (std::size_t k = shift; k < c.size(); ++k) ints.emplace_back(mpz_class(c[k] * lcm_den));
  if (ints.size() > 1) {
    const UniPoly reduced(std::vector<Scalar>(c.begin() + static_cast<long>(shift), c.end()));
    const mpz_class a0 = abs(ints.front());
    const mpz_class an = abs(ints.back());
    const auto nums = positive_divisors(a0);
    const auto dens = positive_divisors(an);
    for (const auto& q : dens) {
      for (const auto& n : nums) {
        for (int sign : {1, -1}) {
          Scalar candidate(sign * n, q);
          candidate.canonicalize();
          if (reduced(candidate) == 0) roots.push_back(candidate);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace retractkit
