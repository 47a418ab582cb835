#include "retractkit/scalar.hpp"

#include <stdexcept>

namespace retractkit {

Scalar make_scalar(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  Scalar value(numerator, denominator);
  value.canonicalize();
  return value;
}

Scalar scalar_from_string(const std::string& text) {
  Scalar value;
  if (text.empty() || value.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational literal: " + text);
  }
  if (value.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  value.canonicalize();
  return value;
}

std::string to_string(const Scalar& value) { return value.get_str(10); }

bool is_integer(const Scalar& value) { return value.get_den() == 1; }

namespace {

std::optional<mpz_class> integer_root(const mpz_class& value, unsigned k) {
  if (value < 0) {
    if (k % 2 == 0) return std::nullopt;
    auto root = integer_root(-value, k);
    if (!root) return std::nullopt;
    return mpz_class(-*root);
  }
  mpz_class root;
  if (mpz_root(root.get_mpz_t(), value.get_mpz_t(), k) == 0) return std::nullopt;
  return root;
}

}  // namespace

std::optional<Scalar> rational_root(const Scalar& value, unsigned k) {
  if (k == 0) throw std::invalid_argument("zeroth root");
  auto num = integer_root(value.get_num(), k);
  if (!num) return std::nullopt;
  auto den = integer_root(value.get_den(), k);
  if (!den) return std::nullopt;
  Scalar root(*num, *den);
  root.canonicalize();
  return root;
}

}  // namespace retractkit
