#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace retractkit {

// Exact rational number. GMP keeps every mpq_class result canonical
// (lowest terms, positive denominator); values built from raw strings must go
// through make_scalar.
using Scalar = mpq_class;

Scalar make_scalar(long numerator, long denominator = 1);

// Accepts "n" or "n/d" with d > 0. Throws std::invalid_argument otherwise.
Scalar scalar_from_string(const std::string& text);

// "n" for integers, "n/d" otherwise.
std::string to_string(const Scalar& value);

bool is_integer(const Scalar& value);

// Exact rational k-th root of value, if one exists (k >= 1). For even k and
// positive value, the positive root is returned.
std::optional<Scalar> rational_root(const Scalar& value, unsigned k);

}  // namespace retractkit
