#pragma once

#include <string>
#include <string_view>
#include <type_traits>
#include <variant>

#include "retractkit/poly.hpp"
#include "retractkit/uni_poly.hpp"

namespace retractkit {

enum class RingTag { comm, noncomm };

std::string to_string(RingTag ring);
// Accepts "comm" and "noncomm"; throws std::invalid_argument otherwise.
RingTag ring_from_string(std::string_view text);

template <class P>
constexpr RingTag ring_of() {
  if constexpr (std::is_same_v<P, CommPoly>) {
    return RingTag::comm;
  } else {
    return RingTag::noncomm;
  }
}

using AnyPoly = std::variant<CommPoly, NCPoly>;

// Grammar:
//   expr     := ['-'] term (('+' | '-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' nat)?
//   base     := rational | 'x' | 'y' | '(' expr ')'
//   rational := int ('/' posint)?
// Whitespace is ignored. Implicit multiplication is rejected. Every failure
// is a ParseError carrying the byte offset.
template <class P>
P parse(std::string_view text);

AnyPoly parse_poly(std::string_view text, RingTag ring);

// Same grammar over the single identifier t.
UniPoly parse_uni(std::string_view text);

// Canonical form: terms in decreasing monomial order, "x^2 + 2*x*y + y^2",
// "x*y - y*x", "0" for zero, coefficients in lowest terms.
template <class P>
std::string print(const P& p);

std::string print_poly(const AnyPoly& p);
std::string print_uni(const UniPoly& f);

// {"ring": "comm"|"noncomm", "x": "<expr>", "y": "<expr>"}; unknown or missing
// keys are rejected.
struct EndoSpec {
  RingTag ring = RingTag::comm;
  std::string x_image;
  std::string y_image;
};

EndoSpec parse_endo_spec(std::string_view json_text);
std::string endo_spec_to_json(const EndoSpec& spec);

}  // namespace retractkit
