#include "retractkit/expr_io.hpp"

#include <cctype>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace retractkit {

std::string to_string(RingTag ring) { return ring == RingTag::comm ? "comm" : "noncomm"; }

RingTag ring_from_string(std::string_view text) {
  if (text == "comm") return RingTag::comm;
  if (text == "noncomm") return RingTag::noncomm;
  throw std::invalid_argument("ring must be \"comm\" or \"noncomm\", got \"" + std::string(text) + "\"");
}

namespace {

// Recursive descent over the grammar in expr_io.hpp. T is a polynomial type
// supporting +, -, *, pow and construction from Scalar; make_variable maps an
// identifier character to a value or rejects it.
template <class T, class MakeVariable>
class Parser {
 public:
  Parser(std::string_view text, MakeVariable make_variable)
      : text_(text), make_variable_(std::move(make_variable)) {}

  T parse_all() {
    skip_space();
    if (at_end()) fail("empty expression");
    T value = expr();
    skip_space();
    if (!at_end()) {
      if (peek() == ')') fail("unbalanced ')'");
      fail(std::string("unexpected '") + peek() + "'");
    }
    return value;
  }

 private:
  T expr() {
    skip_space();
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    }
    T value = term();
    if (negate) value = -value;
    for (;;) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      T rhs = term();
      value = c == '+' ? value + rhs : value - rhs;
    }
    return value;
  }

  T term() {
    T value = factor();
    for (;;) {
      skip_space();
      const char c = peek();
      if (c == '*') {
        ++pos_;
        value = value * factor();
      } else if (starts_base(c)) {
        fail("implicit multiplication is not allowed; use '*'");
      } else {
        break;
      }
    }
    return value;
  }

  T factor() {
    T value = base();
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) {
        fail("exponent must be a nonnegative integer literal");
      }
      const std::size_t start = pos_;
      std::string digits = read_digits();
      unsigned long long e = 0;
      try {
        e = std::stoull(digits);
      } catch (const std::out_of_range&) {
        fail_at(start, "exponent too large");
      }
      if (e > std::numeric_limits<unsigned>::max()) fail_at(start, "exponent too large");
      value = value.pow(static_cast<unsigned>(e));
    }
    return value;
  }

  T base() {
    skip_space();
    const char c = peek();
    if (at_end()) fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(c))) return T(rational());
    if (c == '(') {
      const std::size_t open = pos_;
      ++pos_;
      T value = expr();
      skip_space();
      if (peek() != ')') {
        if (at_end()) fail_at(open, "unbalanced '('");
        fail(std::string("expected ')' but found '") + peek() + "'");
      }
      ++pos_;
      return value;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      std::string ident;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ident += text_[pos_++];
      if (ident.size() == 1) {
        if (auto v = make_variable_(ident[0])) return *v;
      }
      fail_at(start, "unknown identifier '" + ident + "'");
    }
    if (c == '-') fail("unary minus is only allowed at the start of an expression or after '('");
    fail(std::string("unexpected '") + c + "'");
  }

  Scalar rational() {
    const std::string num = read_digits();
    skip_space();
    if (peek() != '/') return scalar_from_string(num);
    ++pos_;
    skip_space();
    const std::size_t start = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("denominator must be a positive integer literal");
    const std::string den = read_digits();
    if (den.find_first_not_of('0') == std::string::npos) fail_at(start, "denominator must be positive");
    return scalar_from_string(num + "/" + den);
  }

  std::string read_digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) out += text_[pos_++];
    return out;
  }

  static bool starts_base(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_';
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& reason) const { throw ParseError(pos_, reason); }
  [[noreturn]] static void fail_at(std::size_t at, const std::string& reason) { throw ParseError(at, reason); }

  std::string_view text_;
  MakeVariable make_variable_;
  std::size_t pos_ = 0;
};

template <class T, class MakeVariable>
T run_parser(std::string_view text, MakeVariable make_variable) {
  return Parser<T, MakeVariable>(text, std::move(make_variable)).parse_all();
}

void append_coefficient_term(std::ostringstream& out, bool first, const Scalar& coeff,
                             const std::string& monomial) {
  const bool negative = coeff < 0;
  const Scalar magnitude = abs(coeff);
  if (first) {
    if (negative) out << '-';
  } else {
    out << (negative ? " - " : " + ");
  }
  if (monomial.empty()) {
    out << to_string(magnitude);
  } else if (magnitude == 1) {
    out << monomial;
  } else {
    out << to_string(magnitude) << '*' << monomial;
  }
}

std::string power_text(char letter, unsigned exponent) {
  std::string s(1, letter);
  if (exponent > 1) s += "^" + std::to_string(exponent);
  return s;
}

std::string monomial_text(const CommMonomial& m) {
  std::string s;
  if (m.i > 0) s += power_text('x', m.i);
  if (m.j > 0) {
    if (!s.empty()) s += '*';
    s += power_text('y', m.j);
  }
  return s;
}

std::string monomial_text(const Word& w) {
  std::string s;
  const std::string& letters = w.letters();
  for (std::size_t k = 0; k < letters.size();) {
    std::size_t run = 1;
    while (k + run < letters.size() && letters[k + run] == letters[k]) ++run;
    if (!s.empty()) s += '*';
    s += power_text(letters[k], static_cast<unsigned>(run));
    k += run;
  }
  return s;
}

}  // namespace

template <class P>
P parse(std::string_view text) {
  return run_parser<P>(text, [](char c) -> std::optional<P> {
    if (c == 'x') return P::x();
    if (c == 'y') return P::y();
    return std::nullopt;
  });
}

AnyPoly parse_poly(std::string_view text, RingTag ring) {
  if (ring == RingTag::comm) return parse<CommPoly>(text);
  return parse<NCPoly>(text);
}

UniPoly parse_uni(std::string_view text) {
  return run_parser<UniPoly>(text, [](char c) -> std::optional<UniPoly> {
    if (c == 't') return UniPoly::t();
    return std::nullopt;
  });
}

template <class P>
std::string print(const P& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    append_coefficient_term(out, first, it->second, monomial_text(it->first));
    first = false;
  }
  return out.str();
}

std::string print_poly(const AnyPoly& p) {
  return std::visit([](const auto& v) { return print(v); }, p);
}

std::string print_uni(const UniPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  const auto& c = f.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    append_coefficient_term(out, first, c[k], k == 0 ? std::string() : power_text('t', static_cast<unsigned>(k)));
    first = false;
  }
  return out.str();
}

EndoSpec parse_endo_spec(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError(0, "endomorphism spec must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "ring" && key != "x" && key != "y") throw ParseError(0, "unknown key \"" + key + "\"");
    if (!value.is_string()) throw ParseError(0, "value of \"" + key + "\" must be a string");
  }
  for (const char* key : {"ring", "x", "y"}) {
    if (!doc.contains(key)) throw ParseError(0, std::string("missing key \"") + key + "\"");
  }
  EndoSpec spec;
  try {
    spec.ring = ring_from_string(doc["ring"].get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
  spec.x_image = doc["x"].get<std::string>();
  spec.y_image = doc["y"].get<std::string>();
  // Both images must parse in the declared ring.
  parse_poly(spec.x_image, spec.ring);
  parse_poly(spec.y_image, spec.ring);
  return spec;
}

std::string endo_spec_to_json(const EndoSpec& spec) {
  nlohmann::ordered_json doc;
  doc["ring"] = to_string(spec.ring);
  doc["x"] = spec.x_image;
  doc["y"] = spec.y_image;
  return doc.dump();
}

template CommPoly parse<CommPoly>(std::string_view);
template NCPoly parse<NCPoly>(std::string_view);
template std::string print<CommPoly>(const CommPoly&);
template std::string print<NCPoly>(const NCPoly&);

}  // namespace retractkit
