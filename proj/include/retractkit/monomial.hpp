#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace retractkit {

enum class Letter : char { x = 'x', y = 'y' };

// x^i y^j in K[x,y]. Ordered graded-lex with x > y.
struct CommMonomial {
  std::uint32_t i = 0;
  std::uint32_t j = 0;

  static CommMonomial one() { return {}; }
  static CommMonomial x() { return {1, 0}; }
  static CommMonomial y() { return {0, 1}; }
  static CommMonomial of(Letter letter) { return letter == Letter::x ? x() : y(); }

  unsigned degree() const { return i + j; }
  unsigned x_count() const { return i; }
  unsigned y_count() const { return j; }
  bool is_one() const { return i == 0 && j == 0; }

  // Used by substitution to peel monomials as x^i y^j = x * (x^(i-1) y^j).
  Letter first_letter() const { return i > 0 ? Letter::x : Letter::y; }
  CommMonomial drop_first() const { return i > 0 ? CommMonomial{i - 1, j} : CommMonomial{0, j - 1}; }

  bool divides(const CommMonomial& other) const { return i <= other.i && j <= other.j; }
  CommMonomial operator/(const CommMonomial& d) const { return {i - d.i, j - d.j}; }

  friend CommMonomial operator*(const CommMonomial& a, const CommMonomial& b) {
    return {a.i + b.i, a.j + b.j};
  }
  friend bool operator==(const CommMonomial&, const CommMonomial&) = default;
  friend bool operator<(const CommMonomial& a, const CommMonomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.i < b.i;
  }

  // All monomials of the given total degree, ascending.
  static std::vector<CommMonomial> all_of_degree(unsigned degree) {
    std::vector<CommMonomial> out;
    for (unsigned a = 0; a <= degree; ++a) out.push_back({a, degree - a});
    return out;
  }
};

// A word over {x, y} in K<x,y>. Ordered by length, then lexicographically
// with x > y.
class Word {
 public:
  Word() = default;
  explicit Word(std::string letters) : letters_(std::move(letters)) {}

  static Word one() { return Word(); }
  static Word x() { return Word("x"); }
  static Word y() { return Word("y"); }
  static Word of(Letter letter) { return Word(std::string(1, static_cast<char>(letter))); }

  const std::string& letters() const { return letters_; }
  unsigned degree() const { return static_cast<unsigned>(letters_.size()); }
  unsigned x_count() const { return static_cast<unsigned>(std::count(letters_.begin(), letters_.end(), 'x')); }
  unsigned y_count() const { return degree() - x_count(); }
  bool is_one() const { return letters_.empty(); }

  Letter first_letter() const { return static_cast<Letter>(letters_.front()); }
  Word drop_first() const { return Word(letters_.substr(1)); }

  friend Word operator*(const Word& a, const Word& b) { return Word(a.letters_ + b.letters_); }
  friend bool operator==(const Word&, const Word&) = default;
  friend bool operator<(const Word& a, const Word& b) {
    if (a.letters_.size() != b.letters_.size()) return a.letters_.size() < b.letters_.size();
    // 'x' < 'y' as characters, but x is the larger letter.
    return a.letters_ > b.letters_;
  }

  static std::vector<Word> all_of_degree(unsigned degree) {
    std::vector<Word> out;
    const std::size_t count = std::size_t{1} << degree;
    out.reserve(count);
    for (std::size_t bits = 0; bits < count; ++bits) {
      std::string letters(degree, 'x');
      for (unsigned k = 0; k < degree; ++k) {
        if (bits & (std::size_t{1} << (degree - 1 - k))) letters[k] = 'y';
      }
      out.emplace_back(std::move(letters));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::string letters_;
};

}  // namespace retractkit
