#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <string>

namespace ghyp {

// Exact rational arithmetic for bound comparisons and report rendering.
// Magnitudes stay tiny (deltas in quarters, 16/3-style coefficients), so
// int64 cross-multiplication never comes close to overflow.
struct Rat {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rat() = default;
  Rat(std::int64_t n) : num(n), den(1) {}
  Rat(std::int64_t n, std::int64_t d) : num(n), den(d) {
    assert(d != 0);
    normalize();
  }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  friend Rat operator+(Rat a, Rat b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
  friend Rat operator-(Rat a, Rat b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
  friend Rat operator*(Rat a, Rat b) { return Rat(a.num * b.num, a.den * b.den); }
  friend Rat operator/(Rat a, Rat b) {
    assert(b.num != 0);
    return Rat(a.num * b.den, a.den * b.num);
  }

  friend bool operator==(Rat a, Rat b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(Rat a, Rat b) { return !(a == b); }
  friend bool operator<(Rat a, Rat b) { return a.num * b.den < b.num * a.den; }
  friend bool operator<=(Rat a, Rat b) { return a.num * b.den <= b.num * a.den; }
  friend bool operator>(Rat a, Rat b) { return b < a; }
  friend bool operator>=(Rat a, Rat b) { return b <= a; }

  // Lowest-terms "p/q", or just "p" for integers.  Never decimal.
  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

inline Rat rat_max(Rat a, Rat b) { return a < b ? b : a; }
inline Rat rat_min(Rat a, Rat b) { return b < a ? b : a; }

}  // namespace ghyp
