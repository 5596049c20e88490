#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "preord/error.hpp"

namespace preord {

// Exact nonnegative-friendly rational on int64. Values in this project stay
// tiny (dyadics in [0,1] and short sums of them), so no overflow handling
// beyond normalization is needed.
struct Rat {
  long long num = 0;
  long long den = 1;  // > 0, gcd(|num|, den) == 1

  Rat() = default;
  Rat(long long n, long long d) : num(n), den(d) { normalize(); }
  static Rat of(long long n) { return Rat(n, 1); }

  void normalize() {
    require(den != 0, Err::BadParameters, "rational with zero denominator");
    if (den < 0) {
      den = -den;
      num = -num;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return a.num * b.den < b.num * a.den; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.num * b.den <= b.num * a.den; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

  bool is_zero() const { return num == 0; }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  static Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }
  static Rat parse(const std::string& s) {
    auto slash = s.find('/');
    require(slash != std::string::npos && slash > 0 && slash + 1 < s.size(), Err::ParseError,
            "rational must look like num/den: " + s);
    try {
      long long n = std::stoll(s.substr(0, slash));
      long long d = std::stoll(s.substr(slash + 1));
      return Rat(n, d);
    } catch (const std::exception&) {
      fail(Err::ParseError, "bad rational: " + s);
    }
  }
};

}  // namespace preord
