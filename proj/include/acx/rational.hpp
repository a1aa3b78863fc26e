//===--- rational.hpp - Exact rational arithmetic --------------*- C++ -*-===//
//
// Part of the acx prover. Licensed under the Apache License v2.0.
//
//===----------------------------------------------------------------------===//

#ifndef ACX_RATIONAL_HPP
#define ACX_RATIONAL_HPP

#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace acx {

/// Exact rational on 64-bit numerator/denominator, always normalized
/// (gcd 1, positive denominator). Intermediate products go through
/// __int128; anything that would not fit back into 64 bits throws.
/// The workloads here (linear-arithmetic canonization of small problems)
/// stay far away from the limits.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const { return den_ == 1; }
  bool is_negative() const { return num_ < 0; }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational operator+(const Rational& o) const {
    __int128 n = (__int128)num_ * o.den_ + (__int128)o.num_ * den_;
    __int128 d = (__int128)den_ * o.den_;
    return make(n, d);
  }
  Rational operator-(const Rational& o) const { return *this + (-o); }
  Rational operator*(const Rational& o) const {
    return make((__int128)num_ * o.num_, (__int128)den_ * o.den_);
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0)
      throw std::domain_error("rational division by zero");
    return make((__int128)num_ * o.den_, (__int128)den_ * o.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return (__int128)num_ * o.den_ < (__int128)o.num_ * den_;
  }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  std::string str() const {
    if (den_ == 1)
      return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  size_t hash() const {
    size_t h = std::hash<long long>()(num_);
    return h * 1000003u ^ std::hash<long long>()(den_);
  }

private:
  static Rational make(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX || d <= 0)
      throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = (long long)n;
    r.den_ = (long long)d;
    return r;
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  void normalize() {
    if (den_ == 0)
      throw std::domain_error("rational with zero denominator");
    *this = make(num_, den_);
  }

  long long num_;
  long long den_;
};

} // namespace acx

#endif // ACX_RATIONAL_HPP
