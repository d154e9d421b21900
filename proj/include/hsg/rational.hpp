#pragma once

#include <gmpxx.h>

#include <string>

namespace hsg::tower {

using BigInt = mpz_class;

// Exact rational arithmetic: reduced, denominator > 0, arbitrary precision.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(static_cast<long>(n)), den_(1) {}
  explicit Rational(const BigInt &n) : num_(n), den_(1) {}
  Rational(const BigInt &num, const BigInt &den);

  const BigInt &num() const { return num_; }
  const BigInt &den() const { return den_; }

  friend Rational operator+(const Rational &a, const Rational &b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational &a, const Rational &b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational &a, const Rational &b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational &a, const Rational &b);
  Rational operator-() const;

  Rational inverse() const;
  bool is_zero() const { return num_ == 0; }

  friend bool operator==(const Rational &a, const Rational &b) {
    return a.num_ == b.num_ && a.den_ == b.den_; // canonical forms
  }
  friend bool operator!=(const Rational &a, const Rational &b) {
    return !(a == b);
  }
  friend bool operator<(const Rational &a, const Rational &b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }

  std::string str() const;

private:
  BigInt num_;
  BigInt den_;
  void normalize();
};

// n ↦ n/1, the canonical embedding of ℤ into its fraction field.
inline Rational embed_integer(const BigInt &n) { return Rational(n); }

} // namespace hsg::tower
