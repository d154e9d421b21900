#include "hsg/rational.hpp"

#include "hsg/error.hpp"

namespace hsg::tower {

Rational::Rational(const BigInt &num, const BigInt &den)
    : num_(num), den_(den) {
  if (den_ == 0)
    fail(ErrorCode::precondition, "rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0)
    den_ = 1;
}

Rational operator/(const Rational &a, const Rational &b) {
  if (b.is_zero())
    fail(ErrorCode::precondition, "division by zero rational");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational Rational::inverse() const {
  if (is_zero())
    fail(ErrorCode::precondition, "inverse of zero");
  return Rational(den_, num_);
}

std::string Rational::str() const {
  if (den_ == 1)
    return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

} // namespace hsg::tower
