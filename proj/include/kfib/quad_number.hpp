#pragma once

#include <iosfwd>
#include <string>

#include "kfib/bigfloat.hpp"
#include "kfib/rational.hpp"

namespace kfib {

// Exact element a + b*sqrt(d) of the real quadratic extension Q(sqrt(d)).
//
// Values are normalized so that b == 0 implies d == 0, and a perfect-square
// radicand is folded into the rational part. Values with different nonzero
// radicands never combine; arithmetic on mixed radicands throws instead of
// coercing.
class QuadNumber {
 public:
  QuadNumber() : a_(0), b_(0), d_(0) {}
  QuadNumber(int value) : a_(value), b_(0), d_(0) {}  // NOLINT: implicit by design
  QuadNumber(long value) : a_(value), b_(0), d_(0) {}  // NOLINT
  QuadNumber(Rational rational_value)  // NOLINT
      : a_(std::move(rational_value)), b_(0), d_(0) {}
  QuadNumber(Rational a, Rational b, Rational radicand);

  static QuadNumber sqrt_of(const Rational& radicand);

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }
  const Rational& radicand() const { return d_; }
  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  QuadNumber operator-() const;
  QuadNumber& operator+=(const QuadNumber& o);
  QuadNumber& operator-=(const QuadNumber& o);
  QuadNumber& operator*=(const QuadNumber& o);
  QuadNumber& operator/=(const QuadNumber& o);

  friend QuadNumber operator+(QuadNumber a, const QuadNumber& b) { return a += b; }
  friend QuadNumber operator-(QuadNumber a, const QuadNumber& b) { return a -= b; }
  friend QuadNumber operator*(QuadNumber a, const QuadNumber& b) { return a *= b; }
  friend QuadNumber operator/(QuadNumber a, const QuadNumber& b) { return a /= b; }
  friend bool operator==(const QuadNumber& a, const QuadNumber& b) {
    return a.a_ == b.a_ && a.b_ == b.b_ && a.d_ == b.d_;
  }
  friend bool operator!=(const QuadNumber& a, const QuadNumber& b) { return !(a == b); }

 private:
  void normalize();
  // The shared radicand for combining x and y; throws on a true mismatch.
  static const Rational& joint_radicand(const QuadNumber& x, const QuadNumber& y);

  Rational a_;
  Rational b_;
  Rational d_;
};

// Exact sign of a + b*sqrt(d), computed without floating point.
int qsign(const QuadNumber& x);

QuadNumber abs(const QuadNumber& x);

// x^exponent; negative exponents require x != 0.
QuadNumber qpow(const QuadNumber& x, long exponent);

// Evaluation correctly rounded within 1 ulp at the requested bit precision
// (>= 53).
BigFloat qfloat(const QuadNumber& x, unsigned precision_bits);

// Evaluation at the working precision.
BigFloat to_bigfloat(const QuadNumber& x);

// "a + b*sqrt(d)" with rational parts; zero terms omitted.
std::string format_quad(const QuadNumber& x);

std::ostream& operator<<(std::ostream& os, const QuadNumber& x);

}  // namespace kfib
