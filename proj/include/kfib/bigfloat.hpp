#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "kfib/rational.hpp"

namespace kfib {

// Runtime-precision float; the working precision is process-wide and set
// in bits (env KFIB_PRECISION_BITS, default 128).
using BigFloat = boost::multiprecision::mpfr_float;

unsigned precision_bits_from_env(unsigned fallback_bits = 128);
void set_working_precision_bits(unsigned bits);
unsigned working_precision_bits();

// Correctly rounded conversion at the working precision.
BigFloat to_bigfloat(const Rational& value);

BigFloat bigfloat_pi();

// Round-trippable decimal form, default 17 significant digits.
std::string format_float(const BigFloat& value, unsigned significant = 17);

// Complex value backed by BigFloat parts. Only the operations the series
// and boundary-probe code need.
struct Complex {
  BigFloat re{0};
  BigFloat im{0};

  Complex() = default;
  Complex(BigFloat real) : re(std::move(real)) {}  // NOLINT: implicit by design
  Complex(BigFloat real, BigFloat imag) : re(std::move(real)), im(std::move(imag)) {}

  Complex operator-() const { return {-re, -im}; }
  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    BigFloat r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator/=(const Complex& o);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re == b.re && a.im == b.im;
  }
};

BigFloat abs(const Complex& value);
Complex conj(const Complex& value);
Complex unit_circle_point(const BigFloat& angle);  // cos + i sin

}  // namespace kfib
