#include "kfib/bigfloat.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "kfib/errors.hpp"

namespace kfib {

namespace {

unsigned g_precision_bits = 128;

unsigned digits10_for_bits(unsigned bits) {
  // ceil(bits*log10(2)) plus slack so the decimal precision never
  // undershoots the requested binary one.
  return static_cast<unsigned>(bits * 0.30103) + 4;
}

// Default-constructed BigFloats carry the 128-bit working precision even if
// no caller configures it explicitly.
const struct PrecisionInit {
  PrecisionInit() { BigFloat::default_precision(digits10_for_bits(128)); }
} g_precision_init;

}  // namespace

unsigned precision_bits_from_env(unsigned fallback_bits) {
  const char* raw = std::getenv("KFIB_PRECISION_BITS");
  if (raw == nullptr || *raw == '\0') return fallback_bits;
  char* end = nullptr;
  const long parsed = std::strtol(raw, &end, 10);
  if (end == nullptr || *end != '\0' || parsed < 53 || parsed > 1'000'000) {
    throw usage_error("KFIB_PRECISION_BITS must be an integer >= 53");
  }
  return static_cast<unsigned>(parsed);
}

void set_working_precision_bits(unsigned bits) {
  if (bits < 53) throw usage_error("working precision must be at least 53 bits");
  g_precision_bits = bits;
  BigFloat::default_precision(digits10_for_bits(bits));
}

unsigned working_precision_bits() { return g_precision_bits; }

BigFloat to_bigfloat(const Rational& value) {
  BigFloat out;
  mpfr_set_q(out.backend().data(), value.backend().data(), MPFR_RNDN);
  return out;
}

BigFloat bigfloat_pi() {
  BigFloat out;
  mpfr_const_pi(out.backend().data(), MPFR_RNDN);
  return out;
}

std::string format_float(const BigFloat& value, unsigned significant) {
  if (significant == 0) significant = 1;
  // Scientific precision counts digits after the point; one more lands in
  // front of it.
  return value.str(significant - 1, std::ios_base::scientific);
}

Complex& Complex::operator/=(const Complex& o) {
  const BigFloat norm = o.re * o.re + o.im * o.im;
  if (norm == 0) throw arithmetic_error("complex division by zero");
  BigFloat r = (re * o.re + im * o.im) / norm;
  im = (im * o.re - re * o.im) / norm;
  re = std::move(r);
  return *this;
}

BigFloat abs(const Complex& value) {
  using boost::multiprecision::sqrt;
  return sqrt(value.re * value.re + value.im * value.im);
}

Complex conj(const Complex& value) { return {value.re, -value.im}; }

Complex unit_circle_point(const BigFloat& angle) {
  using boost::multiprecision::cos;
  using boost::multiprecision::sin;
  return {cos(angle), sin(angle)};
}

}  // namespace kfib
