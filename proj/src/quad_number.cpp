#include "kfib/quad_number.hpp"

#include <ostream>
#include <utility>

#include "kfib/errors.hpp"

namespace kfib {

QuadNumber::QuadNumber(Rational a, Rational b, Rational radicand)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(radicand)) {
  normalize();
}

QuadNumber QuadNumber::sqrt_of(const Rational& radicand) {
  return QuadNumber(Rational(0), Rational(1), radicand);
}

void QuadNumber::normalize() {
  if (d_ < 0) throw usage_error("radicand must be nonnegative");
  if (b_ == 0 || d_ == 0) {
    b_ = 0;
    d_ = 0;
    return;
  }
  if (auto root = exact_sqrt(d_)) {
    a_ += b_ * *root;
    b_ = 0;
    d_ = 0;
  }
}

const Rational& QuadNumber::joint_radicand(const QuadNumber& x, const QuadNumber& y) {
  if (x.d_ == y.d_) return x.d_;
  if (x.d_ == 0) return y.d_;
  if (y.d_ == 0) return x.d_;
  throw usage_error("cannot combine quadratic numbers over different radicands (" +
                    format_rational(x.d_) + " vs " + format_rational(y.d_) + ")");
}

QuadNumber QuadNumber::operator-() const {
  QuadNumber out = *this;
  out.a_ = -out.a_;
  out.b_ = -out.b_;
  return out;
}

QuadNumber& QuadNumber::operator+=(const QuadNumber& o) {
  d_ = joint_radicand(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

QuadNumber& QuadNumber::operator-=(const QuadNumber& o) {
  d_ = joint_radicand(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

QuadNumber& QuadNumber::operator*=(const QuadNumber& o) {
  const Rational d = joint_radicand(*this, o);
  Rational a = a_ * o.a_ + b_ * o.b_ * d;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = d;
  normalize();
  return *this;
}

QuadNumber& QuadNumber::operator/=(const QuadNumber& o) {
  if (o.is_zero()) throw arithmetic_error("division by zero");
  const Rational d = joint_radicand(*this, o);
  // 1/(a+b*sqrt(d)) = (a-b*sqrt(d)) / (a^2 - b^2 d); the norm cannot vanish
  // for a nonzero value since sqrt(d) is irrational after normalization.
  const Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * d;
  Rational a = (a_ * o.a_ - b_ * o.b_ * d) / norm;
  Rational b = (b_ * o.a_ - a_ * o.b_) / norm;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = d;
  normalize();
  return *this;
}

int qsign(const QuadNumber& x) {
  const int sa = sign_of(x.rational_part());
  const int sb = sign_of(x.radical_part());
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 against b^2 d; equality would force sqrt(d)
  // rational, which normalization has excluded.
  const Rational lhs = x.rational_part() * x.rational_part();
  const Rational rhs = x.radical_part() * x.radical_part() * x.radicand();
  const int cmp = lhs > rhs ? 1 : -1;
  return sa > 0 ? cmp : -cmp;
}

QuadNumber abs(const QuadNumber& x) { return qsign(x) < 0 ? -x : x; }

QuadNumber qpow(const QuadNumber& x, long exponent) {
  if (exponent < 0) {
    if (x.is_zero()) throw arithmetic_error("zero to a negative power");
    return QuadNumber(1) / qpow(x, -exponent);
  }
  QuadNumber result(1);
  QuadNumber base = x;
  unsigned long e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1UL) result *= base;
    base *= base;
    e >>= 1UL;
  }
  return result;
}

BigFloat qfloat(const QuadNumber& x, unsigned precision_bits) {
  if (precision_bits < 53) {
    throw usage_error("qfloat precision must be at least 53 bits");
  }
  const mpfr_prec_t work = static_cast<mpfr_prec_t>(precision_bits) + 64;
  mpfr_t acc;
  mpfr_t tmp;
  mpfr_init2(acc, work);
  mpfr_init2(tmp, work);
  if (x.radical_part() == 0) {
    mpfr_set_zero(acc, 1);
  } else {
    mpfr_set_q(tmp, x.radicand().backend().data(), MPFR_RNDN);
    mpfr_sqrt(tmp, tmp, MPFR_RNDN);
    mpfr_set_q(acc, x.radical_part().backend().data(), MPFR_RNDN);
    mpfr_mul(acc, acc, tmp, MPFR_RNDN);
  }
  mpfr_set_q(tmp, x.rational_part().backend().data(), MPFR_RNDN);
  mpfr_add(acc, acc, tmp, MPFR_RNDN);
  BigFloat out;
  mpfr_set_prec(out.backend().data(), static_cast<mpfr_prec_t>(precision_bits));
  mpfr_set(out.backend().data(), acc, MPFR_RNDN);
  mpfr_clear(acc);
  mpfr_clear(tmp);
  return out;
}

BigFloat to_bigfloat(const QuadNumber& x) { return qfloat(x, working_precision_bits()); }

std::string format_quad(const QuadNumber& x) {
  if (x.is_rational()) return format_rational(x.rational_part());
  std::string radical;
  const Rational b = x.radical_part();
  const Rational mag = b < 0 ? Rational(-b) : b;
  radical = (b < 0 ? "-" : "");
  if (mag != 1) radical += format_rational(mag) + "*";
  radical += "sqrt(" + format_rational(x.radicand()) + ")";
  if (x.rational_part() == 0) return radical;
  if (b < 0) {
    radical.erase(0, 1);
    return format_rational(x.rational_part()) + " - " + radical;
  }
  return format_rational(x.rational_part()) + " + " + radical;
}

std::ostream& operator<<(std::ostream& os, const QuadNumber& x) {
  return os << format_quad(x);
}

}  // namespace kfib
