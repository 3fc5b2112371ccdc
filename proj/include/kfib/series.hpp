#pragma once

#include <cstddef>

#include <utility>
#include <vector>

#include "kfib/bigfloat.hpp"
#include "kfib/errors.hpp"
#include "kfib/quad_number.hpp"
#include "kfib/rational.hpp"

namespace kfib {

// Coefficient-mode policy. Exact mode works in Q(sqrt(d)) via QuadNumber;
// float mode uses BigFloat (real sweeps) or Complex (boundary probes).
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<QuadNumber> {
  static constexpr bool exact_mode = true;
  static QuadNumber zero() { return {}; }
  static QuadNumber one() { return QuadNumber(1); }
  static QuadNumber from_int(long v) { return QuadNumber(v); }
  static QuadNumber from_rational(const Rational& v) { return QuadNumber(v); }
  static QuadNumber from_quad(const QuadNumber& v) { return v; }
  static bool is_zero(const QuadNumber& v) { return v.is_zero(); }
  static int sign(const QuadNumber& v) { return qsign(v); }
  static QuadNumber abs_value(const QuadNumber& v) { return kfib::abs(v); }
  static BigFloat magnitude(const QuadNumber& v) { return to_bigfloat(abs_value(v)); }
  static bool is_integer_value(const QuadNumber& v) {
    return v.is_rational() && kfib::is_integer(v.rational_part());
  }
  static long to_long(const QuadNumber& v) {
    return numerator(v.rational_part()).convert_to<long>();
  }
};

template <>
struct scalar_traits<BigFloat> {
  static constexpr bool exact_mode = false;
  static BigFloat zero() { return BigFloat(0); }
  static BigFloat one() { return BigFloat(1); }
  static BigFloat from_int(long v) { return BigFloat(v); }
  static BigFloat from_rational(const Rational& v) { return to_bigfloat(v); }
  static BigFloat from_quad(const QuadNumber& v) { return to_bigfloat(v); }
  static bool is_zero(const BigFloat& v) { return v == 0; }
  static int sign(const BigFloat& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }
  static BigFloat abs_value(const BigFloat& v) { return boost::multiprecision::abs(v); }
  static BigFloat magnitude(const BigFloat& v) { return abs_value(v); }
  static bool is_integer_value(const BigFloat& v) {
    return boost::multiprecision::floor(v) == v;
  }
  static long to_long(const BigFloat& v) { return v.convert_to<long>(); }
};

template <>
struct scalar_traits<Complex> {
  static constexpr bool exact_mode = false;
  static Complex zero() { return {}; }
  static Complex one() { return Complex(BigFloat(1)); }
  static Complex from_int(long v) { return Complex(BigFloat(v)); }
  static Complex from_rational(const Rational& v) { return Complex(to_bigfloat(v)); }
  static Complex from_quad(const QuadNumber& v) { return Complex(to_bigfloat(v)); }
  static bool is_zero(const Complex& v) { return v.re == 0 && v.im == 0; }
  static int sign(const Complex& v) {
    if (v.im != 0) throw usage_error("sign of a non-real complex value");
    return v.re > 0 ? 1 : (v.re < 0 ? -1 : 0);
  }
  static Complex abs_value(const Complex& v) { return Complex(kfib::abs(v)); }
  static BigFloat magnitude(const Complex& v) { return kfib::abs(v); }
  static bool is_integer_value(const Complex& v) {
    return v.im == 0 && boost::multiprecision::floor(v.re) == v.re;
  }
  static long to_long(const Complex& v) { return v.re.convert_to<long>(); }
};

// A formal power series truncated at a fixed order N: coefficients of
// z^0 .. z^N. Arithmetic never reads beyond index N; binary operations
// require equal orders.
template <class S>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order)
      : c_(order + 1, scalar_traits<S>::zero()) {}

  static TruncatedSeries identity(std::size_t order) {
    TruncatedSeries s(order);
    if (order >= 1) s.c_[1] = scalar_traits<S>::one();
    return s;
  }

  static TruncatedSeries constant(const S& c0, std::size_t order) {
    TruncatedSeries s(order);
    s.c_[0] = c0;
    return s;
  }

  std::size_t order() const { return c_.size() - 1; }
  const S& operator[](std::size_t k) const { return c_.at(k); }
  S& operator[](std::size_t k) { return c_.at(k); }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.c_ == b.c_;
  }

 private:
  std::vector<S> c_;
};

namespace detail {

template <class S>
void require_same_order(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) {
  if (a.order() != b.order()) {
    throw usage_error("series operands must share the truncation order");
  }
}

}  // namespace detail

template <class S>
TruncatedSeries<S> operator+(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) {
  detail::require_same_order(a, b);
  TruncatedSeries<S> out(a.order());
  for (std::size_t k = 0; k <= a.order(); ++k) out[k] = a[k] + b[k];
  return out;
}

template <class S>
TruncatedSeries<S> operator-(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) {
  detail::require_same_order(a, b);
  TruncatedSeries<S> out(a.order());
  for (std::size_t k = 0; k <= a.order(); ++k) out[k] = a[k] - b[k];
  return out;
}

template <class S>
TruncatedSeries<S> operator-(const TruncatedSeries<S>& a) {
  TruncatedSeries<S> out(a.order());
  for (std::size_t k = 0; k <= a.order(); ++k) out[k] = -a[k];
  return out;
}

template <class S>
TruncatedSeries<S> scale(const S& factor, const TruncatedSeries<S>& a) {
  TruncatedSeries<S> out(a.order());
  for (std::size_t k = 0; k <= a.order(); ++k) out[k] = factor * a[k];
  return out;
}

// Cauchy product truncated at the shared order.
template <class S>
TruncatedSeries<S> operator*(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) {
  detail::require_same_order(a, b);
  TruncatedSeries<S> out(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n) {
    S acc = scalar_traits<S>::zero();
    for (std::size_t k = 0; k <= n; ++k) acc += a[k] * b[n - k];
    out[n] = acc;
  }
  return out;
}

// Quotient q with num = q * den up to the truncation order.
template <class S>
TruncatedSeries<S> div(const TruncatedSeries<S>& num, const TruncatedSeries<S>& den) {
  detail::require_same_order(num, den);
  if (scalar_traits<S>::is_zero(den[0])) {
    throw arithmetic_error("series division requires a nonzero constant term");
  }
  TruncatedSeries<S> out(num.order());
  for (std::size_t n = 0; n <= num.order(); ++n) {
    S acc = num[n];
    for (std::size_t k = 0; k < n; ++k) acc -= out[k] * den[n - k];
    out[n] = acc / den[0];
  }
  return out;
}

// outer(inner(z)) truncated; inner must have zero constant term.
template <class S>
TruncatedSeries<S> compose(const TruncatedSeries<S>& outer, const TruncatedSeries<S>& inner) {
  detail::require_same_order(outer, inner);
  if (!scalar_traits<S>::is_zero(inner[0])) {
    throw usage_error("composition requires the inner series to vanish at 0");
  }
  const std::size_t n = outer.order();
  TruncatedSeries<S> result = TruncatedSeries<S>::constant(outer[n], n);
  for (std::size_t k = n; k-- > 0;) {
    result = result * inner;
    result[0] += outer[k];
  }
  return result;
}

// Compositional inverse of f = z + ...: the unique g with f(g(w)) = w up to
// the truncation order. Built by successive coefficient correction.
template <class S>
TruncatedSeries<S> revert(const TruncatedSeries<S>& f) {
  if (!scalar_traits<S>::is_zero(f[0]) ||
      !(f.order() >= 1 && f[1] == scalar_traits<S>::one())) {
    throw usage_error("series reversion requires f = z + higher-order terms");
  }
  TruncatedSeries<S> g = TruncatedSeries<S>::identity(f.order());
  for (std::size_t n = 2; n <= f.order(); ++n) {
    const TruncatedSeries<S> h = compose(f, g);
    g[n] -= h[n];
  }
  return g;
}

// Termwise derivative; the order drops by one and the series is re-padded
// with a zero top coefficient.
template <class S>
TruncatedSeries<S> diff(const TruncatedSeries<S>& f) {
  TruncatedSeries<S> out(f.order());
  for (std::size_t k = 1; k <= f.order(); ++k) {
    out[k - 1] = scalar_traits<S>::from_int(static_cast<long>(k)) * f[k];
  }
  return out;
}

// log f for f = 1 + ..., via integrating f'/f.
template <class S>
TruncatedSeries<S> log_series(const TruncatedSeries<S>& f) {
  if (!(f[0] == scalar_traits<S>::one())) {
    throw usage_error("series log requires constant term 1");
  }
  const TruncatedSeries<S> ratio = div(diff(f), f);
  TruncatedSeries<S> out(f.order());
  for (std::size_t k = 1; k <= f.order(); ++k) {
    out[k] = ratio[k - 1] / scalar_traits<S>::from_int(static_cast<long>(k));
  }
  return out;
}

// exp f for f with zero constant term, by the standard convolution
// recurrence n e_n = sum_k k f_k e_{n-k}.
template <class S>
TruncatedSeries<S> exp_series(const TruncatedSeries<S>& f) {
  if (!scalar_traits<S>::is_zero(f[0])) {
    throw usage_error("series exp requires zero constant term");
  }
  TruncatedSeries<S> out(f.order());
  out[0] = scalar_traits<S>::one();
  for (std::size_t n = 1; n <= f.order(); ++n) {
    S acc = scalar_traits<S>::zero();
    for (std::size_t k = 1; k <= n; ++k) {
      acc += scalar_traits<S>::from_int(static_cast<long>(k)) * f[k] * out[n - k];
    }
    out[n] = acc / scalar_traits<S>::from_int(static_cast<long>(n));
  }
  return out;
}

template <class S>
TruncatedSeries<S> pow_int(const TruncatedSeries<S>& f, long exponent) {
  if (exponent < 0) {
    return div(TruncatedSeries<S>::constant(scalar_traits<S>::one(), f.order()),
               pow_int(f, -exponent));
  }
  TruncatedSeries<S> result =
      TruncatedSeries<S>::constant(scalar_traits<S>::one(), f.order());
  TruncatedSeries<S> base = f;
  unsigned long e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1UL) result = result * base;
    base = base * base;
    e >>= 1UL;
  }
  return result;
}

// f^e for f = 1 + ... and an arbitrary scalar exponent, as exp(e log f).
// Integer exponents fall back to repeated multiplication so the operation
// stays available in exact mode.
template <class S>
TruncatedSeries<S> pow_scalar(const TruncatedSeries<S>& f, const S& exponent) {
  if (scalar_traits<S>::is_integer_value(exponent)) {
    if (!(f[0] == scalar_traits<S>::one())) {
      throw usage_error("series power requires constant term 1");
    }
    return pow_int(f, scalar_traits<S>::to_long(exponent));
  }
  if constexpr (scalar_traits<S>::exact_mode) {
    throw usage_error("non-integer series exponents require float mode");
  } else {
    return exp_series(scale(exponent, log_series(f)));
  }
}

template <class To, class From, class Map>
TruncatedSeries<To> map_series(const TruncatedSeries<From>& s, Map&& map) {
  TruncatedSeries<To> out(s.order());
  for (std::size_t k = 0; k <= s.order(); ++k) out[k] = map(s[k]);
  return out;
}

template <class S>
BigFloat max_abs_difference(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) {
  detail::require_same_order(a, b);
  BigFloat worst(0);
  for (std::size_t k = 0; k <= a.order(); ++k) {
    const BigFloat d = scalar_traits<S>::magnitude(a[k] - b[k]);
    if (d > worst) worst = d;
  }
  return worst;
}

}  // namespace kfib
