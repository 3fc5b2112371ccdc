#pragma once

#include <cstddef>
#include <vector>

#include "kfib/kappa_context.hpp"
#include "kfib/series.hpp"

namespace kfib {

// Expansion of (1 + tau^2 z^2) / (1 - kappa tau z - tau^2 z^2) by series
// division.
template <class S>
TruncatedSeries<S> ptilde_series(const KappaContext& ctx, std::size_t order) {
  using T = scalar_traits<S>;
  const S tau = T::from_quad(ctx.tau());
  const S kappa = T::from_rational(ctx.kappa());
  const S tau_sq = tau * tau;
  TruncatedSeries<S> numerator(order);
  numerator[0] = T::one();
  if (order >= 2) numerator[2] = tau_sq;
  TruncatedSeries<S> denominator(order);
  denominator[0] = T::one();
  if (order >= 1) denominator[1] = -(kappa * tau);
  if (order >= 2) denominator[2] = -tau_sq;
  return div(numerator, denominator);
}

// Closed-form coefficient (F_{n-1} + F_{n+1}) tau^n, n >= 1.
QuadNumber ptilde_coeff(const KappaContext& ctx, std::size_t n);

// First coefficients c1, c2, c3 of a function 1 + c1 z + c2 z^2 + ... with
// positive real part. Arbitrary values are allowed so counterexamples can
// be probed; sweeps check the |c_i| <= 2 coefficient bound explicitly.
template <class S>
struct CaratheodoryPrefix {
  S c1{scalar_traits<S>::zero()};
  S c2{scalar_traits<S>::zero()};
  S c3{scalar_traits<S>::zero()};

  bool within_coefficient_bound() const {
    const S two = scalar_traits<S>::from_int(2);
    auto ok = [&](const S& c) {
      return scalar_traits<S>::sign(two - scalar_traits<S>::abs_value(c)) >= 0;
    };
    return ok(c1) && ok(c2) && ok(c3);
  }
};

template <class S>
struct SchwarzPrefix {
  S w1{scalar_traits<S>::zero()};
  S w2{scalar_traits<S>::zero()};
  S w3{scalar_traits<S>::zero()};
};

// u = (h - 1)/(h + 1) coefficientwise: w1 = c1/2, w2 = (c2 - c1^2/2)/2,
// w3 = (c3 - c1 c2 + c1^3/4)/2.
template <class S>
SchwarzPrefix<S> schwarz_from_caratheodory(const CaratheodoryPrefix<S>& c) {
  using T = scalar_traits<S>;
  const S half = T::one() / T::from_int(2);
  const S quarter = T::one() / T::from_int(4);
  SchwarzPrefix<S> w;
  w.w1 = c.c1 * half;
  w.w2 = (c.c2 - c.c1 * c.c1 * half) * half;
  w.w3 = (c.c3 - c.c1 * c.c2 + c.c1 * c.c1 * c.c1 * quarter) * half;
  return w;
}

template <class S>
TruncatedSeries<S> schwarz_series(const CaratheodoryPrefix<S>& c, std::size_t order) {
  const SchwarzPrefix<S> w = schwarz_from_caratheodory(c);
  TruncatedSeries<S> u(order);
  if (order >= 1) u[1] = w.w1;
  if (order >= 2) u[2] = w.w2;
  if (order >= 3) u[3] = w.w3;
  return u;
}

// Coefficients of ptilde(u(z)) through z^3, written out directly:
//   z:   p1 c1 / 2
//   z^2: (c2 - c1^2/2) p1 / 2 + c1^2 p2 / 4
//   z^3: (c3 - c1 c2 + c1^3/4) p1 / 2 + c1 (c2 - c1^2/2) p2 / 2 + c1^3 p3 / 8
// An independent route via compose(ptilde_series, schwarz_series) is used
// as the oracle in tests.
template <class S>
TruncatedSeries<S> subordination_expand(const KappaContext& ctx,
                                        const CaratheodoryPrefix<S>& c,
                                        std::size_t order) {
  using T = scalar_traits<S>;
  if (order > 3) {
    throw usage_error("subordination_expand is defined through z^3 only");
  }
  const S half = T::one() / T::from_int(2);
  const S quarter = T::one() / T::from_int(4);
  const S eighth = T::one() / T::from_int(8);
  const S p1 = T::from_quad(ptilde_coeff(ctx, 1));
  const S p2 = T::from_quad(ptilde_coeff(ctx, 2));
  const S p3 = T::from_quad(ptilde_coeff(ctx, 3));

  TruncatedSeries<S> out(order);
  out[0] = T::one();
  if (order >= 1) out[1] = p1 * c.c1 * half;
  if (order >= 2) {
    out[2] = (c.c2 - c.c1 * c.c1 * half) * half * p1 + c.c1 * c.c1 * quarter * p2;
  }
  if (order >= 3) {
    out[3] = (c.c3 - c.c1 * c.c2 + c.c1 * c.c1 * c.c1 * quarter) * half * p1 +
             c.c1 * (c.c2 - c.c1 * c.c1 * half) * half * p2 +
             c.c1 * c.c1 * c.c1 * eighth * p3;
  }
  return out;
}

// Minimum of Re ptilde(r e^{i theta}) over a uniform theta grid, evaluated
// through the closed rational form rather than a truncation.
BigFloat min_real_part_probe(const KappaContext& ctx, const BigFloat& radius,
                             std::size_t grid_size);

// Real-slice Caratheodory samples: conjugate-averaged extreme points
// (1 + xz)/(1 - xz), |x| = 1, giving c_n = 2 T_n(u) for u = cos(arg x),
// padded with pairwise convex combinations of adjacent extremes.
std::vector<CaratheodoryPrefix<QuadNumber>> caratheodory_samples(std::size_t count);

}  // namespace kfib
