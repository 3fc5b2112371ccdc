#pragma once

#include "kfib/functionals.hpp"
#include "kfib/kappa_context.hpp"
#include "kfib/series.hpp"

namespace kfib {

// Closed-form coefficient estimates for one family at one parameter point.
// The |a2| estimate is carried squared so exact mode stays inside Q(sqrt(d));
// radicand is the expression under the square root (the domination
// denominator), and valid records whether it is positive.
template <class S>
struct BoundReport {
  bool valid = false;
  S a2_bound_sq{scalar_traits<S>::zero()};
  S a3_bound{scalar_traits<S>::zero()};
  S radicand{scalar_traits<S>::zero()};
  S flat{scalar_traits<S>::zero()};  // the mu-independent Fekete constant
};

template <class S>
BigFloat a2_bound_value(const BoundReport<S>& report) {
  using boost::multiprecision::sqrt;
  return sqrt(scalar_traits<S>::magnitude(report.a2_bound_sq));
}

enum class FeketeBranch { flat, slope };

template <class S>
struct FeketeReport {
  bool valid = false;
  S mu{scalar_traits<S>::zero()};
  S value{scalar_traits<S>::zero()};
  FeketeBranch branch = FeketeBranch::flat;
  S threshold{scalar_traits<S>::zero()};  // the |mu - 1| crossover
  S h_mu{scalar_traits<S>::zero()};
};

namespace detail {

template <class S>
struct BoundIngredients {
  S kappa;
  S tau;
  S kappa_tau_abs;  // |kappa tau|
  S core;           // kappa - (kappa^2 + 2) tau
  S kappa3_tau2;    // kappa^3 tau^2
  S kappa2_tau;     // kappa^2 tau
};

template <class S>
BoundIngredients<S> bound_ingredients(const KappaContext& ctx) {
  using T = scalar_traits<S>;
  if (sign_of(ctx.kappa()) <= 0) {
    throw usage_error("coefficient bounds require kappa > 0");
  }
  BoundIngredients<S> ing;
  ing.kappa = T::from_rational(ctx.kappa());
  ing.tau = T::from_quad(ctx.tau());
  ing.kappa_tau_abs = T::abs_value(ing.kappa * ing.tau);
  ing.core = ing.kappa - (ing.kappa * ing.kappa + T::from_int(2)) * ing.tau;
  ing.kappa3_tau2 = ing.kappa * ing.kappa * ing.kappa * ing.tau * ing.tau;
  ing.kappa2_tau = ing.kappa * ing.kappa * ing.tau;
  return ing;
}

// Shared piecewise structure: flat constant |gamma kappa tau| / flat_den,
// slope 4|h(mu)| with h(mu) = slope_factor (1-mu) gamma^2 kappa^3 tau^2 /
// (4 den), switching where both branches meet.
template <class S>
FeketeReport<S> piecewise_fekete(const BoundIngredients<S>& ing, const S& gamma,
                                 const S& den, const S& flat_den, long slope_factor,
                                 const S& mu) {
  using T = scalar_traits<S>;
  FeketeReport<S> report;
  report.mu = mu;
  if (T::sign(den) <= 0 || T::sign(flat_den) <= 0) return report;
  report.valid = true;

  const S gamma_abs = T::abs_value(gamma);
  const S flat = gamma_abs * ing.kappa_tau_abs / flat_den;
  const S factor = T::from_int(slope_factor);
  report.h_mu = factor * (T::one() - mu) * gamma * gamma * ing.kappa3_tau2 /
                (T::from_int(4) * den);
  report.threshold = den / (factor * flat_den * gamma_abs * ing.kappa * ing.kappa *
                            T::abs_value(ing.tau));
  const S slope = T::from_int(4) * T::abs_value(report.h_mu);
  const S distance = T::abs_value(mu - T::one());
  if (T::sign(distance - report.threshold) <= 0) {
    report.branch = FeketeBranch::flat;
    report.value = flat;
  } else {
    report.branch = FeketeBranch::slope;
    report.value = slope;
  }
  return report;
}

}  // namespace detail

// Denominator of the flat Fekete constant: 1+2a+2l, 2+l, 3l-1, 2(1+2l).
template <class S>
S family_flat_denominator(const ClassSpec<S>& spec) {
  using T = scalar_traits<S>;
  const S one = T::one();
  const S two = T::from_int(2);
  switch (spec.family) {
    case Family::W: return one + two * spec.alpha + two * spec.lambda;
    case Family::R: return two + spec.lambda;
    case Family::B: return T::from_int(3) * spec.lambda - one;
    case Family::P: return two * (one + two * spec.lambda);
  }
  throw usage_error("unknown family");
}

inline long fekete_slope_factor(Family family) {
  return family == Family::R ? 2 : 1;
}

template <class S>
BoundReport<S> theorem_bounds(const KappaContext& ctx, const ClassSpec<S>& spec) {
  using T = scalar_traits<S>;
  validate_domain(spec);
  const auto ing = detail::bound_ingredients<S>(ctx);
  const S one = T::one();
  const S two = T::from_int(2);
  const S l = spec.lambda;
  const S a = spec.alpha;
  const S g = spec.gamma;
  const S g_abs = T::abs_value(g);

  BoundReport<S> report;
  report.radicand = family_denominator(ctx, spec);
  const S flat_den = family_flat_denominator(spec);
  if (T::sign(report.radicand) <= 0 || T::sign(flat_den) <= 0) return report;
  report.valid = true;
  report.flat = g_abs * ing.kappa_tau_abs / flat_den;

  switch (spec.family) {
    case Family::W:
      report.a2_bound_sq = g * g * ing.kappa3_tau2 / report.radicand;
      report.a3_bound = g_abs * ing.kappa_tau_abs * ing.core * (one + a) * (one + a) /
                        ((one + two * a + two * l) * report.radicand);
      break;
    case Family::R:
      report.a2_bound_sq = two * g * g * ing.kappa3_tau2 / report.radicand;
      report.a3_bound = g_abs * ing.kappa_tau_abs *
                        (report.radicand - two * (two + l) * g * ing.kappa2_tau) /
                        ((two + l) * report.radicand);
      break;
    case Family::B:
      report.a2_bound_sq = ing.kappa3_tau2 / report.radicand;
      report.a3_bound =
          ing.kappa_tau_abs *
          (ing.core * (two * l - one) * (two * l - one) +
           (two * l * l - T::from_int(4) * l + one) * ing.kappa2_tau) /
          ((T::from_int(3) * l - one) * report.radicand);
      break;
    case Family::P:
      report.a2_bound_sq = ing.kappa3_tau2 / report.radicand;
      report.a3_bound = ing.kappa_tau_abs *
                        (ing.kappa - two * (ing.kappa * ing.kappa + one) * ing.tau) *
                        (one + l) * (one + l) /
                        (two * (one + two * l) * report.radicand);
      break;
  }
  return report;
}

template <class S>
FeketeReport<S> fekete_bound(const KappaContext& ctx, const ClassSpec<S>& spec,
                             const S& mu) {
  validate_domain(spec);
  const auto ing = detail::bound_ingredients<S>(ctx);
  return detail::piecewise_fekete(ing, spec.gamma, family_denominator(ctx, spec),
                                  family_flat_denominator(spec),
                                  fekete_slope_factor(spec.family), mu);
}

// Convenience wrappers matching the four family signatures.
template <class S>
BoundReport<S> bounds_w(const KappaContext& ctx, const S& gamma, const S& lambda,
                        const S& alpha) {
  return theorem_bounds(ctx, ClassSpec<S>{Family::W, gamma, lambda, alpha});
}
template <class S>
BoundReport<S> bounds_r(const KappaContext& ctx, const S& gamma, const S& lambda) {
  return theorem_bounds(
      ctx, ClassSpec<S>{Family::R, gamma, lambda, scalar_traits<S>::zero()});
}
template <class S>
BoundReport<S> bounds_b(const KappaContext& ctx, const S& lambda) {
  return theorem_bounds(ctx, ClassSpec<S>{Family::B, scalar_traits<S>::one(), lambda,
                                          scalar_traits<S>::zero()});
}
template <class S>
BoundReport<S> bounds_p(const KappaContext& ctx, const S& lambda) {
  return theorem_bounds(ctx, ClassSpec<S>{Family::P, scalar_traits<S>::one(), lambda,
                                          scalar_traits<S>::zero()});
}

// Corollary evaluators, transcribed from their own displays so the
// specialization identities are genuine two-route checks.

template <class S>
struct CorollaryBounds {
  BoundReport<S> report;
  // Fekete parameterization of the display: value(mu) pieces.
  S fekete_den{scalar_traits<S>::zero()};
  S fekete_flat_den{scalar_traits<S>::zero()};
  S gamma{scalar_traits<S>::one()};
};

template <class S>
FeketeReport<S> corollary_fekete(const KappaContext& ctx, const CorollaryBounds<S>& cor,
                                 const S& mu) {
  const auto ing = detail::bound_ingredients<S>(ctx);
  return detail::piecewise_fekete(ing, cor.gamma, cor.fekete_den, cor.fekete_flat_den,
                                  1, mu);
}

// F-type class: W at alpha = 1 + 2 lambda.
template <class S>
CorollaryBounds<S> cor_fsl(const KappaContext& ctx, const S& gamma, const S& lambda) {
  using T = scalar_traits<S>;
  const auto ing = detail::bound_ingredients<S>(ctx);
  const S one = T::one();
  const S l = lambda;
  const S g_abs = T::abs_value(gamma);
  CorollaryBounds<S> cor;
  cor.gamma = gamma;
  const S den = T::from_int(3) * gamma * ing.kappa2_tau * (one + T::from_int(2) * l) +
                T::from_int(4) * ing.core * (one + l) * (one + l);
  cor.fekete_den = den;
  cor.fekete_flat_den = T::from_int(3) + T::from_int(6) * l;
  cor.report.radicand = den;
  if (T::sign(den) <= 0) return cor;
  cor.report.valid = true;
  cor.report.a2_bound_sq = gamma * gamma * ing.kappa3_tau2 / den;
  cor.report.a3_bound = T::from_int(4) * g_abs * ing.kappa_tau_abs * ing.core *
                        (one + l) * (one + l) /
                        (T::from_int(3) * (one + T::from_int(2) * l) * den);
  cor.report.flat = g_abs * ing.kappa_tau_abs / cor.fekete_flat_den;
  return cor;
}

// B-type class: W at lambda = 0.
template <class S>
CorollaryBounds<S> cor_bsl(const KappaContext& ctx, const S& gamma, const S& alpha) {
  using T = scalar_traits<S>;
  const auto ing = detail::bound_ingredients<S>(ctx);
  const S one = T::one();
  const S a = alpha;
  const S g_abs = T::abs_value(gamma);
  CorollaryBounds<S> cor;
  cor.gamma = gamma;
  const S den = gamma * ing.kappa2_tau * (one + T::from_int(2) * a) +
                ing.core * (one + a) * (one + a);
  cor.fekete_den = den;
  cor.fekete_flat_den = one + T::from_int(2) * a;
  cor.report.radicand = den;
  if (T::sign(den) <= 0) return cor;
  cor.report.valid = true;
  cor.report.a2_bound_sq = gamma * gamma * ing.kappa3_tau2 / den;
  cor.report.a3_bound = g_abs * ing.kappa_tau_abs * ing.core * (one + a) * (one + a) /
                        ((one + T::from_int(2) * a) * den);
  cor.report.flat = g_abs * ing.kappa_tau_abs / cor.fekete_flat_den;
  return cor;
}

// H-type class: W at lambda = 0, alpha = 1.
template <class S>
CorollaryBounds<S> cor_hsl(const KappaContext& ctx, const S& gamma) {
  using T = scalar_traits<S>;
  const auto ing = detail::bound_ingredients<S>(ctx);
  const S g_abs = T::abs_value(gamma);
  CorollaryBounds<S> cor;
  cor.gamma = gamma;
  const S den = T::from_int(3) * gamma * ing.kappa2_tau + T::from_int(4) * ing.core;
  cor.fekete_den = den;
  cor.fekete_flat_den = T::from_int(3);
  cor.report.radicand = den;
  if (T::sign(den) <= 0) return cor;
  cor.report.valid = true;
  cor.report.a2_bound_sq = gamma * gamma * ing.kappa3_tau2 / den;
  cor.report.a3_bound = T::from_int(4) * g_abs * ing.kappa_tau_abs * ing.core /
                        (T::from_int(3) * den);
  cor.report.flat = g_abs * ing.kappa_tau_abs / cor.fekete_flat_den;
  return cor;
}

// Shell-like class with gamma: R at lambda = 0.
template <class S>
CorollaryBounds<S> cor_sl_gamma(const KappaContext& ctx, const S& gamma) {
  using T = scalar_traits<S>;
  const auto ing = detail::bound_ingredients<S>(ctx);
  const S g_abs = T::abs_value(gamma);
  CorollaryBounds<S> cor;
  cor.gamma = gamma;
  const S den = gamma * ing.kappa2_tau + ing.core;
  cor.fekete_den = den;
  cor.fekete_flat_den = T::from_int(2);
  cor.report.radicand = den;
  if (T::sign(den) <= 0) return cor;
  cor.report.valid = true;
  cor.report.a2_bound_sq = gamma * gamma * ing.kappa3_tau2 / den;
  cor.report.a3_bound = g_abs * ing.kappa_tau_abs *
                        T::abs_value(ing.core - gamma * ing.kappa2_tau) /
                        (T::from_int(2) * den);
  cor.report.flat = g_abs * ing.kappa_tau_abs / cor.fekete_flat_den;
  return cor;
}

// Shell-like class: B at lambda = 1 (equivalently P at lambda = 0).
template <class S>
CorollaryBounds<S> cor_sl(const KappaContext& ctx) {
  using T = scalar_traits<S>;
  const auto ing = detail::bound_ingredients<S>(ctx);
  CorollaryBounds<S> cor;
  const S den = ing.kappa - T::from_int(2) * ing.tau;
  cor.fekete_den = den;
  cor.fekete_flat_den = T::from_int(2);
  cor.report.radicand = den;
  if (T::sign(den) <= 0) return cor;
  cor.report.valid = true;
  cor.report.a2_bound_sq = ing.kappa3_tau2 / den;
  cor.report.a3_bound =
      ing.kappa_tau_abs *
      (ing.kappa - T::from_int(2) * (ing.kappa * ing.kappa + T::one()) * ing.tau) /
      (T::from_int(2) * ing.kappa - T::from_int(4) * ing.tau);
  cor.report.flat = ing.kappa_tau_abs / cor.fekete_flat_den;
  return cor;
}

// Convex shell-like class: P at lambda = 1.
template <class S>
CorollaryBounds<S> cor_ksl(const KappaContext& ctx) {
  using T = scalar_traits<S>;
  const auto ing = detail::bound_ingredients<S>(ctx);
  CorollaryBounds<S> cor;
  const S core2 = T::from_int(2) * ing.kappa -
                  (ing.kappa * ing.kappa + T::from_int(4)) * ing.tau;
  const S den = T::from_int(2) * core2;
  cor.fekete_den = den;
  cor.fekete_flat_den = T::from_int(6);
  cor.report.radicand = den;
  if (T::sign(den) <= 0) return cor;
  cor.report.valid = true;
  cor.report.a2_bound_sq = ing.kappa3_tau2 / den;
  cor.report.a3_bound =
      ing.kappa_tau_abs *
      (ing.kappa - T::from_int(2) * (ing.kappa * ing.kappa + T::one()) * ing.tau) /
      (T::from_int(3) * core2);
  cor.report.flat = ing.kappa_tau_abs / cor.fekete_flat_den;
  return cor;
}

}  // namespace kfib
