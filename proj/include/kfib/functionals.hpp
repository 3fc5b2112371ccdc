#pragma once

#include <string>

#include "kfib/kappa_context.hpp"
#include "kfib/series.hpp"
#include "kfib/shell_like.hpp"

namespace kfib {

// The four operator families applied to normalized f = z + a2 z^2 + ...:
//   W: 1 + ((1-alpha+2lambda) f/z + (alpha-2lambda) f' + lambda z f'' - 1)/gamma
//   R: 1 + (f' (f/z)^(lambda-1) - 1)/gamma
//   B: (f')^lambda / (f/z)
//   P: (f' + lambda z f'') / ((1-lambda) f/z + lambda f')
enum class Family { W, R, B, P };

std::string family_name(Family family);
Family family_from_name(const std::string& name);

template <class S>
struct ClassSpec {
  Family family = Family::W;
  S gamma{scalar_traits<S>::one()};
  S lambda{scalar_traits<S>::zero()};
  S alpha{scalar_traits<S>::zero()};
};

// Parameter-domain check: gamma != 0 (and gamma = 1 where the family has no
// gamma), W: alpha >= 0, lambda >= 0; R: lambda >= 0; B: lambda >= 1;
// P: 0 <= lambda <= 1.
template <class S>
void validate_domain(const ClassSpec<S>& spec) {
  using T = scalar_traits<S>;
  if (T::is_zero(spec.gamma)) throw usage_error("gamma must be nonzero");
  const int lambda_sign = T::sign(spec.lambda);
  switch (spec.family) {
    case Family::W:
      if (T::sign(spec.alpha) < 0) throw usage_error("family W requires alpha >= 0");
      if (lambda_sign < 0) throw usage_error("family W requires lambda >= 0");
      break;
    case Family::R:
      if (lambda_sign < 0) throw usage_error("family R requires lambda >= 0");
      break;
    case Family::B:
      if (T::sign(spec.lambda - T::one()) < 0) {
        throw usage_error("family B requires lambda >= 1");
      }
      if (!(spec.gamma == T::one())) throw usage_error("family B has no gamma parameter");
      break;
    case Family::P:
      if (lambda_sign < 0 || T::sign(T::one() - spec.lambda) < 0) {
        throw usage_error("family P requires 0 <= lambda <= 1");
      }
      if (!(spec.gamma == T::one())) throw usage_error("family P has no gamma parameter");
      break;
  }
}

namespace detail {

template <class S>
void require_normalized(const TruncatedSeries<S>& f) {
  if (f.order() < 2 || !scalar_traits<S>::is_zero(f[0]) ||
      !(f[1] == scalar_traits<S>::one())) {
    throw usage_error("the functional expects f = z + a2 z^2 + ...");
  }
}

// f/z as a series of the same order (top coefficient truncation-padded).
template <class S>
TruncatedSeries<S> divide_by_z(const TruncatedSeries<S>& f) {
  TruncatedSeries<S> out(f.order());
  for (std::size_t k = 1; k <= f.order(); ++k) out[k - 1] = f[k];
  return out;
}

// z f'' as a series of the same order.
template <class S>
TruncatedSeries<S> z_second_derivative(const TruncatedSeries<S>& f) {
  TruncatedSeries<S> out(f.order());
  for (std::size_t k = 2; k <= f.order(); ++k) {
    out[k - 1] = scalar_traits<S>::from_int(static_cast<long>(k) *
                                            (static_cast<long>(k) - 1)) *
                 f[k];
  }
  return out;
}

}  // namespace detail

template <class S>
TruncatedSeries<S> apply_functional(const ClassSpec<S>& spec, const TruncatedSeries<S>& f) {
  using T = scalar_traits<S>;
  detail::require_normalized(f);
  const TruncatedSeries<S> f_over_z = detail::divide_by_z(f);
  const TruncatedSeries<S> f_prime = diff(f);
  const TruncatedSeries<S> z_fpp = detail::z_second_derivative(f);
  const TruncatedSeries<S> one = TruncatedSeries<S>::constant(T::one(), f.order());
  const S inv_gamma = T::one() / spec.gamma;

  switch (spec.family) {
    case Family::W: {
      const S c_fz = T::one() - spec.alpha + T::from_int(2) * spec.lambda;
      const S c_fp = spec.alpha - T::from_int(2) * spec.lambda;
      TruncatedSeries<S> core =
          scale(c_fz, f_over_z) + scale(c_fp, f_prime) + scale(spec.lambda, z_fpp) - one;
      return one + scale(inv_gamma, core);
    }
    case Family::R: {
      const TruncatedSeries<S> core =
          f_prime * pow_scalar(f_over_z, S(spec.lambda - T::one())) - one;
      return one + scale(inv_gamma, core);
    }
    case Family::B:
      return div(pow_scalar(f_prime, spec.lambda), f_over_z);
    case Family::P: {
      const TruncatedSeries<S> numerator = f_prime + scale(spec.lambda, z_fpp);
      const TruncatedSeries<S> denominator =
          scale(S(T::one() - spec.lambda), f_over_z) + scale(spec.lambda, f_prime);
      return div(numerator, denominator);
    }
  }
  throw usage_error("unknown family");
}

// The coefficient equations extracted from each family, as linear forms:
// the z-coefficient of the functional is l1 * a2 and the z^2-coefficient is
// p_f * a3 + q_f * a2^2 (f-side) / p_g * a3 + q_g * a2^2 (inverse side).
template <class S>
struct CoefficientForms {
  S l1;
  S p_f, q_f;
  S p_g, q_g;
};

template <class S>
CoefficientForms<S> coefficient_forms(const ClassSpec<S>& spec) {
  using T = scalar_traits<S>;
  const S one = T::one();
  const S two = T::from_int(2);
  const S g = spec.gamma;
  const S l = spec.lambda;
  const S a = spec.alpha;
  CoefficientForms<S> forms;
  switch (spec.family) {
    case Family::W: {
      const S w = one + two * a + two * l;
      forms.l1 = (one + a) / g;
      forms.p_f = w / g;
      forms.q_f = T::zero();
      forms.p_g = -(w / g);
      forms.q_g = two * w / g;
      break;
    }
    case Family::R: {
      const S s = two + l;
      forms.l1 = (one + l) / g;
      forms.p_f = s / g;
      forms.q_f = s * (l - one) / (two * g);
      forms.p_g = -(s / g);
      forms.q_g = s * (T::from_int(3) + l) / (two * g);
      break;
    }
    case Family::B: {
      forms.l1 = two * l - one;
      forms.p_f = T::from_int(3) * l - one;
      forms.q_f = two * l * l - T::from_int(4) * l + one;
      forms.p_g = -forms.p_f;
      forms.q_g = two * l * l + two * l - one;
      break;
    }
    case Family::P: {
      forms.l1 = one + l;
      forms.p_f = two * (one + two * l);
      forms.q_f = -((one + l) * (one + l));
      forms.p_g = -forms.p_f;
      forms.q_g = -(l * l - T::from_int(6) * l - T::from_int(3));
      break;
    }
  }
  return forms;
}

// Right-hand sides of the coefficient equations, read off the subordination
// expansion: c1 kappa tau / 2 at z, and
// (c2 - c1^2/2) kappa tau / 2 + c1^2 (kappa^2+2) tau^2 / 4 at z^2.
template <class S>
S subordination_rhs_z(const KappaContext& ctx, const S& c1) {
  using T = scalar_traits<S>;
  return c1 * T::from_quad(ptilde_coeff(ctx, 1)) / T::from_int(2);
}

template <class S>
S subordination_rhs_z2(const KappaContext& ctx, const S& c1, const S& c2) {
  using T = scalar_traits<S>;
  const S half = T::one() / T::from_int(2);
  const S quarter = T::one() / T::from_int(4);
  return (c2 - c1 * c1 * half) * half * T::from_quad(ptilde_coeff(ctx, 1)) +
         c1 * c1 * quarter * T::from_quad(ptilde_coeff(ctx, 2));
}

// The expression that appears under the theorem square roots; also the
// shared denominator of the a3 and Fekete displays.
template <class S>
S family_denominator(const KappaContext& ctx, const ClassSpec<S>& spec) {
  using T = scalar_traits<S>;
  const S one = T::one();
  const S two = T::from_int(2);
  const S kappa = T::from_rational(ctx.kappa());
  const S tau = T::from_quad(ctx.tau());
  const S kappa2_tau = kappa * kappa * tau;
  const S core = kappa - (kappa * kappa + two) * tau;
  const S l = spec.lambda;
  const S a = spec.alpha;
  const S g = spec.gamma;
  switch (spec.family) {
    case Family::W:
      return g * kappa2_tau * (one + two * a + two * l) + core * (one + a) * (one + a);
    case Family::R:
      return g * kappa2_tau * (two + l) * (one + l) + two * core * (one + l) * (one + l);
    case Family::B:
      return l * (two * l - one) * kappa2_tau + core * (two * l - one) * (two * l - one);
    case Family::P:
      return kappa2_tau * (one + two * l - l * l) + core * (one + l) * (one + l);
  }
  throw usage_error("unknown family");
}

// Closed form of a2^2 obtained by adding the z^2 equations and eliminating
// c1^2 + d1^2, as a function of c2 + d2.
template <class S>
S a2sq_added_closed_form(const KappaContext& ctx, const ClassSpec<S>& spec,
                         const S& c2_plus_d2) {
  using T = scalar_traits<S>;
  const S kappa = T::from_rational(ctx.kappa());
  const S tau = T::from_quad(ctx.tau());
  const S kappa3_tau2 = kappa * kappa * kappa * tau * tau;
  const S den = family_denominator(ctx, spec);
  if (T::is_zero(den)) {
    throw arithmetic_error("degenerate family parameters: zero denominator");
  }
  const S g = spec.gamma;
  switch (spec.family) {
    case Family::W:
      return g * g * c2_plus_d2 * kappa3_tau2 / (T::from_int(4) * den);
    case Family::R:
      return g * g * c2_plus_d2 * kappa3_tau2 / (T::from_int(2) * den);
    case Family::B:
    case Family::P:
      return c2_plus_d2 * kappa3_tau2 / (T::from_int(4) * den);
  }
  throw usage_error("unknown family");
}

// Constant in the subtracted-equations a3 formula:
// a3 = a2^2 + constant * (c2 - d2).
template <class S>
S a3_subtract_constant(const KappaContext& ctx, const ClassSpec<S>& spec) {
  using T = scalar_traits<S>;
  const S kt = T::from_rational(ctx.kappa()) * T::from_quad(ctx.tau());
  const S one = T::one();
  const S two = T::from_int(2);
  const S l = spec.lambda;
  switch (spec.family) {
    case Family::W:
      return spec.gamma * kt /
             (T::from_int(4) * (one + two * spec.alpha + two * l));
    case Family::R:
      return spec.gamma * kt / (T::from_int(4) * (two + l));
    case Family::B:
      return kt / (T::from_int(4) * (T::from_int(3) * l - one));
    case Family::P:
      return kt / (T::from_int(8) * (one + two * l));
  }
  throw usage_error("unknown family");
}

template <class S>
struct CoefficientSolution {
  S a2;
  S a3;                  // subtracted-equations route with the a2-from-c1 square
  S a2sq_c1_route;       // from the z-coefficient pair
  S a2sq_added_route;    // the added-equations closed form in c2 + d2
  bool printed_f_side_matches_expansion = false;
  bool printed_g_side_matches_expansion = false;
  bool a2sq_routes_agree = false;
};

// Solves the family's linear system for a2 and a3 from prefix data (c, d)
// with d1 = -c1 enforced, and cross-checks the printed coefficient
// equations against the direct series expansion of the functional.
template <class S>
CoefficientSolution<S> coefficient_equations(const KappaContext& ctx,
                                             const ClassSpec<S>& spec,
                                             const CaratheodoryPrefix<S>& c,
                                             const CaratheodoryPrefix<S>& d,
                                             const BigFloat& tolerance = BigFloat(0)) {
  using T = scalar_traits<S>;
  if (!T::is_zero(c.c1 + d.c1)) {
    throw usage_error("the inverse-side prefix must satisfy d1 = -c1");
  }
  const CoefficientForms<S> forms = coefficient_forms(spec);
  if (T::is_zero(forms.l1) || T::is_zero(forms.p_f) || T::is_zero(forms.p_g)) {
    throw arithmetic_error("degenerate family parameters: singular coefficient system");
  }

  CoefficientSolution<S> out;
  out.a2 = subordination_rhs_z(ctx, c.c1) / forms.l1;
  out.a2sq_c1_route = out.a2 * out.a2;
  out.a2sq_added_route = a2sq_added_closed_form(ctx, spec, S(c.c2 + d.c2));

  // Subtracting the z^2 equations eliminates a2^2 and yields a3 - a2^2.
  const S subtracted_rhs = subordination_rhs_z2(ctx, c.c1, c.c2) -
                           subordination_rhs_z2(ctx, d.c1, d.c2);
  out.a3 = out.a2sq_c1_route + subtracted_rhs / (forms.p_f - forms.p_g);

  auto close = [&](const S& x, const S& y) {
    if constexpr (T::exact_mode) return x == y;
    return T::magnitude(x - y) <= tolerance;
  };

  // Reconstruct the f-prefix from the printed equations and compare the
  // functional's actual expansion with the subordination expansion.
  const S a3_f = (subordination_rhs_z2(ctx, c.c1, c.c2) - forms.q_f * out.a2sq_c1_route) /
                 forms.p_f;
  TruncatedSeries<S> f(4);
  f[1] = T::one();
  f[2] = out.a2;
  f[3] = a3_f;
  const TruncatedSeries<S> lhs_f = apply_functional(spec, f);
  const TruncatedSeries<S> rhs_f = subordination_expand(ctx, c, 2);
  out.printed_f_side_matches_expansion =
      close(lhs_f[1], rhs_f[1]) && close(lhs_f[2], rhs_f[2]);

  // Inverse side: g = w - a2 w^2 + (2 a2^2 - a3) w^3 + ...; the printed
  // g-side z^2 equation determines the d2 consistent with this prefix.
  TruncatedSeries<S> g(4);
  g[1] = T::one();
  g[2] = -out.a2;
  g[3] = T::from_int(2) * out.a2sq_c1_route - a3_f;
  const S printed_g_lhs = forms.p_g * a3_f + forms.q_g * out.a2sq_c1_route;
  const S kt = T::from_quad(ptilde_coeff(ctx, 1));
  const S d2_consistent = (printed_g_lhs - subordination_rhs_z2(ctx, d.c1, T::zero())) *
                          T::from_int(2) / kt;
  CaratheodoryPrefix<S> d_consistent;
  d_consistent.c1 = d.c1;
  d_consistent.c2 = d2_consistent;
  const TruncatedSeries<S> lhs_g = apply_functional(spec, g);
  const TruncatedSeries<S> rhs_g = subordination_expand(ctx, d_consistent, 2);
  out.printed_g_side_matches_expansion =
      close(lhs_g[1], rhs_g[1]) && close(lhs_g[2], rhs_g[2]);

  out.a2sq_routes_agree = close(out.a2sq_c1_route, out.a2sq_added_route);
  return out;
}

}  // namespace kfib
