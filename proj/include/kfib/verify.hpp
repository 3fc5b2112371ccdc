#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kfib/bounds.hpp"
#include "kfib/functionals.hpp"
#include "kfib/shell_like.hpp"

namespace kfib {

// One replayed derivation step or sweep check. check_id carries the
// equation tag the step verifies ("2.12", "4.14", ...); residual is 0 on an
// exact-mode pass.
struct VerificationRecord {
  std::string check_id;
  std::string detail;
  std::string lhs;
  std::string rhs;
  double residual = 0.0;
  bool pass = false;
};

std::string to_json_line(const VerificationRecord& record);

namespace detail {

inline const char* equation_prefix(Family family) {
  switch (family) {
    case Family::W: return "2";
    case Family::R: return "3";
    case Family::B: return "4";
    case Family::P: return "5";
  }
  return "?";
}

inline std::string describe(const QuadNumber& value) { return format_quad(value); }
inline std::string describe(const BigFloat& value) { return format_float(value); }
inline std::string describe(const Complex& value) {
  return format_float(value.re) + (value.im < 0 ? " - " : " + ") +
         format_float(boost::multiprecision::abs(value.im)) + "i";
}

template <class S>
VerificationRecord make_record(std::string check_id, std::string detail, const S& lhs,
                               const S& rhs, const BigFloat& tolerance) {
  VerificationRecord record;
  record.check_id = std::move(check_id);
  record.detail = std::move(detail);
  record.lhs = describe(lhs);
  record.rhs = describe(rhs);
  const BigFloat residual = scalar_traits<S>::magnitude(lhs - rhs);
  record.residual = residual.convert_to<double>();
  if constexpr (scalar_traits<S>::exact_mode) {
    record.pass = (lhs == rhs);
  } else {
    record.pass = residual <= tolerance;
  }
  return record;
}

}  // namespace detail

// Replays the coefficient derivation for one family at one data point
// (c1, c2, d2 with d1 = -c1 and the coefficient bound |.| <= 2 enforced):
//   *.6/*.8   a2 from the two z-equations agree
//   *.10      a2^2 from the squared-and-added z-equations
//   *.12      the added z^2-equations closed form vs an independent solve
//   *.14      the subtracted a3 formula vs an independent solve
//   expansion the printed equations vs the functional's series expansion
template <class S>
std::vector<VerificationRecord> replay_proof_chain(const KappaContext& ctx,
                                                   const ClassSpec<S>& spec,
                                                   const CaratheodoryPrefix<S>& c,
                                                   const S& d2,
                                                   const BigFloat& tolerance) {
  using T = scalar_traits<S>;
  const S two = T::from_int(2);
  auto in_bound = [&](const S& v) { return T::sign(two - T::abs_value(v)) >= 0; };
  if (!in_bound(c.c1) || !in_bound(c.c2) || !in_bound(d2)) {
    throw usage_error("prefix data must satisfy the coefficient bound |.| <= 2");
  }

  const std::string p = detail::equation_prefix(spec.family);
  const std::string where = "family " + family_name(spec.family) + ", kappa " +
                            format_rational(ctx.kappa());
  const CoefficientForms<S> forms = coefficient_forms(spec);
  if (T::is_zero(forms.l1) || T::is_zero(forms.p_f)) {
    throw arithmetic_error("degenerate family parameters");
  }
  CaratheodoryPrefix<S> d;
  d.c1 = -c.c1;
  d.c2 = d2;

  std::vector<VerificationRecord> records;

  // z-equations: a2 read from the direct side and from the inverse side.
  const S a2_direct = subordination_rhs_z(ctx, c.c1) / forms.l1;
  const S a2_inverse = -(subordination_rhs_z(ctx, d.c1) / forms.l1);
  records.push_back(detail::make_record(p + ".6/" + p + ".8", where, a2_direct,
                                        a2_inverse, tolerance));

  // Squared-and-added z-equations.
  const S kappa = T::from_rational(ctx.kappa());
  const S tau = T::from_quad(ctx.tau());
  const S kappa2_tau2 = kappa * kappa * tau * tau;
  const S printed_10 =
      (c.c1 * c.c1 + d.c1 * d.c1) * kappa2_tau2 / (T::from_int(8) * forms.l1 * forms.l1);
  records.push_back(detail::make_record(p + ".10", where, S(a2_direct * a2_direct),
                                        printed_10, tolerance));

  // Added z^2-equations: solve for a2^2 the way the derivation does --
  // substitute the *.10 relation for c1^2 + d1^2 and solve the resulting
  // linear equation -- and compare against the printed closed form.
  const S p2 = T::from_quad(ptilde_coeff(ctx, 2));  // (kappa^2+2) tau^2
  const S kt = T::from_quad(ptilde_coeff(ctx, 1));  // kappa tau
  const S q_sum = forms.q_f + forms.q_g;
  const S coupling = two * forms.l1 * forms.l1 * (p2 - kt) / kappa2_tau2;
  if (T::is_zero(q_sum - coupling)) {
    throw arithmetic_error("degenerate family parameters: a2^2 system is singular");
  }
  const S solved_12 = (c.c2 + d.c2) * kt / (two * (q_sum - coupling));
  const S printed_12 = a2sq_added_closed_form(ctx, spec, S(c.c2 + d.c2));
  records.push_back(detail::make_record(p + ".12", where, solved_12, printed_12,
                                        tolerance));

  // Subtracted z^2-equations: a3 via the full right-hand sides vs the
  // printed constant.
  const S solved_14 = printed_12 + (subordination_rhs_z2(ctx, c.c1, c.c2) -
                                    subordination_rhs_z2(ctx, d.c1, d.c2)) /
                                       (forms.p_f - forms.p_g);
  const S printed_14 = printed_12 + a3_subtract_constant(ctx, spec) * (c.c2 - d.c2);
  records.push_back(detail::make_record(p + ".14", where, solved_14, printed_14,
                                        tolerance));

  // The printed coefficient equations against the functional itself.
  const CoefficientSolution<S> solution =
      coefficient_equations(ctx, spec, c, d, tolerance);
  VerificationRecord direct;
  direct.check_id = p + ".2-" + p + ".7:expansion";
  direct.detail = where;
  direct.lhs = "functional expansion";
  direct.rhs = "subordination expansion";
  direct.pass = solution.printed_f_side_matches_expansion;
  records.push_back(direct);
  VerificationRecord inverse;
  inverse.check_id = p + ".3-" + p + ".9:expansion";
  inverse.detail = where;
  inverse.lhs = "inverse functional expansion";
  inverse.rhs = "subordination expansion";
  inverse.pass = solution.printed_g_side_matches_expansion;
  records.push_back(inverse);

  return records;
}

std::vector<Rational> default_mu_grid();

struct DominationConfig {
  std::size_t grid_points = 8;  // Caratheodory samples; the grid pairs them with d2 values
  std::vector<Rational> mu_values = default_mu_grid();
  double tolerance = 1e-10;
};

struct GridPointReport {
  std::string kind;  // "a2" | "a3" | "fekete"
  std::string c1;
  std::string c2;
  std::string d2;
  std::string mu;
  double ratio = 0.0;
};

struct DominationSummary {
  bool skipped = false;
  std::string reason;
  std::size_t points = 0;
  double max_a2_ratio = 0.0;
  double max_a3_ratio = 0.0;
  double max_fekete_ratio = 0.0;
  GridPointReport worst_a2;
  GridPointReport worst_a3;
  GridPointReport worst_fekete;
  std::vector<GridPointReport> violations;
};

// Brute-force bound domination over the Caratheodory grid: |a2|, |a3| and
// |a3 - mu a2^2| from the derivation formulas must stay below the closed
// bounds at every grid point. Exact mode compares exactly.
template <class S>
DominationSummary domination_sweep(const KappaContext& ctx, const ClassSpec<S>& spec,
                                   const DominationConfig& config) {
  using T = scalar_traits<S>;
  DominationSummary summary;
  const BoundReport<S> bounds = theorem_bounds(ctx, spec);
  if (!bounds.valid) {
    summary.skipped = true;
    summary.reason = "invalid domain: nonpositive radicand";
    return summary;
  }

  const auto raw_samples = caratheodory_samples(config.grid_points);
  std::vector<CaratheodoryPrefix<S>> samples;
  samples.reserve(raw_samples.size());
  for (const auto& raw : raw_samples) {
    CaratheodoryPrefix<S> mapped;
    mapped.c1 = T::from_quad(raw.c1);
    mapped.c2 = T::from_quad(raw.c2);
    mapped.c3 = T::from_quad(raw.c3);
    samples.push_back(mapped);
  }

  std::vector<std::pair<S, FeketeReport<S>>> fekete;
  fekete.reserve(config.mu_values.size());
  for (const auto& mu_rational : config.mu_values) {
    const S mu = T::from_rational(mu_rational);
    fekete.emplace_back(mu, fekete_bound(ctx, spec, mu));
  }

  const BigFloat tol(config.tolerance);
  auto ratio_of = [](const BigFloat& value, const BigFloat& limit) {
    const BigFloat q = value / limit;
    return q.convert_to<double>();
  };
  auto exceeded = [&](const S& value_abs, const S& limit) {
    if constexpr (T::exact_mode) {
      return T::sign(value_abs - limit) > 0;
    } else {
      return T::magnitude(value_abs) > T::magnitude(limit) * (1 + tol);
    }
  };
  auto note = [&](const char* kind, const CaratheodoryPrefix<S>& c, const S& d2,
                  const std::string& mu, double ratio, GridPointReport& worst,
                  double& max_ratio, bool violated) {
    if (ratio > max_ratio) max_ratio = ratio;
    GridPointReport report{kind, detail::describe(c.c1), detail::describe(c.c2),
                           detail::describe(d2), mu, ratio};
    if (ratio >= worst.ratio) worst = report;
    if (violated) summary.violations.push_back(std::move(report));
  };

  for (const auto& c : samples) {
    for (const auto& d_sample : samples) {
      const S d2 = d_sample.c2;
      const S a2sq = a2sq_added_closed_form(ctx, spec, S(c.c2 + d2));
      const S a3 = a2sq + a3_subtract_constant(ctx, spec) * (c.c2 - d2);
      ++summary.points;

      const S a2sq_abs = T::abs_value(a2sq);
      note("a2", c, d2, "",
           std::sqrt(ratio_of(T::magnitude(a2sq), T::magnitude(bounds.a2_bound_sq))),
           summary.worst_a2, summary.max_a2_ratio,
           exceeded(a2sq_abs, bounds.a2_bound_sq));

      const S a3_abs = T::abs_value(a3);
      note("a3", c, d2, "", ratio_of(T::magnitude(a3), T::magnitude(bounds.a3_bound)),
           summary.worst_a3, summary.max_a3_ratio, exceeded(a3_abs, bounds.a3_bound));

      for (const auto& [mu, fk] : fekete) {
        const S functional = T::abs_value(a3 - mu * a2sq);
        note("fekete", c, d2, detail::describe(mu),
             ratio_of(T::magnitude(functional), T::magnitude(fk.value)),
             summary.worst_fekete, summary.max_fekete_ratio,
             exceeded(functional, fk.value));
      }
    }
  }
  return summary;
}

// Statement-vs-derivation discrepancies detected while transcribing the
// displays, with both readings evaluated where they are numeric.
struct TypoFinding {
  std::string id;
  std::string kind;  // "numeric" | "structural"
  std::string note;
  std::vector<std::pair<std::string, std::string>> evaluations;
};

std::vector<TypoFinding> typo_audit();

enum class VerifyMode { exact, floating, both };

struct SweepConfig {
  std::vector<Rational> kappas;
  std::vector<Family> families;
  std::size_t proof_chain_tuples = 50;
  std::size_t domination_tuples = 10;
  std::size_t specialization_tuples = 20;
  std::size_t caratheodory_grid = 8;
  std::vector<Rational> mu_values;
  double tolerance = 1e-10;
  VerifyMode mode = VerifyMode::both;
  std::uint64_t seed = 20250810;
};

SweepConfig default_sweep_config();

// Accepts a JSON object with any of: kappas, families, proof_chain_tuples,
// domination_tuples, specialization_tuples, caratheodory_grid, mu_values,
// tolerance, mode, seed. Missing fields keep their defaults.
SweepConfig sweep_config_from_json(const std::string& text);

struct SuiteResult {
  std::vector<VerificationRecord> records;
  bool all_pass = true;
};

SuiteResult run_proof_chain_suite(const SweepConfig& config);
SuiteResult run_domination_suite(const SweepConfig& config);
SuiteResult run_specialization_suite(const SweepConfig& config);
SuiteResult run_typo_suite();

}  // namespace kfib
