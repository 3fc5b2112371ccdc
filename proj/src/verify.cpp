#include "kfib/verify.hpp"

#include <json.hpp>

#include <random>
#include <sstream>

namespace kfib {

namespace {

using nlohmann::json;

std::string spec_detail(const ClassSpec<QuadNumber>& spec, const Rational& kappa,
                        const char* mode) {
  std::ostringstream os;
  os << "mode=" << mode << " family=" << family_name(spec.family)
     << " kappa=" << format_rational(kappa);
  if (spec.family == Family::W || spec.family == Family::R) {
    os << " gamma=" << format_quad(spec.gamma);
  }
  os << " lambda=" << format_quad(spec.lambda);
  if (spec.family == Family::W) os << " alpha=" << format_quad(spec.alpha);
  return os.str();
}

Rational draw_scaled(std::mt19937_64& rng, long lo, long hi, long denominator) {
  std::uniform_int_distribution<long> dist(lo, hi);
  return Rational(dist(rng)) / Rational(denominator);
}

// Rational parameters inside the family domain; lambda integral when
// integer_lambda is set (the regime where exact-mode powers exist).
ClassSpec<QuadNumber> draw_spec(std::mt19937_64& rng, Family family,
                                bool integer_lambda) {
  ClassSpec<QuadNumber> spec;
  spec.family = family;
  auto quarters_off_integer = [&](long lo, long hi) {
    Rational value = draw_scaled(rng, lo, hi, 4);
    if (is_integer(value)) value += Rational(1) / 4;
    return value;
  };
  switch (family) {
    case Family::W:
      spec.gamma = QuadNumber(draw_scaled(rng, 1, 8, 4));
      spec.lambda = QuadNumber(integer_lambda ? draw_scaled(rng, 0, 3, 1)
                                              : quarters_off_integer(1, 10));
      spec.alpha = QuadNumber(draw_scaled(rng, 0, 6, 2));
      break;
    case Family::R:
      spec.gamma = QuadNumber(draw_scaled(rng, 1, 8, 4));
      spec.lambda = QuadNumber(integer_lambda ? draw_scaled(rng, 0, 3, 1)
                                              : quarters_off_integer(1, 10));
      break;
    case Family::B:
      spec.lambda = QuadNumber(integer_lambda
                                   ? draw_scaled(rng, 1, 3, 1)
                                   : Rational(1) + quarters_off_integer(1, 6));
      break;
    case Family::P:
      spec.lambda = QuadNumber(integer_lambda ? draw_scaled(rng, 0, 1, 1)
                                              : draw_scaled(rng, 1, 3, 4));
      break;
  }
  return spec;
}

ClassSpec<QuadNumber> draw_valid_spec(std::mt19937_64& rng, const KappaContext& ctx,
                                      Family family, bool integer_lambda) {
  for (int attempt = 0; attempt < 500; ++attempt) {
    ClassSpec<QuadNumber> spec = draw_spec(rng, family, integer_lambda);
    if (theorem_bounds(ctx, spec).valid) return spec;
  }
  throw arithmetic_error("no valid parameter tuple found for family " +
                         family_name(family));
}

ClassSpec<BigFloat> to_float_spec(const ClassSpec<QuadNumber>& spec) {
  ClassSpec<BigFloat> out;
  out.family = spec.family;
  out.gamma = to_bigfloat(spec.gamma);
  out.lambda = to_bigfloat(spec.lambda);
  out.alpha = to_bigfloat(spec.alpha);
  return out;
}

CaratheodoryPrefix<QuadNumber> draw_prefix(std::mt19937_64& rng) {
  CaratheodoryPrefix<QuadNumber> c;
  c.c1 = QuadNumber(draw_scaled(rng, -16, 16, 8));
  c.c2 = QuadNumber(draw_scaled(rng, -16, 16, 8));
  c.c3 = QuadNumber(draw_scaled(rng, -16, 16, 8));
  return c;
}

void append(SuiteResult& result, std::vector<VerificationRecord> records) {
  for (auto& record : records) {
    result.all_pass = result.all_pass && record.pass;
    result.records.push_back(std::move(record));
  }
}

void append(SuiteResult& result, VerificationRecord record) {
  result.all_pass = result.all_pass && record.pass;
  result.records.push_back(std::move(record));
}

}  // namespace

std::string to_json_line(const VerificationRecord& record) {
  json line;
  line["check_id"] = record.check_id;
  line["detail"] = record.detail;
  line["lhs"] = record.lhs;
  line["rhs"] = record.rhs;
  line["residual"] = record.residual;
  line["pass"] = record.pass;
  return line.dump();
}

std::vector<Rational> default_mu_grid() {
  return {Rational(-1),    Rational(0), Rational(1) / 2, Rational(1),
          Rational(3) / 2, Rational(2), Rational(4)};
}

SweepConfig default_sweep_config() {
  SweepConfig config;
  config.kappas = {Rational(1), Rational(2), Rational(3), Rational(1) / 2};
  config.families = {Family::W, Family::R, Family::B, Family::P};
  config.mu_values = default_mu_grid();
  return config;
}

SweepConfig sweep_config_from_json(const std::string& text) {
  SweepConfig config = default_sweep_config();
  if (text.empty()) return config;
  json parsed;
  try {
    parsed = json::parse(text);
  } catch (const json::parse_error& err) {
    throw usage_error(std::string("malformed config: ") + err.what());
  }
  if (!parsed.is_object()) throw usage_error("config must be a JSON object");

  if (parsed.contains("kappas")) {
    config.kappas.clear();
    for (const auto& item : parsed["kappas"]) {
      config.kappas.push_back(parse_rational(item.get<std::string>()));
    }
  }
  if (parsed.contains("families")) {
    config.families.clear();
    for (const auto& item : parsed["families"]) {
      config.families.push_back(family_from_name(item.get<std::string>()));
    }
  }
  if (parsed.contains("mu_values")) {
    config.mu_values.clear();
    for (const auto& item : parsed["mu_values"]) {
      config.mu_values.push_back(parse_rational(item.get<std::string>()));
    }
  }
  if (parsed.contains("proof_chain_tuples")) {
    config.proof_chain_tuples = parsed["proof_chain_tuples"].get<std::size_t>();
  }
  if (parsed.contains("domination_tuples")) {
    config.domination_tuples = parsed["domination_tuples"].get<std::size_t>();
  }
  if (parsed.contains("specialization_tuples")) {
    config.specialization_tuples = parsed["specialization_tuples"].get<std::size_t>();
  }
  if (parsed.contains("caratheodory_grid")) {
    config.caratheodory_grid = parsed["caratheodory_grid"].get<std::size_t>();
  }
  if (parsed.contains("tolerance")) {
    config.tolerance = parsed["tolerance"].get<double>();
    if (!(config.tolerance > 0)) throw usage_error("tolerance must be positive");
  }
  if (parsed.contains("seed")) config.seed = parsed["seed"].get<std::uint64_t>();
  if (parsed.contains("mode")) {
    const std::string mode = parsed["mode"].get<std::string>();
    if (mode == "exact") {
      config.mode = VerifyMode::exact;
    } else if (mode == "float") {
      config.mode = VerifyMode::floating;
    } else if (mode == "both") {
      config.mode = VerifyMode::both;
    } else {
      throw usage_error("mode must be exact, float, or both");
    }
  }
  if (config.kappas.empty() || config.families.empty() || config.mu_values.empty()) {
    throw usage_error("config grids must be non-empty");
  }
  return config;
}

SuiteResult run_proof_chain_suite(const SweepConfig& config) {
  SuiteResult result;
  std::mt19937_64 rng(config.seed);
  const BigFloat tolerance(config.tolerance);

  for (Family family : config.families) {
    for (std::size_t i = 0; i < config.proof_chain_tuples; ++i) {
      const Rational kappa = config.kappas[i % config.kappas.size()];
      KappaContext ctx(kappa);

      if (config.mode != VerifyMode::floating) {
        const auto spec = draw_valid_spec(rng, ctx, family, /*integer_lambda=*/true);
        const auto c = draw_prefix(rng);
        const QuadNumber d2{draw_scaled(rng, -16, 16, 8)};
        auto records = replay_proof_chain(ctx, spec, c, d2, BigFloat(0));
        for (auto& record : records) {
          record.detail = spec_detail(spec, kappa, "exact");
        }
        append(result, std::move(records));
      }

      if (config.mode != VerifyMode::exact) {
        const auto spec = draw_valid_spec(rng, ctx, family, /*integer_lambda=*/false);
        const auto spec_float = to_float_spec(spec);
        const auto c_exact = draw_prefix(rng);
        CaratheodoryPrefix<BigFloat> c;
        c.c1 = to_bigfloat(c_exact.c1);
        c.c2 = to_bigfloat(c_exact.c2);
        c.c3 = to_bigfloat(c_exact.c3);
        const BigFloat d2 = to_bigfloat(QuadNumber(draw_scaled(rng, -16, 16, 8)));
        auto records = replay_proof_chain(ctx, spec_float, c, d2, tolerance);
        for (auto& record : records) {
          record.detail = spec_detail(spec, kappa, "float");
        }
        append(result, std::move(records));
      }
    }
  }
  return result;
}

SuiteResult run_domination_suite(const SweepConfig& config) {
  SuiteResult result;
  std::mt19937_64 rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
  DominationConfig sweep_config;
  sweep_config.grid_points = config.caratheodory_grid;
  sweep_config.mu_values = config.mu_values;
  sweep_config.tolerance = config.tolerance;

  for (Family family : config.families) {
    for (std::size_t i = 0; i < config.domination_tuples; ++i) {
      const Rational kappa = config.kappas[i % config.kappas.size()];
      KappaContext ctx(kappa);
      const auto spec = draw_valid_spec(rng, ctx, family, /*integer_lambda=*/true);
      const DominationSummary summary = domination_sweep(ctx, spec, sweep_config);

      VerificationRecord record;
      record.check_id = "domination";
      record.detail = spec_detail(spec, kappa, "exact");
      {
        std::ostringstream os;
        os << "max ratios a2=" << summary.max_a2_ratio << " a3=" << summary.max_a3_ratio
           << " fekete=" << summary.max_fekete_ratio << " over " << summary.points
           << " grid points";
        record.lhs = os.str();
      }
      record.rhs = "all ratios <= 1";
      record.pass = !summary.skipped && summary.violations.empty();
      record.residual = summary.violations.empty()
                            ? 0.0
                            : summary.max_a2_ratio + summary.max_a3_ratio;
      append(result, std::move(record));

      VerificationRecord corner;
      corner.check_id = "domination:extreme-corner";
      corner.detail = spec_detail(spec, kappa, "exact");
      corner.lhs = std::to_string(summary.max_a2_ratio);
      corner.rhs = ">= 1 - 1e-9";
      corner.pass = summary.max_a2_ratio >= 1.0 - 1e-9;
      append(result, std::move(corner));
    }
  }
  return result;
}

namespace {

// One theorem-vs-corollary identity at one parameter point, compared
// exactly: validity, both bounds, the flat constant, and the piecewise
// Fekete data on the mu grid.
VerificationRecord compare_bound_routes(const std::string& check_id,
                                        const std::string& detail,
                                        const BoundReport<QuadNumber>& theorem,
                                        const BoundReport<QuadNumber>& corollary) {
  VerificationRecord record;
  record.check_id = check_id;
  record.detail = detail;
  record.lhs = "a2^2 " + format_quad(theorem.a2_bound_sq) + "; a3 " +
               format_quad(theorem.a3_bound);
  record.rhs = "a2^2 " + format_quad(corollary.a2_bound_sq) + "; a3 " +
               format_quad(corollary.a3_bound);
  record.pass = theorem.valid == corollary.valid &&
                (!theorem.valid || (theorem.a2_bound_sq == corollary.a2_bound_sq &&
                                    theorem.a3_bound == corollary.a3_bound &&
                                    theorem.flat == corollary.flat));
  record.residual = record.pass ? 0.0 : 1.0;
  return record;
}

bool fekete_reports_equal(const FeketeReport<QuadNumber>& a,
                          const FeketeReport<QuadNumber>& b) {
  if (a.valid != b.valid) return false;
  if (!a.valid) return true;
  return a.value == b.value && a.branch == b.branch && a.threshold == b.threshold;
}

}  // namespace

SuiteResult run_specialization_suite(const SweepConfig& config) {
  SuiteResult result;
  std::mt19937_64 rng(config.seed ^ 0xc2b2ae3d27d4eb4fULL);

  for (const Rational& kappa : config.kappas) {
    KappaContext ctx(kappa);
    const QuadNumber one{1};
    const QuadNumber zero{};

    // Parameter-free pairs once per kappa.
    {
      const auto sl = cor_sl<QuadNumber>(ctx);
      const auto ksl = cor_ksl<QuadNumber>(ctx);
      const auto b1 = theorem_bounds(ctx, ClassSpec<QuadNumber>{Family::B, one, one, zero});
      const auto p0 = theorem_bounds(ctx, ClassSpec<QuadNumber>{Family::P, one, zero, zero});
      const auto p1 = theorem_bounds(ctx, ClassSpec<QuadNumber>{Family::P, one, one, zero});
      const auto slg1 = cor_sl_gamma(ctx, one);
      const std::string detail = "kappa=" + format_rational(kappa);
      append(result, compare_bound_routes("spec:B(1)=SL", detail, b1, sl.report));
      append(result, compare_bound_routes("spec:P(0)=SL", detail, p0, sl.report));
      append(result, compare_bound_routes("spec:P(1)=KSL", detail, p1, ksl.report));
      append(result,
             compare_bound_routes("spec:SLgamma(1)=SL", detail, slg1.report, sl.report));

      for (const Rational& mu_rational : config.mu_values) {
        const QuadNumber mu{mu_rational};
        const bool ok =
            fekete_reports_equal(
                fekete_bound(ctx, ClassSpec<QuadNumber>{Family::B, one, one, zero}, mu),
                corollary_fekete(ctx, sl, mu)) &&
            fekete_reports_equal(
                fekete_bound(ctx, ClassSpec<QuadNumber>{Family::P, one, zero, zero}, mu),
                corollary_fekete(ctx, sl, mu)) &&
            fekete_reports_equal(
                fekete_bound(ctx, ClassSpec<QuadNumber>{Family::P, one, one, zero}, mu),
                corollary_fekete(ctx, ksl, mu)) &&
            fekete_reports_equal(corollary_fekete(ctx, slg1, mu),
                                 corollary_fekete(ctx, sl, mu));
        VerificationRecord record;
        record.check_id = "spec:fekete";
        record.detail = detail + " mu=" + format_rational(mu_rational);
        record.lhs = "theorem piecewise data";
        record.rhs = "corollary piecewise data";
        record.pass = ok;
        record.residual = ok ? 0.0 : 1.0;
        append(result, std::move(record));
      }
    }

    for (std::size_t i = 0; i < config.specialization_tuples; ++i) {
      const QuadNumber gamma{draw_scaled(rng, 1, 8, 4)};
      const QuadNumber lambda{draw_scaled(rng, 0, 8, 4)};
      const QuadNumber alpha{draw_scaled(rng, 0, 6, 2)};
      const QuadNumber two{2};
      std::ostringstream os;
      os << "kappa=" << format_rational(kappa) << " gamma=" << format_quad(gamma)
         << " lambda=" << format_quad(lambda) << " alpha=" << format_quad(alpha);
      const std::string detail = os.str();

      const auto w_fsl = theorem_bounds(
          ctx, ClassSpec<QuadNumber>{Family::W, gamma, lambda, one + two * lambda});
      append(result, compare_bound_routes("spec:W(a=1+2l)=FSL", detail, w_fsl,
                                          cor_fsl(ctx, gamma, lambda).report));

      const auto w_bsl =
          theorem_bounds(ctx, ClassSpec<QuadNumber>{Family::W, gamma, zero, alpha});
      append(result, compare_bound_routes("spec:W(l=0)=BSL", detail, w_bsl,
                                          cor_bsl(ctx, gamma, alpha).report));

      const auto w_hsl =
          theorem_bounds(ctx, ClassSpec<QuadNumber>{Family::W, gamma, zero, one});
      append(result, compare_bound_routes("spec:W(l=0,a=1)=HSL", detail, w_hsl,
                                          cor_hsl(ctx, gamma).report));

      const auto r_slg =
          theorem_bounds(ctx, ClassSpec<QuadNumber>{Family::R, gamma, zero, zero});
      append(result, compare_bound_routes("spec:R(0)=SLgamma", detail, r_slg,
                                          cor_sl_gamma(ctx, gamma).report));

      const auto r_hsl =
          theorem_bounds(ctx, ClassSpec<QuadNumber>{Family::R, gamma, one, zero});
      append(result, compare_bound_routes("spec:R(1)=HSL", detail, r_hsl,
                                          cor_hsl(ctx, gamma).report));

      for (const Rational& mu_rational : config.mu_values) {
        const QuadNumber mu{mu_rational};
        const bool ok =
            fekete_reports_equal(
                fekete_bound(ctx,
                             ClassSpec<QuadNumber>{Family::W, gamma, lambda,
                                                   one + two * lambda},
                             mu),
                corollary_fekete(ctx, cor_fsl(ctx, gamma, lambda), mu)) &&
            fekete_reports_equal(
                fekete_bound(ctx, ClassSpec<QuadNumber>{Family::W, gamma, zero, alpha},
                             mu),
                corollary_fekete(ctx, cor_bsl(ctx, gamma, alpha), mu)) &&
            fekete_reports_equal(
                fekete_bound(ctx, ClassSpec<QuadNumber>{Family::W, gamma, zero, one}, mu),
                corollary_fekete(ctx, cor_hsl(ctx, gamma), mu)) &&
            fekete_reports_equal(
                fekete_bound(ctx, ClassSpec<QuadNumber>{Family::R, gamma, zero, zero},
                             mu),
                corollary_fekete(ctx, cor_sl_gamma(ctx, gamma), mu)) &&
            fekete_reports_equal(
                fekete_bound(ctx, ClassSpec<QuadNumber>{Family::R, gamma, one, zero}, mu),
                corollary_fekete(ctx, cor_hsl(ctx, gamma), mu));
        VerificationRecord record;
        record.check_id = "spec:fekete";
        record.detail = detail + " mu=" + format_rational(mu_rational);
        record.lhs = "theorem piecewise data";
        record.rhs = "corollary piecewise data";
        record.pass = ok;
        record.residual = ok ? 0.0 : 1.0;
        append(result, std::move(record));
      }
    }
  }
  return result;
}

std::vector<TypoFinding> typo_audit() {
  std::vector<TypoFinding> findings;

  {
    TypoFinding finding;
    finding.id = "4.13-sqrt-kappa";
    finding.kind = "numeric";
    finding.note =
        "the displayed |a2| estimate for the B family omits the sqrt(kappa) factor "
        "carried by its derivation step and by the shell-like specialization; the "
        "derivation's reading (with sqrt(kappa)) is implemented";
    for (long k : {1L, 2L}) {
      KappaContext ctx{Rational(k)};
      const ClassSpec<QuadNumber> spec{Family::B, QuadNumber(1), QuadNumber(1),
                                       QuadNumber()};
      const auto report = theorem_bounds(ctx, spec);
      using boost::multiprecision::sqrt;
      const BigFloat den = to_bigfloat(report.radicand);
      const BigFloat kappa_tau_abs =
          to_bigfloat(abs(QuadNumber(ctx.kappa()) * ctx.tau()));
      const BigFloat statement_reading = kappa_tau_abs / sqrt(den);
      const BigFloat derivation_reading =
          kappa_tau_abs * sqrt(to_bigfloat(QuadNumber(ctx.kappa()))) / sqrt(den);
      const std::string at = "kappa=" + std::to_string(k) + ", lambda=1";
      finding.evaluations.emplace_back("statement reading, " + at,
                                       format_float(statement_reading));
      finding.evaluations.emplace_back("derivation reading, " + at,
                                       format_float(derivation_reading));
    }
    findings.push_back(std::move(finding));
  }

  {
    TypoFinding finding;
    finding.id = "def1.2-subordination-symbol";
    finding.kind = "structural";
    finding.note =
        "the inverse-side condition of the R-family definition omits the subordination "
        "relation between the operator and its target; it is read as subordinate, "
        "parallel to the direct side";
    findings.push_back(std::move(finding));
  }

  {
    TypoFinding finding;
    finding.id = "5.3-inverse-argument";
    finding.kind = "structural";
    finding.note =
        "the inverse-side display of the P-family equations prints the direct function "
        "in the numerator where the inverse belongs, which would be dimensionally "
        "inconsistent; the inverse is used throughout";
    findings.push_back(std::move(finding));
  }

  return findings;
}

SuiteResult run_typo_suite() {
  SuiteResult result;
  for (const TypoFinding& finding : typo_audit()) {
    VerificationRecord record;
    record.check_id = "typo:" + finding.id;
    record.detail = finding.kind + ": " + finding.note;
    for (const auto& [label, value] : finding.evaluations) {
      if (!record.lhs.empty()) record.lhs += "; ";
      record.lhs += label + " = " + value;
    }
    record.rhs = "informational";
    record.pass = true;
    append(result, std::move(record));
  }
  return result;
}

}  // namespace kfib
