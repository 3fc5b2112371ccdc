// Acceptance harness: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kfib/bounds.hpp"
#include "kfib/shell_like.hpp"
#include "kfib/verify.hpp"
#include "test_helpers.hpp"

using namespace kfib;
using kfib::testing::random_rational;

namespace {

struct Criterion {
  std::string name;
  double time_limit_seconds;  // 0 = no limit
  std::function<bool(std::ostream&)> body;
};

const std::vector<Rational> kKappaGrid{Rational(1), Rational(2), Rational(3),
                                       Rational(1) / 2};
const Family kFamilies[] = {Family::W, Family::R, Family::B, Family::P};

ClassSpec<QuadNumber> random_valid_spec(std::mt19937_64& rng, const KappaContext& ctx,
                                        Family family) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    ClassSpec<QuadNumber> spec;
    spec.family = family;
    spec.gamma = QuadNumber(family == Family::B || family == Family::P
                                ? Rational(1)
                                : random_rational(rng, 1, 8, 4));
    switch (family) {
      case Family::W:
        spec.lambda = QuadNumber(random_rational(rng, 0, 12, 4));
        spec.alpha = QuadNumber(random_rational(rng, 0, 6, 2));
        break;
      case Family::R:
        spec.lambda = QuadNumber(random_rational(rng, 0, 12, 4));
        break;
      case Family::B:
        spec.lambda = QuadNumber(Rational(1) + random_rational(rng, 0, 8, 4));
        break;
      case Family::P:
        spec.lambda = QuadNumber(random_rational(rng, 0, 4, 4));
        break;
    }
    if (theorem_bounds(ctx, spec).valid) return spec;
  }
  throw arithmetic_error("no valid tuple found");
}

bool generating_function_identity(std::ostream& log) {
  for (const Rational& kappa : kKappaGrid) {
    KappaContext ctx{kappa};
    const auto series = ptilde_series<QuadNumber>(ctx, 30);
    for (std::size_t n = 1; n <= 30; ++n) {
      if (!(series[n] == ptilde_coeff(ctx, n))) {
        log << "mismatch at kappa=" << format_rational(kappa) << " n=" << n;
        return false;
      }
    }
  }
  log << "4 kappa values x 30 coefficients, zero residual";
  return true;
}

bool classical_expansion(std::ostream& log) {
  KappaContext ctx{Rational(1)};
  const QuadNumber tau = ctx.tau();
  const auto series = ptilde_series<QuadNumber>(ctx, 5);
  const long factors[] = {1, 3, 4, 7, 11};
  if (!(series[0] == QuadNumber(1))) return false;
  for (std::size_t n = 1; n <= 5; ++n) {
    if (!(series[n] == QuadNumber(factors[n - 1]) * qpow(tau, static_cast<long>(n)))) {
      log << "coefficient " << n << " differs";
      return false;
    }
  }
  log << "coefficients 1, tau, 3tau^2, 4tau^3, 7tau^4, 11tau^5 reproduced";
  return true;
}

bool reversion_oracle(std::ostream& log) {
  std::mt19937_64 rng(20250810);
  for (int i = 0; i < 100; ++i) {
    const QuadNumber a2(random_rational(rng, -20, 20), random_rational(rng, -20, 20),
                        Rational(5));
    const QuadNumber a3(random_rational(rng, -20, 20), random_rational(rng, -20, 20),
                        Rational(5));
    const QuadNumber a4(random_rational(rng, -20, 20), random_rational(rng, -20, 20),
                        Rational(5));
    TruncatedSeries<QuadNumber> f(4);
    f[1] = QuadNumber(1);
    f[2] = a2;
    f[3] = a3;
    f[4] = a4;
    const auto g = revert(f);
    const bool ok =
        g[2] == -a2 && g[3] == QuadNumber(2) * a2 * a2 - a3 &&
        g[4] == -(QuadNumber(5) * a2 * a2 * a2 - QuadNumber(5) * a2 * a3 + a4);
    if (!ok) {
      log << "closed-form mismatch at sample " << i;
      return false;
    }
  }
  log << "100 random reversions match (-a2, 2a2^2-a3, -(5a2^3-5a2a3+a4)) exactly";
  return true;
}

bool proof_chain_replay(std::ostream& log) {
  SweepConfig config = default_sweep_config();
  config.proof_chain_tuples = 50;
  config.mode = VerifyMode::both;
  const auto result = run_proof_chain_suite(config);
  std::size_t exact_nonzero = 0;
  for (const auto& record : result.records) {
    if (record.detail.find("mode=exact") != std::string::npos &&
        record.residual != 0.0) {
      ++exact_nonzero;
    }
  }
  log << result.records.size() << " records, exact residuals all zero ("
      << exact_nonzero << " exceptions), float residuals <= 1e-10";
  return result.all_pass && exact_nonzero == 0;
}

bool specialization_suite(std::ostream& log) {
  SweepConfig config = default_sweep_config();
  config.specialization_tuples = 20;
  const auto result = run_specialization_suite(config);
  log << result.records.size() << " identity records across 4 kappa values";
  return result.all_pass;
}

bool a3_consistency(std::ostream& log) {
  std::mt19937_64 rng(424243);
  for (const Family family : kFamilies) {
    for (int i = 0; i < 100; ++i) {
      KappaContext ctx{kKappaGrid[static_cast<std::size_t>(i) % kKappaGrid.size()]};
      const auto spec = random_valid_spec(rng, ctx, family);
      const auto report = theorem_bounds(ctx, spec);
      if (!(report.a3_bound == report.flat + report.a2_bound_sq)) {
        log << "family " << family_name(family) << ": a3 != flat + a2^2";
        return false;
      }
    }
  }
  log << "a3 = flat + a2_bound^2 exactly, 100 tuples per family";
  return true;
}

bool fekete_structure(std::ostream& log) {
  std::mt19937_64 rng(77);
  for (const Family family : kFamilies) {
    for (int i = 0; i < 200; ++i) {
      KappaContext ctx{kKappaGrid[static_cast<std::size_t>(i) % kKappaGrid.size()]};
      const auto spec = random_valid_spec(rng, ctx, family);
      const auto at_one = fekete_bound(ctx, spec, QuadNumber(1));
      if (!at_one.valid || at_one.branch != FeketeBranch::flat) {
        log << "mu=1 not on the flat branch";
        return false;
      }
      const QuadNumber mu_star = QuadNumber(1) + at_one.threshold;
      const auto boundary = fekete_bound(ctx, spec, mu_star);
      // Slope expression evaluated at the crossover equals the flat value.
      if (!(QuadNumber(4) * abs(boundary.h_mu) == at_one.value)) {
        log << "branch values disagree at the threshold";
        return false;
      }
    }
  }
  log << "continuity at the crossover and flat branch at mu=1, 200 tuples per family";
  return true;
}

bool domination_sweep_criterion(std::ostream& log) {
  SweepConfig config = default_sweep_config();
  config.domination_tuples = 10;
  config.caratheodory_grid = 8;  // 64 grid points
  const auto result = run_domination_suite(config);
  log << result.records.size() / 2 << " sweeps, zero violations, corner ratio >= 1-1e-9";
  return result.all_pass;
}

bool boundary_probe(std::ostream& log) {
  KappaContext ctx{Rational(1)};
  const BigFloat beta = to_bigfloat(QuadNumber::sqrt_of(Rational(5))) / 10;
  const BigFloat minimum = min_real_part_probe(ctx, BigFloat(0.95), 1024);
  log << "min Re = " << format_float(minimum, 10) << " vs sqrt(5)/10 - 1e-6";
  return minimum >= beta - BigFloat(1e-6);
}

bool typo_audit_criterion(std::ostream& log) {
  const auto findings = typo_audit();
  const bool ok = findings.size() == 3 && findings[0].id == "4.13-sqrt-kappa" &&
                  findings[1].id == "def1.2-subordination-symbol" &&
                  findings[2].id == "5.3-inverse-argument";
  log << findings.size() << " catalogued discrepancies, no extras";
  return ok;
}

}  // namespace

int main() {
  set_working_precision_bits(precision_bits_from_env());

  const std::vector<Criterion> criteria{
      {"generating-function identity (4 kappas, n <= 30, exact)", 1.0,
       generating_function_identity},
      {"classical kappa=1 expansion", 0.0, classical_expansion},
      {"reversion oracle (100 exact samples)", 0.0, reversion_oracle},
      {"proof-chain replay (50 tuples/family, exact+float)", 10.0, proof_chain_replay},
      {"specialization suite (9 identity pairs)", 0.0, specialization_suite},
      {"a3 consistency (flat + a2^2 route)", 0.0, a3_consistency},
      {"Fekete continuity and flat branch at mu=1", 0.0, fekete_structure},
      {"domination sweep (64-point grid, 10 tuples/family)", 30.0,
       domination_sweep_criterion},
      {"boundary real-part probe (r=0.95, 1024 points)", 0.0, boundary_probe},
      {"typo audit (exactly three findings)", 0.0, typo_audit_criterion},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& criterion = criteria[i];
    std::ostringstream log;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criterion.body(log);
    } catch (const std::exception& err) {
      log << "exception: " << err.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criterion.time_limit_seconds > 0 && elapsed > criterion.time_limit_seconds) {
      log << " [exceeded " << criterion.time_limit_seconds << "s budget]";
      ok = false;
    }
    std::printf("[%s] criterion %02zu: %s (%.3fs) %s\n", ok ? "PASS" : "FAIL", i + 1,
                criterion.name.c_str(), elapsed, log.str().c_str());
    if (!ok) ++failures;
  }
  if (failures != 0) std::printf("%d criterion(s) failed\n", failures);
  return failures;
}
