#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "kfib/bounds.hpp"
#include "kfib/errors.hpp"
#include "kfib/kappa_context.hpp"
#include "kfib/shell_like.hpp"
#include "kfib/table.hpp"
#include "kfib/verify.hpp"

namespace {

using namespace kfib;
using nlohmann::json;

void emit_table(const OutputTable& table, const std::string& format) {
  if (format == "csv") {
    table.write_csv(std::cout);
  } else {
    table.write_json(std::cout);
  }
}

int run_fib(const std::string& kappa_text, long n, bool binet,
            const std::string& format) {
  if (n < 0) throw usage_error("--n must be nonnegative");
  KappaContext ctx(parse_rational(kappa_text));
  OutputTable table;
  table.headers = binet ? std::vector<std::string>{"n", "F", "F_binet", "match"}
                        : std::vector<std::string>{"n", "F"};
  for (long i = 0; i <= n; ++i) {
    const Rational value = ctx.fib(static_cast<std::size_t>(i));
    if (binet) {
      const QuadNumber closed = ctx.fib_binet(static_cast<std::size_t>(i));
      const bool match = closed == QuadNumber(value);
      table.add_row({std::to_string(i), format_rational(value), format_quad(closed),
                     match ? "1" : "0"});
    } else {
      table.add_row({std::to_string(i), format_rational(value)});
    }
  }
  emit_table(table, format);
  return 0;
}

int run_ptilde(const std::string& kappa_text, long order, const std::string& format) {
  if (order < 0) throw usage_error("--order must be nonnegative");
  KappaContext ctx(parse_rational(kappa_text));
  const auto series = ptilde_series<QuadNumber>(ctx, static_cast<std::size_t>(order));
  OutputTable table;
  table.headers = {"n", "coefficient", "value"};
  for (long i = 0; i <= order; ++i) {
    const QuadNumber& coeff = series[static_cast<std::size_t>(i)];
    table.add_row({std::to_string(i), format_quad(coeff), format_float(to_bigfloat(coeff))});
  }
  emit_table(table, format);
  return 0;
}

struct FamilyRequest {
  std::string name;
  KappaContext ctx;
  QuadNumber gamma;
  QuadNumber lambda;
  QuadNumber alpha;
};

bool is_theorem_family(const std::string& name) {
  return name == "W" || name == "R" || name == "B" || name == "P";
}

ClassSpec<QuadNumber> theorem_spec(const FamilyRequest& request) {
  ClassSpec<QuadNumber> spec;
  spec.family = family_from_name(request.name);
  spec.lambda = request.lambda;
  if (spec.family == Family::W || spec.family == Family::R) spec.gamma = request.gamma;
  if (spec.family == Family::W) spec.alpha = request.alpha;
  return spec;
}

BoundReport<QuadNumber> corollary_report(const FamilyRequest& request,
                                         CorollaryBounds<QuadNumber>* fekete_out) {
  CorollaryBounds<QuadNumber> cor;
  if (request.name == "FSL") {
    cor = cor_fsl(request.ctx, request.gamma, request.lambda);
  } else if (request.name == "BSL") {
    cor = cor_bsl(request.ctx, request.gamma, request.alpha);
  } else if (request.name == "HSL") {
    cor = cor_hsl(request.ctx, request.gamma);
  } else if (request.name == "SLg") {
    cor = cor_sl_gamma(request.ctx, request.gamma);
  } else if (request.name == "SL") {
    cor = cor_sl<QuadNumber>(request.ctx);
  } else if (request.name == "KSL") {
    cor = cor_ksl<QuadNumber>(request.ctx);
  } else {
    throw usage_error("unknown family '" + request.name + "'");
  }
  if (fekete_out != nullptr) *fekete_out = cor;
  return cor.report;
}

json bound_to_json(const FamilyRequest& request, const BoundReport<QuadNumber>& report) {
  json out;
  out["family"] = request.name;
  out["kappa"] = format_rational(request.ctx.kappa());
  out["gamma"] = format_quad(request.gamma);
  out["lambda"] = format_quad(request.lambda);
  out["alpha"] = format_quad(request.alpha);
  out["valid"] = report.valid;
  if (report.valid) {
    out["a2_bound"] = format_float(a2_bound_value(report));
    out["a3_bound"] = format_float(to_bigfloat(report.a3_bound));
    out["fekete_flat"] = format_float(to_bigfloat(report.flat));
    out["exact"] = {{"a2_bound_sq", format_quad(report.a2_bound_sq)},
                    {"a3_bound", format_quad(report.a3_bound)},
                    {"radicand", format_quad(report.radicand)}};
  }
  out["radicand"] = format_float(to_bigfloat(report.radicand));
  return out;
}

int run_bound(const FamilyRequest& request) {
  BoundReport<QuadNumber> report;
  if (is_theorem_family(request.name)) {
    report = theorem_bounds(request.ctx, theorem_spec(request));
  } else {
    report = corollary_report(request, nullptr);
  }
  std::cout << bound_to_json(request, report).dump(2) << '\n';
  return 0;
}

int run_fekete(const FamilyRequest& request, const std::string& from_text,
               const std::string& to_text, long steps, const std::string& format) {
  if (steps < 1) throw usage_error("--mu-steps must be at least 1");
  const Rational from = parse_rational(from_text);
  const Rational to = parse_rational(to_text);

  const bool theorem = is_theorem_family(request.name);
  ClassSpec<QuadNumber> spec;
  CorollaryBounds<QuadNumber> cor;
  if (theorem) {
    spec = theorem_spec(request);
  } else {
    corollary_report(request, &cor);
  }

  OutputTable table;
  table.headers = {"mu", "value", "branch", "threshold"};
  for (long i = 0; i < steps; ++i) {
    const Rational mu_rational =
        steps == 1 ? from : from + (to - from) * Rational(i) / Rational(steps - 1);
    const QuadNumber mu{mu_rational};
    const FeketeReport<QuadNumber> report =
        theorem ? fekete_bound(request.ctx, spec, mu)
                : corollary_fekete(request.ctx, cor, mu);
    if (!report.valid) {
      table.add_row({format_rational(mu_rational), "", "invalid", ""});
      continue;
    }
    table.add_row({format_rational(mu_rational), format_float(to_bigfloat(report.value)),
                   report.branch == FeketeBranch::flat ? "flat" : "slope",
                   format_float(to_bigfloat(report.threshold))});
  }
  emit_table(table, format);
  return 0;
}

int run_verify(const std::string& suite, const std::string& config_path) {
  SweepConfig config;
  if (config_path.empty()) {
    config = default_sweep_config();
  } else {
    std::ifstream in(config_path);
    if (!in) throw usage_error("cannot open config file '" + config_path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    config = sweep_config_from_json(buffer.str());
  }

  bool all_pass = true;
  std::size_t total = 0;
  std::size_t failures = 0;
  auto run = [&](const std::string& name, SuiteResult result) {
    for (const auto& record : result.records) {
      std::cout << to_json_line(record) << '\n';
      ++total;
      if (!record.pass) ++failures;
    }
    all_pass = all_pass && result.all_pass;
    json summary;
    summary["suite"] = name;
    summary["records"] = result.records.size();
    summary["pass"] = result.all_pass;
    std::cout << summary.dump() << '\n';
  };

  if (suite == "proof-chain" || suite == "all") {
    run("proof-chain", run_proof_chain_suite(config));
  }
  if (suite == "domination" || suite == "all") {
    run("domination", run_domination_suite(config));
  }
  if (suite == "specialization" || suite == "all") {
    run("specialization", run_specialization_suite(config));
  }
  if (suite == "typos" || suite == "all") {
    run("typos", run_typo_suite());
  }

  json overall;
  overall["records"] = total;
  overall["failures"] = failures;
  overall["pass"] = all_pass;
  std::cout << overall.dump() << '\n';
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    set_working_precision_bits(precision_bits_from_env());

    CLI::App app{"kappa-Fibonacci shell-like bounds toolkit"};
    app.require_subcommand(1);
    app.fallthrough(true);
    std::string format = "csv";
    app.add_option("--format", format, "table output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    std::string kappa = "1";
    std::string gamma = "1";
    std::string lambda;
    std::string alpha = "0";
    std::string family = "SL";

    auto add_family_options = [&](CLI::App* cmd) {
      cmd->add_option("--kappa", kappa, "kappa as p/q or decimal")->capture_default_str();
      cmd->add_option("--family", family,
                      "W|R|B|P (theorem families) or FSL|BSL|HSL|SLg|SL|KSL")
          ->capture_default_str();
      cmd->add_option("--gamma", gamma, "gamma (families W, R, FSL, BSL, HSL, SLg)")
          ->capture_default_str();
      cmd->add_option("--lambda", lambda, "lambda (W, R, B, P, FSL; default 0, or 1 for B)");
      cmd->add_option("--alpha", alpha, "alpha (W, BSL)")->capture_default_str();
    };

    auto* fib_cmd = app.add_subcommand("fib", "kappa-Fibonacci numbers by recurrence");
    long fib_n = 10;
    bool fib_binet = false;
    fib_cmd->add_option("--kappa", kappa, "kappa as p/q or decimal")->capture_default_str();
    fib_cmd->add_option("--n", fib_n, "largest index")->capture_default_str();
    fib_cmd->add_flag("--binet", fib_binet, "cross-check against the closed form");

    auto* ptilde_cmd =
        app.add_subcommand("ptilde", "coefficients of the shell-like generating function");
    long ptilde_order = 8;
    ptilde_cmd->add_option("--kappa", kappa, "kappa as p/q or decimal")
        ->capture_default_str();
    ptilde_cmd->add_option("--order", ptilde_order, "truncation order")
        ->capture_default_str();

    auto* bound_cmd =
        app.add_subcommand("bound", "closed-form |a2|, |a3| estimates as JSON");
    add_family_options(bound_cmd);

    auto* fekete_cmd =
        app.add_subcommand("fekete", "piecewise |a3 - mu a2^2| estimates over a mu grid");
    add_family_options(fekete_cmd);
    std::string mu_from = "0";
    std::string mu_to = "2";
    long mu_steps = 9;
    fekete_cmd->add_option("--mu-from", mu_from, "first mu")->capture_default_str();
    fekete_cmd->add_option("--mu-to", mu_to, "last mu")->capture_default_str();
    fekete_cmd->add_option("--mu-steps", mu_steps, "grid size")->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "replay the derivations and sweeps");
    std::string suite = "all";
    std::string config_path;
    verify_cmd->add_option("--suite", suite, "which checks to run")
        ->check(CLI::IsMember({"proof-chain", "domination", "specialization", "typos",
                               "all"}))
        ->capture_default_str();
    verify_cmd->add_option("--config", config_path, "JSON sweep configuration");

    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
      const int code = app.exit(err);
      return code == 0 ? 0 : 2;
    }

    auto family_request = [&]() {
      if (lambda.empty()) lambda = (family == "B") ? "1" : "0";
      return FamilyRequest{family, KappaContext(parse_rational(kappa)),
                           QuadNumber(parse_rational(gamma)),
                           QuadNumber(parse_rational(lambda)),
                           QuadNumber(parse_rational(alpha))};
    };

    if (fib_cmd->parsed()) return run_fib(kappa, fib_n, fib_binet, format);
    if (ptilde_cmd->parsed()) return run_ptilde(kappa, ptilde_order, format);
    if (bound_cmd->parsed()) return run_bound(family_request());
    if (fekete_cmd->parsed()) {
      return run_fekete(family_request(), mu_from, mu_to, mu_steps, format);
    }
    if (verify_cmd->parsed()) return run_verify(suite, config_path);
    return 2;
  } catch (const usage_error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  } catch (const arithmetic_error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "unexpected error: " << err.what() << '\n';
    return 2;
  }
}
