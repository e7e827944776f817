// Copyright 2026 The mimo-bc-sim Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: Monte Carlo sweeps, figure recipes and analytic curves.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mimobc/analytic.hpp"
#include "mimobc/errors.hpp"
#include "mimobc/harness.hpp"

namespace
{

using namespace mimobc;
namespace an = mimobc::analytic;

constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct RunOptions
{
  std::string schemes = "zfdpc-sus,zfbf-sus,upper-bound";
  int tx = 4;
  int rx = 4;
  std::vector<int> users{50};
  std::vector<double> snr_db{15.0};
  std::size_t trials = 2000;
  std::string delta = "inv-log-k";
  std::string power = "waterfill";
  std::uint64_t seed = 42;
  std::string scope = "all";
  int workers = 0;
  bool exclude_selected_user = false;
  std::string out;
};

struct FigureOptions
{
  std::string name;
  std::string out;
  std::optional<std::size_t> trials;
  std::uint64_t seed = 42;
  int workers = 0;
};

struct AnalyticOptions
{
  std::string curve;
  int tx = 4;
  int rx = 4;
  int n = 1;
  std::optional<double> delta;
  std::vector<double> users{100, 200, 500, 1000, 2000, 5000, 10000};
  double snr_db = 15.0;
  std::size_t points = 101;
  std::optional<double> x_max;
  std::string mode = "numeric";
  std::string bound = "upper";
  std::string quantity = "sum_rate";
  std::size_t samples = 1'000'000;
  std::uint64_t seed = 7;
  std::string out;
};

EigenmodeScope parse_scope(const std::string &text)
{
  if (text == "all" || text == "all_modes")
  {
    return EigenmodeScope::all_modes;
  }
  if (text == "principal" || text == "principal_only")
  {
    return EigenmodeScope::principal_only;
  }
  throw UsageError("scope must be 'all' or 'principal', got '" + text + "'");
}

template <class Writer>
void write_output(const std::string &path, Writer &&writer)
{
  if (path.empty() || path == "-")
  {
    writer(std::cout);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file)
  {
    throw IoError("cannot open '" + path + "' for writing");
  }
  writer(file);
  file.flush();
  if (!file)
  {
    throw IoError("write to '" + path + "' failed");
  }
}

int run_command(const RunOptions &opt)
{
  ExperimentConfig config;
  config.schemes = parse_schemes(opt.schemes);
  config.tx = opt.tx;
  config.rx = opt.rx;
  config.users = opt.users;
  config.snr_db = opt.snr_db;
  config.trials = opt.trials;
  config.delta = DeltaSchedule::parse(opt.delta);
  config.power = parse_power(opt.power);
  config.master_seed = opt.seed;
  config.scope = parse_scope(opt.scope);
  config.exclude_selected_user = opt.exclude_selected_user;
  const SweepResult result = sweep(config, opt.workers);
  write_output(opt.out, [&](std::ostream &os) { write_csv(result, os); });
  return 0;
}

int figure_command(const FigureOptions &opt)
{
  SweepResult merged;
  for (ExperimentConfig config : figure_recipes(opt.name))
  {
    if (opt.trials)
    {
      config.trials = *opt.trials;
    }
    config.master_seed = opt.seed;
    const SweepResult part = sweep(config, opt.workers);
    merged.rows.insert(merged.rows.end(), part.rows.begin(), part.rows.end());
  }
  write_output(opt.out, [&](std::ostream &os) { write_csv(merged, os); });
  return 0;
}

double require_delta(const AnalyticOptions &opt)
{
  if (!opt.delta)
  {
    throw UsageError("--delta is required for curve '" + opt.curve + "'");
  }
  return *opt.delta;
}

an::CurveParams params_of(const AnalyticOptions &opt)
{
  an::CurveParams p;
  p.tx = opt.tx;
  p.rx = opt.rx;
  p.n = opt.n;
  p.delta = opt.delta;
  return p;
}

std::vector<an::AnalyticCurve> build_curves(const AnalyticOptions &opt)
{
  if (opt.points < 1)
  {
    throw UsageError("--points must be >= 1");
  }
  std::vector<an::AnalyticCurve> curves;
  const an::CurveParams base = params_of(opt);

  if (opt.curve == "mu_n" || opt.curve == "e_delta")
  {
    const double limit = opt.tx > 1 ? 1.0 / (opt.tx - 1) : 1.0;
    an::AnalyticCurve c;
    c.kind = opt.curve == "mu_n" ? an::CurveKind::cdf : an::CurveKind::scaling;
    c.params = base;
    c.grid = opt.delta ? std::vector<double>{*opt.delta}
                       : an::linspace(0.0, limit * (1.0 - 1e-3), opt.points);
    for (double d : c.grid)
    {
      if (opt.curve == "mu_n")
      {
        c.values.push_back(d > 0.0 ? an::mu_n(opt.tx, opt.n, d) : 0.0);
      }
      else
      {
        c.values.push_back(an::e_delta(opt.tx, d));
      }
    }
    curves.push_back(c);
    return curves;
  }

  if (opt.curve == "fmax_pdf" || opt.curve == "fmax_cdf")
  {
    const an::WishartMaxEigen law(opt.tx, opt.rx);
    an::AnalyticCurve c;
    c.kind = opt.curve == "fmax_pdf" ? an::CurveKind::pdf : an::CurveKind::cdf;
    c.params = base;
    c.params.n = 1;
    c.grid = an::linspace(0.0, opt.x_max.value_or(4.0 * (opt.tx + opt.rx)), opt.points);
    for (double x : c.grid)
    {
      c.values.push_back(c.kind == an::CurveKind::pdf ? law.pdf(x) : law.cdf(x));
    }
    curves.push_back(c);
    return curves;
  }

  if (opt.curve == "beta_cdf")
  {
    const double delta = require_delta(opt);
    an::BetaCdfMode mode;
    an::CurveKind kind = an::CurveKind::cdf;
    if (opt.mode == "exact")
    {
      mode = an::BetaCdfMode::exact_n2;
    }
    else if (opt.mode == "numeric")
    {
      mode = an::BetaCdfMode::numeric;
    }
    else if (opt.mode == "upper")
    {
      mode = an::BetaCdfMode::bound_upper;
      kind = an::CurveKind::bound_upper;
    }
    else if (opt.mode == "lower")
    {
      mode = an::BetaCdfMode::bound_lower;
      kind = an::CurveKind::bound_lower;
    }
    else
    {
      throw UsageError("--mode must be exact, numeric, upper or lower");
    }
    an::BetaCdfOptions beta_opt;
    beta_opt.samples = opt.samples;
    beta_opt.seed = opt.seed;
    an::AnalyticCurve c;
    c.kind = kind;
    c.params = base;
    c.grid = an::linspace(1.0 - (opt.n - 1) * delta, 1.0, opt.points);
    for (double x : c.grid)
    {
      c.values.push_back(an::beta_cdf(opt.tx, opt.n, delta, x, mode, beta_opt).value);
    }
    curves.push_back(c);
    return curves;
  }

  if (opt.curve == "gamma_cdf")
  {
    const double delta = opt.n == 1 ? opt.delta.value_or(0.0) : require_delta(opt);
    const an::WishartMaxEigen law(opt.tx, opt.rx);
    an::AnalyticCurve upper;
    an::AnalyticCurve lower;
    upper.kind = an::CurveKind::bound_upper;
    lower.kind = an::CurveKind::bound_lower;
    upper.params = lower.params = base;
    upper.grid = lower.grid = an::linspace(0.0, opt.x_max.value_or(4.0 * (opt.tx + opt.rx)), opt.points);
    for (double x : upper.grid)
    {
      const an::CdfBounds b = an::gamma_cdf_bounds(law, opt.n, delta, x);
      upper.values.push_back(b.upper);
      lower.values.push_back(b.lower);
    }
    curves.push_back(upper);
    curves.push_back(lower);
    return curves;
  }

  if (opt.curve == "tail")
  {
    const double delta = opt.n == 1 ? opt.delta.value_or(0.0) : require_delta(opt);
    if (opt.bound != "upper" && opt.bound != "lower")
    {
      throw UsageError("--bound must be upper or lower");
    }
    an::AnalyticCurve c;
    c.kind = an::CurveKind::tail;
    c.params = base;
    c.grid = an::linspace(10.0, opt.x_max.value_or(40.0), opt.points);
    for (double x : c.grid)
    {
      const an::CdfBounds t = an::tail_expansion(opt.tx, opt.rx, opt.n, delta, x);
      c.values.push_back(opt.bound == "upper" ? t.upper : t.lower);
    }
    curves.push_back(c);
    return curves;
  }

  if (opt.curve == "scaling")
  {
    const double rho = std::pow(10.0, opt.snr_db / 10.0) / opt.tx;
    an::AnalyticCurve c;
    c.kind = an::CurveKind::scaling;
    c.params = base;
    c.params.snr_db = opt.snr_db;
    c.grid = opt.users;
    for (double k : c.grid)
    {
      const an::ScalingLaws s = an::scaling_laws(opt.tx, opt.rx, opt.n, k, rho);
      if (opt.quantity == "sum_rate")
      {
        c.values.push_back(s.asymptotic_sum_rate);
      }
      else if (opt.quantity == "u")
      {
        c.values.push_back(s.u);
      }
      else if (opt.quantity == "chi")
      {
        c.values.push_back(s.chi);
      }
      else if (opt.quantity == "varpi")
      {
        c.values.push_back(s.varpi);
      }
      else if (opt.quantity == "upsilon")
      {
        c.values.push_back(s.upsilon);
      }
      else
      {
        throw UsageError("--quantity must be sum_rate, u, chi, varpi or upsilon");
      }
    }
    curves.push_back(c);
    return curves;
  }

  throw UsageError("unknown curve '" + opt.curve + "'");
}

int analytic_command(const AnalyticOptions &opt)
{
  const std::vector<an::AnalyticCurve> curves = build_curves(opt);
  write_output(opt.out, [&](std::ostream &os) { an::write_curves(curves, os); });
  return 0;
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"MIMO broadcast channel simulator: semi-orthogonal user selection with "
               "zero-forcing dirty paper coding and zero-forcing beamforming.\n"
               "SNR is the total transmit power P in dB over unit-variance noise; "
               "per-stream power is P divided among the scheduled streams."};
  app.require_subcommand(1);

  RunOptions run_opt;
  auto *run = app.add_subcommand("run", "Monte Carlo sweep over user counts and SNR points");
  run->add_option("--scheme", run_opt.schemes,
                  "Comma list: zfdpc-sus, zfbf-sus, zfbf-exhaustive, upper-bound, asymptotic, "
                  "gap-zfdpc, gap-zfbf, gap-{zfdpc,zfbf}-{high,low}");
  run->add_option("--tx", run_opt.tx, "Transmit antennas M");
  run->add_option("--rx", run_opt.rx, "Receive antennas N per user");
  run->add_option("--users", run_opt.users, "User counts K (comma list)")->delimiter(',');
  run->add_option("--snr-db", run_opt.snr_db, "Total transmit power P in dB (comma list)")
      ->delimiter(',');
  run->add_option("--trials", run_opt.trials, "Monte Carlo trials per grid point");
  run->add_option("--delta", run_opt.delta, "inv-log-k, adaptive or a fixed value in (0,1)");
  run->add_option("--power", run_opt.power, "equal or waterfill");
  run->add_option("--seed", run_opt.seed, "Master seed");
  run->add_option("--scope", run_opt.scope, "Eigenmodes offered to the scheduler: all or principal");
  run->add_option("--workers", run_opt.workers, "OpenMP threads (0 = runtime default)");
  run->add_flag("--exclude-selected-user", run_opt.exclude_selected_user,
                "Serve at most one eigenmode per user");
  run->add_option("--out", run_opt.out, "Output CSV (default stdout)");

  FigureOptions fig_opt;
  auto *figure = app.add_subcommand("figure", "Reproduce a figure configuration");
  figure->add_option("name", fig_opt.name, "fig1_gaps, fig2_sumrates or fig3_rx_antennas")
      ->required();
  figure->add_option("--out", fig_opt.out, "Output CSV (default stdout)");
  figure->add_option("--trials", fig_opt.trials, "Override the trial count");
  figure->add_option("--seed", fig_opt.seed, "Master seed");
  figure->add_option("--workers", fig_opt.workers, "OpenMP threads (0 = runtime default)");

  AnalyticOptions an_opt;
  auto *analytic = app.add_subcommand("analytic", "Tabulate closed-form curves");
  analytic
      ->add_option("--curve", an_opt.curve,
                   "mu_n, e_delta, fmax_pdf, fmax_cdf, beta_cdf, gamma_cdf, tail or scaling")
      ->required();
  analytic->add_option("--tx", an_opt.tx, "Transmit antennas M");
  analytic->add_option("--rx", an_opt.rx, "Receive antennas N");
  analytic->add_option("--n", an_opt.n, "Selection stage n");
  analytic->add_option("--delta", an_opt.delta, "Semi-orthogonality threshold");
  analytic->add_option("--users", an_opt.users, "K grid for the scaling curve")->delimiter(',');
  analytic->add_option("--snr-db", an_opt.snr_db, "Total transmit power in dB (scaling curve)");
  analytic->add_option("--points", an_opt.points, "Grid size");
  analytic->add_option("--x-max", an_opt.x_max, "Right end of the x grid");
  analytic->add_option("--mode", an_opt.mode, "beta_cdf: exact, numeric, upper or lower");
  analytic->add_option("--bound", an_opt.bound, "tail: upper or lower");
  analytic->add_option("--quantity", an_opt.quantity, "scaling: sum_rate, u, chi, varpi or upsilon");
  analytic->add_option("--samples", an_opt.samples, "Monte Carlo samples (beta_cdf, n >= 4)");
  analytic->add_option("--seed", an_opt.seed, "Monte Carlo seed");
  analytic->add_option("--out", an_opt.out, "Output CSV (default stdout)");

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError &e)
  {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try
  {
    if (*run)
    {
      return run_command(run_opt);
    }
    if (*figure)
    {
      return figure_command(fig_opt);
    }
    return analytic_command(an_opt);
  }
  catch (const UsageError &e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  catch (const DomainError &e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  catch (const DimensionError &e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  catch (const SizeGuardError &e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  catch (const IoError &e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  catch (const NumericalError &e)
  {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  }
  catch (const ContractViolation &e)
  {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  }
}
