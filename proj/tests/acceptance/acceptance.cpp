// Copyright 2026 The mimo-bc-sim Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "invariants.hpp"
#include "mimobc/analytic.hpp"
#include "mimobc/channel.hpp"
#include "mimobc/harness.hpp"
#include "mimobc/selection.hpp"
#include "oracles.hpp"

namespace
{

using namespace mimobc;
namespace an = mimobc::analytic;

struct Verdict
{
  bool pass = false;
  std::string detail;
};

std::string fmt(const char *pattern, double a, double b = 0.0, double c = 0.0)
{
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

// Sum-rate approximation against simulated ZFDPC-SUS over the fig2 grid.
Verdict sum_rate_approximation()
{
  ExperimentConfig c = figure_recipes("fig2_sumrates").front();
  c.trials = 2000;
  const auto start = std::chrono::steady_clock::now();
  const SweepResult r = sweep(c);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  double worst = 0.0;
  int worst_k = 0;
  for (int k : c.users)
  {
    const double gap = std::abs(r.find(SchemeKind::asymptotic_approx, k, 15.0).mean_sum_rate -
                                r.find(SchemeKind::zfdpc_sus, k, 15.0).mean_sum_rate);
    if (gap > worst)
    {
      worst = gap;
      worst_k = k;
    }
  }
  return {worst <= 1.5 && secs < 300.0,
          fmt("max |approx - R_ZFDPC| = %.3f bits/s/Hz at K = %.0f (limit 1.5); %.1f s", worst,
              worst_k, secs)};
}

// Greedy ZFBF against exhaustive ZFBF for M = 4, N = 1.
Verdict exhaustive_comparison()
{
  ExperimentConfig c;
  c.tx = 4;
  c.rx = 1;
  c.users = {4, 6, 8};
  c.snr_db = {15.0};
  c.trials = 1000;
  c.schemes = {SchemeKind::zfbf_sus, SchemeKind::zfbf_exhaustive};
  const SweepResult r = sweep(c);
  bool ok = true;
  std::ostringstream detail;
  for (int k : c.users)
  {
    const SweepRow &sus = r.find(SchemeKind::zfbf_sus, k, 15.0);
    const SweepRow &ex = r.find(SchemeKind::zfbf_exhaustive, k, 15.0);
    const double diff = ex.mean_sum_rate - sus.mean_sum_rate;
    const double se = std::hypot(sus.std_err, ex.std_err);
    ok = ok && diff <= 0.7 && -diff <= 2.0 * se;
    detail << "K=" << k << ": " << fmt("%.3f", diff) << " ";
  }
  detail << "(exhaustive - greedy, limit 0.7)";
  return {ok, detail.str()};
}

// High- and low-SNR gap formulas against measured gaps, M = N = 4, K = 50.
Verdict regime_gaps_check()
{
  ExperimentConfig c;
  c.tx = 4;
  c.rx = 4;
  c.users = {50};
  c.snr_db = {40.0, -20.0};
  c.trials = 500;
  c.power = PowerVariant::equal;
  c.scope = EigenmodeScope::principal_only;
  c.schemes = {SchemeKind::gap_zfdpc,      SchemeKind::gap_zfbf,      SchemeKind::gap_zfdpc_high,
               SchemeKind::gap_zfbf_high,  SchemeKind::gap_zfdpc_low, SchemeKind::gap_zfbf_low};
  const SweepResult r = sweep(c);
  auto mean = [&](SchemeKind s, double snr) { return r.find(s, 50, snr).mean_sum_rate; };
  auto rel = [](double measured, double predicted) {
    return std::abs(measured - predicted) / std::abs(predicted);
  };
  const double hi_bf = rel(mean(SchemeKind::gap_zfbf, 40.0), mean(SchemeKind::gap_zfbf_high, 40.0));
  const double hi_dpc =
      rel(mean(SchemeKind::gap_zfdpc, 40.0), mean(SchemeKind::gap_zfdpc_high, 40.0));
  const double lo_bf = rel(mean(SchemeKind::gap_zfbf, -20.0), mean(SchemeKind::gap_zfbf_low, -20.0));
  const double lo_dpc =
      rel(mean(SchemeKind::gap_zfdpc, -20.0), mean(SchemeKind::gap_zfdpc_low, -20.0));
  const bool ok = hi_bf <= 0.02 && hi_dpc <= 0.10 && lo_bf <= 0.05 && lo_dpc <= 0.05;
  std::ostringstream d;
  d << fmt("40 dB: ZFBF %.4f (<=0.02), ZFDPC %.4f (<=0.10); ", hi_bf, hi_dpc)
    << fmt("-20 dB: ZFBF %.4f, ZFDPC %.4f (<=0.05) relative error", lo_bf, lo_dpc);
  return {ok, d.str()};
}

// Closed-form distributions against Monte Carlo oracles.
Verdict distribution_suite()
{
  std::ostringstream d;
  bool ok = true;
  std::mt19937_64 rng(20260101);

  // Largest eigenvalue law, KS <= 0.01 over 1e5 draws.
  double worst_ks = 0.0;
  for (int m = 1; m <= 4; ++m)
  {
    for (int n = 1; n <= 4; ++n)
    {
      const an::WishartMaxEigen law(m, n);
      std::vector<double> s(100000);
      for (double &x : s)
      {
        x = oracle::max_eigenvalue(oracle::gaussian_matrix(n, m, rng));
      }
      worst_ks = std::max(worst_ks, oracle::ks_distance(s, [&](double x) { return law.cdf(x); }));
    }
  }
  ok = ok && worst_ks <= 0.01;
  d << fmt("F_max KS %.4f; ", worst_ks);

  // mu_n counting oracle, 1e6 isotropic vectors per M, 3 sigma.
  double worst_sigma = 0.0;
  const int samples = 1000000;
  for (int m = 2; m <= 4; ++m)
  {
    const std::vector<double> deltas{0.2 / (m - 1), 0.5 / (m - 1), 0.9 / (m - 1)};
    std::vector<std::vector<long>> hits(static_cast<std::size_t>(m + 1), std::vector<long>(3, 0));
    for (int s = 0; s < samples; ++s)
    {
      const Eigen::VectorXcd v = oracle::gaussian_matrix(m, 1, rng).col(0).normalized();
      for (std::size_t j = 0; j < deltas.size(); ++j)
      {
        for (int n = 2; n <= m; ++n)
        {
          bool inside = true;
          for (int i = 0; i < n - 1 && inside; ++i)
          {
            inside = std::norm(v(i)) < deltas[j];
          }
          hits[static_cast<std::size_t>(n)][j] += inside ? 1 : 0;
        }
      }
    }
    for (int n = 2; n <= m; ++n)
    {
      for (std::size_t j = 0; j < deltas.size(); ++j)
      {
        const double p = an::mu_n(m, n, deltas[j]);
        const double se = std::sqrt(p * (1.0 - p) / samples);
        const double z = std::abs(static_cast<double>(hits[static_cast<std::size_t>(n)][j]) / samples - p) / se;
        worst_sigma = std::max(worst_sigma, z);
      }
    }
  }
  ok = ok && worst_sigma <= 3.0;
  d << fmt("mu_n worst %.2f sigma; ", worst_sigma);

  // Residual law: empirical beta of vectors inside U_n against exact / bounds.
  double worst_beta = 0.0;
  for (auto [m, n, delta] : {std::tuple{4, 2, 0.2}, std::tuple{4, 3, 0.2}, std::tuple{4, 4, 0.2},
                             std::tuple{3, 3, 0.3}})
  {
    std::vector<double> betas;
    while (betas.size() < 100000)
    {
      const Eigen::VectorXcd v = oracle::gaussian_matrix(m, 1, rng).col(0).normalized();
      double head = 0.0;
      bool inside = true;
      for (int i = 0; i < n - 1 && inside; ++i)
      {
        inside = std::norm(v(i)) < delta;
        head += std::norm(v(i));
      }
      if (inside)
      {
        betas.push_back(1.0 - head);
      }
    }
    auto lower = [&](double x) {
      return an::beta_cdf(m, n, delta, x, an::BetaCdfMode::bound_lower).value;
    };
    auto upper = [&](double x) {
      return an::beta_cdf(m, n, delta, x, an::BetaCdfMode::bound_upper).value;
    };
    if (n == 2)
    {
      worst_beta = std::max(worst_beta, oracle::ks_distance(betas, [&](double x) {
        return an::beta_cdf(m, n, delta, x, an::BetaCdfMode::exact_n2).value;
      }));
    }
    else
    {
      worst_beta = std::max(worst_beta, oracle::band_excursion(betas, lower, upper));
    }
    if (n == 3)
    {
      worst_beta = std::max(worst_beta, oracle::ks_distance(betas, [&](double x) {
        return an::beta_cdf(m, n, delta, x, an::BetaCdfMode::numeric).value;
      }));
    }
  }
  ok = ok && worst_beta <= 0.01;
  d << fmt("beta KS/band %.4f; ", worst_beta);

  // Bound ordering of the numeric beta cdf on 100-point grids.
  int order_violations = 0;
  an::BetaCdfOptions mc;
  mc.samples = 1000000;
  for (auto [m, n, delta] : {std::tuple{4, 3, 0.2}, std::tuple{5, 3, 0.2}, std::tuple{4, 4, 0.2}})
  {
    const double lo_x = 1.0 - (n - 1) * delta;
    const int points = n >= 4 ? 20 : 100;
    for (int i = 0; i < points; ++i)
    {
      const double x = lo_x + (1.0 - lo_x) * (i + 0.5) / points;
      const an::Estimate e = an::beta_cdf(m, n, delta, x, an::BetaCdfMode::numeric, mc);
      const double slack = 3.0 * e.std_error + 1e-10;
      if (an::beta_cdf(m, n, delta, x, an::BetaCdfMode::bound_lower).value > e.value + slack ||
          e.value - slack > an::beta_cdf(m, n, delta, x, an::BetaCdfMode::bound_upper).value)
      {
        ++order_violations;
      }
    }
  }
  ok = ok && order_violations == 0;
  d << "beta ordering violations " << order_violations << "; ";

  // Gain bounds sandwich the pooled candidate gains of SUS runs at K = 500.
  {
    const int m = 4;
    const int n_rx = 2;
    const double delta = 0.2;
    const an::WishartMaxEigen law(m, n_rx);
    std::vector<std::vector<double>> gains(static_cast<std::size_t>(m + 1));
    const std::vector<int> rx(500, n_rx);
    for (std::uint64_t t = 0; t < 200; ++t)
    {
      const auto modes = collect_modes(generate_channels(m, rx, 777, t), EigenmodeScope::principal_only);
      SelectionConfig sc;
      sc.delta = DeltaSchedule::fixed(delta);
      sc.scope = EigenmodeScope::principal_only;
      sc.record_candidates = true;
      const SelectionOutcome sel = sus_select(modes, sc);
      for (std::size_t it = 1; it < sel.trace.size(); ++it)
      {
        const auto &g = sel.trace[it].gains;
        gains[it + 1].insert(gains[it + 1].end(), g.begin(), g.end());
      }
    }
    double worst_gamma = 0.0;
    for (int n = 2; n <= m; ++n)
    {
      worst_gamma = std::max(
          worst_gamma,
          oracle::band_excursion(
              gains[static_cast<std::size_t>(n)],
              [&](double x) { return an::gamma_cdf_bounds(law, n, delta, x).lower; },
              [&](double x) { return an::gamma_cdf_bounds(law, n, delta, x).upper; }));
    }
    ok = ok && worst_gamma <= 0.02;
    d << fmt("gamma band excursion %.4f", worst_gamma);
  }
  return {ok, d.str()};
}

// Structural invariants over a 1e4-trial fuzz.
Verdict invariant_fuzz()
{
  const int txs[] = {2, 3, 4};
  const int rxs[] = {1, 2, 4};
  long violations = 0;
  std::string first;
  for (std::uint64_t t = 0; t < 10000; ++t)
  {
    const int tx = txs[t % 3];
    const int rx = rxs[(t / 3) % 3];
    const int k = 4 + static_cast<int>((t * 7919) % 61);
    const std::vector<int> counts(static_cast<std::size_t>(k), rx);
    const auto ch = generate_channels(tx, counts, 31337, t);
    SelectionConfig sc;
    sc.scope = t % 2 ? EigenmodeScope::all_modes : EigenmodeScope::principal_only;
    sc.delta = (t / 2) % 3 == 0   ? DeltaSchedule::inverse_log_k()
               : (t / 2) % 3 == 1 ? DeltaSchedule::adaptive()
                                  : DeltaSchedule::fixed(0.3);
    sc.exclude_selected_user = t % 5 == 0;
    sc.record_candidates = true;
    const auto modes = collect_modes(ch, sc.scope);
    const SelectionOutcome sel = sus_select(modes, sc);
    const auto bad = invariants::check(sel, modes, sc, tx);
    violations += static_cast<long>(bad.size());
    if (!bad.empty() && first.empty())
    {
      first = bad.front();
    }
  }
  return {violations == 0,
          "10000 trials, " + std::to_string(violations) + " violations" +
              (first.empty() ? "" : " (first: " + first + ")")};
}

// Gap to M log2(1 + rho ln K) is non-increasing in K within 2 standard errors.
Verdict convergence_property()
{
  ExperimentConfig c;
  c.tx = 4;
  c.rx = 4;
  c.users = {20, 50, 100, 200, 500};
  c.snr_db = {15.0};
  c.trials = 2000;
  c.schemes = {SchemeKind::zfdpc_sus, SchemeKind::zfbf_sus};
  const SweepResult r = sweep(c);
  const double rho = std::pow(10.0, 1.5) / c.tx;
  bool ok = true;
  std::ostringstream d;
  for (SchemeKind s : c.schemes)
  {
    d << to_string(s) << " gaps:";
    double prev = 0.0;
    double prev_se = 0.0;
    for (std::size_t i = 0; i < c.users.size(); ++i)
    {
      const int k = c.users[i];
      const SweepRow &row = r.find(s, k, 15.0);
      const double gap = c.tx * std::log2(1.0 + rho * std::log(static_cast<double>(k))) - row.mean_sum_rate;
      if (i > 0 && gap > prev + 2.0 * std::hypot(row.std_err, prev_se))
      {
        ok = false;
      }
      d << fmt(" %.3f", gap);
      prev = gap;
      prev_se = row.std_err;
    }
    d << "; ";
  }
  return {ok, d.str()};
}

// Largest eigenvalue of users left in U_2 follows the unconditional law.
Verdict candidate_law()
{
  const an::WishartMaxEigen law(2, 2);
  const std::vector<int> rx(2000, 2);
  std::vector<double> lambdas;
  double single_run = 0.0;
  for (std::uint64_t t = 0; t < 20; ++t)
  {
    const auto modes = collect_modes(generate_channels(2, rx, 4242, t), EigenmodeScope::principal_only);
    SelectionConfig sc;
    sc.delta = DeltaSchedule::fixed(0.3);
    sc.scope = EigenmodeScope::principal_only;
    sc.record_candidates = true;
    const SelectionOutcome sel = sus_select(modes, sc);
    if (sel.trace.size() < 2)
    {
      continue;
    }
    std::vector<double> run;
    for (std::size_t idx : sel.trace[1].modes)
    {
      run.push_back(modes[idx].gain);
    }
    if (t == 0)
    {
      single_run = oracle::ks_distance(run, [&](double x) { return law.cdf(x); });
    }
    lambdas.insert(lambdas.end(), run.begin(), run.end());
  }
  const double ks = oracle::ks_distance(lambdas, [&](double x) { return law.cdf(x); });
  return {ks <= 0.03, fmt("KS %.4f over %.0f pooled candidates (single run %.4f)", ks,
                          static_cast<double>(lambdas.size()), single_run)};
}

// Byte-identical CSV across repeated runs and worker counts.
Verdict determinism()
{
  ExperimentConfig c;
  c.users = {10, 40};
  c.snr_db = {5.0, 15.0};
  c.trials = 300;
  c.schemes = {SchemeKind::zfdpc_sus, SchemeKind::zfbf_sus, SchemeKind::upper_bound_c,
               SchemeKind::asymptotic_approx};
  auto csv = [&](int workers) {
    std::ostringstream os;
    write_csv(sweep(c, workers), os);
    return os.str();
  };
  const std::string a = csv(1);
  const std::string b = csv(4);
  const std::string again = csv(1);
  std::ostringstream serial;
  write_csv(sweep_serial(c), serial);
  const bool ok = a == b && a == again && a == serial.str();
  return {ok, ok ? "identical bytes for 1 and 4 workers, repeat run and serial reference"
                 : "CSV bytes differ"};
}

}  // namespace

int main(int argc, char **argv)
{
  struct Criterion
  {
    const char *name;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1 asymptotic sum-rate approximation vs ZFDPC-SUS", sum_rate_approximation},
      {"AC2 greedy vs exhaustive ZFBF", exhaustive_comparison},
      {"AC3 finite-K high/low SNR gap formulas", regime_gaps_check},
      {"AC4 distribution suite", distribution_suite},
      {"AC5 selection invariant fuzz", invariant_fuzz},
      {"AC6 gap to the log K proxy shrinks with K", convergence_property},
      {"AC7 candidate eigenvalue law at K = 2000", candidate_law},
      {"AC8 deterministic CSV across worker counts", determinism},
  };
  // Arguments: criterion numbers to run (default all), and
  // `--expect-fail a,b,...` for criteria whose failure does not set the exit code.
  std::vector<bool> wanted(criteria.size(), true);
  std::vector<bool> expected(criteria.size(), false);
  bool filtered = false;
  for (int i = 1; i < argc; ++i)
  {
    const std::string arg = argv[i];
    if (arg == "--expect-fail" && i + 1 < argc)
    {
      std::stringstream list(argv[++i]);
      for (std::string item; std::getline(list, item, ',');)
      {
        const int id = std::atoi(item.c_str());
        if (id >= 1 && id <= static_cast<int>(criteria.size()))
        {
          expected[static_cast<std::size_t>(id - 1)] = true;
        }
      }
      continue;
    }
    const int id = std::atoi(arg.c_str());
    if (id >= 1 && id <= static_cast<int>(criteria.size()))
    {
      if (!filtered)
      {
        std::fill(wanted.begin(), wanted.end(), false);
        filtered = true;
      }
      wanted[static_cast<std::size_t>(id - 1)] = true;
    }
  }
  int failures = 0;
  int unexpected = 0;
  int ran = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i)
  {
    if (!wanted[i])
    {
      continue;
    }
    const auto &c = criteria[i];
    ++ran;
    Verdict v;
    try
    {
      v = c.run();
    }
    catch (const std::exception &e)
    {
      v = {false, std::string("exception: ") + e.what()};
    }
    failures += v.pass ? 0 : 1;
    unexpected += v.pass || expected[i] ? 0 : 1;
    std::printf("[%s] %s: %s\n", v.pass ? "PASS" : "FAIL", c.name, v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed, %d unexpected failures\n", ran - failures, ran,
              unexpected);
  return unexpected == 0 ? 0 : 1;
}
