// Copyright 2026 The mimo-bc-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "mimobc/harness.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <exception>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <omp.h>

#include "mimobc/analytic/scaling.hpp"
#include "mimobc/csv.hpp"
#include "mimobc/errors.hpp"

namespace mimobc
{

namespace
{

struct SchemeName
{
  SchemeKind kind;
  const char *name;
};

constexpr SchemeName kSchemeNames[] = {
    {SchemeKind::zfdpc_sus, "zfdpc-sus"},
    {SchemeKind::zfbf_sus, "zfbf-sus"},
    {SchemeKind::zfbf_exhaustive, "zfbf-exhaustive"},
    {SchemeKind::upper_bound_c, "upper-bound"},
    {SchemeKind::asymptotic_approx, "asymptotic"},
    {SchemeKind::gap_zfdpc, "gap-zfdpc"},
    {SchemeKind::gap_zfbf, "gap-zfbf"},
    {SchemeKind::gap_zfdpc_high, "gap-zfdpc-high"},
    {SchemeKind::gap_zfbf_high, "gap-zfbf-high"},
    {SchemeKind::gap_zfdpc_low, "gap-zfdpc-low"},
    {SchemeKind::gap_zfbf_low, "gap-zfbf-low"},
};

double linear_power(double snr_db) { return std::pow(10.0, snr_db / 10.0); }

std::size_t modes_per_user(const ExperimentConfig &config)
{
  return config.scope == EigenmodeScope::principal_only
             ? 1u
             : static_cast<std::size_t>(std::min(config.tx, config.rx));
}

bool needs_selection(SchemeKind kind)
{
  return kind != SchemeKind::zfbf_exhaustive && kind != SchemeKind::asymptotic_approx;
}

struct Stats
{
  double mean = 0.0;
  double std_err = 0.0;
};

Stats summarize(const std::vector<double> &samples)
{
  Stats out;
  if (samples.empty())
  {
    return out;
  }
  const double n = static_cast<double>(samples.size());
  for (double v : samples)
  {
    out.mean += v;
  }
  out.mean /= n;
  if (samples.size() > 1)
  {
    double ss = 0.0;
    for (double v : samples)
    {
      ss += (v - out.mean) * (v - out.mean);
    }
    out.std_err = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
  }
  return out;
}

}  // namespace

std::string to_string(SchemeKind scheme)
{
  for (const auto &entry : kSchemeNames)
  {
    if (entry.kind == scheme)
    {
      return entry.name;
    }
  }
  return "unknown";
}

SchemeKind parse_scheme(std::string_view text)
{
  std::string key(text);
  std::replace(key.begin(), key.end(), '_', '-');
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (key == "upper-bound-c")
  {
    key = "upper-bound";
  }
  if (key == "asymptotic-approx")
  {
    key = "asymptotic";
  }
  for (const auto &entry : kSchemeNames)
  {
    if (key == entry.name)
    {
      return entry.kind;
    }
  }
  throw UsageError("unknown scheme '" + std::string(text) + "'");
}

std::vector<SchemeKind> parse_schemes(std::string_view comma_list)
{
  std::vector<SchemeKind> out;
  for (std::string_view field : csv::split(comma_list))
  {
    if (!field.empty())
    {
      out.push_back(parse_scheme(field));
    }
  }
  if (out.empty())
  {
    throw UsageError("no scheme given");
  }
  return out;
}

void ExperimentConfig::validate() const
{
  if (tx < 1 || rx < 1)
  {
    throw UsageError("antenna counts must be positive");
  }
  if (users.empty() || snr_db.empty() || schemes.empty())
  {
    throw UsageError("user, SNR and scheme lists must be non-empty");
  }
  if (trials < 1)
  {
    throw UsageError("trials must be >= 1");
  }
  for (double snr : snr_db)
  {
    if (!std::isfinite(snr))
    {
      throw UsageError("SNR values must be finite");
    }
  }
  if (delta.mode == DeltaMode::fixed && !(delta.value > 0.0 && delta.value < 1.0))
  {
    throw UsageError("fixed delta must lie in (0, 1)");
  }
  const bool logarithmic = delta.mode != DeltaMode::fixed;
  const bool asymptotic = std::find(schemes.begin(), schemes.end(), SchemeKind::asymptotic_approx) !=
                          schemes.end();
  const bool exhaustive = std::find(schemes.begin(), schemes.end(), SchemeKind::zfbf_exhaustive) !=
                          schemes.end();
  for (int k : users)
  {
    if (k < 1)
    {
      throw UsageError("user counts must be positive");
    }
    if ((logarithmic || asymptotic) && k < 3)
    {
      throw UsageError("logarithmic delta schedules and the asymptotic curve need K >= 3");
    }
    if (exhaustive && static_cast<std::size_t>(k) * modes_per_user(*this) > kExhaustiveMaxModes)
    {
      throw UsageError("exhaustive search needs K * min(N, M) <= 16");
    }
  }
  if (exhaustive && tx > kExhaustiveMaxStreams)
  {
    throw UsageError("exhaustive search supports at most 4 transmit antennas");
  }
}

TrialResult run_trial(const ExperimentConfig &config, std::size_t trial_index)
{
  const int max_users = *std::max_element(config.users.begin(), config.users.end());
  const std::vector<int> rx_counts(static_cast<std::size_t>(max_users), config.rx);
  const ChannelRealization channel =
      generate_channels(config.tx, rx_counts, config.master_seed, trial_index);
  const std::vector<EigenMode> modes = collect_modes(channel, config.scope);

  const bool any_selection =
      std::any_of(config.schemes.begin(), config.schemes.end(), needs_selection);

  const std::size_t width = config.schemes.size();
  TrialResult out;
  out.trial_index = trial_index;
  out.values.assign(config.grid_points() * width, 0.0);
  out.streams.assign(config.grid_points(), 0);

  // Selection does not depend on power, so it is shared across SNR points.
  std::vector<SelectionOutcome> selections(config.users.size());
  std::vector<std::size_t> mode_counts(config.users.size());
  for (std::size_t u = 0; u < config.users.size(); ++u)
  {
    const auto k = static_cast<std::size_t>(config.users[u]);
    mode_counts[u] = static_cast<std::size_t>(
        std::count_if(modes.begin(), modes.end(), [k](const EigenMode &m) { return m.user < k; }));
    if (any_selection)
    {
      SelectionConfig sc;
      sc.delta = config.delta;
      sc.scope = config.scope;
      sc.exclude_selected_user = config.exclude_selected_user;
      selections[u] = sus_select(std::span(modes.data(), mode_counts[u]), sc);
    }
  }

  for (std::size_t s = 0; s < config.snr_db.size(); ++s)
  {
    const double power = linear_power(config.snr_db[s]);
    const PowerPolicy policy{config.power, power};
    for (std::size_t u = 0; u < config.users.size(); ++u)
    {
      const std::size_t point = s * config.users.size() + u;
      const SelectionOutcome &sel = selections[u];
      double *row = out.values.data() + point * width;
      out.streams[point] = sel.streams();

      double r_dpc = 0.0;
      double r_bf = 0.0;
      double cap = 0.0;
      RegimeGaps gaps;
      if (any_selection)
      {
        r_dpc = transmit(sel, Scheme::zfdpc, policy).sum_rate;
        r_bf = transmit(sel, Scheme::zfbf, policy).sum_rate;
        const double rho = stream_power(sel, power);
        cap = upper_bound_c(sel, rho);
        gaps = regime_gaps(sel, rho);
      }

      for (std::size_t j = 0; j < width; ++j)
      {
        switch (config.schemes[j])
        {
        case SchemeKind::zfdpc_sus:
          row[j] = r_dpc;
          break;
        case SchemeKind::zfbf_sus:
          row[j] = r_bf;
          break;
        case SchemeKind::upper_bound_c:
          row[j] = cap;
          break;
        case SchemeKind::gap_zfdpc:
          row[j] = cap - r_dpc;
          break;
        case SchemeKind::gap_zfbf:
          row[j] = cap - r_bf;
          break;
        case SchemeKind::gap_zfdpc_high:
          row[j] = gaps.high_snr_zfdpc;
          break;
        case SchemeKind::gap_zfbf_high:
          row[j] = gaps.high_snr_zfbf;
          break;
        case SchemeKind::gap_zfdpc_low:
          row[j] = gaps.low_snr_zfdpc;
          break;
        case SchemeKind::gap_zfbf_low:
          row[j] = gaps.low_snr_zfbf;
          break;
        case SchemeKind::zfbf_exhaustive:
        {
          const SubsetMetric metric = [&policy](const SelectionOutcome &candidate) {
            return transmit(candidate, Scheme::zfbf, policy).sum_rate;
          };
          row[j] = exhaustive_select(std::span(modes.data(), mode_counts[u]),
                                     std::min(config.tx, kExhaustiveMaxStreams), metric, false)
                       .metric;
          break;
        }
        case SchemeKind::asymptotic_approx:
          break;
        }
      }
    }
  }
  return out;
}

const SweepRow &SweepResult::find(SchemeKind scheme, int users, double snr_db) const
{
  for (const SweepRow &row : rows)
  {
    if (row.scheme == scheme && row.users == users && row.snr_db == snr_db)
    {
      return row;
    }
  }
  throw UsageError("no row for scheme " + to_string(scheme) + " at K = " + std::to_string(users));
}

SweepResult aggregate(const ExperimentConfig &config, const std::vector<TrialResult> &trials)
{
  SweepResult out;
  std::vector<double> samples;
  samples.reserve(trials.size());
  for (std::size_t j = 0; j < config.schemes.size(); ++j)
  {
    const SchemeKind scheme = config.schemes[j];
    for (std::size_t s = 0; s < config.snr_db.size(); ++s)
    {
      for (std::size_t u = 0; u < config.users.size(); ++u)
      {
        SweepRow row;
        row.scheme = scheme;
        row.tx = config.tx;
        row.rx = config.rx;
        row.users = config.users[u];
        row.snr_db = config.snr_db[s];
        row.delta_mode = config.delta.label();
        row.power = to_string(config.power);
        if (scheme == SchemeKind::asymptotic_approx)
        {
          const double rho = linear_power(row.snr_db) / config.tx;
          row.mean_sum_rate = analytic::asymptotic_sum_rate(config.tx, config.rx, row.users, rho);
        }
        else
        {
          const std::size_t point = s * config.users.size() + u;
          samples.clear();
          for (const TrialResult &trial : trials)
          {
            samples.push_back(trial.value(config, point, j));
          }
          const Stats stats = summarize(samples);
          row.trials = trials.size();
          row.mean_sum_rate = stats.mean;
          row.std_err = stats.std_err;
        }
        out.rows.push_back(row);
      }
    }
  }
  return out;
}

SweepResult sweep_serial(const ExperimentConfig &config)
{
  config.validate();
  std::vector<TrialResult> results;
  results.reserve(config.trials);
  for (std::size_t t = 0; t < config.trials; ++t)
  {
    results.push_back(run_trial(config, t));
  }
  return aggregate(config, results);
}

SweepResult sweep(const ExperimentConfig &config, int workers)
{
  config.validate();
  std::vector<TrialResult> results(config.trials);
  const int threads = workers > 0 ? workers : omp_get_max_threads();
  std::exception_ptr failure;
  const auto count = static_cast<long long>(config.trials);

#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long long t = 0; t < count; ++t)
  {
    try
    {
      results[static_cast<std::size_t>(t)] = run_trial(config, static_cast<std::size_t>(t));
    }
    catch (...)
    {
#pragma omp critical(mimobc_sweep_failure)
      if (!failure)
      {
        failure = std::current_exception();
      }
    }
  }
  if (failure)
  {
    std::rethrow_exception(failure);
  }
  return aggregate(config, results);
}

void write_csv(const SweepResult &result, std::ostream &out)
{
  out << kSweepCsvHeader << '\n';
  for (const SweepRow &row : result.rows)
  {
    out << to_string(row.scheme) << ',' << row.tx << ',' << row.rx << ',' << row.users << ','
        << csv::format_double(row.snr_db) << ',' << row.delta_mode << ',' << row.power << ','
        << row.trials << ',' << csv::format_double(row.mean_sum_rate) << ','
        << csv::format_double(row.std_err) << '\n';
  }
}

SweepResult read_csv(std::istream &in)
{
  std::string line;
  if (!std::getline(in, line) || line != kSweepCsvHeader)
  {
    throw IoError("missing or unexpected CSV header");
  }
  SweepResult out;
  std::size_t line_no = 1;
  while (std::getline(in, line))
  {
    ++line_no;
    if (line.empty())
    {
      continue;
    }
    const auto fields = csv::split(line);
    if (fields.size() != 10)
    {
      throw IoError("line " + std::to_string(line_no) + ": expected 10 fields");
    }
    SweepRow row;
    try
    {
      row.scheme = parse_scheme(fields[0]);
    }
    catch (const UsageError &e)
    {
      throw IoError("line " + std::to_string(line_no) + ": " + e.what());
    }
    row.tx = static_cast<int>(csv::parse_int(fields[1]));
    row.rx = static_cast<int>(csv::parse_int(fields[2]));
    row.users = static_cast<int>(csv::parse_int(fields[3]));
    row.snr_db = csv::parse_double(fields[4]);
    row.delta_mode = std::string(fields[5]);
    row.power = std::string(fields[6]);
    row.trials = static_cast<std::size_t>(csv::parse_int(fields[7]));
    row.mean_sum_rate = csv::parse_double(fields[8]);
    row.std_err = csv::parse_double(fields[9]);
    out.rows.push_back(row);
  }
  return out;
}

void emit_csv(const SweepResult &result, const std::filesystem::path &path)
{
  std::ofstream file(path, std::ios::binary);
  if (!file)
  {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  write_csv(result, file);
  file.flush();
  if (!file)
  {
    throw IoError("write to '" + path.string() + "' failed");
  }
}

SweepResult load_csv(const std::filesystem::path &path)
{
  std::ifstream file(path, std::ios::binary);
  if (!file)
  {
    throw IoError("cannot open '" + path.string() + "' for reading");
  }
  try
  {
    return read_csv(file);
  }
  catch (const IoError &e)
  {
    throw IoError(path.string() + ": " + e.what());
  }
}

std::vector<ExperimentConfig> figure_recipes(std::string_view name)
{
  std::vector<int> k_grid;
  for (int k = 10; k <= 100; k += 10)
  {
    k_grid.push_back(k);
  }

  if (name == "fig1_gaps")
  {
    ExperimentConfig c;
    c.tx = 4;
    c.rx = 4;
    c.users = {50};
    c.snr_db.clear();
    for (int snr = -20; snr <= 40; snr += 5)
    {
      c.snr_db.push_back(snr);
    }
    c.delta = DeltaSchedule::inverse_log_k();
    c.power = PowerVariant::equal;
    c.scope = EigenmodeScope::principal_only;
    c.schemes = {SchemeKind::zfdpc_sus,      SchemeKind::zfbf_sus,      SchemeKind::upper_bound_c,
                 SchemeKind::gap_zfdpc,      SchemeKind::gap_zfbf,      SchemeKind::gap_zfdpc_high,
                 SchemeKind::gap_zfbf_high,  SchemeKind::gap_zfdpc_low, SchemeKind::gap_zfbf_low};
    return {c};
  }
  if (name == "fig2_sumrates")
  {
    ExperimentConfig c;
    c.tx = 4;
    c.rx = 4;
    c.users = k_grid;
    c.snr_db = {15.0};
    c.delta = DeltaSchedule::inverse_log_k();
    c.power = PowerVariant::waterfilling;
    c.scope = EigenmodeScope::all_modes;
    c.schemes = {SchemeKind::zfdpc_sus, SchemeKind::zfbf_sus, SchemeKind::upper_bound_c,
                 SchemeKind::asymptotic_approx};
    return {c};
  }
  if (name == "fig3_rx_antennas")
  {
    std::vector<ExperimentConfig> out;
    for (int rx : {1, 2, 4})
    {
      ExperimentConfig c;
      c.tx = 4;
      c.rx = rx;
      c.users = k_grid;
      c.snr_db = {15.0};
      c.delta = DeltaSchedule::inverse_log_k();
      c.power = PowerVariant::waterfilling;
      c.scope = EigenmodeScope::all_modes;
      c.schemes = {SchemeKind::zfdpc_sus, SchemeKind::zfbf_sus, SchemeKind::asymptotic_approx};
      out.push_back(c);
    }
    return out;
  }
  throw UsageError("unknown figure '" + std::string(name) +
                   "' (expected fig1_gaps, fig2_sumrates or fig3_rx_antennas)");
}

}  // namespace mimobc
