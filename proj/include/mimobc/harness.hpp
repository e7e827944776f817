// Copyright 2026 The mimo-bc-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MIMOBC_HARNESS_HPP
#define MIMOBC_HARNESS_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mimobc/selection.hpp"
#include "mimobc/transceiver.hpp"

namespace mimobc
{

enum class SchemeKind
{
  zfdpc_sus,
  zfbf_sus,
  zfbf_exhaustive,
  upper_bound_c,
  asymptotic_approx,
  gap_zfdpc,        // measured C - R_ZFDPC
  gap_zfbf,         // measured C - R_ZFBF
  gap_zfdpc_high,   // high-SNR leading term predictions
  gap_zfbf_high,
  gap_zfdpc_low,    // low-SNR leading term predictions
  gap_zfbf_low
};

std::string to_string(SchemeKind scheme);
SchemeKind parse_scheme(std::string_view text);
std::vector<SchemeKind> parse_schemes(std::string_view comma_list);

/// One experiment: a grid over user counts and SNR points. SNR is total transmit
/// power P in dB with unit noise variance; streams share P.
struct ExperimentConfig
{
  int tx = 4;
  int rx = 4;
  std::vector<int> users{50};
  std::vector<double> snr_db{15.0};
  std::size_t trials = 2000;
  DeltaSchedule delta = DeltaSchedule::inverse_log_k();
  PowerVariant power = PowerVariant::waterfilling;
  std::vector<SchemeKind> schemes{SchemeKind::zfdpc_sus, SchemeKind::zfbf_sus,
                                  SchemeKind::upper_bound_c};
  std::uint64_t master_seed = 42;
  EigenmodeScope scope = EigenmodeScope::all_modes;
  bool exclude_selected_user = false;

  /// Throws UsageError on an inconsistent configuration.
  void validate() const;
  std::size_t grid_points() const { return users.size() * snr_db.size(); }
};

/// Values of one trial, laid out as [grid point][scheme]; grid points enumerate
/// snr_db (outer) and users (inner). Analytic schemes are left at zero.
struct TrialResult
{
  std::size_t trial_index = 0;
  std::vector<double> values;
  std::vector<std::size_t> streams;  // realized L' per grid point (ZFDPC/ZFBF selection)

  double value(const ExperimentConfig &config, std::size_t point, std::size_t scheme) const
  {
    return values[point * config.schemes.size() + scheme];
  }
};

/// One channel draw (keyed by master_seed and trial_index), one SUS selection per
/// user count, every scheme evaluated on that same selection.
TrialResult run_trial(const ExperimentConfig &config, std::size_t trial_index);

struct SweepRow
{
  SchemeKind scheme = SchemeKind::zfdpc_sus;
  int tx = 0;
  int rx = 0;
  int users = 0;
  double snr_db = 0.0;
  std::string delta_mode;
  std::string power;
  std::size_t trials = 0;
  double mean_sum_rate = 0.0;
  double std_err = 0.0;

  bool operator==(const SweepRow &) const = default;
};

struct SweepResult
{
  std::vector<SweepRow> rows;

  const SweepRow &find(SchemeKind scheme, int users, double snr_db) const;
};

/// Folds per-trial results in trial order: sample mean and std / sqrt(trials).
SweepResult aggregate(const ExperimentConfig &config, const std::vector<TrialResult> &trials);

/// Reference implementation: trials run one after another.
SweepResult sweep_serial(const ExperimentConfig &config);

/// Trials distributed over OpenMP threads; `workers` <= 0 keeps the runtime default.
/// Output is identical to sweep_serial for any worker count.
SweepResult sweep(const ExperimentConfig &config, int workers = 0);

inline constexpr const char *kSweepCsvHeader =
    "scheme,M,N,K,snr_db,delta_mode,power,trials,mean_sum_rate,std_err";

void write_csv(const SweepResult &result, std::ostream &out);
SweepResult read_csv(std::istream &in);
void emit_csv(const SweepResult &result, const std::filesystem::path &path);
SweepResult load_csv(const std::filesystem::path &path);

/// Configurations of the published figures: fig1_gaps, fig2_sumrates and
/// fig3_rx_antennas (one config per receive-antenna count).
std::vector<ExperimentConfig> figure_recipes(std::string_view name);

}  // namespace mimobc

#endif  // MIMOBC_HARNESS_HPP
