// Copyright 2026 The mimo-bc-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MIMOBC_SELECTION_HPP
#define MIMOBC_SELECTION_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mimobc/channel.hpp"

namespace mimobc
{

enum class DeltaMode
{
  fixed,
  inverse_log_k,
  adaptive_inverse_log_candidates
};

/// Semi-orthogonality threshold schedule. `value` is only read in fixed mode.
struct DeltaSchedule
{
  DeltaMode mode = DeltaMode::inverse_log_k;
  double value = 0.3;

  static DeltaSchedule fixed(double delta) { return {DeltaMode::fixed, delta}; }
  static DeltaSchedule inverse_log_k() { return {DeltaMode::inverse_log_k, 0.0}; }
  static DeltaSchedule adaptive() { return {DeltaMode::adaptive_inverse_log_candidates, 0.0}; }

  // "inv-log-k", "adaptive" or the fixed value printed with round-trip precision.
  std::string label() const;
  static DeltaSchedule parse(const std::string &text);
};

/// Threshold in force when the candidate set has `candidates` members.
///   fixed          -> value
///   inverse_log_k  -> 1/ln K
///   adaptive       -> max(1/ln candidates, 1/ln K), capped at 1
/// Logarithmic modes require K >= 3.
double delta_value(const DeltaSchedule &schedule, std::size_t users, std::size_t candidates);

enum class EigenmodeScope
{
  all_modes,
  principal_only
};

struct SelectionConfig
{
  DeltaSchedule delta;
  EigenmodeScope scope = EigenmodeScope::all_modes;
  int max_streams = 0;               // L <= M; 0 means M
  bool exclude_selected_user = false;  // drop every mode of a user once it is served
  bool record_candidates = false;      // fill SelectionOutcome::trace
};

/// Candidate set U_n as seen at iteration n, with gamma_{k,j}(n) for each member.
struct CandidateSnapshot
{
  std::vector<std::size_t> modes;  // indices into the input mode list
  std::vector<double> gains;
};

struct SelectionOutcome
{
  std::vector<std::size_t> selected;  // indices into the input mode list, in order pi(1..L')
  std::vector<std::size_t> users;
  std::vector<int> orders;
  std::vector<double> lambdas;
  Eigen::MatrixXcd directions;  // L' x M, row i = v_{pi(i)}^H
  Eigen::MatrixXcd basis;       // L' x M, orthonormal rows q_i
  Eigen::MatrixXcd lower;       // L' x L', l_{i,j} = v_{pi(i)}^H q_j^H
  std::vector<double> gains;    // gamma = lambda * beta
  std::vector<double> betas;    // beta_n = |l_{n,n}|^2
  std::vector<std::size_t> candidate_history;  // |U_n| for every computed iteration
  std::vector<double> deltas;                  // delta in force at iteration n
  std::vector<CandidateSnapshot> trace;

  std::size_t streams() const { return selected.size(); }
};

/// All eigenmodes of every user, user-major.
std::vector<EigenMode> collect_modes(const ChannelRealization &channel, EigenmodeScope scope);

struct Residual
{
  Eigen::RowVectorXcd vector;    // v^H - sum xi_i q_i
  Eigen::VectorXcd projections;  // xi_i = v^H q_i^H
  double norm_sq = 0.0;
};

/// Projects v^H off the span of the orthonormal rows of `basis` (modified
/// Gram-Schmidt). Throws ContractViolation if the rows are not orthonormal.
Residual residual(const CVector &v, const Eigen::MatrixXcd &basis);

/// Greedy semi-orthogonal user and eigenmode selection.
SelectionOutcome sus_select(std::span<const EigenMode> modes, const SelectionConfig &config);

/// QR structures for a fixed ordered subset of modes (no pruning).
SelectionOutcome ordered_outcome(std::span<const EigenMode> modes,
                                 std::span<const std::size_t> order);

using SubsetMetric = std::function<double(const SelectionOutcome &)>;

struct ExhaustiveResult
{
  SelectionOutcome best;
  double metric = 0.0;
  std::size_t evaluated = 0;
};

inline constexpr std::size_t kExhaustiveMaxModes = 16;
inline constexpr int kExhaustiveMaxStreams = 4;

/// Evaluates `metric` on every subset of 1..max_streams modes, in every order when
/// `ordered` is set and in increasing index order otherwise (for order-invariant
/// metrics such as the ZFBF rate). Dependent subsets are skipped.
ExhaustiveResult exhaustive_select(std::span<const EigenMode> modes, int max_streams,
                                   const SubsetMetric &metric, bool ordered = true);

}  // namespace mimobc

#endif  // MIMOBC_SELECTION_HPP
