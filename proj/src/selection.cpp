// Copyright 2026 The mimo-bc-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "mimobc/selection.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "mimobc/csv.hpp"
#include "mimobc/errors.hpp"

namespace mimobc
{

namespace
{

constexpr double kOrthonormalTol = 1e-8;
constexpr double kDependentTol = 1e-12;

std::size_t count_users(std::span<const EigenMode> modes)
{
  std::set<std::size_t> users;
  for (const auto &m : modes)
  {
    users.insert(m.user);
  }
  return users.size();
}

// (user, order) ordering used to break argmax ties.
bool precedes(const EigenMode &a, const EigenMode &b)
{
  return a.user != b.user ? a.user < b.user : a.order < b.order;
}

Eigen::Index dimension_of(std::span<const EigenMode> modes)
{
  const Eigen::Index m = modes.front().right.size();
  for (const auto &mode : modes)
  {
    if (mode.right.size() != m)
    {
      throw DimensionError("eigenmodes have inconsistent transmit dimension");
    }
  }
  return m;
}

}  // namespace

std::string DeltaSchedule::label() const
{
  switch (mode)
  {
    case DeltaMode::fixed:
      return csv::format_double(value);
    case DeltaMode::inverse_log_k:
      return "inv-log-k";
    case DeltaMode::adaptive_inverse_log_candidates:
      return "adaptive";
  }
  return {};
}

DeltaSchedule DeltaSchedule::parse(const std::string &text)
{
  if (text == "inv-log-k")
  {
    return inverse_log_k();
  }
  if (text == "adaptive")
  {
    return adaptive();
  }
  double v = 0.0;
  try
  {
    v = csv::parse_double(text);
  }
  catch (const IoError &)
  {
    throw UsageError("delta must be 'inv-log-k', 'adaptive' or a number in (0,1), got '" + text + "'");
  }
  if (!(v > 0.0 && v < 1.0))
  {
    throw UsageError("fixed delta must lie in (0,1)");
  }
  return fixed(v);
}

double delta_value(const DeltaSchedule &schedule, std::size_t users, std::size_t candidates)
{
  if (schedule.mode == DeltaMode::fixed)
  {
    if (!(schedule.value > 0.0))
    {
      throw DomainError("fixed delta must be positive");
    }
    return schedule.value;
  }
  if (users < 3)
  {
    throw DomainError("logarithmic delta schedules need K >= 3");
  }
  const double floor = 1.0 / std::log(static_cast<double>(users));
  if (schedule.mode == DeltaMode::inverse_log_k)
  {
    return floor;
  }
  if (candidates < 2)
  {
    return 1.0;
  }
  return std::min(1.0, std::max(1.0 / std::log(static_cast<double>(candidates)), floor));
}

std::vector<EigenMode> collect_modes(const ChannelRealization &channel, EigenmodeScope scope)
{
  std::vector<EigenMode> all;
  for (std::size_t k = 0; k < channel.users(); ++k)
  {
    auto modes = eigenmodes(channel, k);
    if (scope == EigenmodeScope::principal_only)
    {
      modes.resize(1);
    }
    for (auto &m : modes)
    {
      all.push_back(std::move(m));
    }
  }
  return all;
}

Residual residual(const CVector &v, const Eigen::MatrixXcd &basis)
{
  if (basis.rows() > 0 && basis.cols() != v.size())
  {
    throw DimensionError("basis and vector dimensions differ");
  }
  if (basis.rows() > 0)
  {
    const Eigen::MatrixXcd gram = basis * basis.adjoint();
    const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(basis.rows(), basis.rows());
    if ((gram - eye).cwiseAbs().maxCoeff() > kOrthonormalTol)
    {
      throw ContractViolation("residual: basis rows are not orthonormal");
    }
  }
  Residual out;
  out.vector = v.adjoint();
  out.projections.resize(basis.rows());
  for (Eigen::Index i = 0; i < basis.rows(); ++i)
  {
    const std::complex<double> xi = basis.row(i).dot(out.vector);  // r q_i^H
    out.projections(i) = xi;
    out.vector -= xi * basis.row(i);
  }
  out.norm_sq = out.vector.squaredNorm();
  return out;
}

namespace
{

// Running Gram-Schmidt state of one candidate.
struct Candidate
{
  std::size_t mode = 0;
  Eigen::RowVectorXcd residual;  // v^H minus projections onto q_1..q_{n-1}
  Eigen::VectorXcd coeffs;       // l_{.,j} = v^H q_j^H accumulated so far
};

void append_selection(SelectionOutcome &out, std::span<const EigenMode> modes,
                      const Candidate &chosen, Eigen::Index n, Eigen::Index dim)
{
  const EigenMode &mode = modes[chosen.mode];
  const double norm = chosen.residual.norm();
  out.selected.push_back(chosen.mode);
  out.users.push_back(mode.user);
  out.orders.push_back(mode.order);
  out.lambdas.push_back(mode.gain);

  out.directions.conservativeResize(n + 1, dim);
  out.directions.row(n) = mode.right.adjoint();
  out.basis.conservativeResize(n + 1, dim);
  out.basis.row(n) = chosen.residual / norm;

  out.lower.conservativeResize(n + 1, n + 1);
  out.lower.row(n).setZero();
  out.lower.col(n).setZero();
  for (Eigen::Index j = 0; j < n; ++j)
  {
    out.lower(n, j) = chosen.coeffs(j);
  }
  out.lower(n, n) = norm;
  const double beta = norm * norm;
  out.betas.push_back(beta);
  out.gains.push_back(mode.gain * beta);
}

}  // namespace

SelectionOutcome sus_select(std::span<const EigenMode> modes, const SelectionConfig &config)
{
  if (modes.empty())
  {
    throw DimensionError("sus_select needs at least one eigenmode");
  }
  const Eigen::Index dim = dimension_of(modes);
  const int max_streams = config.max_streams == 0 ? static_cast<int>(dim) : config.max_streams;
  if (max_streams < 1 || max_streams > dim)
  {
    throw DimensionError("max_streams must lie in 1..M");
  }
  const std::size_t users = count_users(modes);

  std::vector<Candidate> pool;
  for (std::size_t i = 0; i < modes.size(); ++i)
  {
    if (config.scope == EigenmodeScope::principal_only && modes[i].order != 0)
    {
      continue;
    }
    pool.push_back({i, modes[i].right.adjoint(), Eigen::VectorXcd(0)});
  }
  std::stable_sort(pool.begin(), pool.end(), [&](const Candidate &a, const Candidate &b) {
    return precedes(modes[a.mode], modes[b.mode]);
  });

  SelectionOutcome out;
  out.directions.resize(0, dim);
  out.basis.resize(0, dim);
  out.lower.resize(0, 0);

  std::vector<double> gamma;
  for (Eigen::Index n = 0; n < max_streams; ++n)
  {
    if (n > 0)
    {
      // Prune against the newest basis vector with the threshold of the iteration
      // that created it, then project it out of the survivors.
      const std::size_t last = out.selected.back();
      const double delta = out.deltas.back();
      const auto q = out.basis.row(n - 1);
      std::vector<Candidate> next;
      next.reserve(pool.size());
      for (auto &c : pool)
      {
        if (c.mode == last)
        {
          continue;
        }
        if (config.exclude_selected_user && modes[c.mode].user == modes[last].user)
        {
          continue;
        }
        const std::complex<double> xi = q.dot(c.residual);  // r q^H
        if (std::norm(xi) < delta)
        {
          c.residual -= xi * q;
          c.coeffs.conservativeResize(n);
          c.coeffs(n - 1) = xi;
          next.push_back(std::move(c));
        }
      }
      pool = std::move(next);
    }

    out.candidate_history.push_back(pool.size());
    if (pool.empty())
    {
      break;
    }
    out.deltas.push_back(delta_value(config.delta, users, pool.size()));

    gamma.resize(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i)
    {
      const double lambda = modes[pool[i].mode].gain;
      gamma[i] = n == 0 ? lambda : lambda * pool[i].residual.squaredNorm();
    }
    // Strict comparison keeps the first maximizer in (user, order) order.
    std::size_t best = 0;
    for (std::size_t i = 1; i < pool.size(); ++i)
    {
      if (gamma[i] > gamma[best])
      {
        best = i;
      }
    }
    if (config.record_candidates)
    {
      CandidateSnapshot snap;
      snap.gains = gamma;
      for (const auto &c : pool)
      {
        snap.modes.push_back(c.mode);
      }
      out.trace.push_back(std::move(snap));
    }
    if (pool[best].residual.squaredNorm() < kDependentTol)
    {
      break;
    }
    append_selection(out, modes, pool[best], n, dim);
  }
  return out;
}

SelectionOutcome ordered_outcome(std::span<const EigenMode> modes,
                                 std::span<const std::size_t> order)
{
  if (order.empty())
  {
    throw DimensionError("ordered_outcome needs at least one mode");
  }
  const Eigen::Index dim = dimension_of(modes);
  if (static_cast<Eigen::Index>(order.size()) > dim)
  {
    throw RankDeficientError("more streams than transmit antennas");
  }
  SelectionOutcome out;
  out.directions.resize(0, dim);
  out.basis.resize(0, dim);
  out.lower.resize(0, 0);
  for (std::size_t idx : order)
  {
    if (idx >= modes.size())
    {
      throw DimensionError("ordered_outcome: mode index out of range");
    }
  }
  for (std::size_t i = 0; i < order.size(); ++i)
  {
    const auto n = static_cast<Eigen::Index>(i);
    Candidate c{order[i], modes[order[i]].right.adjoint(), Eigen::VectorXcd(n)};
    for (Eigen::Index j = 0; j < n; ++j)
    {
      const std::complex<double> xi = out.basis.row(j).dot(c.residual);
      c.coeffs(j) = xi;
      c.residual -= xi * out.basis.row(j);
    }
    if (c.residual.squaredNorm() < kDependentTol)
    {
      throw RankDeficientError("selected directions are linearly dependent");
    }
    append_selection(out, modes, c, n, dim);
  }
  return out;
}

ExhaustiveResult exhaustive_select(std::span<const EigenMode> modes, int max_streams,
                                   const SubsetMetric &metric, bool ordered)
{
  if (modes.empty())
  {
    throw DimensionError("exhaustive_select needs at least one eigenmode");
  }
  if (modes.size() > kExhaustiveMaxModes || max_streams > kExhaustiveMaxStreams)
  {
    throw SizeGuardError("exhaustive search limited to 16 modes and 4 streams");
  }
  const Eigen::Index dim = dimension_of(modes);
  if (max_streams < 1 || max_streams > dim)
  {
    throw DimensionError("max_streams must lie in 1..M");
  }

  ExhaustiveResult result;
  bool found = false;
  std::vector<std::size_t> order;
  std::vector<bool> used(modes.size(), false);

  auto visit = [&](auto &&self) -> void {
    if (!order.empty())
    {
      try
      {
        SelectionOutcome candidate = ordered_outcome(modes, order);
        const double value = metric(candidate);
        ++result.evaluated;
        if (!found || value > result.metric)
        {
          found = true;
          result.metric = value;
          result.best = std::move(candidate);
        }
      }
      catch (const RankDeficientError &)
      {
        // dependent subset, no finite zero-forcing solution
      }
    }
    if (static_cast<int>(order.size()) == max_streams)
    {
      return;
    }
    const std::size_t first = ordered || order.empty() ? 0 : order.back() + 1;
    for (std::size_t i = first; i < modes.size(); ++i)
    {
      if (used[i])
      {
        continue;
      }
      used[i] = true;
      order.push_back(i);
      self(self);
      order.pop_back();
      used[i] = false;
    }
  };
  visit(visit);

  if (!found)
  {
    throw NumericalError("exhaustive search found no feasible subset");
  }
  return result;
}

}  // namespace mimobc
