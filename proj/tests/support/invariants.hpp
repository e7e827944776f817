// Copyright 2026 The mimo-bc-sim Authors
// SPDX-License-Identifier: Apache-2.0

// Structural checks on a selection outcome, shared by unit and acceptance tests.

#ifndef MIMOBC_TESTS_INVARIANTS_HPP
#define MIMOBC_TESTS_INVARIANTS_HPP

#include <cmath>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "mimobc/selection.hpp"
#include "mimobc/transceiver.hpp"

namespace invariants
{

inline std::vector<std::string> check(const mimobc::SelectionOutcome &sel,
                                      std::span<const mimobc::EigenMode> modes,
                                      const mimobc::SelectionConfig &config, int tx)
{
  std::vector<std::string> bad;
  const auto n = static_cast<Eigen::Index>(sel.streams());
  auto fail = [&](const std::string &what) { bad.push_back(what); };

  if (n < 1 || n > tx)
  {
    fail("stream count outside 1..M");
    return bad;
  }
  const Eigen::MatrixXcd gram = sel.basis * sel.basis.adjoint();
  if ((gram - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-10)
  {
    fail("basis rows not orthonormal");
  }
  if ((sel.directions - sel.lower * sel.basis).cwiseAbs().maxCoeff() > 1e-10)
  {
    fail("directions != L Q");
  }
  std::set<std::size_t> seen_modes;
  std::set<std::size_t> seen_users;
  for (Eigen::Index i = 0; i < n; ++i)
  {
    const auto u = static_cast<std::size_t>(i);
    const mimobc::EigenMode &mode = modes[sel.selected[u]];
    if (!seen_modes.insert(sel.selected[u]).second)
    {
      fail("mode selected twice");
    }
    if (!seen_users.insert(mode.user).second && config.exclude_selected_user)
    {
      fail("user served twice with exclusion on");
    }
    if (sel.users[u] != mode.user || sel.orders[u] != mode.order || sel.lambdas[u] != mode.gain)
    {
      fail("bookkeeping mismatch");
    }
    if (config.scope == mimobc::EigenmodeScope::principal_only && mode.order != 0)
    {
      fail("non-principal mode with principal_only scope");
    }
    if (std::abs(sel.lower.row(i).squaredNorm() - 1.0) > 1e-10)
    {
      fail("row of L does not have unit norm");
    }
    for (Eigen::Index j = i + 1; j < n; ++j)
    {
      if (std::abs(sel.lower(i, j)) > 0.0)
      {
        fail("L not lower triangular");
      }
    }
    const auto diag = sel.lower(i, i);
    if (std::abs(diag.imag()) > 1e-12 || diag.real() <= 0.0)
    {
      fail("diagonal of L not real positive");
    }
    if (std::abs(sel.betas[u] - std::norm(diag)) > 1e-12)
    {
      fail("beta_n != |l_nn|^2");
    }
    if (std::abs(sel.gains[u] - sel.lambdas[u] * sel.betas[u]) > 1e-9 * (1.0 + sel.gains[u]))
    {
      fail("gain != lambda beta");
    }
    for (Eigen::Index j = 0; j < i; ++j)
    {
      if (!(std::norm(sel.lower(i, j)) < sel.deltas[static_cast<std::size_t>(j)]))
      {
        fail("pruning constraint |l_ij|^2 < delta_j violated");
      }
    }
    if (u < sel.trace.size())
    {
      for (double g : sel.trace[u].gains)
      {
        if (g > sel.gains[u] * (1.0 + 1e-12) + 1e-15)
        {
          fail("selected gain is not the maximum over the candidate set");
        }
      }
    }
  }
  for (std::size_t i = 1; i < sel.candidate_history.size(); ++i)
  {
    if (sel.candidate_history[i] >= sel.candidate_history[i - 1])
    {
      fail("candidate set did not shrink");
    }
  }
  const auto dpc = mimobc::zfdpc_gains(sel);
  const auto bf = mimobc::zfbf_gains(sel);
  for (std::size_t i = 0; i < dpc.size(); ++i)
  {
    if (bf[i] > dpc[i] * (1.0 + 1e-10))
    {
      fail("per-stream ZFBF gain exceeds ZFDPC gain");
    }
  }
  return bad;
}

}  // namespace invariants

#endif  // MIMOBC_TESTS_INVARIANTS_HPP
