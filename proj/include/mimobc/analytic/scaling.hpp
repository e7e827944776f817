// Copyright 2026 The mimo-bc-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MIMOBC_ANALYTIC_SCALING_HPP
#define MIMOBC_ANALYTIC_SCALING_HPP

#include <functional>
#include <string>

namespace mimobc::analytic
{

struct ScalingLaws
{
  double u = 0.0;        // gain centre from the upper cdf bound
  double chi = 0.0;      // gain centre from the lower cdf bound
  double varpi = 0.0;    // rho * u
  double upsilon = 0.0;  // rho * chi
  double asymptotic_sum_rate = 0.0;
};

/// Extreme-value centres of the n-th selected gain and the sum-rate approximation
/// sum_{i=1}^{M} log2(1 + rho (ln K + (M+N-i-1) ln ln K)).
/// Throws DomainError if K < 3 or K/epsilon <= 1 (ln ln undefined).
ScalingLaws scaling_laws(int tx, int rx, int n, double users, double rho);

double asymptotic_sum_rate(int tx, int rx, double users, double rho);

/// (M-1)^4 delta / (1 - (M-1) delta); requires delta < 1/(M-1).
double e_delta(int tx, double delta);

struct AdmissibilityReport
{
  bool admissible = false;
  bool below_limit = false;  // delta(K) < 1/(M-1)
  double growth_slope = 0.0; // d ln(K delta^{M-1}) / d ln K over the test grid
  std::string reason;
};

/// Checks delta(K) < 1/(M-1) at K and that K delta(K)^{M-1} keeps growing,
/// i.e. the schedule decays strictly slower than K^{-1/(M-1)}.
AdmissibilityReport delta_admissible(int tx, double users,
                                     const std::function<double(double)> &schedule);

}  // namespace mimobc::analytic

#endif  // MIMOBC_ANALYTIC_SCALING_HPP
