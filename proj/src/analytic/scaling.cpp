// Copyright 2026 The mimo-bc-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "mimobc/analytic/scaling.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "mimobc/analytic/gamma_bounds.hpp"
#include "mimobc/errors.hpp"

namespace mimobc::analytic
{

namespace
{

double centre(int tx, int rx, int n, double ratio)
{
  if (!(ratio > 1.0))
  {
    throw DomainError("scaling_laws: K / epsilon must exceed 1");
  }
  return std::log(ratio) + (tx + rx - n - 1) * std::log(std::log(ratio));
}

void check_users(double users)
{
  if (!(users >= 3.0))
  {
    throw DomainError("scaling laws require K >= 3");
  }
}

}  // namespace

ScalingLaws scaling_laws(int tx, int rx, int n, double users, double rho)
{
  check_users(users);
  ScalingLaws out;
  out.u = centre(tx, rx, n, users / epsilon_upper(tx, rx, n));
  out.chi = centre(tx, rx, n, users / epsilon_lower(tx, rx, n));
  out.varpi = rho * out.u;
  out.upsilon = rho * out.chi;
  out.asymptotic_sum_rate = asymptotic_sum_rate(tx, rx, users, rho);
  return out;
}

double asymptotic_sum_rate(int tx, int rx, double users, double rho)
{
  check_users(users);
  const double ln_k = std::log(users);
  const double lnln_k = std::log(ln_k);
  double out = 0.0;
  for (int i = 1; i <= tx; ++i)
  {
    out += std::log2(1.0 + rho * (ln_k + (tx + rx - i - 1) * lnln_k));
  }
  return out;
}

double e_delta(int tx, double delta)
{
  if (tx < 1)
  {
    throw DomainError("e_delta: M must be positive");
  }
  const double m1 = tx - 1.0;
  if (delta < 0.0 || (tx > 1 && !(delta < 1.0 / m1)))
  {
    throw DomainError("e_delta: delta must lie in [0, 1/(M-1))");
  }
  return m1 * m1 * m1 * m1 * delta / (1.0 - m1 * delta);
}

AdmissibilityReport delta_admissible(int tx, double users,
                                     const std::function<double(double)> &schedule)
{
  AdmissibilityReport report;
  const double d = schedule(users);
  report.below_limit = d > 0.0 && (tx <= 1 || d < 1.0 / (tx - 1));

  // Least-squares slope of ln(K delta(K)^{M-1}) against ln K.
  std::vector<double> xs;
  std::vector<double> ys;
  for (int j = 0; j <= 6; ++j)
  {
    const double k = users * std::pow(10.0, j);
    const double dk = schedule(k);
    if (!(dk > 0.0))
    {
      report.reason = "schedule is not positive on the test grid";
      return report;
    }
    xs.push_back(std::log(k));
    ys.push_back(std::log(k) + (tx - 1) * std::log(dk));
  }
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i)
  {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(xs.size());
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i)
  {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  report.growth_slope = sxy / sxx;

  constexpr double kMinSlope = 0.01;
  std::ostringstream why;
  if (!report.below_limit)
  {
    why << "delta(K) = " << d << " is not below 1/(M-1)";
  }
  else if (report.growth_slope <= kMinSlope)
  {
    why << "K delta^(M-1) does not grow (slope " << report.growth_slope << ")";
  }
  else
  {
    why << "ok";
  }
  report.reason = why.str();
  report.admissible = report.below_limit && report.growth_slope > kMinSlope;
  return report;
}

}  // namespace mimobc::analytic
