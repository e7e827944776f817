// Copyright 2026 The mimo-bc-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "mimobc/analytic/gamma_bounds.hpp"

#include <algorithm>
#include <cmath>

#include "mimobc/analytic/semiorth.hpp"
#include "mimobc/analytic/special.hpp"
#include "mimobc/errors.hpp"

namespace mimobc::analytic
{

namespace
{

double sign(int k) { return (k % 2) ? -1.0 : 1.0; }

double t_factor(int n, double delta)
{
  const double t = 1.0 - (n - 1) * delta;
  if (!(t > 0.0))
  {
    throw DomainError("gamma bounds: 1 - (n-1) delta must be positive");
  }
  return t;
}

// Correction term of the upper bound: F_tilde = F_max(x/t) - term / mu.
double tilde_term(const WishartMaxEigen &law, int n, double t, double x)
{
  const int tx = law.tx();
  double out = 0.0;
  for (int k = n - 1; k <= tx - 1; ++k)
  {
    double weight = 0.0;
    for (int i = 0; i <= n - 1; ++i)
    {
      weight += binomial(n - 1, i) * sign(i) * std::pow(static_cast<double>(i) / (n - 1), k);
    }
    if (weight == 0.0)
    {
      continue;
    }
    double inner = 0.0;
    for (const auto &term : law.terms())
    {
      const int r = term.r;
      const int s = term.s;
      for (int j = 0; j <= k; ++j)
      {
        const int a = j - k + s + 1;
        inner += term.coeff * binomial(k, j) * std::pow(r, k - j - s - 1) *
                 std::pow(-x, k - j) * (upper_gamma(a, r * x) - upper_gamma(a, r * x / t));
      }
    }
    out += binomial(tx - 1, k) * sign(k) * weight * inner;
  }
  return out;
}

// Correction term of the lower bound: F_bar = F_max(x/t) - term / mu.
double bar_term(const WishartMaxEigen &law, int n, double t, double x)
{
  const int tx = law.tx();
  double out = 0.0;
  for (int k = 0; k <= tx - n; ++k)
  {
    double inner = 0.0;
    for (const auto &term : law.terms())
    {
      const int r = term.r;
      const int s = term.s;
      for (int j = 0; j <= tx - k - 1; ++j)
      {
        const int a = j + s - tx + 2;
        inner += term.coeff * binomial(tx - k - 1, j) * std::pow(r, tx - j - s - 2) *
                 std::pow(-x, tx - j - 1) * (upper_gamma(a, r * x) - upper_gamma(a, r * x / t));
      }
    }
    out += binomial(tx - 1, k) * sign(k) * inner;
  }
  return out;
}

}  // namespace

CdfBounds gamma_cdf_bounds(const WishartMaxEigen &law, int n, double delta, double x)
{
  if (n == 1)
  {
    const double f = law.cdf(x);
    return {f, f};
  }
  const double t = t_factor(n, delta);
  if (x <= 0.0)
  {
    return {0.0, 0.0};
  }
  const double mu = mu_n(law.tx(), n, delta);
  const double base = law.cdf(x / t);
  const double upper = base - tilde_term(law, n, t, x) / mu;
  const double lower = base - bar_term(law, n, t, x) / mu;
  return {std::clamp(lower, 0.0, 1.0), std::clamp(upper, 0.0, 1.0)};
}

CdfBounds gamma_survival_bounds(const WishartMaxEigen &law, int n, double delta, double x)
{
  if (n == 1)
  {
    const double s = law.survival(x);
    return {s, s};
  }
  const double t = t_factor(n, delta);
  if (x <= 0.0)
  {
    return {1.0, 1.0};
  }
  const double mu = mu_n(law.tx(), n, delta);
  const double base = law.survival(x / t);
  const double from_bar = base + bar_term(law, n, t, x) / mu;
  const double from_tilde = base + tilde_term(law, n, t, x) / mu;
  return {std::clamp(from_bar, 0.0, 1.0), std::clamp(from_tilde, 0.0, 1.0)};
}

double epsilon_upper(int tx, int rx, int n)
{
  if (n < 1 || n > tx || rx < 1)
  {
    throw DomainError("epsilon_upper: requires 1 <= n <= M and N >= 1");
  }
  const double power = n == 1 ? 1.0 : std::pow(n - 1.0, n - 1);
  return gamma_int(tx - n + 1) * gamma_int(rx) * power / gamma_int(n);
}

double epsilon_lower(int tx, int rx, int n)
{
  if (n < 1 || n > tx || rx < 1)
  {
    throw DomainError("epsilon_lower: requires 1 <= n <= M and N >= 1");
  }
  return gamma_int(tx - n + 1) * gamma_int(rx);
}

CdfBounds tail_survival(int tx, int rx, int n, double delta, double x)
{
  const double mu = mu_n(tx, n, delta);
  const double shape = std::exp(-x) * std::pow(x, tx + rx - n - 1) / mu;
  return {shape / epsilon_lower(tx, rx, n), shape / epsilon_upper(tx, rx, n)};
}

CdfBounds tail_expansion(int tx, int rx, int n, double delta, double x)
{
  const CdfBounds s = tail_survival(tx, rx, n, delta, x);
  return {1.0 - s.lower, 1.0 - s.upper};
}

}  // namespace mimobc::analytic
