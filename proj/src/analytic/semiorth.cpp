// Copyright 2026 The mimo-bc-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "mimobc/analytic/semiorth.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "mimobc/analytic/special.hpp"
#include "mimobc/errors.hpp"
#include "mimobc/rng.hpp"

namespace mimobc::analytic
{

namespace
{

void check_delta(int tx, int n, double delta)
{
  if (tx < 2 || n < 2 || n > tx)
  {
    throw DomainError("mu_n: requires 2 <= n <= M");
  }
  if (!(delta > 0.0) || !(delta < 1.0 / (tx - 1)))
  {
    throw DomainError("mu_n: delta must lie in (0, 1/(M-1))");
  }
}

// Closed-form double sum without range checks; valid for 0 <= d <= 1/(n-1).
double mu_sum(int tx, int n, double d)
{
  double out = 0.0;
  for (int k = n - 1; k <= tx - 1; ++k)
  {
    double inner = 0.0;
    for (int i = 0; i <= n - 1; ++i)
    {
      inner += binomial(n - 1, i) * ((i % 2) ? -1.0 : 1.0) * std::pow(static_cast<double>(i), k);
    }
    out += binomial(tx - 1, k) * ((k % 2) ? -1.0 : 1.0) * inner * std::pow(d, k);
  }
  return out;
}

// P(t_i < delta for i < n, sum t < s) under the joint law of the first n-1 coordinates.
double region_mass_quadrature(int tx, int n, double delta, double s)
{
  using boost::math::quadrature::gauss_kronrod;
  const double scale = gamma_int(tx) / gamma_int(tx - n + 1);
  const int power = tx - n;
  if (n == 2)
  {
    const double hi = std::min(delta, s);
    if (hi <= 0.0)
    {
      return 0.0;
    }
    // integral of (1-t)^{M-2} from 0 to hi, exact.
    return scale * (1.0 - std::pow(1.0 - hi, power + 1)) / (power + 1);
  }
  // n == 3: outer over t2, inner over t1 in closed form.
  const double hi = std::min(delta, s);
  if (hi <= 0.0)
  {
    return 0.0;
  }
  auto outer = [&](double t2) {
    const double t1_hi = std::min(delta, s - t2);
    if (t1_hi <= 0.0)
    {
      return 0.0;
    }
    const double base = 1.0 - t2;
    return (std::pow(base, power + 1) - std::pow(base - t1_hi, power + 1)) / (power + 1);
  };
  // Each piece is a polynomial of degree M-n+1; one 31-point pass integrates it
  // exactly up to degree 46.
  const unsigned depth = power + 1 <= 46 ? 0 : 15;
  double kink = s - delta;
  double total = 0.0;
  if (kink > 0.0 && kink < hi)
  {
    total = gauss_kronrod<double, 31>::integrate(outer, 0.0, kink, depth, 1e-13) +
            gauss_kronrod<double, 31>::integrate(outer, kink, hi, depth, 1e-13);
  }
  else
  {
    total = gauss_kronrod<double, 31>::integrate(outer, 0.0, hi, depth, 1e-13);
  }
  return scale * total;
}

}  // namespace

double mu_n(int tx, int n, double delta)
{
  if (n == 1)
  {
    return 1.0;
  }
  check_delta(tx, n, delta);
  return mu_sum(tx, n, delta);
}

double mu_n_alternating(int tx, int n, double delta)
{
  if (n == 1)
  {
    return 1.0;
  }
  check_delta(tx, n, delta);
  double out = 0.0;
  for (int i = 0; i <= n - 1; ++i)
  {
    out += binomial(n - 1, i) * ((i % 2) ? -1.0 : 1.0) * std::pow(1.0 - i * delta, tx - 1);
  }
  return out;
}

double semiorth_joint_density(int tx, int n, std::span<const double> t)
{
  if (n < 2 || n > tx || t.size() != static_cast<std::size_t>(n - 1))
  {
    throw DimensionError("semiorth_joint_density: expected n-1 coordinates with 2 <= n <= M");
  }
  double sum = 0.0;
  for (double v : t)
  {
    if (v < 0.0)
    {
      return 0.0;
    }
    sum += v;
  }
  if (sum > 1.0)
  {
    return 0.0;
  }
  return gamma_int(tx) / gamma_int(tx - n + 1) * std::pow(1.0 - sum, tx - n);
}

double phi_closed_form(int tx, int n, double delta)
{
  if (n < 1 || n >= tx)
  {
    throw DomainError("phi_closed_form: requires 1 <= n < M");
  }
  double out = 0.0;
  for (int k = n; k <= tx - 1; ++k)
  {
    double inner = 0.0;
    for (int i = 0; i <= n; ++i)
    {
      inner += binomial(n, i) * ((i % 2) ? -1.0 : 1.0) * std::pow(static_cast<double>(i), k);
    }
    out += binomial(tx - 1, k) * ((k % 2) ? -1.0 : 1.0) * inner * std::pow(delta, k);
  }
  return gamma_int(tx - n) / gamma_int(tx) * out;
}

Estimate beta_cdf(int tx, int n, double delta, double x, BetaCdfMode mode,
                  const BetaCdfOptions &options)
{
  check_delta(tx, n, delta);
  if (mode == BetaCdfMode::exact_n2 && n != 2)
  {
    throw DomainError("beta_cdf: exact mode is only available for n = 2");
  }
  if (x <= 1.0 - (n - 1) * delta)
  {
    return {0.0, 0.0};
  }
  if (x > 1.0)
  {
    return {1.0, 0.0};
  }
  const double mu = mu_sum(tx, n, delta);
  switch (mode)
  {
  case BetaCdfMode::exact_n2:
  {
    const double floor = std::pow(1.0 - delta, tx - 1);
    return {(std::pow(x, tx - 1) - floor) / (1.0 - floor), 0.0};
  }
  case BetaCdfMode::bound_upper:
    return {std::clamp(1.0 - mu_sum(tx, n, (1.0 - x) / (n - 1)) / mu, 0.0, 1.0), 0.0};
  case BetaCdfMode::bound_lower:
    return {std::clamp(1.0 - incomplete_beta_regularized(n - 1, tx - n + 1, 1.0 - x) / mu, 0.0, 1.0),
            0.0};
  case BetaCdfMode::numeric:
    break;
  }

  const double s = 1.0 - x;
  if (n <= 3)
  {
    return {std::clamp(1.0 - region_mass_quadrature(tx, n, delta, s) / mu, 0.0, 1.0), 0.0};
  }

  if (options.samples < 2)
  {
    throw DomainError("beta_cdf: Monte Carlo mode needs at least two samples");
  }
  // |v_i|^2 of an isotropic unit vector is Dirichlet(1, ..., 1).
  Engine engine = make_engine({options.seed, 0, 0});
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> e(static_cast<std::size_t>(tx));
  std::size_t hits = 0;
  for (std::size_t k = 0; k < options.samples; ++k)
  {
    double total = 0.0;
    for (double &v : e)
    {
      v = expo(engine);
      total += v;
    }
    bool inside = true;
    double head = 0.0;
    for (int i = 0; i < n - 1; ++i)
    {
      const double t = e[static_cast<std::size_t>(i)] / total;
      head += t;
      if (t >= delta)
      {
        inside = false;
        break;
      }
    }
    if (inside && head < s)
    {
      ++hits;
    }
  }
  const double count = static_cast<double>(options.samples);
  const double p = static_cast<double>(hits) / count;
  const double se = std::sqrt(p * (1.0 - p) / count);
  return {1.0 - p / mu, se / mu};
}

}  // namespace mimobc::analytic
