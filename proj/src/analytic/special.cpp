// Copyright 2026 The mimo-bc-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "mimobc/analytic/special.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/special_functions/expint.hpp>

#include "mimobc/errors.hpp"

namespace mimobc::analytic
{

double factorial(int n)
{
  if (n < 0)
  {
    throw DomainError("factorial: negative argument");
  }
  double out = 1.0;
  for (int k = 2; k <= n; ++k)
  {
    out *= k;
  }
  return out;
}

double binomial(int n, int k)
{
  if (k < 0 || n < 0 || k > n)
  {
    return 0.0;
  }
  k = std::min(k, n - k);
  double out = 1.0;
  for (int i = 1; i <= k; ++i)
  {
    out = out * (n - k + i) / i;
  }
  return std::round(out);
}

double upper_gamma_regularized(int a, double x)
{
  if (a < 1)
  {
    throw DomainError("upper_gamma_regularized: order must be >= 1");
  }
  if (x <= 0.0)
  {
    return 1.0;
  }
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < a; ++k)
  {
    term *= x / k;
    sum += term;
  }
  return std::exp(-x) * sum;
}

double lower_gamma_regularized(int a, double x)
{
  if (a < 1)
  {
    throw DomainError("lower_gamma_regularized: order must be >= 1");
  }
  if (x <= 0.0)
  {
    return 0.0;
  }
  if (x >= a)
  {
    return 1.0 - upper_gamma_regularized(a, x);
  }
  // e^{-x} sum_{k >= a} x^k / k!, avoids cancellation for small x.
  double term = std::exp(-x);
  for (int k = 1; k <= a; ++k)
  {
    term *= x / k;
  }
  double sum = 0.0;
  for (int k = a; k < a + 1000; ++k)
  {
    sum += term;
    term *= x / (k + 1);
    if (term < sum * 1e-17)
    {
      break;
    }
  }
  return sum;
}

double lower_gamma(int a, double x)
{
  return factorial(a - 1) * lower_gamma_regularized(a, x);
}

double upper_gamma(int a, double x)
{
  if (a >= 1)
  {
    return factorial(a - 1) * upper_gamma_regularized(a, x);
  }
  if (!(x > 0.0))
  {
    throw DomainError("upper_gamma: non-positive order needs x > 0");
  }
  // Gamma(1 - m, x) = x^{1 - m} E_m(x).
  const int m = 1 - a;
  return std::pow(x, a) * boost::math::expint(m, x);
}

double incomplete_beta_regularized(int a, int b, double y)
{
  if (a < 1 || b < 1)
  {
    throw DomainError("incomplete_beta_regularized: a, b must be >= 1");
  }
  if (y <= 0.0)
  {
    return 0.0;
  }
  if (y >= 1.0)
  {
    return 1.0;
  }
  const int n = a + b - 1;
  double sum = 0.0;
  for (int j = a; j <= n; ++j)
  {
    sum += binomial(n, j) * std::pow(y, j) * std::pow(1.0 - y, n - j);
  }
  return std::min(1.0, sum);
}

}  // namespace mimobc::analytic
