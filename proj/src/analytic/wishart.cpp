// Copyright 2026 The mimo-bc-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "mimobc/analytic/wishart.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "mimobc/analytic/special.hpp"
#include "mimobc/errors.hpp"

namespace mimobc::analytic
{

namespace
{

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

// Sum of c * x^s e^{-r x}, keyed by (r, s).
using Poly = std::map<std::pair<int, int>, cpp_int>;

cpp_int int_factorial(int n)
{
  cpp_int out = 1;
  for (int k = 2; k <= n; ++k)
  {
    out *= k;
  }
  return out;
}

// gamma(a, x) = (a-1)! (1 - e^{-x} sum_{k<a} x^k / k!)
Poly lower_gamma_poly(int a)
{
  Poly out;
  const cpp_int lead = int_factorial(a - 1);
  out[{0, 0}] = lead;
  for (int k = 0; k < a; ++k)
  {
    out[{1, k}] = -(lead / int_factorial(k));
  }
  return out;
}

void add_product(Poly &acc, const Poly &lhs, const Poly &rhs, int sign)
{
  for (const auto &[kl, cl] : lhs)
  {
    for (const auto &[kr, cr] : rhs)
    {
      auto &slot = acc[{kl.first + kr.first, kl.second + kr.second}];
      if (sign > 0)
      {
        slot += cl * cr;
      }
      else
      {
        slot -= cl * cr;
      }
    }
  }
}

std::string rational_string(const cpp_rational &value)
{
  const cpp_int num = boost::multiprecision::numerator(value);
  const cpp_int den = boost::multiprecision::denominator(value);
  if (den == 1)
  {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

}  // namespace

WishartMaxEigen::WishartMaxEigen(int tx, int rx)
    : tx_(tx), rx_(rx), p_(std::min(tx, rx)), q_(std::max(tx, rx))
{
  if (tx < 1 || rx < 1 || tx > kWishartMaxDim || rx > kWishartMaxDim)
  {
    throw DomainError("wishart: antenna counts must lie in [1, 8]");
  }
  const int p = p_;
  const int q = q_;

  std::vector<std::vector<Poly>> entries(p, std::vector<Poly>(p));
  for (int i = 0; i < p; ++i)
  {
    for (int j = 0; j < p; ++j)
    {
      entries[i][j] = lower_gamma_poly(q - p + i + j + 1);
    }
  }

  // Leibniz expansion, rows assigned in order; the sign counts inversions.
  const unsigned full = (1u << p) - 1u;
  std::vector<Poly> dp(full + 1u);
  dp[0][{0, 0}] = 1;
  for (unsigned mask = 0; mask < full; ++mask)
  {
    if (dp[mask].empty())
    {
      continue;
    }
    const int row = std::popcount(mask);
    for (int c = 0; c < p; ++c)
    {
      if (mask & (1u << c))
      {
        continue;
      }
      const int inversions = std::popcount(mask >> (c + 1));
      add_product(dp[mask | (1u << c)], dp[mask], entries[row][c], inversions % 2 == 0 ? 1 : -1);
    }
  }

  cpp_int norm = 1;
  for (int i = 1; i <= p; ++i)
  {
    norm *= int_factorial(q - i) * int_factorial(p - i);
  }

  std::map<std::pair<int, int>, cpp_rational> cdf;
  for (const auto &[key, value] : dp[full])
  {
    if (value != 0)
    {
      cdf[key] = cpp_rational(value, norm);
    }
  }
  const auto constant = cdf.find({0, 0});
  if (constant == cdf.end() || constant->second != 1 || cdf.size() < 2)
  {
    throw NumericalError("wishart: cdf expansion does not tend to one");
  }
  for (const auto &[key, value] : cdf)
  {
    if (key.first == 0 && key.second != 0)
    {
      throw NumericalError("wishart: unexpected polynomial term without decay");
    }
  }

  // d/dx of b x^s e^{-r x} = b s x^{s-1} e^{-r x} - r b x^s e^{-r x}.
  std::map<std::pair<int, int>, cpp_rational> pdf;
  for (const auto &[key, value] : cdf)
  {
    const auto [r, s] = key;
    if (r == 0)
    {
      continue;
    }
    if (s > 0)
    {
      pdf[{r, s - 1}] += value * s;
    }
    pdf[{r, s}] -= value * r;
  }
  for (const auto &[key, value] : pdf)
  {
    if (value != 0)
    {
      terms_.push_back({key.first, key.second, value.convert_to<double>(), rational_string(value)});
    }
  }
}

double WishartMaxEigen::coefficient(int r, int s) const
{
  for (const Term &t : terms_)
  {
    if (t.r == r && t.s == s)
    {
      return t.coeff;
    }
  }
  return 0.0;
}

std::string WishartMaxEigen::exact_coefficient(int r, int s) const
{
  for (const Term &t : terms_)
  {
    if (t.r == r && t.s == s)
    {
      return t.exact;
    }
  }
  return "0";
}

double WishartMaxEigen::pdf(double x) const
{
  if (x < 0.0)
  {
    return 0.0;
  }
  double out = 0.0;
  for (const Term &t : terms_)
  {
    out += t.coeff * std::pow(x, t.s) * std::exp(-t.r * x);
  }
  return std::max(0.0, out);
}

double WishartMaxEigen::cdf(double x) const
{
  if (x <= 0.0)
  {
    return 0.0;
  }
  double out = 0.0;
  for (const Term &t : terms_)
  {
    out += t.coeff * factorial(t.s) / std::pow(t.r, t.s + 1) *
           lower_gamma_regularized(t.s + 1, t.r * x);
  }
  return std::clamp(out, 0.0, 1.0);
}

double WishartMaxEigen::survival(double x) const
{
  if (x <= 0.0)
  {
    return 1.0;
  }
  double out = 0.0;
  for (const Term &t : terms_)
  {
    out += t.coeff * factorial(t.s) / std::pow(t.r, t.s + 1) *
           upper_gamma_regularized(t.s + 1, t.r * x);
  }
  return std::clamp(out, 0.0, 1.0);
}

double WishartMaxEigen::total_mass() const
{
  double out = 0.0;
  for (const Term &t : terms_)
  {
    out += t.coeff * factorial(t.s) / std::pow(t.r, t.s + 1);
  }
  return out;
}

WishartMaxEigen wishart_coeffs(int tx, int rx)
{
  return WishartMaxEigen(tx, rx);
}

}  // namespace mimobc::analytic
