// Copyright 2026 The mimo-bc-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MIMOBC_ANALYTIC_SPECIAL_HPP
#define MIMOBC_ANALYTIC_SPECIAL_HPP

namespace mimobc::analytic
{

double factorial(int n);
double binomial(int n, int k);

// Gamma(n) for integer n >= 1.
inline double gamma_int(int n) { return factorial(n - 1); }

// Integer-order incomplete gamma functions. The regularized forms require a >= 1.
double lower_gamma_regularized(int a, double x);  // P(a, x)
double upper_gamma_regularized(int a, double x);  // Q(a, x) = e^{-x} sum_{k<a} x^k/k!
double lower_gamma(int a, double x);              // gamma(a, x)

// Gamma(a, x) for any integer a and x > 0; a <= 0 goes through E_1.
double upper_gamma(int a, double x);

// I_y(a, b) for integer a, b >= 1 (binomial tail sum).
double incomplete_beta_regularized(int a, int b, double y);

}  // namespace mimobc::analytic

#endif  // MIMOBC_ANALYTIC_SPECIAL_HPP
