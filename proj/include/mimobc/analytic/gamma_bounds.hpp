// Copyright 2026 The mimo-bc-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MIMOBC_ANALYTIC_GAMMA_BOUNDS_HPP
#define MIMOBC_ANALYTIC_GAMMA_BOUNDS_HPP

#include "mimobc/analytic/wishart.hpp"

namespace mimobc::analytic
{

// `lower` is the cdf of lambda_max * beta_bar, `upper` that of lambda_max * beta_tilde.
struct CdfBounds
{
  double lower = 0.0;
  double upper = 0.0;
};

/// Closed-form bounds on the cdf of gamma_k(n) = lambda_max beta_k(n). For n = 1
/// both equal F_max; for n = 2 they coincide. Accuracy is not guaranteed for x < 1e-3.
CdfBounds gamma_cdf_bounds(const WishartMaxEigen &law, int n, double delta, double x);

/// 1 - gamma_cdf_bounds, assembled from upper incomplete gammas so that tiny tail
/// probabilities keep their relative accuracy. `lower` holds 1 - F_bar (the larger).
CdfBounds gamma_survival_bounds(const WishartMaxEigen &law, int n, double delta, double x);

/// epsilon_n with 1/epsilon_n = Gamma(n) / (Gamma(M-n+1) Gamma(N) (n-1)^{n-1}), 0^0 = 1.
double epsilon_upper(int tx, int rx, int n);
/// 1/epsilon'_n = 1 / (Gamma(M-n+1) Gamma(N)).
double epsilon_lower(int tx, int rx, int n);

/// Leading large-x behaviour 1 - e^{-x} x^{M+N-n-1} / (mu_n(delta) epsilon).
/// `upper` uses epsilon_upper, `lower` uses epsilon_lower.
CdfBounds tail_expansion(int tx, int rx, int n, double delta, double x);

/// Matching complements e^{-x} x^{M+N-n-1} / (mu_n epsilon).
CdfBounds tail_survival(int tx, int rx, int n, double delta, double x);

}  // namespace mimobc::analytic

#endif  // MIMOBC_ANALYTIC_GAMMA_BOUNDS_HPP
