// Copyright 2026 The mimo-bc-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MIMOBC_ANALYTIC_SEMIORTH_HPP
#define MIMOBC_ANALYTIC_SEMIORTH_HPP

#include <cstddef>
#include <cstdint>
#include <span>

namespace mimobc::analytic
{

/// Probability that an isotropic unit M-vector has |v_i|^2 < delta on n-1 fixed
/// orthonormal directions, i.e. that a user survives into candidate set U_n.
/// Requires 2 <= n <= M and 0 < delta < 1/(M-1). n = 1 returns 1.
double mu_n(int tx, int n, double delta);

/// Same quantity through the alternating form sum_i C(n-1,i)(-1)^i (1-i delta)^{M-1}.
double mu_n_alternating(int tx, int n, double delta);

/// Joint density of t_i = |v_i|^2, i < n, on the simplex; 0 outside it.
double semiorth_joint_density(int tx, int n, std::span<const double> t);

/// phi_n(1) = Gamma(M-n)/Gamma(M) sum_k C(M-1,k)(-1)^k [sum_i C(n,i)(-1)^i i^k] delta^k,
/// the n-fold integral of (1 - sum t)^{M-n-1} over [0, delta]^n. Requires 1 <= n < M.
double phi_closed_form(int tx, int n, double delta);

enum class BetaCdfMode
{
  exact_n2,
  numeric,
  bound_upper,
  bound_lower
};

struct Estimate
{
  double value = 0.0;
  double std_error = 0.0;  // zero for deterministic evaluations
};

struct BetaCdfOptions
{
  std::uint64_t seed = 7;
  std::size_t samples = 1'000'000;  // Monte Carlo mode (n >= 4)
};

/// cdf of the projection residual beta_k(n) = ||xi_k||^2 for a member of U_n.
/// numeric mode uses adaptive quadrature for n <= 3 and Monte Carlo integration
/// from the joint density for n >= 4.
Estimate beta_cdf(int tx, int n, double delta, double x, BetaCdfMode mode,
                  const BetaCdfOptions &options = {});

}  // namespace mimobc::analytic

#endif  // MIMOBC_ANALYTIC_SEMIORTH_HPP
