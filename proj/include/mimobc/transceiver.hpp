// Copyright 2026 The mimo-bc-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MIMOBC_TRANSCEIVER_HPP
#define MIMOBC_TRANSCEIVER_HPP

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mimobc/selection.hpp"

namespace mimobc
{

enum class Scheme
{
  zfdpc,
  zfbf
};

enum class PowerVariant
{
  equal,
  waterfilling
};

std::string to_string(PowerVariant variant);
PowerVariant parse_power(const std::string &text);

struct PowerPolicy
{
  PowerVariant variant = PowerVariant::waterfilling;
  double total_power = 1.0;  // linear, unit noise variance
};

/// gamma_i = lambda_i |l_{i,i}|^2, recomputed from the triangular factor.
std::vector<double> zfdpc_gains(const SelectionOutcome &selection);

struct ZfbfPrecoder
{
  std::vector<double> gains;       // lambda_i / ||t_i||^2
  Eigen::MatrixXcd inverse;        // T = L^{-1}
  Eigen::MatrixXcd beamformers;    // M x L', column i = Q^H t_i / ||t_i||
};

/// Zero-forcing beamformers from the LQ structure. Throws RankDeficientError
/// when some |l_{i,i}|^2 < 1e-12.
ZfbfPrecoder zfbf_precoder(const SelectionOutcome &selection);
std::vector<double> zfbf_gains(const SelectionOutcome &selection);

/// Forward substitution for the inverse of a lower-triangular matrix.
Eigen::MatrixXcd lower_triangular_inverse(const Eigen::MatrixXcd &lower);

/// p_i = max(0, mu - 1/g_i) with sum p_i = P.
std::vector<double> waterfill(std::span<const double> gains, double power);
std::vector<double> allocate_power(std::span<const double> gains, const PowerPolicy &policy);

double sum_rate(std::span<const double> gains, std::span<const double> powers);

/// log2 det(I + rho Lambda^{1/2} L L^H Lambda^{1/2}).
double upper_bound_c(const SelectionOutcome &selection, double rho);

struct GapTerms
{
  std::vector<double> eta;
  std::vector<double> kappa;
};

GapTerms gap_terms(const SelectionOutcome &selection);

/// Leading terms of C - R in the high and low SNR regimes, equal power rho per stream.
struct RegimeGaps
{
  double high_snr_zfdpc = 0.0;
  double high_snr_zfbf = 0.0;
  double low_snr_zfdpc = 0.0;
  double low_snr_zfbf = 0.0;
};

RegimeGaps regime_gaps(const SelectionOutcome &selection, double rho);

struct TransmissionResult
{
  Scheme scheme = Scheme::zfdpc;
  std::vector<double> stream_gains;
  std::vector<double> powers;
  std::vector<double> stream_snrs;
  double sum_rate = 0.0;
  double upper_bound_c = 0.0;
  GapTerms gaps;
};

/// Per-stream power used for C: P divided by the realized stream count.
double stream_power(const SelectionOutcome &selection, double total_power);

TransmissionResult transmit(const SelectionOutcome &selection, Scheme scheme,
                            const PowerPolicy &policy);

}  // namespace mimobc

#endif  // MIMOBC_TRANSCEIVER_HPP
