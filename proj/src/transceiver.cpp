// Copyright 2026 The mimo-bc-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "mimobc/transceiver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "mimobc/errors.hpp"

namespace mimobc
{

namespace
{

constexpr double kRankTol = 1e-12;
constexpr double kIdentityTol = 1e-9;

}  // namespace

std::string to_string(PowerVariant variant)
{
  return variant == PowerVariant::equal ? "equal" : "waterfill";
}

PowerVariant parse_power(const std::string &text)
{
  if (text == "equal")
  {
    return PowerVariant::equal;
  }
  if (text == "waterfill" || text == "waterfilling")
  {
    return PowerVariant::waterfilling;
  }
  throw UsageError("power policy must be 'equal' or 'waterfill', got '" + text + "'");
}

std::vector<double> zfdpc_gains(const SelectionOutcome &selection)
{
  std::vector<double> gains(selection.streams());
  for (std::size_t i = 0; i < gains.size(); ++i)
  {
    const auto idx = static_cast<Eigen::Index>(i);
    gains[i] = selection.lambdas[i] * std::norm(selection.lower(idx, idx));
  }
  return gains;
}

Eigen::MatrixXcd lower_triangular_inverse(const Eigen::MatrixXcd &lower)
{
  const Eigen::Index n = lower.rows();
  Eigen::MatrixXcd inv = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index c = 0; c < n; ++c)
  {
    inv(c, c) = 1.0 / lower(c, c);
    for (Eigen::Index i = c + 1; i < n; ++i)
    {
      std::complex<double> acc = 0.0;
      for (Eigen::Index k = c; k < i; ++k)
      {
        acc += lower(i, k) * inv(k, c);
      }
      inv(i, c) = -acc / lower(i, i);
    }
  }
  return inv;
}

ZfbfPrecoder zfbf_precoder(const SelectionOutcome &selection)
{
  const auto n = static_cast<Eigen::Index>(selection.streams());
  for (Eigen::Index i = 0; i < n; ++i)
  {
    if (std::norm(selection.lower(i, i)) < kRankTol)
    {
      throw RankDeficientError("zero-forcing: selected channels are numerically dependent");
    }
  }
  ZfbfPrecoder out;
  out.inverse = lower_triangular_inverse(selection.lower);
  out.beamformers.resize(selection.basis.cols(), n);
  out.gains.resize(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i)
  {
    const double tnorm_sq = out.inverse.col(i).squaredNorm();
    out.gains[static_cast<std::size_t>(i)] = selection.lambdas[static_cast<std::size_t>(i)] / tnorm_sq;
    out.beamformers.col(i) = selection.basis.adjoint() * out.inverse.col(i) / std::sqrt(tnorm_sq);
  }
  return out;
}

std::vector<double> zfbf_gains(const SelectionOutcome &selection)
{
  return zfbf_precoder(selection).gains;
}

std::vector<double> waterfill(std::span<const double> gains, double power)
{
  if (gains.empty())
  {
    throw DomainError("waterfill: no streams");
  }
  if (!(power > 0.0))
  {
    throw DomainError("waterfill: total power must be positive");
  }
  for (double g : gains)
  {
    if (!(g > 0.0))
    {
      throw DomainError("waterfill: gains must be positive");
    }
  }
  std::vector<double> inv(gains.size());
  std::transform(gains.begin(), gains.end(), inv.begin(), [](double g) { return 1.0 / g; });
  std::vector<double> sorted = inv;
  std::sort(sorted.begin(), sorted.end());

  // Largest active set whose weakest member still sits below the water level.
  double level = 0.0;
  double acc = 0.0;
  for (std::size_t m = 0; m < sorted.size(); ++m)
  {
    acc += sorted[m];
    const double candidate = (power + acc) / static_cast<double>(m + 1);
    if (candidate > sorted[m])
    {
      level = candidate;
    }
    else
    {
      break;
    }
  }
  std::vector<double> powers(gains.size());
  for (std::size_t i = 0; i < gains.size(); ++i)
  {
    powers[i] = std::max(0.0, level - inv[i]);
  }
  return powers;
}

std::vector<double> allocate_power(std::span<const double> gains, const PowerPolicy &policy)
{
  if (policy.variant == PowerVariant::waterfilling)
  {
    return waterfill(gains, policy.total_power);
  }
  if (gains.empty())
  {
    throw DomainError("allocate_power: no streams");
  }
  return std::vector<double>(gains.size(), policy.total_power / static_cast<double>(gains.size()));
}

double sum_rate(std::span<const double> gains, std::span<const double> powers)
{
  if (gains.size() != powers.size())
  {
    throw DimensionError("sum_rate: gains and powers differ in length");
  }
  double rate = 0.0;
  for (std::size_t i = 0; i < gains.size(); ++i)
  {
    rate += std::log2(1.0 + powers[i] * gains[i]);
  }
  return rate;
}

double upper_bound_c(const SelectionOutcome &selection, double rho)
{
  const auto n = static_cast<Eigen::Index>(selection.streams());
  Eigen::VectorXd root(n);
  for (Eigen::Index i = 0; i < n; ++i)
  {
    root(i) = std::sqrt(selection.lambdas[static_cast<std::size_t>(i)]);
  }
  const Eigen::MatrixXcd scaled = root.asDiagonal() * selection.lower;
  Eigen::MatrixXcd gram = rho * scaled * scaled.adjoint();
  gram.diagonal().array() += 1.0;
  Eigen::LLT<Eigen::MatrixXcd> llt(gram);
  if (llt.info() != Eigen::Success)
  {
    throw NumericalError("upper_bound_c: Cholesky factorization failed");
  }
  double log_det = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
  {
    log_det += 2.0 * std::log(std::real(llt.matrixLLT()(i, i)));
  }
  return log_det / std::numbers::ln2;
}

GapTerms gap_terms(const SelectionOutcome &selection)
{
  const auto n = static_cast<Eigen::Index>(selection.streams());
  const Eigen::MatrixXcd inv = zfbf_precoder(selection).inverse;
  GapTerms out;
  out.eta.resize(static_cast<std::size_t>(n));
  out.kappa.resize(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i)
  {
    const double diag_l = std::norm(selection.lower(i, i));
    const double diag_t = std::norm(inv(i, i));
    double eta = 0.0;
    for (Eigen::Index j = 0; j < i; ++j)
    {
      eta += std::norm(selection.lower(i, j));
    }
    eta /= diag_l;
    double kappa = 0.0;
    for (Eigen::Index j = i + 1; j < n; ++j)
    {
      kappa += std::norm(inv(j, i));
    }
    kappa /= diag_t;
    if (std::abs((1.0 + eta) * diag_l - 1.0) > kIdentityTol)
    {
      throw NumericalError("gap_terms: (1 + eta_i) |l_ii|^2 != 1, rows are not unit norm");
    }
    out.eta[static_cast<std::size_t>(i)] = eta;
    out.kappa[static_cast<std::size_t>(i)] = kappa;
  }
  return out;
}

RegimeGaps regime_gaps(const SelectionOutcome &selection, double rho)
{
  const GapTerms terms = gap_terms(selection);
  const double ln2 = std::numbers::ln2;
  RegimeGaps out;
  for (std::size_t i = 0; i < selection.streams(); ++i)
  {
    const auto idx = static_cast<Eigen::Index>(i);
    const double gamma = selection.lambdas[i] * std::norm(selection.lower(idx, idx));
    const double eta = terms.eta[i];
    const double kappa = terms.kappa[i];
    out.high_snr_zfdpc += kappa / gamma;
    out.high_snr_zfbf += std::log2(1.0 + kappa);
    out.low_snr_zfdpc += eta * gamma;
    out.low_snr_zfbf += (1.0 + eta - 1.0 / (1.0 + kappa)) * gamma;
  }
  out.high_snr_zfdpc /= rho * ln2;
  out.low_snr_zfdpc *= rho / ln2;
  out.low_snr_zfbf *= rho / ln2;
  return out;
}

double stream_power(const SelectionOutcome &selection, double total_power)
{
  if (selection.streams() == 0)
  {
    throw DomainError("stream_power: empty selection");
  }
  return total_power / static_cast<double>(selection.streams());
}

TransmissionResult transmit(const SelectionOutcome &selection, Scheme scheme,
                            const PowerPolicy &policy)
{
  TransmissionResult out;
  out.scheme = scheme;
  out.stream_gains = scheme == Scheme::zfdpc ? zfdpc_gains(selection) : zfbf_gains(selection);
  out.powers = allocate_power(out.stream_gains, policy);
  out.stream_snrs.resize(out.powers.size());
  for (std::size_t i = 0; i < out.powers.size(); ++i)
  {
    out.stream_snrs[i] = out.powers[i] * out.stream_gains[i];
  }
  out.sum_rate = sum_rate(out.stream_gains, out.powers);
  out.upper_bound_c = upper_bound_c(selection, stream_power(selection, policy.total_power));
  out.gaps = gap_terms(selection);
  return out;
}

}  // namespace mimobc
