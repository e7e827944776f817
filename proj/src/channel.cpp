// Copyright 2026 The mimo-bc-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "mimobc/channel.hpp"

#include <cmath>
#include <random>
#include <string>

#include "mimobc/errors.hpp"
#include "mimobc/rng.hpp"

namespace mimobc
{

ChannelRealization::ChannelRealization(int tx_antennas, std::vector<CMatrix> matrices)
    : tx_(tx_antennas), matrices_(std::move(matrices))
{
  if (tx_ < 1)
  {
    throw DimensionError("transmit antenna count must be >= 1");
  }
  for (const auto &h : matrices_)
  {
    if (h.cols() != tx_ || h.rows() < 1)
    {
      throw DimensionError("channel matrix must be N_k x " + std::to_string(tx_) + " with N_k >= 1");
    }
    if (!h.allFinite())
    {
      throw DimensionError("channel matrix has non-finite entries");
    }
  }
}

int ChannelRealization::rx_antennas(std::size_t user) const
{
  return static_cast<int>(matrix(user).rows());
}

const CMatrix &ChannelRealization::matrix(std::size_t user) const
{
  if (user >= matrices_.size())
  {
    throw DimensionError("user index " + std::to_string(user) + " out of range");
  }
  return matrices_[user];
}

ChannelRealization ChannelRealization::prefix(std::size_t count) const
{
  if (count > matrices_.size())
  {
    throw DimensionError("prefix larger than the realization");
  }
  return ChannelRealization(tx_, {matrices_.begin(), matrices_.begin() + static_cast<std::ptrdiff_t>(count)});
}

ChannelRealization generate_channels(int tx_antennas, std::span<const int> rx_counts,
                                     std::uint64_t master_seed, std::uint64_t trial_index)
{
  if (tx_antennas < 1)
  {
    throw DimensionError("transmit antenna count must be >= 1");
  }
  std::vector<CMatrix> matrices;
  matrices.reserve(rx_counts.size());
  // Real and imaginary parts each carry variance 1/2.
  const double sd = std::sqrt(0.5);
  for (std::size_t k = 0; k < rx_counts.size(); ++k)
  {
    if (rx_counts[k] < 1)
    {
      throw DimensionError("receive antenna count must be >= 1");
    }
    auto engine = make_engine({master_seed, trial_index, k});
    std::normal_distribution<double> normal(0.0, sd);
    CMatrix h(rx_counts[k], tx_antennas);
    for (Eigen::Index j = 0; j < h.cols(); ++j)
    {
      for (Eigen::Index i = 0; i < h.rows(); ++i)
      {
        const double re = normal(engine);
        const double im = normal(engine);
        h(i, j) = {re, im};
      }
    }
    matrices.push_back(std::move(h));
  }
  return ChannelRealization(tx_antennas, std::move(matrices));
}

std::vector<EigenMode> eigenmodes(const ChannelRealization &channel, std::size_t user)
{
  const CMatrix &h = channel.matrix(user);
  Eigen::JacobiSVD<CMatrix> svd(h, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto &sigma = svd.singularValues();
  if (!sigma.allFinite() || !svd.matrixU().allFinite() || !svd.matrixV().allFinite())
  {
    throw NumericalError("SVD of user " + std::to_string(user) + " did not converge");
  }
  std::vector<EigenMode> modes;
  modes.reserve(static_cast<std::size_t>(sigma.size()));
  for (Eigen::Index j = 0; j < sigma.size(); ++j)
  {
    EigenMode mode;
    mode.user = user;
    mode.order = static_cast<int>(j);
    mode.gain = sigma(j) * sigma(j);
    mode.right = svd.matrixV().col(j);
    mode.left = svd.matrixU().col(j);
    modes.push_back(std::move(mode));
  }
  return modes;
}

}  // namespace mimobc
