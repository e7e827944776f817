// Copyright 2026 The mimo-bc-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MIMOBC_CHANNEL_HPP
#define MIMOBC_CHANNEL_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace mimobc
{

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// One fading draw: the K per-user channel matrices H_k, each N_k x M.
class ChannelRealization
{
public:
  ChannelRealization(int tx_antennas, std::vector<CMatrix> matrices);

  int tx_antennas() const { return tx_; }
  std::size_t users() const { return matrices_.size(); }
  int rx_antennas(std::size_t user) const;
  const CMatrix &matrix(std::size_t user) const;

  // Realization restricted to the first `count` users.
  ChannelRealization prefix(std::size_t count) const;

private:
  int tx_;
  std::vector<CMatrix> matrices_;
};

/// Draws i.i.d. CN(0,1) entries. User k's matrix comes from the stream keyed by
/// (master_seed, trial_index, k), so a realization with more users extends one with
/// fewer users and every draw is reproducible under any parallel schedule.
ChannelRealization generate_channels(int tx_antennas, std::span<const int> rx_counts,
                                     std::uint64_t master_seed, std::uint64_t trial_index);

/// One (user, eigen-index) pair of a channel SVD. Indices are zero-based.
struct EigenMode
{
  std::size_t user = 0;
  int order = 0;
  double gain = 0.0;     // lambda = sigma^2
  CVector right;         // v, length M
  CVector left;          // u, length N_k
};

/// min(N_k, M) modes of user k, gains non-increasing.
std::vector<EigenMode> eigenmodes(const ChannelRealization &channel, std::size_t user);

}  // namespace mimobc

#endif  // MIMOBC_CHANNEL_HPP
