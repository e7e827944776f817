// Copyright 2026 The mimo-bc-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MIMOBC_RNG_HPP
#define MIMOBC_RNG_HPP

#include <cstdint>
#include <random>

namespace mimobc
{

/// Identifies one independent random stream. Streams with distinct keys are
/// statistically independent; equal keys reproduce the same sequence regardless
/// of which thread draws from them or in which order.
struct StreamKey
{
  std::uint64_t master_seed = 0;
  std::uint64_t trial = 0;
  std::uint64_t user = 0;
};

using Engine = std::mt19937_64;

Engine make_engine(const StreamKey &key);

}  // namespace mimobc

#endif  // MIMOBC_RNG_HPP
