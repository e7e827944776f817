// Copyright 2026 The mimo-bc-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "mimobc/rng.hpp"

#include <array>

namespace mimobc
{

Engine make_engine(const StreamKey &key)
{
  const std::array<std::uint32_t, 6> words{
      static_cast<std::uint32_t>(key.master_seed), static_cast<std::uint32_t>(key.master_seed >> 32),
      static_cast<std::uint32_t>(key.trial),       static_cast<std::uint32_t>(key.trial >> 32),
      static_cast<std::uint32_t>(key.user),        static_cast<std::uint32_t>(key.user >> 32)};
  std::seed_seq seq(words.begin(), words.end());
  return Engine(seq);
}

}  // namespace mimobc
