// Copyright 2026 The mimo-bc-sim Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "mimobc/channel.hpp"
#include "mimobc/errors.hpp"

using namespace mimobc;

TEST_CASE("draws are reproducible and extend across user counts")
{
  const std::vector<int> few{2, 2, 2};
  const std::vector<int> many{2, 2, 2, 2, 2, 2};
  const auto a = generate_channels(4, few, 11, 3);
  const auto b = generate_channels(4, many, 11, 3);
  const auto c = generate_channels(4, few, 11, 3);
  const auto other_trial = generate_channels(4, few, 11, 4);
  for (std::size_t k = 0; k < few.size(); ++k)
  {
    CHECK(a.matrix(k) == b.matrix(k));
    CHECK(a.matrix(k) == c.matrix(k));
    CHECK(a.matrix(k) != other_trial.matrix(k));
  }
  const auto p = b.prefix(3);
  CHECK(p.users() == 3);
  CHECK(p.matrix(2) == a.matrix(2));
  CHECK_THROWS_AS(b.prefix(7), DimensionError);
}

TEST_CASE("entries are circularly symmetric with unit variance")
{
  std::vector<int> rx(2000, 4);
  const auto ch = generate_channels(4, rx, 5, 0);
  double re = 0.0, im = 0.0, power = 0.0, re_sq = 0.0, cross = 0.0;
  double count = 0.0;
  for (std::size_t k = 0; k < ch.users(); ++k)
  {
    const CMatrix &h = ch.matrix(k);
    for (Eigen::Index i = 0; i < h.size(); ++i)
    {
      const auto z = h.data()[i];
      re += z.real();
      im += z.imag();
      power += std::norm(z);
      re_sq += z.real() * z.real();
      cross += z.real() * z.imag();
      count += 1.0;
    }
  }
  // 32000 entries: standard errors about 0.004 to 0.008.
  CHECK(std::abs(re / count) < 0.02);
  CHECK(std::abs(im / count) < 0.02);
  CHECK(power / count == doctest::Approx(1.0).epsilon(0.03));
  CHECK(re_sq / count == doctest::Approx(0.5).epsilon(0.03));
  CHECK(std::abs(cross / count) < 0.02);
}

TEST_CASE("eigenmodes reproduce the channel")
{
  const std::vector<int> rx{1, 2, 3, 5};
  const auto ch = generate_channels(3, rx, 17, 0);
  for (std::size_t k = 0; k < ch.users(); ++k)
  {
    const CMatrix &h = ch.matrix(k);
    const auto modes = eigenmodes(ch, k);
    REQUIRE(modes.size() == static_cast<std::size_t>(std::min(3, rx[k])));
    double total = 0.0;
    for (std::size_t i = 0; i < modes.size(); ++i)
    {
      const auto &m = modes[i];
      CHECK(m.user == k);
      CHECK(m.order == static_cast<int>(i));
      CHECK(m.right.norm() == doctest::Approx(1.0));
      CHECK(m.left.norm() == doctest::Approx(1.0));
      CHECK((h * m.right - std::sqrt(m.gain) * m.left).norm() < 1e-10);
      if (i > 0)
      {
        CHECK(m.gain <= modes[i - 1].gain);
      }
      total += m.gain;
    }
    if (rx[k] <= 3)
    {
      CHECK(total == doctest::Approx(h.squaredNorm()).epsilon(1e-12));
    }
  }
}

TEST_CASE("malformed channels are rejected")
{
  std::vector<CMatrix> bad{CMatrix::Zero(2, 3)};
  CHECK_THROWS_AS(ChannelRealization(4, bad), DimensionError);
  std::vector<CMatrix> nan{CMatrix::Constant(1, 2, std::numeric_limits<double>::quiet_NaN())};
  CHECK_THROWS_AS(ChannelRealization(2, nan), DimensionError);
  const std::vector<int> zero{0};
  CHECK_THROWS_AS(generate_channels(2, zero, 1, 0), DimensionError);
  CHECK_THROWS_AS(generate_channels(0, std::vector<int>{1}, 1, 0), DimensionError);
}
