// Copyright 2026 The mimo-bc-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "mimobc/csv.hpp"

#include <array>
#include <charconv>
#include <string>

#include "mimobc/errors.hpp"

namespace mimobc::csv
{

std::string format_double(double value)
{
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc())
  {
    throw IoError("cannot format value");
  }
  return std::string(buf.data(), end);
}

double parse_double(std::string_view text)
{
  double value = 0.0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size())
  {
    throw IoError("malformed number '" + std::string(text) + "'");
  }
  return value;
}

long long parse_int(std::string_view text)
{
  long long value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size())
  {
    throw IoError("malformed integer '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view line, char sep)
{
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true)
  {
    const auto pos = line.find(sep, start);
    if (pos == std::string_view::npos)
    {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

}  // namespace mimobc::csv
