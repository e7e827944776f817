// Copyright 2026 The mimo-bc-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MIMOBC_CSV_HPP
#define MIMOBC_CSV_HPP

#include <string>
#include <string_view>
#include <vector>

namespace mimobc::csv
{

// Shortest round-trip decimal form, '.' separator regardless of locale.
std::string format_double(double value);
double parse_double(std::string_view text);
long long parse_int(std::string_view text);

std::vector<std::string_view> split(std::string_view line, char sep = ',');

}  // namespace mimobc::csv

#endif  // MIMOBC_CSV_HPP
