// Copyright 2026 The mimo-bc-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MIMOBC_ANALYTIC_CURVE_HPP
#define MIMOBC_ANALYTIC_CURVE_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mimobc::analytic
{

enum class CurveKind
{
  pdf,
  cdf,
  bound_upper,
  bound_lower,
  tail,
  scaling
};

std::string to_string(CurveKind kind);

struct CurveParams
{
  int tx = 0;
  int rx = 0;
  int n = 0;
  std::optional<double> delta;
  std::optional<double> users;
  std::optional<double> snr_db;
};

struct AnalyticCurve
{
  CurveKind kind = CurveKind::cdf;
  CurveParams params;
  std::vector<double> grid;
  std::vector<double> values;
};

inline constexpr const char *kCurveCsvHeader = "kind,M,N,n,delta,K,snr_db,x,y";

void write_curves(const std::vector<AnalyticCurve> &curves, std::ostream &out);
void emit_curves(const std::vector<AnalyticCurve> &curves, const std::filesystem::path &path);

std::vector<double> linspace(double first, double last, std::size_t count);

}  // namespace mimobc::analytic

#endif  // MIMOBC_ANALYTIC_CURVE_HPP
